//! Max-times (tropical) linear algebra and a decision engine built on it.
//!
//! * [`algebra`]: scalars, vectors and matrices over `(ℝ₊, max, ×)`, powers,
//!   spectral radius, Kleene star.
//! * [`opt`]: pseudo-quadratic minimization and Hilbert seminorm
//!   maximization/minimization with complete solution sets.
//! * [`geom`]: tropical spans: generator reduction, collinearity, plane
//!   sections.
//! * [`ahp`]: ranking alternatives from pairwise comparison matrices.
//!
//! ```
//! use tropahp_core::algebra::TropMatrix;
//!
//! let a = TropMatrix::from_rows(&[[1.0, 4.0], [0.25, 1.0]]).unwrap();
//! assert_eq!(a.spectral_radius().unwrap(), 1.0);
//! ```

pub mod ahp;
pub mod algebra;
pub mod datasets;
pub mod error;
pub mod geom;
pub mod opt;
pub mod tolerance;

pub use algebra::{TropMatrix, TropVector};
pub use error::{Error, Result};
pub use tolerance::Tolerance;
