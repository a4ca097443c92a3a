//! File formats, command line and HTTP service for the tropical decision
//! engine in [`tropahp_core`].
//!
//! * [`document`]: problem documents with exact `"p/q"` entries.
//! * [`report`]: the solve report and section plots as JSON or text.
//! * [`session`]: one JSON file per editing session.
//! * [`server`]: the HTTP API.
//! * [`cli`]: the `tropahp` command.

pub mod cli;
pub mod document;
pub mod error;
pub mod report;
pub mod server;
pub mod session;

pub use document::{load_problem, Entry, ProblemDocument, SCHEMA_VERSION};
pub use error::{Error, Result};
pub use report::{solve_document, GeometryDocument, ReportDocument, SolveSettings};
pub use session::{Session, SessionStore};
pub use tropahp_core as core;
