//! Scalar operations of the max-times semiring over the nonnegative reals.
//!
//! Scalars are plain `f64` values: `0.0` is the semiring zero, `1.0` the unit,
//! `⊕` is `max` and `⊗` is ordinary multiplication.

/// Semiring zero.
pub const ZERO: f64 = 0.0;
/// Semiring unit.
pub const ONE: f64 = 1.0;

/// Tropical addition, `a ⊕ b = max(a, b)`.
#[inline]
pub fn oplus(a: f64, b: f64) -> f64 {
    a.max(b)
}

/// Tropical multiplication, `a ⊗ b = a · b`.
#[inline]
pub fn otimes(a: f64, b: f64) -> f64 {
    a * b
}

/// Multiplicative inverse with the convention `0⁻ = 0`.
#[inline]
pub fn conj(a: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        1.0 / a
    }
}

pub(crate) fn is_valid(a: f64) -> bool {
    a.is_finite() && a >= 0.0
}
