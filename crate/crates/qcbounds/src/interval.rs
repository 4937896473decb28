//! Closed real intervals used as certified brackets.
//!
//! Quantities that are only known through two-sided estimates (the distortion
//! function and the Grötzsch ring constant for dimension n >= 3, and every
//! theorem bound built from them) are carried as a `[lo, hi]` pair. Planar
//! quantities are exactly computable and travel as degenerate intervals.

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with `lo <= hi`.
///
/// `hi` may be `+inf` when an upper estimate saturates and carries no
/// information; `lo` is always finite for the quantities in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealInterval {
    lo: f64,
    hi: f64,
}

impl RealInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::domain(format!(
                "invalid interval endpoints [{lo}, {hi}]"
            )));
        }
        Ok(RealInterval { lo, hi })
    }

    /// The degenerate interval `[v, v]`.
    pub fn point(v: f64) -> Self {
        RealInterval { lo: v, hi: v }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Midpoint; meaningful mostly for degenerate or narrow intervals.
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn is_degenerate(&self, tol: f64) -> bool {
        self.width() <= tol
    }

    /// Apply a monotone increasing map to both endpoints.
    pub(crate) fn map_increasing(&self, f: impl Fn(f64) -> f64) -> Self {
        RealInterval {
            lo: f(self.lo),
            hi: f(self.hi),
        }
    }

    /// Apply a monotone decreasing map to both endpoints (which swaps them).
    pub(crate) fn map_decreasing(&self, f: impl Fn(f64) -> f64) -> Self {
        RealInterval {
            lo: f(self.hi),
            hi: f(self.lo),
        }
    }
}

impl std::fmt::Display for RealInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
