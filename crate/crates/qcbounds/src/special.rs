//! Planar special functions: the complete elliptic integral of the first
//! kind, the Grötzsch modulus function μ, and its inverse.
//!
//! μ(r) = (π/2)·K(r′)/K(r) with r′ = √(1−r²) is a decreasing homeomorphism of
//! (0,1) onto (0,∞); it is the modulus of the plane Grötzsch ring and the
//! building block of every exactly computable planar quantity in this crate.
//!
//! K(r) is evaluated through the arithmetic–geometric mean,
//! K(r) = π/(2·agm(1, r′)), which converges quadratically; the integral
//! definition is kept as a quadrature oracle in the tests. The inverse of μ
//! is computed by Newton iteration with a guaranteed bisection bracket, using
//! the classical derivative μ′(r) = −π²/(4 r (1−r²) K(r)²).

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Default absolute tolerance for inversions of μ.
pub const DEFAULT_INVERSION_TOL: f64 = 1e-12;

/// Below this the asymptotic μ(r) ≈ log(4/r) is exact to double precision;
/// above 1 minus this, μ is routed through the reciprocal identity
/// μ(r)·μ(r′) = π²/4. Both switches avoid cancellation in the AGM ratio.
const ENDPOINT_GUARD: f64 = 1e-8;

/// Modulus argument r ∈ [0, 1] of the planar special functions.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitRadius(f64);

impl UnitRadius {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) || value.is_nan() {
            return Err(Error::domain(format!(
                "radius must lie in [0, 1], got {value}"
            )));
        }
        Ok(UnitRadius(value))
    }

    /// For values already known to lie in [0, 1] (outputs of the kernel).
    pub(crate) fn new_unchecked(value: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "radius out of range: {value}");
        UnitRadius(value)
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// The complementary modulus r′ = √(1−r²), computed without cancellation.
    pub fn complement(&self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

/// A value of μ, i.e. a positive ring modulus.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ModulusValue(f64);

impl ModulusValue {
    pub fn new(value: f64) -> Result<Self> {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::domain(format!(
                "modulus value must be positive and finite, got {value}"
            )));
        }
        Ok(ModulusValue(value))
    }

    pub(crate) fn new_unchecked(value: f64) -> Self {
        debug_assert!(value > 0.0);
        ModulusValue(value)
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Arithmetic–geometric mean of two positive numbers.
///
/// Symmetric and homogeneous of degree one; agm(x, x) = x.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "agm requires positive finite arguments, got ({a}, {b})"
        )));
    }
    Ok(agm_iter(a, b))
}

fn agm_iter(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a.max(b) {
            break;
        }
        let am = 0.5 * (a + b);
        let gm = (a * b).sqrt();
        a = am;
        b = gm;
    }
    0.5 * (a + b)
}

/// Legendre's complete elliptic integral of the first kind, modulus
/// convention: K(r) = ∫₀¹ dx/√((1−x²)(1−r²x²)).
///
/// Strictly increasing with K(0) = π/2 and a logarithmic divergence at r = 1.
pub fn ellipk(r: UnitRadius) -> Result<f64> {
    if r.value() >= 1.0 {
        return Err(Error::Divergent(
            "complete elliptic integral diverges at r = 1".into(),
        ));
    }
    Ok(PI / (2.0 * agm_iter(1.0, r.complement())))
}

/// The Grötzsch modulus μ(r) = (π/2)·K(r′)/K(r) on (0, 1).
///
/// Strictly decreasing; satisfies μ(r)·μ(r′) = π²/4 and μ(r) < log(4/r).
pub fn mu(r: UnitRadius) -> Result<ModulusValue> {
    let rv = r.value();
    if rv <= 0.0 || rv >= 1.0 {
        return Err(Error::domain(format!(
            "mu is defined on the open interval (0, 1), got {rv}"
        )));
    }
    Ok(ModulusValue::new_unchecked(mu_raw(rv)))
}

pub(crate) fn mu_raw(r: f64) -> f64 {
    if r < ENDPOINT_GUARD {
        // Relative error O(r²·log(1/r)), below one ulp here.
        return (4.0 / r).ln();
    }
    if r > 1.0 - ENDPOINT_GUARD {
        let rp = ((1.0 - r) * (1.0 + r)).sqrt();
        return PI * PI / (4.0 * mu_raw(rp));
    }
    let rp = ((1.0 - r) * (1.0 + r)).sqrt();
    FRAC_PI_2 * agm_iter(1.0, rp) / agm_iter(1.0, r)
}

/// Inverse of μ at the default tolerance.
pub fn mu_inv(y: ModulusValue) -> UnitRadius {
    mu_inv_with(y, DEFAULT_INVERSION_TOL)
}

/// Inverse of μ: the unique r ∈ (0,1) with μ(r) = y, to absolute residual
/// `tol` in μ.
pub fn mu_inv_with(y: ModulusValue, tol: f64) -> UnitRadius {
    UnitRadius::new_unchecked(mu_inv_pair(y.value(), tol).0)
}

/// Inverse of μ together with an accurate complement `1 − r`.
///
/// When y < π/2 the result is close to 1 and `1 − r` would lose most of its
/// digits to cancellation; the pair is computed through the reciprocal
/// identity so the complement keeps full relative accuracy. Downstream
/// complement-hungry formulas (the distortion bounds that divide by 1 − φ)
/// rely on this.
pub(crate) fn mu_inv_pair(y: f64, tol: f64) -> (f64, f64) {
    debug_assert!(y > 0.0, "mu_inv needs a positive argument");
    if y >= (4.0 / ENDPOINT_GUARD).ln() {
        let r = 4.0 * (-y).exp();
        return (r, 1.0 - r);
    }
    if y < FRAC_PI_2 {
        // μ(r′) = π²/(4y) > π/2, so the recursive call takes the direct branch.
        let (rp, _) = mu_inv_pair(PI * PI / (4.0 * y), tol);
        let r = ((1.0 - rp) * (1.0 + rp)).sqrt();
        let complement = rp * rp / (1.0 + r);
        return (r, complement);
    }

    // Direct branch: y ∈ [π/2, log(4/guard)) puts r in (guard, 1/√2].
    let mut lo = 0.25 * ENDPOINT_GUARD;
    let mut hi = 0.7072;
    let mut r = (4.0 * (-y).exp()).clamp(lo, hi);
    for _ in 0..128 {
        let rp2 = (1.0 - r) * (1.0 + r);
        let agm_rp = agm_iter(1.0, rp2.sqrt());
        let agm_r = agm_iter(1.0, r);
        let mu_v = FRAC_PI_2 * agm_rp / agm_r;
        let diff = mu_v - y;
        if diff.abs() <= tol {
            break;
        }
        if diff > 0.0 {
            lo = r; // μ too large => r left of the root
        } else {
            hi = r;
        }
        let k = PI / (2.0 * agm_rp);
        let dmu = -PI * PI / (4.0 * r * rp2 * k * k);
        let newton = r - diff / dmu;
        r = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    (r, 1.0 - r)
}
