//! Scalar backends: exact cyclotomic numbers and approximate complex floats.
//!
//! All matrix and series modules are generic over [`Scalar`].  The exact
//! backend [`CycloScalar`] represents elements of `Q(ζ_L)` with
//! arbitrary-precision rational coefficients in canonical reduced form, so
//! equality of representations is equality in the field.  The approximate
//! backend [`ApproxComplex`] is IEEE `f64` complex arithmetic; comparisons
//! against it always go through an explicit tolerance.

mod cyclo;

pub use cyclo::{ambient_order, cyclotomic_polynomial, euler_phi, CycloScalar, ScalarError};

use num_complex::Complex64;
use std::fmt;

/// Arithmetic interface shared by the exact and approximate backends.
///
/// `add`/`sub`/`mul`/`neg` are total; `inv` fails on zero.  `imag` returns
/// the imaginary part as a *real* element of the same backend and panics on
/// an exact value whose field does not contain `i` (use
/// [`CycloScalar::imag_part`] for the checked variant).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// True when arithmetic is exact and zero tests need no tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_int(v: i64) -> Self;
    /// The rational `p/q`.  Panics if `q == 0`.
    fn from_ratio(p: i64, q: i64) -> Self;
    /// `ζ_order^k = exp(2πik/order)`.  Panics if `order == 0`.
    fn root_of_unity(order: u32, k: i64) -> Self;
    /// `√n` for a natural number `n`.
    fn sqrt_nat(n: u32) -> Self;
    /// `ζ_{2n}^k` represented in the backend's ambient field for matrix
    /// dimension `n` (relevant for the exact backend, where all values of a
    /// dimension-`n` computation live in one field).
    fn half_root(n: u32, k: i64) -> Self {
        Self::root_of_unity(2 * n, k)
    }

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Imaginary part `(z - z̄)/2i` as a real element.
    fn imag(&self) -> Self;
    /// Real part `(z + z̄)/2`.
    fn real(&self) -> Self {
        self.add(&self.conj()).mul(&Self::from_ratio(1, 2))
    }

    fn is_zero(&self) -> bool;
    /// Zero test with an explicit tolerance (ignored by the exact backend).
    fn is_zero_tol(&self, tol: f64) -> bool;
    fn scale_int(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }

    /// Numerical value of the scalar.
    fn embed(&self) -> Complex64;
    /// `|z|` of the numerical embedding, used for report residuals.
    fn abs(&self) -> f64 {
        self.embed().norm()
    }
    /// Tolerance the backend expects verification checks to run at.
    fn default_tol() -> f64;
}

/// Complex floating-point scalar.
///
/// Equality is not derived on purpose: comparisons go through
/// [`Scalar::is_zero_tol`] on a difference.
#[derive(Clone, Copy, Debug)]
pub struct ApproxComplex(pub Complex64);

impl ApproxComplex {
    pub fn new(re: f64, im: f64) -> Self {
        ApproxComplex(Complex64::new(re, im))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bitwise equality; only used by generic code paths that deduplicate
/// identical values, never for verification decisions.
impl PartialEq for ApproxComplex {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Scalar for ApproxComplex {
    const EXACT: bool = false;

    fn zero() -> Self {
        ApproxComplex::new(0.0, 0.0)
    }

    fn one() -> Self {
        ApproxComplex::new(1.0, 0.0)
    }

    fn i() -> Self {
        ApproxComplex::new(0.0, 1.0)
    }

    fn from_int(v: i64) -> Self {
        ApproxComplex::new(v as f64, 0.0)
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        ApproxComplex::new(p as f64 / q as f64, 0.0)
    }

    fn root_of_unity(order: u32, k: i64) -> Self {
        assert!(order != 0, "root of unity of order zero");
        let angle = 2.0 * std::f64::consts::PI * (k.rem_euclid(order as i64) as f64)
            / order as f64;
        ApproxComplex(Complex64::from_polar(1.0, angle))
    }

    fn sqrt_nat(n: u32) -> Self {
        ApproxComplex::new((n as f64).sqrt(), 0.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        ApproxComplex(self.0 + rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        ApproxComplex(self.0 - rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        ApproxComplex(self.0 * rhs.0)
    }

    fn neg(&self) -> Self {
        ApproxComplex(-self.0)
    }

    fn conj(&self) -> Self {
        ApproxComplex(self.0.conj())
    }

    fn inv(&self) -> Option<Self> {
        if self.0.norm() == 0.0 {
            None
        } else {
            Some(ApproxComplex(self.0.inv()))
        }
    }

    fn imag(&self) -> Self {
        ApproxComplex::new(self.0.im, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn is_zero_tol(&self, tol: f64) -> bool {
        self.0.norm() <= tol
    }

    fn embed(&self) -> Complex64 {
        self.0
    }

    fn default_tol() -> f64 {
        1e-10
    }
}

/// `Σ_{j=0}^{order-1} ζ^{j·m}`, the discrete delta used throughout the torus
/// identities: equals `order` when `m ≡ 0` and `0` otherwise.
pub fn root_sum<S: Scalar>(order: u32, m: i64) -> S {
    let mut acc = S::zero();
    for j in 0..order as i64 {
        acc = acc.add(&S::root_of_unity(order, j * m));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_roots_and_tolerance() {
        let z = ApproxComplex::root_of_unity(8, 1);
        let w = z.mul(&z).mul(&z).mul(&z); // ζ_8^4 = -1
        assert!(w.add(&ApproxComplex::one()).is_zero_tol(1e-12));
        assert!(!w.is_zero_tol(0.5));
    }

    #[test]
    fn approx_imag_is_real_part_extraction() {
        let z = ApproxComplex::new(3.0, -2.5);
        let im = z.imag();
        assert_eq!(im.re(), -2.5);
        assert_eq!(im.im(), 0.0);
    }

    #[test]
    fn root_sum_delta() {
        // Σ_j ω^{jm} = N δ(m) for N = 5.
        for m in 0..5 {
            let s: ApproxComplex = root_sum(5, m);
            let expect = if m == 0 { 5.0 } else { 0.0 };
            assert!((s.embed().re - expect).abs() < 1e-12, "m={m}");
            assert!(s.embed().im.abs() < 1e-12);
        }
    }
}
