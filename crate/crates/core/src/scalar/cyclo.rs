//! Exact arithmetic in cyclotomic fields `Q(ζ_L)`.
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(L)-1}` of
//! `Q(ζ_L)` as an integer coefficient vector with a single positive
//! denominator, fully reduced: the content of the numerator vector is coprime
//! to the denominator.  The representation is canonical, so structural
//! equality (at a common order) is equality in the field.
//!
//! Binary operations on elements of different orders lift both to the least
//! common multiple order first, so values such as `ζ_3` and `i` mix freely.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use thiserror::Error;

use super::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("root of unity order must be positive")]
    ZeroOrder,
    #[error("imaginary part needs i in the field: order {0} is not divisible by 4")]
    ImagPartUnavailable(u32),
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

/// Exact division of integer polynomials, `num / den` with `den` monic.
/// Panics if the division is not exact (never happens for cyclotomic data).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() < den.len() {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let qn = rem.len() - den.len();
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for j in 0..=dn {
                rem[k + j] -= &c * &den[j];
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "polynomial division not exact");
    quot
}

/// The `L`-th cyclotomic polynomial as a monic integer coefficient vector
/// (index = power).  Computed by exact division of `x^L - 1` by the
/// cyclotomic polynomials of the proper divisors of `L`.
pub fn cyclotomic_polynomial(l: u32) -> Vec<BigInt> {
    assert!(l >= 1);
    if l == 1 {
        return vec![-BigInt::one(), BigInt::one()]; // x - 1
    }
    let mut num = vec![BigInt::zero(); l as usize + 1];
    num[0] = -BigInt::one();
    num[l as usize] = BigInt::one();
    let mut quot = num;
    for d in divisors(l) {
        if d < l {
            let phi_d = cyclotomic_polynomial(d);
            quot = poly_div_exact(&quot, &phi_d);
        }
    }
    quot
}

/// Shared per-order data: the minimal polynomial and reduction rows
/// `x^k mod Φ_L` for `k < 2L` (enough for products and Galois images).
struct CycloContext {
    phi: usize,
    rows: Vec<Vec<BigInt>>,
}

impl CycloContext {
    fn new(order: u32) -> Self {
        let minpoly = cyclotomic_polynomial(order);
        let phi = minpoly.len() - 1;
        let max_pow = (2 * order as usize).max(2 * phi);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_pow);
        for k in 0..phi {
            let mut row = vec![BigInt::zero(); phi];
            row[k] = BigInt::one();
            rows.push(row);
        }
        for k in phi..max_pow {
            // x^k = x * x^{k-1}, then reduce the overflow term via
            // x^phi = -(minpoly without leading coefficient).
            let prev = &rows[k - 1];
            let mut row = vec![BigInt::zero(); phi + 1];
            for (j, c) in prev.iter().enumerate() {
                row[j + 1] = c.clone();
            }
            let lead = row[phi].clone();
            if !lead.is_zero() {
                for j in 0..phi {
                    row[j] -= &lead * &minpoly[j];
                }
            }
            row.truncate(phi);
            rows.push(row);
        }
        CycloContext { phi, rows }
    }
}

fn context(order: u32) -> Arc<CycloContext> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloContext::new(order)))
        .clone()
}

/// Order of the ambient cyclotomic field used for all exact computations at
/// matrix dimension `n`: contains `ζ_{2n}` (half-integer powers of `ω`),
/// `i`, and `√n` (basis normalisations), with `√2` included for even `n`.
pub fn ambient_order(n: u32) -> u32 {
    assert!(n >= 1);
    if n % 4 == 0 {
        2 * n
    } else {
        4 * n
    }
}

/// An exact element of `Q(ζ_order)`.
#[derive(Clone)]
pub struct CycloScalar {
    order: u32,
    /// Numerator coefficients in the power basis, length `φ(order)`.
    num: Vec<BigInt>,
    /// Positive denominator, coprime to the content of `num`.
    den: BigInt,
}

impl CycloScalar {
    fn normalized(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if num.iter().all(|c| c.is_zero()) {
            return CycloScalar { order, num, den: BigInt::one() };
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = &den / &g;
        }
        CycloScalar { order, num, den }
    }

    /// The field order `L` of the representation.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the power basis as exact rationals (length `φ(L)`).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn zero_at(order: u32) -> Self {
        let ctx = context(order);
        CycloScalar { order, num: vec![BigInt::zero(); ctx.phi], den: BigInt::one() }
    }

    pub fn from_int_at(order: u32, v: i64) -> Self {
        let ctx = context(order);
        let mut num = vec![BigInt::zero(); ctx.phi];
        num[0] = BigInt::from(v);
        CycloScalar { order, num, den: BigInt::one() }
    }

    pub fn from_ratio_at(order: u32, p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        let ctx = context(order);
        let mut num = vec![BigInt::zero(); ctx.phi];
        num[0] = BigInt::from(p);
        CycloScalar::normalized(order, num, BigInt::from(q))
    }

    /// `ζ_order^k`, rejecting order zero.
    pub fn try_root_of_unity(order: u32, k: i64) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        let ctx = context(order);
        let k = k.rem_euclid(order as i64) as usize;
        let row = ctx.rows[k].clone();
        Ok(CycloScalar::normalized(order, row, BigInt::one()))
    }

    /// Lift to a field of order `target` (requires `order | target`).
    pub fn to_order(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target % self.order == 0,
            "cannot lift Q(ζ_{}) into Q(ζ_{})",
            self.order,
            target
        );
        let ratio = (target / self.order) as usize;
        let ctx = context(target);
        let mut num = vec![BigInt::zero(); ctx.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &ctx.rows[j * ratio];
            for (t, r) in num.iter_mut().zip(row.iter()) {
                *t += c * r;
            }
        }
        CycloScalar::normalized(target, num, self.den.clone())
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let l = (self.order as u64).lcm(&(other.order as u64)) as u32;
            (self.to_order(l), other.to_order(l))
        }
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^t` (`t` coprime to the order).
    pub fn galois(&self, t: i64) -> Self {
        let l = self.order as i64;
        let t = t.rem_euclid(l);
        assert!((t as u64).gcd(&(l as u64)) == 1, "galois exponent not coprime to order");
        let ctx = context(self.order);
        let mut num = vec![BigInt::zero(); ctx.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((j as i64 * t) % l) as usize;
            let row = &ctx.rows[e];
            for (tgt, r) in num.iter_mut().zip(row.iter()) {
                *tgt += c * r;
            }
        }
        CycloScalar::normalized(self.order, num, self.den.clone())
    }

    /// `(z - z̄)/2i`, the imaginary part as a real field element.  Requires
    /// the field to contain `i`, i.e. `4 | order`.
    pub fn imag_part(&self) -> Result<Self, ScalarError> {
        if self.order % 4 != 0 {
            return Err(ScalarError::ImagPartUnavailable(self.order));
        }
        let diff = Scalar::sub(self, &self.conj());
        // 1/(2i) = -i/2 = -ζ^{L/4}/2.
        let l = self.order;
        let minus_i_half = Scalar::mul(
            &CycloScalar::try_root_of_unity(l, (l / 4) as i64).unwrap(),
            &CycloScalar::from_ratio_at(l, -1, 2),
        );
        Ok(Scalar::mul(&diff, &minus_i_half))
    }

    /// True when the element is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// True when the element is a rational number.
    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// `√p` for a prime `p`, via quadratic Gauss sums.
    fn sqrt_prime(p: u32) -> Self {
        if p == 2 {
            // ζ_8 + ζ_8^-1 = 2 cos(π/4) = √2.
            let z = CycloScalar::try_root_of_unity(8, 1).unwrap();
            return Scalar::add(&z, &CycloScalar::try_root_of_unity(8, -1).unwrap());
        }
        // g = Σ_a ζ_p^{a²} equals √p (p ≡ 1 mod 4) or i√p (p ≡ 3 mod 4).
        let mut g = CycloScalar::zero_at(p);
        for a in 0..p as i64 {
            g = Scalar::add(&g, &CycloScalar::try_root_of_unity(p, a * a).unwrap());
        }
        if p % 4 == 1 {
            g
        } else {
            let g = g.to_order(4 * p);
            let minus_i = CycloScalar::try_root_of_unity(4, -1).unwrap().to_order(4 * p);
            Scalar::mul(&minus_i, &g)
        }
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.num == other.num && self.den == other.den;
        }
        let (a, b) = self.aligned(other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar({})", self)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Scalar::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if self.den.is_one() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}/{}", c, self.den)?;
            }
            if j > 0 {
                write!(f, "·ζ{}^{}", self.order, j)?;
            }
        }
        Ok(())
    }
}

impl Scalar for CycloScalar {
    const EXACT: bool = true;

    fn zero() -> Self {
        CycloScalar::zero_at(4)
    }

    fn one() -> Self {
        CycloScalar::from_int_at(4, 1)
    }

    fn i() -> Self {
        CycloScalar::try_root_of_unity(4, 1).unwrap()
    }

    fn from_int(v: i64) -> Self {
        CycloScalar::from_int_at(4, v)
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        CycloScalar::from_ratio_at(4, p, q)
    }

    fn root_of_unity(order: u32, k: i64) -> Self {
        CycloScalar::try_root_of_unity(order, k).expect("positive order")
    }

    fn sqrt_nat(n: u32) -> Self {
        assert!(n >= 1);
        let mut rational = BigInt::one();
        let mut irrational = Scalar::one();
        let mut m = n;
        let mut p = 2u32;
        while p * p <= m {
            if m % p == 0 {
                let mut e = 0u32;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                rational *= BigInt::from(p).pow(e / 2);
                if e % 2 == 1 {
                    irrational = Scalar::mul(&irrational, &CycloScalar::sqrt_prime(p));
                }
            }
            p += 1;
        }
        if m > 1 {
            irrational = Scalar::mul(&irrational, &CycloScalar::sqrt_prime(m));
        }
        let scale = CycloScalar::normalized(
            irrational.order,
            {
                let mut v = vec![BigInt::zero(); context(irrational.order).phi];
                v[0] = rational;
                v
            },
            BigInt::one(),
        );
        Scalar::mul(&scale, &irrational)
    }

    fn half_root(n: u32, k: i64) -> Self {
        let l = ambient_order(n);
        let step = (l / (2 * n)) as i64;
        CycloScalar::try_root_of_unity(l, k.rem_euclid(2 * n as i64) * step).unwrap()
    }

    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let g = a.den.gcd(&b.den);
        let ma = &b.den / &g;
        let mb = &a.den / &g;
        let num: Vec<BigInt> = a
            .num
            .iter()
            .zip(b.num.iter())
            .map(|(x, y)| x * &ma + y * &mb)
            .collect();
        let den = &a.den * &ma;
        CycloScalar::normalized(a.order, num, den)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Scalar::add(self, &rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let ctx = context(a.order);
        let phi = ctx.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        let mut num = vec![BigInt::zero(); phi];
        for (k, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                num[k] += c;
            } else {
                let row = &ctx.rows[k];
                for (t, r) in num.iter_mut().zip(row.iter()) {
                    *t += &c * r;
                }
            }
        }
        CycloScalar::normalized(a.order, num, &a.den * &b.den)
    }

    fn neg(&self) -> Self {
        CycloScalar {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order as i64 - 1)
    }

    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        // Extended Euclid over Q[x]: u·a + v·Φ = 1, so u = a^{-1} mod Φ.
        let minpoly = cyclotomic_polynomial(self.order);
        let to_rat = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from(c.clone())).collect()
        };
        let mut r0: Vec<BigRational> = to_rat(&minpoly);
        let mut r1: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![BigRational::zero()];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s2 = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant gcd; divide through.
        assert!(r0.len() == 1 && !r0[0].is_zero(), "element not invertible mod Φ");
        let c = r0[0].clone();
        let phi = context(self.order).phi;
        let mut den = BigInt::one();
        let coeffs: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
        for x in &coeffs {
            den = den.lcm(x.denom());
        }
        let mut num = vec![BigInt::zero(); phi];
        for (j, x) in coeffs.iter().enumerate() {
            num[j] = x.numer() * (&den / x.denom());
        }
        Some(CycloScalar::normalized(self.order, num, den))
    }

    fn imag(&self) -> Self {
        self.imag_part().expect("field does not contain i; use imag_part for the checked form")
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    fn is_zero_tol(&self, _tol: f64) -> bool {
        Scalar::is_zero(self)
    }

    fn embed(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let step = 2.0 * std::f64::consts::PI / self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64().unwrap_or(f64::INFINITY);
            acc += Complex64::from_polar(1.0, step * j as f64) * cf;
        }
        acc / den
    }

    fn default_tol() -> f64 {
        0.0
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    let mut out = out;
    trim(&mut out);
    out
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn rat_poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    assert!(!lead.is_zero());
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lead;
        if !c.is_zero() {
            for j in 0..=db {
                let t = &c * &b[j];
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(order: u32, k: i64) -> CycloScalar {
        CycloScalar::try_root_of_unity(order, k).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|c| c.to_i64().unwrap()).collect() };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_matches_degree() {
        for l in 1..=30 {
            assert_eq!(euler_phi(l) as usize, cyclotomic_polynomial(l).len() - 1, "L={l}");
        }
    }

    #[test]
    fn fourth_root_is_i() {
        let i = rt(4, 1);
        let m1 = Scalar::mul(&i, &i);
        assert_eq!(m1, CycloScalar::from_int(-1));
        let e = Scalar::embed(&i);
        assert!((e.re).abs() < 1e-15 && (e.im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zeta6_is_half_power_of_omega() {
        // ζ_6 squared is ζ_3 = ω for N = 3.
        let z6 = rt(6, 1);
        assert_eq!(Scalar::mul(&z6, &z6), rt(3, 1));
        assert_eq!(CycloScalar::half_root(3, 1), rt(6, 1).to_order(12));
    }

    #[test]
    fn root_sum_is_discrete_delta() {
        for m in 0..5i64 {
            let mut acc = CycloScalar::zero_at(5);
            for j in 0..5i64 {
                acc = Scalar::add(&acc, &rt(5, j * m));
            }
            let expect = CycloScalar::from_int_at(5, if m == 0 { 5 } else { 0 });
            assert_eq!(acc, expect, "m={m}");
        }
    }

    #[test]
    fn one_plus_omega_plus_omega2_is_zero() {
        let w = rt(3, 1);
        let sum = Scalar::add(&Scalar::add(&CycloScalar::from_int_at(3, 1), &w), &Scalar::mul(&w, &w));
        assert!(Scalar::is_zero(&sum));
    }

    #[test]
    fn embed_values() {
        let e3 = Scalar::embed(&rt(3, 1));
        assert!((e3.re + 0.5).abs() < 1e-14);
        assert!((e3.im - 0.8660254037844386).abs() < 1e-14);
    }

    #[test]
    fn imag_part_examples() {
        // Im(i) = 1.
        let i = rt(4, 1);
        assert_eq!(i.imag_part().unwrap(), CycloScalar::from_int(1));
        // Im(3/2) = 0 for the rational 3/2.
        let r = CycloScalar::from_ratio(3, 2);
        assert!(Scalar::is_zero(&r.imag_part().unwrap()));
        // Im(ζ_8) = sin(π/4) = √2/2, exactly.
        let z8 = rt(8, 1);
        let im = z8.imag_part().unwrap();
        let expect = Scalar::mul(&CycloScalar::sqrt_nat(2), &CycloScalar::from_ratio(1, 2));
        assert_eq!(im, expect);
        assert!((Scalar::embed(&im).re - 0.7071067811865476).abs() < 1e-14);
        assert!(im.is_real());
    }

    #[test]
    fn imag_part_rejects_orders_without_i() {
        let w = rt(3, 1);
        assert_eq!(w.imag_part(), Err(ScalarError::ImagPartUnavailable(3)));
    }

    #[test]
    fn root_of_unity_rejects_zero_order() {
        assert_eq!(CycloScalar::try_root_of_unity(0, 1), Err(ScalarError::ZeroOrder));
    }

    #[test]
    fn multiplicative_order_of_roots() {
        // ζ_L^k has order L / gcd(L, k).
        for (l, k, expect) in [(12u32, 1i64, 12u32), (12, 4, 3), (12, 8, 3), (20, 5, 4), (8, 6, 4)] {
            let z = rt(l, k);
            let mut p = CycloScalar::from_int_at(l, 1);
            let mut ord = 0u32;
            for step in 1..=l {
                p = Scalar::mul(&p, &z);
                if p == CycloScalar::from_int_at(l, 1) {
                    ord = step;
                    break;
                }
            }
            assert_eq!(ord, expect, "L={l} k={k}");
        }
    }

    #[test]
    fn sqrt_nat_squares_back() {
        for n in 1..=12u32 {
            let s = CycloScalar::sqrt_nat(n);
            assert_eq!(Scalar::mul(&s, &s), CycloScalar::from_int(n as i64).to_order(s.order()), "n={n}");
            assert!((Scalar::embed(&s).re - (n as f64).sqrt()).abs() < 1e-12);
            assert!(s.is_real());
        }
    }

    #[test]
    fn conj_is_involution_and_fixes_reals() {
        let z = Scalar::add(&rt(12, 5), &CycloScalar::from_ratio(7, 3));
        assert_eq!(z.conj().conj(), z);
        assert!(CycloScalar::sqrt_nat(3).is_real());
    }

    #[test]
    fn inverse_of_nonzero() {
        let z = Scalar::add(&rt(12, 1), &CycloScalar::from_ratio(2, 5));
        let inv = Scalar::inv(&z).unwrap();
        let prod = Scalar::mul(&z, &inv);
        assert_eq!(prod, CycloScalar::from_int(1).to_order(prod.order()));
        assert!(Scalar::inv(&CycloScalar::zero()).is_none());
    }

    #[test]
    fn mixed_order_arithmetic_lifts() {
        // ζ_3 + i lives in Q(ζ_12).
        let z = Scalar::add(&rt(3, 1), &rt(4, 1));
        assert_eq!(z.order(), 12);
        let e = Scalar::embed(&z);
        assert!((e.re + 0.5).abs() < 1e-14);
        assert!((e.im - (1.0 + 0.8660254037844386)).abs() < 1e-14);
    }

    #[test]
    fn ambient_orders() {
        assert_eq!(ambient_order(2), 8);
        assert_eq!(ambient_order(3), 12);
        assert_eq!(ambient_order(4), 8);
        assert_eq!(ambient_order(5), 20);
        assert_eq!(ambient_order(6), 24);
        assert_eq!(ambient_order(7), 28);
        assert_eq!(ambient_order(8), 16);
    }

    #[test]
    fn ambient_field_contains_needed_elements() {
        for n in 2..=8u32 {
            let l = ambient_order(n);
            assert_eq!(l % 4, 0, "i must be available, n={n}");
            assert_eq!(l % (2 * n), 0, "ζ_2N must be available, n={n}");
            // √n (and √(2n) for even n) must lift into the ambient field.
            let s = CycloScalar::sqrt_nat(n);
            assert_eq!(l % s.order(), 0, "√{n} must lift into ζ_{l}");
            if n % 2 == 0 {
                let s2 = CycloScalar::sqrt_nat(2 * n);
                assert_eq!(l % s2.order(), 0, "√{} must lift into ζ_{l}", 2 * n);
            }
        }
    }
}
