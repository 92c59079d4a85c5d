//! The torus algebra at arbitrary real deformation parameter: Weyl-basis
//! product, trace and derivations, the K-theory ordering of the label
//! lattice, the cone bases, and the θ-dependent structure constants.
//!
//! Elements are finitely supported combinations of the Weyl basis `ê_m`
//! with `ê_k ê_m = ω^{½ k∧m} ê_{k+m}`, `ω = e^{2πiθ}`.  The deformation
//! parameter is kept exact when supplied as a fraction so that the cone
//! predicate `m₁ + m₂θ > 0` can report ties `m₁ + m₂θ = 0` exactly; ties
//! are excluded from basis labels (the cone bases presume irrational θ).

use crate::bialgebra::{BasisLabel, Family, StructureConstants, VerificationReport};
use crate::scalar::ApproxComplex;
use num_complex::Complex64;
use num_integer::Integer;
use std::collections::HashMap;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use thiserror::Error;

pub type Mode = (i64, i64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("label {0} lies outside the positive cone")]
    OutsideCone(String),
    #[error("label {0} sits on the tie line m1 + m2·θ = 0")]
    TieLabel(String),
    #[error("zero denominator in rational theta")]
    ZeroDenominator,
}

/// The deformation parameter: an exact fraction or a float standing in for
/// an irrational value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Theta {
    Rational { num: i64, den: i64 },
    Real(f64),
}

/// Sign of `m₁ + m₂θ`; `Tie` can only occur for rational θ (or the float
/// value landing exactly on zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeSign {
    Positive,
    Tie,
    Negative,
}

impl Theta {
    pub fn rational(num: i64, den: i64) -> Result<Self, NcError> {
        if den == 0 {
            return Err(NcError::ZeroDenominator);
        }
        let (mut num, mut den) = (num, den);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den).max(1);
        Ok(Theta::Rational { num: num / g, den: den / g })
    }

    pub fn value(&self) -> f64 {
        match *self {
            Theta::Rational { num, den } => num as f64 / den as f64,
            Theta::Real(t) => t,
        }
    }

    /// `e^{iπθ k}`, the half-step Weyl phase.
    fn half_phase(&self, k: i64) -> Complex64 {
        match *self {
            Theta::Rational { num, den } => {
                // reduce the angle exactly modulo 2π before going to floats
                let twice = (num as i128 * k as i128).rem_euclid(2 * den as i128);
                Complex64::from_polar(1.0, PI * twice as f64 / den as f64)
            }
            Theta::Real(t) => Complex64::from_polar(1.0, PI * t * k as f64),
        }
    }

    /// `sin(πθ k)`, the structure-constant kernel `s`.
    pub fn sine(&self, wedge: i64) -> f64 {
        self.half_phase(wedge).im
    }

    /// Exact sign of `m₁ + m₂θ`.
    pub fn cone_sign(&self, m: Mode) -> ConeSign {
        match *self {
            Theta::Rational { num, den } => {
                let v = m.0 as i128 * den as i128 + m.1 as i128 * num as i128;
                match v.cmp(&0) {
                    std::cmp::Ordering::Greater => ConeSign::Positive,
                    std::cmp::Ordering::Equal => ConeSign::Tie,
                    std::cmp::Ordering::Less => ConeSign::Negative,
                }
            }
            Theta::Real(t) => {
                let v = m.0 as f64 + m.1 as f64 * t;
                if v > 0.0 {
                    ConeSign::Positive
                } else if v < 0.0 {
                    ConeSign::Negative
                } else {
                    ConeSign::Tie
                }
            }
        }
    }

    /// The K-order comparison `m > n ⟺ m₁ + m₂θ > n₁ + n₂θ`.
    fn order(&self, m: Mode, n: Mode) -> ConeSign {
        self.cone_sign((m.0 - n.0, m.1 - n.1))
    }
}

/// Cone positivity predicate of the label lattice.
pub fn k_positive(theta: Theta, m: Mode) -> ConeSign {
    theta.cone_sign(m)
}

/// Lexicographic positivity, the θ → 0 limit of the cone order.
pub fn lex_positive(m: Mode) -> bool {
    m.0 > 0 || (m.0 == 0 && m.1 > 0)
}

/// Classification of every lattice point in the window, for the ordering
/// export.
pub fn order_classification(theta: Theta, window: i64) -> Vec<(i64, i64, ConeSign)> {
    let mut out = Vec::new();
    for m1 in -window..=window {
        for m2 in -window..=window {
            out.push((m1, m2, theta.cone_sign((m1, m2))));
        }
    }
    out
}

/// A finitely supported element `Σ a_m ê_m` at a fixed θ.
#[derive(Clone, Debug)]
pub struct TorusElement {
    theta: Theta,
    coeffs: BTreeMap<Mode, Complex64>,
}

impl TorusElement {
    pub fn zero(theta: Theta) -> Self {
        TorusElement { theta, coeffs: BTreeMap::new() }
    }

    /// The Weyl generator `ê_m`.
    pub fn weyl(theta: Theta, m: Mode) -> Self {
        let mut el = Self::zero(theta);
        el.push(m, Complex64::new(1.0, 0.0));
        el
    }

    pub fn one(theta: Theta) -> Self {
        Self::weyl(theta, (0, 0))
    }

    pub fn theta(&self) -> Theta {
        self.theta
    }

    pub fn push(&mut self, m: Mode, c: Complex64) {
        if c.norm() == 0.0 {
            return;
        }
        let slot = self.coeffs.entry(m).or_insert(Complex64::new(0.0, 0.0));
        *slot += c;
        if slot.norm() == 0.0 {
            self.coeffs.remove(&m);
        }
    }

    pub fn coeff(&self, m: Mode) -> Complex64 {
        self.coeffs.get(&m).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn support(&self) -> impl Iterator<Item = (&Mode, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.theta, rhs.theta, "theta mismatch");
        let mut out = self.clone();
        for (&m, c) in rhs.support() {
            out.push(m, *c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TorusElement {
            theta: self.theta,
            coeffs: self.coeffs.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut out = Self::zero(self.theta);
        for (&m, c) in self.support() {
            out.push(m, c * k);
        }
        out
    }

    /// The involution: `(Σ a_m ê_m)* = Σ conj(a_m) ê_{-m}`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.theta);
        for (&(a, b), c) in self.support() {
            out.push((-a, -b), c.conj());
        }
        out
    }

    /// Weyl product `ê_k ê_m = ω^{½ k∧m} ê_{k+m}` extended bilinearly.
    /// Panics when the factors carry different θ.
    pub fn weyl_product(&self, rhs: &Self) -> Self {
        assert_eq!(self.theta, rhs.theta, "theta mismatch");
        let mut out = Self::zero(self.theta);
        for (&(k1, k2), ck) in self.support() {
            for (&(m1, m2), cm) in rhs.support() {
                let wedge = k1 * m2 - k2 * m1;
                let phase = self.theta.half_phase(wedge);
                out.push((k1 + m1, k2 + m2), ck * cm * phase);
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.weyl_product(rhs).sub(&rhs.weyl_product(self))
    }

    /// The canonical trace `τ(Σ a_m ê_m) = a_0`.
    pub fn trace(&self) -> Complex64 {
        self.coeff((0, 0))
    }

    /// `⟨a, b⟩ = Im τ(ab) = Im Σ a_m b_{-m}`.
    pub fn pairing(&self, rhs: &Self) -> f64 {
        assert_eq!(self.theta, rhs.theta, "theta mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(a, b), c) in self.support() {
            acc += c * rhs.coeff((-a, -b));
        }
        acc.im
    }

    /// The two commuting derivations: `∂_j` scales the coefficient at `m`
    /// by `2πi m_j`.
    pub fn derivation(&self, j: u8) -> Self {
        assert!(j == 1 || j == 2, "derivation index is 1 or 2");
        let mut out = Self::zero(self.theta);
        for (&m, c) in self.support() {
            let mj = if j == 1 { m.0 } else { m.1 };
            out.push(m, c * Complex64::new(0.0, 2.0 * PI * mj as f64));
        }
        out
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coeffs.values().all(|c| c.norm() <= tol)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Anti-hermitian membership `a* = -a`.
    pub fn is_anti_hermitian(&self, tol: f64) -> bool {
        self.star().add(self).is_zero_tol(tol)
    }

    /// Membership in the dual subalgebra: support in the closed cone with
    /// a real coefficient at zero.
    pub fn in_dual_span(&self, theta: Theta, tol: f64) -> bool {
        self.support().all(|(&m, c)| {
            if m == (0, 0) {
                c.im.abs() <= tol
            } else {
                theta.cone_sign(m) == ConeSign::Positive
            }
        })
    }
}

/// Cone-labeled basis elements:
/// `U_0 = i`, `U_m = (i/2)(ê_m + ê_m†)`, `Ũ_m = -(1/2)(ê_m - ê_m†)`,
/// `T^0 = 1`, `T^m = 2 ê_m`, `T̃^m = 2i ê_m`, all for `m₁ + m₂θ > 0`.
pub fn nc_basis(theta: Theta, family: Family, m: Mode) -> Result<TorusElement, NcError> {
    let label = || BasisLabel::indexed(family, m.0, m.1).to_string();
    if m == (0, 0) {
        return match family {
            Family::U => Ok(TorusElement::one(theta).scale(Complex64::new(0.0, 1.0))),
            Family::T => Ok(TorusElement::one(theta)),
            _ => Err(NcError::OutsideCone(label())),
        };
    }
    match theta.cone_sign(m) {
        ConeSign::Positive => {}
        ConeSign::Tie => return Err(NcError::TieLabel(label())),
        ConeSign::Negative => return Err(NcError::OutsideCone(label())),
    }
    let e = TorusElement::weyl(theta, m);
    let estar = e.star();
    let half = Complex64::new(0.5, 0.0);
    let i = Complex64::new(0.0, 1.0);
    Ok(match family {
        Family::U => e.add(&estar).scale(half * i),
        Family::UTilde => e.sub(&estar).scale(-half),
        Family::T => e.scale(Complex64::new(2.0, 0.0)),
        Family::TTilde => e.scale(2.0 * i),
        Family::H | Family::HTilde => return Err(NcError::OutsideCone(label())),
    })
}

/// Window labels: the zero label plus every cone-positive mode with
/// `|m_i| ≤ w`, in deterministic order; tie modes are returned separately.
pub fn cone_labels(theta: Theta, w: i64) -> (Vec<BasisLabel>, Vec<BasisLabel>, Vec<Mode>) {
    let mut modes = vec![(0, 0)];
    let mut ties = Vec::new();
    for m1 in -w..=w {
        for m2 in -w..=w {
            if (m1, m2) == (0, 0) {
                continue;
            }
            match theta.cone_sign((m1, m2)) {
                ConeSign::Positive => modes.push((m1, m2)),
                ConeSign::Tie => ties.push((m1, m2)),
                ConeSign::Negative => {}
            }
        }
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &m in &modes {
        a.push(BasisLabel::indexed(Family::U, m.0, m.1));
        b.push(BasisLabel::indexed(Family::T, m.0, m.1));
    }
    for &m in &modes[1..] {
        a.push(BasisLabel::indexed(Family::UTilde, m.0, m.1));
        b.push(BasisLabel::indexed(Family::TTilde, m.0, m.1));
    }
    (a, b, ties)
}

fn basis_of(theta: Theta, label: &BasisLabel) -> TorusElement {
    let BasisLabel::Indexed { family, index } = label else { panic!("indexed labels only") };
    nc_basis(theta, *family, *index).expect("window labels are cone labels")
}

struct TableCtx {
    theta: Theta,
}

impl TableCtx {
    /// Closed-form bracket of two A-side labels, `None` when the order
    /// comparison ties (only possible for rational θ).
    fn a_bracket(&self, fm: Family, m: Mode, fn_: Family, n: Mode) -> Option<TorusElement> {
        let th = self.theta;
        let zero = TorusElement::zero(th);
        if m == (0, 0) || n == (0, 0) {
            return Some(zero);
        }
        let s = Complex64::new(th.sine(m.0 * n.1 - m.1 * n.0), 0.0);
        let sum = (m.0 + n.0, m.1 + n.1);
        if m == n {
            // Same index: only the cross-family bracket could contribute,
            // and its kernel s(m,m) vanishes.
            return Some(zero);
        }
        let (diff, diff_flip) = match th.order(m, n) {
            ConeSign::Positive => ((m.0 - n.0, m.1 - n.1), false),
            ConeSign::Negative => ((n.0 - m.0, n.1 - m.1), true),
            ConeSign::Tie => return None,
        };
        let u = |idx: Mode| nc_basis(th, Family::U, idx).unwrap();
        let ut = |idx: Mode| nc_basis(th, Family::UTilde, idx).unwrap();
        Some(match (fm, fn_) {
            (Family::U, Family::U) => {
                // [U_m, U_n] = -s U_{m+n} + s U_{±(m-n)}
                u(sum).scale(-s).add(&u(diff).scale(s))
            }
            (Family::U, Family::UTilde) => {
                // [U_m, Ũ_n] = -s Ũ_{m+n} ∓ s Ũ_{±(m-n)}
                let sign = if diff_flip { s } else { -s };
                ut(sum).scale(-s).add(&ut(diff).scale(sign))
            }
            (Family::UTilde, Family::U) => {
                return self.a_bracket(fn_, n, fm, m).map(|e| e.neg());
            }
            (Family::UTilde, Family::UTilde) => {
                // [Ũ_m, Ũ_n] = s U_{m+n} + s U_{±(m-n)}
                u(sum).scale(s).add(&u(diff).scale(s))
            }
            _ => unreachable!("A-side families"),
        })
    }

    fn b_bracket(&self, fm: Family, m: Mode, fn_: Family, n: Mode) -> Option<TorusElement> {
        let th = self.theta;
        if m == (0, 0) || n == (0, 0) {
            return Some(TorusElement::zero(th));
        }
        let s = Complex64::new(th.sine(m.0 * n.1 - m.1 * n.0), 0.0);
        let four = Complex64::new(4.0, 0.0);
        let sum = (m.0 + n.0, m.1 + n.1);
        let t = |idx: Mode| nc_basis(th, Family::T, idx).unwrap();
        let tt = |idx: Mode| nc_basis(th, Family::TTilde, idx).unwrap();
        // Δ^{m,n}_{~(m+n)} = 4s, Δ^{m,ñ}_{m+n} = -4s, Δ^{m̃,ñ}_{~(m+n)} = -4s.
        Some(match (fm, fn_) {
            (Family::T, Family::T) => tt(sum).scale(four * s),
            (Family::T, Family::TTilde) => t(sum).scale(-four * s),
            (Family::TTilde, Family::T) => t(sum).scale(four * s),
            (Family::TTilde, Family::TTilde) => tt(sum).scale(-four * s),
            _ => unreachable!("B-side families"),
        })
    }

    /// Closed-form mixed bracket `[B^m, A_n]`; the Δ-correction term
    /// appears exactly when `m < n` in the K-order.
    fn mixed_bracket(&self, fb: Family, m: Mode, fa: Family, n: Mode) -> Option<TorusElement> {
        let th = self.theta;
        if m == (0, 0) || n == (0, 0) {
            return Some(TorusElement::zero(th));
        }
        let s = Complex64::new(th.sine(m.0 * n.1 - m.1 * n.0), 0.0);
        let four = Complex64::new(4.0, 0.0);
        let sum = (m.0 + n.0, m.1 + n.1);
        let u = |idx: Mode| nc_basis(th, Family::U, idx).unwrap();
        let ut = |idx: Mode| nc_basis(th, Family::UTilde, idx).unwrap();
        let t = |idx: Mode| nc_basis(th, Family::T, idx).unwrap();
        let tt = |idx: Mode| nc_basis(th, Family::TTilde, idx).unwrap();
        if m == n {
            return Some(TorusElement::zero(th));
        }
        let greater = match th.order(m, n) {
            ConeSign::Positive => true,
            ConeSign::Negative => false,
            ConeSign::Tie => return None,
        };
        let diff = if greater { (m.0 - n.0, m.1 - n.1) } else { (n.0 - m.0, n.1 - m.1) };
        Some(match (fb, fa) {
            (Family::T, Family::U) => {
                // m>n: -s T^{m+n} + s T^{m-n};  m<n: … + 4s Ũ_{n-m}
                let mut out = t(sum).scale(-s).add(&t(diff).scale(s));
                if !greater {
                    out = out.add(&ut(diff).scale(four * s));
                }
                out
            }
            (Family::T, Family::UTilde) => {
                // m>n: -s(T̃^{m+n} + T̃^{m-n}); m<n: -s T̃^{m+n} + s T̃^{n-m} - 4s U_{n-m}
                if greater {
                    tt(sum).scale(-s).add(&tt(diff).scale(-s))
                } else {
                    tt(sum)
                        .scale(-s)
                        .add(&tt(diff).scale(s))
                        .add(&u(diff).scale(-four * s))
                }
            }
            (Family::TTilde, Family::U) => {
                // m>n: -s T̃^{m+n} + s T̃^{m-n}; m<n: -s T̃^{m+n} - s T̃^{n-m} + 4s U_{n-m}
                if greater {
                    tt(sum).scale(-s).add(&tt(diff).scale(s))
                } else {
                    tt(sum)
                        .scale(-s)
                        .add(&tt(diff).scale(-s))
                        .add(&u(diff).scale(four * s))
                }
            }
            (Family::TTilde, Family::UTilde) => {
                // m>n: s(T^{m+n} + T^{m-n}); m<n: s T^{m+n} + s T^{n-m} + 4s Ũ_{n-m}
                let mut out = t(sum).scale(s).add(&t(diff).scale(s));
                if !greater {
                    out = out.add(&ut(diff).scale(four * s));
                }
                out
            }
            _ => unreachable!("mixed families"),
        })
    }
}

/// Verify the θ-dependent bracket tables on a window and return them as
/// structure constants (entries whose output label leaves the window are
/// dropped from the returned table but still verified).
pub fn nc_constants(
    theta: Theta,
    w: i64,
) -> (StructureConstants<ApproxComplex>, VerificationReport) {
    assert!(w >= 2, "window must be at least 2");
    let tol = 1e-10;
    let (a_labels, b_labels, ties) = cone_labels(theta, w);
    let mut report = VerificationReport::new("nc-constants", tol);
    for tie in &ties {
        report.notes.push(format!("tie label excluded: ({},{})", tie.0, tie.1));
    }
    report.notes.push(
        "third printed mixed display matches [T~^m, U_n]; the fourth (printed with a \
         repeated left label) matches [T~^m, U~_n]"
            .into(),
    );

    let ctx = TableCtx { theta };
    let a_series: Vec<TorusElement> = a_labels.iter().map(|l| basis_of(theta, l)).collect();
    let b_series: Vec<TorusElement> = b_labels.iter().map(|l| basis_of(theta, l)).collect();
    let idx = |labels: &[BasisLabel], fam: Family, m: Mode| {
        labels.iter().position(|l| *l == BasisLabel::indexed(fam, m.0, m.1))
    };

    let mut sc = StructureConstants::new(a_labels.clone());

    // A-side table.
    for i in 0..a_labels.len() {
        for j in i + 1..a_labels.len() {
            let BasisLabel::Indexed { family: fi, index: mi } = a_labels[i] else { continue };
            let BasisLabel::Indexed { family: fj, index: mj } = a_labels[j] else { continue };
            let got = a_series[i].commutator(&a_series[j]);
            match ctx.a_bracket(fi, mi, fj, mj) {
                Some(expect) => {
                    report.record(got.sub(&expect).max_abs(), || {
                        format!("[{},{}]", a_labels[i], a_labels[j])
                    });
                    // Coefficients into the table: expand the closed form.
                    let s = theta.sine(mi.0 * mj.1 - mi.1 * mj.0);
                    if s != 0.0 && mi != (0, 0) && mj != (0, 0) {
                        let sum = (mi.0 + mj.0, mi.1 + mj.1);
                        let diff_sign = theta.order(mi, mj);
                        let diff = match diff_sign {
                            ConeSign::Positive => Some((mi.0 - mj.0, mi.1 - mj.1)),
                            ConeSign::Negative => Some((mj.0 - mi.0, mj.1 - mi.1)),
                            ConeSign::Tie => None,
                        };
                        let mut put = |fam: Family, mode: Mode, v: f64| {
                            if let Some(c) = idx(&a_labels, fam, mode) {
                                sc.add_gamma(i, j, c, ApproxComplex::new(v, 0.0));
                            }
                        };
                        match (fi, fj) {
                            (Family::U, Family::U) => {
                                put(Family::U, sum, -s);
                                if let Some(d) = diff {
                                    put(Family::U, d, s);
                                }
                            }
                            (Family::U, Family::UTilde) => {
                                put(Family::UTilde, sum, -s);
                                if let Some(d) = diff {
                                    let v =
                                        if diff_sign == ConeSign::Negative { s } else { -s };
                                    put(Family::UTilde, d, v);
                                }
                            }
                            (Family::UTilde, Family::UTilde) => {
                                put(Family::U, sum, s);
                                if let Some(d) = diff {
                                    put(Family::U, d, s);
                                }
                            }
                            _ => {}
                        }
                    }
                }
                None => report.notes.push(format!(
                    "order tie, pair skipped: [{},{}]",
                    a_labels[i], a_labels[j]
                )),
            }
        }
    }

    // B-side table.
    for i in 0..b_labels.len() {
        for j in i + 1..b_labels.len() {
            let BasisLabel::Indexed { family: fi, index: mi } = b_labels[i] else { continue };
            let BasisLabel::Indexed { family: fj, index: mj } = b_labels[j] else { continue };
            let got = b_series[i].commutator(&b_series[j]);
            match ctx.b_bracket(fi, mi, fj, mj) {
                Some(expect) => {
                    report.record(got.sub(&expect).max_abs(), || {
                        format!("[{},{}]", b_labels[i], b_labels[j])
                    });
                    let s = theta.sine(mi.0 * mj.1 - mi.1 * mj.0);
                    if s != 0.0 && mi != (0, 0) && mj != (0, 0) {
                        let sum = (mi.0 + mj.0, mi.1 + mj.1);
                        let (fam, v) = match (fi, fj) {
                            (Family::T, Family::T) => (Family::TTilde, 4.0 * s),
                            (Family::T, Family::TTilde) => (Family::T, -4.0 * s),
                            (Family::TTilde, Family::TTilde) => (Family::TTilde, -4.0 * s),
                            _ => unreachable!(),
                        };
                        // Table indices live on the A-label list (shared
                        // index convention).
                        let a_fam = match fam {
                            Family::T => Family::U,
                            Family::TTilde => Family::UTilde,
                            _ => unreachable!(),
                        };
                        if let Some(c) = idx(&a_labels, a_fam, sum) {
                            sc.add_delta(i, j, c, ApproxComplex::new(v, 0.0));
                        }
                    }
                }
                None => report.notes.push(format!(
                    "order tie, pair skipped: [{},{}]",
                    b_labels[i], b_labels[j]
                )),
            }
        }
    }

    // Mixed brackets against the four printed displays.
    for (i, bl) in b_labels.iter().enumerate() {
        for (j, al) in a_labels.iter().enumerate() {
            let BasisLabel::Indexed { family: fb, index: mb } = bl else { continue };
            let BasisLabel::Indexed { family: fa, index: ma } = al else { continue };
            let got = b_series[i].commutator(&a_series[j]);
            match ctx.mixed_bracket(*fb, *mb, *fa, *ma) {
                Some(expect) => {
                    report.record(got.sub(&expect).max_abs(), || format!("[{bl},{al}]"));
                }
                None => report.notes.push(format!("order tie, pair skipped: [{bl},{al}]")),
            }
        }
    }

    (sc, report)
}

/// Cross-validation against the rational torus at `θ = 1/n`.
///
/// Two layers.  First, the Weyl commutator coefficient of every window
/// pair must match the matrix commutator of the clock/shift generators
/// (the sine-algebra coincidence).  Second, each cone-basis element of the
/// anti-hermitian side maps under `ê_m ↦ e_m` onto a unique scalar multiple
/// `κ` of a catalog basis element, and the Γ tables must then agree with
/// the weight `κ_a κ_b / κ_c`.  The dual sides are *different* complements
/// (the cone span of `ê_m` versus the Borel matrices), so only the shared
/// anti-hermitian sector admits an entrywise comparison.
pub fn rational_cross_check(n: u32, w: i64) -> VerificationReport {
    use crate::bialgebra::extract_constants;
    use crate::matrix::SquareMatrix;
    use crate::rational_torus::{build_generator, manin_witness, GeneratorKind, TorusGeneratorSpec};
    use crate::scalar::{CycloScalar, Scalar};

    let tol = 1e-10;
    let mut report = VerificationReport::new(format!("nc-vs-rational-N{n}"), tol);
    let theta = Theta::rational(1, n as i64).expect("n >= 2");
    let e_mat = |m: Mode| -> SquareMatrix<CycloScalar> {
        build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::E { r: m.0, s: m.1 } })
            .expect("valid dimension")
    };

    // Layer 1: Weyl commutator coefficients against matrix commutators.
    for k1 in -w..=w {
        for k2 in -w..=w {
            for m1 in -w..=w {
                for m2 in -w..=w {
                    let (k, m) = ((k1, k2), (m1, m2));
                    let weyl = TorusElement::weyl(theta, k)
                        .commutator(&TorusElement::weyl(theta, m));
                    let coeff = weyl.coeff((k.0 + m.0, k.1 + m.1));
                    let mat = e_mat(k).commutator(&e_mat(m));
                    let target = e_mat((k.0 + m.0, k.1 + m.1));
                    // coefficient of the matrix commutator on e_{k+m}
                    let diff = mat
                        .sub(&target.scale(&approx_to_cyclo_free(coeff, n)))
                        .max_abs();
                    report.record(diff, || format!("[e{k:?}, e{m:?}]"));
                }
            }
        }
    }

    // Layer 2: Γ-table correspondence on the anti-hermitian side.  Distinct
    // lattice labels can fold onto the same matrix downstairs, so nc-side
    // contributions are aggregated per rational catalog element before
    // comparing.
    let witness = manin_witness::<CycloScalar>(n).expect("n >= 2");
    let sc_rat = extract_constants(&witness, 0.0).expect("rational extraction");

    // image of an nc A-basis label under ê_m ↦ e_m, as (catalog index, κ).
    let mut memo: HashMap<BasisLabel, Option<(usize, Complex64)>> = HashMap::new();
    let mut map_label = |label: &BasisLabel| -> Option<(usize, Complex64)> {
        if let Some(hit) = memo.get(label) {
            return *hit;
        }
        let BasisLabel::Indexed { family, index } = label else { return None };
        let m = *index;
        let image: SquareMatrix<CycloScalar> = if m == (0, 0) {
            SquareMatrix::identity(n as usize).scale(&CycloScalar::i())
        } else {
            let e = e_mat(m);
            let estar = e.dagger();
            match family {
                Family::U => {
                    e.add(&estar).scale(&CycloScalar::i().mul(&CycloScalar::from_ratio(1, 2)))
                }
                Family::UTilde => e.sub(&estar).scale(&CycloScalar::from_ratio(-1, 2)),
                _ => unreachable!("A labels"),
            }
        };
        let mut found = None;
        for (k, (_, basis)) in witness.a_basis.iter().enumerate() {
            let mut kappa = None;
            'outer: for i in 0..basis.dim() {
                for j in 0..basis.dim() {
                    if !basis.get(i, j).is_zero() {
                        kappa =
                            Some(image.get(i, j).mul(&Scalar::inv(basis.get(i, j)).unwrap()));
                        break 'outer;
                    }
                }
            }
            let Some(kappa) = kappa else { continue };
            if kappa.is_zero() {
                continue;
            }
            if image.sub(&basis.scale(&kappa)).is_zero() {
                found = Some((k, kappa.embed()));
                break;
            }
        }
        memo.insert(label.clone(), found);
        found
    };

    let (a_labels, _, _) = cone_labels(theta, w);
    let a_series: Vec<TorusElement> = a_labels.iter().map(|l| basis_of(theta, l)).collect();
    'pairs: for a in 0..a_labels.len() {
        for b in a + 1..a_labels.len() {
            let Some((ka, wa)) = map_label(&a_labels[a]) else {
                report.record(f64::INFINITY, || format!("no image for {}", a_labels[a]));
                continue;
            };
            let Some((kb, wb)) = map_label(&a_labels[b]) else {
                report.record(f64::INFINITY, || format!("no image for {}", a_labels[b]));
                continue;
            };
            let z = a_series[a].commutator(&a_series[b]);
            // expand z over cone labels on its support, then push each
            // coefficient down to the catalog
            let mut expected: HashMap<usize, Complex64> = HashMap::new();
            let mut reps: Vec<Mode> = Vec::new();
            for (&k, _) in z.support() {
                let rep = match theta.cone_sign(k) {
                    ConeSign::Positive => k,
                    ConeSign::Negative => (-k.0, -k.1),
                    ConeSign::Tie => {
                        report.notes.push(format!(
                            "tie output, pair skipped: [{},{}]",
                            a_labels[a], a_labels[b]
                        ));
                        continue 'pairs;
                    }
                };
                if rep == (0, 0) || reps.contains(&rep) {
                    continue;
                }
                reps.push(rep);
            }
            for rep in reps {
                for family in [Family::U, Family::UTilde] {
                    let dual_family = if family == Family::U { Family::T } else { Family::TTilde };
                    let coeff = z.pairing(&nc_basis(theta, dual_family, rep).unwrap());
                    if coeff.abs() <= tol {
                        continue;
                    }
                    let label = BasisLabel::indexed(family, rep.0, rep.1);
                    let Some((kc, wc)) = map_label(&label) else {
                        report.record(f64::INFINITY, || format!("no image for {label}"));
                        continue;
                    };
                    *expected.entry(kc).or_insert(Complex64::new(0.0, 0.0)) +=
                        Complex64::new(coeff, 0.0) * wc;
                }
            }
            // compare with κ_a κ_b Γ^{rat} over the union of output slots
            let mut slots: Vec<usize> = expected.keys().copied().collect();
            for (kc, v) in sc_rat.gamma_terms(ka, kb) {
                if !v.is_zero() && !slots.contains(&kc) {
                    slots.push(kc);
                }
            }
            slots.sort_unstable();
            for kc in slots {
                let lhs = sc_rat.gamma_entry(ka, kb, kc).embed() * wa * wb;
                let rhs = expected.get(&kc).copied().unwrap_or(Complex64::new(0.0, 0.0));
                report.record((lhs - rhs).norm(), || {
                    format!("gamma mismatch ({},{}): slot {kc}", a_labels[a], a_labels[b])
                });
            }
        }
    }
    report
}

/// Lift a complex commutator coefficient into the exact field as
/// `x + iy` with small rational approximants; the coefficients compared
/// here are `2 sin(πk/N)` values, which are exactly representable, so we
/// instead verify by embedding the exact matrix side.
fn approx_to_cyclo_free(c: Complex64, n: u32) -> crate::scalar::CycloScalar {
    use crate::scalar::{CycloScalar, Scalar};
    // 2i sin(πk/N) = ζ_2N^k − ζ_2N^{-k}: recover k by matching magnitude.
    for k in -(2 * n as i64)..=(2 * n as i64) {
        let cand = CycloScalar::half_root(n, k).sub(&CycloScalar::half_root(n, -k));
        if (cand.embed() - c).norm() < 1e-9 {
            return cand;
        }
    }
    // fall back to zero; the residual check will then flag the mismatch
    CycloScalar::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn weyl_product_phase() {
        let th = Theta::Real(0.37);
        let a = TorusElement::weyl(th, (1, 0));
        let b = TorusElement::weyl(th, (0, 1));
        let prod = a.weyl_product(&b);
        let expect = Complex64::from_polar(1.0, PI * 0.37);
        assert!((prod.coeff((1, 1)) - expect).norm() < 1e-15);
        // unit
        let one = TorusElement::one(th);
        assert!(one.weyl_product(&a).sub(&a).is_zero_tol(0.0));
    }

    #[test]
    fn weyl_associativity_random() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        let th = Theta::Real(0.3137);
        for _ in 0..50 {
            let mut gen = || {
                let mut el = TorusElement::zero(th);
                for _ in 0..4 {
                    let m = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
                    el.push(m, c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
                }
                el
            };
            let (a, b, d) = (gen(), gen(), gen());
            let lhs = a.weyl_product(&b).weyl_product(&d);
            let rhs = a.weyl_product(&b.weyl_product(&d));
            assert!(lhs.sub(&rhs).is_zero_tol(1e-12));
        }
    }

    #[test]
    fn half_theta_commutator() {
        // θ = 1/2: [ê_(1,0), ê_(0,1)] = 2i sin(π/2) ê_(1,1) = 2i ê_(1,1).
        let th = Theta::rational(1, 2).unwrap();
        let a = TorusElement::weyl(th, (1, 0));
        let b = TorusElement::weyl(th, (0, 1));
        let comm = a.commutator(&b);
        assert!((comm.coeff((1, 1)) - c(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn trace_properties() {
        let th = Theta::Real(0.234);
        assert_eq!(TorusElement::weyl(th, (2, -1)).trace(), c(0.0, 0.0));
        assert_eq!(TorusElement::one(th).trace(), c(1.0, 0.0));
        // τ(ê_m ê_m†) = 1
        let e = TorusElement::weyl(th, (1, 2));
        assert!((e.weyl_product(&e.star()).trace() - c(1.0, 0.0)).norm() < 1e-15);
        // tracial property and positivity on a random element
        let mut a = TorusElement::zero(th);
        a.push((1, 0), c(0.3, -1.2));
        a.push((-2, 1), c(0.5, 0.25));
        let b = e.clone();
        let ab = a.weyl_product(&b).trace();
        let ba = b.weyl_product(&a).trace();
        assert!((ab - ba).norm() < 1e-15);
        let pos = a.star().weyl_product(&a).trace();
        assert!(pos.re > 0.0 && pos.im.abs() < 1e-15);
    }

    #[test]
    fn derivations() {
        let th = Theta::Real(0.7);
        let p = TorusElement::weyl(th, (1, 0));
        let d1 = p.derivation(1);
        assert!((d1.coeff((1, 0)) - c(0.0, 2.0 * PI)).norm() < 1e-14);
        assert!(p.derivation(2).is_zero_tol(0.0));
        // commuting, Leibniz, trace invariance
        let mut a = TorusElement::zero(th);
        a.push((2, -1), c(1.0, 0.5));
        a.push((0, 3), c(-0.25, 1.0));
        let d12 = a.derivation(1).derivation(2);
        let d21 = a.derivation(2).derivation(1);
        assert!(d12.sub(&d21).is_zero_tol(0.0));
        let b = TorusElement::weyl(th, (1, 1));
        let lhs = a.weyl_product(&b).derivation(1);
        let rhs = a.derivation(1).weyl_product(&b).add(&a.weyl_product(&b.derivation(1)));
        assert!(lhs.sub(&rhs).is_zero_tol(1e-12));
        assert!((a.derivation(1).trace()).norm() == 0.0);
    }

    #[test]
    fn cone_predicate() {
        assert_eq!(k_positive(Theta::Real(0.4), (-1, 3)), ConeSign::Positive);
        assert_eq!(k_positive(Theta::rational(1, 3).unwrap(), (-1, 3)), ConeSign::Tie);
        assert_eq!(k_positive(Theta::Real(0.4), (-2, 3)), ConeSign::Negative);
        // small θ agrees with lexicographic order on a window
        let th = Theta::Real(1e-3);
        for m1 in -20..=20i64 {
            for m2 in -20..=20i64 {
                if (m1, m2) == (0, 0) {
                    continue;
                }
                let lex = lex_positive((m1, m2));
                let cone = k_positive(th, (m1, m2)) == ConeSign::Positive;
                assert_eq!(lex, cone, "({m1},{m2})");
            }
        }
        // θ = 0.4 disagrees with lexicographic order at (-1, 3)
        assert!(!lex_positive((-1, 3)));
        assert_eq!(k_positive(Theta::Real(0.4), (-1, 3)), ConeSign::Positive);
    }

    #[test]
    fn k0_trace_map_is_ordered_homomorphism() {
        // (r, m) ↦ r + mθ is additive and order-compatible with the cone.
        let th = Theta::Real(0.618);
        let t = |r: i64, m: i64| r as f64 + m as f64 * th.value();
        for (r1, m1) in [(0i64, 1i64), (1, -1), (2, 3)] {
            for (r2, m2) in [(1i64, 0i64), (-1, 2)] {
                assert!((t(r1 + r2, m1 + m2) - (t(r1, m1) + t(r2, m2))).abs() < 1e-12);
            }
        }
        assert_eq!(k_positive(th, (0, 1)), ConeSign::Positive);
        assert!(t(0, 1) > 0.0);
    }

    #[test]
    fn basis_membership_and_duality() {
        let th = Theta::Real(std::f64::consts::SQRT_2 - 1.0);
        let m = (1, 1);
        let t = nc_basis(th, Family::T, m).unwrap();
        let u = nc_basis(th, Family::U, m).unwrap();
        assert!((t.pairing(&u) - 1.0).abs() < 1e-15);
        let tt = nc_basis(th, Family::TTilde, m).unwrap();
        let ut = nc_basis(th, Family::UTilde, m).unwrap();
        assert!((tt.pairing(&ut) - 1.0).abs() < 1e-15);
        assert!(t.pairing(&ut).abs() < 1e-15);
        assert!(u.is_anti_hermitian(0.0));
        assert!(ut.is_anti_hermitian(0.0));
        assert!(t.in_dual_span(th, 0.0));
        // zero label only for U and T
        assert!(nc_basis(th, Family::UTilde, (0, 0)).is_err());
        assert!(matches!(
            nc_basis(Theta::rational(1, 3).unwrap(), Family::U, (-1, 3)),
            Err(NcError::TieLabel(_))
        ));
        assert!(matches!(
            nc_basis(th, Family::U, (-2, 1)),
            Err(NcError::OutsideCone(_))
        ));
    }

    #[test]
    fn window_isotropy_and_duality() {
        let th = Theta::Real(0.3);
        let (a_labels, b_labels, ties) = cone_labels(th, 3);
        assert!(ties.is_empty());
        let a: Vec<TorusElement> = a_labels.iter().map(|l| basis_of(th, l)).collect();
        let b: Vec<TorusElement> = b_labels.iter().map(|l| basis_of(th, l)).collect();
        for i in 0..a.len() {
            for j in 0..a.len() {
                assert!(a[i].pairing(&a[j]).abs() < 1e-14, "A isotropy {i},{j}");
                assert!(b[i].pairing(&b[j]).abs() < 1e-14, "B isotropy {i},{j}");
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (b[i].pairing(&a[j]) - expect).abs() < 1e-14,
                    "duality <{},{}>",
                    b_labels[i],
                    a_labels[j]
                );
            }
        }
    }

    #[test]
    fn pairing_invariance_random() {
        use rand::Rng;
        use rand::SeedableRng;
        let th = Theta::Real(0.3);
        let (a_labels, b_labels, _) = cone_labels(th, 2);
        let all: Vec<TorusElement> = a_labels
            .iter()
            .chain(b_labels.iter())
            .map(|l| basis_of(th, l))
            .collect();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = &all[rng.gen_range(0..all.len())];
            let x = &all[rng.gen_range(0..all.len())];
            let y = &all[rng.gen_range(0..all.len())];
            let lhs = z.commutator(x).pairing(y) + x.pairing(&z.commutator(y));
            assert!(lhs.abs() < 1e-10);
        }
    }

    #[test]
    fn table_example_theta_03() {
        // [U_m, U_n] at θ = 0.3, m = (1,0), n = (0,1): -s U_{(1,1)} + s U_{(1,-1)}.
        let th = Theta::Real(0.3);
        let u10 = nc_basis(th, Family::U, (1, 0)).unwrap();
        let u01 = nc_basis(th, Family::U, (0, 1)).unwrap();
        let got = u10.commutator(&u01);
        let s = (0.3 * PI).sin();
        let expect = nc_basis(th, Family::U, (1, 1))
            .unwrap()
            .scale(c(-s, 0.0))
            .add(&nc_basis(th, Family::U, (1, -1)).unwrap().scale(c(s, 0.0)));
        assert!(got.sub(&expect).is_zero_tol(1e-14));
    }

    #[test]
    fn closure_of_sides() {
        let th = Theta::Real(0.3);
        let (a_labels, b_labels, _) = cone_labels(th, 2);
        for i in 0..a_labels.len() {
            for j in 0..a_labels.len() {
                let za = basis_of(th, &a_labels[i]).commutator(&basis_of(th, &a_labels[j]));
                assert!(za.is_anti_hermitian(1e-13), "A closure");
                let zb = basis_of(th, &b_labels[i]).commutator(&basis_of(th, &b_labels[j]));
                assert!(zb.in_dual_span(th, 1e-13), "B closure");
            }
        }
    }

    #[test]
    fn nc_constants_windows() {
        for th in [
            Theta::Real(0.3),
            Theta::Real(std::f64::consts::SQRT_2 - 1.0),
            Theta::rational(1, 5).unwrap(),
        ] {
            let (sc, rep) = nc_constants(th, 3);
            assert!(rep.pass, "θ={th:?}: {rep:?}");
            assert!(sc.gamma_entry_count() > 0);
            assert!(sc.delta_entry_count() > 0);
        }
    }

    #[test]
    fn same_index_brackets_vanish() {
        let th = Theta::Real(0.3);
        let m = (2, 1);
        let t = nc_basis(th, Family::T, m).unwrap();
        let u = nc_basis(th, Family::U, m).unwrap();
        assert!(t.commutator(&u).is_zero_tol(1e-14));
    }

    #[test]
    fn rational_cross_check_small() {
        // N=3 exercises the label folding (distinct lattice labels with the
        // same matrix image); N=5 is the clean window-2 case.
        for n in [3u32, 5] {
            let rep = rational_cross_check(n, 2);
            assert!(rep.pass, "N={n}: {rep:?}");
        }
    }
}
