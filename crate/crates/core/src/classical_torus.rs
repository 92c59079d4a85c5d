//! The Poisson algebra of the ordinary two-torus and its Lie bi-algebra
//! splitting into real functions and holomorphically-extendable ones.
//!
//! Elements are finitely supported Fourier series `φ = Σ φ_m e^{i m·x}`
//! with `x ∈ [0,2π]²` and integration measure `dx/(2π)²`.  The bracket is
//! `{e_k, e_m} = -(k∧m) e_{k+m}` with `k∧m = k₁m₂ - k₂m₁`, and the
//! invariant inner product is `⟨φ,ψ⟩ = Im Σ φ_m ψ_{-m}`.
//!
//! Basis labels follow the lexicographic admissibility rule: `m` labels a
//! basis element iff `m₁ > 0`, or `m₁ = 0 ∧ m₂ > 0`, or `m = 0` (the
//! latter only for the `U`/`T` families).

use crate::bialgebra::{BasisLabel, Family, StructureConstants, VerificationReport};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("label {0} is not admissible")]
    InadmissibleLabel(String),
}

pub type Mode = (i64, i64);

/// Finitely supported map `Z² → coefficients`.
#[derive(Clone, Debug)]
pub struct FourierSeries<S> {
    coeffs: BTreeMap<Mode, S>,
}

impl<S: Scalar> FourierSeries<S> {
    pub fn zero() -> Self {
        FourierSeries { coeffs: BTreeMap::new() }
    }

    /// The exponential `e_m`.
    pub fn exponential(m: Mode) -> Self {
        let mut s = Self::zero();
        s.push(m, S::one());
        s
    }

    pub fn push(&mut self, m: Mode, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_insert_with(S::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn coeff(&self, m: Mode) -> S {
        self.coeffs.get(&m).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Mode, &S)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in rhs.support() {
            out.push(m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        FourierSeries {
            coeffs: self.coeffs.iter().map(|(&m, c)| (m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero();
        for (&m, c) in self.support() {
            out.push(m, c.mul(k));
        }
        out
    }

    /// Complex conjugate of the function: coefficient at `m` becomes
    /// `conj(φ_{-m})`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in self.support() {
            out.push((-a, -b), c.conj());
        }
        out
    }

    /// Pointwise product of functions (coefficient convolution).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in self.support() {
            for (&(a2, b2), c2) in rhs.support() {
                out.push((a1 + a2, b1 + b2), c1.mul(c2));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coeffs.values().all(|c| c.is_zero_tol(tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// True when the function is real-valued (`φ*_m = φ_{-m}`).
    pub fn is_real_valued(&self, tol: f64) -> bool {
        self.sub(&self.conj()).is_zero_tol(tol)
    }
}

/// `{φ, ψ} = ∂₁φ ∂₂ψ − ∂₂φ ∂₁ψ`, i.e. `{e_k, e_m} = −(k∧m) e_{k+m}`.
pub fn poisson<S: Scalar>(phi: &FourierSeries<S>, psi: &FourierSeries<S>) -> FourierSeries<S> {
    let mut out = FourierSeries::zero();
    for (&(k1, k2), ck) in phi.support() {
        for (&(m1, m2), cm) in psi.support() {
            let wedge = k1 * m2 - k2 * m1;
            if wedge == 0 {
                continue;
            }
            out.push((k1 + m1, k2 + m2), ck.mul(cm).scale_int(-wedge));
        }
    }
    out
}

/// The invariant inner product `⟨φ,ψ⟩ = Im Σ φ_m ψ_{-m}`, a real scalar.
pub fn inner<S: Scalar>(phi: &FourierSeries<S>, psi: &FourierSeries<S>) -> S {
    let mut acc = S::zero();
    for (&(a, b), c) in phi.support() {
        let other = psi.coeff((-a, -b));
        if !other.is_zero() {
            acc = acc.add(&c.mul(&other));
        }
    }
    acc.imag()
}

/// Schwartz seminorm `‖φ‖_k = sup |φ_m| (1 + |m₁| + |m₂|)^k`.
pub fn schwartz_seminorm<S: Scalar>(phi: &FourierSeries<S>, k: u32) -> f64 {
    phi.support()
        .map(|(&(a, b), c)| c.abs() * ((1 + a.abs() + b.abs()) as f64).powi(k as i32))
        .fold(0.0, f64::max)
}

/// Lexicographic admissibility of an index (zero excluded).
fn index_admissible(m: Mode) -> bool {
    m.0 > 0 || (m.0 == 0 && m.1 > 0)
}

/// Is `(family, m)` an admissible basis label?
pub fn is_admissible(family: Family, m: Mode) -> bool {
    match family {
        Family::U | Family::T => m == (0, 0) || index_admissible(m),
        Family::UTilde | Family::TTilde => index_admissible(m),
        Family::H | Family::HTilde => false,
    }
}

/// The basis series of one admissible label:
/// `U_m = cos(m·x)`, `Ũ_m = sin(m·x)`, `U_0 = 1`;
/// `T^n = 2i e_n` (or `2i cos(n₂x₂)` on the `n₁ = 0` line, `i` at zero),
/// `T̃^n = 2 e_n` (or `2i sin(n₂x₂)`).
pub fn classical_basis<S: Scalar>(
    family: Family,
    m: Mode,
) -> Result<FourierSeries<S>, ClassicalError> {
    if !is_admissible(family, m) {
        return Err(ClassicalError::InadmissibleLabel(
            BasisLabel::indexed(family, m.0, m.1).to_string(),
        ));
    }
    let half = S::from_ratio(1, 2);
    let mut out = FourierSeries::zero();
    match family {
        Family::U => {
            if m == (0, 0) {
                out.push((0, 0), S::one());
            } else {
                out.push(m, half.clone());
                out.push((-m.0, -m.1), half);
            }
        }
        Family::UTilde => {
            let mih = S::i().mul(&half).neg();
            out.push(m, mih.clone());
            out.push((-m.0, -m.1), mih.neg());
        }
        Family::T => {
            if m == (0, 0) {
                out.push((0, 0), S::i());
            } else if m.0 > 0 {
                out.push(m, S::i().scale_int(2));
            } else {
                out.push(m, S::i());
                out.push((0, -m.1), S::i());
            }
        }
        Family::TTilde => {
            if m.0 > 0 {
                out.push(m, S::from_int(2));
            } else {
                out.push(m, S::one());
                out.push((0, -m.1), S::from_int(-1));
            }
        }
        Family::H | Family::HTilde => unreachable!(),
    }
    Ok(out)
}

/// The dual partner of a label under `⟨T^m, U_m⟩ = 1 = ⟨T̃^m, Ũ_m⟩`.
fn dual_family(family: Family) -> Family {
    match family {
        Family::U => Family::T,
        Family::T => Family::U,
        Family::UTilde => Family::TTilde,
        Family::TTilde => Family::UTilde,
        other => other,
    }
}

fn dual_series<S: Scalar>(label: &BasisLabel) -> FourierSeries<S> {
    let BasisLabel::Indexed { family, index } = label else {
        panic!("classical labels are indexed")
    };
    classical_basis(dual_family(*family), *index).expect("dual of admissible is admissible")
}

/// Admissible labels with both index components bounded by `w`, in the
/// deterministic order U, Ũ / T, T̃.
pub fn window_labels(w: i64) -> (Vec<BasisLabel>, Vec<BasisLabel>) {
    let mut indices = vec![(0, 0)];
    for m2 in 1..=w {
        indices.push((0, m2));
    }
    for m1 in 1..=w {
        for m2 in -w..=w {
            indices.push((m1, m2));
        }
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &(family_a, family_b) in
        &[(Family::U, Family::T), (Family::UTilde, Family::TTilde)]
    {
        for &m in &indices {
            if is_admissible(family_a, m) {
                a.push(BasisLabel::indexed(family_a, m.0, m.1));
                b.push(BasisLabel::indexed(family_b, m.0, m.1));
            }
        }
    }
    (a, b)
}

fn series_of<S: Scalar>(label: &BasisLabel) -> FourierSeries<S> {
    let BasisLabel::Indexed { family, index } = label else {
        panic!("classical labels are indexed")
    };
    classical_basis(*family, *index).expect("window labels are admissible")
}

/// Expected right-hand sides of the printed bracket tables.  `None` means
/// the pair is not covered by a printed display directly (the checker then
/// uses antisymmetry).
fn expected_a_bracket<S: Scalar>(
    fam_m: Family,
    m: Mode,
    fam_n: Family,
    n: Mode,
) -> Option<FourierSeries<S>> {
    let basis = |f: Family, idx: Mode| classical_basis::<S>(f, idx).unwrap();
    let u = Family::U;
    let ut = Family::UTilde;
    // The whole center line: both first components zero (includes U_0).
    if m.0 == 0 && n.0 == 0 {
        return Some(FourierSeries::zero());
    }
    if m == (0, 0) || n == (0, 0) {
        return Some(FourierSeries::zero());
    }
    let wedge = m.0 * n.1 - m.1 * n.0;
    let sum = (m.0 + n.0, m.1 + n.1);
    let half = S::from_ratio(1, 2);
    match (fam_m, fam_n) {
        (Family::U, Family::U) => {
            let second = if m.0 > n.0 {
                basis(u, (m.0 - n.0, m.1 - n.1))
            } else if m.0 < n.0 {
                basis(u, (n.0 - m.0, n.1 - m.1))
            } else {
                // m₁ = n₁ > 0
                if m.1 == n.1 {
                    return Some(FourierSeries::zero());
                }
                basis(u, (0, (m.1 - n.1).abs()))
            };
            Some(basis(u, sum).neg().add(&second).scale(&half.scale_int(wedge)))
        }
        (Family::U, Family::UTilde) => {
            if m == n {
                return Some(FourierSeries::zero());
            }
            let (second, sign) = if m.0 > n.0 {
                (basis(ut, (m.0 - n.0, m.1 - n.1)), 1)
            } else if m.0 < n.0 {
                (basis(ut, (n.0 - m.0, n.1 - m.1)), -1)
            } else {
                if m.1 == n.1 {
                    return Some(FourierSeries::zero());
                }
                if m.1 > n.1 {
                    (basis(ut, (0, m.1 - n.1)), 1)
                } else {
                    (basis(ut, (0, n.1 - m.1)), -1)
                }
            };
            Some(
                basis(ut, sum)
                    .add(&second.scale(&S::from_int(sign)))
                    .scale(&half.scale_int(-wedge)),
            )
        }
        (Family::UTilde, Family::U) => {
            // use antisymmetry on the printed (U, Ũ) display
            expected_a_bracket::<S>(fam_n, n, fam_m, m).map(|s| s.neg())
        }
        (Family::UTilde, Family::UTilde) => {
            let second = if m.0 > n.0 {
                basis(u, (m.0 - n.0, m.1 - n.1))
            } else if m.0 < n.0 {
                basis(u, (n.0 - m.0, n.1 - m.1))
            } else {
                if m.1 == n.1 {
                    return Some(FourierSeries::zero());
                }
                basis(u, (0, (m.1 - n.1).abs()))
            };
            Some(basis(u, sum).add(&second).scale(&half.scale_int(wedge)))
        }
        _ => None,
    }
}

fn expected_b_bracket<S: Scalar>(
    fam_m: Family,
    m: Mode,
    fam_n: Family,
    n: Mode,
) -> Option<FourierSeries<S>> {
    let basis = |f: Family, idx: Mode| classical_basis::<S>(f, idx).unwrap();
    let t = Family::T;
    let tt = Family::TTilde;
    if m.0 == 0 && n.0 == 0 {
        return Some(FourierSeries::zero());
    }
    if m == (0, 0) || n == (0, 0) {
        return Some(FourierSeries::zero());
    }
    let wedge = m.0 * n.1 - m.1 * n.0;
    let sum = (m.0 + n.0, m.1 + n.1);
    match (fam_m, fam_n) {
        (Family::T, Family::T) => {
            if m.0 > 0 && n.0 > 0 {
                Some(basis(tt, sum).scale(&S::from_int(2 * wedge)))
            } else if m.0 == 0 {
                // {T^{(0,m₂)}, T^n} = -m₂n₁ (T̃^{(n₁,n₂+m₂)} - T̃^{(n₁,n₂-m₂)})
                let plus = basis(tt, (n.0, n.1 + m.1));
                let minus = basis(tt, (n.0, n.1 - m.1));
                Some(plus.sub(&minus).scale(&S::from_int(-m.1 * n.0)))
            } else {
                expected_b_bracket::<S>(fam_n, n, fam_m, m).map(|s| s.neg())
            }
        }
        (Family::T, Family::TTilde) => {
            if m.0 > 0 && n.0 > 0 {
                Some(basis(t, sum).scale(&S::from_int(-2 * wedge)))
            } else if m.0 == 0 {
                // {T^{(0,m₂)}, T̃^n} = m₂n₁ (T^{(n₁,n₂+m₂)} - T^{(n₁,n₂-m₂)})
                let plus = basis(t, (n.0, n.1 + m.1));
                let minus = basis(t, (n.0, n.1 - m.1));
                Some(plus.sub(&minus).scale(&S::from_int(m.1 * n.0)))
            } else {
                // n.0 == 0: antisymmetric partner of the (T̃⁰, T) display
                expected_b_bracket::<S>(fam_n, n, fam_m, m).map(|s| s.neg())
            }
        }
        (Family::TTilde, Family::T) => {
            if m.0 == 0 {
                // {T̃^{(0,m₂)}, T^n} = m₂n₁ (T^{(n₁,n₂+m₂)} + T^{(n₁,n₂-m₂)})
                let plus = basis(t, (n.0, n.1 + m.1));
                let minus = basis(t, (n.0, n.1 - m.1));
                Some(plus.add(&minus).scale(&S::from_int(m.1 * n.0)))
            } else {
                expected_b_bracket::<S>(fam_n, n, fam_m, m).map(|s| s.neg())
            }
        }
        (Family::TTilde, Family::TTilde) => {
            if m.0 > 0 && n.0 > 0 {
                Some(basis(tt, sum).scale(&S::from_int(-2 * wedge)))
            } else if m.0 == 0 {
                // {T̃^{(0,m₂)}, T̃^n} = m₂n₁ (T̃^{(n₁,n₂+m₂)} + T̃^{(n₁,n₂-m₂)})
                let plus = basis(tt, (n.0, n.1 + m.1));
                let minus = basis(tt, (n.0, n.1 - m.1));
                Some(plus.add(&minus).scale(&S::from_int(m.1 * n.0)))
            } else {
                expected_b_bracket::<S>(fam_n, n, fam_m, m).map(|s| s.neg())
            }
        }
        _ => None,
    }
}

/// Verify every printed bracket display on all ordered label pairs in the
/// window, comparing the Poisson bracket of the basis series against the
/// transcribed right-hand sides.
pub fn bracket_table_check<S: Scalar>(w: i64) -> VerificationReport {
    let (a_labels, b_labels) = window_labels(w);
    let tol = S::default_tol();
    let mut report = VerificationReport::new("classical-bracket-tables", tol);
    for (labels, expected_fn) in [
        (
            &a_labels,
            expected_a_bracket::<S> as fn(Family, Mode, Family, Mode) -> Option<FourierSeries<S>>,
        ),
        (&b_labels, expected_b_bracket::<S>),
    ] {
        for li in labels.iter() {
            for lj in labels.iter() {
                let (BasisLabel::Indexed { family: fi, index: mi },
                     BasisLabel::Indexed { family: fj, index: mj }) = (li, lj)
                else {
                    continue;
                };
                let got = poisson(&series_of::<S>(li), &series_of::<S>(lj));
                let expect = expected_fn(*fi, *mi, *fj, *mj)
                    .expect("all window family pairs covered");
                report.record(got.sub(&expect).max_abs(), || format!("{{{li},{lj}}}"));
            }
        }
    }
    report
}

/// Cross-pairing Gram check: `⟨B_i, A_j⟩ = δ_ij` on the window, the
/// classical version of perfect duality.
pub fn pairing_gram_check<S: Scalar>(w: i64) -> VerificationReport {
    let (a_labels, b_labels) = window_labels(w);
    let tol = S::default_tol();
    let mut report = VerificationReport::new("classical-duality", tol);
    let a_series: Vec<FourierSeries<S>> = a_labels.iter().map(series_of).collect();
    let b_series: Vec<FourierSeries<S>> = b_labels.iter().map(series_of).collect();
    for (i, bi) in b_series.iter().enumerate() {
        for (j, aj) in a_series.iter().enumerate() {
            let mut p = inner(bi, aj);
            if i == j {
                p = p.sub(&S::one());
            }
            report.record(p.abs(), || format!("<{},{}>", b_labels[i], a_labels[j]));
        }
        // isotropy within each side
        for (j, bj) in b_series.iter().enumerate() {
            let p = inner(bi, bj);
            report.record(p.abs(), || format!("<{},{}>", b_labels[i], b_labels[j]));
        }
        let p = inner(&a_series[i], &a_series[i]);
        report.record(p.abs(), || format!("<{},{}>", a_labels[i], a_labels[i]));
    }
    for (i, ai) in a_series.iter().enumerate() {
        for (j, aj) in a_series.iter().enumerate().skip(i + 1) {
            let p = inner(ai, aj);
            report.record(p.abs(), || format!("<{},{}>", a_labels[i], a_labels[j]));
        }
    }
    report
}

/// Expand a series over the admissible basis via the dual pairing; errors
/// if a nonzero residual survives (the series then lies outside the span).
pub fn expand_in_basis<S: Scalar>(
    z: &FourierSeries<S>,
    tol: f64,
) -> Result<Vec<(BasisLabel, S)>, ClassicalError> {
    let mut candidates: Vec<BasisLabel> = Vec::new();
    for (&m, _) in z.support() {
        let rep = if m == (0, 0) {
            (0, 0)
        } else if index_admissible(m) {
            m
        } else {
            (-m.0, -m.1)
        };
        for family in [Family::U, Family::UTilde, Family::T, Family::TTilde] {
            if is_admissible(family, rep) {
                let l = BasisLabel::indexed(family, rep.0, rep.1);
                if !candidates.contains(&l) {
                    candidates.push(l);
                }
            }
        }
    }
    let mut terms = Vec::new();
    let mut residual = z.clone();
    for label in candidates {
        let coeff = inner(z, &dual_series::<S>(&label));
        if coeff.is_zero_tol(tol) {
            continue;
        }
        residual = residual.sub(&series_of::<S>(&label).scale(&coeff));
        terms.push((label, coeff));
    }
    if !residual.is_zero_tol(tol) {
        return Err(ClassicalError::InadmissibleLabel(format!(
            "expansion leaves residual {:.3e}",
            residual.max_abs()
        )));
    }
    terms.sort_by(|(a, _), (b, _)| a.cmp(b));
    Ok(terms)
}

/// Mixed structure constants on a window: expands every `{B_a, A_b}` in
/// the basis, requires the expansion to take the compatible shape
/// `Γ_bd^a T^d − Δ_b^{ad} U_d`, and cross-checks each coefficient against
/// the corresponding pure bracket.  Returns the window-truncated tables
/// together with the consistency report.
pub fn mixed_constants<S: Scalar>(w: i64) -> (StructureConstants<S>, VerificationReport) {
    assert!(w >= 2, "window must be at least 2");
    let (a_labels, b_labels) = window_labels(w);
    let tol = S::default_tol();
    let mut report = VerificationReport::new("classical-mixed-constants", tol);
    let mut sc = StructureConstants::new(a_labels.clone());

    let a_series: Vec<FourierSeries<S>> = a_labels.iter().map(series_of).collect();
    let b_series: Vec<FourierSeries<S>> = b_labels.iter().map(series_of).collect();

    // Pure tables (window-truncated) with closure checks.
    for i in 0..a_series.len() {
        for j in i + 1..a_series.len() {
            let z = poisson(&a_series[i], &a_series[j]);
            match expand_in_basis(&z, tol) {
                Ok(terms) => {
                    for (label, coeff) in terms {
                        match label {
                            BasisLabel::Indexed { family: Family::U | Family::UTilde, .. } => {
                                if let Some(k) = a_labels.iter().position(|l| *l == label) {
                                    sc.add_gamma(i, j, k, coeff);
                                }
                            }
                            _ => report.record(coeff.abs(), || {
                                format!("{{{},{}}} leaves A", a_labels[i], a_labels[j])
                            }),
                        }
                    }
                }
                Err(e) => report.record(f64::INFINITY, || e.to_string()),
            }
            let z = poisson(&b_series[i], &b_series[j]);
            match expand_in_basis(&z, tol) {
                Ok(terms) => {
                    for (label, coeff) in terms {
                        match label {
                            BasisLabel::Indexed { family: Family::T | Family::TTilde, .. } => {
                                if let Some(k) = b_labels.iter().position(|l| *l == label) {
                                    sc.add_delta(i, j, k, coeff);
                                }
                            }
                            _ => report.record(coeff.abs(), || {
                                format!("{{{},{}}} leaves B", b_labels[i], b_labels[j])
                            }),
                        }
                    }
                }
                Err(e) => report.record(f64::INFINITY, || e.to_string()),
            }
        }
    }

    // Mixed brackets: {B_a, A_b} = Γ_bd^a B_d − Δ_b^{ad} A_d with each
    // coefficient checked against the defining pure bracket.
    for (a_idx, ba) in b_series.iter().enumerate() {
        for (b_idx, ab) in a_series.iter().enumerate() {
            let z = poisson(ba, ab);
            let terms = match expand_in_basis(&z, tol) {
                Ok(t) => t,
                Err(e) => {
                    report.record(f64::INFINITY, || e.to_string());
                    continue;
                }
            };
            for (label, coeff) in terms {
                let BasisLabel::Indexed { family, index } = label else { unreachable!() };
                match family {
                    Family::T | Family::TTilde => {
                        // coefficient must equal Γ_{b,d}^a where d is this label's
                        // A-side partner
                        let d_a = classical_basis::<S>(dual_family(family), index).unwrap();
                        let gamma = inner(
                            &poisson(&a_series[b_idx], &d_a),
                            &dual_series::<S>(&a_labels[a_idx]),
                        );
                        report.record(coeff.sub(&gamma).abs(), || {
                            format!(
                                "Γ mismatch at [{},{}]->{label}",
                                b_labels[a_idx], a_labels[b_idx]
                            )
                        });
                    }
                    Family::U | Family::UTilde => {
                        // coefficient must equal −Δ_b^{a,d}
                        let d_b = classical_basis::<S>(dual_family(family), index).unwrap();
                        let delta = inner(
                            &poisson(&b_series[a_idx], &d_b),
                            &dual_series::<S>(&b_labels[b_idx]),
                        );
                        report.record(coeff.add(&delta).abs(), || {
                            format!(
                                "Δ mismatch at [{},{}]->{label}",
                                b_labels[a_idx], a_labels[b_idx]
                            )
                        });
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    (sc, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloScalar;

    type Series = FourierSeries<CycloScalar>;

    fn e(m: Mode) -> Series {
        Series::exponential(m)
    }

    fn basis(f: Family, m: Mode) -> Series {
        classical_basis(f, m).unwrap()
    }

    #[test]
    fn poisson_of_exponentials() {
        // {e_(1,0), e_(0,1)} = -e_(1,1)
        let got = poisson(&e((1, 0)), &e((0, 1)));
        assert!(got.sub(&e((1, 1)).neg()).is_zero());
        // {φ, φ} = 0
        let phi = e((1, 2)).add(&e((-3, 1)).scale(&CycloScalar::i()));
        assert!(poisson(&phi, &phi).is_zero());
    }

    #[test]
    fn trigonometric_identity_oracle() {
        // sin x₁ sin x₂ = ½(cos(x₁-x₂) − cos(x₁+x₂)) as series.
        let sin1 = basis(Family::UTilde, (1, 0));
        let sin2 = basis(Family::UTilde, (0, 1));
        let lhs = sin1.mul(&sin2);
        let rhs = basis(Family::U, (1, -1))
            .sub(&basis(Family::U, (1, 1)))
            .scale(&CycloScalar::from_ratio(1, 2));
        assert!(lhs.sub(&rhs).is_zero());
        // {U_(1,0), U_(0,1)} = ½(−U_(1,1) + U_(1,−1))
        let got = poisson(&basis(Family::U, (1, 0)), &basis(Family::U, (0, 1)));
        let expect = basis(Family::U, (1, 1))
            .neg()
            .add(&basis(Family::U, (1, -1)))
            .scale(&CycloScalar::from_ratio(1, 2));
        assert!(got.sub(&expect).is_zero());
    }

    #[test]
    fn inner_product_examples() {
        // ⟨T^m, U_m⟩ = 1 for m = (2,−1).
        let t = basis(Family::T, (2, -1));
        let u = basis(Family::U, (2, -1));
        assert_eq!(inner(&t, &u), CycloScalar::one());
        // isotropy of the U family
        let u2 = basis(Family::U, (1, 3));
        assert!(inner(&u, &u2).is_zero());
        // ⟨e_(1,2), e_(−1,−2)⟩ = 0: the product is real.
        assert!(inner(&e((1, 2)), &e((-1, -2))).is_zero());
    }

    #[test]
    fn basis_examples() {
        // U_(1,−3) = ½(e_(1,−3) + e_(−1,3))
        let u = basis(Family::U, (1, -3));
        let expect = e((1, -3)).add(&e((-1, 3))).scale(&CycloScalar::from_ratio(1, 2));
        assert!(u.sub(&expect).is_zero());
        // T^(0,0) = i
        let t0 = basis(Family::T, (0, 0));
        assert_eq!(t0.coeff((0, 0)), CycloScalar::i());
        // T̃^(0,2) = e_(0,2) − e_(0,−2)
        let tt = basis(Family::TTilde, (0, 2));
        assert!(tt.sub(&e((0, 2)).sub(&e((0, -2)))).is_zero());
        // inadmissible labels rejected
        assert!(classical_basis::<CycloScalar>(Family::U, (-1, 2)).is_err());
        assert!(classical_basis::<CycloScalar>(Family::UTilde, (0, 0)).is_err());
    }

    #[test]
    fn membership_shapes() {
        // U/Ũ series are real-valued; T/T̃ have support in m₁ ≥ 0 with the
        // anti-real condition on the m₁ = 0 line.
        for (f, m) in [(Family::U, (2, -1)), (Family::UTilde, (1, 4)), (Family::U, (0, 3))] {
            assert!(basis(f, m).is_real_valued(0.0), "{f:?} {m:?}");
        }
        for (f, m) in [(Family::T, (2, -1)), (Family::TTilde, (0, 2)), (Family::T, (0, 0))] {
            let s = basis(f, m);
            assert!(s.support().all(|(&(m1, _), _)| m1 >= 0));
            // ψ*_{0,m₂} = −ψ_{0,−m₂} on the zero line
            for (&(m1, m2), c) in s.support() {
                if m1 == 0 {
                    assert_eq!(c.conj(), s.coeff((0, -m2)).neg());
                }
            }
        }
    }

    #[test]
    fn printed_table_spot_checks() {
        // m=(0,2), n=(1,1): {T^(0,2), T^n} = −2(T̃^(1,3) − T̃^(1,−1))
        let got = poisson(&basis(Family::T, (0, 2)), &basis(Family::T, (1, 1)));
        let expect = basis(Family::TTilde, (1, 3))
            .sub(&basis(Family::TTilde, (1, -1)))
            .scale(&CycloScalar::from_int(-2));
        assert!(got.sub(&expect).is_zero());
        // m=(2,1), n=(1,1): {Ũ_m, Ũ_n} = ½·1·(U_(3,2) + U_(1,0))
        let got = poisson(&basis(Family::UTilde, (2, 1)), &basis(Family::UTilde, (1, 1)));
        let expect = basis(Family::U, (3, 2))
            .add(&basis(Family::U, (1, 0)))
            .scale(&CycloScalar::from_ratio(1, 2));
        assert!(got.sub(&expect).is_zero());
    }

    #[test]
    fn zero_line_brackets_vanish() {
        for f1 in [Family::U, Family::UTilde, Family::T, Family::TTilde] {
            for f2 in [Family::U, Family::UTilde, Family::T, Family::TTilde] {
                for m2 in 1..=3 {
                    for n2 in 1..=3 {
                        if !is_admissible(f1, (0, m2)) || !is_admissible(f2, (0, n2)) {
                            continue;
                        }
                        let z = poisson(&basis(f1, (0, m2)), &basis(f2, (0, n2)));
                        assert!(z.is_zero(), "{f1:?},{f2:?},({m2},{n2})");
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_tables_window_3() {
        let rep = bracket_table_check::<CycloScalar>(3);
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.worst_residual, 0.0);
    }

    #[test]
    fn duality_window_3() {
        let rep = pairing_gram_check::<CycloScalar>(3);
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn seminorm_examples() {
        let one = e((0, 0));
        for k in 0..4 {
            assert_eq!(schwartz_seminorm(&one, k), 1.0);
        }
        assert_eq!(schwartz_seminorm(&e((1, 1)), 2), 9.0);
        let phi = e((2, 0)).scale(&CycloScalar::from_ratio(1, 2)).add(&e((0, 1)));
        assert_eq!(schwartz_seminorm(&phi, 1), 2.0);
    }

    #[test]
    fn mixed_example_expansions() {
        // {T^(1,0), U_(2,1)} = −½T^(3,1) + ½T^(1,1) + 2Ũ_(1,1)
        let z = poisson(&basis(Family::T, (1, 0)), &basis(Family::U, (2, 1)));
        let terms = expand_in_basis(&z, 0.0).unwrap();
        let find = |f: Family, m: Mode| {
            terms
                .iter()
                .find(|(l, _)| *l == BasisLabel::indexed(f, m.0, m.1))
                .map(|(_, c)| c.clone())
                .unwrap_or_else(CycloScalar::zero)
        };
        assert_eq!(find(Family::T, (3, 1)), CycloScalar::from_ratio(-1, 2));
        assert_eq!(find(Family::T, (1, 1)), CycloScalar::from_ratio(1, 2));
        assert_eq!(find(Family::UTilde, (1, 1)), CycloScalar::from_int(2));
        assert_eq!(terms.len(), 3);

        // {T^(2,0), U_(1,1)}: the greater-first-component case stays in the
        // T family.
        let z = poisson(&basis(Family::T, (2, 0)), &basis(Family::U, (1, 1)));
        let terms = expand_in_basis(&z, 0.0).unwrap();
        assert!(terms.iter().all(|(l, _)| matches!(
            l,
            BasisLabel::Indexed { family: Family::T | Family::TTilde, .. }
        )));

        // both supported on the zero line: zero bracket
        let z = poisson(&basis(Family::T, (0, 1)), &basis(Family::U, (0, 3)));
        assert!(z.is_zero());
    }

    #[test]
    fn mixed_constants_window_2() {
        let (sc, rep) = mixed_constants::<CycloScalar>(2);
        assert!(rep.pass, "{rep:?}");
        assert!(sc.gamma_entry_count() > 0);
        assert!(sc.delta_entry_count() > 0);
    }

    #[test]
    fn classical_limit_rate() {
        // |(N/2π)·2·sin(πk/N) − k| ≤ π²k³/(6N²)
        for &n in &[100.0f64, 1000.0, 10000.0] {
            for k in 1..=10 {
                let kf = k as f64;
                let lhs = (n / std::f64::consts::PI) * (std::f64::consts::PI * kf / n).sin() - kf;
                let bound = std::f64::consts::PI.powi(2) * kf.powi(3) / (6.0 * n * n);
                assert!(lhs.abs() <= bound, "N={n} k={k}: {} vs {}", lhs.abs(), bound);
            }
        }
    }
}
