//! Closed-form structure constants of the torus bases, computed without
//! matrices.
//!
//! Elements are formal combinations of `e`-symbols (anti-hermitian side)
//! and `f`-symbols (Borel side) on the canonical index grid `[0,N)²`.
//! Products follow the sine-algebra laws, index wrap-around carries the
//! `(-1)` factors of the quasi-periodicity identities, and the pairing is
//! evaluated from the geometric-sum trace formula
//!
//! ```text
//! Tr(f_{a,b} e_{r,s}) = δ_N(a+r) · ζ_2N^{-a(b+s)} · Σ_{m=a}^{N-1} ω^{m(b+s)}
//! ```
//!
//! so [`sine_constants`] is an independent route against which the matrix
//! extraction is cross-checked.

use super::{catalog_slots, CatalogSlot, TorusError};
use crate::bialgebra::StructureConstants;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

type Sym = (u32, u32);

/// Canonicalize `e_{r,s}`: the representative on `[0,N)²` and the sign from
/// `e_{r+N,s} = (-1)^s e_{r,s}`, `e_{r,s+N} = (-1)^r e_{r,s}`.
fn fold_e(n: u32, r: i64, s: i64) -> (Sym, i64) {
    let nn = n as i64;
    let r0 = r.rem_euclid(nn);
    let alpha = (r - r0) / nn;
    let mut sign = if (alpha * s).rem_euclid(2) == 0 { 1 } else { -1 };
    let s0 = s.rem_euclid(nn);
    let beta = (s - s0) / nn;
    if (beta * r0).rem_euclid(2) != 0 {
        sign = -sign;
    }
    ((r0 as u32, s0 as u32), sign)
}

/// Canonicalize `f_{a,b}` for `0 ≤ a ≤ N`: `None` when the symbol vanishes
/// (`a = N`), otherwise the representative with the sign from
/// `f_{a,b+N} = (-1)^a f_{a,b}`.
fn fold_f(n: u32, a: i64, b: i64) -> Option<(Sym, i64)> {
    let nn = n as i64;
    debug_assert!((0..=nn).contains(&a));
    if a == nn {
        return None;
    }
    let b0 = b.rem_euclid(nn);
    let beta = (b - b0) / nn;
    let sign = if (a * beta).rem_euclid(2) == 0 { 1 } else { -1 };
    Some(((a as u32, b0 as u32), sign))
}

/// `f̃_{a,b} = (-1)^b f_{N-a,-b}` reduced to the canonical `f`-grid.
fn ftilde_as_f(n: u32, a: i64, b: i64) -> Option<(Sym, i64)> {
    let (sym, mut sign) = fold_f(n, n as i64 - a, -b)?;
    if b.rem_euclid(2) != 0 {
        sign = -sign;
    }
    Some((sym, sign))
}

/// Finitely supported formal combination of canonical symbols.
#[derive(Clone, Debug)]
pub(crate) struct SymVec<S> {
    terms: BTreeMap<Sym, S>,
}

impl<S: Scalar> SymVec<S> {
    fn new() -> Self {
        SymVec { terms: BTreeMap::new() }
    }

    fn push(&mut self, sym: Sym, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(sym).or_insert_with(S::zero);
        *slot = slot.add(&coeff);
        if slot.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (&Sym, &S)> {
        self.terms.iter()
    }
}

/// `ω^k` at the ambient order for dimension `n`.
fn omega_pow<S: Scalar>(n: u32, k: i64) -> S {
    S::half_root(n, 2 * k)
}

/// The anti-hermitian side of a slot as an `e`-symbol vector:
/// `U = (i/√N)(e + e*)`, `Ũ = (1/√N)(e - e*)`.
pub(crate) fn slot_e_vec<S: Scalar>(n: u32, slot: &CatalogSlot) -> SymVec<S> {
    let inv_sqrt_n = S::sqrt_nat(n).inv().expect("nonzero");
    let (r, s) = (slot.r as i64, slot.s as i64);
    let mut v = SymVec::new();
    let (conj_sym, conj_sign) = fold_e(n, -r, -s);
    if slot.tilde {
        v.push((slot.r, slot.s), inv_sqrt_n.clone());
        v.push(conj_sym, inv_sqrt_n.scale_int(-conj_sign));
    } else {
        let coeff = S::i().mul(&inv_sqrt_n);
        v.push((slot.r, slot.s), coeff.clone());
        v.push(conj_sym, coeff.scale_int(conj_sign));
    }
    v
}

/// The Borel side of a slot as an `f`-symbol vector (see the module notes
/// on the diagonal and self-paired normalisations).
pub(crate) fn slot_f_vec<S: Scalar>(n: u32, slot: &CatalogSlot) -> SymVec<S> {
    let inv_sqrt_n = S::sqrt_nat(n).inv().expect("nonzero");
    let half = S::from_ratio(1, 2);
    let mut v = SymVec::new();
    if slot.diagonal {
        let b = slot.s as i64;
        let mut scale = inv_sqrt_n.mul(&half);
        if slot.self_paired {
            scale = scale.mul(&half);
        }
        let (pos, pos_sign) = fold_f(n, 0, b).expect("a=0 never vanishes");
        let (neg, neg_sign) = fold_f(n, 0, -b).expect("a=0 never vanishes");
        if slot.tilde {
            let c = scale.mul(&S::i()).neg();
            v.push(pos, c.scale_int(pos_sign));
            v.push(neg, c.scale_int(-neg_sign));
        } else {
            v.push(pos, scale.scale_int(pos_sign));
            v.push(neg, scale.scale_int(neg_sign));
        }
    } else {
        let (a, b) = (slot.r as i64, slot.s as i64);
        let mut scale = inv_sqrt_n;
        if slot.self_paired {
            scale = scale.mul(&half);
        }
        let tilde_part = ftilde_as_f(n, a, b);
        if slot.tilde {
            let c = scale.mul(&S::i()).neg();
            v.push((slot.r, slot.s), c.clone());
            if let Some((sym, sign)) = tilde_part {
                v.push(sym, c.scale_int(-sign));
            }
        } else {
            v.push((slot.r, slot.s), scale.clone());
            if let Some((sym, sign)) = tilde_part {
                v.push(sym, scale.scale_int(sign));
            }
        }
    }
    v
}

/// `[Σ a_i e_i, Σ b_j e_j]` via `[e_x, e_y] = (ζ^{x∧y} - ζ^{-x∧y}) e_{x+y}`
/// with `ζ = ζ_2N` and `x∧y = x_1 y_2 - x_2 y_1`.
fn e_commutator<S: Scalar>(n: u32, x: &SymVec<S>, y: &SymVec<S>) -> SymVec<S> {
    let mut out = SymVec::new();
    for (&(j, k), cx) in x.terms() {
        for (&(r, s), cy) in y.terms() {
            let wedge = j as i64 * s as i64 - k as i64 * r as i64;
            let coeff = S::half_root(n, wedge).sub(&S::half_root(n, -wedge));
            if coeff.is_zero() {
                continue;
            }
            let (sym, sign) = fold_e(n, (j + r) as i64, (k + s) as i64);
            out.push(sym, cx.mul(cy).mul(&coeff).scale_int(sign));
        }
    }
    out
}

/// Product of canonical `f`-symbols:
/// `f_{a,b} f_{r,s} = ζ_2N^{as-br} f_{a+r,b+s}`, zero once `a + r ≥ N`.
fn f_product_term<S: Scalar>(n: u32, x: Sym, y: Sym) -> Option<(Sym, S)> {
    let (a, b) = (x.0 as i64, x.1 as i64);
    let (r, s) = (y.0 as i64, y.1 as i64);
    if a + r >= n as i64 {
        return None;
    }
    let coeff = S::half_root(n, a * s - b * r);
    let (sym, sign) = fold_f(n, a + r, b + s)?;
    Some((sym, coeff.scale_int(sign)))
}

fn f_commutator<S: Scalar>(n: u32, x: &SymVec<S>, y: &SymVec<S>) -> SymVec<S> {
    let mut out = SymVec::new();
    for (&sx, cx) in x.terms() {
        for (&sy, cy) in y.terms() {
            if let Some((sym, coeff)) = f_product_term::<S>(n, sx, sy) {
                out.push(sym, cx.mul(cy).mul(&coeff));
            }
            if let Some((sym, coeff)) = f_product_term::<S>(n, sy, sx) {
                out.push(sym, cx.mul(cy).mul(&coeff).neg());
            }
        }
    }
    out
}

/// Cache of the truncated geometric sums `Σ_{m=a}^{N-1} ω^{mc}`.
struct GeoSums<S> {
    table: Vec<Vec<S>>,
}

impl<S: Scalar> GeoSums<S> {
    fn new(n: u32) -> Self {
        let mut table = Vec::with_capacity(n as usize);
        for a in 0..n {
            let mut row = Vec::with_capacity(n as usize);
            for c in 0..n {
                let mut acc = S::zero();
                for m in a..n {
                    acc = acc.add(&omega_pow::<S>(n, m as i64 * c as i64));
                }
                row.push(acc);
            }
            table.push(row);
        }
        GeoSums { table }
    }

    /// `Tr(f_{a,b} e_{r,s})`, nonzero only when `a + r ≡ 0 (mod N)`.
    /// On the canonical grid (`r = N - a` rather than `-a`) the phase is
    /// `ζ_2N^{-ab - rs - 2sa}`, which reduces to the `ω^{-a(b+s)/2}` of the
    /// `r = -a` form up to the wrap sign `(-1)^s`.
    fn trace_fe(&self, n: u32, f: Sym, e: Sym) -> Option<S> {
        let (a, b) = (f.0 as i64, f.1 as i64);
        let (r, s) = (e.0 as i64, e.1 as i64);
        if (a + r) % n as i64 != 0 {
            return None;
        }
        let phase = S::half_root(n, -a * b - r * s - 2 * s * a);
        let geo = &self.table[f.0 as usize][((b + s) % n as i64) as usize];
        Some(phase.mul(geo))
    }
}

/// `Im Tr(E · F)` for symbol vectors of the two kinds.
fn pairing_ef<S: Scalar>(n: u32, geo: &GeoSums<S>, e: &SymVec<S>, f: &SymVec<S>) -> S {
    let mut acc = S::zero();
    for (&fe, cf) in f.terms() {
        for (&ee, ce) in e.terms() {
            if let Some(tr) = geo.trace_fe(n, fe, ee) {
                acc = acc.add(&tr.mul(cf).mul(ce));
            }
        }
    }
    acc.imag()
}

/// Closed-form structure constants of the torus splitting for dimension
/// `n`, computed purely from the symbol algebra.  Label order matches
/// [`super::manin_witness`], so the result is directly comparable with the
/// matrix extraction.
pub fn sine_constants<S: Scalar>(n: u32) -> Result<StructureConstants<S>, TorusError> {
    if n < 2 {
        return Err(TorusError::InvalidDimension(n));
    }
    let slots = catalog_slots(n);
    // Witness order: diagonal slots first, then the non-diagonal ones.
    let mut ordered: Vec<&CatalogSlot> = slots.iter().filter(|s| s.diagonal).collect();
    ordered.extend(slots.iter().filter(|s| !s.diagonal));

    let labels = ordered.iter().map(|s| s.a_label()).collect::<Vec<_>>();
    let e_vecs: Vec<SymVec<S>> = ordered.iter().map(|s| slot_e_vec(n, s)).collect();
    let f_vecs: Vec<SymVec<S>> = ordered.iter().map(|s| slot_f_vec(n, s)).collect();
    let geo = GeoSums::new(n);

    // Candidate pruning indexes: which basis slots can pair with a symbol
    // of a given first index (the trace couples a with N-a only).
    let mut f_by_first: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
    for (idx, fv) in f_vecs.iter().enumerate() {
        let mut seen = [false; 64];
        for (&(a, _), _) in fv.terms() {
            if !seen[a as usize] {
                seen[a as usize] = true;
                f_by_first[a as usize].push(idx);
            }
        }
    }
    let mut e_by_first: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
    for (idx, ev) in e_vecs.iter().enumerate() {
        let mut seen = [false; 64];
        for (&(r, _), _) in ev.terms() {
            if !seen[r as usize] {
                seen[r as usize] = true;
                e_by_first[r as usize].push(idx);
            }
        }
    }

    let count = ordered.len();
    let mut sc = StructureConstants::new(labels);
    let mut candidates: Vec<usize> = Vec::new();

    for i in 0..count {
        for j in i + 1..count {
            // Γ: expand [A_i, A_j] against the Borel duals.
            let bracket = e_commutator(n, &e_vecs[i], &e_vecs[j]);
            candidates.clear();
            for (&(r, _), _) in bracket.terms() {
                candidates.extend_from_slice(&f_by_first[((n - r) % n) as usize]);
            }
            candidates.sort_unstable();
            candidates.dedup();
            for &c in &candidates {
                let v = pairing_ef(n, &geo, &bracket, &f_vecs[c]);
                if !v.is_zero_tol(S::default_tol()) {
                    sc.add_gamma(i, j, c, v);
                }
            }

            // Δ: expand [B_i, B_j] against the anti-hermitian duals.
            let bracket = f_commutator(n, &f_vecs[i], &f_vecs[j]);
            candidates.clear();
            for (&(a, _), _) in bracket.terms() {
                candidates.extend_from_slice(&e_by_first[((n - a) % n) as usize]);
            }
            candidates.sort_unstable();
            candidates.dedup();
            for &c in &candidates {
                let v = pairing_ef(n, &geo, &e_vecs[c], &bracket);
                if !v.is_zero_tol(S::default_tol()) {
                    sc.add_delta(i, j, c, v);
                }
            }
        }
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::super::{build_generator, GeneratorKind, TorusGeneratorSpec};
    use super::*;
    use crate::matrix::SquareMatrix;
    use crate::scalar::CycloScalar;

    fn sym_to_matrix_e(n: u32, v: &SymVec<CycloScalar>) -> SquareMatrix<CycloScalar> {
        let mut acc = SquareMatrix::zeros(n as usize);
        for (&(r, s), c) in v.terms() {
            let m = build_generator::<CycloScalar>(TorusGeneratorSpec {
                n,
                kind: GeneratorKind::E { r: r as i64, s: s as i64 },
            })
            .unwrap();
            acc = acc.add(&m.scale(c));
        }
        acc
    }

    fn sym_to_matrix_f(n: u32, v: &SymVec<CycloScalar>) -> SquareMatrix<CycloScalar> {
        let mut acc = SquareMatrix::zeros(n as usize);
        for (&(a, b), c) in v.terms() {
            let m = build_generator::<CycloScalar>(TorusGeneratorSpec {
                n,
                kind: GeneratorKind::F { a: a as i64, b: b as i64 },
            })
            .unwrap();
            acc = acc.add(&m.scale(c));
        }
        acc
    }

    #[test]
    fn fold_e_matches_matrices() {
        for n in [3u32, 4] {
            for r in -5..(2 * n as i64) {
                for s in -5..(2 * n as i64) {
                    let direct = build_generator::<CycloScalar>(TorusGeneratorSpec {
                        n,
                        kind: GeneratorKind::E { r, s },
                    })
                    .unwrap();
                    let (sym, sign) = fold_e(n, r, s);
                    let folded = build_generator::<CycloScalar>(TorusGeneratorSpec {
                        n,
                        kind: GeneratorKind::E { r: sym.0 as i64, s: sym.1 as i64 },
                    })
                    .unwrap()
                    .scale(&CycloScalar::from_int(sign));
                    assert!(direct.sub(&folded).is_zero(), "N={n} e({r},{s})");
                }
            }
        }
    }

    #[test]
    fn ftilde_reduction_matches_matrices() {
        for n in [3u32, 4, 5] {
            for a in 0..=n as i64 {
                for b in -3..(2 * n as i64) {
                    let direct = build_generator::<CycloScalar>(TorusGeneratorSpec {
                        n,
                        kind: GeneratorKind::FTilde { a, b },
                    })
                    .unwrap();
                    let reduced = match ftilde_as_f(n, a, b) {
                        None => SquareMatrix::zeros(n as usize),
                        Some((sym, sign)) => build_generator::<CycloScalar>(TorusGeneratorSpec {
                            n,
                            kind: GeneratorKind::F { a: sym.0 as i64, b: sym.1 as i64 },
                        })
                        .unwrap()
                        .scale(&CycloScalar::from_int(sign)),
                    };
                    assert!(direct.sub(&reduced).is_zero(), "N={n} ft({a},{b})");
                }
            }
        }
    }

    #[test]
    fn slot_vectors_reproduce_catalog_matrices() {
        for n in [3u32, 4, 5] {
            for slot in catalog_slots(n) {
                let from_e = sym_to_matrix_e(n, &slot_e_vec::<CycloScalar>(n, &slot));
                let direct = super::super::slot_a_matrix::<CycloScalar>(n, &slot);
                assert!(from_e.sub(&direct).is_zero(), "N={n} slot {:?}", slot);
                let from_f = sym_to_matrix_f(n, &slot_f_vec::<CycloScalar>(n, &slot));
                let direct = super::super::slot_b_matrix::<CycloScalar>(n, &slot);
                assert!(from_f.sub(&direct).is_zero(), "N={n} dual slot {:?}", slot);
            }
        }
    }

    #[test]
    fn trace_formula_matches_matrix_traces() {
        // The geometric-sum formula for Tr(f e) against literal products.
        for n in [3u32, 4, 5] {
            let geo = GeoSums::<CycloScalar>::new(n);
            for a in 0..n {
                for b in 0..n {
                    for r in 0..n {
                        for s in 0..n {
                            let f = build_generator::<CycloScalar>(TorusGeneratorSpec {
                                n,
                                kind: GeneratorKind::F { a: a as i64, b: b as i64 },
                            })
                            .unwrap();
                            let e = build_generator::<CycloScalar>(TorusGeneratorSpec {
                                n,
                                kind: GeneratorKind::E { r: r as i64, s: s as i64 },
                            })
                            .unwrap();
                            let direct = f.mul(&e).trace();
                            let formula = geo
                                .trace_fe(n, (a, b), (r, s))
                                .unwrap_or_else(CycloScalar::zero);
                            assert_eq!(direct, formula, "N={n} f({a},{b}) e({r},{s})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sine_constants_diagonal_sector_is_abelian() {
        // All Γ entries between diagonal labels vanish: 𝔱 is abelian.
        let sc = sine_constants::<CycloScalar>(5).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..sc.len() {
                    assert!(sc.gamma_entry(a, b, c).is_zero(), "({a},{b})->{c}");
                }
            }
        }
    }
}
