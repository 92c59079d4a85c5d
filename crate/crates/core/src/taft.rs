//! The Taft Hopf algebra `T_N` and its Galois objects `A_s`.
//!
//! Both live in one family of `N²`-dimensional monomial algebras with
//! basis `r^a g^b` (`0 ≤ a, b < N`), relations `g^N = 1`, `rg = ω gr`
//! (`ω = e^{2πi/N}`), and `r^N` equal to a scalar: `0` for `T_N`, the
//! classifying parameter `s` for `A_s`.  Monomials are kept in the normal
//! order with `g` on the right, so
//! `(r^a g^b)(r^c g^d) = ω^{-bc} r^{a+c} g^{b+d}`.
//!
//! `T_N` carries the Hopf structure `Δ(R) = 1⊗R + R⊗G`, `Δ(G) = G⊗G`,
//! `ε(R) = 0`, `ε(G) = 1`, `S(R) = -RG^{-1}`, `S(G) = G^{-1}` (the source
//! prints the last one as `S(Q)`; the generator meant is `G`), with
//! `g^{-1} = g^{N-1}`.

use crate::bialgebra::VerificationReport;
use crate::matrix::{row_rank, solve_many};
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TaftError {
    #[error("algebra dimension must be at least 2, got {0}")]
    InvalidDimension(u32),
    #[error("canonical map is singular, translation map undefined")]
    SingularCanonicalMap,
}

/// Presentation data of one monomial algebra in the family.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec<S> {
    pub n: u32,
    /// The scalar value of `r^N`.
    pub r_pow: S,
}

impl<S: Scalar> AlgebraSpec<S> {
    /// The Taft algebra: `r^N = 0`.
    pub fn taft(n: u32) -> Self {
        AlgebraSpec { n, r_pow: S::zero() }
    }

    /// The Galois object `A_s`: `r^N = s`.
    pub fn galois(n: u32, s: S) -> Self {
        AlgebraSpec { n, r_pow: s }
    }

    pub fn dim(&self) -> usize {
        (self.n * self.n) as usize
    }

    fn omega(&self, k: i64) -> S {
        S::root_of_unity(self.n, k)
    }

    fn mono_index(&self, a: u32, b: u32) -> usize {
        (a * self.n + b) as usize
    }

    /// Product of two basis monomials: the target index and coefficient.
    /// `None` when the product vanishes (`r^N = 0` case).
    fn mono_mul(&self, a1: u32, b1: u32, a2: u32, b2: u32) -> Option<(usize, S)> {
        let n = self.n;
        let mut coeff = self.omega(-(b1 as i64) * a2 as i64);
        let mut a = a1 + a2;
        if a >= n {
            coeff = coeff.mul(&self.r_pow);
            if coeff.is_zero() {
                return None;
            }
            a -= n;
        }
        let b = (b1 + b2) % n;
        Some((self.mono_index(a, b), coeff))
    }
}

/// An element of a monomial algebra, dense over the `r^a g^b` basis.
#[derive(Clone, Debug)]
pub struct Element<S> {
    pub alg: AlgebraSpec<S>,
    pub coeffs: Vec<S>,
}

/// An element of the Taft algebra `T_N`.
pub type TaftElement<S> = Element<S>;
/// An element of a Galois object `A_s`.
pub type GaloisElement<S> = Element<S>;

impl<S: Scalar> Element<S> {
    pub fn zero(alg: &AlgebraSpec<S>) -> Self {
        Element { alg: alg.clone(), coeffs: vec![S::zero(); alg.dim()] }
    }

    pub fn monomial(alg: &AlgebraSpec<S>, a: u32, b: u32) -> Self {
        let mut el = Self::zero(alg);
        el.coeffs[alg.mono_index(a % alg.n, b % alg.n)] = S::one();
        el
    }

    pub fn one(alg: &AlgebraSpec<S>) -> Self {
        Self::monomial(alg, 0, 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.alg, rhs.alg, "algebra mismatch");
        Element {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Element { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, k: &S) -> Self {
        Element { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.alg, rhs.alg, "algebra mismatch");
        let n = self.alg.n;
        let mut out = Self::zero(&self.alg);
        for a1 in 0..n {
            for b1 in 0..n {
                let c1 = &self.coeffs[self.alg.mono_index(a1, b1)];
                if c1.is_zero() {
                    continue;
                }
                for a2 in 0..n {
                    for b2 in 0..n {
                        let c2 = &rhs.coeffs[self.alg.mono_index(a2, b2)];
                        if c2.is_zero() {
                            continue;
                        }
                        if let Some((idx, w)) = self.alg.mono_mul(a1, b1, a2, b2) {
                            out.coeffs[idx] = out.coeffs[idx].add(&c1.mul(c2).mul(&w));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.alg);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_tol(tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

/// An element of a tensor product of two monomial algebras, dense over the
/// product basis.
#[derive(Clone, Debug)]
pub struct TensorElement<S> {
    pub left: AlgebraSpec<S>,
    pub right: AlgebraSpec<S>,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(left: &AlgebraSpec<S>, right: &AlgebraSpec<S>) -> Self {
        let dim = left.dim() * right.dim();
        TensorElement { left: left.clone(), right: right.clone(), coeffs: vec![S::zero(); dim] }
    }

    pub fn pure(l: &Element<S>, r: &Element<S>) -> Self {
        let mut out = Self::zero(&l.alg, &r.alg);
        let dr = r.alg.dim();
        for (i, ci) in l.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in r.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                out.coeffs[i * dr + j] = ci.mul(cj);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((&self.left, &self.right), (&rhs.left, &rhs.right), "tensor mismatch");
        TensorElement {
            left: self.left.clone(),
            right: self.right.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&S::from_int(-1)))
    }

    pub fn scale(&self, k: &S) -> Self {
        TensorElement {
            left: self.left.clone(),
            right: self.right.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul(k)).collect(),
        }
    }

    /// Componentwise algebra product `(x⊗y)(x'⊗y') = xx' ⊗ yy'`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((&self.left, &self.right), (&rhs.left, &rhs.right), "tensor mismatch");
        let nl = self.left.n;
        let nr = self.right.n;
        let dr = self.right.dim();
        let mut out = Self::zero(&self.left, &self.right);
        for (i1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            let (la1, lb1) = ((i1 / dr) as u32 / nl, (i1 / dr) as u32 % nl);
            let (ra1, rb1) = ((i1 % dr) as u32 / nr, (i1 % dr) as u32 % nr);
            for (i2, c2) in rhs.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                let (la2, lb2) = ((i2 / dr) as u32 / nl, (i2 / dr) as u32 % nl);
                let (ra2, rb2) = ((i2 % dr) as u32 / nr, (i2 % dr) as u32 % nr);
                let Some((li, lw)) = self.left.mono_mul(la1, lb1, la2, lb2) else { continue };
                let Some((ri, rw)) = self.right.mono_mul(ra1, rb1, ra2, rb2) else { continue };
                let idx = li * dr + ri;
                out.coeffs[idx] = out.coeffs[idx].add(&c1.mul(c2).mul(&lw).mul(&rw));
            }
        }
        out
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_tol(tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

/// The Hopf structure maps of `T_N` tabulated on the monomial basis.
pub struct HopfStructure<S> {
    pub n: u32,
    pub alg: AlgebraSpec<S>,
    /// `Δ(r^a g^b)` per monomial index.
    pub coproduct: Vec<TensorElement<S>>,
    /// `ε(r^a g^b)` per monomial index.
    pub counit: Vec<S>,
    /// `S(r^a g^b)` per monomial index.
    pub antipode: Vec<Element<S>>,
}

/// Build coproduct, counit and antipode of `T_N`, extended from the
/// generators as (anti)homomorphisms.
pub fn hopf_structure<S: Scalar>(n: u32) -> Result<HopfStructure<S>, TaftError> {
    if n < 2 {
        return Err(TaftError::InvalidDimension(n));
    }
    let alg = AlgebraSpec::<S>::taft(n);
    let one = Element::one(&alg);
    let r = Element::monomial(&alg, 1, 0);
    let g = Element::monomial(&alg, 0, 1);
    let g_inv = Element::monomial(&alg, 0, n - 1);

    // Δ(R) = 1⊗R + R⊗G and Δ(G) = G⊗G.
    let dr = TensorElement::pure(&one, &r).add(&TensorElement::pure(&r, &g));
    let dg = TensorElement::pure(&g, &g);
    // S(R) = −R G^{-1}, S(G) = G^{-1}; S is an anti-homomorphism.
    let sr = r.mul(&g_inv).neg();
    let sg = g_inv;

    let mut coproduct = Vec::with_capacity(alg.dim());
    let mut counit = Vec::with_capacity(alg.dim());
    let mut antipode = Vec::with_capacity(alg.dim());
    for a in 0..n {
        for b in 0..n {
            let mut cp = TensorElement::pure(&one, &one);
            for _ in 0..a {
                cp = cp.mul(&dr);
            }
            for _ in 0..b {
                cp = cp.mul(&dg);
            }
            coproduct.push(cp);
            counit.push(if a == 0 { S::one() } else { S::zero() });
            // S(R^a G^b) = S(G)^b S(R)^a.
            antipode.push(sg.pow(b).mul(&sr.pow(a)));
        }
    }
    Ok(HopfStructure { n, alg, coproduct, counit, antipode })
}

/// Exhaustive Hopf-axiom verification on the monomial basis:
/// coassociativity, the counit laws, the antipode law, and
/// multiplicativity of the coproduct.
pub fn verify_hopf<S: Scalar>(n: u32) -> Result<VerificationReport, TaftError> {
    let hopf = hopf_structure::<S>(n)?;
    let tol = S::default_tol();
    let mut report = VerificationReport::new(format!("taft-hopf-N{n}"), tol);
    let dim = hopf.alg.dim();
    let alg = &hopf.alg;
    let one = Element::one(alg);

    for x in 0..dim {
        let d = &hopf.coproduct[x];
        // (Δ⊗id)Δ = (id⊗Δ)Δ in T⊗T⊗T, flattened as i*dim² + j*dim + k.
        let mut lhs = vec![S::zero(); dim * dim * dim];
        let mut rhs = vec![S::zero(); dim * dim * dim];
        for (ij, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (ij / dim, ij % dim);
            for (pq, c2) in hopf.coproduct[i].coeffs.iter().enumerate() {
                if !c2.is_zero() {
                    let (p, q) = (pq / dim, pq % dim);
                    let slot = &mut lhs[p * dim * dim + q * dim + j];
                    *slot = slot.add(&c.mul(c2));
                }
            }
            for (pq, c2) in hopf.coproduct[j].coeffs.iter().enumerate() {
                if !c2.is_zero() {
                    let (p, q) = (pq / dim, pq % dim);
                    let slot = &mut rhs[i * dim * dim + p * dim + q];
                    *slot = slot.add(&c.mul(c2));
                }
            }
        }
        let worst = lhs
            .iter()
            .zip(&rhs)
            .map(|(a, b)| a.sub(b).abs())
            .fold(0.0, f64::max);
        report.record(worst, || format!("coassociativity at monomial {x}"));

        // Counit laws: (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x).
        let mut left = Element::zero(alg);
        let mut right = Element::zero(alg);
        for (ij, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (ij / dim, ij % dim);
            left.coeffs[j] = left.coeffs[j].add(&c.mul(&hopf.counit[i]));
            right.coeffs[i] = right.coeffs[i].add(&c.mul(&hopf.counit[j]));
        }
        let mut x_el = Element::zero(alg);
        x_el.coeffs[x] = S::one();
        report.record(left.sub(&x_el).max_abs(), || format!("counit-left at {x}"));
        report.record(right.sub(&x_el).max_abs(), || format!("counit-right at {x}"));

        // Antipode law: m(S⊗id)Δ(x) = ε(x)·1 = m(id⊗S)Δ(x).
        let mut m_s_id = Element::zero(alg);
        let mut m_id_s = Element::zero(alg);
        for (ij, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (ij / dim, ij % dim);
            let mut xj = Element::zero(alg);
            xj.coeffs[j] = S::one();
            let mut xi = Element::zero(alg);
            xi.coeffs[i] = S::one();
            m_s_id = m_s_id.add(&hopf.antipode[i].mul(&xj).scale(c));
            m_id_s = m_id_s.add(&xi.mul(&hopf.antipode[j]).scale(c));
        }
        let target = one.scale(&hopf.counit[x]);
        report.record(m_s_id.sub(&target).max_abs(), || format!("antipode-left at {x}"));
        report.record(m_id_s.sub(&target).max_abs(), || format!("antipode-right at {x}"));
    }

    // Δ is an algebra homomorphism: Δ(xy) = Δ(x)Δ(y) on all pairs.
    for x in 0..dim {
        for y in 0..dim {
            let mut ex = Element::zero(alg);
            ex.coeffs[x] = S::one();
            let mut ey = Element::zero(alg);
            ey.coeffs[y] = S::one();
            let prod = ex.mul(&ey);
            let mut d_prod = TensorElement::zero(alg, alg);
            for (k, c) in prod.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    d_prod = d_prod.add(&hopf.coproduct[k].scale(c));
                }
            }
            let rhs = hopf.coproduct[x].mul(&hopf.coproduct[y]);
            report.record(d_prod.sub(&rhs).max_abs(), || format!("Δ multiplicative at ({x},{y})"));
        }
    }
    Ok(report)
}

/// The coaction `δ: A_s → A_s ⊗ T_N` tabulated on the monomial basis,
/// from `δ(r) = 1⊗R + r⊗G`, `δ(g) = g⊗G` extended multiplicatively.
pub fn coaction_table<S: Scalar>(n: u32, s: &S) -> Result<Vec<TensorElement<S>>, TaftError> {
    if n < 2 {
        return Err(TaftError::InvalidDimension(n));
    }
    let a_alg = AlgebraSpec::galois(n, s.clone());
    let t_alg = AlgebraSpec::<S>::taft(n);
    let one_a = Element::one(&a_alg);
    let r_a = Element::monomial(&a_alg, 1, 0);
    let g_a = Element::monomial(&a_alg, 0, 1);
    let r_t = Element::monomial(&t_alg, 1, 0);
    let g_t = Element::monomial(&t_alg, 0, 1);
    let dr = TensorElement::pure(&one_a, &r_t).add(&TensorElement::pure(&r_a, &g_t));
    let dg = TensorElement::pure(&g_a, &g_t);
    let mut table = Vec::with_capacity(a_alg.dim());
    for a in 0..n {
        for b in 0..n {
            let mut img = TensorElement::pure(&one_a, &Element::one(&t_alg));
            for _ in 0..a {
                img = img.mul(&dr);
            }
            for _ in 0..b {
                img = img.mul(&dg);
            }
            let _ = (a, b);
            table.push(img);
        }
    }
    Ok(table)
}

/// Apply the tabulated coaction to an arbitrary element.
pub fn coaction<S: Scalar>(
    table: &[TensorElement<S>],
    x: &GaloisElement<S>,
) -> TensorElement<S> {
    let mut out = TensorElement::zero(&table[0].left, &table[0].right);
    for (k, c) in x.coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&table[k].scale(c));
        }
    }
    out
}

/// Verify the comodule axioms `(δ⊗id)δ = (id⊗Δ)δ` and `(id⊗ε)δ = id`
/// exhaustively on the basis.
pub fn verify_comodule<S: Scalar>(n: u32, s: &S) -> Result<VerificationReport, TaftError> {
    let table = coaction_table(n, s)?;
    let hopf = hopf_structure::<S>(n)?;
    let tol = S::default_tol();
    let mut report = VerificationReport::new(format!("taft-comodule-N{n}"), tol);
    let dim = (n * n) as usize;
    for x in 0..dim {
        let d = &table[x];
        let mut lhs = vec![S::zero(); dim * dim * dim];
        let mut rhs = vec![S::zero(); dim * dim * dim];
        for (ij, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (ij / dim, ij % dim);
            for (pq, c2) in table[i].coeffs.iter().enumerate() {
                if !c2.is_zero() {
                    let (p, q) = (pq / dim, pq % dim);
                    let slot = &mut lhs[p * dim * dim + q * dim + j];
                    *slot = slot.add(&c.mul(c2));
                }
            }
            for (pq, c2) in hopf.coproduct[j].coeffs.iter().enumerate() {
                if !c2.is_zero() {
                    let (p, q) = (pq / dim, pq % dim);
                    let slot = &mut rhs[i * dim * dim + p * dim + q];
                    *slot = slot.add(&c.mul(c2));
                }
            }
        }
        let worst = lhs.iter().zip(&rhs).map(|(a, b)| a.sub(b).abs()).fold(0.0, f64::max);
        report.record(worst, || format!("comodule coassociativity at {x}"));

        // (id⊗ε)δ(x) = x.
        let mut back = vec![S::zero(); dim];
        for (ij, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (ij / dim, ij % dim);
            back[i] = back[i].add(&c.mul(&hopf.counit[j]));
        }
        let mut worst: f64 = 0.0;
        for (k, v) in back.iter().enumerate() {
            let expect = if k == x { S::one() } else { S::zero() };
            worst = worst.max(v.sub(&expect).abs());
        }
        report.record(worst, || format!("counit leg at {x}"));
    }
    Ok(report)
}

/// Dimension and basis of the coinvariant subalgebra
/// `{x : δ(x) = x⊗1}` (expected: the scalars).
pub fn coinvariants<S: Scalar>(
    n: u32,
    s: &S,
) -> Result<(usize, Vec<GaloisElement<S>>), TaftError> {
    let table = coaction_table(n, s)?;
    coinvariants_of(n, s, &table)
}

/// Coinvariants of an arbitrary tabulated coaction (exposed so that a
/// deliberately trivial coaction can serve as a negative control).
pub fn coinvariants_of<S: Scalar>(
    n: u32,
    s: &S,
    table: &[TensorElement<S>],
) -> Result<(usize, Vec<GaloisElement<S>>), TaftError> {
    let dim = (n * n) as usize;
    let a_alg = AlgebraSpec::galois(n, s.clone());
    let t_dim = dim;
    // Rows: for each basis monomial, the vector of δ(e_k) − e_k⊗1.
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut row = table[k].coeffs.clone();
        // subtract e_k ⊗ 1
        let idx = k * t_dim + 0;
        row[idx] = row[idx].sub(&S::one());
        rows.push(row);
    }
    // Left null space via elimination on the augmented [M | I].
    let tol = S::default_tol();
    let cols = dim * t_dim;
    let mut aug: Vec<Vec<S>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            for j in 0..dim {
                v.push(if i == j { S::one() } else { S::zero() });
            }
            v
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let mut best = None;
        let mut best_abs = tol;
        for r in pivot_row..dim {
            let a = aug[r][col].abs();
            if a > best_abs || (best.is_none() && !aug[r][col].is_zero_tol(tol)) {
                best = Some(r);
                best_abs = a;
            }
        }
        let Some(best) = best else { continue };
        aug.swap(pivot_row, best);
        let inv = aug[pivot_row][col].inv().expect("nonzero pivot");
        for c in 0..cols + dim {
            aug[pivot_row][c] = aug[pivot_row][c].mul(&inv);
        }
        for r in 0..dim {
            if r != pivot_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..cols + dim {
                    let t = aug[pivot_row][c].mul(&factor);
                    aug[r][c] = aug[r][c].sub(&t);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == dim {
            break;
        }
    }
    let mut basis = Vec::new();
    for r in 0..dim {
        let zero_row = aug[r][..cols].iter().all(|c| c.is_zero_tol(tol));
        if zero_row {
            let mut el = Element::zero(&a_alg);
            el.coeffs = aug[r][cols..].to_vec();
            basis.push(el);
        }
    }
    Ok((basis.len(), basis))
}

/// The canonical map `χ(x⊗y) = (x⊗1)δ(y)` as images of the `N⁴` basis
/// pairs, its rank, and bijectivity.
pub fn canonical_map<S: Scalar>(n: u32, s: &S) -> Result<(usize, bool), TaftError> {
    let images = canonical_images(n, s)?;
    let rank = row_rank(images, S::default_tol());
    Ok((rank, rank == (n * n * n * n) as usize))
}

fn canonical_images<S: Scalar>(n: u32, s: &S) -> Result<Vec<Vec<S>>, TaftError> {
    let table = coaction_table(n, s)?;
    let a_alg = AlgebraSpec::galois(n, s.clone());
    let t_alg = AlgebraSpec::<S>::taft(n);
    let dim = a_alg.dim();
    let mut images = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        let mut xi = Element::zero(&a_alg);
        xi.coeffs[i] = S::one();
        let left = TensorElement::pure(&xi, &Element::one(&t_alg));
        for j in 0..dim {
            images.push(left.mul(&table[j]).coeffs);
        }
    }
    Ok(images)
}

/// Verify the translation map `τ = χ^{-1}|_{1⊗T_N}`: the printed generator
/// formulas `τ(G) = g^{-1}⊗g`, `τ(R) = 1⊗r − rg^{-1}⊗g`, and the full
/// linear solve `χ(τ(h)) = 1⊗h` for every monomial `h`.
pub fn translation_map_check<S: Scalar>(n: u32, s: &S) -> Result<VerificationReport, TaftError> {
    let tol = S::default_tol();
    let mut report = VerificationReport::new(format!("taft-translation-N{n}"), tol);
    let a_alg = AlgebraSpec::galois(n, s.clone());
    let t_alg = AlgebraSpec::<S>::taft(n);
    let table = coaction_table(n, s)?;
    let dim = a_alg.dim();

    let chi = |x: &Element<S>, y: &Element<S>| -> TensorElement<S> {
        TensorElement::pure(x, &Element::one(&t_alg)).mul(&coaction(&table, y))
    };

    let one_a = Element::one(&a_alg);
    let r_a = Element::monomial(&a_alg, 1, 0);
    let g_a = Element::monomial(&a_alg, 0, 1);
    let g_inv = Element::monomial(&a_alg, 0, n - 1);
    let r_t = Element::monomial(&t_alg, 1, 0);
    let g_t = Element::monomial(&t_alg, 0, 1);

    // χ(g^{-1} ⊗ g) = 1 ⊗ G.
    let got = chi(&g_inv, &g_a);
    let expect = TensorElement::pure(&one_a, &g_t);
    report.record(got.sub(&expect).max_abs(), || "tau(G)".into());

    // χ(1 ⊗ r − r g^{-1} ⊗ g) = 1 ⊗ R.
    let got = chi(&one_a, &r_a).sub(&chi(&r_a.mul(&g_inv), &g_a));
    let expect = TensorElement::pure(&one_a, &r_t);
    report.record(got.sub(&expect).max_abs(), || "tau(R)".into());

    // Full inverse: solve χ v = 1⊗h for every monomial h and verify.
    let images = canonical_images(n, s)?;
    let total = dim * dim;
    let a = (0..total)
        .map(|row| (0..total).map(|col| images[col][row].clone()).collect::<Vec<S>>())
        .collect::<Vec<_>>();
    let mut rhs = Vec::with_capacity(dim);
    for h in 0..dim {
        let mut v = vec![S::zero(); total];
        // 1 ⊗ h sits at tensor index (unit-monomial, h) in A_s ⊗ T_N.
        v[h] = S::one();
        rhs.push(v);
    }
    let sols = solve_many(&a, &rhs, tol).ok_or(TaftError::SingularCanonicalMap)?;
    for (h, sol) in sols.iter().enumerate() {
        // Residual of χ(τ(h)) − 1⊗h.
        let mut img = vec![S::zero(); total];
        for (col, c) in sol.iter().enumerate() {
            if c.is_zero_tol(tol) {
                continue;
            }
            for (row, v) in images[col].iter().enumerate() {
                if !v.is_zero() {
                    img[row] = img[row].add(&v.mul(c));
                }
            }
        }
        let mut worst: f64 = 0.0;
        for (row, v) in img.iter().enumerate() {
            let expect = if row == h { S::one() } else { S::zero() };
            worst = worst.max(v.sub(&expect).abs());
        }
        report.record(worst, || format!("tau at monomial {h}"));
    }
    Ok(report)
}
