//! The rational non-commutative torus at `ω = e^{2πi/N}`: clock/shift
//! generators, the truncated (upper-triangular) generators, the
//! anti-hermitian and Borel bases, and the Manin-triple witness for the
//! splitting `gl_N = u_N ⊕ b_N`.
//!
//! Ket convention: states `|m⟩` are indexed `0..N-1` and the shift acts as
//! `P|m⟩ = |m-1⟩` (indices mod N).  The opposite convention `Σ|j+1⟩⟨j|`
//! equals `P†`; a unit test pins the relation.
//!
//! Basis enumeration at even `N = 2L` deserves a note.  The sine-type
//! combinations vanish identically at the self-paired indices — `Ũ_{0,L}`,
//! `Ũ_{L,0}`, `Ũ_{L,L}` and their Borel partners — while the cosine-type
//! ones survive there.  The enumeration below keeps exactly the nonzero
//! elements, giving the stated cardinalities `N` (diagonal) and `N(N-1)`
//! (strictly upper / non-diagonal) in both parity cases.  Self-paired
//! elements and the whole diagonal dual sector carry adjusted
//! normalisations so that duality `⟨T^{a,b}, U_{a,b}⟩ = 1 = ⟨H_A, iH_A⟩`
//! holds exactly.

mod symbols;

pub use symbols::sine_constants;

use crate::bialgebra::{BasisLabel, Family, ManinTripleWitness, VerificationReport};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("matrix dimension must be at least 2, got {0}")]
    InvalidDimension(u32),
    #[error("invalid generator index: {0}")]
    InvalidIndex(String),
}

/// Which generator matrix to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Cyclic shift, `P|m⟩ = |m-1⟩`.
    P,
    /// Clock, `Q|m⟩ = ω^m |m⟩`.
    Q,
    /// Truncated shift `R = P - |N-1⟩⟨0|`, strictly upper with `R^N = 0`.
    R,
    /// `e_{r,s} = ω^{-rs/2} P^r Q^s`, any integer indices.
    E { r: i64, s: i64 },
    /// `f_{a,b} = ω^{-ab/2} R^a Q^b`, `0 ≤ a ≤ N`, any integer `b`.
    F { a: i64, b: i64 },
    /// `f̃_{a,b} = ω^{ab/2} Q^{-b} R^{N-a}`, `0 ≤ a ≤ N`, any integer `b`.
    FTilde { a: i64, b: i64 },
}

#[derive(Clone, Copy, Debug)]
pub struct TorusGeneratorSpec {
    pub n: u32,
    pub kind: GeneratorKind,
}

/// ω^k as a backend scalar (`ω = ζ_N`), via the ambient half-root.
fn omega_pow<S: Scalar>(n: u32, k: i64) -> S {
    S::half_root(n, 2 * k)
}

/// Build one generator matrix.
pub fn build_generator<S: Scalar>(spec: TorusGeneratorSpec) -> Result<SquareMatrix<S>, TorusError> {
    let n = spec.n;
    if n < 2 {
        return Err(TorusError::InvalidDimension(n));
    }
    let nn = n as i64;
    let size = n as usize;
    let mut m = SquareMatrix::zeros(size);
    match spec.kind {
        GeneratorKind::P => {
            for col in 0..nn {
                m.set((col - 1).rem_euclid(nn) as usize, col as usize, S::one());
            }
        }
        GeneratorKind::Q => {
            for d in 0..nn {
                m.set(d as usize, d as usize, omega_pow::<S>(n, d));
            }
        }
        GeneratorKind::R => {
            for col in 1..nn {
                m.set((col - 1) as usize, col as usize, S::one());
            }
        }
        GeneratorKind::E { r, s } => {
            // Entry at (col - r mod N, col): ω^{-rs/2 + s·col}.
            for col in 0..nn {
                let row = (col - r).rem_euclid(nn);
                m.set(row as usize, col as usize, S::half_root(n, -r * s + 2 * s * col));
            }
        }
        GeneratorKind::F { a, b } => {
            if !(0..=nn).contains(&a) {
                return Err(TorusError::InvalidIndex(format!("f_({a},{b}) needs 0 <= a <= {n}")));
            }
            // f_{N,b} = 0, otherwise entries (col-a, col) for col = a..N-1.
            for col in a..nn {
                m.set((col - a) as usize, col as usize, S::half_root(n, -a * b + 2 * b * col));
            }
        }
        GeneratorKind::FTilde { a, b } => {
            if !(0..=nn).contains(&a) {
                return Err(TorusError::InvalidIndex(format!("ft_({a},{b}) needs 0 <= a <= {n}")));
            }
            // f̃_{0,b} = 0, otherwise entries (row, row + N - a) for row < a.
            for row in 0..a {
                m.set(
                    row as usize,
                    (row + nn - a) as usize,
                    S::half_root(n, a * b - 2 * b * row),
                );
            }
        }
    }
    Ok(m)
}

fn e_mat<S: Scalar>(n: u32, r: i64, s: i64) -> SquareMatrix<S> {
    build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::E { r, s } }).unwrap()
}

fn f_mat<S: Scalar>(n: u32, a: i64, b: i64) -> SquareMatrix<S> {
    build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::F { a, b } }).unwrap()
}

fn ft_mat<S: Scalar>(n: u32, a: i64, b: i64) -> SquareMatrix<S> {
    build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::FTilde { a, b } }).unwrap()
}

/// `2i sin(πk/N) = ζ_2N^k − ζ_2N^{-k}` as a backend scalar.
fn two_i_sin<S: Scalar>(n: u32, k: i64) -> S {
    S::half_root(n, k).sub(&S::half_root(n, -k))
}

/// Exhaustive verification of the generator product and identity laws:
/// clock/shift relations, the e-product and sine commutator, the truncated
/// product laws with their vanishing conditions, the three mixed
/// commutator laws, and the quasi-periodicity identities.
pub fn product_law_check<S: Scalar>(n: u32) -> Result<VerificationReport, TorusError> {
    if n < 2 {
        return Err(TorusError::InvalidDimension(n));
    }
    let nn = n as i64;
    let tol = S::default_tol();
    let mut parts = Vec::new();

    let p: SquareMatrix<S> = build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::P })?;
    let q: SquareMatrix<S> = build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::Q })?;
    let r_mat: SquareMatrix<S> = build_generator(TorusGeneratorSpec { n, kind: GeneratorKind::R })?;

    {
        let mut rep = VerificationReport::new("clock-shift-relations", tol);
        let omega = omega_pow::<S>(n, 1);
        rep.record(p.mul(&q).sub(&q.mul(&p).scale(&omega)).max_abs(), || "PQ=wQP".into());
        rep.record(r_mat.mul(&q).sub(&q.mul(&r_mat).scale(&omega)).max_abs(), || "RQ=wQR".into());
        let mut rn = SquareMatrix::identity(n as usize);
        for _ in 0..n {
            rn = rn.mul(&r_mat);
        }
        rep.record(rn.max_abs(), || "R^N=0".into());
        let id = SquareMatrix::identity(n as usize);
        rep.record(p.mul(&p.dagger()).sub(&id).max_abs(), || "P unitary".into());
        rep.record(q.mul(&q.dagger()).sub(&id).max_abs(), || "Q unitary".into());
        let mut pn = id.clone();
        let mut qn = id.clone();
        for _ in 0..n {
            pn = pn.mul(&p);
            qn = qn.mul(&q);
        }
        rep.record(pn.sub(&id).max_abs(), || "P^N=1".into());
        rep.record(qn.sub(&id).max_abs(), || "Q^N=1".into());
        rep.record(p.trace().abs(), || "Tr P".into());
        rep.record(q.trace().abs(), || "Tr Q".into());
        parts.push(rep);
    }

    // Cache the e-grid.
    let e: Vec<Vec<SquareMatrix<S>>> =
        (0..nn).map(|r| (0..nn).map(|s| e_mat(n, r, s)).collect()).collect();

    {
        let mut rep = VerificationReport::new("e-product-and-commutator", tol);
        for j in 0..nn {
            for k in 0..nn {
                for r in 0..nn {
                    for s in 0..nn {
                        let prod = e[j as usize][k as usize].mul(&e[r as usize][s as usize]);
                        let expect = e_mat::<S>(n, j + r, k + s).scale(&S::half_root(n, j * s - k * r));
                        rep.record(prod.sub(&expect).max_abs(), || {
                            format!("e({j},{k})e({r},{s})")
                        });
                        let comm = e[j as usize][k as usize]
                            .commutator(&e[r as usize][s as usize]);
                        let coeff = two_i_sin::<S>(n, j * s - k * r);
                        let cexpect = e_mat::<S>(n, j + r, k + s).scale(&coeff);
                        rep.record(comm.sub(&cexpect).max_abs(), || {
                            format!("[e({j},{k}),e({r},{s})]")
                        });
                    }
                }
            }
        }
        parts.push(rep);
    }

    {
        let mut rep = VerificationReport::new("e-identities", tol);
        for r in 0..nn {
            for s in 0..nn {
                let base = &e[r as usize][s as usize];
                // e† = e_{-r,-s}
                rep.record(base.dagger().sub(&e_mat(n, -r, -s)).max_abs(), || {
                    format!("e({r},{s})^+")
                });
                // e_{N±r,s} = (-1)^s e_{±r,s} and e_{r,N±s} = (-1)^r e_{r,±s}
                for sign in [1i64, -1] {
                    let sgn_s = if s % 2 == 0 { 1 } else { -1 };
                    let lhs = e_mat::<S>(n, nn + sign * r, s);
                    let rhs = e_mat::<S>(n, sign * r, s).scale(&S::from_int(sgn_s));
                    rep.record(lhs.sub(&rhs).max_abs(), || format!("e(N{sign:+}{r},{s})"));
                    let sgn_r = if r % 2 == 0 { 1 } else { -1 };
                    let lhs = e_mat::<S>(n, r, nn + sign * s);
                    let rhs = e_mat::<S>(n, r, sign * s).scale(&S::from_int(sgn_r));
                    rep.record(lhs.sub(&rhs).max_abs(), || format!("e({r},N{sign:+}{s})"));
                }
                // e_{N+r,N+s} = (-1)^{N+r+s} e_{r,s}
                let sgn = if (nn + r + s) % 2 == 0 { 1 } else { -1 };
                rep.record(
                    e_mat::<S>(n, nn + r, nn + s).sub(&base.scale(&S::from_int(sgn))).max_abs(),
                    || format!("e(N+{r},N+{s})"),
                );
                // e_{N-r,N-s} = (-1)^{N-r-s} e*_{r,s}
                let sgn = if (nn - r - s).rem_euclid(2) == 0 { 1 } else { -1 };
                rep.record(
                    e_mat::<S>(n, nn - r, nn - s)
                        .sub(&base.dagger().scale(&S::from_int(sgn)))
                        .max_abs(),
                    || format!("e(N-{r},N-{s})"),
                );
            }
        }
        parts.push(rep);
    }

    {
        let mut rep = VerificationReport::new("f-products", tol);
        for a in 0..=nn {
            for b in 0..nn {
                for r2 in 0..=nn {
                    for s in 0..nn {
                        // f_{a,b} f_{r,s}
                        let prod = f_mat::<S>(n, a, b).mul(&f_mat(n, r2, s));
                        let expect = if a + r2 >= nn {
                            SquareMatrix::zeros(n as usize)
                        } else {
                            f_mat::<S>(n, a + r2, b + s).scale(&S::half_root(n, a * s - b * r2))
                        };
                        rep.record(prod.sub(&expect).max_abs(), || {
                            format!("f({a},{b})f({r2},{s})")
                        });
                        // f̃_{a,b} f̃_{r,s}
                        let prod = ft_mat::<S>(n, a, b).mul(&ft_mat(n, r2, s));
                        let expect = if a + r2 <= nn {
                            SquareMatrix::zeros(n as usize)
                        } else {
                            let sgn = if (b + s) % 2 == 0 { 1 } else { -1 };
                            ft_mat::<S>(n, a + r2 - nn, b + s)
                                .scale(&S::half_root(n, a * s - b * r2).scale_int(sgn))
                        };
                        rep.record(prod.sub(&expect).max_abs(), || {
                            format!("ft({a},{b})ft({r2},{s})")
                        });
                    }
                }
            }
        }
        parts.push(rep);
    }

    {
        let mut rep = VerificationReport::new("f-commutators", tol);
        for j in 0..=nn {
            for k in 0..nn {
                for a in 0..=nn {
                    for b in 0..nn {
                        let coeff = two_i_sin::<S>(n, j * b - k * a);
                        // [f_{j,k}, f_{a,b}] = 2i sin(π(jb-ka)/N) f_{j+a,k+b}, 0 if j+a >= N
                        let lhs = f_mat::<S>(n, j, k).commutator(&f_mat(n, a, b));
                        let rhs = if j + a >= nn {
                            SquareMatrix::zeros(n as usize)
                        } else {
                            f_mat::<S>(n, j + a, k + b).scale(&coeff)
                        };
                        rep.record(lhs.sub(&rhs).max_abs(), || format!("[f({j},{k}),f({a},{b})]"));
                        // [f_{j,k}, f̃_{a,b}] = -2i sin(π(jb-ka)/N) f̃_{a-j,b-k}, 0 if a-j <= 0
                        let lhs = f_mat::<S>(n, j, k).commutator(&ft_mat(n, a, b));
                        let rhs = if a - j <= 0 {
                            SquareMatrix::zeros(n as usize)
                        } else {
                            ft_mat::<S>(n, a - j, b - k).scale(&coeff.neg())
                        };
                        rep.record(lhs.sub(&rhs).max_abs(), || {
                            format!("[f({j},{k}),ft({a},{b})]")
                        });
                        // [f̃_{j,k}, f̃_{a,b}] = (-1)^{k+b} 2i sin(π(jb-ka)/N) f̃_{j+a-N,k+b},
                        // 0 if j+a <= N
                        let lhs = ft_mat::<S>(n, j, k).commutator(&ft_mat(n, a, b));
                        let rhs = if j + a <= nn {
                            SquareMatrix::zeros(n as usize)
                        } else {
                            let sgn = if (k + b) % 2 == 0 { 1 } else { -1 };
                            ft_mat::<S>(n, j + a - nn, k + b).scale(&coeff.scale_int(sgn))
                        };
                        rep.record(lhs.sub(&rhs).max_abs(), || {
                            format!("[ft({j},{k}),ft({a},{b})]")
                        });
                    }
                }
            }
        }
        parts.push(rep);
    }

    {
        let mut rep = VerificationReport::new("f-identities", tol);
        for a in 0..=nn {
            for b in 0..nn {
                let f = f_mat::<S>(n, a, b);
                let ft = ft_mat::<S>(n, a, b);
                let sgn_a = if a % 2 == 0 { 1 } else { -1 };
                // b-periodicity with sign (-1)^a.
                rep.record(
                    f_mat::<S>(n, a, b + nn).sub(&f.scale(&S::from_int(sgn_a))).max_abs(),
                    || format!("f({a},{b}+N)"),
                );
                rep.record(
                    ft_mat::<S>(n, a, b + nn).sub(&ft.scale(&S::from_int(sgn_a))).max_abs(),
                    || format!("ft({a},{b}+N)"),
                );
                // f_{N-a,b} = (-1)^b f̃_{a,-b} and f̃_{N-a,b} = (-1)^b f_{a,-b}.
                let sgn_b = if b % 2 == 0 { 1 } else { -1 };
                rep.record(
                    f_mat::<S>(n, nn - a, b)
                        .sub(&ft_mat::<S>(n, a, -b).scale(&S::from_int(sgn_b)))
                        .max_abs(),
                    || format!("f(N-{a},{b})"),
                );
                rep.record(
                    ft_mat::<S>(n, nn - a, b)
                        .sub(&f_mat::<S>(n, a, -b).scale(&S::from_int(sgn_b)))
                        .max_abs(),
                    || format!("ft(N-{a},{b})"),
                );
                // f̃_{N-a,N-b} = (-1)^{N+a-b} f_{a,b} and the mirrored form.
                let sgn = if (nn + a - b).rem_euclid(2) == 0 { 1 } else { -1 };
                rep.record(
                    ft_mat::<S>(n, nn - a, nn - b).sub(&f.scale(&S::from_int(sgn))).max_abs(),
                    || format!("ft(N-{a},N-{b})"),
                );
                rep.record(
                    f_mat::<S>(n, nn - a, nn - b).sub(&ft.scale(&S::from_int(sgn))).max_abs(),
                    || format!("f(N-{a},N-{b})"),
                );
            }
        }
        // Boundary values: f_0 = e_0, f_N = 0, f̃_0 = 0, f̃_N = (-1)^b e*_0.
        for b in 0..nn {
            let sgn_b = if b % 2 == 0 { 1 } else { -1 };
            rep.record(f_mat::<S>(n, 0, b).sub(&e_mat(n, 0, b)).max_abs(), || format!("f(0,{b})"));
            rep.record(f_mat::<S>(n, nn, b).max_abs(), || format!("f(N,{b})"));
            rep.record(ft_mat::<S>(n, 0, b).max_abs(), || format!("ft(0,{b})"));
            rep.record(
                ft_mat::<S>(n, nn, b)
                    .sub(&e_mat::<S>(n, 0, b).dagger().scale(&S::from_int(sgn_b)))
                    .max_abs(),
                || format!("ft(N,{b})"),
            );
        }
        parts.push(rep);
    }

    Ok(VerificationReport::merged("product-laws", &parts))
}

/// One basis slot of the catalog, shared by the matrix and the symbolic
/// routes.  `diagonal` slots sit in the Cartan sector; `self_paired` marks
/// indices fixed by `(r,s) ↦ (-r,-s) mod N`, which exist only for even `N`
/// and carry adjusted dual normalisation.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CatalogSlot {
    pub r: u32,
    pub s: u32,
    pub tilde: bool,
    pub diagonal: bool,
    pub self_paired: bool,
}

/// Canonical enumeration: diagonal cosine, diagonal sine, upper cosine,
/// upper sine.
pub(crate) fn catalog_slots(n: u32) -> Vec<CatalogSlot> {
    let l = n / 2;
    let mut slots = Vec::new();
    // Diagonal: U_{0,b}, b = 0..=floor(N/2); sine partner 1..=ceil(N/2)-1.
    for b in 0..=l {
        slots.push(CatalogSlot {
            r: 0,
            s: b,
            tilde: false,
            diagonal: true,
            self_paired: (2 * b) % n == 0,
        });
    }
    let sine_top = (n + 1) / 2;
    for b in 1..sine_top {
        slots.push(CatalogSlot { r: 0, s: b, tilde: true, diagonal: true, self_paired: false });
    }
    for tilde in [false, true] {
        if n % 2 == 1 {
            for r in 1..=l {
                for s in 0..n {
                    slots.push(CatalogSlot { r, s, tilde, diagonal: false, self_paired: false });
                }
            }
        } else {
            for r in 1..l {
                for s in 0..n {
                    slots.push(CatalogSlot { r, s, tilde, diagonal: false, self_paired: false });
                }
            }
            // The half-way row folds onto itself: cosine survives at
            // s = 0..=L (self-paired at 0 and L), sine at s = 1..L.
            if !tilde {
                for s in 0..=l {
                    slots.push(CatalogSlot {
                        r: l,
                        s,
                        tilde,
                        diagonal: false,
                        self_paired: s == 0 || s == l,
                    });
                }
            } else {
                for s in 1..l {
                    slots.push(CatalogSlot { r: l, s, tilde, diagonal: false, self_paired: false });
                }
            }
        }
    }
    slots
}

impl CatalogSlot {
    pub(crate) fn a_label(&self) -> BasisLabel {
        let family = if self.tilde { Family::UTilde } else { Family::U };
        BasisLabel::indexed(family, self.r as i64, self.s as i64)
    }

    pub(crate) fn b_label(&self) -> BasisLabel {
        let family = match (self.diagonal, self.tilde) {
            (true, false) => Family::H,
            (true, true) => Family::HTilde,
            (false, false) => Family::T,
            (false, true) => Family::TTilde,
        };
        BasisLabel::indexed(family, self.r as i64, self.s as i64)
    }
}

/// The labeled basis matrices of the splitting: the Cartan sector of `u_N`
/// with its real-diagonal dual, and the non-diagonal anti-hermitian sector
/// with its strictly-upper dual.
#[derive(Clone, Debug)]
pub struct TorusBasisCatalog<S> {
    pub n: u32,
    /// `i𝔱`: purely imaginary diagonals `U_{0,b}, Ũ_{0,b}`.
    pub cartan: Vec<(BasisLabel, SquareMatrix<S>)>,
    /// Real diagonals `H_b, H̃_b`, dual to `cartan` slot by slot.
    pub cartan_dual: Vec<(BasisLabel, SquareMatrix<S>)>,
    /// Non-diagonal anti-hermitian `U_{r,s}, Ũ_{r,s}`.
    pub antihermitian: Vec<(BasisLabel, SquareMatrix<S>)>,
    /// Strictly upper `T^{r,s}, T̃^{r,s}`, dual to `antihermitian`.
    pub upper: Vec<(BasisLabel, SquareMatrix<S>)>,
}

fn slot_a_matrix<S: Scalar>(n: u32, slot: &CatalogSlot) -> SquareMatrix<S> {
    let inv_sqrt_n = S::sqrt_nat(n).inv().expect("sqrt(n) != 0");
    let (r, s) = (slot.r as i64, slot.s as i64);
    let e = e_mat::<S>(n, r, s);
    let estar = e.dagger();
    if slot.tilde {
        // Ũ = (1/√N)(e - e*)
        e.sub(&estar).scale(&inv_sqrt_n)
    } else {
        // U = (i/√N)(e + e*)
        e.add(&estar).scale(&S::i().mul(&inv_sqrt_n))
    }
}

fn slot_b_matrix<S: Scalar>(n: u32, slot: &CatalogSlot) -> SquareMatrix<S> {
    let inv_sqrt_n = S::sqrt_nat(n).inv().expect("sqrt(n) != 0");
    let half = S::from_ratio(1, 2);
    let (r, s) = (slot.r as i64, slot.s as i64);
    if slot.diagonal {
        // Dual of the Cartan sector: H_b and H̃_b with an extra 1/2, and a
        // further 1/2 at the self-paired indices, fixing ⟨H_A, iH_B⟩ = δ.
        let e = e_mat::<S>(n, 0, s);
        let estar = e.dagger();
        let mut scale = inv_sqrt_n.mul(&half);
        if slot.self_paired {
            scale = scale.mul(&half);
        }
        if slot.tilde {
            e.sub(&estar).scale(&scale.mul(&S::i()).neg())
        } else {
            e.add(&estar).scale(&scale)
        }
    } else {
        let f = f_mat::<S>(n, r, s);
        let ft = ft_mat::<S>(n, r, s);
        let mut scale = inv_sqrt_n;
        if slot.self_paired {
            scale = scale.mul(&half);
        }
        if slot.tilde {
            // T̃ = -(i/√N)(f - f̃)
            f.sub(&ft).scale(&scale.mul(&S::i()).neg())
        } else {
            // T = (1/√N)(f + f̃)
            f.add(&ft).scale(&scale)
        }
    }
}

/// Build the full labeled catalog for dimension `n ≥ 2`.
pub fn build_catalog<S: Scalar>(n: u32) -> Result<TorusBasisCatalog<S>, TorusError> {
    if n < 2 {
        return Err(TorusError::InvalidDimension(n));
    }
    let mut catalog = TorusBasisCatalog {
        n,
        cartan: Vec::new(),
        cartan_dual: Vec::new(),
        antihermitian: Vec::new(),
        upper: Vec::new(),
    };
    for slot in catalog_slots(n) {
        let a = slot_a_matrix::<S>(n, &slot);
        let b = slot_b_matrix::<S>(n, &slot);
        if slot.diagonal {
            catalog.cartan.push((slot.a_label(), a));
            catalog.cartan_dual.push((slot.b_label(), b));
        } else {
            catalog.antihermitian.push((slot.a_label(), a));
            catalog.upper.push((slot.b_label(), b));
        }
    }
    Ok(catalog)
}

/// The Manin-triple witness `gl_N = u_N ⊕ b_N` with matched dual ordering.
pub fn manin_witness<S: Scalar>(n: u32) -> Result<ManinTripleWitness<S>, TorusError> {
    let catalog = build_catalog::<S>(n)?;
    let mut a_basis = catalog.cartan;
    a_basis.extend(catalog.antihermitian);
    let mut b_basis = catalog.cartan_dual;
    b_basis.extend(catalog.upper);
    Ok(ManinTripleWitness {
        ambient_real_dim: 2 * (n as usize) * (n as usize),
        a_basis,
        b_basis,
    })
}
