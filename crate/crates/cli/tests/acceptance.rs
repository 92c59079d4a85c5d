//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line.  Run with `cargo test -p torus-bialgebra-cli --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).

use std::time::Instant;

use torus_bialgebra::bialgebra::{
    check_cocycle, check_cojacobi, check_jacobi, check_mixed_brackets, extract_constants,
    verify_manin_detailed, BasisLabel, ManinTripleWitness, StructureConstants,
};
use torus_bialgebra::classical_torus;
use torus_bialgebra::fixtures_sl;
use torus_bialgebra::nc_torus::{self, ConeSign, Theta};
use torus_bialgebra::rational_torus::{manin_witness, sine_constants};
use torus_bialgebra::rieffel::{projection_summary, TransitionProfile};
use torus_bialgebra::scalar::{ApproxComplex, CycloScalar, Scalar};
use torus_bialgebra::taft;

fn pass_line(id: u32, name: &str) {
    println!("criterion {id:02} [{name}]: PASS");
}

fn axiom_suite<S: Scalar>(
    tag: &str,
    witness: &ManinTripleWitness<S>,
    sc: &StructureConstants<S>,
    tol: f64,
) {
    let r = check_jacobi(sc, tol);
    assert!(r.pass, "{tag} jacobi: {r:?}");
    let r = check_cojacobi(sc, tol);
    assert!(r.pass, "{tag} co-jacobi: {r:?}");
    let r = check_cocycle(sc, tol);
    assert!(r.pass, "{tag} cocycle: {r:?}");
    let r = check_mixed_brackets(witness, sc, tol).expect("matching labels");
    assert!(r.pass, "{tag} mixed brackets: {r:?}");
}

/// Criterion 1: the Manin triple for gl_N holds exactly for N = 2..8 with
/// the stated basis cardinalities, in under 60 seconds.
#[test]
fn criterion_01_manin_triple_exact() {
    let start = Instant::now();
    for n in 2..=8u32 {
        let w = manin_witness::<CycloScalar>(n).unwrap();
        let nn = n as usize;
        assert_eq!(w.a_basis.len(), nn * nn, "N={n} anti-hermitian cardinality");
        assert_eq!(w.b_basis.len(), nn * nn, "N={n} Borel cardinality");
        let diag = w
            .a_basis
            .iter()
            .filter(|(l, _)| matches!(l, BasisLabel::Indexed { index: (0, _), .. }))
            .count();
        assert_eq!(diag, nn, "N={n} diagonal count");
        assert_eq!(nn * nn - diag, nn * (nn - 1), "N={n} strict-upper count");
        for rep in verify_manin_detailed(&w, 0.0) {
            assert!(rep.pass, "N={n}: {rep:?}");
            assert_eq!(rep.worst_residual, 0.0, "N={n}: {} residual", rep.check);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "runtime target exceeded: {elapsed:?}");
    pass_line(1, &format!("manin-triple exact N=2..8 in {elapsed:.2?}"));
}

/// Criterion 2: extraction equals the closed-form sine tables, exactly for
/// N ≤ 6 and within 1e-10 on the approximate backend for N ≤ 16.
#[test]
fn criterion_02_sine_table_equivalence() {
    for n in 2..=6u32 {
        let w = manin_witness::<CycloScalar>(n).unwrap();
        let extracted = extract_constants(&w, 0.0).unwrap();
        let closed = sine_constants::<CycloScalar>(n).unwrap();
        assert!(closed.eq_exact(&extracted), "N={n} exact tables differ");
    }
    for n in 2..=16u32 {
        let w = manin_witness::<ApproxComplex>(n).unwrap();
        let extracted = extract_constants(&w, 1e-10).unwrap();
        let closed = sine_constants::<ApproxComplex>(n).unwrap();
        let diff = closed.max_difference(&extracted);
        assert!(diff <= 1e-10, "N={n} approx tables differ by {diff:.3e}");
    }
    pass_line(2, "structure constants equal sine tables (exact N<=6, approx N<=16)");
}

/// Criterion 3: the printed SL(2,C) and SL(3,C) fixtures reproduce every
/// printed pairing and structure constant and pass all four axiom checks.
/// The four Δ^{8x}_x = √3/2 values hold on the (x,8) orientation, which is
/// what the printed matrices force.
#[test]
fn criterion_03_sl_fixtures() {
    for fixture in fixtures_sl::all_fixtures() {
        let name = fixture.name;
        for rep in verify_manin_detailed(&fixture.witness, 0.0) {
            assert!(rep.pass, "{name}: {rep:?}");
        }
        let sc = extract_constants(&fixture.witness, 0.0).unwrap();
        if let Some(expected) = &fixture.expected {
            assert!(sc.eq_exact(expected), "{name}: extracted table differs from printed one");
        }
        axiom_suite(name, &fixture.witness, &sc, 0.0);
    }
    // spot values: Γ_123 = 2, Γ_458 = √3, Δ^43_4 = 1/2, Δ^{4,8}_4 = √3/2,
    // Δ^23_2 = 2 (1-based indices)
    let sl3 = fixtures_sl::sl3_gellmann_fixture();
    let sc = extract_constants(&sl3.witness, 0.0).unwrap();
    let rt3 = CycloScalar::sqrt_nat(3);
    assert_eq!(sc.gamma_entry(0, 1, 2), CycloScalar::from_int(2));
    assert_eq!(sc.gamma_entry(3, 4, 7), rt3);
    assert_eq!(sc.delta_entry(3, 2, 3), CycloScalar::from_ratio(1, 2));
    assert_eq!(sc.delta_entry(3, 7, 3), rt3.mul(&CycloScalar::from_ratio(1, 2)));
    let sl2 = fixtures_sl::sl2_fixture();
    let sc = extract_constants(&sl2.witness, 0.0).unwrap();
    assert_eq!(sc.delta_entry(1, 2, 1), CycloScalar::from_int(2));
    pass_line(3, "printed SL(2)/SL(3) fixtures reproduced exactly");
}

/// Criterion 4: every table extracted under criteria 1-3 passes the four
/// bi-algebra axiom checks at the backend tolerance.  The approximate
/// dimensions are sampled at N ∈ {9, 12, 16}.
#[test]
fn criterion_04_bialgebra_axioms() {
    for n in 2..=8u32 {
        let w = manin_witness::<CycloScalar>(n).unwrap();
        let sc = extract_constants(&w, 0.0).unwrap();
        axiom_suite(&format!("exact N={n}"), &w, &sc, 0.0);
    }
    for fixture in fixtures_sl::all_fixtures() {
        let sc = extract_constants(&fixture.witness, 0.0).unwrap();
        axiom_suite(fixture.name, &fixture.witness, &sc, 0.0);
    }
    for n in [9u32, 12, 16] {
        let w = manin_witness::<ApproxComplex>(n).unwrap();
        let sc = extract_constants(&w, 1e-10).unwrap();
        axiom_suite(&format!("approx N={n}"), &w, &sc, 1e-9);
    }
    pass_line(4, "jacobi, co-jacobi, cocycle, mixed brackets on all extracted tables");
}

/// Criterion 5: the classical bracket tables hold exactly on the window
/// W = 4 and the cross-pairing Gram matrix is the identity.
#[test]
fn criterion_05_classical_tables() {
    let rep = classical_torus::bracket_table_check::<CycloScalar>(4);
    assert!(rep.pass, "{rep:?}");
    assert_eq!(rep.worst_residual, 0.0);
    let rep = classical_torus::pairing_gram_check::<CycloScalar>(4);
    assert!(rep.pass, "{rep:?}");
    assert_eq!(rep.worst_residual, 0.0);
    let (_, rep) = classical_torus::mixed_constants::<CycloScalar>(3);
    assert!(rep.pass, "{rep:?}");
    pass_line(5, "classical bracket tables and duality exact on window 4");
}

/// Criterion 6: the quantitative classical limit
/// |(N/2π)·2 sin(πk/N) − k| ≤ π²k³/(6N²).
#[test]
fn criterion_06_classical_limit_rate() {
    for n in [1e2f64, 1e3, 1e4] {
        for k in 1..=10 {
            let kf = k as f64;
            let lhs =
                ((n / std::f64::consts::PI) * (std::f64::consts::PI * kf / n).sin() - kf).abs();
            let bound = std::f64::consts::PI.powi(2) * kf.powi(3) / (6.0 * n * n);
            assert!(lhs <= bound, "N={n} k={k}: {lhs:.3e} > {bound:.3e}");
        }
    }
    pass_line(6, "classical limit rate bound for k=1..10, N=1e2..1e4");
}

/// Criterion 7: the θ-dependent tables hold within 1e-10 for
/// θ ∈ {0.3, √2−1, 1/5} on window 3, and θ = 1/5 matches the N = 5
/// rational extraction under the label correspondence.
#[test]
fn criterion_07_nc_tables() {
    for theta in [
        Theta::Real(0.3),
        Theta::Real(std::f64::consts::SQRT_2 - 1.0),
        Theta::rational(1, 5).unwrap(),
    ] {
        let (sc, rep) = nc_torus::nc_constants(theta, 3);
        assert!(rep.pass, "θ={theta:?}: {rep:?}");
        assert!(rep.worst_residual <= 1e-10, "θ={theta:?}");
        assert!(sc.gamma_entry_count() > 0 && sc.delta_entry_count() > 0);
    }
    let rep = nc_torus::rational_cross_check(5, 2);
    assert!(rep.pass, "{rep:?}");
    pass_line(7, "theta tables within 1e-10; theta=1/5 matches N=5 extraction");
}

/// Criterion 8: Powers–Rieffel trace = θ ± 1e-6, Chern = 1 ± 1e-6,
/// idempotency residual ≤ 1e-8 at grid 2^14, under 5 seconds per θ.
#[test]
fn criterion_08_powers_rieffel() {
    for theta in [0.55, 0.7, 0.61803398875] {
        let start = Instant::now();
        let s = projection_summary(theta, 1 << 14, TransitionProfile::FlatExponential).unwrap();
        let elapsed = start.elapsed();
        assert!((s.trace - theta).abs() <= 1e-6, "θ={theta}: trace {:.9}", s.trace);
        assert!((s.chern - 1.0).abs() <= 1e-6, "θ={theta}: chern {:.9}", s.chern);
        assert!(s.idempotency_residual <= 1e-8, "θ={theta}: residual {:.3e}", s.idempotency_residual);
        assert!(elapsed.as_secs_f64() < 5.0, "θ={theta}: {elapsed:?}");
    }
    pass_line(8, "projection trace, Chern number, idempotency at grid 2^14");
}

/// Criterion 9: the cone order at θ = 10⁻³ agrees with the lexicographic
/// order on the |m_i| ≤ 20 window; θ = 0.4 disagrees at (−1, 3).
#[test]
fn criterion_09_k_order_limit() {
    let small = Theta::Real(1e-3);
    for m1 in -20..=20i64 {
        for m2 in -20..=20i64 {
            if (m1, m2) == (0, 0) {
                continue;
            }
            let lex = nc_torus::lex_positive((m1, m2));
            let cone = nc_torus::k_positive(small, (m1, m2)) == ConeSign::Positive;
            assert_eq!(lex, cone, "disagreement at ({m1},{m2})");
        }
    }
    assert!(!nc_torus::lex_positive((-1, 3)));
    assert_eq!(nc_torus::k_positive(Theta::Real(0.4), (-1, 3)), ConeSign::Positive);
    pass_line(9, "K-order tends to lexicographic; theta=0.4 disagrees at (-1,3)");
}

/// Criterion 10: Taft Hopf axioms for N ∈ {2,3,5}; comodule axioms and
/// one-dimensional coinvariants for s ∈ {0,1,−1}; canonical map has full
/// rank N⁴ for N ∈ {2,3} with χ(τ(h)) = 1⊗h, the N = 3 rank in under
/// 120 seconds.
#[test]
fn criterion_10_taft_galois() {
    for n in [2u32, 3, 5] {
        let rep = taft::verify_hopf::<CycloScalar>(n).unwrap();
        assert!(rep.pass, "N={n}: {rep:?}");
        assert_eq!(rep.worst_residual, 0.0);
    }
    for s in [
        CycloScalar::zero(),
        CycloScalar::one(),
        CycloScalar::from_int(-1),
        CycloScalar::i(),
    ] {
        for n in [2u32, 3, 5] {
            let rep = taft::verify_comodule(n, &s).unwrap();
            assert!(rep.pass, "N={n} s={s}: {rep:?}");
            let (dim, basis) = taft::coinvariants(n, &s).unwrap();
            assert_eq!(dim, 1, "N={n} s={s}");
            for (k, c) in basis[0].coeffs.iter().enumerate() {
                assert!(k == 0 || c.is_zero(), "coinvariant not scalar");
            }
        }
    }
    for n in [2u32, 3] {
        let start = Instant::now();
        for s in [CycloScalar::zero(), CycloScalar::one(), CycloScalar::from_int(-1)] {
            let (rank, bijective) = taft::canonical_map(n, &s).unwrap();
            assert_eq!(rank, (n * n * n * n) as usize, "N={n} s={s}");
            assert!(bijective);
        }
        let rep = taft::translation_map_check(n, &CycloScalar::one()).unwrap();
        assert!(rep.pass, "N={n}: {rep:?}");
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs() < 120, "N={n} rank computation too slow: {elapsed:?}");
    }
    pass_line(10, "Hopf, comodule, coinvariants, canonical rank, translation map");
}

/// Criterion 11: two runs of `all` with identical flags produce
/// byte-identical JSON reports.
#[test]
fn criterion_11_deterministic_reports() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_torus-bialgebra");
    let dir = std::env::temp_dir();
    let out1 = dir.join("torus-all-run1.json");
    let out2 = dir.join("torus-all-run2.json");
    for out in [&out1, &out2] {
        let status = Command::new(bin)
            .args([
                "all",
                "--n-max",
                "3",
                "--n-approx",
                "9",
                "--window",
                "2",
                "--grid",
                "4096",
                "--out",
            ])
            .arg(out)
            .stderr(std::process::Stdio::null())
            .status()
            .expect("spawn the CLI");
        assert!(status.success(), "all run failed");
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "reports differ between runs");
    pass_line(11, "`all` is byte-deterministic");
}

/// The classical side of criterion 7's mixed-display question: the
/// label correspondence notes which printed display each bracket family
/// matches.
#[test]
fn mixed_display_identification_note() {
    let (_, rep) = nc_torus::nc_constants(Theta::Real(0.3), 2);
    assert!(rep.notes.iter().any(|n| n.contains("fourth")));
    pass_line(0, "mixed display identification recorded in report notes");
}

/// Window sweep: the family of extracted tables passes verify_manin for a
/// sampled set of approximate dimensions (the module-level invariant).
#[test]
fn sampled_approx_manin() {
    for n in [9u32, 12, 16] {
        let w = manin_witness::<ApproxComplex>(n).unwrap();
        for rep in verify_manin_detailed(&w, 1e-10) {
            assert!(rep.pass, "N={n}: {rep:?}");
        }
    }
    pass_line(0, "approximate-backend Manin triples at N=9,12,16");
}

/// The Gram determinant invariant: with exact duality established, the
/// pairing Gram matrix of the full basis is the permutation swapping the
/// two sides, determinant ±1; checked here literally on a small case by
/// exact elimination.
#[test]
fn gram_determinant_exact_small() {
    use torus_bialgebra::matrix::row_rank;
    let w = manin_witness::<CycloScalar>(3).unwrap();
    let all: Vec<_> = w.a_basis.iter().chain(w.b_basis.iter()).collect();
    let gram: Vec<Vec<CycloScalar>> = all
        .iter()
        .map(|(_, x)| all.iter().map(|(_, y)| x.pairing(y)).collect())
        .collect();
    // Full rank means nonzero determinant; the permutation structure makes
    // it ±1.
    assert_eq!(row_rank(gram.clone(), 0.0), all.len());
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let expect = if (i + w.a_basis.len()) % all.len() == j
                || (j + w.a_basis.len()) % all.len() == i
            {
                CycloScalar::one()
            } else {
                CycloScalar::zero()
            };
            assert_eq!(*v, expect, "gram[{i}][{j}]");
        }
    }
    pass_line(0, "pairing Gram matrix is the swap permutation (det ±1)");
}
