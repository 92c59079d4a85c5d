//! The `all` subcommand: the full verification sweep over every subsystem.

use torus_bialgebra::bialgebra::{extract_constants, verify_manin, VerificationReport};
use torus_bialgebra::classical_torus;
use torus_bialgebra::fixtures_sl;
use torus_bialgebra::nc_torus::{self, ConeSign, Theta};
use torus_bialgebra::rational_torus::{manin_witness, product_law_check, sine_constants};
use torus_bialgebra::rieffel::{projection_summary, TransitionProfile};
use torus_bialgebra::scalar::{ApproxComplex, CycloScalar, Scalar};
use torus_bialgebra::taft;

use crate::table_checks;

pub fn fixture_reports() -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for fixture in fixtures_sl::all_fixtures() {
        let name = fixture.name;
        let mut manin = verify_manin(&fixture.witness, 0.0);
        manin.check = format!("{name}:manin-triple", );
        reports.push(manin);
        let sc = extract_constants(&fixture.witness, 0.0).expect("fixtures are dual bases");
        if let Some(expected) = &fixture.expected {
            let mut rep = VerificationReport::new(format!("{name}:printed-tables"), 0.0);
            rep.record(sc.max_difference(expected), || "extracted table differs".into());
            reports.push(rep);
        }
        reports.extend(table_checks(name, &fixture.witness, &sc, 0.0));
    }
    reports
}

pub fn full_sweep(n_max: u32, n_approx: &[u32], window: i64, grid: usize) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = Vec::new();

    // Rational torus: product laws, Manin triples, table equivalence and
    // the bi-algebra axioms, exact backend.
    for n in 2..=n_max.min(8) {
        reports.push(with_name(
            product_law_check::<CycloScalar>(n).expect("valid n"),
            format!("exact-N{n}:product-laws"),
        ));
        let w = manin_witness::<CycloScalar>(n).expect("valid n");
        reports.push(with_name(verify_manin(&w, 0.0), format!("exact-N{n}:manin-triple")));
        let sc = extract_constants(&w, 0.0).expect("torus witness is dual");
        if n <= 6 {
            let closed = sine_constants::<CycloScalar>(n).expect("valid n");
            let mut rep = VerificationReport::new(format!("exact-N{n}:sine-tables"), 0.0);
            rep.record(
                if closed.eq_exact(&sc) { 0.0 } else { closed.max_difference(&sc) },
                || "closed form differs from extraction".into(),
            );
            reports.push(rep);
        }
        reports.extend(table_checks(&format!("exact-N{n}"), &w, &sc, 0.0));
    }

    // Approximate backend: extraction equals the closed form for all sizes,
    // axioms on the sampled dimensions.
    for n in 2..=16u32 {
        let w = manin_witness::<ApproxComplex>(n).expect("valid n");
        let sc = extract_constants(&w, 1e-10).expect("torus witness is dual");
        let closed = sine_constants::<ApproxComplex>(n).expect("valid n");
        let mut rep = VerificationReport::new(format!("approx-N{n}:sine-tables"), 1e-10);
        rep.record(closed.max_difference(&sc), || "closed form differs".into());
        reports.push(rep);
        if n_approx.contains(&n) && n > n_max {
            reports.push(with_name(verify_manin(&w, 1e-10), format!("approx-N{n}:manin-triple")));
            reports.extend(table_checks(&format!("approx-N{n}"), &w, &sc, 1e-9));
        }
    }

    // The printed low-rank fixtures.
    reports.extend(fixture_reports());

    // Classical limit.
    reports.push(classical_torus::bracket_table_check::<CycloScalar>(window));
    reports.push(classical_torus::pairing_gram_check::<CycloScalar>(window));
    let (_, mixed) = classical_torus::mixed_constants::<CycloScalar>(window.min(3));
    reports.push(mixed);
    reports.push(classical_limit_rate());

    // θ-deformed tables.
    for (name, theta) in [
        ("theta-0.3", Theta::Real(0.3)),
        ("theta-sqrt2m1", Theta::Real(std::f64::consts::SQRT_2 - 1.0)),
        ("theta-1over5", Theta::rational(1, 5).expect("1/5")),
    ] {
        let (_, rep) = nc_torus::nc_constants(theta, 3);
        reports.push(with_name(rep, format!("nc:{name}")));
    }
    reports.push(with_name(nc_torus::rational_cross_check(5, 2), "nc:cross-check-N5".into()));
    reports.push(k_order_limit());

    // Powers–Rieffel projections.
    for theta in [0.55, 0.7, 0.61803398875] {
        let summary = projection_summary(theta, grid, TransitionProfile::FlatExponential)
            .expect("valid parameters");
        let mut rep = VerificationReport::new(format!("rieffel:theta-{theta}"), 1e-6);
        rep.record((summary.trace - summary.theta).abs(), || "trace != theta".into());
        rep.record((summary.chern - 1.0).abs(), || "chern != 1".into());
        reports.push(rep);
        let mut idem = VerificationReport::new(format!("rieffel:idempotency-{theta}"), 1e-8);
        idem.record(summary.idempotency_residual, || "p^2 != p".into());
        reports.push(idem);
    }

    // Taft algebras and Galois objects.
    for n in [2u32, 3, 5] {
        reports.push(taft::verify_hopf::<CycloScalar>(n).expect("valid n"));
    }
    for s in [CycloScalar::from_int(0), CycloScalar::from_int(1), CycloScalar::from_int(-1)] {
        for n in [2u32, 3] {
            reports.push(with_name(
                taft::verify_comodule(n, &s).expect("valid n"),
                format!("taft-comodule-N{n}-s{s}"),
            ));
            let (dim, _) = taft::coinvariants(n, &s).expect("valid n");
            let mut rep = VerificationReport::new(format!("taft-coinvariants-N{n}-s{s}"), 0.0);
            rep.record(if dim == 1 { 0.0 } else { 1.0 }, || format!("dimension {dim}"));
            reports.push(rep);
        }
    }
    for n in [2u32, 3] {
        let s = CycloScalar::from_int(1);
        let (rank, bijective) = taft::canonical_map(n, &s).expect("valid n");
        let mut rep = VerificationReport::new(format!("taft-canonical-N{n}"), 0.0);
        rep.record(if bijective { 0.0 } else { 1.0 }, || format!("rank {rank}"));
        reports.push(rep);
        reports.push(taft::translation_map_check(n, &s).expect("bijective"));
    }

    reports
}

fn with_name(mut r: VerificationReport, name: String) -> VerificationReport {
    r.check = name;
    r
}

/// Quantitative classical limit: `|(N/2π)·2 sin(πk/N) − k| ≤ π²k³/(6N²)`.
fn classical_limit_rate() -> VerificationReport {
    let mut rep = VerificationReport::new("classical-limit-rate", 0.0);
    for n in [1e2, 1e3, 1e4] {
        for k in 1..=10 {
            let kf = k as f64;
            let lhs = ((n / std::f64::consts::PI) * (std::f64::consts::PI * kf / n).sin() - kf)
                .abs();
            let bound = std::f64::consts::PI.powi(2) * kf.powi(3) / (6.0 * n * n);
            rep.record(if lhs <= bound { 0.0 } else { lhs - bound }, || {
                format!("N={n} k={k}")
            });
        }
    }
    rep
}

/// The ordering limit: θ = 10⁻³ agrees with the lexicographic order on the
/// |m_i| ≤ 20 window, while θ = 0.4 disagrees at (−1, 3).
fn k_order_limit() -> VerificationReport {
    let mut rep = VerificationReport::new("k-order-lex-limit", 0.0);
    let small = Theta::Real(1e-3);
    for m1 in -20..=20i64 {
        for m2 in -20..=20i64 {
            if (m1, m2) == (0, 0) {
                continue;
            }
            let lex = nc_torus::lex_positive((m1, m2));
            let cone = nc_torus::k_positive(small, (m1, m2)) == ConeSign::Positive;
            rep.record(if lex == cone { 0.0 } else { 1.0 }, || format!("({m1},{m2})"));
        }
    }
    let disagrees = nc_torus::k_positive(Theta::Real(0.4), (-1, 3)) == ConeSign::Positive
        && !nc_torus::lex_positive((-1, 3));
    rep.record(if disagrees { 0.0 } else { 1.0 }, || "theta=0.4 at (-1,3)".into());
    rep
}
