//! Command-line verifier and exporter for the torus Lie bi-algebra
//! structures.
//!
//! Exit codes: 0 when every requested verification passes, 1 when a
//! verification fails (reports are still emitted), 2 on usage errors.

mod output;
mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

use torus_bialgebra::bialgebra::{
    check_cocycle, check_cojacobi, check_jacobi, check_mixed_brackets, extract_constants,
    verify_manin_detailed, StructureConstants, VerificationReport,
};
use torus_bialgebra::classical_torus;
use torus_bialgebra::nc_torus::{self, ConeSign, Theta};
use torus_bialgebra::rational_torus::{manin_witness, product_law_check};
use torus_bialgebra::rieffel::{projection_summary, TransitionProfile};
use torus_bialgebra::scalar::{ApproxComplex, CycloScalar, Scalar};
use torus_bialgebra::taft;

#[derive(Parser)]
#[command(
    name = "torus-bialgebra",
    about = "Verify the Manin-triple and Lie bi-algebra structures of the non-commutative torus",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Approx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Manin triple gl_N = u_N ⊕ b_N at one dimension.
    VerifyManin {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        n: u32,
        /// Scalar backend; defaults to exact for N ≤ 8 and approximate above.
        #[arg(long)]
        backend: Option<Backend>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include the witness basis matrices in the JSON output.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Export the structure-constant tables of one dimension.
    StructureConstants {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        n: u32,
        #[arg(long)]
        backend: Option<Backend>,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the printed SL(2,C) and SL(3,C) fixtures.
    SlFixtures {
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify the classical (Poisson) bracket tables and mixed constants.
    Classical {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(2..=16))]
        window: i64,
        /// Check the printed bracket tables (default when no flag given).
        #[arg(long)]
        check_tables: bool,
        /// Check the mixed structure constants.
        #[arg(long)]
        mixed: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify the θ-deformed tables and export the K-order classification.
    NcTorus {
        /// Deformation parameter, either a float or a fraction `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(2..=12))]
        window: i64,
        /// Write the structure constants as JSON here.
        #[arg(long)]
        constants: Option<PathBuf>,
        /// Write the lattice ordering classification as CSV here.
        #[arg(long)]
        order_plot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build the Powers–Rieffel projection and verify its invariants.
    Rieffel {
        #[arg(long)]
        theta: f64,
        #[arg(long, default_value_t = 16384)]
        grid: usize,
        #[arg(long, default_value = "flat-exp")]
        profile: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify the Taft Hopf algebra and its Galois objects.
    Taft {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=8))]
        n: u32,
        /// Galois parameter: an integer, a fraction `p/q`, `i`, `-i`, or
        /// a complex float `re,im`.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        s: String,
        /// Also compute the canonical-map rank and the translation map.
        #[arg(long)]
        rank: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the full verification sweep.
    All {
        /// Largest dimension for the exact Manin/table sweep.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=16))]
        n_max: u32,
        /// Approximate-backend dimensions for the axiom checks.
        #[arg(long, value_delimiter = ',', default_values_t = vec![9u32, 12, 16])]
        n_approx: Vec<u32>,
        /// Window for the classical and θ-deformed tables.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(2..=8))]
        window: i64,
        /// Grid size for the projection checks.
        #[arg(long, default_value_t = 16384)]
        grid: usize,
        /// Write the aggregate JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serialization")
}

fn print_report(r: &VerificationReport) {
    eprintln!(
        "{:<32} {} (checked {}, worst {:.3e}, tol {:.1e})",
        r.check,
        if r.pass { "PASS" } else { "FAIL" },
        r.checked,
        r.worst_residual,
        r.tolerance
    );
    for f in &r.failures {
        eprintln!("    failure: {f}");
    }
    for n in &r.notes {
        eprintln!("    note: {n}");
    }
}

fn wrap(command: &str, params: Value, reports: Vec<VerificationReport>, extra: Value) -> (Value, bool) {
    let pass = reports.iter().all(|r| r.pass);
    for r in &reports {
        print_report(r);
    }
    let mut doc = json!({
        "schema": "1",
        "command": command,
        "params": params,
        "pass": pass,
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    });
    if let Value::Object(extra_map) = extra {
        let obj = doc.as_object_mut().unwrap();
        for (k, v) in extra_map {
            obj.insert(k, v);
        }
    }
    (doc, pass)
}

fn backend_for(n: u32, choice: Option<Backend>) -> Backend {
    choice.unwrap_or(if n <= 8 { Backend::Exact } else { Backend::Approx })
}

fn manin_reports(n: u32, backend: Backend) -> Vec<VerificationReport> {
    match backend {
        Backend::Exact => {
            let w = manin_witness::<CycloScalar>(n).expect("n validated");
            let mut reports = vec![product_law_check::<CycloScalar>(n).expect("n validated")];
            reports.extend(verify_manin_detailed(&w, 0.0));
            reports
        }
        Backend::Approx => {
            let w = manin_witness::<ApproxComplex>(n).expect("n validated");
            let mut reports = vec![product_law_check::<ApproxComplex>(n).expect("n validated")];
            reports.extend(verify_manin_detailed(&w, 1e-10));
            reports
        }
    }
}

fn parse_theta(text: &str) -> Result<Theta, String> {
    if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("bad fraction {text}"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad fraction {text}"))?;
        return Theta::rational(p, q).map_err(|e| e.to_string());
    }
    let v: f64 = text.trim().parse().map_err(|_| format!("bad theta {text}"))?;
    Ok(Theta::Real(v))
}

/// Parse the Galois parameter into either an exact scalar or an
/// approximate complex number.
enum GaloisParam {
    Exact(CycloScalar),
    Approx(ApproxComplex),
}

fn parse_galois_param(text: &str) -> Result<GaloisParam, String> {
    let t = text.trim();
    match t {
        "i" => return Ok(GaloisParam::Exact(CycloScalar::i())),
        "-i" => return Ok(GaloisParam::Exact(CycloScalar::i().neg())),
        _ => {}
    }
    if let Ok(v) = t.parse::<i64>() {
        return Ok(GaloisParam::Exact(CycloScalar::from_int(v)));
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("bad fraction {t}"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad fraction {t}"))?;
        if q == 0 {
            return Err("zero denominator".into());
        }
        return Ok(GaloisParam::Exact(CycloScalar::from_ratio(p, q)));
    }
    if let Some((re, im)) = t.split_once(',') {
        let re: f64 = re.trim().parse().map_err(|_| format!("bad complex {t}"))?;
        let im: f64 = im.trim().parse().map_err(|_| format!("bad complex {t}"))?;
        return Ok(GaloisParam::Approx(ApproxComplex::new(re, im)));
    }
    let v: f64 = t.parse().map_err(|_| format!("bad parameter {t}"))?;
    Ok(GaloisParam::Approx(ApproxComplex::new(v, 0.0)))
}

fn taft_reports<S: Scalar>(n: u32, s: &S, with_rank: bool) -> (Vec<VerificationReport>, Value) {
    let mut reports = Vec::new();
    reports.push(taft::verify_hopf::<S>(n).expect("n validated"));
    reports.push(taft::verify_comodule(n, s).expect("n validated"));
    let (dim, _) = taft::coinvariants(n, s).expect("n validated");
    let mut coin = VerificationReport::new(format!("taft-coinvariants-N{n}"), 0.0);
    coin.record(if dim == 1 { 0.0 } else { 1.0 }, || format!("dimension {dim} != 1"));
    reports.push(coin);
    let mut extra = json!({ "coinvariant_dimension": dim });
    if with_rank {
        let (rank, bijective) = taft::canonical_map(n, s).expect("n validated");
        let mut rep = VerificationReport::new(format!("taft-canonical-map-N{n}"), 0.0);
        rep.record(if bijective { 0.0 } else { 1.0 }, || {
            format!("rank {rank} of {}", n.pow(4))
        });
        reports.push(rep);
        reports.push(taft::translation_map_check(n, s).expect("bijective canonical map"));
        extra["canonical_rank"] = json!(rank);
        extra["canonical_bijective"] = json!(bijective);
    }
    (reports, extra)
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::VerifyManin { n, backend, json: json_path, dump_matrices } => {
            let backend = backend_for(n, backend);
            let reports = manin_reports(n, backend);
            let mut extra = json!({});
            if dump_matrices {
                let dump = match backend {
                    Backend::Exact => {
                        let w = manin_witness::<CycloScalar>(n).unwrap();
                        witness_dump(&w.a_basis, &w.b_basis)
                    }
                    Backend::Approx => {
                        let w = manin_witness::<ApproxComplex>(n).unwrap();
                        witness_dump(&w.a_basis, &w.b_basis)
                    }
                };
                extra = json!({ "matrices": dump });
            }
            let (doc, pass) = wrap(
                "verify-manin",
                json!({"n": n, "backend": backend_name(backend)}),
                reports,
                extra,
            );
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::StructureConstants { n, backend, format, out } => {
            let backend = backend_for(n, backend);
            let (table_json, table_csv) = match backend {
                Backend::Exact => {
                    let w = manin_witness::<CycloScalar>(n).unwrap();
                    let sc = extract_constants(&w, 0.0).map_err(|e| e.to_string())?;
                    (sc.to_json(), sc.to_csv())
                }
                Backend::Approx => {
                    let w = manin_witness::<ApproxComplex>(n).unwrap();
                    let sc = extract_constants(&w, 1e-10).map_err(|e| e.to_string())?;
                    (sc.to_json(), sc.to_csv())
                }
            };
            match format {
                TableFormat::Json => {
                    let doc = json!({
                        "schema": "1",
                        "command": "structure-constants",
                        "params": {"n": n, "backend": backend_name(backend)},
                        "table": table_json,
                    });
                    output::emit(&doc, out.as_deref()).map_err(|e| e.to_string())?;
                }
                TableFormat::Csv => match out {
                    Some(p) => std::fs::write(p, table_csv).map_err(|e| e.to_string())?,
                    None => print!("{table_csv}"),
                },
            }
            Ok(true)
        }
        Command::SlFixtures { json: json_path } => {
            let reports = sweep::fixture_reports();
            let (doc, pass) = wrap("sl-fixtures", json!({}), reports, json!({}));
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::Classical { window, check_tables, mixed, json: json_path } => {
            let run_all = !check_tables && !mixed;
            let mut reports = Vec::new();
            if check_tables || run_all {
                reports.push(classical_torus::bracket_table_check::<CycloScalar>(window));
                reports.push(classical_torus::pairing_gram_check::<CycloScalar>(window));
            }
            let mut extra = json!({});
            if mixed || run_all {
                let (sc, rep) = classical_torus::mixed_constants::<CycloScalar>(window.min(3));
                reports.push(rep);
                extra = json!({ "mixed_constants": sc.to_json() });
            }
            let (doc, pass) =
                wrap("classical", json!({"window": window}), reports, extra);
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::NcTorus { theta, window, constants, order_plot, json: json_path } => {
            let theta = parse_theta(&theta)?;
            let (sc, rep) = nc_torus::nc_constants(theta, window);
            if let Some(path) = constants {
                let doc = json!({
                    "schema": "1",
                    "command": "nc-torus-constants",
                    "params": {"theta": theta.value(), "window": window},
                    "table": sc.to_json(),
                });
                output::emit(&doc, Some(&path)).map_err(|e| e.to_string())?;
            }
            if let Some(path) = order_plot {
                let mut csv = String::from("m1,m2,sign\n");
                for (m1, m2, sign) in nc_torus::order_classification(theta, 20) {
                    let s = match sign {
                        ConeSign::Positive => 1,
                        ConeSign::Tie => 0,
                        ConeSign::Negative => -1,
                    };
                    csv.push_str(&format!("{m1},{m2},{s}\n"));
                }
                std::fs::write(path, csv).map_err(|e| e.to_string())?;
            }
            let (doc, pass) = wrap(
                "nc-torus",
                json!({"theta": theta.value(), "window": window}),
                vec![rep],
                json!({}),
            );
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::Rieffel { theta, grid, profile, json: json_path } => {
            if profile != "flat-exp" {
                return Err(format!("unknown transition profile {profile}"));
            }
            let summary = projection_summary(theta, grid, TransitionProfile::FlatExponential)
                .map_err(|e| e.to_string())?;
            let mut rep = VerificationReport::new("rieffel-projection", 1e-6);
            rep.record((summary.trace - summary.theta).abs(), || "trace != theta".into());
            rep.record((summary.chern - 1.0).abs(), || "chern != 1".into());
            let mut idem = VerificationReport::new("rieffel-idempotency", 1e-8);
            idem.record(summary.idempotency_residual, || "p^2 != p".into());
            let (doc, pass) = wrap(
                "rieffel",
                json!({"theta": theta, "grid": grid, "profile": profile}),
                vec![rep, idem],
                json!({ "summary": serde_json::to_value(&summary).unwrap() }),
            );
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::Taft { n, s, rank, json: json_path } => {
            let (reports, extra) = match parse_galois_param(&s)? {
                GaloisParam::Exact(v) => taft_reports(n, &v, rank),
                GaloisParam::Approx(v) => taft_reports(n, &v, rank),
            };
            let (doc, pass) =
                wrap("taft", json!({"n": n, "s": s, "rank": rank}), reports, extra);
            output::emit(&doc, json_path.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::All { n_max, n_approx, window, grid, out } => {
            let reports = sweep::full_sweep(n_max, &n_approx, window, grid);
            let (doc, pass) = wrap(
                "all",
                json!({
                    "n_max": n_max,
                    "n_approx": n_approx,
                    "window": window,
                    "grid": grid,
                }),
                reports,
                json!({}),
            );
            output::emit(&doc, out.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
    }
}

fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Exact => "exact",
        Backend::Approx => "approx",
    }
}

fn witness_dump<S: Scalar>(
    a: &[(torus_bialgebra::bialgebra::BasisLabel, torus_bialgebra::matrix::SquareMatrix<S>)],
    b: &[(torus_bialgebra::bialgebra::BasisLabel, torus_bialgebra::matrix::SquareMatrix<S>)],
) -> Value {
    let side = |list: &[(torus_bialgebra::bialgebra::BasisLabel,
                         torus_bialgebra::matrix::SquareMatrix<S>)]| {
        list.iter()
            .map(|(l, m)| {
                let rows: Vec<Vec<Value>> = m
                    .embed_rows()
                    .into_iter()
                    .map(|row| {
                        row.into_iter().map(|c| json!({"re": c.re, "im": c.im})).collect()
                    })
                    .collect();
                json!({"label": l.to_string(), "rows": rows})
            })
            .collect::<Vec<_>>()
    };
    json!({"a_basis": side(a), "b_basis": side(b)})
}

/// Discard type parameter differences in the structure-constants helper
/// used by `sweep`.
pub(crate) fn table_checks<S: Scalar>(
    label: &str,
    witness: &torus_bialgebra::bialgebra::ManinTripleWitness<S>,
    sc: &StructureConstants<S>,
    tol: f64,
) -> Vec<VerificationReport> {
    let rename = |mut r: VerificationReport| {
        r.check = format!("{label}:{}", r.check);
        r
    };
    vec![
        rename(check_jacobi(sc, tol)),
        rename(check_cojacobi(sc, tol)),
        rename(check_cocycle(sc, tol)),
        rename(check_mixed_brackets(witness, sc, tol).expect("labels match")),
    ]
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
