//! Command-line front end for the simplex invariants library.
//!
//! Every subcommand prints one JSON document to stdout (or to --out) and
//! reports through its exit code: 0 when the computation succeeded and any
//! verification it performed passed, 1 when a verification failed, 2 for
//! usage and input errors. Set SIMPLEX_LAB_THREADS to cap the worker pool.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use simplex_lab::catalog::{build_catalog, four_simplex_volume_classes, CatalogPoint};
use simplex_lab::curves::{verify_asymptotics, witness_degree_certificate, CurveFamily, Witness};
use simplex_lab::jacobian::{image_equality_sweep, jacobian};
use simplex_lab::json::{
    area_vector_to_json, edge_vector_to_json, AnyEdgeVector, JsonScalar, RingKind,
};
use simplex_lab::linalg::ExactScalar;
use simplex_lab::metrics::{area_map, cm_volume_squared, gram_volume_squared, SquaredAreaVector};
use simplex_lab::report::{run_all_checks, CheckOptions};
use simplex_lab::scalar::{ComplexScalar, QuadExtScalar, Rational};
use simplex_lab::tracker::{
    local_uniqueness_probe, random_real_simplex_edges, random_real_target, track_fiber,
    TrackerConfig,
};
use simplex_lab::{Ring, SquaredEdgeVector};

#[derive(Parser)]
#[command(
    name = "simplex-lab",
    version,
    about = "Exact and numerical invariants of simplices given by squared edge lengths"
)]
struct Cli {
    /// Write the JSON result to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct EdgeInput {
    /// JSON file holding a squared edge vector {"n", "ring", "entries"}
    #[arg(long, conflicts_with_all = ["point", "n"])]
    edges: Option<PathBuf>,
    /// A catalog point label, e.g. "pairing:0-1,2-3:+1" or "cycle:0-1-2-3-4"
    #[arg(long, requires = "n")]
    point: Option<String>,
    /// Dimension for --point
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Squared volume of a simplex, by the bordered and Gram determinants
    Volume {
        #[command(flatten)]
        input: EdgeInput,
    },
    /// Squared areas of all 2-faces
    Areas {
        #[command(flatten)]
        input: EdgeInput,
    },
    /// The catalog of simplices whose squared 2-face areas all equal 3/16
    Catalog {
        #[arg(long)]
        n: usize,
        /// Also compute each point's squared volume
        #[arg(long)]
        volumes: bool,
        /// Also group the n = 4 catalog into its four volume classes
        #[arg(long)]
        table: bool,
    },
    /// Rank of the area-map Jacobian at a point (exact rings only)
    Jacobian {
        #[command(flatten)]
        input: EdgeInput,
        /// Include the matrix entries in the output
        #[arg(long)]
        matrix: bool,
    },
    /// Compare Jacobian column spans across catalog points (n >= 5)
    Images {
        #[arg(long)]
        n: usize,
        /// Check this many sampled cross-pairing pairs instead of all pairs
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a curve family and verify its asymptotic claims
    Curve {
        /// "odd:<q>", "dim5:a,b,c" or "dim4:a,b,c"
        #[arg(long)]
        family: String,
        /// Include the full edge and area Laurent expansions
        #[arg(long)]
        expansions: bool,
    },
    /// Degree certificate: witness polynomial values against the volume
    Witness {
        /// "odd:<q>", "dim5:a,b,c" or "dim4:a,b,c"
        #[arg(long)]
        family: String,
        /// "heron-product", "area-product:i-j-k-l-m", "difference-product";
        /// may be given multiple times; defaults to the family's usual set
        #[arg(long = "witness")]
        witnesses: Vec<String>,
    },
    /// Track the 64-path n = 4 fiber to a target area vector
    Fiber {
        /// JSON file holding the target squared areas {"n", "ring", "entries"}
        #[arg(long, conflicts_with = "seed_target")]
        target: Option<PathBuf>,
        /// Use the areas of a random real simplex generated from this seed
        #[arg(long)]
        seed_target: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include every endpoint in the output
        #[arg(long)]
        endpoints: bool,
    },
    /// Local uniqueness probe around a real simplex (n >= 5)
    Probe {
        /// JSON file holding the reference squared edge vector
        #[arg(long, conflicts_with_all = ["n", "seed_reference"])]
        reference: Option<PathBuf>,
        /// Dimension for --seed-reference
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Generate a random real reference simplex from this seed
        #[arg(long, default_value_t = 7)]
        seed_reference: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        starts: usize,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
    },
    /// Run the full verification battery
    AllChecks {
        #[arg(long, default_value_t = 17)]
        seed: u64,
        /// Random cases per dimension for the volume-formula agreement check
        #[arg(long, default_value_t = 48)]
        oracle_cases: usize,
        /// Sampled cross-pairing comparisons for the n = 6 image check
        #[arg(long, default_value_t = 200)]
        image_sample: usize,
        /// Random real targets for fiber tracking
        #[arg(long, default_value_t = 20)]
        targets: usize,
        #[arg(long, default_value_t = 40)]
        probe_starts: usize,
    },
}

/// Input and environment problems; reported on stderr with exit code 2.
struct UserError(String);

impl<E: std::fmt::Display> From<E> for UserError {
    fn from(e: E) -> Self {
        UserError(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SIMPLEX_LAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global()
                    .ok();
            }
            _ => {
                eprintln!("SIMPLEX_LAB_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli.command) {
        Ok((value, passed)) => {
            let rendered = serde_json::to_string_pretty(&value).expect("JSON output is valid");
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, rendered + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{rendered}"),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UserError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_edge_input(input: &EdgeInput) -> Result<AnyEdgeVector, UserError> {
    match (&input.edges, &input.point, input.n) {
        (Some(path), None, _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UserError(format!("cannot read {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)?;
            Ok(AnyEdgeVector::from_json(&value)?)
        }
        (None, Some(spec), Some(n)) => {
            let point = CatalogPoint::parse(n, spec)?;
            Ok(match point {
                CatalogPoint::Pairing { edges, .. } => AnyEdgeVector::Rational(edges),
                CatalogPoint::Cycle { edges, .. } => AnyEdgeVector::QuadExt(edges),
            })
        }
        _ => Err(UserError(
            "provide either --edges <file> or --point <spec> --n <n>".to_string(),
        )),
    }
}

fn volume_json<R: Ring + JsonScalar>(s: &SquaredEdgeVector<R>) -> Result<Value, UserError> {
    let direct = cm_volume_squared(s)?.value;
    let gram = gram_volume_squared(s)?.value;
    Ok(json!({
        "n": s.n(),
        "ring": R::KIND.name(),
        "volume": direct.to_json(),
        "volume_gram": gram.to_json(),
        "routes_agree": direct == gram,
    }))
}

fn jacobian_json<R: ExactScalar + JsonScalar>(
    s: &SquaredEdgeVector<R>,
    include_matrix: bool,
) -> Value {
    let m = jacobian(s);
    let rank = R::rank(&m);
    let mut value = json!({
        "n": s.n(),
        "ring": R::KIND.name(),
        "rows": m.rows(),
        "cols": m.cols(),
        "rank": rank,
        "full_column_rank": rank == m.cols(),
    });
    if include_matrix {
        let rows: Vec<Value> = (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(JsonScalar::to_json).collect()))
            .collect();
        value["matrix"] = Value::Array(rows);
    }
    value
}

fn claims_json(curve: &CurveFamily) -> Result<(Value, bool), UserError> {
    let report = verify_asymptotics(curve)?;
    let all_hold = report.all_hold();
    let outcomes: Vec<Value> = report
        .outcomes
        .into_iter()
        .map(|o| {
            json!({
                "subject": o.claim.subject,
                "leading": o.claim.leading.to_json(),
                "remainder_bound": o.claim.remainder_bound,
                "remainder_degree": o.remainder_degree,
                "holds": o.holds,
            })
        })
        .collect();
    Ok((Value::Array(outcomes), all_hold))
}

fn parse_target(path: &PathBuf) -> Result<SquaredAreaVector<ComplexScalar>, UserError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UserError(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)?;
    let ring = value
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| UserError("target must have a \"ring\" field".to_string()))?;
    let target = match RingKind::parse(ring)? {
        RingKind::Complex => simplex_lab::json::area_vector_from_json::<ComplexScalar>(&value)?,
        RingKind::Rational => {
            let exact = simplex_lab::json::area_vector_from_json::<Rational>(&value)?;
            exact.map(|x| ComplexScalar::new(x.to_f64(), 0.0).expect("finite rational"))
        }
        RingKind::QuadExt => {
            let exact = simplex_lab::json::area_vector_from_json::<QuadExtScalar>(&value)?;
            exact.map(|x| {
                let (re, im) = x.to_complex_parts();
                ComplexScalar::new(re, im).expect("finite extension element")
            })
        }
        RingKind::Laurent => {
            return Err(UserError(
                "a Laurent-polynomial vector is a curve, not a numeric target".to_string(),
            ))
        }
    };
    Ok(target)
}

fn run(command: Command) -> Result<(Value, bool), UserError> {
    match command {
        Command::Volume { input } => {
            let value = match load_edge_input(&input)? {
                AnyEdgeVector::Rational(s) => volume_json(&s)?,
                AnyEdgeVector::QuadExt(s) => volume_json(&s)?,
                AnyEdgeVector::Complex(s) => volume_json(&s)?,
                AnyEdgeVector::Laurent(s) => volume_json(&s)?,
            };
            Ok((value, true))
        }
        Command::Areas { input } => {
            let value = match load_edge_input(&input)? {
                AnyEdgeVector::Rational(s) => area_vector_to_json(&area_map(&s)),
                AnyEdgeVector::QuadExt(s) => area_vector_to_json(&area_map(&s)),
                AnyEdgeVector::Complex(s) => area_vector_to_json(&area_map(&s)),
                AnyEdgeVector::Laurent(s) => area_vector_to_json(&area_map(&s)),
            };
            Ok((value, true))
        }
        Command::Catalog { n, volumes, table } => {
            let points = build_catalog(n)?;
            let rendered: Vec<Value> = points
                .iter()
                .map(|p| {
                    let mut v = json!({
                        "label": p.label(),
                        "edges": match p {
                            CatalogPoint::Pairing { edges, .. } => edge_vector_to_json(edges),
                            CatalogPoint::Cycle { edges, .. } => edge_vector_to_json(edges),
                        },
                    });
                    if volumes {
                        if let Ok(w) = p.volume_squared() {
                            v["volume"] = match w.to_rational() {
                                Some(r) => r.to_json(),
                                None => w.to_json(),
                            };
                        }
                    }
                    Ok(v)
                })
                .collect::<Result<_, UserError>>()?;
            let mut value = json!({
                "n": n,
                "size": points.len(),
                "points": rendered,
            });
            if table {
                if n != 4 {
                    return Err(UserError(
                        "--table groups the n = 4 catalog; use --n 4".to_string(),
                    ));
                }
                let classes: Vec<Value> = four_simplex_volume_classes()?
                    .into_iter()
                    .map(|c| {
                        json!({
                            "family": c.description,
                            "points": c.point_count,
                            "volume": c.volume.to_json(),
                        })
                    })
                    .collect();
                value["volume_classes"] = Value::Array(classes);
            }
            Ok((value, true))
        }
        Command::Jacobian { input, matrix } => {
            let value = match load_edge_input(&input)? {
                AnyEdgeVector::Rational(s) => jacobian_json(&s, matrix),
                AnyEdgeVector::QuadExt(s) => jacobian_json(&s, matrix),
                AnyEdgeVector::Laurent(s) => jacobian_json(&s, matrix),
                AnyEdgeVector::Complex(_) => {
                    return Err(UserError(
                        "exact rank needs an exact ring; complex input is not supported here"
                            .to_string(),
                    ))
                }
            };
            Ok((value, true))
        }
        Command::Images { n, sample, seed } => {
            let sweep = image_equality_sweep(n, sample, seed)?;
            let passed = sweep.passed();
            let value = json!({
                "n": sweep.n,
                "points": sweep.points,
                "pairs_checked": sweep.pairs_checked,
                "exhaustive": sweep.exhaustive,
                "mismatches": sweep.mismatches,
                "rank_failures": sweep.rank_failures,
                "passed": passed,
            });
            Ok((value, passed))
        }
        Command::Curve { family, expansions } => {
            let curve = CurveFamily::parse(&family)?;
            let (claims, all_hold) = claims_json(&curve)?;
            let mut value = json!({
                "family": curve.label(),
                "n": curve.n(),
                "volume": curve.volume()?.to_json(),
                "claims": claims,
                "all_claims_hold": all_hold,
            });
            if expansions {
                value["edges"] = edge_vector_to_json(&curve.edge_vector());
                value["areas"] = area_vector_to_json(&curve.area_vector());
            }
            Ok((value, all_hold))
        }
        Command::Witness { family, witnesses } => {
            let curve = CurveFamily::parse(&family)?;
            let witnesses: Vec<Witness> = if witnesses.is_empty() {
                match curve {
                    CurveFamily::Dim4 { .. } => vec![Witness::HeronProduct],
                    CurveFamily::Dim5 { .. } => vec![
                        Witness::AreaProduct([0, 1, 2, 3, 4]),
                        Witness::DifferenceProduct,
                    ],
                    CurveFamily::Odd { .. } => vec![Witness::AreaProduct([0, 1, 2, 3, 4])],
                }
            } else {
                witnesses
                    .iter()
                    .map(|w| Witness::parse(w))
                    .collect::<Result<_, _>>()?
            };
            let report = witness_degree_certificate(&curve, &witnesses)?;
            let value = json!({
                "family": report.curve,
                "witnesses": report.witnesses,
                "areas_bounded": report.areas_bounded,
                "volume_degree": report.volume_degree,
                "product_degree": report.product_degree,
                "certificate_holds": report.holds,
            });
            Ok((value, report.holds))
        }
        Command::Fiber {
            target,
            seed_target,
            seed,
            endpoints,
        } => {
            let target_areas = match (&target, seed_target) {
                (Some(path), None) => parse_target(path)?,
                (None, Some(s)) => random_real_target(4, s),
                (None, None) => {
                    return Err(UserError(
                        "provide either --target <file> or --seed-target <seed>".to_string(),
                    ))
                }
                _ => unreachable!("clap conflicts_with prevents both"),
            };
            let result = track_fiber(&target_areas, &TrackerConfig::with_seed(seed))?;
            let passed = result.all_paths_converged();
            let mut value = json!({
                "paths": result.paths,
                "path_failures": result.path_failures,
                "steps_total": result.steps_total,
                "max_residual": result.max_residual,
                "distinct_endpoints": result.distinct_endpoints,
                "negation_pairs": result.negation_pairs,
                "unpaired": result.unpaired,
                "class_count": result.class_count,
                "real_positive_classes": result.real_positive_classes,
                "all_paths_converged": passed,
            });
            if endpoints {
                let rendered: Vec<Value> = result
                    .endpoints
                    .iter()
                    .map(|e| Value::Array(e.iter().map(JsonScalar::to_json).collect()))
                    .collect();
                value["endpoints"] = Value::Array(rendered);
            }
            Ok((value, passed))
        }
        Command::Probe {
            reference,
            n,
            seed_reference,
            seed,
            starts,
            radius,
        } => {
            let reference_edges = match &reference {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| UserError(format!("cannot read {}: {e}", path.display())))?;
                    let value: Value = serde_json::from_str(&text)?;
                    match AnyEdgeVector::from_json(&value)? {
                        AnyEdgeVector::Complex(s) => s,
                        AnyEdgeVector::Rational(s) => {
                            s.map(|x| ComplexScalar::new(x.to_f64(), 0.0).expect("finite"))
                        }
                        _ => {
                            return Err(UserError(
                                "the probe reference must be rational or complex".to_string(),
                            ))
                        }
                    }
                }
                None => random_real_simplex_edges(n, seed_reference),
            };
            let result = local_uniqueness_probe(
                &reference_edges,
                starts,
                radius,
                &TrackerConfig::with_seed(seed),
            )?;
            let passed = result.passed();
            let value = json!({
                "n": result.n,
                "starts": result.starts,
                "converged": result.converged,
                "matched_reference": result.matched_reference,
                "matched_negation": result.matched_negation,
                "anomalies": result.anomalies,
                "max_matched_distance": result.max_matched_distance,
                "passed": passed,
            });
            Ok((value, passed))
        }
        Command::AllChecks {
            seed,
            oracle_cases,
            image_sample,
            targets,
            probe_starts,
        } => {
            let options = CheckOptions {
                seed,
                oracle_cases,
                image_sample_n6: image_sample,
                tracking_targets: targets,
                probe_starts,
                ..Default::default()
            };
            let report = run_all_checks(&options);
            for check in &report.checks {
                let status = if check.passed() { "pass" } else { "FAIL" };
                eprintln!("{status}  {:<28} {}", check.id, check.detail);
            }
            let passed = report.passed;
            Ok((serde_json::to_value(&report)?, passed))
        }
    }
}
