//! The verification suite: every headline claim as a pass/fail check.
//!
//! Each check function runs one verifiable statement end to end and returns a
//! [`Check`] with a stable id, the claim in words, a pass/fail status and a
//! short detail string (counts, degrees, residuals). [`run_all_checks`] runs
//! the full battery with one set of options; the command-line tool and the
//! test suite both go through these functions, so there is exactly one
//! definition of what "verified" means.

use crate::catalog::{
    build_catalog, classify_four_simplex_restrictions, enumerate_partial_pairings,
    four_simplex_volume_classes, pairing_count_closed_form, CatalogPoint,
};
use crate::curves::{verify_asymptotics, witness_degree_certificate, CurveFamily, Witness};
use crate::index;
use crate::jacobian::{image_equality_sweep, jacobian_rank};
use crate::metrics::{cm_volume_squared, gram_volume_squared, SquaredEdgeVector};
use crate::scalar::Rational;
use crate::tracker::{
    local_uniqueness_probe, random_real_simplex_edges, random_real_target, track_fiber,
    TrackerConfig,
};
use num::bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified (or refuted) statement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(id: &str, claim: &str, passed: bool, detail: String) -> Self {
        Check {
            id: id.to_string(),
            claim: claim.to_string(),
            status: if passed {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            passed: checks.iter().all(Check::passed),
            checks,
        }
    }
}

/// Options for the full battery; the defaults are what the test suite runs.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub seed: u64,
    /// random edge vectors per dimension for the two-volume-formula check
    pub oracle_cases: usize,
    /// sampled cross-pairing comparisons for the n = 6 image check
    pub image_sample_n6: usize,
    /// random real targets for fiber tracking
    pub tracking_targets: usize,
    /// random targets allowed to fail tracking (path failures) before the
    /// check does
    pub tracking_failures_allowed: usize,
    pub probe_starts: usize,
    pub probe_radius: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 17,
            oracle_cases: 48,
            image_sample_n6: 200,
            tracking_targets: 20,
            tracking_failures_allowed: 1,
            probe_starts: 40,
            probe_radius: 0.1,
        }
    }
}

fn random_rational_edges(n: usize, rng: &mut ChaCha20Rng) -> SquaredEdgeVector<Rational> {
    let entries = (0..index::pair_count(n))
        .map(|_| Rational::ratio(rng.gen_range(-24i64..=24), rng.gen_range(1i64..=12)))
        .collect();
    SquaredEdgeVector::new(n, entries).expect("one entry per pair")
}

/// The bordered determinant and the Gram determinant give the same squared
/// volume on random rational inputs, for every dimension 1..=6.
pub fn check_volume_oracle_agreement(options: &CheckOptions) -> Check {
    let mut rng = ChaCha20Rng::seed_from_u64(options.seed);
    let mut cases = 0usize;
    let mut disagreements = 0usize;
    for n in 1..=6 {
        for _ in 0..options.oracle_cases {
            let s = random_rational_edges(n, &mut rng);
            let direct = cm_volume_squared(&s).map(|v| v.value);
            let gram = gram_volume_squared(&s).map(|v| v.value);
            cases += 1;
            if direct != gram {
                disagreements += 1;
            }
        }
    }
    Check::new(
        "volume-oracle-agreement",
        "the bordered-determinant and Gram-determinant squared volumes agree exactly on random rational edge vectors for n = 1..6",
        disagreements == 0,
        format!("{cases} cases, {disagreements} disagreements"),
    )
}

/// Every catalog point maps exactly to the constant area vector 3/16.
pub fn check_catalog_fiber(n: usize) -> Check {
    let expected_size = match n {
        4 => 64,
        _ => {
            let count = pairing_count_closed_form(n);
            (BigUint::from(2u32) * count)
                .try_into()
                .unwrap_or(usize::MAX)
        }
    };
    let result = build_catalog(n).map(|points| {
        let failures = points.iter().filter(|p| !p.is_equiareal()).count();
        (points.len(), failures)
    });
    let (passed, detail) = match result {
        Ok((size, failures)) => (
            size == expected_size && failures == 0,
            format!("{size} points (expected {expected_size}), {failures} non-equiareal"),
        ),
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        &format!("fiber-catalog-n{n}"),
        &format!("all catalog points for n = {n} have every squared 2-face area exactly 3/16"),
        passed,
        detail,
    )
}

/// Enumerated pairing counts match the closed-form sum for n = 1..8.
pub fn check_pairing_count() -> Check {
    let mut detail = Vec::new();
    let mut passed = true;
    for n in 1..=8 {
        let enumerated = enumerate_partial_pairings(n).len();
        let formula = pairing_count_closed_form(n);
        if BigUint::from(enumerated) != formula {
            passed = false;
        }
        detail.push(format!("n={n}:{enumerated}"));
    }
    Check::new(
        "pairing-count-closed-form",
        "the enumeration of partial pairings matches the closed-form count for n = 1..8",
        passed,
        detail.join(" "),
    )
}

/// The four n = 4 squared-volume values, with their multiplicities.
pub fn check_volume_table() -> Check {
    let expected = [
        ("pairing of size 0", 2usize, Rational::ratio(5, 9216)),
        ("pairing of size 1", 20, Rational::ratio(-1, 3072)),
        ("pairing of size 2", 30, Rational::ratio(-3, 1024)),
        ("five-cycle", 12, Rational::ratio(5, 1024)),
    ];
    let (passed, detail) = match four_simplex_volume_classes() {
        Ok(classes) => {
            let matches = classes.len() == expected.len()
                && classes.iter().zip(&expected).all(|(c, (d, n, w))| {
                    c.description == *d && c.point_count == *n && &c.volume == w
                });
            let detail = classes
                .iter()
                .map(|c| format!("{} x{}: {}", c.description, c.point_count, c.volume))
                .collect::<Vec<_>>()
                .join("; ");
            (matches, detail)
        }
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        "volume-table-n4",
        "the n = 4 catalog takes exactly four squared volumes: 5/9216, -1/3072, -3/1024 and 5/1024, by family",
        passed,
        detail,
    )
}

/// The area-map Jacobian has full column rank at every catalog point.
pub fn check_jacobian_rank(n: usize) -> Check {
    let full = index::pair_count(n);
    let result = build_catalog(n).map(|points| {
        let deficient: usize = points
            .par_iter()
            .filter(|point| {
                let rank = match point {
                    CatalogPoint::Pairing { edges, .. } => jacobian_rank(edges),
                    CatalogPoint::Cycle { edges, .. } => jacobian_rank(edges),
                };
                rank != full
            })
            .count();
        (points.len(), deficient)
    });
    let (passed, detail) = match result {
        Ok((size, deficient)) => (
            deficient == 0,
            format!("{size} points, {deficient} rank-deficient (full rank = {full})"),
        ),
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        &format!("jacobian-rank-n{n}"),
        &format!(
            "the area-map Jacobian has full column rank {full} at every catalog point for n = {n}"
        ),
        passed,
        detail,
    )
}

/// Exhaustive n = 5 image comparison: same pairing <=> same column span.
pub fn check_image_sweep_n5() -> Check {
    let (passed, detail) = match image_equality_sweep(5, None, 0) {
        Ok(sweep) => (
            sweep.passed() && sweep.points == 152 && sweep.pairs_checked == 11476,
            format!(
                "{} points, {} pairs, {} mismatches, {} rank failures",
                sweep.points, sweep.pairs_checked, sweep.mismatches, sweep.rank_failures
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        "image-sweep-n5",
        "for n = 5, two catalog points have Jacobians with the same column span exactly when they come from the same pairing (all 11476 pairs)",
        passed,
        detail,
    )
}

/// Sampled n = 6 image comparison.
pub fn check_image_sample_n6(options: &CheckOptions) -> Check {
    let (passed, detail) =
        match image_equality_sweep(6, Some(options.image_sample_n6), options.seed) {
            Ok(sweep) => (
                sweep.passed(),
                format!(
                    "{} points, {} pairs sampled, {} mismatches, {} rank failures",
                    sweep.points, sweep.pairs_checked, sweep.mismatches, sweep.rank_failures
                ),
            ),
            Err(e) => (false, e.to_string()),
        };
    Check::new(
        "image-sample-n6",
        "for n = 6, sampled pairs of catalog points have equal Jacobian column spans exactly when they share a pairing",
        passed,
        detail,
    )
}

/// Each tetrahedral restriction of each n = 4 catalog point satisfies exactly
/// one of the four classification conditions, 80 restrictions per class.
pub fn check_classification() -> Check {
    let (passed, detail) = match classify_four_simplex_restrictions() {
        Ok(sweep) => {
            let balanced =
                sweep.class_counts.values().all(|&c| c == 80) && sweep.class_counts.len() == 4;
            (
                sweep.restrictions == 320
                    && sweep.unclassified == 0
                    && sweep.multi_class == 0
                    && balanced,
                format!(
                    "{} restrictions, {} unclassified, {} multi-class, counts {:?}",
                    sweep.restrictions, sweep.unclassified, sweep.multi_class, sweep.class_counts
                ),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        "classification-catalog",
        "every tetrahedral restriction of every n = 4 catalog point satisfies exactly one of the four equiareal classes, 80 each",
        passed,
        detail,
    )
}

/// The two-block curves: exact constant areas and exactly linear volume.
pub fn check_odd_curve(q: usize) -> Check {
    let result = CurveFamily::odd(q).and_then(|curve| verify_asymptotics(&curve));
    let (passed, detail) = match result {
        Ok(report) => {
            let failing = report.outcomes.iter().filter(|o| !o.holds).count();
            (
                report.all_hold(),
                format!("{} claims, {} failing", report.outcomes.len(), failing),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        &format!("odd-curve-q{q}"),
        &format!("on the two-block curve with q = {q}, every area is constant (0 or -1/16) and the squared volume is an exact linear polynomial in t"),
        passed,
        detail,
    )
}

const CURVE_PARAMETERS: [(i64, i64, i64); 3] = [(1, 1, 1), (2, 1, 3), (3, -2, 1)];

fn parametrized_curves(dim5: bool) -> Vec<CurveFamily> {
    CURVE_PARAMETERS
        .iter()
        .map(|&(a, b, c)| {
            let (a, b, c) = (
                Rational::from_integer(a),
                Rational::from_integer(b),
                Rational::from_integer(c),
            );
            if dim5 {
                CurveFamily::dim5(a, b, c).expect("valid parameters")
            } else {
                CurveFamily::dim4(a, b, c).expect("valid parameters")
            }
        })
        .collect()
}

/// Leading terms and remainder bounds for every area and the volume, on the
/// five- and six-vertex curves, at several parameter choices.
pub fn check_curve_asymptotics(dim5: bool) -> Check {
    let n = if dim5 { 5 } else { 4 };
    let mut passed = true;
    let mut details = Vec::new();
    for curve in parametrized_curves(dim5) {
        match verify_asymptotics(&curve) {
            Ok(report) => {
                let failing = report.outcomes.iter().filter(|o| !o.holds).count();
                if failing > 0 {
                    passed = false;
                }
                details.push(format!(
                    "{}: {} claims ok",
                    curve.label(),
                    report.outcomes.len() - failing
                ));
            }
            Err(e) => {
                passed = false;
                details.push(format!("{}: {e}", curve.label()));
            }
        }
    }
    Check::new(
        &format!("asymptotics-dim{n}"),
        &format!("on the n = {n} curve family, every squared area tends to its predicted constant and the squared volume has the predicted leading term"),
        passed,
        details.join("; "),
    )
}

/// Witness certificates: witness * W stays bounded although W does not.
pub fn check_certificate(dim5: bool) -> Check {
    let n = if dim5 { 5 } else { 4 };
    let witnesses: Vec<Witness> = if dim5 {
        vec![
            Witness::AreaProduct([0, 1, 2, 3, 4]),
            Witness::DifferenceProduct,
        ]
    } else {
        vec![Witness::HeronProduct]
    };
    let mut passed = true;
    let mut details = Vec::new();
    for curve in parametrized_curves(dim5) {
        match witness_degree_certificate(&curve, &witnesses) {
            Ok(report) => {
                if !report.holds {
                    passed = false;
                }
                details.push(format!(
                    "{}: deg W = {:?}, deg product = {:?}",
                    report.curve, report.volume_degree, report.product_degree
                ));
            }
            Err(e) => {
                passed = false;
                details.push(format!("{}: {e}", curve.label()));
            }
        }
    }
    let witness_names = witnesses
        .iter()
        .map(|w| w.label())
        .collect::<Vec<_>>()
        .join(" * ");
    Check::new(
        &format!("certificate-dim{n}"),
        &format!("on the n = {n} curves the product ({witness_names}) * W has top degree <= 0 while W itself is unbounded"),
        passed,
        details.join("; "),
    )
}

/// Tracking the fiber back to its own start target reproduces the catalog
/// structure: 64 endpoints, 32 negation classes, 26 real positive.
pub fn check_fiber_tracking_start(options: &CheckOptions) -> Check {
    let target = crate::metrics::area_map(&SquaredEdgeVector::constant(
        4,
        crate::scalar::ComplexScalar::one(),
    ));
    let (passed, detail) = match track_fiber(&target, &TrackerConfig::with_seed(options.seed)) {
        Ok(r) => (
            r.path_failures == 0
                && r.distinct_endpoints == 64
                && r.class_count == 32
                && r.negation_pairs == 32
                && r.real_positive_classes == 26,
            format!(
                "{} paths, {} failures, {} distinct, {} classes, {} real positive, max residual {:.2e}",
                r.paths, r.path_failures, r.distinct_endpoints, r.class_count,
                r.real_positive_classes, r.max_residual
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        "fiber-tracking-start",
        "tracking all 64 start points to the constant target reproduces 64 distinct endpoints in 32 negation classes, 26 of them real and positive",
        passed,
        detail,
    )
}

/// Fiber tracking to random real targets: paths converge and endpoints form
/// at most 32 negation classes, at least one of them real positive.
pub fn check_fiber_tracking_random(options: &CheckOptions) -> Check {
    let results: Vec<(
        u64,
        Result<crate::tracker::FiberResult, crate::tracker::TrackError>,
    )> = (0..options.tracking_targets as u64)
        .map(|k| {
            let seed = options.seed.wrapping_add(1000 + k);
            let target = random_real_target(4, seed);
            (seed, track_fiber(&target, &TrackerConfig::with_seed(seed)))
        })
        .collect();
    let mut clean = 0usize;
    let mut structural_failures = 0usize;
    let mut worst_residual = 0.0f64;
    for (_, result) in &results {
        match result {
            Ok(r) => {
                if r.path_failures == 0 {
                    clean += 1;
                }
                worst_residual = worst_residual.max(r.max_residual);
                if r.class_count > 32 || r.real_positive_classes == 0 {
                    structural_failures += 1;
                }
            }
            Err(_) => structural_failures += 1,
        }
    }
    let needed = options
        .tracking_targets
        .saturating_sub(options.tracking_failures_allowed);
    Check::new(
        "fiber-tracking-n4",
        "for random real area targets, the 64 tracked paths converge, land in at most 32 negation classes and include a real positive simplex",
        clean >= needed && structural_failures == 0,
        format!(
            "{} of {} targets with zero path failures (needed {needed}), {} structural failures, worst residual {:.2e}",
            clean,
            options.tracking_targets,
            structural_failures,
            worst_residual
        ),
    )
}

/// Local uniqueness at n = 5: Gauss-Newton from perturbed starts only ever
/// returns the reference point or its negation.
pub fn check_probe_n5(options: &CheckOptions) -> Check {
    let reference = random_real_simplex_edges(5, options.seed.wrapping_add(77));
    let (passed, detail) = match local_uniqueness_probe(
        &reference,
        options.probe_starts,
        options.probe_radius,
        &TrackerConfig::with_seed(options.seed),
    ) {
        Ok(r) => (
            r.passed() && r.converged == r.starts,
            format!(
                "{} starts, {} converged, {} matched reference, {} matched negation, {} anomalies",
                r.starts, r.converged, r.matched_reference, r.matched_negation, r.anomalies
            ),
        ),
        Err(e) => (false, e.to_string()),
    };
    Check::new(
        "probe-n5",
        "near a random real n = 5 simplex, every converged Gauss-Newton endpoint over its own area vector is the simplex or its negation",
        passed,
        detail,
    )
}

/// The full battery.
pub fn run_all_checks(options: &CheckOptions) -> VerificationReport {
    let mut checks = vec![
        check_volume_oracle_agreement(options),
        check_pairing_count(),
        check_catalog_fiber(4),
        check_catalog_fiber(5),
        check_catalog_fiber(6),
        check_volume_table(),
        check_classification(),
        check_jacobian_rank(4),
        check_jacobian_rank(5),
        check_jacobian_rank(6),
        check_image_sweep_n5(),
        check_image_sample_n6(options),
        check_odd_curve(3),
        check_odd_curve(4),
        check_curve_asymptotics(true),
        check_curve_asymptotics(false),
        check_certificate(true),
        check_certificate(false),
        check_fiber_tracking_start(options),
        check_fiber_tracking_random(options),
        check_probe_n5(options),
    ];
    // stable order: keep insertion order, already grouped by topic
    checks.shrink_to_fit();
    VerificationReport::new("simplex-lab", checks)
}
