//! Numerical fiber exploration for the area map.
//!
//! For n = 4 the area map takes the ten squared edge lengths to the ten
//! squared 2-face areas — a square polynomial system, so a generic area
//! vector has finitely many complex preimages. [`track_fiber`] counts them by
//! continuation: every catalog point is a known exact solution over the
//! constant area vector (3/16, ..., 3/16), and each one is carried to the
//! requested target along the blended path
//!
//!   y(tau) = ((1 - tau) g y0 + tau y1) / ((1 - tau) g + tau),
//!
//! where g is a random unit-modulus complex constant. The complex blend
//! keeps intermediate systems away from the discriminant locus (for real
//! tau the denominator never vanishes when Im g != 0), which is what makes
//! the 64 paths generically smooth. Each step is an Euler predictor along
//! the path tangent followed by Newton correction; the step size halves on
//! failed corrections and grows back after repeated clean steps.
//!
//! Since every squared area is quadratic in the edge entries, s and -s always
//! map to the same areas; endpoints are therefore reported both raw and
//! grouped into negation classes. Real classes with strictly positive
//! entries are the ones a real simplex can realize.
//!
//! For n >= 5 the system is overdetermined (more areas than edges) and the
//! interesting question is local: does anything *near* a real simplex map to
//! the same areas, other than the simplex itself and its negation?
//! [`local_uniqueness_probe`] starts Gauss-Newton iterations from random
//! complex perturbations and checks every converged endpoint lands on one of
//! those two points.

use crate::catalog::{build_catalog, CatalogError};
use crate::index;
use crate::metrics::{MetricsError, SquaredAreaVector, SquaredEdgeVector};
use crate::scalar::ComplexScalar;
use num::complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrackError {
    #[error("fiber tracking is implemented for n = 4 targets, got n = {0}")]
    SquareSystemOnly(usize),
    #[error("the local probe needs n >= 5, got n = {0}")]
    ProbeNeedsOverdetermined(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// Tuning knobs for continuation and the local probe.
#[derive(Debug, Clone, PartialEq)]
pub struct TrackerConfig {
    /// first attempted step in tau
    pub step_initial: f64,
    /// give up on a path when the step must shrink below this
    pub step_min: f64,
    /// never grow the step beyond this
    pub step_max: f64,
    /// Newton/Gauss-Newton convergence threshold on the max-norm residual
    pub newton_tol: f64,
    pub newton_max_iters: usize,
    /// endpoints within this max-norm distance are the same point
    pub dedupe_tol: f64,
    /// residual above which a finished path is still counted as failed
    pub accept_residual: f64,
    /// a path whose iterate grows beyond this norm is abandoned
    pub divergence_bound: f64,
    /// restarts per path (halved initial step, fresh blend constant)
    pub max_path_retries: usize,
    /// master seed for blend constants, retries and probe starts
    pub seed: u64,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            step_initial: 0.05,
            step_min: 1e-7,
            step_max: 0.25,
            newton_tol: 1e-10,
            newton_max_iters: 12,
            dedupe_tol: 1e-6,
            accept_residual: 1e-8,
            divergence_bound: 1e8,
            max_path_retries: 3,
            seed: 0,
        }
    }
}

impl TrackerConfig {
    pub fn with_seed(seed: u64) -> Self {
        TrackerConfig {
            seed,
            ..Default::default()
        }
    }
}

/// Outcome of tracking the full n = 4 fiber.
#[derive(Debug, Clone)]
pub struct FiberResult {
    pub paths: usize,
    pub path_failures: usize,
    /// accepted endpoints, one per converged path, in path order
    pub endpoints: Vec<Vec<ComplexScalar>>,
    /// final residual of each accepted endpoint
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    /// predictor-corrector steps summed over all paths
    pub steps_total: usize,
    /// endpoints after merging duplicates
    pub distinct_endpoints: usize,
    /// distinct endpoints paired with their negation
    pub negation_pairs: usize,
    /// distinct endpoints whose negation did not show up
    pub unpaired: usize,
    /// negation classes ({s, -s} counts once)
    pub class_count: usize,
    /// classes containing a real representative with all entries positive
    pub real_positive_classes: usize,
}

impl FiberResult {
    pub fn all_paths_converged(&self) -> bool {
        self.path_failures == 0
    }
}

// ---------------------------------------------------------------------------
// complex-vector helpers (plain Complex64 internally; ComplexScalar at the
// public boundary)

fn inf_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn dist_inf(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn neg_dist_inf(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x + y).norm())
        .fold(0.0, f64::max)
}

fn all_finite(v: &[Complex64]) -> bool {
    v.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Squared areas of all 2-faces, directly over Complex64 entries.
fn area_eval(n: usize, s: &[Complex64]) -> Vec<Complex64> {
    index::triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let a = s[index::pair_position(n, i, j)];
            let b = s[index::pair_position(n, j, k)];
            let c = s[index::pair_position(n, i, k)];
            ((a * b + b * c + c * a) * 2.0 - a * a - b * b - c * c) / 16.0
        })
        .collect()
}

/// Jacobian of [`area_eval`]: triples by pairs.
fn jacobian_eval(n: usize, s: &[Complex64]) -> Vec<Vec<Complex64>> {
    let pairs = index::pair_count(n);
    index::triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let mut row = vec![Complex64::new(0.0, 0.0); pairs];
            for (a, b, v) in [(i, j, k), (j, k, i), (i, k, j)] {
                let other = s[index::pair_position(n, a, v)] + s[index::pair_position(n, b, v)];
                row[index::pair_position(n, a, b)] =
                    (other - s[index::pair_position(n, a, b)]) / 8.0;
            }
            row
        })
        .collect()
}

/// Solve a square complex system in place by partially pivoted elimination.
/// Returns None when a pivot column is numerically zero.
fn lu_solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let m = a.len();
    for k in 0..m {
        let pivot_row = (k..m).max_by(|&r, &s| {
            a[r][k]
                .norm()
                .partial_cmp(&a[s][k].norm())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot_row][k].norm() < 1e-14 {
            return None;
        }
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_vals = &top[k];
        let bk = b[k];
        for (offset, row) in rest.iter_mut().enumerate() {
            let factor = row[k] / pivot_vals[k];
            for (x, v) in row[k..].iter_mut().zip(&pivot_vals[k..]) {
                *x -= factor * v;
            }
            b[k + 1 + offset] -= factor * bk;
        }
    }
    // back substitution
    let mut x = vec![Complex64::new(0.0, 0.0); m];
    for k in (0..m).rev() {
        let mut acc = b[k];
        for c in (k + 1)..m {
            acc -= a[k][c] * x[c];
        }
        x[k] = acc / a[k][k];
    }
    all_finite(&x).then_some(x)
}

/// Newton iteration for the square n = 4 system A(s) = y. Returns the final
/// residual when it converges.
fn newton_correct(
    n: usize,
    s: &mut [Complex64],
    y: &[Complex64],
    tol: f64,
    max_iters: usize,
) -> Option<f64> {
    for _ in 0..max_iters {
        let residual: Vec<Complex64> = area_eval(n, s)
            .into_iter()
            .zip(y)
            .map(|(a, t)| t - a)
            .collect();
        let r = inf_norm(&residual);
        if r <= tol {
            return Some(r);
        }
        let delta = lu_solve(jacobian_eval(n, s), residual)?;
        for (si, d) in s.iter_mut().zip(&delta) {
            *si += d;
        }
        if !all_finite(s) {
            return None;
        }
    }
    let r = inf_norm(
        &area_eval(n, s)
            .into_iter()
            .zip(y)
            .map(|(a, t)| t - a)
            .collect::<Vec<_>>(),
    );
    (r <= tol).then_some(r)
}

/// One Gauss-Newton step for the overdetermined system: solve the normal
/// equations (J^H J) d = J^H r.
fn gauss_newton_step(n: usize, s: &[Complex64], residual: &[Complex64]) -> Option<Vec<Complex64>> {
    let j = jacobian_eval(n, s);
    let cols = j[0].len();
    let mut normal = vec![vec![Complex64::new(0.0, 0.0); cols]; cols];
    let mut rhs = vec![Complex64::new(0.0, 0.0); cols];
    for p in 0..cols {
        for q in 0..cols {
            normal[p][q] = j.iter().map(|row| row[p].conj() * row[q]).sum();
        }
        rhs[p] = j
            .iter()
            .zip(residual)
            .map(|(row, r)| row[p].conj() * r)
            .sum();
    }
    lu_solve(normal, rhs)
}

/// A unit-modulus constant with its imaginary part bounded away from zero,
/// so the blend denominator (1 - tau) g + tau cannot vanish for tau in [0, 1].
fn draw_blend_constant(rng: &mut ChaCha20Rng) -> Complex64 {
    loop {
        let angle = rng.gen::<f64>() * std::f64::consts::TAU;
        let g = Complex64::new(angle.cos(), angle.sin());
        if g.im.abs() > 0.1 {
            return g;
        }
    }
}

struct PathOutcome {
    endpoint: Option<(Vec<Complex64>, f64)>,
    steps: usize,
}

/// Track one start point from y0 to y1, retrying with a halved initial step
/// and a fresh blend constant on failure.
fn track_path(
    n: usize,
    start: &[Complex64],
    y0: &[Complex64],
    y1: &[Complex64],
    config: &TrackerConfig,
    path_seed: u64,
) -> PathOutcome {
    let mut rng = ChaCha20Rng::seed_from_u64(path_seed);
    let mut steps = 0usize;
    for attempt in 0..=config.max_path_retries {
        let g = draw_blend_constant(&mut rng);
        let initial = config.step_initial / f64::powi(2.0, attempt as i32);
        if let Some((endpoint, residual)) =
            run_path(n, start, y0, y1, g, initial, config, &mut steps)
        {
            return PathOutcome {
                endpoint: Some((endpoint, residual)),
                steps,
            };
        }
    }
    PathOutcome {
        endpoint: None,
        steps,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_path(
    n: usize,
    start: &[Complex64],
    y0: &[Complex64],
    y1: &[Complex64],
    g: Complex64,
    step_initial: f64,
    config: &TrackerConfig,
    steps: &mut usize,
) -> Option<(Vec<Complex64>, f64)> {
    let blend = |tau: f64| -> Vec<Complex64> {
        let d = g * (1.0 - tau) + tau;
        y0.iter()
            .zip(y1)
            .map(|(a, b)| (g * (1.0 - tau) * a + tau * b) / d)
            .collect()
    };
    let blend_derivative = |tau: f64| -> Vec<Complex64> {
        let d = g * (1.0 - tau) + tau;
        let d_prime = Complex64::new(1.0, 0.0) - g;
        y0.iter()
            .zip(y1)
            .map(|(a, b)| {
                let num = g * (1.0 - tau) * a + tau * b;
                let num_prime = b - g * a;
                (num_prime * d - num * d_prime) / (d * d)
            })
            .collect()
    };

    let mut s: Vec<Complex64> = start.to_vec();
    let mut tau = 0.0f64;
    let mut h = step_initial;
    let mut clean_steps = 0u32;
    while tau < 1.0 {
        let step = h.min(1.0 - tau);
        // Euler predictor along the tangent: J ds = y'(tau)
        let mut predicted = s.clone();
        if let Some(tangent) = lu_solve(jacobian_eval(n, &s), blend_derivative(tau)) {
            for (p, t) in predicted.iter_mut().zip(&tangent) {
                *p += t * step;
            }
        }
        let y_next = blend(tau + step);
        let mut corrected = predicted;
        match newton_correct(
            n,
            &mut corrected,
            &y_next,
            config.newton_tol,
            config.newton_max_iters,
        ) {
            Some(_) if inf_norm(&corrected) <= config.divergence_bound => {
                s = corrected;
                tau += step;
                *steps += 1;
                clean_steps += 1;
                if clean_steps >= 3 {
                    h = (h * 2.0).min(config.step_max);
                    clean_steps = 0;
                }
            }
            _ => {
                h /= 2.0;
                clean_steps = 0;
                if h < config.step_min {
                    return None;
                }
            }
        }
    }
    // final polish directly against the target
    let residual = newton_correct(n, &mut s, y1, config.newton_tol, config.newton_max_iters)
        .unwrap_or(f64::INFINITY);
    (residual <= config.accept_residual && all_finite(&s)).then_some((s, residual))
}

/// Track all 64 catalog start points of the n = 4 fiber to the given target
/// area vector.
pub fn track_fiber(
    target: &SquaredAreaVector<ComplexScalar>,
    config: &TrackerConfig,
) -> Result<FiberResult, TrackError> {
    if target.n() != 4 {
        return Err(TrackError::SquareSystemOnly(target.n()));
    }
    let starts: Vec<Vec<Complex64>> = build_catalog(4)?
        .iter()
        .map(|p| p.complex_edges().entries().iter().map(|z| z.0).collect())
        .collect();
    let y0: Vec<Complex64> = vec![Complex64::new(3.0 / 16.0, 0.0); index::triple_count(4)];
    let y1: Vec<Complex64> = target.entries().iter().map(|z| z.0).collect();

    let outcomes: Vec<PathOutcome> = starts
        .par_iter()
        .enumerate()
        .map(|(idx, start)| {
            let path_seed = config
                .seed
                .wrapping_add((idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            track_path(4, start, &y0, &y1, config, path_seed)
        })
        .collect();

    let mut endpoints = Vec::new();
    let mut residuals = Vec::new();
    let mut path_failures = 0usize;
    let mut steps_total = 0usize;
    for outcome in outcomes {
        steps_total += outcome.steps;
        match outcome.endpoint {
            Some((endpoint, residual)) => {
                endpoints.push(endpoint);
                residuals.push(residual);
            }
            None => path_failures += 1,
        }
    }

    // merge duplicates
    let mut representatives: Vec<Vec<Complex64>> = Vec::new();
    for e in &endpoints {
        if !representatives
            .iter()
            .any(|r| dist_inf(r, e) < config.dedupe_tol)
        {
            representatives.push(e.clone());
        }
    }

    // pair every representative with its negation where present
    let m = representatives.len();
    let mut partner: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        for j in (i + 1)..m {
            if partner[i].is_none()
                && partner[j].is_none()
                && neg_dist_inf(&representatives[i], &representatives[j]) < config.dedupe_tol
            {
                partner[i] = Some(j);
                partner[j] = Some(i);
            }
        }
    }
    let negation_pairs = partner.iter().filter(|p| p.is_some()).count() / 2;
    let unpaired = m - 2 * negation_pairs;
    let class_count = negation_pairs + unpaired;

    let is_real_positive = |v: &[Complex64]| {
        v.iter()
            .all(|z| z.im.abs() <= config.dedupe_tol && z.re > config.dedupe_tol)
    };
    let mut real_positive_classes = 0usize;
    for i in 0..m {
        let lead = partner[i].is_none_or(|j| i < j);
        if lead {
            let class_has_real = is_real_positive(&representatives[i])
                || partner[i].is_some_and(|j| is_real_positive(&representatives[j]));
            if class_has_real {
                real_positive_classes += 1;
            }
        }
    }

    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    Ok(FiberResult {
        paths: starts.len(),
        path_failures,
        endpoints: endpoints
            .into_iter()
            .map(|e| e.into_iter().map(ComplexScalar).collect())
            .collect(),
        residuals,
        max_residual,
        steps_total,
        distinct_endpoints: m,
        negation_pairs,
        unpaired,
        class_count,
        real_positive_classes,
    })
}

/// Squared edge lengths of a random real simplex: n + 1 points with
/// coordinates uniform in [0, 2)^n, deterministic in the seed.
pub fn random_real_simplex_edges(n: usize, seed: u64) -> SquaredEdgeVector<ComplexScalar> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let points: Vec<Vec<f64>> = (0..=n)
        .map(|_| (0..n).map(|_| rng.gen::<f64>() * 2.0).collect())
        .collect();
    let entries: Vec<ComplexScalar> = index::pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let d2: f64 = points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            ComplexScalar::new(d2, 0.0).expect("squared distances are finite")
        })
        .collect();
    SquaredEdgeVector::new(n, entries).expect("one entry per pair")
}

/// Outcome of the overdetermined local-uniqueness probe.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeResult {
    pub n: usize,
    pub starts: usize,
    pub converged: usize,
    /// converged endpoints within tolerance of the reference point
    pub matched_reference: usize,
    /// converged endpoints within tolerance of its negation
    pub matched_negation: usize,
    /// converged endpoints near neither — local uniqueness violations
    pub anomalies: usize,
    pub max_matched_distance: f64,
}

impl ProbeResult {
    pub fn passed(&self) -> bool {
        self.anomalies == 0 && self.converged > 0
    }
}

/// Start Gauss-Newton from `starts` random complex perturbations of a
/// reference edge vector (n >= 5) and test whether every converged endpoint
/// is the reference point or its negation.
pub fn local_uniqueness_probe(
    reference: &SquaredEdgeVector<ComplexScalar>,
    starts: usize,
    radius: f64,
    config: &TrackerConfig,
) -> Result<ProbeResult, TrackError> {
    let n = reference.n();
    if n < 5 {
        return Err(TrackError::ProbeNeedsOverdetermined(n));
    }
    let s_true: Vec<Complex64> = reference.entries().iter().map(|z| z.0).collect();
    let y: Vec<Complex64> = area_eval(n, &s_true);
    let iteration_budget = 4 * config.newton_max_iters;

    let outcomes: Vec<Option<Vec<Complex64>>> = (0..starts)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha20Rng::seed_from_u64(
                config
                    .seed
                    .wrapping_add((k as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)),
            );
            let mut s: Vec<Complex64> = s_true
                .iter()
                .map(|z| {
                    z + Complex64::new(
                        (rng.gen::<f64>() * 2.0 - 1.0) * radius,
                        (rng.gen::<f64>() * 2.0 - 1.0) * radius,
                    )
                })
                .collect();
            for _ in 0..iteration_budget {
                let residual: Vec<Complex64> = area_eval(n, &s)
                    .into_iter()
                    .zip(&y)
                    .map(|(a, t)| t - a)
                    .collect();
                if inf_norm(&residual) <= config.newton_tol {
                    return Some(s);
                }
                match gauss_newton_step(n, &s, &residual) {
                    Some(delta) => {
                        for (si, d) in s.iter_mut().zip(&delta) {
                            *si += d;
                        }
                        if !all_finite(&s) || inf_norm(&s) > config.divergence_bound {
                            return None;
                        }
                    }
                    None => return None,
                }
            }
            let residual: Vec<Complex64> = area_eval(n, &s)
                .into_iter()
                .zip(&y)
                .map(|(a, t)| t - a)
                .collect();
            (inf_norm(&residual) <= config.newton_tol).then_some(s)
        })
        .collect();

    let mut converged = 0usize;
    let mut matched_reference = 0usize;
    let mut matched_negation = 0usize;
    let mut anomalies = 0usize;
    let mut max_matched_distance = 0.0f64;
    for endpoint in outcomes.into_iter().flatten() {
        converged += 1;
        let d_ref = dist_inf(&endpoint, &s_true);
        let d_neg = neg_dist_inf(&endpoint, &s_true);
        if d_ref < config.dedupe_tol {
            matched_reference += 1;
            max_matched_distance = max_matched_distance.max(d_ref);
        } else if d_neg < config.dedupe_tol {
            matched_negation += 1;
            max_matched_distance = max_matched_distance.max(d_neg);
        } else {
            anomalies += 1;
        }
    }

    Ok(ProbeResult {
        n,
        starts,
        converged,
        matched_reference,
        matched_negation,
        anomalies,
        max_matched_distance,
    })
}

/// Area vector of a random real simplex, as a complex target for tracking.
pub fn random_real_target(n: usize, seed: u64) -> SquaredAreaVector<ComplexScalar> {
    let edges = random_real_simplex_edges(n, seed);
    crate::metrics::area_map(&edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_solve_recovers_a_known_solution() {
        let a = vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(0.0, -1.0), Complex64::new(3.0, 0.0)],
        ];
        let x_true = [Complex64::new(1.0, -2.0), Complex64::new(0.5, 0.25)];
        let b: Vec<Complex64> = a
            .iter()
            .map(|row| row[0] * x_true[0] + row[1] * x_true[1])
            .collect();
        let x = lu_solve(a, b).unwrap();
        assert!(dist_inf(&x, &x_true) < 1e-12);
    }

    #[test]
    fn lu_solve_rejects_singular_systems() {
        let a = vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            vec![Complex64::new(2.0, 0.0), Complex64::new(4.0, 0.0)],
        ];
        let b = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        assert!(lu_solve(a, b).is_none());
    }

    #[test]
    fn area_eval_matches_the_exact_map_on_the_catalog_start() {
        let s = vec![Complex64::new(1.0, 0.0); 10];
        for a in area_eval(4, &s) {
            assert!((a - Complex64::new(3.0 / 16.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn tracking_to_the_start_target_recovers_the_catalog_structure() {
        let target = SquaredAreaVector::constant(4, ComplexScalar::new(3.0 / 16.0, 0.0).unwrap());
        let result = track_fiber(&target, &TrackerConfig::with_seed(11)).unwrap();
        assert_eq!(result.paths, 64);
        assert_eq!(result.path_failures, 0);
        assert_eq!(result.distinct_endpoints, 64);
        assert_eq!(result.negation_pairs, 32);
        assert_eq!(result.unpaired, 0);
        assert_eq!(result.class_count, 32);
        assert_eq!(result.real_positive_classes, 26);
        assert!(result.max_residual <= 1e-10);
    }

    #[test]
    fn tracking_to_a_random_real_target() {
        let target = random_real_target(4, 1);
        let result = track_fiber(&target, &TrackerConfig::with_seed(1)).unwrap();
        assert_eq!(result.paths, 64);
        assert_eq!(result.path_failures, 0, "{result:?}");
        assert!(result.class_count <= 32, "{result:?}");
        assert!(result.real_positive_classes >= 1, "{result:?}");
        assert!(result.max_residual <= 1e-8);
    }

    #[test]
    fn probe_confirms_local_uniqueness_for_a_random_simplex() {
        let reference = random_real_simplex_edges(5, 7);
        let result =
            local_uniqueness_probe(&reference, 16, 0.1, &TrackerConfig::with_seed(7)).unwrap();
        assert_eq!(result.anomalies, 0, "{result:?}");
        assert_eq!(result.converged, 16, "{result:?}");
        assert_eq!(result.matched_reference, 16, "{result:?}");
    }

    #[test]
    fn dimension_guards() {
        let bad_target = SquaredAreaVector::constant(5, ComplexScalar::one());
        assert!(matches!(
            track_fiber(&bad_target, &TrackerConfig::default()),
            Err(TrackError::SquareSystemOnly(5))
        ));
        let small = random_real_simplex_edges(4, 3);
        assert!(matches!(
            local_uniqueness_probe(&small, 4, 0.1, &TrackerConfig::default()),
            Err(TrackError::ProbeNeedsOverdetermined(4))
        ));
    }
}
