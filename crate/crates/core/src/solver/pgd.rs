//! Projected gradient descent for
//!
//! ```text
//! minimize N_j(h)  subject to  h ≥ 0,  supp h ⊆ S,  Σ_{n∈S} h(n)|c(n)| = 1
//! ```
//!
//! followed by rescaling to the norm of the input.

use rand::Rng;
use rand_distr::Exp1;

use crate::error::{MajorantError, Result};
use crate::seq::{majorant_coeffs, norm_pow_direct, norm_pow_increment, SeqZ};
use crate::solver::problem::phi;
use crate::sum::sum_f64;
use crate::solver::projection::project_weighted_simplex;
use crate::solver::{MajorantProblem, SolverConfig};

/// Backtracking gives up after this many consecutive shrinks.
const MAX_BACKTRACKS: usize = 80;
/// Power iterations spent estimating the curvature at the starting point.
const POWER_ITERS: usize = 30;

/// Output of [`solve`].
#[derive(Debug, Clone)]
pub struct MajorantSolution {
    pub j: u32,
    /// Optimizer rescaled so that `N_j(b) = N_j(a)`.
    pub b: SeqZ,
    /// `M = Φ(b)`.
    pub m: f64,
    /// `N = N_j(b)`.
    pub n: f64,
    /// `r = N / M ≥ 1`.
    pub r: f64,
    /// Matched-norm majorant coefficients `(b * b̃)^{*(j-1)} * b`.
    pub fhat: SeqZ,
    /// Minimal-norm majorant coefficients `fhat / r`.
    pub fhat_min: SeqZ,
    pub iters: usize,
    pub kkt_residual: f64,
    /// Hyperplane multiplier `2j N / M` at the returned point.
    pub lambda: f64,
    pub converged: bool,
}

impl MajorantSolution {
    fn trivial(j: u32) -> Self {
        Self {
            j,
            b: SeqZ::zero(),
            m: 0.0,
            n: 0.0,
            r: 1.0,
            fhat: SeqZ::zero(),
            fhat_min: SeqZ::zero(),
            iters: 0,
            kkt_residual: 0.0,
            lambda: 0.0,
            converged: true,
        }
    }
}

/// State reported to a [`solve_observed`] callback after every accepted step
/// (and once for the starting point, with `iter = 0`).
#[derive(Debug)]
pub struct Iterate<'a> {
    pub iter: usize,
    /// Current point, aligned with the problem's support.
    pub h: &'a [f64],
    pub objective: f64,
    pub step: f64,
    pub kkt_residual: f64,
}

/// Exact gradient of `h ↦ N_j(h)` at a real `b` along every `δ_n`:
/// `2j · Re[(b * b̃)^{*(j-1)} * b]`.
pub fn grad_norm(b: &SeqZ, j: u32) -> Result<SeqZ> {
    Ok(majorant_coeffs(b, j)?.re().scale(2.0 * j as f64))
}

/// Objective and gradient at a point aligned with the support.
fn value_and_grad(problem: &MajorantProblem, h: &[f64]) -> Result<(f64, Vec<f64>)> {
    let seq = problem.to_seq(h);
    let f = majorant_coeffs(&seq, problem.j)?;
    let g = problem.restrict(&f.scale(2.0 * problem.j as f64));
    // Σ_n F̂(n) h(n) = N_j(h) for real h.
    let value = sum_f64(g.iter().zip(h).map(|(gi, hi)| gi * hi)) / (2.0 * problem.j as f64);
    Ok((value.max(0.0), g))
}

/// Scaled first-order optimality residual at `h` with gradient `g`.
///
/// With `λ = <h, g> / <h, w>` and reduced gradient `d = g - λ w`, this is
/// `max(max (-d)^+, max h|d| / max h) / (λ max w)`: dual infeasibility and
/// complementary slackness, relative to the size of `λ w`.
fn kkt_residual(h: &[f64], g: &[f64], w: &[f64]) -> (f64, f64) {
    let hg: f64 = sum_f64(h.iter().zip(g).map(|(a, b)| a * b));
    let hw: f64 = sum_f64(h.iter().zip(w).map(|(a, b)| a * b));
    let lambda = hg / hw;
    let h_max = h.iter().copied().fold(0.0, f64::max);
    let w_max = w.iter().copied().fold(0.0, f64::max);
    let mut worst: f64 = 0.0;
    for k in 0..h.len() {
        let d = g[k] - lambda * w[k];
        worst = worst.max((-d).max(0.0));
        if h_max > 0.0 {
            worst = worst.max(h[k] * d.abs() / h_max);
        }
    }
    (worst / (lambda * w_max), lambda)
}

/// Deterministic starting point `|c| / Φ(|c|)`.
pub fn default_start(problem: &MajorantProblem) -> Vec<f64> {
    let total: f64 = problem.weights.iter().map(|w| w * w).sum();
    problem.weights.iter().map(|w| w / total).collect()
}

/// A random feasible point: exponential masses distributed over the
/// coordinates and normalized by the weights.
///
/// Zero-weight coordinates get positive values too, so that they start off
/// the boundary.
pub fn random_feasible_point<R: Rng + ?Sized>(problem: &MajorantProblem, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = problem.weights.iter().map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let active: f64 = e
        .iter()
        .zip(&problem.weights)
        .filter(|(_, &w)| w > 0.0)
        .map(|(x, _)| x)
        .sum();
    let w_mean = problem.weights.iter().sum::<f64>() / problem.weights.len() as f64;
    e.iter()
        .zip(&problem.weights)
        .map(|(x, &w)| if w > 0.0 { x / (active * w) } else { x / (active * w_mean) })
        .collect()
}

/// Largest Hessian eigenvalue of `N_j` at `h`, by power iteration on central
/// differences of the gradient.
fn curvature_estimate(problem: &MajorantProblem, h: &[f64]) -> Result<f64> {
    let m = h.len();
    let h_norm = h.iter().map(|x| x * x).sum::<f64>().sqrt();
    let eps = 1e-4 * h_norm.max(f64::MIN_POSITIVE);
    let mut v = vec![1.0 / (m as f64).sqrt(); m];
    let mut est = 0.0;
    for _ in 0..POWER_ITERS {
        let plus: Vec<f64> = h.iter().zip(&v).map(|(a, b)| a + eps * b).collect();
        let minus: Vec<f64> = h.iter().zip(&v).map(|(a, b)| a - eps * b).collect();
        let (_, gp) = value_and_grad(problem, &plus)?;
        let (_, gm) = value_and_grad(problem, &minus)?;
        let hv: Vec<f64> = gp.iter().zip(&gm).map(|(a, b)| (a - b) / (2.0 * eps)).collect();
        let norm = hv.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            break;
        }
        est = norm;
        v = hv.into_iter().map(|x| x / norm).collect();
    }
    Ok(est)
}

/// Solves from the deterministic start.
pub fn solve(problem: &MajorantProblem, cfg: &SolverConfig) -> Result<MajorantSolution> {
    solve_observed(problem, cfg, None, &mut |_| {})
}

/// Solves from a caller-supplied feasible start.
pub fn solve_from(
    problem: &MajorantProblem,
    cfg: &SolverConfig,
    start: &[f64],
) -> Result<MajorantSolution> {
    solve_observed(problem, cfg, Some(start), &mut |_| {})
}

/// Solves, reporting every accepted iterate to `observer`.
pub fn solve_observed(
    problem: &MajorantProblem,
    cfg: &SolverConfig,
    start: Option<&[f64]>,
    observer: &mut dyn FnMut(&Iterate<'_>),
) -> Result<MajorantSolution> {
    cfg.validate()?;
    if problem.is_trivial() {
        return Ok(MajorantSolution::trivial(problem.j));
    }
    let w = &problem.weights;
    let mut h = match start {
        Some(s) => {
            if s.len() != w.len() || s.iter().any(|&x| !(x >= 0.0)) {
                return Err(MajorantError::Precondition(
                    "starting point must be nonnegative and aligned with the support".into(),
                ));
            }
            // Pull the start onto the constraint exactly.
            project_weighted_simplex(s, w)
        }
        None => default_start(problem),
    };

    let (mut f, mut g) = value_and_grad(problem, &h)?;
    let (mut residual, mut lambda) = kkt_residual(&h, &g, w);
    let curvature = curvature_estimate(problem, &h)?;
    let mut step = if curvature > 0.0 { 1.0 / curvature } else { 1.0 };
    observer(&Iterate {
        iter: 0,
        h: &h,
        objective: f,
        step,
        kkt_residual: residual,
    });

    let mut iters = 0;
    while residual > cfg.kkt_tol && iters < cfg.max_iters {
        // The sufficient-decrease test runs on N - λ(Φ - 1), which equals N on
        // the constraint set; this cancels the ulp-level drift of Φ left by
        // the projection, which would otherwise swamp the decrease near the
        // optimum.
        let base = problem.to_seq(&h);
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            let trial: Vec<f64> = h.iter().zip(&g).map(|(x, d)| x - step * d).collect();
            let next = project_weighted_simplex(&trial, w);
            let delta: Vec<f64> = next.iter().zip(&h).map(|(a, b)| a - b).collect();
            let predicted = sum_f64((0..delta.len()).map(|k| (g[k] - lambda * w[k]) * delta[k]));
            let drift = sum_f64(w.iter().zip(&delta).map(|(a, b)| a * b));
            let actual = norm_pow_increment(&base, &problem.to_seq(&delta), problem.j)? - lambda * drift;
            if actual <= cfg.armijo * predicted {
                accepted = Some(next);
                break;
            }
            step *= cfg.step_shrink;
        }
        let Some(next) = accepted else { break };
        if next == h {
            break;
        }
        h = next;
        (f, g) = value_and_grad(problem, &h)?;
        (residual, lambda) = kkt_residual(&h, &g, w);
        iters += 1;
        observer(&Iterate {
            iter: iters,
            h: &h,
            objective: f,
            step,
            kkt_residual: residual,
        });
        step *= cfg.step_grow;
    }

    finish(problem, &h, iters, residual, residual <= cfg.kkt_tol)
}

/// Rescales a normalized optimizer to the input's norm and fills in the
/// derived quantities.
fn finish(
    problem: &MajorantProblem,
    h: &[f64],
    iters: usize,
    kkt_residual: f64,
    converged: bool,
) -> Result<MajorantSolution> {
    let j = problem.j;
    let hs = problem.to_seq(h);
    let nh = norm_pow_direct(&hs, j)?;
    let b = hs.scale((problem.norm_a / nh).powf(1.0 / (2.0 * j as f64)));
    let m = phi(&b, problem);
    let n = norm_pow_direct(&b, j)?;
    let r = n / m;
    let fhat = majorant_coeffs(&b, j)?.re();
    let fhat_min = fhat.scale(1.0 / r);
    Ok(MajorantSolution {
        j,
        b,
        m,
        n,
        r,
        fhat,
        fhat_min,
        iters,
        kkt_residual,
        lambda: 2.0 * j as f64 * n / m,
        converged,
    })
}
