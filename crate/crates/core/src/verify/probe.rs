use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{MajorantError, Result};
use crate::solver::{random_feasible_point, solve_from, MajorantProblem, SolverConfig};

/// Outcome of [`uniqueness_probe`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    /// Largest pairwise sup-norm distance between rescaled optimizers of the
    /// converged runs.
    pub distance: f64,
    /// Largest coefficient seen among the optimizers, for relative reading.
    pub max_b: f64,
    pub converged: usize,
    pub nonconverged: usize,
}

/// Solves from `cfg.restarts` seeded random feasible starts and measures how
/// far apart the optimizers land.
pub fn uniqueness_probe(problem: &MajorantProblem, cfg: &SolverConfig) -> Result<ProbeReport> {
    if cfg.restarts < 2 {
        return Err(MajorantError::Precondition(
            "uniqueness probe needs at least two restarts".into(),
        ));
    }
    if problem.is_trivial() {
        return Ok(ProbeReport {
            distance: 0.0,
            max_b: 0.0,
            converged: cfg.restarts,
            nonconverged: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut optima = Vec::with_capacity(cfg.restarts);
    let mut nonconverged = 0;
    for _ in 0..cfg.restarts {
        let start = random_feasible_point(problem, &mut rng);
        let sol = solve_from(problem, cfg, &start)?;
        if sol.converged {
            optima.push(sol.b);
        } else {
            nonconverged += 1;
        }
    }
    let mut distance: f64 = 0.0;
    for (k, x) in optima.iter().enumerate() {
        for y in &optima[k + 1..] {
            distance = distance.max(x.sup_distance(y));
        }
    }
    let max_b = optima.iter().map(|b| b.max_abs()).fold(0.0, f64::max);
    Ok(ProbeReport {
        distance,
        max_b,
        converged: optima.len(),
        nonconverged,
    })
}
