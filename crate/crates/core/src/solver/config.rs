use crate::error::{MajorantError, Result};

/// Tolerances and iteration controls for [`crate::solver::solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// `n` belongs to the feasible support when `|c(n)| > support_eps * max|c|`.
    pub support_eps: f64,
    /// Stop once the scaled KKT residual drops to this value.
    pub kkt_tol: f64,
    /// Backtracking factor applied after a failed Armijo test.
    pub step_shrink: f64,
    /// Growth factor applied to the trial step after an accepted one.
    pub step_grow: f64,
    /// Sufficient-decrease constant of the Armijo test.
    pub armijo: f64,
    pub max_iters: usize,
    /// Random restarts used by the uniqueness probe.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            support_eps: 1e-12,
            kkt_tol: 1e-10,
            step_shrink: 0.5,
            step_grow: 2.0,
            armijo: 1e-4,
            max_iters: 100_000,
            restarts: 5,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(MajorantError::InvalidConfig(msg.to_string()));
        if !(self.support_eps > 0.0 && self.support_eps < 1.0) {
            return bad("support_eps must lie in (0, 1)");
        }
        if !(self.kkt_tol > 0.0) {
            return bad("kkt_tol must be positive");
        }
        if !(self.step_shrink > 0.0 && self.step_shrink < 1.0) {
            return bad("step_shrink must lie in (0, 1)");
        }
        if !(self.step_grow > 1.0 && self.step_grow.is_finite()) {
            return bad("step_grow must exceed 1");
        }
        if !(self.armijo > 0.0 && self.armijo < 1.0) {
            return bad("armijo constant must lie in (0, 1)");
        }
        if self.max_iters == 0 {
            return bad("max_iters must be at least 1");
        }
        Ok(())
    }
}
