//! The variational problem behind the matched-norm majorant, and its solver.

mod alternative;
mod config;
mod pgd;
mod problem;
mod projection;

pub use alternative::alternative_majorant;
pub use config::SolverConfig;
pub use pgd::{
    default_start, grad_norm, random_feasible_point, solve, solve_from, solve_observed, Iterate,
    MajorantSolution,
};
pub use problem::{derive_target, derive_target_capped, phi, MajorantProblem};
pub use projection::project_weighted_simplex;

use crate::error::{MajorantError, Result};
use crate::seq::SeqZ;

/// Coefficients of the minimal-norm majorant, `fhat / r`.
pub fn minimal_majorant(sol: &MajorantSolution) -> Result<SeqZ> {
    if !sol.converged {
        return Err(MajorantError::Precondition(
            "minimal majorant requested from a non-converged solution".into(),
        ));
    }
    Ok(sol.fhat_min.clone())
}
