//! Matched-norm and minimal Fourier majorants for finitely supported
//! sequences on the integers.
//!
//! Given `a: ℤ → ℂ` with finite support and an order `j ≥ 1`, let
//! `c = a * (ã * a)^{*(j-1)}`. The [`solver`] finds the nonnegative `b`,
//! supported where `c` is, with `[(b̃ * b)^{*j}](0) = [(ã * a)^{*j}](0)` and
//! `(b * b̃)^{*(j-1)} * b ≥ |c|` index-wise. The [`verify`] module re-checks
//! these properties along an independent arithmetic path.

pub mod error;
pub mod instances;
pub mod quadrature;
pub mod seq;
pub mod solver;
pub mod sum;
pub mod verify;

pub use error::{MajorantError, Result};
pub use seq::{
    autocorrelation, conv_power, convolve, involute, majorant_coeffs, norm_pow_direct,
    target_coeffs, SeqZ,
};
pub use quadrature::norm_2j_pow;
pub use solver::{
    alternative_majorant, derive_target, grad_norm, minimal_majorant, phi,
    project_weighted_simplex, solve, MajorantProblem, MajorantSolution, SolverConfig,
};
pub use verify::{
    check_hoelder, check_upper_majorant, exactness_gap, is_sidon_bj, oracle_solve,
    uniqueness_probe, verify_solution, VerificationReport,
};
