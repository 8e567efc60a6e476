//! Independent checks of the solver's output and of the inequalities behind
//! it. Everything here recomputes through direct convolution only.

mod inequalities;
mod oracle;
mod probe;
mod report;
mod sidon;

pub use inequalities::{check_hoelder, check_upper_majorant, exactness_gap};
pub use oracle::{oracle_solve, ORACLE_MAX_SUPPORT};
pub use probe::{uniqueness_probe, ProbeReport};
pub use report::{candidate, verify_solution, ItemResults, VerificationReport};
pub use sidon::{is_sidon_bj, SIDON_MAX_ORDER, SIDON_MAX_SET};
