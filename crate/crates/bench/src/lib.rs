//! Fixed workloads shared by the benchmarks.

use majorant_core::instances::{corpus, stream_rng, CoeffKind};
use majorant_core::{derive_target, MajorantProblem, SeqZ, SolverConfig};

pub const SEED: u64 = 7;

/// Prepared problems of the given maximal window width and order.
pub fn problems(count: usize, max_width: usize, j: u32) -> Vec<MajorantProblem> {
    let cfg = SolverConfig::default();
    corpus(SEED, count, max_width, &[j])
        .into_iter()
        .map(|inst| derive_target(&inst.a, inst.j, &cfg).expect("corpus instances are in range"))
        .collect()
}

/// A dense random sequence of exactly `width` coefficients.
pub fn dense(width: usize) -> SeqZ {
    let mut rng = stream_rng(SEED, width as u64);
    loop {
        let x = majorant_core::instances::random_sequence(&mut rng, width, CoeffKind::Gaussian);
        if x.width() == width {
            return x;
        }
    }
}
