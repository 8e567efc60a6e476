#![allow(dead_code)]

use majorant_core::instances::{random_on_support, stream_rng, CoeffKind};
use majorant_core::{derive_target, MajorantProblem, SeqZ, SolverConfig};
use num_complex::Complex64;
use rand::Rng;

pub fn real(start: i64, xs: &[f64]) -> SeqZ {
    SeqZ::from_real(start, xs).unwrap()
}

pub fn complex(start: i64, xs: &[(f64, f64)]) -> SeqZ {
    SeqZ::new(start, xs.iter().map(|&(a, b)| Complex64::new(a, b)).collect()).unwrap()
}

pub fn on_points(points: &[(i64, f64, f64)]) -> SeqZ {
    SeqZ::from_pairs(points.iter().map(|&(n, a, b)| (n, Complex64::new(a, b)))).unwrap()
}

/// `(1, i, 1)` on `{0, 1, 2}`.
pub fn twisted() -> SeqZ {
    complex(0, &[(1.0, 0.0), (0.0, 1.0), (1.0, 0.0)])
}

/// `(1, -1, 1)` on the Sidon set `{0, 1, 3}`.
pub fn sidon_signed() -> SeqZ {
    on_points(&[(0, 1.0, 0.0), (1, -1.0, 0.0), (3, 1.0, 0.0)])
}

pub fn problem(a: &SeqZ, j: u32) -> MajorantProblem {
    derive_target(a, j, &SolverConfig::default()).unwrap()
}

/// Prints one status line per criterion and returns whether it passed.
pub fn report(id: &str, name: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {name}: {}", detail.as_ref());
    pass
}

/// Small instances for the oracle: support of `a` of size 1..=3 inside a
/// short window, kept only when the feasible set has at most `max_dim`
/// indices.
pub fn small_oracle_instances(seed: u64, count: usize, max_dim: usize) -> Vec<(SeqZ, u32)> {
    let cfg = SolverConfig::default();
    let mut out = Vec::new();
    let mut k = 0u64;
    while out.len() < count {
        let mut rng = stream_rng(seed, k);
        k += 1;
        let j = if rng.random_bool(0.5) { 2 } else { 3 };
        let size = rng.random_range(1..=3usize);
        let mut pts: Vec<i64> = Vec::new();
        while pts.len() < size {
            let n = rng.random_range(-3..=3);
            if !pts.contains(&n) {
                pts.push(n);
            }
        }
        pts.sort();
        let kind = if k % 2 == 0 { CoeffKind::Integer } else { CoeffKind::Gaussian };
        let a = random_on_support(&mut rng, &pts, kind);
        let p = derive_target(&a, j, &cfg).unwrap();
        if p.dim() <= max_dim {
            out.push((a, j));
        }
    }
    out
}

/// Random nonnegative real sequence with window width in `1..=max_width`.
pub fn random_nonneg<R: Rng>(rng: &mut R, max_width: usize) -> SeqZ {
    let w = rng.random_range(1..=max_width);
    let start = rng.random_range(-4..=4);
    let xs: Vec<f64> = (0..w).map(|_| rng.random_range(0.0..2.0)).collect();
    SeqZ::from_real(start, &xs).unwrap()
}
