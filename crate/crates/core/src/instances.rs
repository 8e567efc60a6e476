//! Seeded random inputs for property suites, benchmarks and corpus files.
//!
//! Each instance draws from its own ChaCha stream, `(seed, index)`, so any
//! subset of a corpus can be regenerated or processed in parallel.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::seq::SeqZ;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    /// Gaussian integers with parts in `-3..=3`.
    Integer,
    /// Independent standard normal real and imaginary parts.
    Gaussian,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub a: SeqZ,
    pub j: u32,
}

/// Generator for the instance at position `index` of a seeded family.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn coefficient<R: Rng + ?Sized>(rng: &mut R, kind: CoeffKind) -> Complex64 {
    match kind {
        CoeffKind::Integer => Complex64::new(
            rng.random_range(-3..=3) as f64,
            rng.random_range(-3..=3) as f64,
        ),
        CoeffKind::Gaussian => Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)),
    }
}

/// A nonzero sequence of window width in `1..=max_width`, with nonzero end
/// coefficients and a random offset in `-6..=6`.
pub fn random_sequence<R: Rng + ?Sized>(rng: &mut R, max_width: usize, kind: CoeffKind) -> SeqZ {
    let width = rng.random_range(1..=max_width.max(1));
    let start = rng.random_range(-6..=6);
    let mut coeffs: Vec<Complex64> = (0..width).map(|_| coefficient(rng, kind)).collect();
    for k in [0, width - 1] {
        while coeffs[k].norm() == 0.0 {
            coeffs[k] = coefficient(rng, kind);
        }
    }
    SeqZ::new(start, coeffs).expect("small window")
}

/// A sequence supported exactly on `support`, with coefficients of `kind`.
pub fn random_on_support<R: Rng + ?Sized>(rng: &mut R, support: &[i64], kind: CoeffKind) -> SeqZ {
    SeqZ::from_pairs(support.iter().map(|&n| {
        let mut z = coefficient(rng, kind);
        while z.norm() == 0.0 {
            z = coefficient(rng, kind);
        }
        (n, z)
    }))
    .expect("small window")
}

/// `count` instances with window width at most `max_width`, orders drawn from
/// `orders`, alternating integer and Gaussian coefficients.
pub fn corpus(seed: u64, count: usize, max_width: usize, orders: &[u32]) -> Vec<Instance> {
    assert!(!orders.is_empty());
    (0..count)
        .map(|k| {
            let mut rng = stream_rng(seed, k as u64);
            let kind = if k % 2 == 0 { CoeffKind::Integer } else { CoeffKind::Gaussian };
            let j = orders[rng.random_range(0..orders.len())];
            Instance {
                name: format!("inst{k:04}"),
                a: random_sequence(&mut rng, max_width, kind),
                j,
            }
        })
        .collect()
}
