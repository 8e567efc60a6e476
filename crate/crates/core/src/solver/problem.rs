use num_complex::Complex64;

use crate::error::{MajorantError, Result};
use crate::seq::{norm_pow_direct, target_coeffs, SeqZ, DEFAULT_WINDOW_CAP};
use crate::solver::SolverConfig;

/// Magnitudes within this factor of the support threshold, on either side,
/// are reported as borderline.
const BORDERLINE_FACTOR: f64 = 100.0;

/// The optimization problem attached to an input sequence `a` and order `j`.
#[derive(Debug, Clone)]
pub struct MajorantProblem {
    pub j: u32,
    pub a: SeqZ,
    /// `c = a * (ã * a)^{*(j-1)}`.
    pub c: SeqZ,
    /// Sorted feasible indices.
    pub support: Vec<i64>,
    /// Objective weights `|c(n)|` aligned with `support`. Zero only on
    /// indices added by [`MajorantProblem::with_padded_support`].
    pub weights: Vec<f64>,
    /// `N_j(a)`.
    pub norm_a: f64,
    /// Indices of `c` whose magnitude sits close to the support threshold.
    pub borderline: Vec<i64>,
}

/// Builds the problem for `a` at order `j`.
pub fn derive_target(a: &SeqZ, j: u32, cfg: &SolverConfig) -> Result<MajorantProblem> {
    derive_target_capped(a, j, cfg, DEFAULT_WINDOW_CAP)
}

pub fn derive_target_capped(
    a: &SeqZ,
    j: u32,
    cfg: &SolverConfig,
    window_cap: usize,
) -> Result<MajorantProblem> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    cfg.validate()?;
    if a.width() > window_cap {
        return Err(MajorantError::WindowTooWide {
            width: a.width(),
            cap: window_cap,
        });
    }
    let c = target_coeffs(a, j)?;
    let norm_a = norm_pow_direct(a, j)?;
    let max_c = c.max_abs();
    let cut = cfg.support_eps * max_c;

    let mut support = Vec::new();
    let mut weights = Vec::new();
    let mut borderline = Vec::new();
    for (n, z) in c.iter() {
        let m = z.norm();
        if m > cut {
            support.push(n);
            weights.push(m);
        }
        if m > 0.0 && m > cut / BORDERLINE_FACTOR && m <= cut * BORDERLINE_FACTOR {
            borderline.push(n);
        }
    }
    Ok(MajorantProblem {
        j,
        a: a.clone(),
        c,
        support,
        weights,
        norm_a,
        borderline,
    })
}

impl MajorantProblem {
    /// True when `a = 0`; the solution is then the zero sequence.
    pub fn is_trivial(&self) -> bool {
        self.a.is_zero() || self.norm_a == 0.0
    }

    /// Number of feasible indices.
    pub fn dim(&self) -> usize {
        self.support.len()
    }

    pub fn max_weight(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }

    /// Dense coefficient sequence for a vector aligned with `support`.
    pub fn to_seq(&self, h: &[f64]) -> SeqZ {
        assert_eq!(h.len(), self.support.len());
        SeqZ::from_pairs(
            self.support
                .iter()
                .zip(h)
                .map(|(&n, &v)| (n, Complex64::new(v, 0.0))),
        )
        .expect("support indices lie inside the window of c")
    }

    /// Real parts of `x` read off at the feasible indices.
    pub fn restrict(&self, x: &SeqZ) -> Vec<f64> {
        self.support.iter().map(|&n| x.get(n).re).collect()
    }

    /// Same problem with the feasible set enlarged to the whole interval
    /// `[min S - pad, max S + pad]`. New indices carry objective weight zero,
    /// so they are free nonnegative coordinates that do not enter `Φ`.
    pub fn with_padded_support(&self, pad: i64) -> MajorantProblem {
        let (Some(&lo), Some(&hi)) = (self.support.first(), self.support.last()) else {
            return self.clone();
        };
        let mut support = Vec::new();
        let mut weights = Vec::new();
        let mut k = 0;
        for n in lo - pad..=hi + pad {
            support.push(n);
            if k < self.support.len() && self.support[k] == n {
                weights.push(self.weights[k]);
                k += 1;
            } else {
                weights.push(0.0);
            }
        }
        MajorantProblem {
            support,
            weights,
            ..self.clone()
        }
    }
}

/// `Φ(b) = Σ_{n∈S} b(n) |c(n)|`.
pub fn phi(b: &SeqZ, problem: &MajorantProblem) -> f64 {
    crate::sum::sum_f64(
        problem
            .support
            .iter()
            .zip(&problem.weights)
            .map(|(&n, &w)| b.get(n).re * w),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(start: i64, xs: &[f64]) -> SeqZ {
        SeqZ::from_real(start, xs).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn three_point_signed_input() {
        let p = derive_target(&real(0, &[1.0, -1.0, 1.0]), 2, &cfg()).unwrap();
        assert_eq!(p.c, real(-2, &[1.0, -3.0, 6.0, -7.0, 6.0, -3.0, 1.0]));
        assert_eq!(p.support, (-2..=4).collect::<Vec<_>>());
        assert_eq!(p.weights, vec![1.0, 3.0, 6.0, 7.0, 6.0, 3.0, 1.0]);
        assert_eq!(p.norm_a, 19.0);
        assert!(p.borderline.is_empty());
    }

    #[test]
    fn single_point_input() {
        let p = derive_target(&SeqZ::scaled_delta(5, Complex64::new(2.0, 0.0)), 2, &cfg()).unwrap();
        assert_eq!(p.c, SeqZ::scaled_delta(5, Complex64::new(8.0, 0.0)));
        assert_eq!(p.support, vec![5]);
        assert_eq!(p.norm_a, 16.0);
    }

    #[test]
    fn order_one_target_is_input() {
        let a = SeqZ::new(
            -1,
            vec![Complex64::new(0.5, 1.0), Complex64::new(0.0, 0.0), Complex64::new(-2.0, 0.0)],
        )
        .unwrap();
        let p = derive_target(&a, 1, &cfg()).unwrap();
        assert_eq!(p.c, a);
        assert_eq!(p.support, a.support());
    }

    #[test]
    fn zero_input_is_trivial() {
        let p = derive_target(&SeqZ::zero(), 3, &cfg()).unwrap();
        assert!(p.is_trivial());
        assert!(p.support.is_empty());
        assert_eq!(p.norm_a, 0.0);
    }

    #[test]
    fn exact_cancellation_leaves_support() {
        let a = real(0, &[1.0, 0.0, 1.0]);
        let p = derive_target(&a, 2, &cfg()).unwrap();
        // c = (1,0,2,0,1)*(1,0,1) on [-2,4] = (1,0,3,0,3,0,1): odd offsets vanish
        assert_eq!(p.support, vec![-2, 0, 2, 4]);
    }

    #[test]
    fn rejects_wide_window_and_zero_order() {
        let a = real(0, &[1.0; 10]);
        assert!(matches!(
            derive_target_capped(&a, 2, &cfg(), 8),
            Err(MajorantError::WindowTooWide { width: 10, cap: 8 })
        ));
        assert!(matches!(derive_target(&a, 0, &cfg()), Err(MajorantError::ZeroOrder)));
    }

    #[test]
    fn phi_examples() {
        let p = MajorantProblem {
            j: 1,
            a: real(0, &[3.0, 4.0]),
            c: real(0, &[3.0, 4.0]),
            support: vec![0, 1],
            weights: vec![3.0, 4.0],
            norm_a: 25.0,
            borderline: vec![],
        };
        assert_eq!(phi(&real(0, &[1.0, 2.0]), &p), 11.0);
        assert_eq!(phi(&SeqZ::zero(), &p), 0.0);
        assert_eq!(phi(&p.c.abs(), &p), 25.0);
    }

    #[test]
    fn padded_support_has_zero_weights() {
        let p = derive_target(&real(0, &[1.0, 0.0, 1.0]), 2, &cfg()).unwrap();
        let q = p.with_padded_support(3);
        assert_eq!(q.support, (-5..=7).collect::<Vec<_>>());
        assert_eq!(q.weights.iter().filter(|&&w| w > 0.0).count(), 4);
        assert_eq!(q.weights[3], 1.0);
        assert_eq!(q.weights[4], 0.0);
    }

    #[test]
    fn borderline_magnitudes_are_flagged() {
        let a = real(0, &[1.0, 1e-13]);
        let p = derive_target(&a, 1, &cfg()).unwrap();
        assert_eq!(p.borderline, vec![1]);
        assert_eq!(p.support, vec![0]);
    }
}
