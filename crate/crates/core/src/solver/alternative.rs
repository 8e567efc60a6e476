use crate::error::{MajorantError, Result};
use crate::quadrature::{lp_grid_len, lp_norm_grid};
use crate::seq::SeqZ;
use crate::solver::{MajorantProblem, MajorantSolution};

/// Slack required in `r` before other same-norm majorants can exist.
const RATIO_SLACK: f64 = 1e-9;
/// Relative accuracy of the matched norm.
const NORM_MATCH_TOL: f64 = 1e-12;
const MAX_BISECTIONS: usize = 400;

/// A majorant of `c` other than `fhat` with the same `L^p` norm as `f`,
/// `p = 2j/(2j-1)`: the minimal majorant plus `s·h`, with `s > 0` chosen by
/// bisection.
///
/// Norms are evaluated by trapezoid quadrature of the polynomials on a common
/// oversampled grid, see [`lp_grid_len`].
pub fn alternative_majorant(
    sol: &MajorantSolution,
    h: &SeqZ,
    problem: &MajorantProblem,
) -> Result<SeqZ> {
    if !(sol.r > 1.0 + RATIO_SLACK) {
        return Err(MajorantError::Precondition(format!(
            "ratio r = {} leaves no room for another majorant of the same norm",
            sol.r
        )));
    }
    if h.is_zero() || h.coeffs().iter().any(|z| z.im != 0.0 || z.re < 0.0) {
        return Err(MajorantError::Precondition(
            "added sequence must be nonzero with real nonnegative coefficients".into(),
        ));
    }

    let j = problem.j as f64;
    let p = 2.0 * j / (2.0 * j - 1.0);
    let base = &sol.fhat_min;
    let lo_idx = [base.start(), h.start(), problem.c.start()].into_iter().min().unwrap();
    let hi_idx = [base.end(), h.end(), problem.c.end()].into_iter().flatten().max().unwrap();
    let len = lp_grid_len((hi_idx - lo_idx + 1) as usize);

    let target = lp_norm_grid(&problem.c, p, len);
    let excess = |s: f64| lp_norm_grid(&base.add(&h.scale(s)), p, len) - target;

    if excess(0.0) >= 0.0 {
        return Err(MajorantError::BisectionFailed(
            "minimal majorant is not below the target norm on the quadrature grid".into(),
        ));
    }
    let mut lo = 0.0;
    let mut hi = target / lp_norm_grid(h, p, len);
    let mut doublings = 0;
    while excess(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(MajorantError::BisectionFailed("no upper bracket found".into()));
        }
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let e = excess(mid);
        if e.abs() <= NORM_MATCH_TOL * target {
            return Ok(base.add(&h.scale(mid)));
        }
        if e < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = 0.5 * (lo + hi);
    if excess(s).abs() <= 1e-9 * target {
        Ok(base.add(&h.scale(s)))
    } else {
        Err(MajorantError::BisectionFailed(format!(
            "bracket [{lo}, {hi}] collapsed without matching the norm"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::majorant_coeffs;
    use crate::solver::{derive_target, solve, SolverConfig};
    use num_complex::Complex64;

    fn twisted() -> (MajorantProblem, MajorantSolution) {
        let a = SeqZ::new(
            0,
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)],
        )
        .unwrap();
        let cfg = SolverConfig::default();
        let p = derive_target(&a, 2, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        (p, sol)
    }

    #[test]
    fn scaling_the_minimal_majorant_recovers_r() {
        let (p, sol) = twisted();
        let alt = alternative_majorant(&sol, &sol.fhat_min, &p).unwrap();
        // alt = (1 + s) fhat_min, and the norms force 1 + s = r.
        let s = alt.get(1).re / sol.fhat_min.get(1).re - 1.0;
        assert!((s - (sol.r - 1.0)).abs() <= 1e-9, "s = {s}, r = {}", sol.r);
    }

    #[test]
    fn alternative_majorizes_and_differs_from_fhat() {
        let (p, sol) = twisted();
        let alt = alternative_majorant(&sol, &SeqZ::delta(0), &p).unwrap();
        for (n, z) in p.c.iter() {
            assert!(alt.get(n).re >= z.norm() - 1e-8, "n = {n}");
        }
        assert!(alt.sup_distance(&sol.fhat) > 1e-3);
        let fhat = majorant_coeffs(&sol.b, 2).unwrap();
        assert!(fhat.sup_distance(&sol.fhat) < 1e-12);
    }

    #[test]
    fn exact_case_is_rejected() {
        let a = SeqZ::from_real(0, &[1.0, -1.0, 0.0, 1.0]).unwrap();
        let cfg = SolverConfig::default();
        let p = derive_target(&a, 2, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        assert!(matches!(
            alternative_majorant(&sol, &SeqZ::delta(0), &p),
            Err(MajorantError::Precondition(_))
        ));
    }

    #[test]
    fn negative_direction_is_rejected() {
        let (p, sol) = twisted();
        let h = SeqZ::from_real(0, &[-1.0]).unwrap();
        assert!(matches!(alternative_majorant(&sol, &h, &p), Err(MajorantError::Precondition(_))));
    }
}
