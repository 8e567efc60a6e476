//! Brute-force ground truth for small problems, independent of the main
//! solver: a simplex grid search followed by exact coordinate descent on the
//! scale-free ratio `N_j(h)^{1/2j} / Φ(h)`.

use num_complex::Complex64;

use crate::error::{MajorantError, Result};
use crate::seq::{convolve, involute, norm_pow_direct, SeqZ};
use crate::solver::MajorantProblem;

pub const ORACLE_MAX_SUPPORT: usize = 8;
/// Upper bound on the number of simplex grid points evaluated.
const MAX_GRID_POINTS: usize = 2_000_000;
const MAX_SWEEPS: usize = 200_000;
const SWEEP_TOL: f64 = 1e-14;

/// Minimizer of `N_j` on the weighted simplex of `problem`, rescaled to the
/// norm of the input.
///
/// `grid_density` is the number of mass quanta distributed over the
/// coordinates in the seeding search.
pub fn oracle_solve(problem: &MajorantProblem, grid_density: usize) -> Result<SeqZ> {
    if problem.is_trivial() {
        return Ok(SeqZ::zero());
    }
    let m = problem.support.len();
    if m > ORACLE_MAX_SUPPORT {
        return Err(MajorantError::CapExceeded(format!(
            "oracle handles at most {ORACLE_MAX_SUPPORT} feasible indices, got {m}"
        )));
    }
    if problem.weights.iter().any(|&w| !(w > 0.0)) {
        return Err(MajorantError::Precondition(
            "oracle needs strictly positive weights".into(),
        ));
    }
    let density = grid_density.max(1);
    if binomial(density + m - 1, m - 1) > MAX_GRID_POINTS {
        return Err(MajorantError::CapExceeded(format!(
            "grid density {density} over {m} coordinates is too fine"
        )));
    }

    let mut h = grid_seed(problem, density)?;
    if m > 1 {
        refine(problem, &mut h)?;
    }

    let phi: f64 = h.iter().zip(&problem.weights).map(|(a, b)| a * b).sum();
    h.iter_mut().for_each(|x| *x /= phi);
    let seq = seq_of(problem, &h);
    let scale = (problem.norm_a / norm_pow_direct(&seq, problem.j)?).powf(0.5 / problem.j as f64);
    Ok(seq.scale(scale))
}

fn seq_of(problem: &MajorantProblem, h: &[f64]) -> SeqZ {
    SeqZ::from_pairs(
        problem
            .support
            .iter()
            .zip(h)
            .map(|(&n, &x)| (n, Complex64::new(x, 0.0))),
    )
    .expect("support lies in range")
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(usize::MAX as u128) as usize
}

/// Best point of `{ h(n) = k(n) / (density·w(n)) : Σ k = density }`.
fn grid_seed(problem: &MajorantProblem, density: usize) -> Result<Vec<f64>> {
    let m = problem.support.len();
    let mut counts = vec![0usize; m];
    let mut best = (f64::INFINITY, vec![0.0; m]);
    let mut err = None;
    compositions(&mut counts, 0, density, &mut |k| {
        if err.is_some() {
            return;
        }
        let h: Vec<f64> = k
            .iter()
            .zip(&problem.weights)
            .map(|(&q, &w)| q as f64 / (density as f64 * w))
            .collect();
        match norm_pow_direct(&seq_of(problem, &h), problem.j) {
            Ok(v) if v < best.0 => best = (v, h),
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(best.1),
    }
}

fn compositions(counts: &mut [usize], pos: usize, left: usize, visit: &mut dyn FnMut(&[usize])) {
    if pos + 1 == counts.len() {
        counts[pos] = left;
        visit(counts);
        return;
    }
    for q in 0..=left {
        counts[pos] = q;
        compositions(counts, pos + 1, left - q, visit);
    }
}

/// Cyclic coordinate descent; each coordinate update is the exact minimizer
/// of the ratio along that coordinate.
fn refine(problem: &MajorantProblem, h: &mut [f64]) -> Result<()> {
    for _ in 0..MAX_SWEEPS {
        let mut change: f64 = 0.0;
        for k in 0..h.len() {
            let next = coordinate_min(problem, h, k)?;
            change = change.max((next - h[k]).abs());
            h[k] = next;
        }
        let h_max = h.iter().copied().fold(0.0, f64::max);
        if change <= SWEEP_TOL * h_max {
            break;
        }
    }
    Ok(())
}

/// Coefficients (in `s`) of `N_j(base + s δ_n)`, where `base` vanishes at `n`.
fn norm_polynomial(base: &SeqZ, n: i64, j: u32) -> Result<Vec<f64>> {
    let dn = SeqZ::delta(n);
    let a0 = convolve(&involute(base), base)?;
    let a1 = convolve(&involute(&dn), base)?.add(&convolve(&involute(base), &dn)?);
    let factor = [a0, a1, SeqZ::delta(0)];

    let mut power = vec![SeqZ::delta(0)];
    for _ in 0..j {
        let mut next = vec![SeqZ::zero(); power.len() + 2];
        for (p, pc) in power.iter().enumerate() {
            for (q, fq) in factor.iter().enumerate() {
                next[p + q] = next[p + q].add(&convolve(pc, fq)?);
            }
        }
        power = next;
    }
    Ok(power.iter().map(|s| s.get(0).re).collect())
}

fn horner(coeffs: &[f64], s: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * s + c)
}

fn coordinate_min(problem: &MajorantProblem, h: &[f64], k: usize) -> Result<f64> {
    let j = problem.j;
    let w = problem.weights[k];
    let mut rest = h.to_vec();
    rest[k] = 0.0;
    let phi_rest: f64 = rest.iter().zip(&problem.weights).map(|(a, b)| a * b).sum();
    if phi_rest == 0.0 {
        // Only this coordinate carries mass; the ratio is constant along it.
        return Ok(h[k]);
    }
    let poly = norm_polynomial(&seq_of(problem, &rest), problem.support[k], j)?;
    let dpoly: Vec<f64> = poly.iter().enumerate().skip(1).map(|(e, c)| e as f64 * c).collect();
    // Sign of the derivative of N^{1/2j} / Φ along the coordinate.
    let slope = |s: f64| horner(&dpoly, s) * (phi_rest + s * w) - 2.0 * j as f64 * w * horner(&poly, s);

    if slope(0.0) >= 0.0 {
        return Ok(0.0);
    }
    let mut hi = h[k].max(phi_rest / w).max(f64::MIN_POSITIVE);
    let mut guard = 0;
    while slope(hi) < 0.0 {
        hi *= 2.0;
        guard += 1;
        if guard > 2000 {
            return Err(MajorantError::Precondition(
                "coordinate ratio has no interior minimizer".into(),
            ));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if slope(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
