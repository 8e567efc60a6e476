use crate::error::{MajorantError, Result};
use crate::seq::{convolve, involute, norm_pow_direct, target_coeffs, SeqZ};

/// Margin in the convolution Hölder inequality
///
/// ```text
/// |[k̃ * (a * ã)^{*(j-1)} * a](0)| ≤ N_j(k)^{1/2j} · N_j(a)^{(2j-1)/2j}
/// ```
///
/// Returns right side minus left side.
pub fn check_hoelder(a: &SeqZ, k: &SeqZ, j: u32) -> Result<f64> {
    let (lhs, rhs) = hoelder_sides(a, k, j)?;
    Ok(rhs - lhs)
}

pub(crate) fn hoelder_sides(a: &SeqZ, k: &SeqZ, j: u32) -> Result<(f64, f64)> {
    let c = target_coeffs(a, j)?;
    let lhs = convolve(&involute(k), &c)?.get(0).norm();
    let e = 2.0 * j as f64;
    let rhs = norm_pow_direct(k, j)?.powf(1.0 / e) * norm_pow_direct(a, j)?.powf((e - 1.0) / e);
    Ok((lhs, rhs))
}

/// `N_j(b) - N_j(d)` for a real `b` that majorizes `d` index-wise.
pub fn check_upper_majorant(b: &SeqZ, d: &SeqZ, j: u32) -> Result<f64> {
    let slack = 1e-12 * b.max_abs().max(d.max_abs());
    for (n, z) in b.iter() {
        if z.im.abs() > slack {
            return Err(MajorantError::Precondition(format!(
                "majorant has a non-real coefficient at {n}"
            )));
        }
    }
    for (n, z) in d.iter() {
        if b.get(n).re + slack < z.norm() {
            return Err(MajorantError::Precondition(format!(
                "b({n}) = {} does not dominate |d({n})| = {}",
                b.get(n).re,
                z.norm()
            )));
        }
    }
    Ok(norm_pow_direct(b, j)? - norm_pow_direct(d, j)?)
}

/// `N_j(|a|) - N_j(a)`, clamped at zero.
///
/// Zero means forming the exact `L²` majorant of `a` keeps its `L^{2j}`
/// norm; this predicts `r = 1` and `b = |a|`.
pub fn exactness_gap(a: &SeqZ, j: u32) -> Result<f64> {
    Ok((norm_pow_direct(&a.abs(), j)? - norm_pow_direct(a, j)?).max(0.0))
}
