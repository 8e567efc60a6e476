//! Uniform-grid evaluation of trigonometric polynomials on the circle.
//!
//! For `X(θ) = Σ_n x(n) e^{inθ}` the mean of `|X|^{2j}` over a uniform grid of
//! `L ≥ 2j(W-1)+1` points is exact, since `|X|^{2j}` is a trigonometric
//! polynomial of degree `j(W-1)`. Non-integer exponents are only approximated.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{MajorantError, Result};
use crate::seq::{norm_pow_direct, SeqZ};
use crate::sum::sum_f64;

/// Relative agreement required between the direct and grid routes in
/// [`norm_2j_pow`].
pub const DEFAULT_PATH_TOL: f64 = 1e-9;

/// Smallest grid on which the mean of `|X|^{2j}` is exact.
pub fn exact_grid_len(width: usize, j: u32) -> usize {
    2 * j as usize * width.saturating_sub(1) + 1
}

/// Values of the polynomial with coefficients `x` at `θ_k = 2πk/len`.
///
/// The window offset only contributes a unimodular factor, which is dropped.
pub fn grid_values(x: &SeqZ, len: usize) -> Vec<Complex64> {
    assert!(len >= x.width(), "grid shorter than the coefficient window");
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    buf[..x.width()].copy_from_slice(x.coeffs());
    if len > 0 {
        // rustfft's inverse transform uses e^{+i...}, matching Σ x(n) e^{inθ}.
        FftPlanner::new().plan_fft_inverse(len).process(&mut buf);
    }
    buf
}

/// Mean of `|X|^{2j}` over the exact grid.
pub fn norm_pow_grid(x: &SeqZ, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    if x.is_zero() {
        return Ok(0.0);
    }
    let len = exact_grid_len(x.width(), j);
    let vals = grid_values(x, len);
    Ok(sum_f64(vals.iter().map(|z| z.norm_sqr().powi(j as i32))) / len as f64)
}

/// `N_j(x)` computed along both routes, checked against each other at
/// [`DEFAULT_PATH_TOL`]; returns the grid value.
pub fn norm_2j_pow(x: &SeqZ, j: u32) -> Result<f64> {
    norm_2j_pow_with_tol(x, j, DEFAULT_PATH_TOL)
}

pub fn norm_2j_pow_with_tol(x: &SeqZ, j: u32, tol: f64) -> Result<f64> {
    let direct = norm_pow_direct(x, j)?;
    let grid = norm_pow_grid(x, j)?;
    let scale = direct.abs().max(grid.abs());
    let relative = if scale == 0.0 {
        0.0
    } else {
        (direct - grid).abs() / scale
    };
    if relative > tol || !relative.is_finite() {
        return Err(MajorantError::QuadratureMismatch {
            direct,
            grid,
            relative,
            tol,
        });
    }
    Ok(grid)
}

/// `(mean |X|^p)^{1/p}` over a uniform grid of `len` points.
///
/// Exact only when `p` is an even integer and `len` is large enough; for
/// other exponents this is the trapezoid rule, which converges quickly when
/// `X` has no zeros on the circle.
pub fn lp_norm_grid(x: &SeqZ, p: f64, len: usize) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let vals = grid_values(x, len.max(x.width()));
    let mean = sum_f64(vals.iter().map(|z| z.norm().powf(p))) / vals.len() as f64;
    mean.powf(1.0 / p)
}

/// Grid length used for `L^p` norms of a polynomial with `width` coefficients:
/// generously oversampled, rounded to a power of two.
pub fn lp_grid_len(width: usize) -> usize {
    (64 * width).max(1 << 14).next_power_of_two()
}
