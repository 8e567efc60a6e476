//! Finitely supported complex sequences on the integers and their exact
//! convolution algebra.
//!
//! A [`SeqZ`] stores a contiguous window of coefficients starting at `start`.
//! Every operation here is direct summation: no transforms are involved, so
//! anything computed in this module is independent of the grid quadrature in
//! [`crate::quadrature`].

use std::fmt;

use num_complex::Complex64;

use crate::error::{MajorantError, Result};
use crate::sum::CompensatedComplexSum;

/// Coefficients with magnitude at or below this are treated as stored zeros
/// when trimming the window ends. Values themselves are never rounded.
pub const TRIM_THRESHOLD: f64 = 1e-300;

/// Largest index magnitude any window may reach.
pub const INDEX_LIMIT: i64 = 1 << 52;

/// Default cap on the width of an input window.
pub const DEFAULT_WINDOW_CAP: usize = 4096;

/// A finitely supported sequence `x: ℤ → ℂ`.
///
/// Stored trimmed: the first and last coefficients are nonzero, and the zero
/// sequence is the empty list at `start = 0`. Equality is therefore
/// index-wise equality.
#[derive(Clone, PartialEq)]
pub struct SeqZ {
    start: i64,
    coeffs: Vec<Complex64>,
}

fn check_window(start: i128, end: i128) -> Result<()> {
    let lim = INDEX_LIMIT as i128;
    if start < -lim || end > lim {
        return Err(MajorantError::IndexOverflow { start, end });
    }
    Ok(())
}

impl SeqZ {
    /// Builds a sequence from a window start and its coefficients, trimming
    /// negligible coefficients at both ends.
    pub fn new(start: i64, coeffs: Vec<Complex64>) -> Result<Self> {
        if !coeffs.is_empty() {
            check_window(start as i128, start as i128 + coeffs.len() as i128 - 1)?;
        }
        Ok(Self::trimmed(start, coeffs))
    }

    pub fn from_real(start: i64, coeffs: &[f64]) -> Result<Self> {
        Self::new(start, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a sequence from `(index, value)` pairs. Indices need not be
    /// sorted; repeated indices are summed.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let pairs: Vec<_> = pairs.into_iter().collect();
        let Some(lo) = pairs.iter().map(|p| p.0).min() else {
            return Ok(Self::zero());
        };
        let hi = pairs.iter().map(|p| p.0).max().unwrap();
        check_window(lo as i128, hi as i128)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo) as usize + 1];
        for (n, v) in pairs {
            coeffs[(n - lo) as usize] += v;
        }
        Ok(Self::trimmed(lo, coeffs))
    }

    // Caller guarantees the window is in range.
    fn trimmed(start: i64, mut coeffs: Vec<Complex64>) -> Self {
        let Some(first) = coeffs.iter().position(|z| z.norm() > TRIM_THRESHOLD) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|z| z.norm() > TRIM_THRESHOLD).unwrap();
        coeffs.truncate(last + 1);
        coeffs.drain(..first);
        Self {
            start: start + first as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self {
            start: 0,
            coeffs: Vec::new(),
        }
    }

    /// The unit mass `δ_n`.
    pub fn delta(n: i64) -> Self {
        Self::scaled_delta(n, Complex64::new(1.0, 0.0))
    }

    pub fn scaled_delta(n: i64, value: Complex64) -> Self {
        assert!(n.abs() <= INDEX_LIMIT, "index {n} out of range");
        Self::trimmed(n, vec![value])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the first stored coefficient (0 for the zero sequence).
    pub fn start(&self) -> i64 {
        self.start
    }

    /// Index of the last stored coefficient, or `None` for the zero sequence.
    pub fn end(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.start + self.coeffs.len() as i64 - 1)
    }

    /// Number of stored coefficients.
    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient at `n`, zero outside the window.
    pub fn get(&self, n: i64) -> Complex64 {
        let off = n - self.start;
        if off < 0 || off as usize >= self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[off as usize]
        }
    }

    /// Stored `(index, value)` pairs, zeros inside the window included.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, &z)| (self.start + k as i64, z))
    }

    /// Indices whose coefficient is exactly nonzero.
    pub fn support(&self) -> Vec<i64> {
        self.iter().filter(|(_, z)| *z != Complex64::new(0.0, 0.0)).map(|(n, _)| n).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Real parts over the stored window.
    pub fn real_parts(&self) -> Vec<f64> {
        self.coeffs.iter().map(|z| z.re).collect()
    }

    /// The sequence `n ↦ |x(n)|`.
    pub fn abs(&self) -> SeqZ {
        Self::trimmed(
            self.start,
            self.coeffs.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect(),
        )
    }

    /// Drops imaginary parts.
    pub fn re(&self) -> SeqZ {
        Self::trimmed(
            self.start,
            self.coeffs.iter().map(|z| Complex64::new(z.re, 0.0)).collect(),
        )
    }

    pub fn scale(&self, s: f64) -> SeqZ {
        self.scale_complex(Complex64::new(s, 0.0))
    }

    pub fn scale_complex(&self, s: Complex64) -> SeqZ {
        Self::trimmed(self.start, self.coeffs.iter().map(|&z| z * s).collect())
    }

    /// Applies `f(n, x(n))` over the stored window.
    pub fn map_indexed(&self, f: impl Fn(i64, Complex64) -> Complex64) -> SeqZ {
        Self::trimmed(self.start, self.iter().map(|(n, z)| f(n, z)).collect())
    }

    /// Translates the sequence so that `result(n) = x(n - k)`.
    pub fn shift(&self, k: i64) -> Result<SeqZ> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let start = self.start as i128 + k as i128;
        check_window(start, start + self.coeffs.len() as i128 - 1)?;
        Ok(Self {
            start: start as i64,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Index-wise sum.
    pub fn add(&self, other: &SeqZ) -> SeqZ {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.start.min(other.start);
        let hi = self.end().unwrap().max(other.end().unwrap());
        let coeffs = (lo..=hi).map(|n| self.get(n) + other.get(n)).collect();
        Self::trimmed(lo, coeffs)
    }

    pub fn sub(&self, other: &SeqZ) -> SeqZ {
        self.add(&other.scale(-1.0))
    }

    /// `sup_n |x(n) - y(n)|`.
    pub fn sup_distance(&self, other: &SeqZ) -> f64 {
        self.sub(other).max_abs()
    }
}

impl fmt::Debug for SeqZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "SeqZ(0)");
        }
        write!(f, "SeqZ[{}..={}](", self.start, self.end().unwrap())?;
        for (k, z) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if z.im == 0.0 {
                write!(f, "{}", z.re)?;
            } else {
                write!(f, "{}{:+}i", z.re, z.im)?;
            }
        }
        write!(f, ")")
    }
}

/// `result(n) = Σ_m x(m) y(n - m)`, by direct compensated summation.
pub fn convolve(x: &SeqZ, y: &SeqZ) -> Result<SeqZ> {
    if x.is_zero() || y.is_zero() {
        return Ok(SeqZ::zero());
    }
    let start = x.start as i128 + y.start as i128;
    let len = x.width() + y.width() - 1;
    check_window(start, start + len as i128 - 1)?;

    let (xs, ys) = (&x.coeffs, &y.coeffs);
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        // k = p + q with p indexing x and q indexing y
        let p_lo = k.saturating_sub(ys.len() - 1);
        let p_hi = k.min(xs.len() - 1);
        let mut acc = CompensatedComplexSum::new();
        for p in p_lo..=p_hi {
            acc.add(xs[p] * ys[k - p]);
        }
        out.push(acc.value());
    }
    Ok(SeqZ::trimmed(start as i64, out))
}

/// `result(n) = conj(x(-n))`.
pub fn involute(x: &SeqZ) -> SeqZ {
    match x.end() {
        None => SeqZ::zero(),
        Some(end) => SeqZ {
            start: -end,
            coeffs: x.coeffs.iter().rev().map(|z| z.conj()).collect(),
        },
    }
}

/// `m`-fold convolution of `x` with itself; `δ_0` when `m = 0`.
pub fn conv_power(x: &SeqZ, m: u32) -> Result<SeqZ> {
    let mut acc = SeqZ::delta(0);
    for _ in 0..m {
        acc = convolve(&acc, x)?;
    }
    Ok(acc)
}

/// The autocorrelation `x̃ * x`.
pub fn autocorrelation(x: &SeqZ) -> Result<SeqZ> {
    convolve(&involute(x), x)
}

/// `N_j(x) = [(x̃ * x)^{*j}](0)` by direct convolution.
///
/// This equals the mean over the circle of `|X|^{2j}` where `X` is the
/// trigonometric polynomial with coefficients `x`.
pub fn norm_pow_direct(x: &SeqZ, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    if x.is_zero() {
        return Ok(0.0);
    }
    let r = autocorrelation(x)?;
    // Split the power so only the value at 0 of the last product is needed.
    let lo = conv_power(&r, j / 2)?;
    let hi = conv_power(&r, j - j / 2)?;
    let mut acc = CompensatedComplexSum::new();
    for (n, z) in lo.iter() {
        acc.add(z * hi.get(-n));
    }
    Ok(acc.value().re.max(0.0))
}

/// `N_j(x + d) - N_j(x)` without forming either value.
///
/// Expands `((x+d)~ * (x+d))^{*j}(0)` in powers of the perturbation and sums
/// every term of positive degree, so the result keeps its relative accuracy
/// when `d` is tiny compared to `x`.
pub fn norm_pow_increment(x: &SeqZ, d: &SeqZ, j: u32) -> Result<f64> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    let (xt, dt) = (involute(x), involute(d));
    // autocorrelation of x + t d  =  p[0] + t p[1] + t² p[2]
    let p = [
        convolve(&xt, x)?,
        convolve(&xt, d)?.add(&convolve(&dt, x)?),
        convolve(&dt, d)?,
    ];
    let mut q = vec![SeqZ::delta(0)];
    for _ in 1..j {
        let mut next = vec![SeqZ::zero(); q.len() + 2];
        for (i, qi) in q.iter().enumerate() {
            for (l, pl) in p.iter().enumerate() {
                next[i + l] = next[i + l].add(&convolve(qi, pl)?);
            }
        }
        q = next;
    }
    let mut acc = CompensatedComplexSum::new();
    for (i, qi) in q.iter().enumerate() {
        for (l, pl) in p.iter().enumerate() {
            if i + l == 0 {
                continue;
            }
            for (n, z) in qi.iter() {
                acc.add(z * pl.get(-n));
            }
        }
    }
    Ok(acc.value().re)
}

/// `(b * b̃)^{*(j-1)} * b`, the coefficient sequence of `(G Ḡ)^{j-1} G`.
pub fn majorant_coeffs(b: &SeqZ, j: u32) -> Result<SeqZ> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    let r = convolve(b, &involute(b))?;
    convolve(&conv_power(&r, j - 1)?, b)
}

/// `a * (ã * a)^{*(j-1)}`, the coefficient sequence of `g^j ḡ^{j-1}`.
pub fn target_coeffs(a: &SeqZ, j: u32) -> Result<SeqZ> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    convolve(a, &conv_power(&autocorrelation(a)?, j - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn real(start: i64, xs: &[f64]) -> SeqZ {
        SeqZ::from_real(start, xs).unwrap()
    }

    #[test]
    fn trimming_is_canonical() {
        let x = real(-2, &[0.0, 0.0, 1.0, 2.0, 0.0]);
        assert_eq!(x.start(), 0);
        assert_eq!(x.coeffs().len(), 2);
        assert_eq!(x, real(0, &[1.0, 2.0]));
        let z = real(7, &[0.0, 1e-301]);
        assert!(z.is_zero());
        assert_eq!(z.start(), 0);
        assert_eq!(z, SeqZ::zero());
    }

    #[test]
    fn interior_zeros_are_kept() {
        let x = real(0, &[1.0, 0.0, 3.0]);
        assert_eq!(x.width(), 3);
        assert_eq!(x.support(), vec![0, 2]);
    }

    #[test]
    fn convolve_two_point_square() {
        let x = real(0, &[1.0, 1.0]);
        assert_eq!(convolve(&x, &x).unwrap(), real(0, &[1.0, 2.0, 1.0]));
    }

    #[test]
    fn convolve_with_zero_and_delta() {
        let x = SeqZ::new(-1, vec![c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.0)]).unwrap();
        assert!(convolve(&x, &SeqZ::zero()).unwrap().is_zero());
        assert!(convolve(&SeqZ::zero(), &x).unwrap().is_zero());
        assert_eq!(convolve(&x, &SeqZ::delta(4)).unwrap(), x.shift(4).unwrap());
        assert_eq!(convolve(&SeqZ::delta(-3), &x).unwrap(), x.shift(-3).unwrap());
    }

    #[test]
    fn convolve_rejects_index_overflow() {
        let x = SeqZ::delta(INDEX_LIMIT);
        assert!(matches!(
            convolve(&x, &x),
            Err(MajorantError::IndexOverflow { .. })
        ));
        assert!(SeqZ::from_real(INDEX_LIMIT, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn involute_examples() {
        let x = SeqZ::new(0, vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let y = involute(&x);
        assert_eq!(y.get(0), c(1.0, 0.0));
        assert_eq!(y.get(-1), c(0.0, -1.0));
        assert_eq!(involute(&y), x);
        assert_eq!(involute(&SeqZ::delta(3)), SeqZ::delta(-3));
        assert!(involute(&SeqZ::zero()).is_zero());
    }

    #[test]
    fn conv_power_examples() {
        let x = real(0, &[1.0, 1.0]);
        assert_eq!(conv_power(&x, 2).unwrap(), real(0, &[1.0, 2.0, 1.0]));
        assert_eq!(conv_power(&x, 1).unwrap(), x);
        assert_eq!(conv_power(&x, 0).unwrap(), SeqZ::delta(0));
        assert_eq!(conv_power(&SeqZ::zero(), 0).unwrap(), SeqZ::delta(0));
        assert!(conv_power(&SeqZ::zero(), 3).unwrap().is_zero());
    }

    #[test]
    fn norm_direct_examples() {
        assert_eq!(norm_pow_direct(&real(0, &[1.0, 1.0]), 2).unwrap(), 6.0);
        assert_eq!(norm_pow_direct(&real(0, &[1.0, -1.0, 1.0]), 2).unwrap(), 19.0);
        assert_eq!(norm_pow_direct(&SeqZ::zero(), 3).unwrap(), 0.0);
        assert_eq!(norm_pow_direct(&real(0, &[1.0, 2.0, 1.0]), 2).unwrap(), 70.0);
        assert!(norm_pow_direct(&real(0, &[1.0]), 0).is_err());
    }

    #[test]
    fn majorant_coeffs_examples() {
        let b = real(0, &[1.0, 1.0, 1.0]);
        assert_eq!(
            majorant_coeffs(&b, 2).unwrap(),
            real(-2, &[1.0, 3.0, 6.0, 7.0, 6.0, 3.0, 1.0])
        );
        let single = SeqZ::scaled_delta(4, c(2.0, 0.0));
        assert_eq!(
            majorant_coeffs(&single, 2).unwrap(),
            SeqZ::scaled_delta(4, c(8.0, 0.0))
        );
        let x = SeqZ::new(3, vec![c(0.5, -1.0), c(2.0, 0.25)]).unwrap();
        assert_eq!(majorant_coeffs(&x, 1).unwrap(), x);
    }

    #[test]
    fn target_coeffs_example() {
        let a = real(0, &[1.0, -1.0, 1.0]);
        assert_eq!(
            target_coeffs(&a, 2).unwrap(),
            real(-2, &[1.0, -3.0, 6.0, -7.0, 6.0, -3.0, 1.0])
        );
    }

    #[test]
    fn norm_increment_matches_difference() {
        let x = real(-1, &[0.4, 1.0, -0.3, 2.0]);
        let d = SeqZ::new(0, vec![c(0.1, -0.2), c(0.0, 0.0), c(-0.5, 0.3)]).unwrap();
        for j in 1..=3 {
            let direct = norm_pow_direct(&x.add(&d), j).unwrap() - norm_pow_direct(&x, j).unwrap();
            let inc = norm_pow_increment(&x, &d, j).unwrap();
            assert!((inc - direct).abs() <= 1e-12 * direct.abs().max(1.0), "j={j}: {inc} vs {direct}");
        }
        assert_eq!(norm_pow_increment(&x, &SeqZ::zero(), 2).unwrap(), 0.0);
    }

    #[test]
    fn norm_increment_resolves_tiny_steps() {
        // Linear term 2j<F̂(x), d> dominates for small d.
        let x = real(0, &[1.0, 0.5, 0.25]);
        let d = SeqZ::scaled_delta(1, c(1e-13, 0.0));
        let inc = norm_pow_increment(&x, &d, 2).unwrap();
        let lin = 4.0 * majorant_coeffs(&x, 2).unwrap().get(1).re * 1e-13;
        assert!((inc - lin).abs() <= 1e-6 * lin, "{inc} vs {lin}");
    }
}
