use crate::seq::{majorant_coeffs, norm_pow_direct, target_coeffs, SeqZ};
use crate::solver::{MajorantProblem, MajorantSolution};
use crate::sum::sum_f64;

use super::inequalities::hoelder_sides;

/// Pass/fail per checked statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ItemResults {
    /// `b ≥ 0` (and real).
    pub nonnegative: bool,
    /// `b` vanishes off the support of `c`.
    pub support: bool,
    /// `N_j(b) = N_j(a)`.
    pub matched_norm: bool,
    /// `(b * b̃)^{*(j-1)} * b ≥ |c|`.
    pub majorizes: bool,
    pub hoelder: bool,
    pub upper_majorant: bool,
    /// `r ≥ 1`.
    pub ratio: bool,
}

/// Margins of every check, all relative to the natural scale of the item.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub tol: f64,
    /// `min_{n∈S} b(n) / max|b|`.
    pub nonneg_margin: f64,
    /// `max |Im b(n)| / max|b|`.
    pub imag_leak: f64,
    /// `max_{n∉S} |b(n)| / max|b|`.
    pub support_leak: f64,
    /// `|N_j(b) - N_j(a)| / N_j(a)`.
    pub norm_gap: f64,
    /// `min_n (F̂(n) - |c(n)|) / max|c|` over every index.
    pub majorization_margin: f64,
    /// Hölder margin for the pair `(a, b)`, relative to the right side.
    pub hoelder_margin: f64,
    /// `(N_j(|a|) - N_j(a)) / N_j(|a|)`.
    pub upper_majorant_margin: f64,
    /// `N_j(b) / Φ(b)`, recomputed.
    pub ratio: f64,
    pub passed: ItemResults,
}

impl VerificationReport {
    /// All four properties of the majorant hold.
    pub fn all_passed(&self) -> bool {
        let p = &self.passed;
        p.nonnegative && p.support && p.matched_norm && p.majorizes
    }

    /// The four properties and every auxiliary inequality hold.
    pub fn all_checks_passed(&self) -> bool {
        let p = &self.passed;
        self.all_passed() && p.hoelder && p.upper_majorant && p.ratio
    }
}

fn rel(x: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        x / scale
    } else {
        x
    }
}

/// Re-derives `c`, both norms and the majorant from `a` and `sol.b` and
/// reports every margin; nothing computed by the solver except `b` is used.
pub fn verify_solution(
    problem: &MajorantProblem,
    sol: &MajorantSolution,
    tol: f64,
) -> VerificationReport {
    let j = problem.j;
    let a = &problem.a;
    let b = &sol.b;
    let c = target_coeffs(a, j).expect("c was computed for this problem");
    let fhat = majorant_coeffs(b, j).expect("window of b is in range");
    let norm_a = norm_pow_direct(a, j).expect("order is positive");
    let norm_b = norm_pow_direct(b, j).expect("order is positive");
    let max_b = b.max_abs();
    let max_c = c.max_abs();
    let in_support = |n: i64| problem.support.binary_search(&n).is_ok();

    let nonneg_margin = problem
        .support
        .iter()
        .map(|&n| rel(b.get(n).re, max_b))
        .fold(f64::INFINITY, f64::min);
    let nonneg_margin = if nonneg_margin.is_finite() { nonneg_margin } else { 0.0 };
    let imag_leak = rel(b.coeffs().iter().map(|z| z.im.abs()).fold(0.0, f64::max), max_b);
    let support_leak = rel(
        b.iter()
            .filter(|&(n, _)| !in_support(n))
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max),
        max_b,
    );
    let norm_gap = rel((norm_b - norm_a).abs(), norm_a);

    let mut majorization_margin = f64::INFINITY;
    let indices = c.iter().map(|(n, _)| n).chain(fhat.iter().map(|(n, _)| n));
    for n in indices {
        majorization_margin = majorization_margin.min(rel(fhat.get(n).re - c.get(n).norm(), max_c));
    }
    if !majorization_margin.is_finite() {
        majorization_margin = 0.0;
    }

    let (lhs, rhs) = hoelder_sides(a, b, j).expect("order is positive");
    let hoelder_margin = rel(rhs - lhs, rhs);
    let norm_abs_a = norm_pow_direct(&a.abs(), j).expect("order is positive");
    let upper_majorant_margin = rel(norm_abs_a - norm_a, norm_abs_a);
    let phi_b = sum_f64(
        problem
            .support
            .iter()
            .map(|&n| b.get(n).re * c.get(n).norm()),
    );
    let ratio = if phi_b > 0.0 { norm_b / phi_b } else { 1.0 };

    let passed = ItemResults {
        nonnegative: nonneg_margin >= -tol && imag_leak <= tol,
        support: support_leak <= tol,
        matched_norm: norm_gap <= tol,
        majorizes: majorization_margin >= -tol,
        hoelder: hoelder_margin >= -tol,
        upper_majorant: upper_majorant_margin >= -tol,
        ratio: ratio >= 1.0 - tol,
    };
    VerificationReport {
        tol,
        nonneg_margin,
        imag_leak,
        support_leak,
        norm_gap,
        majorization_margin,
        hoelder_margin,
        upper_majorant_margin,
        ratio,
        passed,
    }
}

/// Builds a bare solution around a candidate `b` so that arbitrary sequences
/// can be run through [`verify_solution`].
pub fn candidate(j: u32, b: SeqZ) -> MajorantSolution {
    MajorantSolution {
        j,
        b,
        m: f64::NAN,
        n: f64::NAN,
        r: f64::NAN,
        fhat: SeqZ::zero(),
        fhat_min: SeqZ::zero(),
        iters: 0,
        kkt_residual: f64::NAN,
        lambda: f64::NAN,
        converged: false,
    }
}
