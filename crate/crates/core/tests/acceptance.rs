//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p majorant-core --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

mod common;

use std::time::Instant;

use common::*;
use majorant_core::instances::{corpus, random_on_support, stream_rng, CoeffKind, Instance};
use majorant_core::quadrature::{lp_grid_len, lp_norm_grid};
use majorant_core::seq::norm_pow_direct;
use majorant_core::verify::uniqueness_probe;
use majorant_core::*;
use num_complex::Complex64;
use rand::Rng;

const SUITE_SEED: u64 = 20_241_018;
const VERIFY_TOL: f64 = 1e-7;

fn random_suite() -> Vec<Instance> {
    corpus(SUITE_SEED, 500, 8, &[2, 3])
}

#[test]
fn c01_random_suite() {
    let cfg = SolverConfig::default();
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut worst_norm_gap: f64 = 0.0;
    let mut worst_major: f64 = f64::INFINITY;
    for inst in random_suite() {
        let p = derive_target(&inst.a, inst.j, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        let rep = verify_solution(&p, &sol, VERIFY_TOL);
        worst_norm_gap = worst_norm_gap.max(rep.norm_gap);
        worst_major = worst_major.min(rep.majorization_margin);
        if !rep.all_passed() {
            failures.push(format!("{}: {:?}", inst.name, rep.passed));
        }
    }
    let secs = t0.elapsed().as_secs_f64();
    let pass = failures.is_empty() && secs < 60.0;
    report(
        "C1",
        "four conclusions on 500 random instances",
        pass,
        format!(
            "{} failures, worst norm gap {worst_norm_gap:.2e}, worst majorization margin {worst_major:.2e}, {secs:.1}s",
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn c02_oracle_equivalence() {
    let cfg = SolverConfig::default();
    let t0 = Instant::now();
    let mut worst: f64 = 0.0;
    for (a, j) in small_oracle_instances(SUITE_SEED, 50, 8) {
        let p = derive_target(&a, j, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        let oracle = oracle_solve(&p, 10).unwrap();
        worst = worst.max(sol.b.sup_distance(&oracle) / sol.b.max_abs().max(1.0));
    }
    let secs = t0.elapsed().as_secs_f64();
    let pass = worst <= 1e-6 && secs < 30.0;
    report(
        "C2",
        "solver matches brute-force oracle",
        pass,
        format!("50 instances, worst index-wise gap {worst:.2e}, {secs:.1}s"),
    );
    assert!(pass);
}

#[test]
fn c03_order_one_identity() {
    let cfg = SolverConfig::default();
    let mut worst_b: f64 = 0.0;
    let mut worst_r: f64 = 0.0;
    for inst in corpus(SUITE_SEED + 1, 100, 8, &[1]) {
        let p = derive_target(&inst.a, 1, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        worst_b = worst_b.max(sol.b.sup_distance(&inst.a.abs()) / inst.a.max_abs());
        worst_r = worst_r.max((sol.r - 1.0).abs());
    }
    let pass = worst_b <= 1e-12 && worst_r <= 1e-12;
    report(
        "C3",
        "j = 1 gives b = |a|, r = 1",
        pass,
        format!("100 instances, worst |b - |a|| {worst_b:.2e}, worst |r - 1| {worst_r:.2e}"),
    );
    assert!(pass);
}

#[test]
fn c04_sidon_exactness() {
    let cfg = SolverConfig::default();
    let mut sets = 0;
    let mut worst_b: f64 = 0.0;
    let mut worst_r: f64 = 0.0;
    for mask in 1u32..(1 << 13) {
        if mask.count_ones() > 4 {
            continue;
        }
        let set: Vec<i64> = (0..13).filter(|k| mask & (1 << k) != 0).collect();
        if !is_sidon_bj(&set, 2).unwrap() {
            continue;
        }
        sets += 1;
        let mut rng = stream_rng(SUITE_SEED + 4, mask as u64);
        let kind = if rng.random_bool(0.5) { CoeffKind::Integer } else { CoeffKind::Gaussian };
        let a = random_on_support(&mut rng, &set, kind);
        let p = derive_target(&a, 2, &cfg).unwrap();
        let sol = solve(&p, &cfg).unwrap();
        worst_b = worst_b.max(sol.b.sup_distance(&a.abs()) / a.max_abs());
        worst_r = worst_r.max(sol.r - 1.0);
    }
    let pass = worst_b <= 1e-7 && worst_r <= 1e-7;
    report(
        "C4",
        "Sidon supports give the exact majorant",
        pass,
        format!("{sets} Sidon subsets of 0..=12, worst |b - |a|| {worst_b:.2e}, worst r - 1 {worst_r:.2e}"),
    );
    assert!(pass);
}

#[test]
fn c05_named_twisted_instance() {
    let a = twisted();
    let gap = exactness_gap(&a, 2).unwrap();
    let n_abs = norm_pow_direct(&a.abs(), 2).unwrap();
    let n_a = norm_pow_direct(&a, 2).unwrap();

    let p = problem(&a, 2);
    let sol = solve(&p, &SolverConfig::default()).unwrap();
    let fmin = minimal_majorant(&sol).unwrap();
    let pexp = 4.0 / 3.0;
    let len = lp_grid_len(sol.fhat.width());
    let norm_f = lp_norm_grid(&sol.fhat, pexp, len);
    let norm_fmin = lp_norm_grid(&fmin, pexp, len);
    let max_c = p.c.max_abs();
    let major = p
        .c
        .iter()
        .map(|(n, z)| (fmin.get(n).re - z.norm()) / max_c)
        .fold(f64::INFINITY, f64::min);

    let pass = gap == 8.0
        && n_abs == 19.0
        && n_a == 11.0
        && sol.converged
        && sol.r > 1.0
        && norm_fmin < norm_f
        && (norm_f / norm_fmin - sol.r).abs() <= 1e-12 * sol.r
        && major >= -1e-8;
    report(
        "C5",
        "(1, i, 1) at j = 2",
        pass,
        format!(
            "gap {gap}, N(|a|) {n_abs}, N(a) {n_a}, r {:.12}, norm ratio {:.12}, min majorization margin {major:.2e}",
            sol.r,
            norm_f / norm_fmin
        ),
    );
    assert!(pass);
}

#[test]
fn c06_gradient_check() {
    let mut rng = stream_rng(SUITE_SEED + 6, 0);
    let step = 1e-5;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let b = random_nonneg(&mut rng, 8);
        let j = rng.random_range(1..=3u32);
        let grad = grad_norm(&b, j).unwrap();
        let scale = grad.max_abs();
        let lo = b.start() - 2;
        let hi = b.end().unwrap() + 2;
        for n in lo..=hi {
            let e = SeqZ::scaled_delta(n, Complex64::new(step, 0.0));
            let fd = (norm_pow_direct(&b.add(&e), j).unwrap() - norm_pow_direct(&b.sub(&e), j).unwrap())
                / (2.0 * step);
            worst = worst.max((fd - grad.get(n).re).abs() / scale);
        }
    }
    let pass = worst <= 1e-6;
    report(
        "C6",
        "gradient against central differences",
        pass,
        format!("100 points, worst relative error {worst:.2e}"),
    );
    assert!(pass);
}

#[test]
fn c07_inequality_suites() {
    let mut rng = stream_rng(SUITE_SEED + 7, 0);
    let mut worst_h: f64 = f64::INFINITY;
    let mut worst_u: f64 = f64::INFINITY;
    for k in 0..1000 {
        let j = 2 + (k % 2) as u32;
        let kind = if k % 3 == 0 { CoeffKind::Integer } else { CoeffKind::Gaussian };
        let a = majorant_core::instances::random_sequence(&mut rng, 8, kind);
        let kk = majorant_core::instances::random_sequence(&mut rng, 8, kind);
        let rhs_scale = norm_pow_direct(&kk, j).unwrap().powf(0.5 / j as f64)
            * norm_pow_direct(&a, j).unwrap().powf(1.0 - 0.5 / j as f64);
        worst_h = worst_h.min(check_hoelder(&a, &kk, j).unwrap() / rhs_scale);

        let b = random_nonneg(&mut rng, 8);
        let factors: Vec<Complex64> = (0..b.width())
            .map(|_| {
                let shrink: f64 = rng.random_range(0.0..=1.0);
                Complex64::from_polar(shrink, rng.random_range(0.0..std::f64::consts::TAU))
            })
            .collect();
        let d = b.map_indexed(|n, z| z * factors[(n - b.start()) as usize]);
        let nb = norm_pow_direct(&b, j).unwrap();
        worst_u = worst_u.min(check_upper_majorant(&b, &d, j).unwrap() / nb);
    }
    let pass = worst_h >= -1e-10 && worst_u >= -1e-10;
    report(
        "C7",
        "Hölder and upper-majorant margins",
        pass,
        format!("1000 pairs each, worst relative margins {worst_h:.2e} / {worst_u:.2e}"),
    );
    assert!(pass);
}

#[test]
fn c08_equivariance() {
    let cfg = SolverConfig::default();
    let t = 3.0;
    let alpha: f64 = 0.7;
    let mut worst_s: f64 = 0.0;
    let mut worst_m: f64 = 0.0;
    for inst in corpus(SUITE_SEED + 8, 50, 8, &[2, 3]) {
        let base = solve(&problem(&inst.a, inst.j), &cfg).unwrap();
        let scale = base.b.max_abs();

        let scaled = solve(&problem(&inst.a.scale(t), inst.j), &cfg).unwrap();
        worst_s = worst_s.max(scaled.b.scale(1.0 / t).sup_distance(&base.b) / scale);
        worst_s = worst_s.max((scaled.r - base.r).abs());

        let modulated = inst.a.map_indexed(|n, z| z * Complex64::from_polar(1.0, alpha * n as f64));
        let moved = solve(&problem(&modulated, inst.j), &cfg).unwrap();
        worst_m = worst_m.max(moved.b.sup_distance(&base.b) / scale);
        worst_m = worst_m.max((moved.r - base.r).abs());
    }
    let pass = worst_s <= 1e-9 && worst_m <= 1e-9;
    report(
        "C8",
        "scaling and modulation equivariance",
        pass,
        format!("50 instances, worst scaling gap {worst_s:.2e}, worst modulation gap {worst_m:.2e}"),
    );
    assert!(pass);
}

#[test]
fn c09_uniqueness_probe() {
    let cfg = SolverConfig::default();
    let mut worst: f64 = 0.0;
    let mut nonconverged = 0;
    for inst in random_suite() {
        let p = derive_target(&inst.a, inst.j, &cfg).unwrap();
        let rep = uniqueness_probe(&p, &cfg).unwrap();
        nonconverged += rep.nonconverged;
        if rep.max_b > 0.0 {
            worst = worst.max(rep.distance / rep.max_b);
        }
    }
    let pass = worst <= 1e-5 && nonconverged == 0;
    report(
        "C9",
        "random restarts agree",
        pass,
        format!("500 instances x {} restarts, worst spread {worst:.2e}, {nonconverged} non-converged", cfg.restarts),
    );
    assert!(pass);
}

#[test]
fn c10_support_automaticity() {
    let cfg = SolverConfig::default();
    let mut worst: f64 = 0.0;
    for (k, inst) in corpus(SUITE_SEED + 10, 50, 8, &[2, 3]).into_iter().enumerate() {
        let p = derive_target(&inst.a, inst.j, &cfg).unwrap();
        let padded = p.with_padded_support(3);
        let mut rng = stream_rng(SUITE_SEED + 10, 1000 + k as u64);
        let start = majorant_core::solver::random_feasible_point(&padded, &mut rng);
        let sol = majorant_core::solver::solve_from(&padded, &cfg, &start).unwrap();
        let leak = sol
            .b
            .iter()
            .filter(|(n, _)| p.support.binary_search(n).is_err())
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max);
        worst = worst.max(leak / sol.b.max_abs());
    }
    let pass = worst <= 1e-8;
    report(
        "C10",
        "enlarged feasible set leaves no mass outside supp c",
        pass,
        format!("50 instances, worst relative leak {worst:.2e}"),
    );
    assert!(pass);
}
