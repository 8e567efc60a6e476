use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use majorant_core::instances::corpus;
use majorant_core::verify::candidate;
use majorant_core::*;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::files::{write_json, SequenceFile, SolutionFile};

/// Relative gap below which the input counts as exact.
pub const GAP_ZERO_TOL: f64 = 1e-10;

pub struct MajorizeArgs {
    pub file: PathBuf,
    pub out: Option<PathBuf>,
    pub tol: f64,
    pub max_iters: usize,
    pub seed: u64,
}

fn header(out: &mut dyn Write, command: &str, seed: u64, fields: &[(&str, String)]) -> std::io::Result<()> {
    write!(out, "# majorant {command} seed={seed}")?;
    for (k, v) in fields {
        write!(out, " {k}={v}")?;
    }
    writeln!(out)
}

fn print_table(out: &mut dyn Write, problem: &MajorantProblem, sol: &MajorantSolution) -> std::io::Result<()> {
    let Some(hi) = problem.c.end() else {
        return Ok(());
    };
    let lo = problem.c.start();
    writeln!(out, "{:>6} {:>24} {:>24} {:>24} {:>24}", "n", "b", "Fhat", "FhatMin", "|c|")?;
    for n in lo..=hi {
        writeln!(
            out,
            "{n:>6} {:>24.16e} {:>24.16e} {:>24.16e} {:>24.16e}",
            sol.b.get(n).re,
            sol.fhat.get(n).re,
            sol.fhat_min.get(n).re,
            problem.c.get(n).norm()
        )?;
    }
    Ok(())
}

fn print_report(out: &mut dyn Write, rep: &VerificationReport) -> std::io::Result<()> {
    let ok = |b: bool| if b { "pass" } else { "FAIL" };
    let p = &rep.passed;
    writeln!(out, "verification (tol {:e}):", rep.tol)?;
    writeln!(out, "  nonnegative     {:<4}  min b/max b {:+.3e}, imag leak {:.3e}", ok(p.nonnegative), rep.nonneg_margin, rep.imag_leak)?;
    writeln!(out, "  support         {:<4}  leak {:.3e}", ok(p.support), rep.support_leak)?;
    writeln!(out, "  matched norm    {:<4}  gap {:.3e}", ok(p.matched_norm), rep.norm_gap)?;
    writeln!(out, "  majorizes       {:<4}  margin {:+.3e}", ok(p.majorizes), rep.majorization_margin)?;
    writeln!(out, "  hoelder         {:<4}  margin {:+.3e}", ok(p.hoelder), rep.hoelder_margin)?;
    writeln!(out, "  upper majorant  {:<4}  margin {:+.3e}", ok(p.upper_majorant), rep.upper_majorant_margin)?;
    writeln!(out, "  ratio           {:<4}  r {:.6}", ok(p.ratio), rep.ratio)
}

fn verdict(rep: &VerificationReport) -> Result<(), CliError> {
    if rep.all_checks_passed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{:?}", rep.passed)))
    }
}

pub fn majorize(args: &MajorizeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = SequenceFile::read(&args.file)?;
    let cfg = SolverConfig { max_iters: args.max_iters, seed: args.seed, ..SolverConfig::default() };
    cfg.validate()?;
    if !(args.tol > 0.0) {
        return Err(CliError::Input(format!("tolerance must be positive, got {}", args.tol)));
    }
    let a = input.sequence();
    let problem = derive_target(&a, input.j, &cfg)?;
    header(
        out,
        "majorize",
        args.seed,
        &[("file", args.file.display().to_string()), ("j", input.j.to_string())],
    )?;
    writeln!(out, "|S| = {}", problem.dim())?;

    let sol = solve(&problem, &cfg)?;
    if !sol.converged {
        writeln!(out, "not converged after {} iterations, KKT residual {:.3e}", sol.iters, sol.kkt_residual)?;
        return Err(CliError::NotConverged(format!(
            "{} iterations, KKT residual {:.3e} > {:.1e}",
            sol.iters, sol.kkt_residual, cfg.kkt_tol
        )));
    }
    writeln!(out, "iterations {}, KKT residual {:.3e}", sol.iters, sol.kkt_residual)?;
    if problem.is_trivial() {
        writeln!(out, "zero input: b = 0")?;
    } else {
        print_table(out, &problem, &sol)?;
    }
    writeln!(out, "M = {:.16e}", sol.m)?;
    writeln!(out, "N = {:.16e}", sol.n)?;
    writeln!(out, "r = {:.6}", sol.r)?;

    if let Some(path) = &args.out {
        write_json(path, &SolutionFile::new(&sol, args.seed))?;
    }
    let rep = verify_solution(&problem, &sol, args.tol);
    print_report(out, &rep)?;
    verdict(&rep)
}

pub fn verify(solution: &Path, problem_path: &Path, tol: f64, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let sol = SolutionFile::read(solution)?;
    let input = SequenceFile::read(problem_path)?;
    if sol.j != input.j {
        return Err(CliError::Input(format!("solution has j = {} but problem has j = {}", sol.j, input.j)));
    }
    let problem = derive_target(&input.sequence(), input.j, &SolverConfig::default())?;
    header(
        out,
        "verify",
        seed,
        &[
            ("solution", solution.display().to_string()),
            ("problem", problem_path.display().to_string()),
            ("solution_seed", sol.seed.to_string()),
        ],
    )?;
    let rep = verify_solution(&problem, &candidate(sol.j, sol.b()), tol);
    print_report(out, &rep)?;
    verdict(&rep)
}

/// Parses `"0, 1, 3"`; the empty string is the empty set.
pub fn parse_set(list: &str) -> Result<Vec<i64>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e| CliError::Input(format!("bad set element {s:?}: {e}"))))
        .collect()
}

pub fn sidon(list: &str, j: u32, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let set = parse_set(list)?;
    let answer = is_sidon_bj(&set, j)?;
    header(out, "sidon", seed, &[("set", format!("{set:?}")), ("j", j.to_string())])?;
    writeln!(out, "{answer}")?;
    Ok(())
}

pub fn gap(file: &Path, seed: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let input = SequenceFile::read(file)?;
    let a = input.sequence();
    let j = input.j;
    let n_abs = seq::norm_pow_direct(&a.abs(), j)?;
    let n_a = seq::norm_pow_direct(&a, j)?;
    let gap = exactness_gap(&a, j)?;
    header(out, "gap", seed, &[("file", file.display().to_string()), ("j", j.to_string())])?;
    writeln!(out, "N(|a|) = {n_abs:.16e}")?;
    writeln!(out, "N(a)   = {n_a:.16e}")?;
    writeln!(out, "gap    = {gap:.16e}")?;
    let prediction = if gap <= GAP_ZERO_TOL * n_abs { "r = 1" } else { "r > 1" };
    writeln!(out, "predicted {prediction}")?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct BenchRow {
    instance: String,
    support_size: usize,
    j: u32,
    iters: usize,
    kkt_residual: f64,
    r: f64,
    wall_time_s: f64,
    converged: bool,
}

/// Instance files of `dir` (`*.json`), sorted by name.
pub fn instance_files(dir: &Path) -> Result<Vec<(String, PathBuf)>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Input(format!("cannot read {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::Input(e.to_string()))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            files.push((name, path));
        }
    }
    files.sort();
    Ok(files)
}

/// Solves every instance of `dir` and writes one CSV row per instance.
/// Returns a non-convergence error after writing if any instance failed.
pub fn bench(dir: &Path, workers: usize, seed: u64, out: &mut dyn Write, log: &mut dyn Write) -> Result<(), CliError> {
    if workers == 0 {
        return Err(CliError::Input("--workers must be at least 1".into()));
    }
    let files = instance_files(dir)?;
    let inputs = files
        .iter()
        .map(|(name, path)| SequenceFile::read(path).map(|f| (name.clone(), f)))
        .collect::<Result<Vec<_>, _>>()?;
    header(
        log,
        "bench",
        seed,
        &[("dir", dir.display().to_string()), ("workers", workers.to_string()), ("instances", inputs.len().to_string())],
    )?;

    let cfg = SolverConfig { seed, ..SolverConfig::default() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let rows = pool.install(|| {
        inputs
            .par_iter()
            .map(|(name, input)| -> Result<BenchRow, CliError> {
                let t0 = Instant::now();
                let problem = derive_target(&input.sequence(), input.j, &cfg)?;
                let sol = solve(&problem, &cfg)?;
                Ok(BenchRow {
                    instance: name.clone(),
                    support_size: problem.dim(),
                    j: input.j,
                    iters: sol.iters,
                    kkt_residual: sol.kkt_residual,
                    r: sol.r,
                    wall_time_s: t0.elapsed().as_secs_f64(),
                    converged: sol.converged,
                })
            })
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    csv.write_record(["instance", "support_size", "j", "iters", "kkt_residual", "r", "wall_time_s", "converged"])?;
    for row in &rows {
        csv.serialize(row)?;
    }
    csv.flush()?;

    let failed: Vec<&str> = rows.iter().filter(|r| !r.converged).map(|r| r.instance.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::NotConverged(format!("{} instance(s): {}", failed.len(), failed.join(", "))))
    }
}

/// Writes a seeded random corpus, one file per instance.
pub fn gen_corpus(
    dir: &Path,
    count: usize,
    max_width: usize,
    orders: &[u32],
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if max_width == 0 || orders.is_empty() || orders.contains(&0) {
        return Err(CliError::Input("need a positive width and nonzero orders".into()));
    }
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("cannot create {}: {e}", dir.display())))?;
    for inst in corpus(seed, count, max_width, orders) {
        write_json(&dir.join(format!("{}.json", inst.name)), &SequenceFile::new(inst.j, &inst.a))?;
    }
    header(out, "gen-corpus", seed, &[("dir", dir.display().to_string()), ("count", count.to_string())])?;
    Ok(())
}
