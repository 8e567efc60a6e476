//! On-disk formats. Every coefficient carries its index explicitly.

use std::path::Path;

use majorant_core::{MajorantSolution, SeqZ};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coefficient {
    pub n: i64,
    pub re: f64,
    pub im: f64,
}

/// `{"j": .., "coeffs": [{"n": .., "re": .., "im": ..}, ..]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceFile {
    pub j: u32,
    pub coeffs: Vec<Coefficient>,
}

/// A solved instance as written by `majorize --out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub seed: u64,
    pub j: u32,
    pub converged: bool,
    pub iters: usize,
    pub kkt_residual: f64,
    pub m: f64,
    pub n: f64,
    pub r: f64,
    pub b: Vec<Coefficient>,
    pub fhat: Vec<Coefficient>,
    pub fhat_min: Vec<Coefficient>,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed {what}: {e}")))
}

/// Nonzero coefficients of `x` in index order.
pub fn coefficients(x: &SeqZ) -> Vec<Coefficient> {
    x.iter()
        .filter(|(_, z)| z.re != 0.0 || z.im != 0.0)
        .map(|(n, z)| Coefficient { n, re: z.re, im: z.im })
        .collect()
}

/// Builds a sequence, rejecting unsorted, duplicate or non-finite entries.
pub fn to_seq(coeffs: &[Coefficient]) -> Result<SeqZ, CliError> {
    if let Some(w) = coeffs.windows(2).find(|w| w[0].n >= w[1].n) {
        return Err(CliError::Input(format!(
            "indices must be strictly increasing, found {} before {}",
            w[0].n, w[1].n
        )));
    }
    if let Some(c) = coeffs.iter().find(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(CliError::Input(format!("non-finite coefficient at n = {}", c.n)));
    }
    Ok(SeqZ::from_pairs(coeffs.iter().map(|c| (c.n, Complex64::new(c.re, c.im))))?)
}

fn check_order(j: u32) -> Result<(), CliError> {
    if j == 0 {
        return Err(CliError::Input("order j must be at least 1".into()));
    }
    Ok(())
}

impl SequenceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: Self = parse_json(text, "sequence file")?;
        check_order(file.j)?;
        to_seq(&file.coeffs)?;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read_text(path)?)
    }

    pub fn new(j: u32, a: &SeqZ) -> Self {
        Self { j, coeffs: coefficients(a) }
    }

    pub fn sequence(&self) -> SeqZ {
        to_seq(&self.coeffs).expect("validated on parse")
    }
}

impl SolutionFile {
    pub fn new(sol: &MajorantSolution, seed: u64) -> Self {
        Self {
            seed,
            j: sol.j,
            converged: sol.converged,
            iters: sol.iters,
            kkt_residual: sol.kkt_residual,
            m: sol.m,
            n: sol.n,
            r: sol.r,
            b: coefficients(&sol.b),
            fhat: coefficients(&sol.fhat),
            fhat_min: coefficients(&sol.fhat_min),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: Self = parse_json(text, "solution file")?;
        check_order(file.j)?;
        for list in [&file.b, &file.fhat, &file.fhat_min] {
            to_seq(list)?;
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read_text(path)?)
    }

    pub fn b(&self) -> SeqZ {
        to_seq(&self.b).expect("validated on parse")
    }
}

/// Pretty JSON followed by a newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
