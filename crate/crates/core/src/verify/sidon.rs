use crate::error::{MajorantError, Result};

pub const SIDON_MAX_SET: usize = 24;
pub const SIDON_MAX_ORDER: u32 = 4;

/// True when every sum of `j` elements of `set` (repetition allowed) has a
/// single representation up to reordering of the summands.
///
/// Duplicates in `set` are ignored. Exact integer enumeration over all
/// multisets of size `j`, capped at `|set| ≤ 24`, `j ≤ 4`.
pub fn is_sidon_bj(set: &[i64], j: u32) -> Result<bool> {
    if j == 0 {
        return Err(MajorantError::ZeroOrder);
    }
    let mut elems = set.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if elems.len() > SIDON_MAX_SET || j > SIDON_MAX_ORDER {
        return Err(MajorantError::CapExceeded(format!(
            "Sidon enumeration supports |S| ≤ {SIDON_MAX_SET} and j ≤ {SIDON_MAX_ORDER}, got |S| = {} and j = {j}",
            elems.len()
        )));
    }
    let mut sums = Vec::new();
    multiset_sums(&elems, j as usize, 0, 0, &mut sums);
    sums.sort_unstable();
    Ok(sums.windows(2).all(|w| w[0] != w[1]))
}

// Non-decreasing index sequences enumerate each multiset exactly once.
fn multiset_sums(elems: &[i64], left: usize, from: usize, acc: i128, out: &mut Vec<i128>) {
    if left == 0 {
        out.push(acc);
        return;
    }
    for k in from..elems.len() {
        multiset_sums(elems, left - 1, k, acc + elems[k] as i128, out);
    }
}
