//! Euclidean projection onto the weighted simplex `{h ≥ 0 : Σ w(n) h(n) = 1}`.

/// Projects `v` onto `{h ≥ 0 : Σ w(n) h(n) = 1}`.
///
/// The projection has the form `h(n) = max(v(n) - τ w(n), 0)`; `τ` is found
/// by sorting the breakpoints `v(n)/w(n)` and scanning for the segment on
/// which the constraint is met. Coordinates with `w(n) = 0` do not enter the
/// constraint and are simply clipped at zero.
///
/// # Panics
///
/// If the lengths differ, any weight is negative, or no weight is positive.
pub fn project_weighted_simplex(v: &[f64], w: &[f64]) -> Vec<f64> {
    assert_eq!(v.len(), w.len(), "vector and weights differ in length");
    assert!(w.iter().all(|&x| x >= 0.0), "negative weight");

    let mut order: Vec<usize> = (0..v.len()).filter(|&k| w[k] > 0.0).collect();
    assert!(!order.is_empty(), "weighted simplex needs a positive weight");
    order.sort_by(|&p, &q| (v[q] / w[q]).total_cmp(&(v[p] / w[p])));

    let mut wv = 0.0;
    let mut ww = 0.0;
    let mut tau = 0.0;
    for (k, &i) in order.iter().enumerate() {
        wv += w[i] * v[i];
        ww += w[i] * w[i];
        tau = (wv - 1.0) / ww;
        match order.get(k + 1) {
            Some(&next) if tau < v[next] / w[next] => continue,
            _ => break,
        }
    }
    v.iter()
        .zip(w)
        .map(|(&x, &wt)| (x - tau * wt).max(0.0))
        .collect()
}
