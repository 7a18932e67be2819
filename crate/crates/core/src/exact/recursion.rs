use crate::alphabet::{Text, Word};
use crate::counting::prefix_count_row;

/// `R_i^j(T, w)` for every role `i ∈ [k]` and prefix length `j ∈ [0, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTable {
    rows: Vec<Vec<u64>>,
}

impl RTable {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// `R_i^j` with 1-based role `i`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i - 1][j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i - 1]
    }

    /// `R(T, w) = R_k^n`.
    pub fn total(&self) -> u64 {
        *self.rows.last().and_then(|r| r.last()).unwrap_or(&0)
    }
}

/// Fills row `i` from row `i-1` with a running maximum of
/// `N_i^{j'} - R_{i-1}^{j'-1}`.
fn next_row(counts: &[u64], prev: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(counts.len());
    out.push(0);
    let mut running = i64::MIN;
    for j in 1..counts.len() {
        running = running.max(counts[j] as i64 - prev[j - 1] as i64);
        out.push((counts[j] as i64 - running) as u64);
    }
    out
}

/// The full recursion table in `O(kn)`.
pub fn r_table(text: &Text, w: &Word) -> RTable {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(w.len());
    rows.push(prefix_count_row(text, w, 1).expect("role 1 exists"));
    for i in 2..=w.len() {
        let counts = prefix_count_row(text, w, i).expect("role in range");
        let row = next_row(&counts, &rows[i - 2]);
        rows.push(row);
    }
    RTable { rows }
}

/// `R(T, w)` via the recursion, keeping only two rows.
pub fn r_value(text: &Text, w: &Word) -> u64 {
    let mut prev = prefix_count_row(text, w, 1).expect("role 1 exists");
    for i in 2..=w.len() {
        let counts = prefix_count_row(text, w, i).expect("role in range");
        prev = next_row(&counts, &prev);
    }
    *prev.last().unwrap_or(&0)
}
