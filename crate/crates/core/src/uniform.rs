//! Distance estimation under the uniform distribution.
//!
//! The estimator lays a grid `J = {j_1 < … < j_ℓ = n}` of prefix lengths
//! with spacing about `γn`, estimates every `N_i^{j_r}` from one uniform
//! sample, and feeds the estimates through the `M` recursion
//!
//! ```text
//! M_1^r = N_1^r
//! M_i^r = N_i^r - max_{r' ≤ r} (N_i^{r'} - M_{i-1}^{r'})
//! ```
//!
//! With `γ = δ/(3k)` and `s = ⌈ln(6kℓ)/(2γ²)⌉` draws the output is within
//! `δ` of `Δ(T, w)` with probability at least 2/3.

use std::collections::HashMap;
use std::ops::Sub;

use serde::Serialize;

use crate::alphabet::{Symbol, Text, Word};
use crate::counting::prefix_count_row;
use crate::error::{Error, Result};
use crate::numeric::ceil_snap_u64;
use crate::sample::{SampleSet, SamplingOracle};

/// Prefix lengths `j_1 < … < j_ℓ = n` (`j_0 = 0` is implicit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixGrid {
    points: Vec<usize>,
}

impl PrefixGrid {
    /// Any strictly increasing grid ending at `n`.
    pub fn from_points(n: usize, points: Vec<usize>) -> Result<Self> {
        if points.is_empty() || *points.last().unwrap() != n || points[0] == 0 {
            return Err(Error::InvalidInput("grid must be non-empty, positive and end at n".into()));
        }
        if points.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::InvalidInput("grid must be strictly increasing".into()));
        }
        Ok(PrefixGrid { points })
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// `ℓ`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn n(&self) -> usize {
        *self.points.last().unwrap()
    }

    /// `max_τ (j_τ - j_{τ-1})`.
    pub fn max_gap(&self) -> usize {
        let mut prev = 0;
        let mut gap = 0;
        for &j in &self.points {
            gap = gap.max(j - prev);
            prev = j;
        }
        gap
    }

    /// Index `r` (1-based) of the first grid point `≥ j`.
    pub fn bucket_of(&self, j: usize) -> usize {
        self.points.partition_point(|&p| p < j) + 1
    }
}

/// `J = {min(⌈rγn⌉, n)}_{r ≥ 1}`, deduplicated and stopped at `n`.
pub fn build_j(n: usize, gamma: f64) -> Result<PrefixGrid> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(Error::InvalidInput(format!("gamma = {gamma} must be positive")));
    }
    let mut points = Vec::new();
    let mut r = 1u64;
    loop {
        let j = (ceil_snap_u64(r as f64 * gamma * n as f64) as usize).min(n);
        if points.last() != Some(&j) && j > 0 {
            points.push(j);
        }
        if j == n {
            break;
        }
        r += 1;
    }
    PrefixGrid::from_points(n, points)
}

/// Parameters of the uniform estimator for a given `(k, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniformParams {
    pub gamma: f64,
    pub ell: u64,
    pub samples: u64,
}

/// `γ = δ/(3k)`, `ℓ = ⌈1/γ⌉`, `s = ⌈ln(6kℓ)/(2γ²)⌉`.
pub fn sample_size_uniform(k: usize, delta: f64) -> Result<UniformParams> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidInput(format!("delta = {delta} must lie in (0, 1)")));
    }
    let gamma = delta / (3.0 * k as f64);
    let ell = ceil_snap_u64(1.0 / gamma);
    let samples = ceil_snap_u64((6.0 * k as f64 * ell as f64).ln() / (2.0 * gamma * gamma));
    Ok(UniformParams { gamma, ell, samples })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    Exact,
    Estimated,
}

/// Raw counts, or counts divided by the text length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountScale {
    Raw,
    Normalized,
}

/// A `k × ℓ` matrix of prefix counts `𝒩_i^r`.
#[derive(Debug, Clone, PartialEq)]
pub struct CountMatrix {
    rows: Vec<Vec<f64>>,
    pub kind: CountKind,
    pub scale: CountScale,
}

impl CountMatrix {
    pub fn new(rows: Vec<Vec<f64>>, kind: CountKind, scale: CountScale) -> Result<Self> {
        let ell = rows.first().map(Vec::len).unwrap_or(0);
        if ell == 0 || rows.iter().any(|r| r.len() != ell) {
            return Err(Error::InvalidInput("count matrix must be non-empty and rectangular".into()));
        }
        if rows.iter().flatten().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::InvalidInput("counts must be finite and non-negative".into()));
        }
        Ok(CountMatrix { rows, kind, scale })
    }

    /// Exact `N_i^{j_r}(T, w)`.
    pub fn exact(text: &Text, w: &Word, grid: &PrefixGrid) -> Result<Self> {
        if grid.n() != text.len() {
            return Err(Error::InvalidInput("grid does not end at n".into()));
        }
        let rows = (1..=w.len())
            .map(|i| {
                let row = prefix_count_row(text, w, i)?;
                Ok(grid.points().iter().map(|&j| row[j] as f64).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountMatrix {
            rows,
            kind: CountKind::Exact,
            scale: CountScale::Raw,
        })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn ell(&self) -> usize {
        self.rows[0].len()
    }

    /// `𝒩_i^r` with 1-based indices.
    pub fn get(&self, i: usize, r: usize) -> f64 {
        self.rows[i - 1][r - 1]
    }

    pub fn scaled(&self, factor: f64) -> CountMatrix {
        CountMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x * factor).collect()).collect(),
            kind: self.kind,
            scale: self.scale,
        }
    }
}

/// The full `M_i^r` table for any ordered numeric type.
pub fn m_table<T>(rows: &[Vec<T>]) -> Vec<Vec<T>>
where
    T: Copy + PartialOrd + Sub<Output = T>,
{
    let mut out: Vec<Vec<T>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if i == 0 {
            out.push(row.clone());
            continue;
        }
        let prev = &out[i - 1];
        let mut cur = Vec::with_capacity(row.len());
        let mut running: Option<T> = None;
        for (r, &x) in row.iter().enumerate() {
            let cand = x - prev[r];
            running = Some(match running {
                Some(m) if m >= cand => m,
                _ => cand,
            });
            cur.push(x - running.unwrap());
        }
        out.push(cur);
    }
    out
}

/// `M(𝒩) = M_k^ℓ(𝒩)` for any ordered numeric type.
pub fn m_measure<T>(rows: &[Vec<T>]) -> Result<T>
where
    T: Copy + PartialOrd + Sub<Output = T>,
{
    if rows.is_empty() || rows[0].is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::InvalidInput("count matrix must be non-empty and rectangular".into()));
    }
    let table = m_table(rows);
    Ok(*table.last().unwrap().last().unwrap())
}

/// `M(𝒩)` of a count matrix.
pub fn compute_m(matrix: &CountMatrix) -> f64 {
    m_measure(matrix.rows()).expect("CountMatrix is non-empty and rectangular")
}

/// `𝒩̂_i^r = (n/s)·#{(j, t_j) ∈ S : j ≤ j_r, t_j = w_i}` in one pass over
/// the sample. Roles sharing a symbol share a histogram.
pub fn counts_from_sample(sample: &SampleSet, w: &Word, grid: &PrefixGrid) -> Result<CountMatrix> {
    if sample.is_empty() {
        return Err(Error::InvalidInput("empty sample".into()));
    }
    if grid.n() != sample.text_len() {
        return Err(Error::InvalidInput("grid does not end at n".into()));
    }
    let mut slot: HashMap<Symbol, usize> = HashMap::new();
    for &s in w.symbols() {
        let next = slot.len();
        slot.entry(s).or_insert(next);
    }
    let ell = grid.len();
    let mut hist = vec![vec![0u64; ell]; slot.len()];
    for e in sample.entries() {
        if let Some(&idx) = slot.get(&e.symbol) {
            hist[idx][grid.bucket_of(e.index) - 1] += e.multiplicity;
        }
    }
    for row in &mut hist {
        for r in 1..ell {
            row[r] += row[r - 1];
        }
    }
    let scale = sample.text_len() as f64 / sample.size() as f64;
    let rows = w
        .symbols()
        .iter()
        .map(|s| hist[slot[s]].iter().map(|&c| c as f64 * scale).collect())
        .collect();
    Ok(CountMatrix {
        rows,
        kind: CountKind::Estimated,
        scale: CountScale::Raw,
    })
}

/// Draws `s` uniform samples and estimates the count matrix on `grid`.
pub fn estimate_counts(
    oracle: &dyn SamplingOracle,
    w: &Word,
    grid: &PrefixGrid,
    s: u64,
    seed: u64,
) -> Result<CountMatrix> {
    if s == 0 {
        return Err(Error::InvalidInput("sample size must be positive".into()));
    }
    counts_from_sample(&oracle.draw(s, seed), w, grid)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformEstimate {
    /// `Δ̂` clamped to `[0, 1]`.
    pub delta_hat: f64,
    /// `M(𝒩̂)/n` before clamping.
    pub raw: f64,
    pub samples: u64,
    pub gamma: f64,
    pub ell: u64,
    pub grid_len: usize,
}

/// Estimates `Δ(T, w)` to within `δ` with probability ≥ 2/3.
/// For `δ ≥ 1` every value in `[0, 1]` qualifies and no sample is drawn.
pub fn estimate_uniform(oracle: &dyn SamplingOracle, w: &Word, delta: f64, seed: u64) -> Result<UniformEstimate> {
    let n = oracle.text_len();
    if n == 0 {
        return Err(Error::UndefinedDistance);
    }
    if delta >= 1.0 {
        return Ok(UniformEstimate {
            delta_hat: 0.0,
            raw: 0.0,
            samples: 0,
            gamma: 1.0,
            ell: 1,
            grid_len: 1,
        });
    }
    let params = sample_size_uniform(w.len(), delta)?;
    let grid = build_j(n, params.gamma)?;
    let counts = estimate_counts(oracle, w, &grid, params.samples, seed)?;
    let raw = compute_m(&counts) / n as f64;
    Ok(UniformEstimate {
        delta_hat: raw.clamp(0.0, 1.0),
        raw,
        samples: params.samples,
        gamma: params.gamma,
        ell: params.ell,
        grid_len: grid.len(),
    })
}
