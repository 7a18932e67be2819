//! Distance estimation under an arbitrary, unknown distribution.
//!
//! Two samples drive the estimator. `S1` cuts `[n]` into intervals `B`
//! of estimated weight about `1/z` (a heavy singleton when one index alone
//! exceeds `1/z`). `S2` estimates, for every role and every prefix `[b_u]`,
//! the weight of matching positions (`ξ̆`) and the prefix weight itself.
//!
//! For a general word the estimates are lifted onto the sentinel-interleaved
//! instance `(T', w')` through the interval map of [`run_alg1`], and the
//! output is `2·M(ξ̂)`. Words without equal neighbours skip the lift and
//! output `M(ξ̆)` directly.
//!
//! The exact helpers at the bottom ([`xi_exact`], [`xi_prime_exact`],
//! [`build_h`], [`check_e1`], [`check_e2`]) need `p` and exist for
//! diagnostics and tests only.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::alphabet::{Symbol, Text, Word};
use crate::distribution::{rational_to_f64, ExactDistribution, Rational};
use crate::error::{Error, Result};
use crate::exact::{quantize, reduce_to_wc, QuantizedDistribution};
use crate::numeric::ceil_snap_u64;
use crate::sample::{derive_seed, SampleSet, SamplingOracle};
use crate::uniform::m_measure;

/// Constants of the estimator: `z = c_z·k/δ`, `η = c_η/(nz)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub c_z: f64,
    pub c_eta: f64,
}

impl Constants {
    pub const C_Z: f64 = 100.0;
    pub const C_ETA: f64 = 1.0 / 16.0;

    pub fn standard() -> Self {
        Constants {
            c_z: Self::C_Z,
            c_eta: Self::C_ETA,
        }
    }

    /// Off-spec: `c_z` multiplied by `scale`. Smaller `z` means far fewer
    /// samples and no accuracy guarantee. For smoke runs only.
    pub fn relaxed(scale: f64) -> Result<Self> {
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::Config(format!("relaxed-constants scale {scale} must be positive")));
        }
        Ok(Constants {
            c_z: Self::C_Z * scale,
            ..Self::standard()
        })
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard()
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::standard()
    }
}

/// `z` and the two sample sizes. `s2` depends on `U`, known only after `S1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZParams {
    pub z: f64,
    pub c_eta: f64,
    pub s1: u64,
    pub s2: u64,
}

impl ZParams {
    /// `η = c_η/(nz)`.
    pub fn eta(&self, n: usize) -> f64 {
        self.c_eta / (n as f64 * self.z)
    }

    /// `η` as an exact rational `1/⌈nz/c_η⌉`, never above `c_η/(nz)`.
    pub fn eta_exact(&self, n: usize) -> Rational {
        Rational::new(1, ceil_snap_u64(n as f64 * self.z / self.c_eta) as i128)
    }
}

pub fn z_value(k: usize, delta: f64, constants: &Constants) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidInput(format!("delta = {delta} must lie in (0, 1)")));
    }
    Ok(constants.c_z * k as f64 / delta)
}

/// `s1 = ⌈120 z ln(240 z)⌉`.
pub fn s1_size(z: f64) -> u64 {
    ceil_snap_u64(120.0 * z * (240.0 * z).ln())
}

/// `s2 = ⌈z² ln(40 k U)⌉`.
pub fn s2_size(z: f64, k: usize, u: usize) -> u64 {
    ceil_snap_u64(z * z * (40.0 * k as f64 * u as f64).ln())
}

pub fn sample_sizes_df(k: usize, delta: f64, u: usize, constants: &Constants) -> Result<ZParams> {
    if u == 0 {
        return Err(Error::InvalidInput("U must be positive".into()));
    }
    let z = z_value(k, delta, constants)?;
    Ok(ZParams {
        z,
        c_eta: constants.c_eta,
        s1: s1_size(z),
        s2: s2_size(z, k, u),
    })
}

/// Intervals `B_u = [b_{u-1}+1, b_u]` with heavy flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    n: usize,
    bounds: Vec<usize>,
    heavy: Vec<bool>,
}

impl IntervalPartition {
    pub fn new(n: usize, bounds: Vec<usize>, heavy: Vec<bool>) -> Result<Self> {
        if bounds.is_empty() || bounds.len() != heavy.len() || *bounds.last().unwrap() != n {
            return Err(Error::InvalidInput("partition must be non-empty and end at n".into()));
        }
        let mut prev = 0;
        for (&b, &h) in bounds.iter().zip(&heavy) {
            if b <= prev || (h && b != prev + 1) {
                return Err(Error::InvalidInput("bounds must increase; heavy intervals are singletons".into()));
            }
            prev = b;
        }
        Ok(IntervalPartition { n, bounds, heavy })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `U`.
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// `b_1, …, b_U`.
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// `b_u` with `b_0 = 0`.
    pub fn b(&self, u: usize) -> usize {
        if u == 0 {
            0
        } else {
            self.bounds[u - 1]
        }
    }

    pub fn is_heavy(&self, u: usize) -> bool {
        self.heavy[u - 1]
    }

    pub fn heavy_flags(&self) -> &[bool] {
        &self.heavy
    }

    pub fn heavy_count(&self) -> usize {
        self.heavy.iter().filter(|&&h| h).count()
    }

    /// `[b_{u-1}+1, b_u]`.
    pub fn interval(&self, u: usize) -> (usize, usize) {
        (self.b(u - 1) + 1, self.b(u))
    }

    /// The `u` (1-based) whose interval holds position `j`.
    pub fn locate(&self, j: usize) -> usize {
        self.bounds.partition_point(|&b| b < j) + 1
    }
}

/// Cuts `[n]` from `S1`: a heavy singleton when `wt_S1(b+1) > 1/z`,
/// otherwise the longest interval with `wt_S1 ≤ 1/z`.
pub fn build_b(s1: &SampleSet, z: f64) -> Result<IntervalPartition> {
    if s1.is_empty() {
        return Err(Error::InvalidInput("S1 is empty".into()));
    }
    let n = s1.text_len();
    let s = s1.size() as f64;
    let prefix = s1.prefix_counts();
    // A count c is within the cap iff c / s ≤ 1/z.
    let within = |c: u64| c as f64 * z <= s;
    let mut bounds = Vec::new();
    let mut heavy = Vec::new();
    let mut b = 0usize;
    while b < n {
        if !within(prefix[b + 1] - prefix[b]) {
            b += 1;
            heavy.push(true);
        } else {
            let base = prefix[b];
            // Last j in [b+1, n] with prefix[j] - base within the cap.
            let end = b + 1 + prefix[b + 1..].partition_point(|&c| within(c - base)) - 1;
            b = end;
            heavy.push(false);
        }
        bounds.push(b);
    }
    IntervalPartition::new(n, bounds, heavy)
}

/// Per-role prefix estimates `ξ̆_i^u` (`k × U`) and prefix weights
/// `wt_S2([b_u])`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct XiEstimate {
    pub xi: Vec<Vec<f64>>,
    pub prefix_weights: Vec<f64>,
}

impl XiEstimate {
    pub fn k(&self) -> usize {
        self.xi.len()
    }

    pub fn u_len(&self) -> usize {
        self.prefix_weights.len()
    }
}

/// `ξ̆_i^u = (1/s2)·Σ_{j ≤ b_u} I_i^j·N_S2(j)` in one pass over `S2`.
pub fn estimate_xi(s2: &SampleSet, partition: &IntervalPartition, w: &Word) -> Result<XiEstimate> {
    if s2.is_empty() {
        return Err(Error::InvalidInput("S2 is empty".into()));
    }
    if s2.text_len() != partition.n() {
        return Err(Error::InvalidInput("sample and partition cover different n".into()));
    }
    let mut slot: HashMap<Symbol, usize> = HashMap::new();
    for &s in w.symbols() {
        let next = slot.len();
        slot.entry(s).or_insert(next);
    }
    let u_len = partition.len();
    let mut by_symbol = vec![vec![0u64; u_len]; slot.len()];
    let mut total = vec![0u64; u_len];
    for e in s2.entries() {
        let u = partition.locate(e.index) - 1;
        total[u] += e.multiplicity;
        if let Some(&idx) = slot.get(&e.symbol) {
            by_symbol[idx][u] += e.multiplicity;
        }
    }
    let size = s2.size() as f64;
    let cumulate = |row: &[u64]| {
        let mut acc = 0u64;
        row.iter()
            .map(|&c| {
                acc += c;
                acc as f64 / size
            })
            .collect::<Vec<f64>>()
    };
    let per_symbol: Vec<Vec<f64>> = by_symbol.iter().map(|r| cumulate(r)).collect();
    Ok(XiEstimate {
        xi: w.symbols().iter().map(|s| per_symbol[slot[s]].clone()).collect(),
        prefix_weights: cumulate(&total),
    })
}

/// Intervals of `[2n]` for the interleaved instance, and the map `f` back
/// to `[U]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeStructure {
    bounds: Vec<usize>,
    f: Vec<usize>,
}

impl PrimeStructure {
    /// `U'`.
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// `b'_1, …, b'_{U'}`.
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// `f(1), …, f(U')`, values 1-based.
    pub fn f(&self) -> &[usize] {
        &self.f
    }
}

/// A heavy `B_v` yields `b' = 2b_v - 1, 2b_v`; a light one yields `2b_v`.
pub fn run_alg1(partition: &IntervalPartition) -> PrimeStructure {
    let mut bounds = Vec::with_capacity(2 * partition.len());
    let mut f = Vec::with_capacity(2 * partition.len());
    for v in 1..=partition.len() {
        let b = partition.b(v);
        if partition.is_heavy(v) {
            bounds.extend([2 * b - 1, 2 * b]);
            f.extend([v, v]);
        } else {
            bounds.push(2 * b);
            f.push(v);
        }
    }
    PrimeStructure { bounds, f }
}

/// A `rows × U'` matrix of normalised prefix weights.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct XiMatrix {
    pub rows: Vec<Vec<f64>>,
}

impl XiMatrix {
    pub fn m(&self) -> f64 {
        m_measure(&self.rows).expect("XiMatrix is non-empty and rectangular")
    }

    /// `ξ̂_i^u` with 1-based indices.
    pub fn get(&self, i: usize, u: usize) -> f64 {
        self.rows[i - 1][u - 1]
    }
}

/// `ξ̂` on `(T', w')`. Odd `i` copies `½ξ̆` of role `(i+1)/2`; even `i`
/// (the sentinel) takes half the prefix weight, stopping one interval
/// short at the first half of a heavy pair. Parity of `b'_u` tells
/// whether `T'[b'_u]` is the sentinel, so the text is not needed.
pub fn assemble_xi_hat(xi: &XiEstimate, prime: &PrimeStructure, partition: &IntervalPartition) -> Result<XiMatrix> {
    let u_len = partition.len();
    if xi.u_len() != u_len || xi.xi.iter().any(|r| r.len() != u_len) {
        return Err(Error::InvalidInput("xi columns do not match the partition".into()));
    }
    if prime.f.iter().any(|&v| v == 0 || v > u_len) || prime.f.last() != Some(&u_len) {
        return Err(Error::InvalidInput("prime structure does not match the partition".into()));
    }
    let k = xi.k();
    let prefix = |v: usize| if v == 0 { 0.0 } else { xi.prefix_weights[v - 1] };
    let mut rows = vec![Vec::with_capacity(prime.len()); 2 * k];
    for (u, (&bp, &v)) in prime.bounds.iter().zip(&prime.f).enumerate() {
        let sentinel_end = bp % 2 == 0;
        let even_value = if partition.is_heavy(v) && !sentinel_end {
            debug_assert!(u == 0 || prime.f[u - 1] == v - 1);
            0.5 * prefix(v - 1)
        } else {
            0.5 * prefix(v)
        };
        for i in 0..k {
            rows[2 * i].push(0.5 * xi.xi[i][v - 1]);
            rows[2 * i + 1].push(even_value);
        }
    }
    Ok(XiMatrix { rows })
}

/// Everything the estimator computed on one run.
#[derive(Debug, Clone, Serialize)]
pub struct DfRun {
    pub params: ZParams,
    pub partition: IntervalPartition,
    pub xi: XiEstimate,
    pub prime: Option<PrimeStructure>,
    pub xi_hat: Option<XiMatrix>,
    pub estimate: DfEstimate,
    #[serde(skip)]
    pub s1: SampleSet,
    #[serde(skip)]
    pub s2: SampleSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DfEstimate {
    /// `Δ̂` clamped to `[0, 1]`.
    pub delta_hat: f64,
    /// Unclamped value.
    pub raw: f64,
    pub z: f64,
    pub s1: u64,
    pub s2: u64,
    pub samples: u64,
    pub intervals: usize,
    pub heavy_intervals: usize,
    /// `U'`; absent for the no-equal-neighbours path.
    pub prime_intervals: Option<usize>,
}

/// Seeds of the two samples drawn by one estimator run.
pub fn sample_seeds(seed: u64) -> (u64, u64) {
    (derive_seed(seed, 1), derive_seed(seed, 2))
}

/// Runs the pipeline on given samples. `lift` selects the general
/// (`2·M(ξ̂)`) or the no-equal-neighbours (`M(ξ̆)`) output.
pub fn df_from_samples(s1: &SampleSet, s2: &SampleSet, w: &Word, params: ZParams, lift: bool) -> Result<DfRun> {
    let partition = build_b(s1, params.z)?;
    let xi = estimate_xi(s2, &partition, w)?;
    let (raw, prime, xi_hat) = if lift {
        let prime = run_alg1(&partition);
        let xi_hat = assemble_xi_hat(&xi, &prime, &partition)?;
        (2.0 * xi_hat.m(), Some(prime), Some(xi_hat))
    } else {
        (m_measure(&xi.xi)?, None, None)
    };
    let estimate = DfEstimate {
        delta_hat: raw.clamp(0.0, 1.0),
        raw,
        z: params.z,
        s1: s1.size(),
        s2: s2.size(),
        samples: s1.size() + s2.size(),
        intervals: partition.len(),
        heavy_intervals: partition.heavy_count(),
        prime_intervals: prime.as_ref().map(PrimeStructure::len),
    };
    Ok(DfRun {
        params,
        partition,
        xi,
        prime,
        xi_hat,
        estimate,
        s1: s1.clone(),
        s2: s2.clone(),
    })
}

fn run_sampled(
    oracle: &dyn SamplingOracle,
    w: &Word,
    delta: f64,
    seed: u64,
    constants: &Constants,
    lift: bool,
) -> Result<DfRun> {
    if oracle.text_len() == 0 {
        return Err(Error::UndefinedDistance);
    }
    let z = z_value(w.len(), delta, constants)?;
    let (seed1, seed2) = sample_seeds(seed);
    let s1 = oracle.draw(s1_size(z), seed1);
    let partition = build_b(&s1, z)?;
    let params = sample_sizes_df(w.len(), delta, partition.len(), constants)?;
    let s2 = oracle.draw(params.s2, seed2);
    df_from_samples(&s1, &s2, w, params, lift)
}

/// Two-phase run: draw `S1`, build `B`, size and draw `S2`, then lift.
pub fn run_df(oracle: &dyn SamplingOracle, w: &Word, delta: f64, seed: u64, constants: &Constants) -> Result<DfRun> {
    run_sampled(oracle, w, delta, seed, constants, true)
}

/// Same pipeline without the lift; the word must have no equal neighbours.
pub fn run_df_special(
    oracle: &dyn SamplingOracle,
    w: &Word,
    delta: f64,
    seed: u64,
    constants: &Constants,
) -> Result<DfRun> {
    if !w.is_wc() {
        return Err(Error::Precondition("word has two equal consecutive symbols".into()));
    }
    run_sampled(oracle, w, delta, seed, constants, false)
}

/// Estimates `Δ(T, w, p)` to within `δ` with probability ≥ 2/3.
pub fn estimate_df(
    oracle: &dyn SamplingOracle,
    w: &Word,
    delta: f64,
    seed: u64,
    constants: &Constants,
) -> Result<DfEstimate> {
    run_df(oracle, w, delta, seed, constants).map(|r| r.estimate)
}

pub fn estimate_df_special(
    oracle: &dyn SamplingOracle,
    w: &Word,
    delta: f64,
    seed: u64,
    constants: &Constants,
) -> Result<DfEstimate> {
    run_df_special(oracle, w, delta, seed, constants).map(|r| r.estimate)
}

// ---- exact diagnostics -------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HClass {
    Sin,
    Med,
    Sml,
}

/// Reference intervals `H` built from the true `p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferencePartition {
    pub bounds: Vec<usize>,
    pub classes: Vec<HClass>,
    pub weights: Vec<f64>,
}

impl ReferencePartition {
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn interval(&self, l: usize) -> (usize, usize) {
        let lo = if l == 1 { 1 } else { self.bounds[l - 2] + 1 };
        (lo, self.bounds[l - 1])
    }
}

/// A singleton when `p_j > 1/(8z)`; otherwise the longest run whose
/// cumulative weight is `≤ 1/(4z)` and whose every entry is `≤ 1/(8z)`.
/// The run stops before an entry above `1/(8z)`. A singleton of weight
/// exactly `1/(8z)` is classed `Med`.
pub fn build_h(p: &ExactDistribution, z: f64) -> ReferencePartition {
    let n = p.len();
    let pf: Vec<f64> = p.weights().iter().map(rational_to_f64).collect();
    let mut prefix = vec![Rational::zero(); n + 1];
    for j in 0..n {
        prefix[j + 1] = prefix[j] + p.weights()[j];
    }
    let single_cap = 1.0 / (8.0 * z);
    let run_cap = 1.0 / (4.0 * z);
    let mut out = ReferencePartition {
        bounds: Vec::new(),
        classes: Vec::new(),
        weights: Vec::new(),
    };
    let mut h = 0;
    while h < n {
        let end = if pf[h] > single_cap {
            h + 1
        } else {
            let mut e = h + 1;
            while e < n && pf[e] <= single_cap && rational_to_f64(&(prefix[e + 1] - prefix[h])) <= run_cap {
                e += 1;
            }
            e
        };
        let wt = rational_to_f64(&(prefix[end] - prefix[h]));
        let class = if end == h + 1 && wt > single_cap {
            HClass::Sin
        } else if wt < single_cap {
            HClass::Sml
        } else {
            HClass::Med
        };
        out.bounds.push(end);
        out.classes.push(class);
        out.weights.push(wt);
        h = end;
    }
    out
}

/// `E1`: `S1` weighs every sin/med interval of `H` within a factor
/// `[½, 3/2]` of the truth, and every sml interval at most `1/(2z)`.
pub fn check_e1(p: &ExactDistribution, s1: &SampleSet, z: f64) -> Result<bool> {
    let h = build_h(p, z);
    for l in 1..=h.len() {
        let (lo, hi) = h.interval(l);
        let est = s1.weight(lo, hi)?;
        let wt = h.weights[l - 1];
        let ok = match h.classes[l - 1] {
            HClass::Sml => est <= 1.0 / (2.0 * z),
            _ => 0.5 * wt <= est && est <= 1.5 * wt,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact `ξ_i^u = Σ_{j ≤ b_u} I_i^j p_j` and `wt_p([b_u])`.
pub fn xi_exact(
    text: &Text,
    w: &Word,
    p: &ExactDistribution,
    partition: &IntervalPartition,
) -> Result<(Vec<Vec<Rational>>, Vec<Rational>)> {
    if text.len() != p.len() || text.len() != partition.n() {
        return Err(Error::InvalidInput("text, distribution and partition lengths differ".into()));
    }
    let mut xi = vec![Vec::with_capacity(partition.len()); w.len()];
    let mut prefix_w = Vec::with_capacity(partition.len());
    let mut acc_role = vec![Rational::zero(); w.len()];
    let mut acc = Rational::zero();
    let mut j = 0;
    for &b in partition.bounds() {
        while j < b {
            let pj = p.weights()[j];
            acc += pj;
            for (i, &s) in w.symbols().iter().enumerate() {
                if text.symbols()[j] == s {
                    acc_role[i] += pj;
                }
            }
            j += 1;
        }
        for i in 0..w.len() {
            xi[i].push(acc_role[i]);
        }
        prefix_w.push(acc);
    }
    Ok((xi, prefix_w))
}

/// `E2`: every `ξ̆` and every `wt_S2([b_u])` within `1/z` of the truth.
pub fn check_e2(
    text: &Text,
    w: &Word,
    p: &ExactDistribution,
    s2: &SampleSet,
    partition: &IntervalPartition,
    z: f64,
) -> Result<bool> {
    let est = estimate_xi(s2, partition, w)?;
    let (xi, prefix_w) = xi_exact(text, w, p, partition)?;
    let tol = 1.0 / z;
    let close = |a: f64, b: &Rational| (a - rational_to_f64(b)).abs() <= tol;
    let rows_ok = est.xi.iter().zip(&xi).all(|(e, x)| e.iter().zip(x).all(|(a, b)| close(*a, b)));
    let prefix_ok = est.prefix_weights.iter().zip(&prefix_w).all(|(a, b)| close(*a, b));
    Ok(rows_ok && prefix_ok)
}

/// Exact `ξ'_i^u = Σ_{j ≤ b'_u} I_i^j(T', w') q'_j` on the interleaved
/// instance built from `q` (the quantized distribution in the analysis).
/// Equals `ξ̃`, the normalised prefix counts of its uniform splitting.
pub fn xi_prime_exact(
    text: &Text,
    w: &Word,
    q: &ExactDistribution,
    prime: &PrimeStructure,
) -> Result<Vec<Vec<Rational>>> {
    let (t2, w2, q2) = reduce_to_wc(text, w, q)?;
    let mut rows = vec![Vec::with_capacity(prime.len()); w2.len()];
    let mut acc = vec![Rational::zero(); w2.len()];
    let mut j = 0;
    for &b in prime.bounds() {
        while j < b {
            for (i, &s) in w2.symbols().iter().enumerate() {
                if t2.symbols()[j] == s {
                    acc[i] += q2.weights()[j];
                }
            }
            j += 1;
        }
        for i in 0..w2.len() {
            rows[i].push(acc[i]);
        }
    }
    Ok(rows)
}

/// Outcome of one instrumented estimator run against a known `p`.
#[derive(Debug, Clone, Serialize)]
pub struct EventReport {
    pub e1: bool,
    pub e2: bool,
    /// Every light interval has `wt_p < 6/z`.
    pub light_bound: bool,
    /// `max |ξ̂ − ξ̃|` over all entries.
    pub xi_hat_error: f64,
    /// `c_η/z + 1/(2z)`.
    pub xi_hat_tolerance: f64,
    pub l1_quantization: f64,
    pub estimate: DfEstimate,
}

impl EventReport {
    pub fn xi_hat_bound(&self) -> bool {
        self.xi_hat_error <= self.xi_hat_tolerance
    }
}

/// Runs the general estimator and evaluates both events and both
/// conditional bounds against the exact quantities.
pub fn diagnose_events(
    oracle: &dyn SamplingOracle,
    text: &Text,
    w: &Word,
    p: &ExactDistribution,
    delta: f64,
    seed: u64,
    constants: &Constants,
) -> Result<EventReport> {
    let run = run_df(oracle, w, delta, seed, constants)?;
    let z = run.params.z;
    let e1 = check_e1(p, &run.s1, z)?;
    let e2 = check_e2(text, w, p, &run.s2, &run.partition, z)?;
    let light_bound = (1..=run.partition.len()).filter(|&u| !run.partition.is_heavy(u)).all(|u| {
        let (lo, hi) = run.partition.interval(u);
        p.weight(lo, hi).map(|x| rational_to_f64(&x) < 6.0 / z).unwrap_or(false)
    });
    let QuantizedDistribution { quantized, l1, .. } = quantize(p, run.params.eta_exact(text.len()))?;
    let prime = run.prime.as_ref().expect("general run lifts");
    let xi_hat = run.xi_hat.as_ref().expect("general run lifts");
    let tilde = xi_prime_exact(text, w, &quantized, prime)?;
    let xi_hat_error = xi_hat
        .rows
        .iter()
        .zip(&tilde)
        .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - rational_to_f64(y)).abs()))
        .fold(0.0, f64::max);
    Ok(EventReport {
        e1,
        e2,
        light_bound,
        xi_hat_error,
        xi_hat_tolerance: constants.c_eta / z + 1.0 / (2.0 * z),
        l1_quantization: rational_to_f64(&l1),
        estimate: run.estimate,
    })
}
