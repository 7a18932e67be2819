//! Samples and sampling oracles.
//!
//! Estimators see the text only through a [`SampleSet`]: a multiset of
//! `(j, t_j)` pairs drawn with repetition. Sample sets are stored as
//! `(index, symbol, multiplicity)` entries sorted by index, which keeps
//! multi-million draw samples small.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::alphabet::{Symbol, Text};
use crate::distribution::{Distribution, ExactDistribution};
use crate::error::{Error, Result};

/// The generator behind every oracle: xoshiro256++ seeded through
/// SplitMix64 from a 64-bit seed.
pub type SampleRng = Xoshiro256PlusPlus;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

/// SplitMix64 finaliser; used to derive independent sub-seeds.
pub fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Sub-seed for an independent stream `stream` under `seed`.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    mix64(seed ^ mix64(stream.wrapping_add(0x5EED)))
}

/// A single draw `(j, t_j)`, `j` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SamplePair {
    pub index: usize,
    pub symbol: Symbol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SampleEntry {
    pub index: usize,
    pub symbol: Symbol,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SampleSet {
    n: usize,
    entries: Vec<SampleEntry>,
    size: u64,
}

impl SampleSet {
    pub fn empty(n: usize) -> Self {
        SampleSet {
            n,
            entries: Vec::new(),
            size: 0,
        }
    }

    /// Builds a sample set from explicit draws, checking each pair against
    /// the text.
    pub fn from_pairs(text: &Text, pairs: &[SamplePair]) -> Result<Self> {
        let mut counts = vec![0u64; text.len()];
        for p in pairs {
            if p.index < 1 || p.index > text.len() {
                return Err(Error::Range(format!("sample index {} not in [1,{}]", p.index, text.len())));
            }
            if text.at(p.index) != p.symbol {
                return Err(Error::InvalidInput(format!("sample symbol mismatch at {}", p.index)));
            }
            counts[p.index - 1] += 1;
        }
        Ok(Self::from_counts(text, &counts))
    }

    /// Sample set holding every index of `indices` once per occurrence.
    pub fn from_indices(text: &Text, indices: &[usize]) -> Result<Self> {
        let pairs: Vec<SamplePair> = indices
            .iter()
            .map(|&j| {
                if j < 1 || j > text.len() {
                    Err(Error::Range(format!("sample index {j} not in [1,{}]", text.len())))
                } else {
                    Ok(SamplePair {
                        index: j,
                        symbol: text.at(j),
                    })
                }
            })
            .collect::<Result<_>>()?;
        Self::from_pairs(text, &pairs)
    }

    /// Dense per-position multiplicities, 0-based.
    pub fn from_counts(text: &Text, counts: &[u64]) -> Self {
        debug_assert_eq!(counts.len(), text.len());
        let entries: Vec<SampleEntry> = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| SampleEntry {
                index: i + 1,
                symbol: text.at(i + 1),
                multiplicity: c,
            })
            .collect();
        let size = entries.iter().map(|e| e.multiplicity).sum();
        SampleSet {
            n: text.len(),
            entries,
            size,
        }
    }

    /// The census of an exact distribution: index `j` appears `D·p_j` times,
    /// so `wt_S = wt_p` exactly.
    pub fn census(text: &Text, p: &ExactDistribution) -> Result<Self> {
        if text.len() != p.len() {
            return Err(Error::InvalidInput("text and distribution lengths differ".into()));
        }
        let (nums, _) = p.numerators();
        let counts: Vec<u64> = nums
            .iter()
            .map(|&m| u64::try_from(m).map_err(|_| Error::SizeLimit("census too large".into())))
            .collect::<Result<_>>()?;
        Ok(Self::from_counts(text, &counts))
    }

    /// Length of the underlying text.
    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Number of draws `s`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn entries(&self) -> &[SampleEntry] {
        &self.entries
    }

    /// Every draw, with repetitions, in index order.
    pub fn pairs(&self) -> impl Iterator<Item = SamplePair> + '_ {
        self.entries.iter().flat_map(|e| {
            std::iter::repeat_n(SamplePair {
                index: e.index,
                symbol: e.symbol,
            }, e.multiplicity as usize)
        })
    }

    /// `N_S(j)`.
    pub fn count(&self, j: usize) -> u64 {
        match self.entries.binary_search_by_key(&j, |e| e.index) {
            Ok(pos) => self.entries[pos].multiplicity,
            Err(_) => 0,
        }
    }

    /// `wt_S([j1, j2]) = (1/s) Σ_{j=j1}^{j2} N_S(j)`.
    pub fn weight(&self, j1: usize, j2: usize) -> Result<f64> {
        if self.is_empty() {
            return Err(Error::InvalidInput("empty sample".into()));
        }
        if j1 < 1 || j1 > j2 || j2 > self.n {
            return Err(Error::Range(format!("interval [{j1},{j2}] not within [1,{}]", self.n)));
        }
        let lo = self.entries.partition_point(|e| e.index < j1);
        let hi = self.entries.partition_point(|e| e.index <= j2);
        let hits: u64 = self.entries[lo..hi].iter().map(|e| e.multiplicity).sum();
        Ok(hits as f64 / self.size as f64)
    }

    /// Cumulative counts: `out[j] = Σ_{j' ≤ j} N_S(j')`, `out[0] = 0`.
    pub fn prefix_counts(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n + 1];
        for e in &self.entries {
            out[e.index] += e.multiplicity;
        }
        for j in 1..=self.n {
            out[j] += out[j - 1];
        }
        out
    }
}

/// Sample-only access to a text.
pub trait SamplingOracle {
    /// Length `n` of the hidden text.
    fn text_len(&self) -> usize;

    /// `s` independent draws; identical `(s, seed)` give identical samples.
    fn draw(&self, s: u64, seed: u64) -> SampleSet;
}

/// Draws indices uniformly from `[n]`.
#[derive(Debug, Clone, Copy)]
pub struct UniformOracle<'a> {
    text: &'a Text,
}

impl<'a> UniformOracle<'a> {
    pub fn new(text: &'a Text) -> Self {
        UniformOracle { text }
    }
}

impl SamplingOracle for UniformOracle<'_> {
    fn text_len(&self) -> usize {
        self.text.len()
    }

    fn draw(&self, s: u64, seed: u64) -> SampleSet {
        let n = self.text.len();
        if s == 0 || n == 0 {
            return SampleSet::empty(n);
        }
        let mut rng = rng_from_seed(seed);
        let mut counts = vec![0u64; n];
        for _ in 0..s {
            counts[rng.gen_range(0..n)] += 1;
        }
        SampleSet::from_counts(self.text, &counts)
    }
}

/// Draws indices according to `p` by inverse-CDF lookup. A guide table of
/// `n` buckets over `[0, 1)` points each bucket at its first candidate
/// index, so a draw costs O(1) expected comparisons.
#[derive(Debug, Clone)]
pub struct WeightedOracle<'a> {
    text: &'a Text,
    cdf: Vec<f64>,
    guide: Vec<u32>,
}

impl<'a> WeightedOracle<'a> {
    pub fn new(text: &'a Text, p: &Distribution) -> Result<Self> {
        let n = text.len();
        if p.len() != n {
            return Err(Error::InvalidInput(format!(
                "text has {n} positions but distribution has {}",
                p.len()
            )));
        }
        if n == 0 {
            return Err(Error::InvalidInput("empty text".into()));
        }
        let mut cdf = Vec::with_capacity(n);
        let mut acc = 0.0;
        for &w in p.weights() {
            acc += w;
            cdf.push(acc);
        }
        // Trailing zero-weight positions keep their (possibly < 1) value so
        // they are never selected; the last positive position absorbs the
        // rounding slack.
        let last_pos = p.weights().iter().rposition(|&w| w > 0.0).unwrap_or(n - 1);
        for c in cdf.iter_mut().skip(last_pos) {
            *c = 1.0;
        }
        let mut guide = Vec::with_capacity(n);
        let mut i = 0usize;
        for b in 0..n {
            let threshold = b as f64 / n as f64;
            while i + 1 < n && cdf[i] <= threshold {
                i += 1;
            }
            guide.push(i as u32);
        }
        Ok(WeightedOracle { text, cdf, guide })
    }

    pub fn from_exact(text: &'a Text, p: &ExactDistribution) -> Result<Self> {
        Self::new(text, &p.to_float())
    }

    #[inline]
    fn lookup(&self, u: f64) -> usize {
        let n = self.cdf.len();
        let b = ((u * n as f64) as usize).min(n - 1);
        let mut i = self.guide[b] as usize;
        while self.cdf[i] <= u && i + 1 < n {
            i += 1;
        }
        i
    }
}

impl SamplingOracle for WeightedOracle<'_> {
    fn text_len(&self) -> usize {
        self.text.len()
    }

    fn draw(&self, s: u64, seed: u64) -> SampleSet {
        let n = self.text.len();
        if s == 0 {
            return SampleSet::empty(n);
        }
        let mut rng = rng_from_seed(seed);
        let mut counts = vec![0u64; n];
        for _ in 0..s {
            let u: f64 = rng.gen();
            counts[self.lookup(u)] += 1;
        }
        SampleSet::from_counts(self.text, &counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(ids: &[u32]) -> Text {
        Text::from_ids(ids).unwrap()
    }

    #[test]
    fn wt_s_hand_counts() {
        let t = text(&[1, 2, 1, 2]);
        let s = SampleSet::from_indices(&t, &[1, 1, 2, 3, 4, 4, 4, 4]).unwrap();
        assert_eq!(s.size(), 8);
        assert_eq!(s.weight(1, 3).unwrap(), 0.5);
        assert_eq!(s.weight(1, 4).unwrap(), 1.0);
        let s2 = SampleSet::from_indices(&t, &[2, 2, 2, 2]).unwrap();
        assert_eq!(s2.weight(2, 2).unwrap(), 1.0);
        assert_eq!(s2.count(2), 4);
        assert_eq!(s2.count(3), 0);
    }

    #[test]
    fn wt_s_errors() {
        let t = text(&[1, 2]);
        assert!(matches!(SampleSet::empty(2).weight(1, 2), Err(Error::InvalidInput(_))));
        let s = SampleSet::from_indices(&t, &[1]).unwrap();
        assert!(matches!(s.weight(1, 3), Err(Error::Range(_))));
        let bad = SamplePair {
            index: 1,
            symbol: Symbol(2),
        };
        assert!(SampleSet::from_pairs(&t, &[bad]).is_err());
    }

    #[test]
    fn zero_draws_is_empty() {
        let t = text(&[1, 2, 3]);
        assert!(UniformOracle::new(&t).draw(0, 7).is_empty());
        let w = WeightedOracle::new(&t, &Distribution::uniform(3)).unwrap();
        assert!(w.draw(0, 7).is_empty());
    }

    #[test]
    fn single_support_point() {
        let t = text(&[5]);
        let s = UniformOracle::new(&t).draw(5, 1);
        let pairs: Vec<_> = s.pairs().collect();
        assert_eq!(pairs, vec![SamplePair { index: 1, symbol: Symbol(5) }; 5]);
    }

    #[test]
    fn draws_are_deterministic() {
        let t = text(&[1, 2, 3, 1, 2, 3, 1]);
        let o = UniformOracle::new(&t);
        assert_eq!(o.draw(1000, 42), o.draw(1000, 42));
        assert_ne!(o.draw(1000, 42), o.draw(1000, 43));
        let p = Distribution::new(vec![0.1, 0.2, 0.3, 0.05, 0.05, 0.2, 0.1]).unwrap();
        let w = WeightedOracle::new(&t, &p).unwrap();
        assert_eq!(w.draw(1000, 9), w.draw(1000, 9));
    }

    #[test]
    fn weighted_oracle_skips_zero_weight() {
        let t = text(&[1, 2, 3, 4]);
        let p = Distribution::new(vec![0.0, 0.5, 0.0, 0.5]).unwrap();
        let s = WeightedOracle::new(&t, &p).unwrap().draw(10_000, 3);
        assert_eq!(s.count(1), 0);
        assert_eq!(s.count(3), 0);
        assert_eq!(s.count(2) + s.count(4), 10_000);
    }

    #[test]
    fn weighted_oracle_matches_weights() {
        let t = text(&[1, 2, 3]);
        let p = Distribution::new(vec![0.1, 0.6, 0.3]).unwrap();
        let s = WeightedOracle::new(&t, &p).unwrap().draw(200_000, 11);
        for j in 1..=3 {
            assert!((s.weight(j, j).unwrap() - p.at(j)).abs() < 0.01);
        }
    }

    #[test]
    fn census_reproduces_weights() {
        use crate::distribution::Rational;
        let t = text(&[1, 2]);
        let p = ExactDistribution::new(vec![Rational::new(1, 4), Rational::new(3, 4)]).unwrap();
        let s = SampleSet::census(&t, &p).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.weight(1, 1).unwrap(), 0.25);
        assert_eq!(s.prefix_counts(), vec![0, 1, 4]);
    }

    #[test]
    fn sample_is_a_probability_measure() {
        let t = text(&[1, 2, 3, 4, 5, 6]);
        let s = UniformOracle::new(&t).draw(97, 5);
        let parts = [s.weight(1, 2).unwrap(), s.weight(3, 3).unwrap(), s.weight(4, 6).unwrap()];
        assert!((parts.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((s.weight(1, 6).unwrap() - 1.0).abs() < 1e-12);
    }
}
