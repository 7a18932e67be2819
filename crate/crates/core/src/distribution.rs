//! Weight vectors over text positions.
//!
//! Two representations: [`ExactDistribution`] holds rationals and backs the
//! oracles; [`Distribution`] holds `f64` and backs sampling and estimators.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::alphabet::Text;
use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Tolerance on the total mass of a float distribution.
pub const FLOAT_MASS_TOL: f64 = 1e-9;
/// Tolerance on the total mass of a distribution file before normalisation.
pub const FILE_MASS_TOL: f64 = 1e-6;

fn check_interval(n: usize, j1: usize, j2: usize) -> Result<()> {
    if j1 < 1 || j1 > j2 || j2 > n {
        return Err(Error::Range(format!("interval [{j1},{j2}] not within [1,{n}]")));
    }
    Ok(())
}

/// A distribution with exact rational weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    weights: Vec<Rational>,
}

impl ExactDistribution {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidInput("negative weight".into()));
        }
        let total: Rational = weights.iter().copied().sum();
        if !weights.is_empty() && total != Rational::one() {
            return Err(Error::InvalidInput(format!("weights sum to {total}, not 1")));
        }
        Ok(ExactDistribution { weights })
    }

    /// Weights `numerators[j] / denominator`.
    pub fn from_numerators(numerators: &[u64], denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let d = denominator as i128;
        Self::new(numerators.iter().map(|&m| Rational::new(m as i128, d)).collect())
    }

    pub(crate) fn from_weights_unchecked(weights: Vec<Rational>) -> Self {
        ExactDistribution { weights }
    }

    pub fn uniform(n: usize) -> Self {
        ExactDistribution {
            weights: vec![Rational::new(1, n as i128); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `p_j` for 1-based `j`.
    pub fn at(&self, j: usize) -> Rational {
        self.weights[j - 1]
    }

    /// `wt_p([j1, j2])`.
    pub fn weight(&self, j1: usize, j2: usize) -> Result<Rational> {
        check_interval(self.len(), j1, j2)?;
        Ok(self.weights[j1 - 1..j2].iter().copied().sum())
    }

    /// Least common denominator `D` of all weights.
    pub fn common_denominator(&self) -> i128 {
        self.weights.iter().fold(1i128, |acc, w| acc.lcm(w.denom()))
    }

    /// Integer numerators over the common denominator.
    pub fn numerators(&self) -> (Vec<i128>, i128) {
        let d = self.common_denominator();
        let nums = self.weights.iter().map(|w| w.numer() * (d / w.denom())).collect();
        (nums, d)
    }

    pub fn to_float(&self) -> Distribution {
        Distribution {
            weights: self.weights.iter().map(rational_to_f64).collect(),
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.weights.windows(2).all(|p| p[0] == p[1])
    }

    /// L1 distance to another exact distribution of the same length.
    pub fn l1(&self, other: &ExactDistribution) -> Rational {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).abs())
            .sum()
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// A distribution with `f64` weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    weights: Vec<f64>,
}

impl Distribution {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidInput("weights must be finite and non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if !weights.is_empty() && (total - 1.0).abs() > FLOAT_MASS_TOL {
            return Err(Error::InvalidInput(format!("weights sum to {total}, not 1")));
        }
        Ok(Distribution { weights })
    }

    pub fn uniform(n: usize) -> Self {
        Distribution {
            weights: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn at(&self, j: usize) -> f64 {
        self.weights[j - 1]
    }

    /// `wt_p([j1, j2])`.
    pub fn weight(&self, j1: usize, j2: usize) -> Result<f64> {
        check_interval(self.len(), j1, j2)?;
        Ok(self.weights[j1 - 1..j2].iter().sum())
    }
}

fn parse_weight(token: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad weight {token:?}"));
    if let Some((a, b)) = token.split_once('/') {
        let a: i128 = a.trim().parse().map_err(|_| bad())?;
        let b: i128 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    if token.contains(['e', 'E']) {
        let f: f64 = token.parse().map_err(|_| bad())?;
        return Rational::approximate_float(f).ok_or_else(bad);
    }
    let (int, frac) = token.split_once('.').unwrap_or((token, ""));
    if frac.len() > 30 || !frac.bytes().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let int: i128 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let scale = 10i128.pow(frac.len() as u32);
    let frac: i128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    Ok(Rational::new(int * scale + frac, scale))
}

/// Parses a distribution file: one weight per line, decimal or `a/b`.
/// Weights are normalised when their sum is within [`FILE_MASS_TOL`] of 1.
pub fn parse_distribution(src: &str) -> Result<ExactDistribution> {
    let weights = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_weight)
        .collect::<Result<Vec<_>>>()?;
    if weights.iter().any(|w| w.is_negative()) {
        return Err(Error::InvalidInput("negative weight".into()));
    }
    let total: Rational = weights.iter().copied().sum();
    if (rational_to_f64(&total) - 1.0).abs() > FILE_MASS_TOL || total.is_zero() {
        return Err(Error::InvalidInput(format!(
            "weights sum to {}, outside tolerance {FILE_MASS_TOL}",
            rational_to_f64(&total)
        )));
    }
    ExactDistribution::new(weights.into_iter().map(|w| w / total).collect())
}

/// Removes zero-weight positions. Returns the reduced text, the reduced
/// distribution and the 1-based original index of every kept position.
pub fn drop_zero_weight(text: &Text, p: &ExactDistribution) -> Result<(Text, ExactDistribution, Vec<usize>)> {
    if text.len() != p.len() {
        return Err(Error::InvalidInput(format!(
            "text has {} positions but distribution has {}",
            text.len(),
            p.len()
        )));
    }
    let kept: Vec<usize> = (1..=text.len()).filter(|&j| !p.at(j).is_zero()).collect();
    let t = Text::from_symbols_unchecked(kept.iter().map(|&j| text.at(j)).collect());
    let q = ExactDistribution::from_weights_unchecked(kept.iter().map(|&j| p.at(j)).collect());
    Ok((t, q, kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i128, b: i128) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Distribution::uniform(4).weight(2, 3).unwrap(), 0.5);
        let p = Distribution::new(vec![0.25, 0.75]).unwrap();
        assert_eq!(p.weight(1, 1).unwrap(), 0.25);
        let q = Distribution::new(vec![0.3, 0.7]).unwrap();
        assert!((q.weight(1, 2).unwrap() - 1.0).abs() < 1e-15);
        let e = ExactDistribution::uniform(7);
        assert_eq!(e.weight(1, 7).unwrap(), Rational::one());
    }

    #[test]
    fn weight_range_errors() {
        let p = ExactDistribution::uniform(3);
        assert!(matches!(p.weight(0, 1), Err(Error::Range(_))));
        assert!(matches!(p.weight(2, 1), Err(Error::Range(_))));
        assert!(matches!(p.weight(1, 4), Err(Error::Range(_))));
    }

    #[test]
    fn rejects_bad_mass() {
        assert!(ExactDistribution::new(vec![r(1, 2), r(1, 3)]).is_err());
        assert!(ExactDistribution::new(vec![r(3, 2), r(-1, 2)]).is_err());
        assert!(Distribution::new(vec![0.5, 0.49]).is_err());
    }

    #[test]
    fn parse_mixed_formats() {
        let p = parse_distribution("1/4\n0.5\n\n0.25\n").unwrap();
        assert_eq!(p.weights(), &[r(1, 4), r(1, 2), r(1, 4)]);
        // normalised within tolerance
        let q = parse_distribution("0.5000001\n0.5\n").unwrap();
        assert_eq!(q.weight(1, 2).unwrap(), Rational::one());
        assert!(parse_distribution("0.6\n0.6\n").is_err());
        assert!(parse_distribution("abc\n").is_err());
        assert!(parse_distribution("1/0\n").is_err());
    }

    #[test]
    fn common_denominator_and_numerators() {
        let p = ExactDistribution::new(vec![r(1, 4), r(1, 6), r(7, 12)]).unwrap();
        let (nums, d) = p.numerators();
        assert_eq!(d, 12);
        assert_eq!(nums, vec![3, 2, 7]);
    }

    #[test]
    fn zero_weight_positions_dropped() {
        let t = Text::from_ids(&[1, 2, 3]).unwrap();
        let p = ExactDistribution::new(vec![r(1, 2), r(0, 1), r(1, 2)]).unwrap();
        let (t2, p2, kept) = drop_zero_weight(&t, &p).unwrap();
        assert_eq!(kept, vec![1, 3]);
        assert_eq!(t2, Text::from_ids(&[1, 3]).unwrap());
        assert_eq!(p2.weights(), &[r(1, 2), r(1, 2)]);
    }
}
