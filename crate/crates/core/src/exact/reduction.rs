//! Splitting, quantisation and the sentinel interleaving that together turn
//! a weighted distance into a uniform one.

use num_traits::Zero;

use crate::alphabet::{Symbol, Text, Word};
use crate::distribution::{drop_zero_weight, ExactDistribution, Rational};
use crate::error::{Error, Result};
use crate::exact::greedy::copy_count;

/// Largest expanded text the oracles will materialise.
pub const MAX_SPLIT_LEN: i128 = 10_000_000;

/// `T̃ = t_1^{α_1} … t_n^{α_n}` with its origin map `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    source: Text,
    multiplicities: Vec<u64>,
    /// `ends[j] = α_1 + … + α_j`, `ends[0] = 0`.
    ends: Vec<u64>,
    expanded: Text,
}

impl Splitting {
    /// Splits `text` with positive multiplicities.
    pub fn new(text: &Text, multiplicities: Vec<u64>) -> Result<Self> {
        if multiplicities.len() != text.len() {
            return Err(Error::InvalidInput("one multiplicity per position required".into()));
        }
        if multiplicities.contains(&0) {
            return Err(Error::InvalidInput("multiplicities must be positive".into()));
        }
        let total: u64 = multiplicities.iter().sum();
        if total as i128 > MAX_SPLIT_LEN {
            return Err(Error::SizeLimit(format!("splitting of length {total} exceeds {MAX_SPLIT_LEN}")));
        }
        let mut ends = Vec::with_capacity(text.len() + 1);
        ends.push(0);
        let mut expanded = Vec::with_capacity(total as usize);
        for (s, &a) in text.symbols().iter().zip(&multiplicities) {
            expanded.extend(std::iter::repeat_n(*s, a as usize));
            ends.push(ends.last().unwrap() + a);
        }
        Ok(Splitting {
            source: text.clone(),
            multiplicities,
            ends,
            expanded: Text::from_symbols_unchecked(expanded),
        })
    }

    pub fn source(&self) -> &Text {
        &self.source
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn expanded(&self) -> &Text {
        &self.expanded
    }

    /// `ñ = Σ α_j`.
    pub fn len(&self) -> usize {
        self.expanded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expanded.is_empty()
    }

    /// `φ(h)` for 1-based `h ∈ [ñ]`.
    pub fn origin(&self, h: usize) -> usize {
        assert!(h >= 1 && h <= self.len(), "position {h} outside the splitting");
        self.ends.partition_point(|&e| (e as usize) < h)
    }

    /// `max { h : φ(h) = j }`, and 0 for `j = 0`.
    pub fn last_preimage(&self, j: usize) -> usize {
        self.ends[j] as usize
    }

    /// The uniform distribution `p̃` over the expanded text.
    pub fn uniform_weight(&self) -> Rational {
        Rational::new(1, self.len() as i128)
    }
}

/// Splits `(T, p)` with unit `β`: `α_j = p_j / β`, `p̃` uniform over
/// `ñ = 1/β` positions.
pub fn build_splitting(text: &Text, p: &ExactDistribution, beta: Rational) -> Result<Splitting> {
    if text.len() != p.len() {
        return Err(Error::InvalidInput("text and distribution lengths differ".into()));
    }
    if beta <= Rational::zero() {
        return Err(Error::InvalidBeta(format!("beta = {beta} must be positive")));
    }
    let multiplicities = p
        .weights()
        .iter()
        .enumerate()
        .map(|(idx, &pj)| {
            let a = pj / beta;
            if !a.is_integer() || a <= Rational::zero() {
                Err(Error::InvalidBeta(format!("p_{} / beta = {a} is not a positive integer", idx + 1)))
            } else {
                u64::try_from(a.to_integer()).map_err(|_| Error::SizeLimit("multiplicity too large".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Splitting::new(text, multiplicities)
}

/// `p` rounded up to the `η` grid (`p̈`) and renormalised (`ṗ = ζ p̈`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantizedDistribution {
    pub eta: Rational,
    /// `⌈p_j / η⌉`.
    pub multiples: Vec<u64>,
    /// `p̈_j = ⌈p_j / η⌉ η`.
    pub rounded: Vec<Rational>,
    /// `ζ = 1 / Σ p̈_j`.
    pub zeta: Rational,
    /// `ṗ = ζ p̈`.
    pub quantized: ExactDistribution,
    /// `L1(p, ṗ)`.
    pub l1: Rational,
}

pub fn quantize(p: &ExactDistribution, eta: Rational) -> Result<QuantizedDistribution> {
    if eta <= Rational::zero() {
        return Err(Error::InvalidInput(format!("eta = {eta} must be positive")));
    }
    let multiples_r: Vec<Rational> = p.weights().iter().map(|&pj| (pj / eta).ceil()).collect();
    let multiples = multiples_r
        .iter()
        .map(|m| u64::try_from(m.to_integer()).map_err(|_| Error::SizeLimit("grid multiple too large".into())))
        .collect::<Result<Vec<_>>>()?;
    let rounded: Vec<Rational> = multiples_r.iter().map(|m| m * eta).collect();
    let total: Rational = rounded.iter().copied().sum();
    let zeta = total.recip();
    let quantized = ExactDistribution::new(rounded.iter().map(|r| r * zeta).collect())?;
    let l1 = p.l1(&quantized);
    Ok(QuantizedDistribution {
        eta,
        multiples,
        rounded,
        zeta,
        quantized,
        l1,
    })
}

/// Interleaves the sentinel after every symbol:
/// `w' = w_1 0 … w_k 0`, `T' = t_1 0 … t_n 0`, `q'_{2j-1} = q'_{2j} = q_j / 2`.
pub fn reduce_to_wc(text: &Text, w: &Word, q: &ExactDistribution) -> Result<(Text, Word, ExactDistribution)> {
    if text.len() != q.len() {
        return Err(Error::InvalidInput("text and distribution lengths differ".into()));
    }
    if text.symbols().iter().chain(w.symbols()).any(|s| s.is_sentinel()) {
        return Err(Error::Precondition("sentinel already present".into()));
    }
    let interleave = |s: &[Symbol]| s.iter().flat_map(|&x| [x, Symbol::SENTINEL]).collect::<Vec<_>>();
    let half = Rational::new(1, 2);
    let q2 = q.weights().iter().flat_map(|&x| [x * half, x * half]).collect();
    Ok((
        Text::from_symbols_unchecked(interleave(text.symbols())),
        Word::from_symbols_unchecked(interleave(w.symbols())),
        ExactDistribution::from_weights_unchecked(q2),
    ))
}

/// `Δ(T, w)` under the uniform distribution: `R(T, w) / n`.
pub fn uniform_distance(text: &Text, w: &Word) -> Result<Rational> {
    if text.is_empty() {
        return Err(Error::UndefinedDistance);
    }
    Ok(Rational::new(copy_count(text, w) as i128, text.len() as i128))
}

/// Exact `Δ(T, w, p)` for rational `p`: interleave the sentinel, split with
/// unit `1/(2D)` and count copies of `w'` in the expanded text; the result
/// is `2 R(T̃', w') / ñ`.
pub fn exact_weighted_distance(text: &Text, w: &Word, p: &ExactDistribution) -> Result<Rational> {
    if text.is_empty() {
        return Err(Error::UndefinedDistance);
    }
    let (t, p, _) = drop_zero_weight(text, p)?;
    let d = p.common_denominator();
    if 2 * d > MAX_SPLIT_LEN {
        return Err(Error::SizeLimit(format!(
            "common denominator {d} needs a splitting of length {} > {MAX_SPLIT_LEN}",
            2 * d
        )));
    }
    let (t_prime, w_prime, p_prime) = reduce_to_wc(&t, w, &p)?;
    let split = build_splitting(&t_prime, &p_prime, Rational::new(1, 2 * d))?;
    let r = copy_count(split.expanded(), &w_prime);
    Ok(Rational::new(2 * r as i128, split.len() as i128))
}

/// Exact `Δ(T̃, w)` of a splitting, for words with no equal neighbours.
pub fn split_distance(split: &Splitting, w: &Word) -> Result<Rational> {
    uniform_distance(split.expanded(), w)
}

/// Splitting unit `β` making every `p_j / β` integral: `1 / D`.
pub fn natural_beta(p: &ExactDistribution) -> Rational {
    Rational::new(1, p.common_denominator())
}
