use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Text, Word};
use crate::distribution::{ExactDistribution, Rational};
use crate::error::{Error, Result};
use crate::exact::{exact_weighted_distance, uniform_distance};
use crate::sample::{derive_seed, rng_from_seed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum TextKind {
    /// `(1…k)^{n/k}`.
    Periodic,
    /// `1^{n/k} … k^{n/k}` (block sizes differ by at most one when `k ∤ n`).
    Blockwise,
    /// Uniform symbols over the alphabet; word drawn the same way.
    RandomText,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum WeightKind {
    Uniform,
    /// `p_j = m_j / Σm` with `m_j` uniform in `[1, 100]`.
    RandomRational,
    /// One random index carries 9/10; the rest share 1/10 in proportions
    /// uniform in `[1, 10]`.
    PointMass,
}

/// A family of `(T, w, p)` instances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ensemble {
    pub text: TextKind,
    pub weights: WeightKind,
    pub n: usize,
    pub k: usize,
    /// Alphabet size for random texts.
    pub alphabet: usize,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub text: Text,
    pub word: Word,
    pub p: ExactDistribution,
}

impl Instance {
    /// Exact `Δ(T, w, p)`.
    pub fn truth(&self) -> Result<Rational> {
        if self.p.is_uniform() {
            uniform_distance(&self.text, &self.word)
        } else {
            exact_weighted_distance(&self.text, &self.word, &self.p)
        }
    }
}

impl Ensemble {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::Config("n and k must be positive".into()));
        }
        if self.text == TextKind::RandomText && self.alphabet == 0 {
            return Err(Error::Config("alphabet must be positive".into()));
        }
        Ok(())
    }

    pub fn generate(&self, seed: u64) -> Result<Instance> {
        self.validate()?;
        let (n, k) = (self.n, self.k);
        let mut rng = rng_from_seed(derive_seed(seed, 0x7e47));
        let (word, text) = match self.text {
            TextKind::Periodic => ((1..=k as u32).collect(), (0..n).map(|j| (j % k) as u32 + 1).collect()),
            TextKind::Blockwise => ((1..=k as u32).collect(), (0..n).map(|j| (j * k / n) as u32 + 1).collect()),
            TextKind::RandomText => {
                let sigma = self.alphabet as u32;
                let w: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=sigma)).collect();
                let t: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
                (w, t)
            }
        };
        let mut rng = rng_from_seed(derive_seed(seed, 0x3e16));
        let p = match self.weights {
            WeightKind::Uniform => ExactDistribution::uniform(n),
            WeightKind::RandomRational => {
                let m: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=100)).collect();
                ExactDistribution::from_numerators(&m, m.iter().sum())?
            }
            WeightKind::PointMass => {
                let mut m: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=10)).collect();
                let heavy = rng.gen_range(0..n);
                m[heavy] = 0;
                let rest: u64 = m.iter().sum();
                if rest == 0 {
                    ExactDistribution::uniform(1)
                } else {
                    m[heavy] = 9 * rest;
                    ExactDistribution::from_numerators(&m, 10 * rest)?
                }
            }
        };
        Ok(Instance {
            text: Text::from_ids(&text)?,
            word: Word::from_ids(&word)?,
            p,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ens(text: TextKind, weights: WeightKind, n: usize, k: usize) -> Ensemble {
        Ensemble {
            text,
            weights,
            n,
            k,
            alphabet: 3,
        }
    }

    #[test]
    fn periodic_and_blockwise_agree() {
        for (n, k) in [(6, 2), (12, 3), (20, 4), (30, 5), (8, 1)] {
            let a = ens(TextKind::Periodic, WeightKind::Uniform, n, k).generate(0).unwrap();
            let b = ens(TextKind::Blockwise, WeightKind::Uniform, n, k).generate(0).unwrap();
            assert_eq!(a.truth().unwrap(), b.truth().unwrap(), "n={n} k={k}");
            assert_eq!(a.truth().unwrap(), Rational::new(1, k as i128));
        }
    }

    #[test]
    fn weights_are_distributions() {
        for w in [WeightKind::Uniform, WeightKind::RandomRational, WeightKind::PointMass] {
            let inst = ens(TextKind::RandomText, w, 50, 2).generate(4).unwrap();
            assert_eq!(inst.p.len(), 50);
            assert!(inst.p.common_denominator() <= 1_000_000);
        }
        let inst = ens(TextKind::RandomText, WeightKind::PointMass, 50, 2).generate(4).unwrap();
        assert!(inst.p.weights().iter().any(|&x| x == Rational::new(9, 10)));
    }

    #[test]
    fn deterministic_and_validated() {
        let e = ens(TextKind::RandomText, WeightKind::RandomRational, 40, 3);
        let (a, b) = (e.generate(9).unwrap(), e.generate(9).unwrap());
        assert_eq!(a.text, b.text);
        assert_eq!(a.p, b.p);
        assert!(ens(TextKind::Periodic, WeightKind::Uniform, 0, 2).generate(0).is_err());
        let b = ens(TextKind::Blockwise, WeightKind::Uniform, 7, 3).generate(0).unwrap();
        let ids: Vec<u32> = b.text.symbols().iter().map(|s| s.id()).collect();
        assert_eq!(ids, vec![1, 1, 1, 2, 2, 3, 3]);
    }
}
