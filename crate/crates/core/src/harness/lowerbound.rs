//! Hard instance pairs: `n/k_d` blocks `[λ, v_2, …, v_{k_d}]` where `λ`
//! is a fresh symbol with probability `ρ` and `v_1` otherwise. `T1` uses
//! `ρ = ½`, `T2` uses `ρ = ½ + 3k_dδ`. Copies of `w = v_1…v_{k_d}` are
//! plentiful in `T1` and markedly scarcer in `T2`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Text, Word};
use crate::error::{Error, Result};
use crate::exact::copy_count;
use crate::sample::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LowerboundKind {
    T1,
    T2,
}

/// Which side conditions of the construction a configuration meets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Premises {
    /// `δ ≤ 1/(300 k_d)`.
    pub delta_small: bool,
    /// `n > max{8k_d/δ, 200/(k_d δ²)}`.
    pub n_large: bool,
}

impl Premises {
    pub fn check(kd: usize, delta: f64, n: usize) -> Self {
        let kdf = kd as f64;
        Premises {
            delta_small: delta <= 1.0 / (300.0 * kdf),
            n_large: delta > 0.0 && (n as f64) > (8.0 * kdf / delta).max(200.0 / (kdf * delta * delta)),
        }
    }
}

/// `ρ` for the chosen side.
pub fn rho(kind: LowerboundKind, kd: usize, delta: f64) -> f64 {
    match kind {
        LowerboundKind::T1 => 0.5,
        LowerboundKind::T2 => 0.5 + 3.0 * kd as f64 * delta,
    }
}

/// `w = v_1 … v_{k_d}` with ids `1..=k_d`; `λ` has id `k_d + 1`.
pub fn lowerbound_word(kd: usize) -> Result<Word> {
    Word::from_ids(&(1..=kd as u32).collect::<Vec<_>>())
}

/// Blocks with an explicit `ρ ∈ [0, 1]`.
pub fn gen_blocks(kd: usize, n: usize, rho: f64, seed: u64) -> Result<Text> {
    if kd == 0 || !n.is_multiple_of(kd) {
        return Err(Error::Config(format!("k_d = {kd} must be positive and divide n = {n}")));
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::Config(format!("rho = {rho} outside [0, 1]")));
    }
    let mut rng = rng_from_seed(seed);
    let lambda = kd as u32 + 1;
    let mut ids = Vec::with_capacity(n);
    for _ in 0..n / kd {
        ids.push(if rng.gen_bool(rho) { lambda } else { 1 });
        ids.extend(2..=kd as u32);
    }
    Text::from_ids(&ids)
}

/// One draw from `T1` or `T2`. `k_d | n` and `n` above the size premise
/// are required (`δ = 0` is allowed and makes both sides coincide); the
/// `δ` premise is reported by [`Premises`] but not enforced.
pub fn gen_lowerbound(kind: LowerboundKind, kd: usize, delta: f64, n: usize, seed: u64) -> Result<(Text, Word)> {
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::Config(format!("delta = {delta} must be non-negative")));
    }
    if delta > 0.0 && !Premises::check(kd, delta, n).n_large {
        return Err(Error::Config(format!(
            "n = {n} must exceed max(8k_d/delta, 200/(k_d delta^2))"
        )));
    }
    let text = gen_blocks(kd, n, rho(kind, kd, delta), seed)?;
    Ok((text, lowerbound_word(kd)?))
}

/// `n/(2k_d) - (2/8)δn`: `R(T1)` stays above this w.h.p.
pub fn t1_threshold(kd: usize, delta: f64, n: usize) -> f64 {
    n as f64 / (2.0 * kd as f64) - 0.25 * delta * n as f64
}

/// `n/(2k_d) - (23/8)δn`: `R(T2)` stays below this w.h.p.
pub fn t2_threshold(kd: usize, delta: f64, n: usize) -> f64 {
    n as f64 / (2.0 * kd as f64) - 23.0 / 8.0 * delta * n as f64
}

/// `R` of one draw.
pub fn lowerbound_r(kind: LowerboundKind, kd: usize, delta: f64, n: usize, seed: u64) -> Result<u64> {
    let (t, w) = gen_lowerbound(kind, kd, delta, n, seed)?;
    Ok(copy_count(&t, &w))
}
