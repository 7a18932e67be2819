use crate::alphabet::{Text, Word};
use crate::distribution::{ExactDistribution, Rational};
use crate::error::{Error, Result};

/// Largest text the subset enumeration accepts.
pub const BRUTE_FORCE_MAX_N: usize = 22;

/// True when `T` with the positions in `removed` (bitmask over 0-based
/// positions) deleted still contains `w` as a subsequence.
fn contains_after_removal(symbols: &[crate::alphabet::Symbol], w: &Word, removed: u32) -> bool {
    let target = w.symbols();
    let mut next = 0;
    for (idx, s) in symbols.iter().enumerate() {
        if removed & (1 << idx) == 0 && *s == target[next] {
            next += 1;
            if next == target.len() {
                return true;
            }
        }
    }
    false
}

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(v: u32) -> u32 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// Minimum-weight set of positions whose modification makes `T` w-free,
/// together with that weight. Modifying a position is replacing it with a
/// symbol outside `w`, which is the same as deleting it from every copy.
///
/// Uniform weights are searched by increasing set size with early exit;
/// general weights by full enumeration with pruning against the best set
/// found so far.
pub fn bruteforce_min_set(text: &Text, w: &Word, p: Option<&ExactDistribution>) -> Result<(Rational, Vec<usize>)> {
    let n = text.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::SizeLimit(format!("brute force needs n <= {BRUTE_FORCE_MAX_N}, got {n}")));
    }
    if n == 0 {
        return Err(Error::UndefinedDistance);
    }
    if let Some(p) = p {
        if p.len() != n {
            return Err(Error::InvalidInput("text and distribution lengths differ".into()));
        }
    }
    let symbols = text.symbols();
    let to_positions = |mask: u32| (0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect::<Vec<_>>();

    match p {
        None => {
            for size in 0..=n {
                let mut mask: u32 = if size == 0 { 0 } else { (1u32 << size) - 1 };
                loop {
                    if !contains_after_removal(symbols, w, mask) {
                        return Ok((Rational::new(size as i128, n as i128), to_positions(mask)));
                    }
                    if size == 0 || size == n {
                        break;
                    }
                    mask = next_same_popcount(mask);
                    if mask >> n != 0 {
                        break;
                    }
                }
            }
            unreachable!("removing every position leaves no copy")
        }
        Some(p) => {
            let (nums, d) = p.numerators();
            // Subset weights from two half tables.
            let lo_bits = n / 2;
            let hi_bits = n - lo_bits;
            let table = |offset: usize, bits: usize| -> Vec<i128> {
                let mut t = vec![0i128; 1 << bits];
                for m in 1usize..(1 << bits) {
                    let b = m.trailing_zeros() as usize;
                    t[m] = t[m & (m - 1)] + nums[offset + b];
                }
                t
            };
            let lo = table(0, lo_bits);
            let hi = table(lo_bits, hi_bits);
            let full: u32 = (1u32 << n) - 1;
            let mut best = lo[(full as usize) & ((1 << lo_bits) - 1)] + hi[(full >> lo_bits) as usize];
            let mut best_mask = full;
            for mask in 0..=full {
                let weight = lo[(mask as usize) & ((1 << lo_bits) - 1)] + hi[(mask >> lo_bits) as usize];
                if weight >= best {
                    continue;
                }
                if !contains_after_removal(symbols, w, mask) {
                    best = weight;
                    best_mask = mask;
                }
            }
            Ok((Rational::new(best, d), to_positions(best_mask)))
        }
    }
}

/// `Δ(T, w, p)` by exhaustive search; uniform `p` when `None`.
pub fn bruteforce_distance(text: &Text, w: &Word, p: Option<&ExactDistribution>) -> Result<Rational> {
    bruteforce_min_set(text, w, p).map(|(d, _)| d)
}
