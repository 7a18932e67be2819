//! Prefix occurrence counts `N_i^j` and indicators `I_i^j`.

use crate::alphabet::{Text, Word};
use crate::error::{Error, Result};

fn check_role(w: &Word, i: usize) -> Result<()> {
    if i < 1 || i > w.len() {
        return Err(Error::InvalidInput(format!("role {i} not in [1,{}]", w.len())));
    }
    Ok(())
}

/// `N_i^j(T, w)`: occurrences of `w_i` in `T[1, j]`. `j = 0` gives 0.
pub fn count_prefix(text: &Text, w: &Word, i: usize, j: usize) -> Result<u64> {
    check_role(w, i)?;
    if j > text.len() {
        return Err(Error::Range(format!("prefix length {j} exceeds n = {}", text.len())));
    }
    let target = w.role(i);
    Ok(text.symbols()[..j].iter().filter(|&&s| s == target).count() as u64)
}

/// `I_i^j(T, w)`: 1 iff `T[j] = w_i`.
pub fn indicator(text: &Text, w: &Word, i: usize, j: usize) -> Result<u8> {
    check_role(w, i)?;
    if j < 1 || j > text.len() {
        return Err(Error::Range(format!("position {j} not in [1,{}]", text.len())));
    }
    Ok(u8::from(text.at(j) == w.role(i)))
}

/// All prefix counts of one role: `out[j] = N_i^j` for `j ∈ [0, n]`.
pub fn prefix_count_row(text: &Text, w: &Word, i: usize) -> Result<Vec<u64>> {
    check_role(w, i)?;
    let target = w.role(i);
    let mut out = Vec::with_capacity(text.len() + 1);
    let mut acc = 0u64;
    out.push(0);
    for &s in text.symbols() {
        acc += u64::from(s == target);
        out.push(acc);
    }
    Ok(out)
}
