use std::collections::HashMap;

use crate::alphabet::{Symbol, Text, Word};

/// A set of copies of `w` in `T`; each copy lists the 1-based position
/// playing every role.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CopySet {
    copies: Vec<Vec<usize>>,
}

impl CopySet {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn copies(&self) -> &[Vec<usize>] {
        &self.copies
    }

    /// Checks that every copy is a strictly increasing embedding of `w` and
    /// that no position plays the same role twice.
    pub fn is_role_disjoint_copy_set(&self, text: &Text, w: &Word) -> bool {
        let k = w.len();
        let mut used: Vec<std::collections::HashSet<usize>> = vec![Default::default(); k];
        for c in &self.copies {
            if c.len() != k || c.windows(2).any(|p| p[0] >= p[1]) {
                return false;
            }
            for (i, &j) in c.iter().enumerate() {
                if j < 1 || j > text.len() || text.at(j) != w.symbols()[i] || !used[i].insert(j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Maximum-size set of role-disjoint copies.
///
/// Copy `m` takes, for each role `i`, the first occurrence of `w_i` after
/// `C_m[i-1]` that no earlier copy uses in role `i`. Earlier copies only
/// consume occurrences to the left of the current scan start, so a single
/// forward cursor per role replaces the rescans; total work is
/// `O(n + k·R)`.
pub fn greedy_copies(text: &Text, w: &Word) -> CopySet {
    let mut occurrences: HashMap<Symbol, Vec<usize>> = w.symbols().iter().map(|&s| (s, Vec::new())).collect();
    for (idx, s) in text.symbols().iter().enumerate() {
        if let Some(list) = occurrences.get_mut(s) {
            list.push(idx + 1);
        }
    }
    let lists: Vec<&[usize]> = w.symbols().iter().map(|s| occurrences[s].as_slice()).collect();
    let mut cursor = vec![0usize; w.len()];
    let mut copies = Vec::new();
    'outer: loop {
        let mut copy = Vec::with_capacity(w.len());
        let mut prev = 0usize;
        for (i, list) in lists.iter().enumerate() {
            let c = &mut cursor[i];
            while *c < list.len() && list[*c] <= prev {
                *c += 1;
            }
            if *c == list.len() {
                break 'outer;
            }
            prev = list[*c];
            *c += 1;
            copy.push(prev);
        }
        copies.push(copy);
    }
    let set = CopySet { copies };
    debug_assert!(set.is_role_disjoint_copy_set(text, w));
    set
}

/// `R(T, w)`: the number of greedy role-disjoint copies.
pub fn copy_count(text: &Text, w: &Word) -> u64 {
    greedy_copies(text, w).len() as u64
}
