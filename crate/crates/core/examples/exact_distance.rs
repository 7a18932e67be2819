//! Exact distance three ways: greedy copies, the prefix-count recursion,
//! and brute force; then a weighted instance through splitting.
//!
//! cargo run --example exact_distance

use subfree::exact::{bruteforce_distance, exact_weighted_distance, greedy_copies, r_table};
use subfree::{Alphabet, ExactDistribution, Rational, Text, Word};

fn main() -> subfree::Result<()> {
    let mut a = Alphabet::new();
    let w = Word::new(a.intern_chars("abc"))?;
    let t = Text::new(a.intern_chars("abcabacbcc"))?;

    let copies = greedy_copies(&t, &w);
    println!("greedy copies: {:?}", copies.copies());
    println!("R via recursion: {}", r_table(&t, &w).total());
    println!("brute-force distance: {}", bruteforce_distance(&t, &w, None)?);

    let p = ExactDistribution::new(vec![
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 2),
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 18),
        Rational::new(1, 18),
    ])?;
    println!("weighted distance: {}", exact_weighted_distance(&t, &w, &p)?);
    println!("weighted brute force: {}", bruteforce_distance(&t, &w, Some(&p))?);
    Ok(())
}
