//! Estimate the distance of a long periodic text from a uniform sample.
//!
//! cargo run --release --example uniform_estimate

use subfree::exact::uniform_distance;
use subfree::uniform::{estimate_uniform, sample_size_uniform};
use subfree::{Alphabet, Text, UniformOracle, Word};

fn main() -> subfree::Result<()> {
    let mut a = Alphabet::new();
    let w = Word::new(a.intern_chars("abc"))?;
    let t = Text::new(a.intern_chars(&"abcacb".repeat(20_000)))?;

    let truth = uniform_distance(&t, &w)?;
    let delta = 0.1;
    let params = sample_size_uniform(w.len(), delta)?;
    println!("n = {}, gamma = {:.4}, samples = {}", t.len(), params.gamma, params.samples);

    let oracle = UniformOracle::new(&t);
    for seed in 0..5 {
        let e = estimate_uniform(&oracle, &w, delta, seed)?;
        println!("seed {seed}: estimate {:.4}  truth {}", e.delta_hat, truth);
    }
    Ok(())
}
