//! Words with no two equal adjacent symbols skip the sentinel lift and
//! read the distance straight off the prefix estimates.
//!
//! cargo run --release --example no_equal_neighbours

use subfree::dfree::{estimate_df, estimate_df_special, Constants};
use subfree::exact::exact_weighted_distance;
use subfree::{Alphabet, ExactDistribution, Text, WeightedOracle, Word};

fn main() -> subfree::Result<()> {
    let mut a = Alphabet::new();
    let w = Word::new(a.intern_chars("aba"))?;
    let t = Text::new(a.intern_chars(&"abbaab".repeat(100)))?;
    let nums: Vec<u64> = (0..t.len() as u64).map(|j| 1 + j % 5).collect();
    let p = ExactDistribution::from_numerators(&nums, nums.iter().sum())?;
    let oracle = WeightedOracle::from_exact(&t, &p)?;

    // Smaller c_z keeps this quick; the guarantee needs the standard value.
    let c = Constants::relaxed(0.1)?;
    let special = estimate_df_special(&oracle, &w, 0.3, 1, &c)?;
    let general = estimate_df(&oracle, &w, 0.3, 1, &c)?;
    println!("truth   {}", exact_weighted_distance(&t, &w, &p)?);
    println!("special {:.4} ({} samples)", special.delta_hat, special.samples);
    println!("general {:.4} ({} samples)", general.delta_hat, general.samples);

    let aa = Word::new(a.intern_chars("aab"))?;
    println!("'aab' on the special path: {:?}", estimate_df_special(&oracle, &aa, 0.3, 1, &c).err());
    Ok(())
}
