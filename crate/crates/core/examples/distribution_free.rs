//! Distribution-free estimate on a text whose weight is concentrated on a
//! few positions, against the exact weighted distance.
//!
//! cargo run --release --example distribution_free

use subfree::dfree::{run_df, Constants};
use subfree::distribution::rational_to_f64;
use subfree::harness::{Ensemble, TextKind, WeightKind};
use subfree::WeightedOracle;

fn main() -> subfree::Result<()> {
    let ensemble = Ensemble {
        text: TextKind::RandomText,
        weights: WeightKind::PointMass,
        n: 2_000,
        k: 2,
        alphabet: 2,
    };
    let inst = ensemble.generate(3)?;
    let truth = rational_to_f64(&inst.truth()?);
    let oracle = WeightedOracle::from_exact(&inst.text, &inst.p)?;

    let run = run_df(&oracle, &inst.word, 0.2, 11, &Constants::standard())?;
    let e = &run.estimate;
    println!("z = {}, s1 = {}, s2 = {}", e.z, e.s1, e.s2);
    println!("intervals U = {} ({} heavy), U' = {:?}", e.intervals, e.heavy_intervals, e.prime_intervals);
    println!("estimate {:.5}  truth {:.5}", e.delta_hat, truth);
    Ok(())
}
