//! The two hard ensembles: R concentrates on opposite sides of a gap.
//!
//! cargo run --release --example lower_bound

use subfree::harness::{concentration_experiment, Premises};

fn main() -> subfree::Result<()> {
    let (kd, delta, n) = (2, 0.02, 260_000);
    println!("{:?}", Premises::check(kd, delta, n));
    let report = concentration_experiment(kd, delta, n, 20, 1)?;
    let s = &report.summary;
    println!("T1: R >= {:.0} in {:?} of draws (mean {:?})", s.t1_threshold, s.t1_frequency, s.mean_r_t1);
    println!("T2: R <= {:.0} in {:?} of draws (mean {:?})", s.t2_threshold, s.t2_frequency, s.mean_r_t2);
    Ok(())
}
