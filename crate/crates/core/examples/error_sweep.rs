//! Success rate of the uniform estimator across several accuracies,
//! written as JSON lines.
//!
//! cargo run --release --example error_sweep > sweep.jsonl

use subfree::dfree::Constants;
use subfree::harness::{error_sweep, Ensemble, Estimator, TextKind, WeightKind};

fn main() -> subfree::Result<()> {
    let ensemble = Ensemble {
        text: TextKind::RandomText,
        weights: WeightKind::Uniform,
        n: 50_000,
        k: 3,
        alphabet: 3,
    };
    let report = error_sweep(Estimator::Uniform, &ensemble, &[0.05, 0.1, 0.2], 20, 7, &Constants::standard(), false)?;
    for s in &report.summary {
        eprintln!("delta {:.2}: success {:?}, p90 error {:?}", s.delta, s.success_rate, s.error_p90);
    }
    print!("{}", report.to_json_lines());
    Ok(())
}
