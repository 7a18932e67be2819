//! How often the two good-sample events hold, and whether the bounds that
//! depend on them do.
//!
//! cargo run --release --example event_diagnostics

use subfree::dfree::Constants;
use subfree::harness::{event_experiment, Ensemble, TextKind, WeightKind};

fn main() -> subfree::Result<()> {
    let inst = Ensemble {
        text: TextKind::RandomText,
        weights: WeightKind::RandomRational,
        n: 1_000,
        k: 2,
        alphabet: 2,
    }
    .generate(5)?;
    let report = event_experiment(&inst.text, &inst.word, &inst.p, 0.5, 10, 2, &Constants::standard())?;
    println!("{}", serde_json::to_string_pretty(&report.summary).expect("serialises"));
    Ok(())
}
