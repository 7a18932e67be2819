use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Text, Word};
use crate::dfree::{diagnose_events, run_df, run_df_special, Constants};
use crate::distribution::{rational_to_f64, ExactDistribution};
use crate::error::{Error, Result};
use crate::sample::{derive_seed, UniformOracle, WeightedOracle};
use crate::uniform::estimate_uniform;

use super::ensemble::Ensemble;
use super::lowerbound::{lowerbound_r, t1_threshold, t2_threshold, LowerboundKind, Premises};
use super::report::{DeltaSummary, ExperimentReport, Report, TrialResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Estimator {
    Uniform,
    Df,
    /// The no-equal-neighbours path of the distribution-free estimator.
    DfWc,
}

/// Seed of trial `t`: `seed ⊕ t`.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    seed ^ t
}

/// Per-`δ` success rates of an estimator against exact truth.
pub fn error_sweep(
    estimator: Estimator,
    ensemble: &Ensemble,
    deltas: &[f64],
    trials: u64,
    seed: u64,
    constants: &Constants,
    timing: bool,
) -> Result<ExperimentReport> {
    ensemble.validate()?;
    if deltas.is_empty() || deltas.iter().any(|d| !(*d > 0.0 && *d < 1.0)) {
        return Err(Error::Config("deltas must be non-empty and lie in (0, 1)".into()));
    }
    let mut results = Vec::with_capacity(trials as usize * deltas.len());
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let inst = ensemble.generate(ts)?;
        if estimator == Estimator::Uniform && !inst.p.is_uniform() {
            return Err(Error::Config("the uniform estimator needs uniform weights".into()));
        }
        if estimator == Estimator::DfWc && !inst.word.is_wc() {
            return Err(Error::Config("df-wc needs a word without equal neighbours".into()));
        }
        let truth = match inst.truth() {
            Ok(x) => rational_to_f64(&x),
            Err(Error::SizeLimit(msg)) => {
                return Err(Error::Config(format!(
                    "exact truth infeasible ({msg}); use a rational-weight ensemble with a smaller denominator"
                )))
            }
            Err(e) => return Err(e),
        };
        for &delta in deltas {
            let start = timing.then(Instant::now);
            let (estimate, raw, samples) = match estimator {
                Estimator::Uniform => {
                    let e = estimate_uniform(&UniformOracle::new(&inst.text), &inst.word, delta, ts)?;
                    (e.delta_hat, e.raw, e.samples)
                }
                Estimator::Df | Estimator::DfWc => {
                    let oracle = WeightedOracle::from_exact(&inst.text, &inst.p)?;
                    let run = if estimator == Estimator::Df {
                        run_df(&oracle, &inst.word, delta, ts, constants)?
                    } else {
                        run_df_special(&oracle, &inst.word, delta, ts, constants)?
                    };
                    (run.estimate.delta_hat, run.estimate.raw, run.estimate.samples)
                }
            };
            let error = (estimate - truth).abs();
            results.push(TrialResult {
                trial: t,
                seed: ts,
                delta,
                truth: Some(truth),
                estimate,
                raw,
                error: Some(error),
                success: Some(error <= delta),
                samples,
                e1: None,
                e2: None,
                wall_ms: start.map(|s| s.elapsed().as_secs_f64() * 1e3),
            });
        }
    }
    results.sort_by(|a, b| a.delta.total_cmp(&b.delta).then(a.trial.cmp(&b.trial)));
    let summary = deltas
        .iter()
        .map(|&d| {
            let group: Vec<&TrialResult> = results.iter().filter(|r| r.delta == d).collect();
            DeltaSummary::from_trials(d, &group)
        })
        .collect();
    let config = serde_json::json!({
        "estimator": estimator,
        "ensemble": ensemble,
        "deltas": deltas,
        "trials": trials,
        "seed": seed,
        "constants": constants,
        "standard_constants": constants.is_standard(),
    });
    Ok(Report::new("sweep", config, results, summary))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerboundTrial {
    pub trial: u64,
    pub seed: u64,
    pub r_t1: u64,
    pub r_t2: u64,
    pub t1_ok: bool,
    pub t2_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerboundSummary {
    pub trials: usize,
    pub t1_threshold: f64,
    pub t2_threshold: f64,
    pub t1_frequency: Option<f64>,
    pub t2_frequency: Option<f64>,
    pub mean_r_t1: Option<f64>,
    pub mean_r_t2: Option<f64>,
    pub premises: Premises,
}

pub type LowerboundReport = Report<LowerboundTrial, LowerboundSummary>;

/// Fraction of `T1` draws with `R ≥ n/(2k_d) − (2/8)δn` and of `T2` draws
/// with `R ≤ n/(2k_d) − (23/8)δn`.
pub fn concentration_experiment(kd: usize, delta: f64, n: usize, trials: u64, seed: u64) -> Result<LowerboundReport> {
    let (lo, hi) = (t1_threshold(kd, delta, n), t2_threshold(kd, delta, n));
    let mut rows = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let r_t1 = lowerbound_r(LowerboundKind::T1, kd, delta, n, derive_seed(ts, 1))?;
        let r_t2 = lowerbound_r(LowerboundKind::T2, kd, delta, n, derive_seed(ts, 2))?;
        rows.push(LowerboundTrial {
            trial: t,
            seed: ts,
            r_t1,
            r_t2,
            t1_ok: r_t1 as f64 >= lo,
            t2_ok: r_t2 as f64 <= hi,
        });
    }
    if trials == 0 {
        // Still validate the configuration.
        super::lowerbound::gen_lowerbound(LowerboundKind::T1, kd, delta, n, seed)?;
    }
    let m = rows.len() as f64;
    let freq = |f: &dyn Fn(&LowerboundTrial) -> bool| (!rows.is_empty()).then(|| rows.iter().filter(|r| f(r)).count() as f64 / m);
    let mean = |f: &dyn Fn(&LowerboundTrial) -> u64| (!rows.is_empty()).then(|| rows.iter().map(|r| f(r) as f64).sum::<f64>() / m);
    let summary = LowerboundSummary {
        trials: rows.len(),
        t1_threshold: lo,
        t2_threshold: hi,
        t1_frequency: freq(&|r| r.t1_ok),
        t2_frequency: freq(&|r| r.t2_ok),
        mean_r_t1: mean(&|r| r.r_t1),
        mean_r_t2: mean(&|r| r.r_t2),
        premises: Premises::check(kd, delta, n),
    };
    let config = serde_json::json!({ "kd": kd, "delta": delta, "n": n, "trials": trials, "seed": seed });
    Ok(Report::new("lowerbound", config, rows, summary))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventTrial {
    pub trial: u64,
    pub seed: u64,
    pub e1: bool,
    pub e2: bool,
    pub light_bound: bool,
    pub xi_hat_error: f64,
    pub xi_hat_bound: bool,
    pub estimate: f64,
    pub s1: u64,
    pub s2: u64,
    pub intervals: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventSummary {
    pub trials: usize,
    pub e1_frequency: Option<f64>,
    pub e2_frequency: Option<f64>,
    /// Trials where `E1` held but some light interval had `wt_p ≥ 6/z`.
    pub light_bound_violations: usize,
    /// Trials where `E2` held but `|ξ̂ − ξ̃|` exceeded its tolerance.
    pub xi_hat_violations: usize,
    pub xi_hat_tolerance: Option<f64>,
    pub l1_quantization: Option<f64>,
}

pub type EventReportSet = Report<EventTrial, EventSummary>;

/// Repeats the instrumented estimator over `trials` seeds.
pub fn event_experiment(
    text: &Text,
    w: &Word,
    p: &ExactDistribution,
    delta: f64,
    trials: u64,
    seed: u64,
    constants: &Constants,
) -> Result<EventReportSet> {
    let oracle = WeightedOracle::from_exact(text, p)?;
    let mut rows = Vec::with_capacity(trials as usize);
    let mut tolerance = None;
    let mut l1 = None;
    for t in 0..trials {
        let ts = trial_seed(seed, t);
        let r = diagnose_events(&oracle, text, w, p, delta, ts, constants)?;
        tolerance = Some(r.xi_hat_tolerance);
        l1 = Some(r.l1_quantization);
        rows.push(EventTrial {
            trial: t,
            seed: ts,
            e1: r.e1,
            e2: r.e2,
            light_bound: r.light_bound,
            xi_hat_error: r.xi_hat_error,
            xi_hat_bound: r.xi_hat_bound(),
            estimate: r.estimate.delta_hat,
            s1: r.estimate.s1,
            s2: r.estimate.s2,
            intervals: r.estimate.intervals,
        });
    }
    let m = rows.len() as f64;
    let summary = EventSummary {
        trials: rows.len(),
        e1_frequency: (!rows.is_empty()).then(|| rows.iter().filter(|r| r.e1).count() as f64 / m),
        e2_frequency: (!rows.is_empty()).then(|| rows.iter().filter(|r| r.e2).count() as f64 / m),
        light_bound_violations: rows.iter().filter(|r| r.e1 && !r.light_bound).count(),
        xi_hat_violations: rows.iter().filter(|r| r.e2 && !r.xi_hat_bound).count(),
        xi_hat_tolerance: tolerance,
        l1_quantization: l1,
    };
    let config = serde_json::json!({
        "n": text.len(),
        "k": w.len(),
        "delta": delta,
        "trials": trials,
        "seed": seed,
        "constants": constants,
        "standard_constants": constants.is_standard(),
    });
    Ok(Report::new("diagnose-events", config, rows, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::ensemble::{TextKind, WeightKind};

    #[test]
    fn zero_trials_give_empty_reports() {
        let e = Ensemble {
            text: TextKind::Periodic,
            weights: WeightKind::Uniform,
            n: 100,
            k: 2,
            alphabet: 2,
        };
        let r = error_sweep(Estimator::Uniform, &e, &[0.1], 0, 0, &Constants::standard(), false).unwrap();
        assert!(r.trials.is_empty());
        assert_eq!(r.summary[0].success_rate, None);
        let lb = concentration_experiment(2, 0.0, 100, 0, 0).unwrap();
        assert_eq!(lb.summary.t1_frequency, None);
    }

    #[test]
    fn sweep_is_deterministic() {
        let e = Ensemble {
            text: TextKind::RandomText,
            weights: WeightKind::RandomRational,
            n: 300,
            k: 2,
            alphabet: 2,
        };
        let c = Constants::relaxed(0.02).unwrap();
        let a = error_sweep(Estimator::Df, &e, &[0.3, 0.5], 3, 4, &c, false).unwrap();
        let b = error_sweep(Estimator::Df, &e, &[0.3, 0.5], 3, 4, &c, false).unwrap();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
        assert_eq!(a.trials.len(), 6);
        assert!(error_sweep(Estimator::Uniform, &e, &[0.3], 1, 4, &c, false).is_err());
    }

    #[test]
    fn symmetric_at_zero_delta() {
        let r = concentration_experiment(2, 0.0, 2000, 30, 8).unwrap();
        let (a, b) = (r.summary.mean_r_t1.unwrap(), r.summary.mean_r_t2.unwrap());
        assert!((a - b).abs() < 0.05 * a, "{a} {b}");
    }
}
