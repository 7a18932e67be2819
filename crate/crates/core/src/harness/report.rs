//! Result records. A report serialises as JSON lines: one line per trial,
//! then one line holding the config echo and the summary. Output depends
//! only on the config and the master seed; wall time is recorded only
//! when asked for.

use serde::Serialize;

/// Schema tag written into every summary line.
pub const SCHEMA: &str = "subfree.report/1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialResult {
    pub trial: u64,
    pub seed: u64,
    pub delta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth: Option<f64>,
    pub estimate: f64,
    pub raw: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub success: Option<bool>,
    pub samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Aggregate over the trials at one `δ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaSummary {
    pub delta: f64,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: Option<f64>,
    pub error_p50: Option<f64>,
    pub error_p90: Option<f64>,
    pub error_max: Option<f64>,
    pub mean_samples: Option<f64>,
}

impl DeltaSummary {
    pub fn from_trials(delta: f64, trials: &[&TrialResult]) -> Self {
        let mut errors: Vec<f64> = trials.iter().filter_map(|t| t.error).collect();
        errors.sort_by(f64::total_cmp);
        let successes = trials.iter().filter(|t| t.success == Some(true)).count();
        let judged = trials.iter().filter(|t| t.success.is_some()).count();
        let mean_samples = if trials.is_empty() {
            None
        } else {
            Some(trials.iter().map(|t| t.samples as f64).sum::<f64>() / trials.len() as f64)
        };
        DeltaSummary {
            delta,
            trials: trials.len(),
            successes,
            success_rate: (judged > 0).then(|| successes as f64 / judged as f64),
            error_p50: percentile(&errors, 0.5),
            error_p90: percentile(&errors, 0.9),
            error_max: errors.last().copied(),
            mean_samples,
        }
    }
}

/// Nearest-rank percentile of sorted data.
pub fn percentile(sorted: &[f64], q: f64) -> Option<f64> {
    if sorted.is_empty() {
        return None;
    }
    let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    Some(sorted[rank - 1])
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<T, S> {
    pub schema: &'static str,
    pub command: String,
    pub config: serde_json::Value,
    pub trials: Vec<T>,
    pub summary: S,
}

#[derive(Serialize)]
struct SummaryLine<'a, S> {
    schema: &'static str,
    command: &'a str,
    config: &'a serde_json::Value,
    summary: &'a S,
}

impl<T: Serialize, S: Serialize> Report<T, S> {
    pub fn new(command: &str, config: serde_json::Value, trials: Vec<T>, summary: S) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            config,
            trials,
            summary,
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for t in &self.trials {
            out.push_str(&serde_json::to_string(t).expect("trial serialises"));
            out.push('\n');
        }
        let line = SummaryLine {
            schema: self.schema,
            command: &self.command,
            config: &self.config,
            summary: &self.summary,
        };
        out.push_str(&serde_json::to_string(&line).expect("summary serialises"));
        out.push('\n');
        out
    }
}

pub type ExperimentReport = Report<TrialResult, Vec<DeltaSummary>>;
