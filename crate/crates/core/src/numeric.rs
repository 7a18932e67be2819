//! Small float helpers shared by the sample-size formulas.

/// Relative slack under which a float is treated as the integer it
/// approximates before taking a ceiling. Keeps `⌈0.3 / 0.015⌉` at 20
/// instead of 21.
pub const CEIL_SLACK: f64 = 1e-12;

/// `⌈x⌉`, snapping values within [`CEIL_SLACK`] of an integer onto it.
pub fn ceil_snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= CEIL_SLACK * r.abs().max(1.0) {
        r
    } else {
        x.ceil()
    }
}

pub fn ceil_snap_u64(x: f64) -> u64 {
    ceil_snap(x).max(0.0) as u64
}
