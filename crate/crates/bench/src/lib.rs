//! Shared fixtures for the criterion benchmarks: the parameter points worth
//! timing, from the cheapest unit in the family to the densest corner of the
//! acceptance grid.

use promislow::UnitParams;

/// Benchmark points in increasing order of cost. The last one is the worst
/// corner of the verification grid (support 511).
pub fn sample_points() -> Vec<(&'static str, UnitParams)> {
    let p = |d, t, w, n| UnitParams::new(d, t, w, n).expect("valid benchmark point");
    vec![
        ("d2_base", p(2, 0, 0, 1)),
        ("d3_twisted", p(3, 1, 1, 2)),
        ("d7_wide", p(7, -2, 3, 2)),
        ("d11_corner", p(11, 3, 3, 3)),
    ]
}
