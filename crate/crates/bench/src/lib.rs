//! Fixtures shared by the criterion benches in `benches/`.

use charlier_core::{EuclidParams2, MultiIndex2};

/// Generic, non-degenerate parameters on which every evaluator is defined.
pub fn generic_params() -> EuclidParams2 {
    EuclidParams2::new(1.1, 0.8, 1.7).expect("valid parameters")
}

/// Every `(deg, pt)` with `m + n <= degmax` and `i, k <= ptmax`.
pub fn grid(degmax: usize, ptmax: usize) -> Vec<(MultiIndex2, MultiIndex2)> {
    MultiIndex2::up_to_total(degmax)
        .flat_map(|d| (0..=ptmax).flat_map(move |i| (0..=ptmax).map(move |k| (d, MultiIndex2::new(i, k)))))
        .collect()
}
