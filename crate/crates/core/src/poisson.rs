//! Poisson weights and truncation tails for the infinite orthogonality sums.

use crate::combinatorics::NeumaierSum;

/// `w_x = λ^x e^{-λ} / x!` for `x = 0..=cutoff`, accumulated in log space.
pub fn pmf_table(lambda: f64, cutoff: usize) -> Vec<f64> {
    if lambda == 0.0 {
        let mut out = vec![0.0; cutoff + 1];
        out[0] = 1.0;
        return out;
    }
    let ln_lambda = lambda.ln();
    let mut log_w = -lambda;
    let mut out = Vec::with_capacity(cutoff + 1);
    for x in 0..=cutoff {
        if x > 0 {
            log_w += ln_lambda - (x as f64).ln();
        }
        out.push(log_w.exp());
    }
    out
}

/// `P(X > cutoff)` for `X ~ Poisson(λ)`, summed directly from the first
/// omitted term until the terms stop contributing.
pub fn tail(lambda: f64, cutoff: usize) -> f64 {
    if lambda == 0.0 {
        return 0.0;
    }
    let ln_lambda = lambda.ln();
    let mut log_w = -lambda;
    for x in 1..=cutoff + 1 {
        log_w += ln_lambda - (x as f64).ln();
    }
    let mut acc = NeumaierSum::<f64>::new();
    let mut x = cutoff + 1;
    loop {
        let w = log_w.exp();
        acc += w;
        x += 1;
        log_w += ln_lambda - (x as f64).ln();
        if (x as f64) > lambda && (w <= 1e-18 * acc.value() || w < 1e-300) {
            break;
        }
        if x > cutoff + 100_000 {
            break;
        }
    }
    acc.value()
}
