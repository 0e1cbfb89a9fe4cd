//! Univariate reference families: Charlier, Krawtchouk and the normalized
//! harmonic-oscillator wavefunctions.

use crate::combinatorics::{factorial_f64, NeumaierSum};
use crate::error::{Error, Result};
use crate::poisson;
use crate::quadrature::GaussHermite;
use crate::real::Real;
use crate::report::VerifyReport;

/// Poisson parameter `a > 0` of the Charlier family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharlierParam<R = f64> {
    a: R,
}

impl<R: Real> CharlierParam<R> {
    pub fn new(a: R) -> Result<Self> {
        if !(a > R::zero()) || !a.is_finite() {
            return Err(Error::InvalidParameter {
                name: "a",
                value: a.approx(),
                reason: "Charlier parameter must be positive and finite",
            });
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> R {
        self.a
    }
}

/// Success probability `p ∈ (0,1)` and lattice size `N` of the Krawtchouk family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrawtchoukParam<R = f64> {
    p: R,
    size: usize,
}

impl<R: Real> KrawtchoukParam<R> {
    pub fn new(p: R, size: usize) -> Result<Self> {
        if !(p > R::zero() && p < R::one()) {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p.approx(),
                reason: "Krawtchouk probability must lie in (0, 1)",
            });
        }
        Ok(Self { p, size })
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Charlier polynomial `C_n(x; a) = ₂F₀(-n, -x; ; -1/a)`, normalized so that
/// `e^t (1 - t/a)^x = Σ C_n(x;a) tⁿ/n!`.
pub fn charlier<R: Real>(n: usize, x: R, param: CharlierParam<R>) -> R {
    charlier_with_magnitude(n, x, param).0
}

/// Value and `Σ |term|` of the terminating sum. The ratio bounds the
/// cancellation, so `ε · magnitude` is the attainable accuracy.
///
/// The forward three-term recurrence is not used: it amplifies rounding
/// by roughly `j/a` per step.
pub fn charlier_with_magnitude<R: Real>(n: usize, x: R, param: CharlierParam<R>) -> (R, R) {
    let neg_inv_a = -param.a.recip();
    let mut acc = NeumaierSum::new();
    let mut term = R::one();
    let mut magnitude = R::one();
    acc += term;
    for j in 0..n {
        let jr = R::of_usize(j);
        term = term * (jr - R::of_usize(n)) * (jr - x) / (jr + R::one()) * neg_inv_a;
        if term.is_zero() {
            break;
        }
        acc += term;
        magnitude += term.abs();
    }
    (acc.value(), magnitude)
}

/// Krawtchouk polynomial `K_n(x; p, N) = ₂F₁(-n, -x; -N; 1/p)`, with `K_0 = 1`.
pub fn krawtchouk<R: Real>(n: usize, x: R, param: KrawtchoukParam<R>) -> Result<R> {
    if n > param.size {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "Krawtchouk degree must not exceed N",
        });
    }
    let big_n = R::of_usize(param.size);
    let inv_p = param.p.recip();
    let mut acc = NeumaierSum::new();
    let mut term = R::one();
    acc += term;
    for j in 0..n {
        let jr = R::of_usize(j);
        term = term * (jr - R::of_usize(n)) * (jr - x) / ((jr - big_n) * (jr + R::one())) * inv_p;
        if term.is_zero() {
            break;
        }
        acc += term;
    }
    Ok(acc.value())
}

/// Normalized oscillator wavefunction
/// `Ψ_n(x) = (2ⁿ √π n!)^{-1/2} e^{-x²/2} H_n(x)`, by the normalized recurrence.
pub fn hermite_wavefunction<R: Real>(n: usize, x: R) -> R {
    hermite_function_poly(n, x) * (-(x * x) / R::lit(2.0)).exp()
}

/// Polynomial part `Ψ_n(x) e^{x²/2}`.
///
/// `ψ_{n+1} = x √(2/(n+1)) ψ_n − √(n/(n+1)) ψ_{n−1}`, `ψ_0 = π^{-1/4}`; no
/// raw `H_n` or `2ⁿ n!` is ever formed.
pub fn hermite_function_poly<R: Real>(n: usize, x: R) -> R {
    let mut prev = R::zero();
    let mut cur = R::PI().sqrt().sqrt().recip();
    for j in 0..n {
        let jr = R::of_usize(j);
        let next = x * (R::lit(2.0) / (jr + R::one())).sqrt() * cur - (jr / (jr + R::one())).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All of `ψ_0(x), …, ψ_nmax(x)` from [`hermite_function_poly`] in one pass.
pub fn hermite_function_polys(nmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(nmax + 1);
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25);
    out.push(cur);
    for j in 0..nmax {
        let jr = j as f64;
        let next = x * (2.0 / (jr + 1.0)).sqrt() * cur - (jr / (jr + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Gram matrix `G[n][m] = Σ_{x ≤ cutoff} w_x C_n(x;a) C_m(x;a)`.
pub fn charlier_gram(nmax: usize, param: CharlierParam<f64>, cutoff: usize) -> Vec<Vec<f64>> {
    let weights = poisson::pmf_table(param.a(), cutoff);
    let values: Vec<Vec<f64>> = (0..=cutoff)
        .map(|x| (0..=nmax).map(|n| charlier(n, x as f64, param)).collect())
        .collect();
    let mut gram = vec![vec![0.0; nmax + 1]; nmax + 1];
    for (n, row) in gram.iter_mut().enumerate() {
        for (m, cell) in row.iter_mut().enumerate() {
            *cell = (0..=cutoff)
                .map(|x| weights[x] * values[x][n] * values[x][m])
                .collect::<NeumaierSum<f64>>()
                .value();
        }
    }
    gram
}

/// Checks `Σ_x w_x C_n C_m = a^{-n} n! δ_{nm}` for `n, m ≤ nmax`, truncating
/// the Poisson sum at `cutoff`.
pub fn charlier_orthocheck(nmax: usize, param: CharlierParam<f64>, cutoff: usize, tolerance: f64) -> VerifyReport {
    let a = param.a();
    let gram = charlier_gram(nmax, param, cutoff);
    let mut report = VerifyReport::new(
        "charlier-orthogonality",
        tolerance,
        format!("n,m <= {nmax}, a = {a}, x <= {cutoff}"),
    );
    for (n, row) in gram.iter().enumerate() {
        for (m, &g) in row.iter().enumerate() {
            let target = if n == m {
                factorial_f64(n) / a.powi(n as i32)
            } else {
                0.0
            };
            report.observe(g - target, || format!("(n,m)=({n},{m})"));
        }
    }
    let shell = (cutoff + 1) as f64;
    let growth = (0..=nmax)
        .map(|n| charlier(n, shell, param).abs())
        .fold(0.0f64, f64::max);
    report.tail_bound = poisson::tail(a, cutoff) * growth * growth;
    if report.tail_bound > tolerance {
        report.note(format!(
            "truncation tail bound {:.3e} exceeds tolerance; increase the cutoff",
            report.tail_bound
        ));
    }
    report
}

/// Checks `∫ Ψ_n Ψ_m dx = δ_{nm}` for `n, m ≤ nmax` with a Gauss–Hermite
/// rule of `nodes` points, exact once `nodes > nmax`.
pub fn hermite_orthocheck(nmax: usize, nodes: usize, tolerance: f64) -> Result<VerifyReport> {
    if nodes <= nmax {
        return Err(Error::TooFewNodes {
            needed: nmax + 1,
            got: nodes,
        });
    }
    let rule = GaussHermite::new(nodes);
    let table: Vec<Vec<f64>> = rule.nodes.iter().map(|&x| hermite_function_polys(nmax, x)).collect();
    let mut report = VerifyReport::new(
        "hermite-orthonormality",
        tolerance,
        format!("n,m <= {nmax}; {nodes} nodes"),
    );
    for n in 0..=nmax {
        for m in 0..=nmax {
            let v: NeumaierSum = table
                .iter()
                .zip(&rule.weights)
                .map(|(row, &w)| w * row[n] * row[m])
                .collect();
            let target = if n == m { 1.0 } else { 0.0 };
            report.observe(v.value() - target, || format!("(n,m)=({n},{m})"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussHermite;
    use std::f64::consts::PI;

    fn cp(a: f64) -> CharlierParam<f64> {
        CharlierParam::new(a).unwrap()
    }

    /// Coefficient of tⁿ in e^t (1 - t/a)^x, times n!, by brute-force
    /// Cauchy product of the two series.
    fn charlier_series_oracle(n: usize, x: f64, a: f64) -> f64 {
        let exp_coeffs: Vec<f64> = (0..=n).map(|j| 1.0 / factorial_f64(j)).collect();
        let mut binom = vec![1.0; n + 1];
        for j in 1..=n {
            binom[j] = binom[j - 1] * (x - (j - 1) as f64) / j as f64 * (-1.0 / a);
        }
        let coeff: f64 = (0..=n).map(|j| exp_coeffs[n - j] * binom[j]).sum();
        coeff * factorial_f64(n)
    }

    #[test]
    fn charlier_examples() {
        assert_eq!(charlier(0, 7.0, cp(1.0)), 1.0);
        assert_eq!(charlier(1, 2.0, cp(1.0)), -1.0);
        assert!((charlier(2, 0.0, cp(2.0)) - charlier_series_oracle(2, 0.0, 2.0)).abs() < 1e-15);
        assert!((charlier(2, 0.0, cp(2.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn charlier_matches_series_oracle() {
        for n in 0..10 {
            for x in 0..8 {
                for &a in &[0.5, 1.0, 2.5] {
                    let got = charlier(n, x as f64, cp(a));
                    let want = charlier_series_oracle(n, x as f64, a);
                    assert!((got - want).abs() <= 1e-10 * want.abs().max(1.0), "n={n} x={x} a={a}");
                }
            }
        }
    }

    #[test]
    fn charlier_rejects_nonpositive_parameter() {
        assert!(CharlierParam::new(0.0).is_err());
        assert!(CharlierParam::new(-1.0).is_err());
        assert!(CharlierParam::new(f64::NAN).is_err());
    }

    #[test]
    fn charlier_three_term_recurrence() {
        for &a in &[0.5, 1.0, 4.0] {
            for x in 0..=20 {
                let xf = x as f64;
                for n in 1..=20 {
                    let (prev, mp) = charlier_with_magnitude(n - 1, xf, cp(a));
                    let (cur, mc) = charlier_with_magnitude(n, xf, cp(a));
                    let (next, mn) = charlier_with_magnitude(n + 1, xf, cp(a));
                    let lhs = -xf * cur;
                    let rhs = a * next - (n as f64 + a) * cur + n as f64 * prev;
                    let scale = (a * mn + (n as f64 + a + xf) * mc + n as f64 * mp).max(1.0);
                    assert!((lhs - rhs).abs() / scale < 1e-14, "a={a} x={x} n={n}");
                }
            }
        }
    }

    #[test]
    fn charlier_is_one_at_the_origin() {
        for &a in &[0.3, 0.7, 3.0] {
            for n in 0..=60 {
                assert_eq!(charlier(n, 0.0, cp(a)), 1.0);
            }
        }
    }

    #[test]
    fn charlier_self_duality_at_integers() {
        for &a in &[0.5, 1.0, 4.0] {
            for n in 0..=15 {
                for x in 0..=15 {
                    let l = charlier(n, x as f64, cp(a));
                    let r = charlier(x, n as f64, cp(a));
                    assert!((l - r).abs() <= 1e-11 * l.abs().max(1.0), "a={a} n={n} x={x}");
                }
            }
        }
    }

    #[test]
    fn charlier_orthocheck_examples() {
        let r = charlier_orthocheck(0, cp(1.0), 60, 1e-12);
        assert!(r.pass, "{r:?}");
        let g = charlier_gram(0, cp(1.0), 60);
        assert!((g[0][0] - 1.0).abs() < 1e-12);
        assert!(charlier_orthocheck(3, cp(1.0), 80, 1e-10).pass);
        assert!(charlier_orthocheck(3, cp(4.0), 120, 1e-10).pass);
        let bad = charlier_orthocheck(3, cp(1.0), 5, 1e-10);
        assert!(!bad.pass);
        assert!(bad.tail_bound > 1e-10);
    }

    /// Direct ₂F₁ sum in exact rationals (numerator/denominator in i128).
    fn krawtchouk_oracle(n: i128, x: i128, p_num: i128, p_den: i128, big_n: i128) -> f64 {
        let mut total_num: i128 = 0;
        let mut total_den: i128 = 1;
        for j in 0..=n {
            let mut num: i128 = 1;
            let mut den: i128 = 1;
            for t in 0..j {
                num *= (-n + t) * (-x + t) * p_den;
                den *= (-big_n + t) * (t + 1) * p_num;
            }
            total_num = total_num * den + num * total_den;
            total_den *= den;
        }
        total_num as f64 / total_den as f64
    }

    #[test]
    fn krawtchouk_examples() {
        let kp = |p: f64, n: usize| KrawtchoukParam::new(p, n).unwrap();
        assert_eq!(krawtchouk(0, 3.0, kp(0.5, 5)).unwrap(), 1.0);
        assert!((krawtchouk(1, 1.0, kp(0.5, 2)).unwrap()).abs() < 1e-15);
        let oracle = krawtchouk_oracle(2, 2, 1, 2, 2);
        assert_eq!(oracle, 1.0);
        assert!((krawtchouk(2, 2.0, kp(0.5, 2)).unwrap() - oracle).abs() < 1e-14);
    }

    #[test]
    fn krawtchouk_errors() {
        assert!(KrawtchoukParam::new(0.0, 3).is_err());
        assert!(KrawtchoukParam::new(1.0, 3).is_err());
        let kp = KrawtchoukParam::new(0.3, 3).unwrap();
        assert!(krawtchouk(4, 0.0, kp).is_err());
    }

    #[test]
    fn krawtchouk_is_orthogonal_under_binomial_weight() {
        let big_n = 7usize;
        let p = 0.3;
        let kp = KrawtchoukParam::new(p, big_n).unwrap();
        let w: Vec<f64> = (0..=big_n)
            .map(|x| {
                crate::combinatorics::binomial_f64(big_n as u64, x as i64)
                    * p.powi(x as i32)
                    * (1.0 - p).powi((big_n - x) as i32)
            })
            .collect();
        for n in 0..=big_n {
            for m in 0..n {
                let s: f64 = (0..=big_n)
                    .map(|x| w[x] * krawtchouk(n, x as f64, kp).unwrap() * krawtchouk(m, x as f64, kp).unwrap())
                    .sum();
                assert!(s.abs() < 1e-12, "n={n} m={m}: {s}");
            }
        }
    }

    #[test]
    fn hermite_examples() {
        assert!((hermite_wavefunction(0, 0.0) - PI.powf(-0.25)).abs() < 1e-15);
        assert!((hermite_wavefunction(0, 0.0) - 0.7511255).abs() < 1e-7);
        assert_eq!(hermite_wavefunction(1, 0.0), 0.0);
        // explicit H_2 = 4x² - 2 with normalization (2² √π 2!)^{-1/2}
        let x = 1.0f64;
        let explicit = (1.0 / (4.0 * PI.sqrt() * 2.0)).sqrt() * (-x * x / 2.0).exp() * (4.0 * x * x - 2.0);
        assert!((hermite_wavefunction(2, x) - explicit).abs() < 1e-12);
    }

    #[test]
    fn hermite_orthocheck_needs_enough_nodes() {
        assert!(hermite_orthocheck(10, 10, 1e-10).is_err());
        let r = hermite_orthocheck(10, 11, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn hermite_functions_are_orthonormal() {
        let nmax = 10;
        let rule = GaussHermite::new(2 * nmax + 1);
        for n in 0..=nmax {
            for m in 0..=nmax {
                let v = rule.integrate(|x| hermite_function_poly(n, x) * hermite_function_poly(m, x));
                let target = if n == m { 1.0 } else { 0.0 };
                assert!((v - target).abs() < 1e-10, "n={n} m={m}: {v}");
            }
        }
    }

    #[test]
    fn hermite_batch_matches_single() {
        let all = hermite_function_polys(12, 0.37);
        for (n, v) in all.iter().enumerate() {
            assert_eq!(*v, hermite_function_poly(n, 0.37));
        }
    }
}
