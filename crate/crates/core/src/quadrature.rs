//! Gauss–Hermite quadrature for the weight `e^{-x²}` on the real line.

use std::f64::consts::PI;

/// Nodes and weights of an `n`-point Gauss–Hermite rule, exact for
/// polynomials of degree `2n - 1` against `e^{-x²}`.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    /// Newton iteration on the orthonormal Hermite recurrence, with the
    /// classical asymptotic starting guesses for the largest roots.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss–Hermite rule needs at least one node");
        let pim4 = PI.powf(-0.25);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        let half = n.div_ceil(2);
        let mut z = 0.0f64;
        for i in 0..half {
            z = match i {
                0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
                1 => z - 1.14 * nf.powf(0.426) / z,
                2 => 1.86 * z - 0.86 * nodes[0],
                3 => 1.91 * z - 0.91 * nodes[1],
                _ => 2.0 * z - nodes[i - 2],
            };
            for _ in 0..100 {
                let (p1, p2) = orthonormal_pair(n, z, pim4);
                let z1 = z;
                z = z1 - p1 / ((2.0 * nf).sqrt() * p2);
                if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                    break;
                }
            }
            let (_, p2) = orthonormal_pair(n, z, pim4);
            let pp = (2.0 * nf).sqrt() * p2;
            nodes[i] = z;
            nodes[n - 1 - i] = -z;
            weights[i] = 2.0 / (pp * pp);
            weights[n - 1 - i] = weights[i];
        }
        if n % 2 == 1 {
            nodes[half - 1] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_j f(x_j)`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        crate::combinatorics::compensated_sum(self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)))
    }
}

/// `(p_n(z), p_{n-1}(z))` of the orthonormal Hermite polynomials scaled by
/// `π^{-1/4}`.
fn orthonormal_pair(n: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_factorial_odd(k: usize) -> f64 {
        // (2k-1)!!
        (1..=k).map(|j| (2 * j - 1) as f64).product()
    }

    #[test]
    fn integrates_even_moments_exactly() {
        for n in [1usize, 2, 3, 5, 10, 20, 40, 64] {
            let rule = GaussHermite::new(n);
            for k in 0..n {
                // ∫ x^{2k} e^{-x²} dx = (2k-1)!! √π / 2^k
                let exact = double_factorial_odd(k) * PI.sqrt() / 2f64.powi(k as i32);
                let got = rule.integrate(|x| x.powi(2 * k as i32));
                assert!(
                    (got - exact).abs() <= 1e-12 * exact.max(1.0),
                    "n={n} k={k}: {got} vs {exact}"
                );
            }
            let odd = rule.integrate(|x| x.powi(3));
            assert!(odd.abs() < 1e-12);
        }
    }

    #[test]
    fn nodes_are_symmetric_and_sorted() {
        let rule = GaussHermite::new(11);
        for w in rule.nodes.windows(2) {
            assert!(w[0] > w[1]);
        }
        for i in 0..11 {
            assert!((rule.nodes[i] + rule.nodes[10 - i]).abs() < 1e-14);
        }
        assert!(rule.weights.iter().all(|&w| w > 0.0));
    }
}
