//! Truncated multivariate power series.
//!
//! Coefficients live in a dense vector indexed by a shared
//! [`MonomialBasis`] (graded lexicographic order), so products are a single
//! pass over precomputed index triples.

use std::collections::HashMap;
use std::ops::Mul;
use std::sync::Arc;

use crate::combinatorics::{factorial_real, falling_factorial, NeumaierSum};
use crate::real::Real;

/// All monomials `x^e` in `dim` variables with `|e| ≤ max_degree`.
#[derive(Debug)]
pub struct MonomialBasis {
    dim: usize,
    max_degree: usize,
    exps: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// `(a, b, c)` with `exps[a] + exps[b] = exps[c]`.
    triples: Vec<(usize, usize, usize)>,
}

impl MonomialBasis {
    pub fn new(dim: usize, max_degree: usize) -> Arc<Self> {
        assert!(dim > 0, "series need at least one variable");
        let mut exps = Vec::new();
        for total in 0..=max_degree {
            let mut current = vec![0; dim];
            compositions(total, 0, &mut current, &mut exps);
        }
        let index: HashMap<Vec<usize>, usize> = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let degrees: Vec<usize> = exps.iter().map(|e| e.iter().sum()).collect();
        let mut triples = Vec::new();
        let mut sum = vec![0; dim];
        for (a, ea) in exps.iter().enumerate() {
            for (b, eb) in exps.iter().enumerate() {
                if degrees[a] + degrees[b] > max_degree {
                    // graded order: every later b has at least this degree
                    break;
                }
                for j in 0..dim {
                    sum[j] = ea[j] + eb[j];
                }
                triples.push((a, b, index[&sum]));
            }
        }
        Arc::new(Self {
            dim,
            max_degree,
            exps,
            index,
            triples,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self, idx: usize) -> &[usize] {
        &self.exps[idx]
    }

    pub fn index_of(&self, exps: &[usize]) -> Option<usize> {
        self.index.get(exps).copied()
    }
}

/// Pushes every composition of `remaining` into `current[pos..]`, largest
/// leading exponent first.
fn compositions(remaining: usize, pos: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        compositions(remaining - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// A power series truncated at the basis' total degree.
#[derive(Debug, Clone)]
pub struct SeriesPoly<R = f64> {
    basis: Arc<MonomialBasis>,
    coeffs: Vec<R>,
}

impl<R: Real> SeriesPoly<R> {
    pub fn zero(basis: &Arc<MonomialBasis>) -> Self {
        Self {
            basis: Arc::clone(basis),
            coeffs: vec![R::zero(); basis.len()],
        }
    }

    pub fn constant(basis: &Arc<MonomialBasis>, c: R) -> Self {
        let mut s = Self::zero(basis);
        s.coeffs[0] = c;
        s
    }

    pub fn from_fn(basis: &Arc<MonomialBasis>, mut f: impl FnMut(&[usize]) -> R) -> Self {
        Self {
            basis: Arc::clone(basis),
            coeffs: basis.exps.iter().map(|e| f(e)).collect(),
        }
    }

    /// `exp(Σ λ_j x_j)`, coefficients `Π λ_j^{e_j} / e_j!`.
    pub fn exp_linear(basis: &Arc<MonomialBasis>, lambdas: &[R]) -> Self {
        assert_eq!(lambdas.len(), basis.dim());
        let tables: Vec<Vec<R>> = lambdas.iter().map(|&l| scaled_powers(l, basis.max_degree())).collect();
        Self::from_fn(basis, |e| {
            e.iter().zip(&tables).fold(R::one(), |acc, (&ej, t)| acc * t[ej])
        })
    }

    /// `(1 + Σ c_j x_j)^p`, coefficients `p(p−1)⋯(p−|e|+1) Π c_j^{e_j} / e_j!`.
    pub fn binomial_power(basis: &Arc<MonomialBasis>, p: R, coeffs: &[R]) -> Self {
        assert_eq!(coeffs.len(), basis.dim());
        let tables: Vec<Vec<R>> = coeffs.iter().map(|&c| scaled_powers(c, basis.max_degree())).collect();
        let falling: Vec<R> = (0..=basis.max_degree()).map(|j| falling_factorial(p, j)).collect();
        Self::from_fn(basis, |e| {
            let total: usize = e.iter().sum();
            e.iter().zip(&tables).fold(falling[total], |acc, (&ej, t)| acc * t[ej])
        })
    }

    pub fn basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^e`; zero beyond the truncation degree.
    pub fn coeff(&self, exps: &[usize]) -> R {
        self.basis.index_of(exps).map_or(R::zero(), |i| self.coeffs[i])
    }

    /// Truncated product, each output coefficient summed with compensation.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            Arc::ptr_eq(&self.basis, &other.basis),
            "series must share a monomial basis"
        );
        let mut acc = vec![NeumaierSum::<R>::new(); self.basis.len()];
        for &(a, b, c) in &self.basis.triples {
            acc[c].add(self.coeffs[a] * other.coeffs[b]);
        }
        Self {
            basis: Arc::clone(&self.basis),
            coeffs: acc.iter().map(NeumaierSum::value).collect(),
        }
    }

    /// Coefficientwise absolute value, used to bound rounding in products.
    pub fn abs(&self) -> Self {
        Self {
            basis: Arc::clone(&self.basis),
            coeffs: self.coeffs.iter().map(|c| c.abs()).collect(),
        }
    }

    /// Sum of the truncated series at `x`.
    pub fn eval(&self, x: &[R]) -> R {
        assert_eq!(x.len(), self.basis.dim());
        let powers: Vec<Vec<R>> = x
            .iter()
            .map(|&xi| {
                let mut p = vec![R::one(); self.basis.max_degree() + 1];
                for j in 1..p.len() {
                    p[j] = p[j - 1] * xi;
                }
                p
            })
            .collect();
        let mut acc = NeumaierSum::new();
        for (e, &c) in self.basis.exps.iter().zip(&self.coeffs) {
            acc.add(e.iter().zip(&powers).fold(c, |t, (&ej, p)| t * p[ej]));
        }
        acc.value()
    }
}

impl<R: Real> Mul for &SeriesPoly<R> {
    type Output = SeriesPoly<R>;

    fn mul(self, rhs: Self) -> SeriesPoly<R> {
        SeriesPoly::mul(self, rhs)
    }
}

/// `[c^e / e!]` for `e = 0..=max`.
fn scaled_powers<R: Real>(c: R, max: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(max + 1);
    let mut pow = R::one();
    for e in 0..=max {
        out.push(pow / factorial_real::<R>(e));
        pow *= c;
    }
    out
}
