//! Dense complex polynomials in ascending coefficient order.

use crate::linalg::{eigenvalues, CMat};
use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    /// `coeffs[k]` multiplies `z^k`.
    pub coeffs: Vec<C64>,
}

impl Poly {
    pub fn new(coeffs: Vec<C64>) -> Self {
        let mut p = Self { coeffs };
        p.trim_exact();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C64) -> Self {
        Self::new(vec![c])
    }

    /// `lead · ∏ (z − r)`.
    pub fn from_roots(lead: C64, roots: &[C64]) -> Self {
        let mut coeffs = vec![lead];
        for &r in roots {
            let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &a) in coeffs.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    fn trim_exact(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if *c == C64::new(0.0, 0.0)) {
            self.coeffs.pop();
        }
    }

    /// Drops leading coefficients below `rel` times the largest one.
    pub fn trimmed(&self, rel: f64) -> Self {
        let big = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut coeffs = self.coeffs.clone();
        while matches!(coeffs.last(), Some(c) if c.norm() <= rel * big) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> C64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &a)| a * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p#(z) = conj(p(conj z))`: conjugate coefficients.
    pub fn sharp(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.conj()).collect())
    }

    /// Synthetic division by `(z − r)`: returns quotient and remainder `p(r)`.
    pub fn div_linear(&self, r: C64) -> (Poly, C64) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::zero(), C64::new(0.0, 0.0));
        }
        let mut q = vec![C64::new(0.0, 0.0); n - 1];
        let mut acc = C64::new(0.0, 0.0);
        for k in (0..n).rev() {
            acc = acc * r + self.coeffs[k];
            if k > 0 {
                q[k - 1] = acc;
            }
        }
        (Self::new(q), acc)
    }

    /// Roots via companion-matrix eigenvalues, each polished by Newton steps.
    /// Leading coefficients below `1e-14` of the largest are dropped first.
    pub fn roots(&self) -> Vec<C64> {
        let p = self.trimmed(1e-14);
        let n = match p.degree() {
            None | Some(0) => return Vec::new(),
            Some(n) => n,
        };
        let lead = p.lead();
        let mut comp = CMat::zeros(n, n);
        for k in 0..n {
            comp[(0, k)] = -p.coeffs[n - 1 - k] / lead;
            if k + 1 < n {
                comp[(k + 1, k)] = C64::new(1.0, 0.0);
            }
        }
        let dp = p.derivative();
        eigenvalues(&comp)
            .into_iter()
            .map(|z0| polish(&p, &dp, z0))
            .collect()
    }
}

fn polish(p: &Poly, dp: &Poly, z0: C64) -> C64 {
    let mut z = z0;
    let mut best = (p.eval(z).norm(), z);
    for _ in 0..8 {
        let d = dp.eval(z);
        if d.norm() == 0.0 {
            break;
        }
        z -= p.eval(z) / d;
        let r = p.eval(z).norm();
        if !r.is_finite() {
            break;
        }
        if r < best.0 {
            best = (r, z);
        }
    }
    best.1
}

/// Pairs two root multisets greedily by distance; returns the largest gap,
/// or `None` when the sizes differ.
pub fn match_multisets(a: &[C64], b: &[C64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut left: Vec<C64> = b.to_vec();
    let mut worst = 0.0f64;
    for &x in a {
        let (idx, d) = left
            .iter()
            .enumerate()
            .map(|(i, y)| (i, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))?;
        worst = worst.max(d);
        left.swap_remove(idx);
    }
    Some(worst)
}
