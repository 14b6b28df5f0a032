//! Truncated Jacobi matrices, their restriction to `{δ₁}^⊥` and the
//! one-parameter family of rank-one perturbations at the first entry.

use crate::error::{RelError, Result};
use crate::extensions::{extend_by_contraction, ExtensionParameter};
use crate::linalg::{singular_values, CMat, CVec};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::tolerance::ToleranceProfile;
use crate::C64;

/// Boundary parameter: a complex number or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tau {
    Finite(C64),
    Infinity,
}

impl From<C64> for Tau {
    fn from(t: C64) -> Self {
        Tau::Finite(t)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiModel {
    /// Off-diagonal entries `b_1, …`; at least `n − 1` of them, all positive.
    pub b: Vec<f64>,
    /// Diagonal entries `q_1, …`; at least `n` of them.
    pub q: Vec<f64>,
    pub n: usize,
    pub tol: ToleranceProfile,
}

impl JacobiModel {
    pub fn new(b: Vec<f64>, q: Vec<f64>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(RelError::InvalidModel("truncation size must be positive".into()));
        }
        if b.len() + 1 < n {
            return Err(RelError::InvalidModel(format!(
                "need at least {} off-diagonal entries, got {}",
                n - 1,
                b.len()
            )));
        }
        if q.len() < n {
            return Err(RelError::InvalidModel(format!(
                "need at least {n} diagonal entries, got {}",
                q.len()
            )));
        }
        if let Some(bad) = b.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
            return Err(RelError::InvalidModel(format!("off-diagonal entry {bad} is not positive")));
        }
        if let Some(bad) = q.iter().find(|x| !x.is_finite()) {
            return Err(RelError::InvalidModel(format!("diagonal entry {bad} is not finite")));
        }
        Ok(Self {
            b,
            q,
            n,
            tol: ToleranceProfile::default(),
        })
    }

    /// `b ≡ 1`, `q ≡ 0`.
    pub fn free(n: usize) -> Result<Self> {
        Self::new(vec![1.0; n.saturating_sub(1)], vec![0.0; n], n)
    }

    pub fn with_tol(mut self, tol: ToleranceProfile) -> Self {
        self.tol = tol;
        self
    }

    /// Model with the first row and column removed.
    pub fn shifted(&self) -> Result<Self> {
        Self::new(self.b[1.min(self.b.len())..].to_vec(), self.q[1..].to_vec(), self.n - 1)
            .map(|m| m.with_tol(self.tol))
    }

    /// The `n × n` tridiagonal matrix.
    pub fn matrix(&self) -> CMat {
        let n = self.n;
        let mut j = CMat::zeros(n, n);
        for k in 0..n {
            j[(k, k)] = C64::new(self.q[k], 0.0);
            if k + 1 < n {
                j[(k, k + 1)] = C64::new(self.b[k], 0.0);
                j[(k + 1, k)] = C64::new(self.b[k], 0.0);
            }
        }
        j
    }

    fn delta1(&self) -> CVec {
        let mut d = CVec::zeros(self.n);
        d[0] = C64::new(1.0, 0.0);
        d
    }

    pub fn jacobi_relation(&self) -> LinearRelation {
        LinearRelation::graph(&self.matrix(), self.tol).expect("square")
    }

    /// `{(f, J f) : f_1 = 0}`.
    pub fn restricted_b(&self) -> LinearRelation {
        let n = self.n;
        let dom = CMat::identity(n, n).columns(1, n - 1).into_owned();
        LinearRelation::from_blocks(&dom, &(self.matrix() * &dom), self.tol).expect("shapes")
    }

    /// Graph of `J + τ δ₁δ₁ᴴ`.
    pub fn j_tau(&self, tau: C64) -> LinearRelation {
        let mut m = self.matrix();
        m[(0, 0)] += tau;
        LinearRelation::graph(&m, self.tol).expect("square")
    }

    /// `B ∔ span{(0, δ₁)}`.
    pub fn j_infinity(&self) -> LinearRelation {
        let vertical = LinearRelation::multivalued(
            &Subspace::span(self.n, &[self.delta1()], self.tol).expect("dimension"),
        );
        self.restricted_b()
            .direct_sum(&vertical)
            .expect("δ₁ is not in the domain of B")
    }

    pub fn j(&self, tau: Tau) -> LinearRelation {
        match tau {
            Tau::Finite(t) => self.j_tau(t),
            Tau::Infinity => self.j_infinity(),
        }
    }

    fn recurrence(&self, z: C64, k: usize, first: C64, second: C64) -> Result<C64> {
        if k == 0 || k > self.n {
            return Err(RelError::IndexOutOfRange {
                index: k,
                max: self.n,
            });
        }
        // b_k φ_{k+1} = (z − q_k) φ_k − b_{k−1} φ_{k−1}
        if k == 1 {
            return Ok(first);
        }
        let (mut cur, mut next) = (first, second);
        for j in 2..k {
            let after = ((z - self.q[j - 1]) * next - cur * self.b[j - 2]) / self.b[j - 1];
            cur = next;
            next = after;
        }
        Ok(next)
    }

    /// `π_k(z)` with `π_1 = 1`.
    pub fn poly_first_kind(&self, z: C64, k: usize) -> Result<C64> {
        let one = C64::new(1.0, 0.0);
        let second = if self.n >= 2 {
            (z - self.q[0]) / self.b[0]
        } else {
            C64::new(0.0, 0.0)
        };
        self.recurrence(z, k, one, second)
    }

    /// `θ_k(z)` with `θ_1 = 0`, `θ_2 = 1/b_1`.
    pub fn poly_second_kind(&self, z: C64, k: usize) -> Result<C64> {
        let second = if self.n >= 2 {
            C64::new(1.0 / self.b[0], 0.0)
        } else {
            C64::new(0.0, 0.0)
        };
        self.recurrence(z, k, C64::new(0.0, 0.0), second)
    }

    /// `ψ(ζ) = (J − ζ)⁻¹ δ₁`.
    pub fn psi_vector(&self, zeta: C64) -> Result<CVec> {
        let shifted = self.matrix() - CMat::identity(self.n, self.n) * zeta;
        let s = singular_values(&shifted);
        if s.last().copied().unwrap_or(0.0) <= self.tol.rank_rel * s[0].max(1.0) {
            return Err(RelError::ZetaIsEigenvalue { zeta });
        }
        shifted
            .lu()
            .solve(&self.delta1())
            .ok_or(RelError::ZetaIsEigenvalue { zeta })
    }

    /// First entry of `ψ(ζ)`.
    pub fn m_finite(&self, zeta: C64) -> Result<C64> {
        Ok(self.psi_vector(zeta)?[0])
    }

    /// Contraction parameter of `J(τ)` as an extension of `B` at ζ.
    pub fn contraction_parameter(&self, tau: Tau, zeta: C64) -> Result<ExtensionParameter> {
        let psi = self.psi_vector(zeta)?;
        let psi_bar = self.psi_vector(zeta.conj())?;
        let beta = beta_tau(tau, psi[0], psi_bar[0])?;
        let u = zeta / zeta.norm();
        let k = beta * u.conj() * (psi_bar.norm() / psi.norm());
        Ok(ExtensionParameter {
            zeta,
            k: CMat::from_element(1, 1, k),
            d_basis: CMat::from_column_slice(self.n, 1, (psi.clone() / C64::new(psi.norm(), 0.0)).as_slice()),
            range_basis: CMat::from_column_slice(
                self.n,
                1,
                (psi_bar.clone() / C64::new(psi_bar.norm(), 0.0)).as_slice(),
            ),
        })
    }

    /// Projector distance between `J(τ)` and the extension of `B` built from
    /// the Möbius-derived contraction at ζ.
    pub fn extension_distance(&self, tau: Tau, zeta: C64) -> Result<f64> {
        let p = self.contraction_parameter(tau, zeta)?;
        let hat = extend_by_contraction(&self.restricted_b(), &p)?;
        hat.distance(&self.j(tau))
    }

    /// Compares the two constructions of `J(τ)` at ζ = i.
    pub fn cross_validate_extension(&self, tau: Tau) -> Result<bool> {
        Ok(self.extension_distance(tau, C64::new(0.0, 1.0))? <= self.tol.eq_tol)
    }
}

/// `β_τ = (1 + τ m) / (1 + τ m̄)`, `β_∞ = m / m̄`.
pub fn beta_tau(tau: Tau, m_val: C64, m_conj_val: C64) -> Result<C64> {
    let (num, den) = match tau {
        Tau::Finite(t) => (C64::new(1.0, 0.0) + t * m_val, C64::new(1.0, 0.0) + t * m_conj_val),
        Tau::Infinity => (m_val, m_conj_val),
    };
    if den.norm() == 0.0 {
        return Err(RelError::DegenerateMobius);
    }
    Ok(num / den)
}
