//! Linear subspaces of C^d held as orthonormal column bases.

use crate::error::{RelError, Result};
use crate::linalg::{hstack, orth, orth_complement, spectral_norm, CMat, CVec};
use crate::tolerance::ToleranceProfile;

/// A subspace of C^d with an orthonormal basis.
///
/// Values are immutable; every operation returns a fresh subspace.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    basis: CMat,
    tol: ToleranceProfile,
}

impl Subspace {
    /// The zero subspace of C^d.
    pub fn zero(d: usize, tol: ToleranceProfile) -> Self {
        Self {
            ambient_dim: d,
            basis: CMat::zeros(d, 0),
            tol,
        }
    }

    /// All of C^d.
    pub fn full(d: usize, tol: ToleranceProfile) -> Self {
        Self {
            ambient_dim: d,
            basis: CMat::identity(d, d),
            tol,
        }
    }

    /// Column span of an arbitrary d x m matrix.
    pub fn from_columns(columns: &CMat, tol: ToleranceProfile) -> Self {
        Self {
            ambient_dim: columns.nrows(),
            basis: orth(columns, tol.rank_rel),
            tol,
        }
    }

    /// Span of a list of vectors, all of length `d`.
    pub fn span(d: usize, vectors: &[CVec], tol: ToleranceProfile) -> Result<Self> {
        for v in vectors {
            if v.len() != d {
                return Err(RelError::DimensionMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        let mut m = CMat::zeros(d, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            m.set_column(j, v);
        }
        Ok(Self::from_columns(&m, tol))
    }

    /// Wraps a matrix whose columns are already orthonormal.
    pub(crate) fn from_orthonormal(basis: CMat, tol: ToleranceProfile) -> Self {
        Self {
            ambient_dim: basis.nrows(),
            basis,
            tol,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &CMat {
        &self.basis
    }

    pub fn tol(&self) -> &ToleranceProfile {
        &self.tol
    }

    pub fn with_tol(mut self, tol: ToleranceProfile) -> Self {
        self.tol = tol;
        self
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(RelError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Orthogonal projector onto the subspace.
    pub fn projector(&self) -> CMat {
        &self.basis * self.basis.adjoint()
    }

    /// Orthogonal complement in C^d.
    pub fn complement(&self) -> Subspace {
        Self {
            ambient_dim: self.ambient_dim,
            basis: orth_complement(&self.basis, self.ambient_dim),
            tol: self.tol,
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        Ok(Self::from_columns(&hstack(&[&self.basis, &other.basis]), self.tol))
    }

    /// Intersection computed as the complement of the sum of complements.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        Ok(self.complement().sum(&other.complement())?.complement())
    }

    /// `self ⊖ other`: the part of `self` orthogonal to `other`.
    pub fn orthogonal_difference(&self, other: &Subspace) -> Result<Subspace> {
        self.intersect(&other.complement())
    }

    /// Spectral-norm distance between the orthogonal projectors.
    pub fn distance(&self, other: &Subspace) -> Result<f64> {
        self.check_same_ambient(other)?;
        if self.dim() != other.dim() {
            return Ok(1.0);
        }
        Ok(spectral_norm(&(self.projector() - other.projector())))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        Ok(self.distance(other)? <= self.tol.eq_tol)
    }

    /// `‖(I - P)v‖ <= eq_tol ‖v‖`.
    pub fn member(&self, v: &CVec) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(RelError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let proj = &self.basis * (self.basis.adjoint() * v);
        Ok((v - proj).norm() <= self.tol.eq_tol * v.norm())
    }

    /// `other ⊆ self` under the membership test.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        let resid = &other.basis - &self.basis * (self.basis.adjoint() * &other.basis);
        Ok(other.dim() == 0 || spectral_norm(&resid) <= self.tol.eq_tol)
    }

    /// Largest |<u, v>| over unit vectors u in self, v in other.
    pub fn overlap(&self, other: &Subspace) -> Result<f64> {
        self.check_same_ambient(other)?;
        Ok(spectral_norm(&(self.basis.adjoint() * &other.basis)))
    }

    pub fn is_orthogonal_to(&self, other: &Subspace) -> Result<bool> {
        Ok(self.overlap(other)? <= self.tol.eq_tol)
    }

    /// Image under a linear map `m` (rows = new ambient dimension).
    pub fn image(&self, m: &CMat) -> Subspace {
        Self::from_columns(&(m * &self.basis), self.tol)
    }

    #[cfg(test)]
    pub(crate) fn rank_with(&self, v: &CVec) -> usize {
        let mut m = CMat::zeros(self.ambient_dim, self.dim() + 1);
        m.columns_mut(0, self.dim()).copy_from(&self.basis);
        m.set_column(self.dim(), v);
        let s = crate::linalg::singular_values(&m);
        crate::linalg::numerical_rank(&s, self.tol.rank_rel)
    }
}
