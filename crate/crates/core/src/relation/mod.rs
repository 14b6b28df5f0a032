//! Linear relations in C^n ⊕ C^n.
//!
//! A relation is a subspace of C^{2n}; an orthonormal basis splits into an
//! f-block `F` (first n rows) and a g-block `G` (last n rows), so every pair
//! in the relation is `(F c, G c)` for a coefficient vector `c`.

mod classify;

pub use classify::{ClassificationReport, Property, Witness};

use crate::error::{RelError, Result};
use crate::linalg::{hstack, null_space, vstack, CMat, CVec};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceProfile;
use crate::C64;

#[derive(Debug, Clone)]
pub struct LinearRelation {
    n: usize,
    space: Subspace,
}

/// Domain, range, kernel and multivalued part of a relation.
#[derive(Debug, Clone)]
pub struct RelationParts {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub mul: Subspace,
}

impl LinearRelation {
    /// Wraps a subspace of C^{2n}.
    pub fn from_subspace(space: Subspace) -> Result<Self> {
        let d = space.ambient_dim();
        if d % 2 != 0 {
            return Err(RelError::DimensionMismatch {
                expected: d + 1,
                found: d,
            });
        }
        Ok(Self { n: d / 2, space })
    }

    /// Span of the columns of `[F; G]`; `f_block` and `g_block` are n x m.
    pub fn from_blocks(f_block: &CMat, g_block: &CMat, tol: ToleranceProfile) -> Result<Self> {
        if f_block.shape() != g_block.shape() {
            return Err(RelError::DimensionMismatch {
                expected: f_block.nrows(),
                found: g_block.nrows(),
            });
        }
        let n = f_block.nrows();
        Ok(Self {
            n,
            space: Subspace::from_columns(&vstack(f_block, g_block), tol),
        })
    }

    /// Span of the stacked pair vectors `(f, g)`.
    pub fn from_pairs(n: usize, pairs: &[(CVec, CVec)], tol: ToleranceProfile) -> Result<Self> {
        let mut f = CMat::zeros(n, pairs.len());
        let mut g = CMat::zeros(n, pairs.len());
        for (j, (fj, gj)) in pairs.iter().enumerate() {
            for v in [fj, gj] {
                if v.len() != n {
                    return Err(RelError::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
            }
            f.set_column(j, fj);
            g.set_column(j, gj);
        }
        Self::from_blocks(&f, &g, tol)
    }

    /// `{(f, A f)}`.
    pub fn graph(a: &CMat, tol: ToleranceProfile) -> Result<Self> {
        if !a.is_square() {
            return Err(RelError::DimensionMismatch {
                expected: a.nrows(),
                found: a.ncols(),
            });
        }
        let n = a.nrows();
        Self::from_blocks(&CMat::identity(n, n), a, tol)
    }

    /// `{(f, z f)}`.
    pub fn scalar_graph(n: usize, z: C64, tol: ToleranceProfile) -> Self {
        let id = CMat::identity(n, n);
        Self::from_blocks(&id, &(&id * z), tol).expect("square blocks")
    }

    /// The relation {(0, 0)} in C^n ⊕ C^n.
    pub fn zero(n: usize, tol: ToleranceProfile) -> Self {
        Self {
            n,
            space: Subspace::zero(2 * n, tol),
        }
    }

    /// All of C^n ⊕ C^n.
    pub fn full(n: usize, tol: ToleranceProfile) -> Self {
        Self {
            n,
            space: Subspace::full(2 * n, tol),
        }
    }

    /// `{(0, g) : g ∈ m}`.
    pub fn multivalued(m: &Subspace) -> Self {
        let n = m.ambient_dim();
        let tol = *m.tol();
        Self::from_blocks(&CMat::zeros(n, m.dim()), m.basis(), tol).expect("matching blocks")
    }

    /// `{(f, 0) : f ∈ s} ` lifted into the first component.
    pub fn on_first(s: &Subspace) -> Self {
        let n = s.ambient_dim();
        Self::from_blocks(s.basis(), &CMat::zeros(n, s.dim()), *s.tol()).expect("matching blocks")
    }

    /// `s ⊕ t` as a product subspace of C^{2n}.
    pub fn product(s: &Subspace, t: &Subspace) -> Result<Self> {
        if s.ambient_dim() != t.ambient_dim() {
            return Err(RelError::DimensionMismatch {
                expected: s.ambient_dim(),
                found: t.ambient_dim(),
            });
        }
        let n = s.ambient_dim();
        let f = hstack(&[s.basis(), &CMat::zeros(n, t.dim())]);
        let g = hstack(&[&CMat::zeros(n, s.dim()), t.basis()]);
        Self::from_blocks(&f, &g, *s.tol())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn tol(&self) -> &ToleranceProfile {
        self.space.tol()
    }

    pub fn with_tol(self, tol: ToleranceProfile) -> Self {
        Self {
            n: self.n,
            space: self.space.with_tol(tol),
        }
    }

    pub fn f_block(&self) -> CMat {
        self.space.basis().rows(0, self.n).into_owned()
    }

    pub fn g_block(&self) -> CMat {
        self.space.basis().rows(self.n, self.n).into_owned()
    }

    /// Pair `(F c, G c)` for a coefficient vector.
    pub fn pair(&self, coeffs: &CVec) -> (CVec, CVec) {
        (self.f_block() * coeffs, self.g_block() * coeffs)
    }

    fn map_blocks(&self, f: impl FnOnce(&CMat, &CMat) -> (CMat, CMat)) -> Self {
        let (nf, ng) = f(&self.f_block(), &self.g_block());
        Self::from_blocks(&nf, &ng, *self.tol()).expect("block shapes preserved")
    }

    fn check_same_n(&self, other: &LinearRelation) -> Result<()> {
        if self.n != other.n {
            return Err(RelError::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn contains_pair(&self, f: &CVec, g: &CVec) -> Result<bool> {
        let mut v = CVec::zeros(2 * self.n);
        if f.len() != self.n || g.len() != self.n {
            return Err(RelError::DimensionMismatch {
                expected: self.n,
                found: f.len().max(g.len()),
            });
        }
        v.rows_mut(0, self.n).copy_from(f);
        v.rows_mut(self.n, self.n).copy_from(g);
        self.space.member(&v)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &LinearRelation) -> Result<bool> {
        self.check_same_n(other)?;
        self.space.contains(&other.space)
    }

    pub fn equals(&self, other: &LinearRelation) -> Result<bool> {
        self.check_same_n(other)?;
        self.space.equals(&other.space)
    }

    pub fn distance(&self, other: &LinearRelation) -> Result<f64> {
        self.check_same_n(other)?;
        self.space.distance(&other.space)
    }

    pub fn is_orthogonal_to(&self, other: &LinearRelation) -> Result<bool> {
        self.check_same_n(other)?;
        self.space.is_orthogonal_to(&other.space)
    }

    pub fn parts(&self) -> RelationParts {
        let tol = *self.tol();
        let f = self.f_block();
        let g = self.g_block();
        let ker_coeffs = null_space(&g, tol.rank_rel);
        let mul_coeffs = null_space(&f, tol.rank_rel);
        RelationParts {
            dom: Subspace::from_columns(&f, tol),
            ran: Subspace::from_columns(&g, tol),
            ker: Subspace::from_columns(&(&f * ker_coeffs), tol),
            mul: Subspace::from_columns(&(&g * mul_coeffs), tol),
        }
    }

    pub fn dom(&self) -> Subspace {
        Subspace::from_columns(&self.f_block(), *self.tol())
    }

    pub fn ran(&self) -> Subspace {
        Subspace::from_columns(&self.g_block(), *self.tol())
    }

    pub fn ker(&self) -> Subspace {
        self.parts().ker
    }

    pub fn mul(&self) -> Subspace {
        self.parts().mul
    }

    pub fn is_operator(&self) -> bool {
        self.mul().is_zero()
    }

    /// `T^{-1} = {(g, f)}`.
    pub fn inverse(&self) -> Self {
        self.map_blocks(|f, g| (g.clone(), f.clone()))
    }

    /// The flip `(f, g) ↦ (g, f)`; identical to `inverse`.
    pub fn flip_u(&self) -> Self {
        self.inverse()
    }

    /// The rotation `(f, g) ↦ (-g, f)`.
    pub fn rotate_w(&self) -> Self {
        self.map_blocks(|f, g| (-g, f.clone()))
    }

    /// `T* = (W T)^⊥`.
    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            space: self.rotate_w().space.complement(),
        }
    }

    /// The orthogonal complement of the relation inside C^{2n}.
    pub fn perp(&self) -> Self {
        Self {
            n: self.n,
            space: self.space.complement(),
        }
    }

    /// `z T = {(f, z g)}`.
    pub fn scale(&self, z: C64) -> Self {
        self.map_blocks(|f, g| (f.clone(), g * z))
    }

    /// Multiplies both components: `{(z f, z g)}`.
    #[cfg(test)]
    pub(crate) fn scale_pairs(&self, z: C64) -> Self {
        self.map_blocks(|f, g| (f * z, g * z))
    }

    /// `T - z I = {(f, g - z f)}`.
    pub fn shift(&self, z: C64) -> Self {
        self.map_blocks(|f, g| (f.clone(), g - f * z))
    }

    /// `T + S = {(f, g + h) : (f, g) ∈ T, (f, h) ∈ S}`.
    pub fn add(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        let tol = *self.tol();
        let (ft, gt) = (self.f_block(), self.g_block());
        let (fs, gs) = (other.f_block(), other.g_block());
        // coefficient pairs (c, d) with F_T c = F_S d
        let coupled = null_space(&hstack(&[&ft, &(-&fs)]), tol.rank_rel);
        let c = coupled.rows(0, ft.ncols()).into_owned();
        let d = coupled.rows(ft.ncols(), fs.ncols()).into_owned();
        Self::from_blocks(&(&ft * &c), &(&gt * &c + &gs * &d), tol)
    }

    /// `S T = {(f, k) : (f, g) ∈ T, (g, k) ∈ S}` with `self = S`, `inner = T`.
    pub fn compose(&self, inner: &LinearRelation) -> Result<Self> {
        self.check_same_n(inner)?;
        let tol = *self.tol();
        let (ft, gt) = (inner.f_block(), inner.g_block());
        let (fs, gs) = (self.f_block(), self.g_block());
        let coupled = null_space(&hstack(&[&gt, &(-&fs)]), tol.rank_rel);
        let c = coupled.rows(0, ft.ncols()).into_owned();
        let d = coupled.rows(ft.ncols(), fs.ncols()).into_owned();
        Self::from_blocks(&(&ft * &c), &(&gs * &d), tol)
    }

    /// Subspace sum of two relations without any intersection check.
    pub fn span_with(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(Self {
            n: self.n,
            space: self.space.sum(&other.space)?,
        })
    }

    /// `T ∔ S`; fails when the relations intersect nontrivially.
    pub fn direct_sum(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        let int = self.space.intersect(&other.space)?;
        if !int.is_zero() {
            return Err(RelError::NonTrivialIntersection { dim: int.dim() });
        }
        let sum = self.space.sum(&other.space)?;
        if sum.dim() != self.dim() + other.dim() {
            return Err(RelError::NonTrivialIntersection {
                dim: self.dim() + other.dim() - sum.dim(),
            });
        }
        Ok(Self {
            n: self.n,
            space: sum,
        })
    }

    /// `T ⊕ S`; fails unless the relations are orthogonal in C^{2n}.
    pub fn orthogonal_sum(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        if !self.space.is_orthogonal_to(&other.space)? {
            return Err(RelError::NotOrthogonal);
        }
        self.span_with(other)
    }

    pub fn intersect(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(Self {
            n: self.n,
            space: self.space.intersect(&other.space)?,
        })
    }

    /// `T ⊖ S`.
    pub fn orthogonal_difference(&self, other: &LinearRelation) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(Self {
            n: self.n,
            space: self.space.orthogonal_difference(&other.space)?,
        })
    }

    /// `T_∞ = T ∩ ({0} ⊕ C^n)`.
    pub fn multivalued_part(&self) -> Self {
        let vertical = Self::multivalued(&Subspace::full(self.n, *self.tol()));
        self.intersect(&vertical).expect("same n")
    }

    /// `T_op = T ⊖ T_∞`.
    pub fn operator_part(&self) -> Self {
        self.orthogonal_difference(&self.multivalued_part())
            .expect("same n")
    }

    /// `T_S = T ∩ ((mul S)^⊥ ⊕ (mul S)^⊥)`, regarded as a relation in C^n.
    pub fn reduce(&self, by: &LinearRelation) -> Result<Self> {
        self.check_same_n(by)?;
        let perp = by.mul().complement();
        self.intersect(&Self::product(&perp, &perp)?)
    }

    /// `N_z(T) = T ∩ {(f, z f)}`.
    pub fn deficiency_space(&self, z: C64) -> Self {
        self.intersect(&Self::scalar_graph(self.n, z, *self.tol()))
            .expect("same n")
    }

    /// `η_z(T) = n - dim ran(T - zI)`.
    pub fn deficiency_index(&self, z: C64) -> usize {
        self.n - self.shift(z).ran().dim()
    }

    /// Matrix of an operator relation acting on its domain (zero on dom^⊥).
    pub fn operator_matrix(&self) -> Result<CMat> {
        let mul = self.mul();
        if !mul.is_zero() {
            return Err(RelError::NotAnOperator { mul_dim: mul.dim() });
        }
        let f = self.f_block();
        let g = self.g_block();
        Ok(g * crate::linalg::pinv(&f, self.tol().rank_rel))
    }

    /// Largest singular value of the operator matrix.
    pub fn operator_norm(&self) -> Result<f64> {
        Ok(crate::linalg::spectral_norm(&self.operator_matrix()?))
    }

    /// Smallest c with `‖g‖ <= c ‖(f, h)‖` for `(f, h) ∈ t`, `(f, g) ∈ self`.
    pub fn relative_bound(&self, t: &LinearRelation) -> Result<f64> {
        self.check_same_n(t)?;
        let s_mat = self.operator_matrix()?;
        if !self.dom().contains(&t.dom())? {
            return Err(RelError::DomainNotContained);
        }
        Ok(crate::linalg::spectral_norm(&(s_mat * t.f_block())))
    }
}
