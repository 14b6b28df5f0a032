//! Dissipative extensions of symmetric relations.
//!
//! A closed dissipative extension of a symmetric `A` is determined by a
//! subspace `D ⊆ ker(A* − ζ)` and a contraction `K : D → ker(A* − ζ̄)`:
//! each `v ∈ D` with image `w` contributes the pair
//! `(u w − v, |ζ| w − ζ v)`, `u = ζ/|ζ|`, and the extension is the direct sum
//! of `A` with these pairs.

use crate::error::{RelError, Result};
use crate::linalg::{spectral_norm, CMat};
use crate::relation::LinearRelation;
use crate::spectra::in_quasi_regular;
use crate::subspace::Subspace;
use crate::C64;

/// Contraction data of an extension.
#[derive(Debug, Clone)]
pub struct ExtensionParameter {
    pub zeta: C64,
    /// `p × q`: coordinates in `d_basis` to coordinates in `range_basis`.
    pub k: CMat,
    /// Orthonormal basis (`n × q`) of the domain `D ⊆ ker(A* − ζ)`.
    pub d_basis: CMat,
    /// Orthonormal basis (`n × p`) of `ker(A* − ζ̄)`.
    pub range_basis: CMat,
}

impl ExtensionParameter {
    /// Parameter on the whole of `ker(A* − ζ)`.
    pub fn on_full_kernel(a: &LinearRelation, zeta: C64, k: CMat) -> Self {
        let d = deficiency_kernel(a, zeta);
        let r = deficiency_kernel(a, zeta.conj());
        Self {
            zeta,
            k,
            d_basis: d.basis().clone(),
            range_basis: r.basis().clone(),
        }
    }

    /// Parameter on a subspace of `ker(A* − ζ)` given by `coords`
    /// (columns are coordinates in the kernel's own basis).
    pub fn on_subspace(a: &LinearRelation, zeta: C64, coords: &CMat, k: CMat) -> Self {
        let d = deficiency_kernel(a, zeta);
        let sub = Subspace::from_columns(&(d.basis() * coords), *a.tol());
        let r = deficiency_kernel(a, zeta.conj());
        Self {
            zeta,
            k,
            d_basis: sub.basis().clone(),
            range_basis: r.basis().clone(),
        }
    }

    pub fn is_isometric(&self, tol: f64) -> bool {
        let q = self.k.ncols();
        spectral_norm(&(self.k.adjoint() * &self.k - CMat::identity(q, q))) <= tol
    }
}

/// `ker(A* − z) ⊆ C^n`.
pub fn deficiency_kernel(a: &LinearRelation, z: C64) -> Subspace {
    a.adjoint().shift(z).ker()
}

/// The three summands of `A* = A ∔ N_ζ̄(A*) ∔ N_ζ(A*)`.
#[derive(Debug, Clone)]
pub struct VonNeumannDecomposition {
    pub a: LinearRelation,
    /// `N_ζ̄(A*)`.
    pub n_minus: LinearRelation,
    /// `N_ζ(A*)`.
    pub n_plus: LinearRelation,
    pub zeta: C64,
    pub is_orthogonal: bool,
}

impl VonNeumannDecomposition {
    pub fn sum(&self) -> Result<LinearRelation> {
        self.a.direct_sum(&self.n_minus)?.direct_sum(&self.n_plus)
    }
}

fn require_symmetric(a: &LinearRelation) -> Result<()> {
    if a.is_symmetric() {
        Ok(())
    } else {
        Err(RelError::NotSymmetric)
    }
}

fn require_nonreal(zeta: C64) -> Result<()> {
    if zeta.im == 0.0 {
        Err(RelError::RealPoint { zeta })
    } else {
        Ok(())
    }
}

pub fn von_neumann_decompose(a: &LinearRelation, zeta: C64) -> Result<VonNeumannDecomposition> {
    require_symmetric(a)?;
    require_nonreal(zeta)?;
    let adj = a.adjoint();
    let n_minus = adj.deficiency_space(zeta.conj());
    let n_plus = adj.deficiency_space(zeta);
    let is_orthogonal = a.is_orthogonal_to(&n_minus)?
        && a.is_orthogonal_to(&n_plus)?
        && n_minus.is_orthogonal_to(&n_plus)?;
    let dec = VonNeumannDecomposition {
        a: a.clone(),
        n_minus,
        n_plus,
        zeta,
        is_orthogonal,
    };
    if !dec.sum()?.equals(&adj)? {
        return Err(RelError::IndexMismatch {
            detail: "deficiency summands do not fill the adjoint".into(),
        });
    }
    Ok(dec)
}

/// `Â = A ∔ {(u w − v, |ζ| w − ζ v) : v ∈ D, w = K v}`.
pub fn extend_by_contraction(a: &LinearRelation, p: &ExtensionParameter) -> Result<LinearRelation> {
    require_symmetric(a)?;
    require_nonreal(p.zeta)?;
    let tol = *a.tol();
    let n = a.n();
    let (q, pdim) = (p.d_basis.ncols(), p.range_basis.ncols());
    if p.d_basis.nrows() != n || p.range_basis.nrows() != n {
        return Err(RelError::DimensionMismatch {
            expected: n,
            found: p.d_basis.nrows().max(p.range_basis.nrows()),
        });
    }
    if p.k.shape() != (pdim, q) {
        return Err(RelError::ParameterShape {
            rows: p.k.nrows(),
            cols: p.k.ncols(),
            expected_rows: pdim,
            expected_cols: q,
        });
    }
    let norm = spectral_norm(&p.k);
    if norm > 1.0 + tol.psd_abs {
        return Err(RelError::NotAContraction { norm });
    }
    if p.zeta.im < 0.0 && !p.is_isometric(tol.eq_tol.max(tol.psd_abs)) {
        return Err(RelError::LowerHalfPlaneRequiresIsometry);
    }
    let dom_space = deficiency_kernel(a, p.zeta);
    for (j, col) in p.d_basis.column_iter().enumerate() {
        if !dom_space.member(&col.into_owned())? {
            return Err(RelError::DomainNotInDeficiencySpace { column: j });
        }
    }
    let ran_space = deficiency_kernel(a, p.zeta.conj());
    for (j, col) in p.range_basis.column_iter().enumerate() {
        if !ran_space.member(&col.into_owned())? {
            return Err(RelError::RangeNotInDeficiencySpace { column: j });
        }
    }

    let modulus = p.zeta.norm();
    let u = p.zeta / modulus;
    let v = &p.d_basis;
    let w = &p.range_basis * &p.k;
    let f = &w * u - v;
    let g = &w * C64::new(modulus, 0.0) - v * p.zeta;
    let added = LinearRelation::from_blocks(&f, &g, tol)?;
    a.direct_sum(&added)
}

/// Recovers `D` and `K` from an extension `A ⊆ Â`.
pub fn extension_parameter(
    a: &LinearRelation,
    a_hat: &LinearRelation,
    zeta: C64,
) -> Result<ExtensionParameter> {
    if !a_hat.contains(a)? {
        return Err(RelError::NotAnExtension);
    }
    require_symmetric(a)?;
    require_nonreal(zeta)?;
    if !a_hat.is_dissipative() {
        return Err(RelError::NotDissipative);
    }
    let modulus = zeta.norm();
    let u = zeta / modulus;
    let shrink = C64::new(1.0 / modulus, 0.0);
    let za = crate::transforms::z_transform(&a.scale(shrink), u);
    let zh = crate::transforms::z_transform(&a_hat.scale(shrink), u);
    // pairs of W are proportional to (v, K v)
    let w = zh.orthogonal_difference(&za)?;
    let m = w.operator_matrix()?;
    let d_basis = w.dom().basis().clone();
    let range_basis = deficiency_kernel(a, zeta.conj()).basis().clone();
    let k = range_basis.adjoint() * m * &d_basis;
    Ok(ExtensionParameter {
        zeta,
        k,
        d_basis,
        range_basis,
    })
}

/// `A ∔ N_ζ(A*)` for ζ in the open upper half-plane.
pub fn maximal_dissipative_extension(a: &LinearRelation, zeta: C64) -> Result<LinearRelation> {
    require_symmetric(a)?;
    if zeta.im <= 0.0 {
        return Err(RelError::RealPoint { zeta });
    }
    a.direct_sum(&a.adjoint().deficiency_space(zeta))
}

/// `A ∔ N_α(A*)` for a real quasi-regular α; requires equal indices.
pub fn selfadjoint_extension_at(a: &LinearRelation, alpha: f64) -> Result<LinearRelation> {
    require_symmetric(a)?;
    let x = C64::new(alpha, 0.0);
    if !in_quasi_regular(a, x) {
        return Err(RelError::AlphaNotQuasiRegular { alpha });
    }
    let plus = a.deficiency_index(C64::new(0.0, 1.0));
    let minus = a.deficiency_index(C64::new(0.0, -1.0));
    if plus != minus {
        return Err(RelError::IndicesUnequal { plus, minus });
    }
    a.direct_sum(&a.adjoint().deficiency_space(x))
}

fn contraction_violation(v: &LinearRelation) -> Option<f64> {
    let rep = v.classify();
    if rep.is_contraction {
        None
    } else {
        Some(
            crate::linalg::hermitian_min_eig(&v.contraction_form())
                .map(|(x, _)| x)
                .unwrap_or(0.0),
        )
    }
}

fn require_contraction(v: &LinearRelation) -> Result<()> {
    match contraction_violation(v) {
        None => Ok(()),
        Some(_) => Err(RelError::NotAContraction {
            norm: v.operator_norm().unwrap_or(f64::INFINITY),
        }),
    }
}

/// `V ⊕ W` for orthogonal contractions, checked to be a contraction.
pub fn contractive_join(v: &LinearRelation, w: &LinearRelation) -> Result<LinearRelation> {
    require_contraction(v)?;
    require_contraction(w)?;
    if !v.is_orthogonal_to(w)? {
        return Err(RelError::NotOrthogonal);
    }
    if v.is_isometry()
        && !(v.dom().is_orthogonal_to(&w.dom())? && v.ran().is_orthogonal_to(&w.ran())?)
    {
        return Err(RelError::NotOrthogonal);
    }
    let joined = v.orthogonal_sum(w)?;
    match contraction_violation(&joined) {
        None => Ok(joined),
        Some(value) => Err(RelError::JoinNotContractive { value }),
    }
}

/// `η_e(V) = n − dim dom V` for a contraction.
pub fn eta_e(v: &LinearRelation) -> Result<usize> {
    require_contraction(v)?;
    Ok(v.n() - v.dom().dim())
}

/// `(η₋(A), η₋(Â), dim Â − dim A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexBudget {
    pub eta_a: usize,
    pub eta_hat: usize,
    pub quotient_dim: usize,
}

impl IndexBudget {
    /// `η₋(A) = η₋(Â) + dim[Â/A]`.
    pub fn holds(&self) -> bool {
        self.eta_a == self.eta_hat + self.quotient_dim
    }
}

pub fn index_budget(a: &LinearRelation, a_hat: &LinearRelation) -> Result<IndexBudget> {
    if !a_hat.contains(a)? {
        return Err(RelError::NotAnExtension);
    }
    let lower = C64::new(0.0, -1.0);
    Ok(IndexBudget {
        eta_a: a.deficiency_index(lower),
        eta_hat: a_hat.deficiency_index(lower),
        quotient_dim: a_hat.dim() - a.dim(),
    })
}
