//! Point spectrum of relations through the pencil `G − ζF`.
//!
//! For an `n`-dimensional relation with basis blocks `F, G` the point
//! spectrum is the set where `G − ζF` drops rank; `mul T` shows up as the
//! eigenvalue at infinity.  Eigenvalues are computed by a spectral
//! transformation: with `B = G − μF` invertible, `R = F B⁻¹` has eigenvalue
//! `λ` exactly when `ζ = μ + 1/λ`, and `λ = 0` is the infinite eigenvalue.

use crate::error::{RelError, Result};
use crate::linalg::{eigenvalues as matrix_eigenvalues, singular_values, CMat};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenvalue {
    pub value: C64,
    pub geometric: usize,
    pub algebraic: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    /// Sorted by real part, then imaginary part.
    pub finite_eigenvalues: Vec<Eigenvalue>,
    /// `dim mul T`.
    pub infinite_multiplicity: usize,
    /// Algebraic multiplicity of the eigenvalue at infinity (≥ `dim mul T`).
    pub infinite_algebraic: usize,
    pub regular_set_nonempty: bool,
    pub is_square_pencil: bool,
}

impl SpectrumReport {
    pub fn values(&self) -> Vec<C64> {
        self.finite_eigenvalues.iter().map(|e| e.value).collect()
    }

    /// Finite eigenvalues repeated by algebraic multiplicity.
    pub fn multiset(&self) -> Vec<C64> {
        self.finite_eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.algebraic))
            .collect()
    }

    pub fn algebraic_total(&self) -> usize {
        self.finite_eigenvalues.iter().map(|e| e.algebraic).sum::<usize>() + self.infinite_algebraic
    }
}

/// `ker(T − ζ) = {0}`.
pub fn in_quasi_regular(t: &LinearRelation, zeta: C64) -> bool {
    kernel_basis(t, zeta).is_zero()
}

/// Quasi-regular and `ran(T − ζ) = C^n`.
pub fn in_regular(t: &LinearRelation, zeta: C64) -> bool {
    in_quasi_regular(t, zeta) && t.shift(zeta).ran().is_full()
}

/// `ker(T − ζ)` as a subspace of C^n.
pub fn kernel_basis(t: &LinearRelation, zeta: C64) -> Subspace {
    t.shift(zeta).ker()
}

/// Shift candidates for the spectral transformation: spread over several
/// circles at irrational angles, so at most `n` of them can be eigenvalues.
fn shift_candidates() -> impl Iterator<Item = C64> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..32).map(move |k| {
        let r = [0.7, 1.3, 2.9, 0.31][k % 4];
        C64::from_polar(r, 0.37 + golden * k as f64)
    })
}

fn best_shift(f: &CMat, g: &CMat) -> Option<(C64, f64)> {
    shift_candidates()
        .map(|mu| {
            let s = singular_values(&(g - f * mu));
            let smin = s.last().copied().unwrap_or(0.0);
            (mu, smin / (1.0 + mu.norm()))
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

/// Generalized eigenvalues of the square pencil `(G, F)`; `None` marks an
/// infinite eigenvalue.
fn pencil_values(f: &CMat, g: &CMat, inf_tol: f64) -> Result<Vec<Option<C64>>> {
    let n = f.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mu, score) = best_shift(f, g).ok_or(RelError::SingularPencil)?;
    if score <= 1e-11 {
        return Err(RelError::SingularPencil);
    }
    let b = g - f * mu;
    let binv = b.try_inverse().ok_or(RelError::SingularPencil)?;
    let r = f * binv;
    Ok(matrix_eigenvalues(&r)
        .into_iter()
        .map(|lambda| {
            let alpha = C64::new(1.0, 0.0) + mu * lambda;
            if lambda.norm() <= inf_tol * (alpha.norm() + lambda.norm()) {
                None
            } else {
                Some(mu + lambda.inv())
            }
        })
        .collect())
}

pub fn eigenvalues(t: &LinearRelation) -> Result<SpectrumReport> {
    let n = t.n();
    if t.dim() != n {
        return Err(RelError::NonSquareRelation { dim: t.dim(), n });
    }
    let tol = *t.tol();
    let f = t.f_block();
    let g = t.g_block();
    let mul_dim = t.mul().dim();
    let raw = pencil_values(&f, &g, tol.eq_tol)?;

    let mut finite: Vec<C64> = raw.iter().flatten().copied().collect();
    let mut inf_count = raw.len() - finite.len();
    // the eigenvalue at infinity has at least dim mul T copies; promote the
    // largest finite values if roundoff pushed some of them off infinity
    while inf_count < mul_dim && !finite.is_empty() {
        let idx = finite
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .expect("nonempty");
        finite.swap_remove(idx);
        inf_count += 1;
    }

    let merge = 10.0 * tol.eq_tol;
    let mut clusters: Vec<(C64, usize)> = Vec::new();
    finite.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for z in finite {
        match clusters
            .iter_mut()
            .find(|(c, k)| ((*c / *k as f64) - z).norm() <= merge * (1.0 + z.norm()))
        {
            Some(cl) => {
                cl.0 += z;
                cl.1 += 1;
            }
            None => clusters.push((z, 1)),
        }
    }

    let mut finite_eigenvalues: Vec<Eigenvalue> = clusters
        .into_iter()
        .map(|(sum, k)| {
            let value = sum / k as f64;
            Eigenvalue {
                value,
                geometric: geometric_multiplicity(&f, &g, value).clamp(1, k),
                algebraic: k,
            }
        })
        .collect();
    finite_eigenvalues.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });

    Ok(SpectrumReport {
        finite_eigenvalues,
        infinite_multiplicity: mul_dim,
        infinite_algebraic: inf_count,
        regular_set_nonempty: true,
        is_square_pencil: true,
    })
}

/// Rank drop of `G − ζF` at an approximate eigenvalue.
fn geometric_multiplicity(f: &CMat, g: &CMat, zeta: C64) -> usize {
    let s = singular_values(&(g - f * zeta));
    let cut = 1e-7 * (1.0 + zeta.norm());
    s.iter().filter(|&&x| x <= cut).count()
}
