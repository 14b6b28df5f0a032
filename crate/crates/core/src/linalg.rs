//! Dense complex linear-algebra helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen};

use crate::tolerance::ZERO_FLOOR;
use crate::C64;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

#[cfg(test)]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Thin SVD `a = U diag(σ) Vᴴ` with σ descending, `k = min(m, n)` columns.
///
/// One-sided Jacobi: slower than bidiagonal QR but its columns are
/// orthogonal to working precision relative to their own norms, which the
/// rank decisions below rely on. nalgebra's complex SVD misreports
/// singular values on some Hermitian projectors, so it is not used.
pub(crate) struct Svd {
    pub u: CMat,
    pub sigma: Vec<f64>,
    pub v: CMat,
}

pub(crate) fn svd(a: &CMat) -> Svd {
    let (m, n) = a.shape();
    if m == 0 || n == 0 {
        return Svd {
            u: CMat::zeros(m, 0),
            sigma: Vec::new(),
            v: CMat::zeros(n, 0),
        };
    }
    if m < n {
        let t = svd(&a.adjoint());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    let (w, v) = one_sided_jacobi(a.clone());
    let mut order: Vec<(usize, f64)> = (0..n).map(|j| (j, w.column(j).norm())).collect();
    order.sort_by(|x, y| y.1.total_cmp(&x.1));
    let smax = order[0].1;
    let mut u = CMat::zeros(m, n);
    let mut vs = CMat::zeros(n, n);
    let mut sigma = Vec::with_capacity(n);
    let mut good = vec![true; n];
    for (k, &(j, s)) in order.iter().enumerate() {
        vs.set_column(k, &v.column(j));
        sigma.push(s);
        if s > ZERO_FLOOR * 1e-3 * smax.max(1.0) {
            u.set_column(k, &(w.column(j) / C64::from(s)));
        } else {
            good[k] = false;
        }
    }
    complete_orthonormal(&mut u, &good);
    Svd { u, sigma, v: vs }
}

/// Rotates column pairs of `w` until all are mutually orthogonal; returns the
/// rotated matrix and the accumulated unitary.
fn one_sided_jacobi(mut w: CMat) -> (CMat, CMat) {
    let n = w.ncols();
    let mut v = CMat::identity(n, n);
    for _ in 0..80 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                let gamma = w.column(p).dotc(&w.column(q));
                let g = gamma.norm();
                if g == 0.0 || g <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let e = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                rotate(&mut w, p, q, cs, sn, e);
                rotate(&mut v, p, q, cs, sn, e);
            }
        }
        if !rotated {
            break;
        }
    }
    (w, v)
}

fn rotate(m: &mut CMat, p: usize, q: usize, cs: f64, sn: f64, e: C64) {
    let cp = m.column(p).into_owned();
    let cq = m.column(q).into_owned();
    m.set_column(p, &(&cp * C64::from(cs) - &cq * (e.conj() * sn)));
    m.set_column(q, &(&cp * (e * sn) + &cq * C64::from(cs)));
}

/// Replaces the columns flagged `false` by unit vectors orthogonal to all
/// others, drawn greedily from the standard basis.
fn complete_orthonormal(u: &mut CMat, good: &[bool]) {
    let m = u.nrows();
    let mut kept: Vec<usize> = (0..good.len()).filter(|&j| good[j]).collect();
    for j in (0..good.len()).filter(|&j| !good[j]) {
        let mut best = (0.0, CVec::zeros(m));
        for i in 0..m {
            let mut x = CVec::zeros(m);
            x[i] = C64::from(1.0);
            for _ in 0..2 {
                for &k in &kept {
                    let col = u.column(k).into_owned();
                    let coef = col.dotc(&x);
                    x -= col * coef;
                }
            }
            let nx = x.norm();
            if nx > best.0 {
                best = (nx, x);
            }
        }
        u.set_column(j, &(best.1 / C64::from(best.0)));
        kept.push(j);
    }
}

/// Left singular vectors and singular values, sorted descending.
/// Empty inputs return an empty factorization.
pub(crate) fn left_svd(a: &CMat) -> (CMat, Vec<f64>) {
    let s = svd(a);
    (s.u, s.sigma)
}

pub(crate) fn numerical_rank(sigma: &[f64], rank_rel: f64) -> usize {
    let smax = sigma.first().copied().unwrap_or(0.0);
    if smax <= ZERO_FLOOR {
        return 0;
    }
    let cut = rank_rel * smax;
    sigma.iter().take_while(|&&s| s > cut).count()
}

/// Orthonormal basis of the column span of `a`.
pub fn orth(a: &CMat, rank_rel: f64) -> CMat {
    let (u, sigma) = left_svd(a);
    let r = numerical_rank(&sigma, rank_rel);
    u.columns(0, r).into_owned()
}

/// Orthonormal basis of the null space of `a` (as vectors of length `a.ncols()`).
pub fn null_space(a: &CMat, rank_rel: f64) -> CMat {
    let cols = a.ncols();
    if cols == 0 {
        return CMat::zeros(0, 0);
    }
    let row_space = orth(&a.adjoint(), rank_rel);
    orth_complement(&row_space, cols)
}

/// Orthonormal basis of the orthogonal complement of the span of the
/// orthonormal columns `basis` in C^d.
pub(crate) fn orth_complement(basis: &CMat, d: usize) -> CMat {
    let r = basis.ncols();
    if r == 0 {
        return CMat::identity(d, d);
    }
    if r >= d {
        return CMat::zeros(d, 0);
    }
    let mut u = CMat::zeros(d, d);
    u.columns_mut(0, r).copy_from(basis);
    let good: Vec<bool> = (0..d).map(|j| j < r).collect();
    complete_orthonormal(&mut u, &good);
    u.columns(r, d - r).into_owned()
}

pub fn spectral_norm(a: &CMat) -> f64 {
    singular_values(a).first().copied().unwrap_or(0.0)
}

pub(crate) fn singular_values(a: &CMat) -> Vec<f64> {
    svd(a).sigma
}

/// Hermitian part (A + A^H)/2.
pub(crate) fn hermitian_part(a: &CMat) -> CMat {
    (a + a.adjoint()).scale(0.5)
}

/// Smallest eigenvalue of a Hermitian matrix with a unit eigenvector.
/// `None` for an empty matrix.
pub(crate) fn hermitian_min_eig(h: &CMat) -> Option<(f64, CVec)> {
    if h.nrows() == 0 {
        return None;
    }
    let eig = SymmetricEigen::new(hermitian_part(h));
    let (idx, val) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))?;
    Some((val, eig.eigenvectors.column(idx).into_owned()))
}

/// Eigenvalues of a general square complex matrix from its Schur form.
pub fn eigenvalues(a: &CMat) -> Vec<C64> {
    let n = a.nrows();
    if n == 0 {
        return Vec::new();
    }
    let schur = Schur::try_new(a.clone(), f64::EPSILON, 0).expect("unbounded Schur iteration");
    let (_, t) = schur.unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Moore-Penrose pseudo-inverse.
pub(crate) fn pinv(a: &CMat, rank_rel: f64) -> CMat {
    let (rows, cols) = a.shape();
    if rows == 0 || cols == 0 {
        return CMat::zeros(cols, rows);
    }
    let smax = spectral_norm(a);
    let eps = (rank_rel * smax).max(ZERO_FLOOR);
    let f = svd(a);
    let mut out = CMat::zeros(cols, rows);
    for (k, &sk) in f.sigma.iter().enumerate() {
        if sk > eps {
            out += f.v.column(k) * f.u.column(k).adjoint() / C64::from(sk);
        }
    }
    out
}

pub(crate) fn hstack(blocks: &[&CMat]) -> CMat {
    let rows = blocks.first().map(|b| b.nrows()).unwrap_or(0);
    let cols: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = CMat::zeros(rows, cols);
    let mut j = 0;
    for b in blocks {
        debug_assert_eq!(b.nrows(), rows);
        out.columns_mut(j, b.ncols()).copy_from(b);
        j += b.ncols();
    }
    out
}

pub(crate) fn vstack(top: &CMat, bottom: &CMat) -> CMat {
    debug_assert_eq!(top.ncols(), bottom.ncols());
    let mut out = CMat::zeros(top.nrows() + bottom.nrows(), top.ncols());
    out.rows_mut(0, top.nrows()).copy_from(top);
    out.rows_mut(top.nrows(), bottom.nrows()).copy_from(bottom);
    out
}

#[cfg(test)]
pub(crate) fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
