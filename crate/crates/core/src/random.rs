//! Seeded generators of random matrices, subspaces and relations with
//! prescribed structure, for property checks and sweeps.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

use crate::linalg::{hstack, orth, CMat, CVec};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::tolerance::ToleranceProfile;
use crate::C64;

pub struct Sampler {
    rng: StdRng,
    tol: ToleranceProfile,
}

/// Shape of a generated structured relation.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub n: usize,
    /// Dimension of the subspace D carrying the operator part.
    pub core_dim: usize,
    /// Dimension of the coefficient subspace actually used (≤ core_dim).
    pub active_dim: usize,
    /// Dimension of the multivalued part (≤ n - core_dim).
    pub mul_dim: usize,
}

impl Sampler {
    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: StdRng::seed_from_u64(seed),
            tol: ToleranceProfile::default(),
        }
    }

    pub fn with_tol(mut self, tol: ToleranceProfile) -> Self {
        self.tol = tol;
        self
    }

    pub fn tol(&self) -> ToleranceProfile {
        self.tol
    }

    /// Uniform integer in `lo..=hi`.
    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn bool(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn complex(&mut self) -> C64 {
        C64::new(self.normal(), self.normal())
    }

    pub fn vector(&mut self, d: usize) -> CVec {
        CVec::from_fn(d, |_, _| self.complex())
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> CMat {
        CMat::from_fn(rows, cols, |_, _| self.complex())
    }

    pub fn real_matrix(&mut self, rows: usize, cols: usize) -> CMat {
        CMat::from_fn(rows, cols, |_, _| C64::new(self.normal(), 0.0))
    }

    pub fn hermitian(&mut self, n: usize) -> CMat {
        let a = self.matrix(n, n);
        (&a + a.adjoint()).scale(0.5)
    }

    /// Positive semidefinite matrix of the given rank.
    pub fn psd(&mut self, n: usize, rank: usize) -> CMat {
        let b = self.matrix(n, rank);
        &b * b.adjoint()
    }

    pub fn unitary(&mut self, n: usize) -> CMat {
        loop {
            let q = orth(&self.matrix(n, n), self.tol.rank_rel);
            if q.ncols() == n {
                return q;
            }
        }
    }

    /// Matrix with orthonormal columns.
    pub fn isometry(&mut self, rows: usize, cols: usize) -> CMat {
        self.unitary(rows).columns(0, cols).into_owned()
    }

    /// Random subspace of C^d of dimension k.
    pub fn subspace(&mut self, d: usize, k: usize) -> Subspace {
        Subspace::from_orthonormal(self.isometry(d, k), self.tol)
    }

    /// Matrix with spectral norm exactly `norm`.
    pub fn matrix_with_norm(&mut self, rows: usize, cols: usize, norm: f64) -> CMat {
        if rows == 0 || cols == 0 {
            return CMat::zeros(rows, cols);
        }
        let m = self.matrix(rows, cols);
        let s = crate::linalg::spectral_norm(&m);
        m * C64::new(norm / s, 0.0)
    }

    /// Point of the open upper half-plane.
    pub fn upper(&mut self) -> C64 {
        C64::new(self.uniform(-3.0, 3.0), self.uniform(0.05, 3.0))
    }

    /// Point of the open lower half-plane.
    pub fn lower(&mut self) -> C64 {
        self.upper().conj()
    }

    /// Unimodular point with positive imaginary part.
    pub fn unit_upper(&mut self) -> C64 {
        C64::from_polar(1.0, self.uniform(0.05, std::f64::consts::PI - 0.05))
    }

    pub fn nonreal(&mut self) -> C64 {
        if self.bool() {
            self.upper()
        } else {
            self.lower()
        }
    }

    /// Unstructured relation of dimension `dim` with a multivalued part of
    /// dimension at least `mul_dim` (exactly, generically).
    pub fn relation(&mut self, n: usize, dim: usize, mul_dim: usize) -> LinearRelation {
        assert!(mul_dim <= dim && dim <= 2 * n && mul_dim <= n);
        let op = dim - mul_dim;
        let f = hstack(&[&self.matrix(n, op), &CMat::zeros(n, mul_dim)]);
        let g = self.matrix(n, dim);
        LinearRelation::from_blocks(&f, &g, self.tol).expect("shapes")
    }

    /// Random shape with `n` in the given range.
    pub fn shape(&mut self, n_lo: usize, n_hi: usize) -> Shape {
        let n = self.usize_in(n_lo, n_hi);
        let core_dim = self.usize_in(1, n);
        let active_dim = self.usize_in(1, core_dim);
        let mul_dim = self.usize_in(0, n - core_dim);
        Shape {
            n,
            core_dim,
            active_dim,
            mul_dim,
        }
    }

    /// `{(Q x, Q M x + Z x + m) : x ∈ X, m ∈ mul}` with `Q` an orthonormal basis
    /// of a random D, `X ⊆ C^core_dim` of dimension `active_dim`, `Z` mapping
    /// into D^⊥ and `mul ⊆ D^⊥`.  The form `Im <f, g>` equals `Im x^H M x`.
    pub fn structured(&mut self, shape: Shape, core: &CMat, with_tail: bool) -> LinearRelation {
        let Shape {
            n,
            core_dim,
            active_dim,
            mul_dim,
        } = shape;
        let u = self.unitary(n);
        let q = u.columns(0, core_dim).into_owned();
        let qperp = u.columns(core_dim, n - core_dim).into_owned();
        let x = self.isometry(core_dim, active_dim);
        let tail = if with_tail {
            &qperp * self.matrix(n - core_dim, core_dim)
        } else {
            CMat::zeros(n, core_dim)
        };
        let f_op = &q * &x;
        let g_op = (&q * core + tail) * &x;
        let mul = &qperp * self.isometry(n - core_dim, mul_dim);
        let f = hstack(&[&f_op, &CMat::zeros(n, mul_dim)]);
        let g = hstack(&[&g_op, &mul]);
        LinearRelation::from_blocks(&f, &g, self.tol).expect("shapes")
    }

    /// Closed symmetric relation, generally with nondense domain and
    /// nontrivial multivalued part.
    pub fn symmetric(&mut self, n_lo: usize, n_hi: usize) -> LinearRelation {
        let shape = self.shape(n_lo, n_hi);
        let h = self.hermitian(shape.core_dim);
        let tail = self.bool();
        self.structured(shape, &h, tail)
    }

    /// Dissipative relation built from `H + iP` with `P ⪰ 0`.
    pub fn dissipative(&mut self, n_lo: usize, n_hi: usize) -> LinearRelation {
        let shape = self.shape(n_lo, n_hi);
        let core = self.dissipative_core(shape.core_dim);
        let tail = self.bool();
        self.structured(shape, &core, tail)
    }

    /// `H + iP` with `P` positive semidefinite of random rank.
    pub fn dissipative_core(&mut self, k: usize) -> CMat {
        let h = self.hermitian(k);
        let rank = self.usize_in(0, k);
        let p = self.psd(k, rank);
        h + p * C64::new(0.0, 1.0)
    }

    /// Non-dissipative relation: the core form has a negative direction.
    pub fn non_dissipative(&mut self, n_lo: usize, n_hi: usize) -> LinearRelation {
        let mut shape = self.shape(n_lo, n_hi);
        shape.active_dim = shape.core_dim;
        let k = shape.core_dim;
        let h = self.hermitian(k);
        let rank = self.usize_in(0, k.saturating_sub(1));
        let v = self.vector(k);
        let scale = self.uniform(0.3, 2.0);
        let p = self.psd(k, rank) - (&v * v.adjoint()) * C64::new(scale, 0.0);
        let core = h + p * C64::new(0.0, 1.0);
        let tail = self.bool();
        self.structured(shape, &core, tail)
    }

    /// Maximal dissipative relation: `{(Q x, Q (H + iP) x + m) : m ∈ D^⊥}`.
    pub fn maximal_dissipative(&mut self, n_lo: usize, n_hi: usize) -> LinearRelation {
        let n = self.usize_in(n_lo, n_hi);
        let k = self.usize_in(1, n);
        let core = self.dissipative_core(k);
        self.maximal_from_core(n, &core)
    }

    /// Selfadjoint relation with multivalued part `D^⊥`.
    pub fn selfadjoint(&mut self, n_lo: usize, n_hi: usize) -> LinearRelation {
        let n = self.usize_in(n_lo, n_hi);
        let k = self.usize_in(1, n);
        let h = self.hermitian(k);
        self.maximal_from_core(n, &h)
    }

    pub fn maximal_from_core(&mut self, n: usize, core: &CMat) -> LinearRelation {
        let k = core.nrows();
        let shape = Shape {
            n,
            core_dim: k,
            active_dim: k,
            mul_dim: n - k,
        };
        self.structured(shape, core, false)
    }

    /// Graph of a matrix of norm `rho` restricted to a random domain.
    pub fn contraction(&mut self, n: usize, dom_dim: usize, rho: f64) -> LinearRelation {
        let d = self.isometry(n, dom_dim);
        let m = self.matrix_with_norm(n, dom_dim, rho);
        LinearRelation::from_blocks(&d, &m, self.tol).expect("shapes")
    }
}
