//! Finite-dimensional de Branges spaces generated by polynomial
//! Hermite–Biehler functions `e(z) = lead · ∏ (z − w_j)`, `Im w_j < 0`.
//!
//! The space is the polynomials of degree `< n` with reproducing kernel
//! `k(z, w) = Σ z^a w̄^b K_ab`; the Gram matrix of the monomials is
//! `M = K⁻¹`.  Relation computations run in orthonormal coordinates
//! `x = R c` where `K = L Lᴴ` and `R = L⁻¹`, so `M = Rᴴ R`.

use std::f64::consts::PI;

use nalgebra::Cholesky;

use crate::error::{RelError, Result};
use crate::linalg::{singular_values, CMat, CVec};
use crate::poly::Poly;
use crate::relation::LinearRelation;
use crate::tolerance::ToleranceProfile;
use crate::C64;

/// Largest supported degree; the kernel matrix becomes too ill-conditioned
/// to invert reliably beyond it.
pub const MAX_DEGREE: usize = 12;

const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Clone, PartialEq)]
pub struct HermiteBiehlerPoly {
    pub roots: Vec<C64>,
    /// Leading coefficient (1 for the monic functions built from roots).
    pub lead: C64,
}

impl HermiteBiehlerPoly {
    pub fn new(roots: Vec<C64>) -> Result<Self> {
        Self::with_lead(C64::new(1.0, 0.0), roots)
    }

    pub fn with_lead(lead: C64, roots: Vec<C64>) -> Result<Self> {
        if let Some(&root) = roots.iter().find(|r| !(r.im < 0.0 && r.re.is_finite())) {
            return Err(RelError::RootInUpperHalfPlaneOrReal { root });
        }
        if lead.norm() == 0.0 || !lead.norm().is_finite() {
            return Err(RelError::InvalidModel("leading coefficient must be nonzero".into()));
        }
        let hb = Self { roots, lead };
        for z in upper_samples(50) {
            let p = hb.e();
            if p.eval(z).norm() <= p.sharp().eval(z).norm() {
                return Err(RelError::InvalidModel(format!("|e| <= |e#| at {z}")));
            }
        }
        Ok(hb)
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn e(&self) -> Poly {
        Poly::from_roots(self.lead, &self.roots)
    }

    pub fn e_sharp(&self) -> Poly {
        self.e().sharp()
    }
}

/// Deterministic sample points of the open upper half-plane.
fn upper_samples(count: usize) -> impl Iterator<Item = C64> {
    (0..count).map(|k| {
        let t = k as f64;
        C64::new(3.0 * (0.7 * t).sin(), 0.05 + 2.0 * (0.5 + 0.5 * (1.3 * t).cos()))
    })
}

/// `(1, w, …, w^{n−1})`.
pub fn monomials(n: usize, w: C64) -> CVec {
    let mut v = CVec::zeros(n);
    let mut p = C64::new(1.0, 0.0);
    for k in 0..n {
        v[k] = p;
        p *= w;
    }
    v
}

#[derive(Debug, Clone)]
pub struct DeBrangesModel {
    pub e: HermiteBiehlerPoly,
    /// Kernel coefficients: `k(z, w) = Σ z^a w̄^b K_ab`.
    pub k: CMat,
    /// Gram matrix of the monomials, `M = K⁻¹`.
    pub m: CMat,
    /// Orthonormal-coordinate map, `M = Rᴴ R`.
    pub r: CMat,
    /// `R⁻¹`, mapping orthonormal coordinates back to monomial coefficients.
    pub r_inv: CMat,
    pub tol: ToleranceProfile,
}

pub fn build_model(roots: &[C64]) -> Result<DeBrangesModel> {
    build_model_from(HermiteBiehlerPoly::new(roots.to_vec())?)
}

/// Kernel coefficients from exact division of
/// `e#(z) e(u) − e(z) e#(u)` by `z − u`, with `u = w̄`.
fn kernel_coefficients(e: &Poly, n: usize) -> CMat {
    let s = e.sharp();
    // numerator as a polynomial in z with coefficients in u
    let numer: Vec<Vec<C64>> = (0..=n)
        .map(|a| (0..=n).map(|b| s.coeff(a) * e.coeff(b) - e.coeff(a) * s.coeff(b)).collect())
        .collect();
    // synthetic division in z by (z − u): q_{a−1} = c_a + u q_a
    let mut q: Vec<Vec<C64>> = vec![vec![C64::new(0.0, 0.0); n + 1]; n];
    let mut carry = vec![C64::new(0.0, 0.0); n + 2];
    for a in (1..=n).rev() {
        let mut next = vec![C64::new(0.0, 0.0); n + 2];
        for b in 0..=n {
            next[b] += numer[a][b];
        }
        for b in 0..=n {
            next[b + 1] += carry[b];
        }
        q[a - 1] = next[..=n].to_vec();
        carry = next;
    }
    let scale = C64::new(0.0, 2.0 * PI).inv();
    CMat::from_fn(n, n, |a, b| q[a][b] * scale)
}

pub fn build_model_from(e: HermiteBiehlerPoly) -> Result<DeBrangesModel> {
    let n = e.degree();
    if n == 0 {
        return Err(RelError::InvalidModel("need at least one root".into()));
    }
    if n > MAX_DEGREE {
        return Err(RelError::KernelNotPositive(format!(
            "degree {n} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    let k = kernel_coefficients(&e.e(), n);
    let herm = (&k + k.adjoint()).scale(0.5);
    let sv = singular_values(&herm);
    let cond = sv[0] / sv[n - 1];
    if !(cond.is_finite() && cond <= MAX_CONDITION) {
        return Err(RelError::KernelNotPositive(format!("condition number {cond:.3e}")));
    }
    let chol = Cholesky::new(herm.clone())
        .ok_or_else(|| RelError::KernelNotPositive("Cholesky factorization failed".into()))?;
    let l = chol.l();
    let r = l
        .clone()
        .solve_lower_triangular(&CMat::identity(n, n))
        .ok_or_else(|| RelError::KernelNotPositive("singular factor".into()))?;
    let m = r.adjoint() * &r;
    Ok(DeBrangesModel {
        e,
        k: herm,
        m,
        r,
        r_inv: l,
        tol: ToleranceProfile::default(),
    })
}

impl DeBrangesModel {
    pub fn n(&self) -> usize {
        self.e.degree()
    }

    pub fn with_tol(mut self, tol: ToleranceProfile) -> Self {
        self.tol = tol;
        self
    }

    /// Monomial coefficients of `k(·, w)`.
    pub fn kernel_vector(&self, w: C64) -> CVec {
        &self.k * monomials(self.n(), w).map(|x| x.conj())
    }

    pub fn kernel(&self, z: C64, w: C64) -> C64 {
        monomials(self.n(), z).dot(&self.kernel_vector(w))
    }

    /// `⟨f, g⟩ = fᴴ M g` on monomial coefficients.
    pub fn inner(&self, f: &CVec, g: &CVec) -> C64 {
        f.dotc(&(&self.m * g))
    }

    pub fn norm(&self, f: &CVec) -> f64 {
        self.inner(f, f).re.max(0.0).sqrt()
    }

    pub fn to_orthonormal(&self, c: &CVec) -> CVec {
        &self.r * c
    }

    pub fn from_orthonormal(&self, x: &CVec) -> CVec {
        &self.r_inv * x
    }

    /// Pads or checks a polynomial against the space dimension.
    pub fn coefficients(&self, p: &Poly) -> Result<CVec> {
        let n = self.n();
        if p.coeffs.len() > n {
            return Err(RelError::DimensionMismatch {
                expected: n,
                found: p.coeffs.len(),
            });
        }
        Ok(CVec::from_fn(n, |k, _| p.coeff(k)))
    }

    /// `S = {(f, z f) : deg f ≤ n − 2}` in orthonormal coordinates.
    pub fn mult_relation(&self) -> LinearRelation {
        let n = self.n();
        let id = CMat::identity(n, n);
        let f = &self.r * id.columns(0, n - 1);
        let g = &self.r * id.columns(1, n - 1);
        LinearRelation::from_blocks(&f, &g, self.tol).expect("shapes")
    }

    fn check_w(w: C64) -> Result<()> {
        if w.im > 0.0 {
            Ok(())
        } else {
            Err(RelError::WNotInUpperHalfPlane { w })
        }
    }

    fn check_disk(&self, t: C64) -> Result<()> {
        if t.norm() > 1.0 + self.tol.psd_abs {
            Err(RelError::TauOutsideDisk { abs: t.norm() })
        } else {
            Ok(())
        }
    }

    /// `S ∔ span{(β k_w − k_w̄, β w̄ k_w − w k_w̄)}`.
    pub fn kernel_extension(&self, beta: C64, w: C64) -> Result<LinearRelation> {
        self.check_disk(beta)?;
        Self::check_w(w)?;
        let kw = self.to_orthonormal(&self.kernel_vector(w));
        let kwb = self.to_orthonormal(&self.kernel_vector(w.conj()));
        let f = &kw * beta - &kwb;
        let g = &kw * (beta * w.conj()) - &kwb * w;
        let added = LinearRelation::from_pairs(self.n(), &[(f, g)], self.tol)?;
        self.mult_relation().direct_sum(&added)
    }

    /// Kernel parameter at `w` realizing `φ_τ`: `φ_τ(w) / φ_τ(w̄)`.
    /// Equals τ when `e` is normalized at `w`.
    pub fn kernel_parameter(&self, tau: C64, w: C64) -> Result<C64> {
        let phi = self.phi_tau(tau);
        let den = phi.eval(w.conj());
        if den.norm() == 0.0 {
            return Err(RelError::DegenerateMobius);
        }
        Ok(phi.eval(w) / den)
    }

    /// The maximal dissipative extension of `S` whose spectrum is the zero
    /// set of `φ_τ` in the closed upper half-plane.
    pub fn s_tau(&self, tau: C64, w: C64) -> Result<LinearRelation> {
        self.check_disk(tau)?;
        Self::check_w(w)?;
        self.kernel_extension(self.kernel_parameter(tau, w)?, w)
    }

    /// `φ_τ = τ e − e#`.
    pub fn phi_tau(&self, tau: C64) -> Poly {
        self.e.e().scale(tau).sub(&self.e.e_sharp())
    }

    /// Roots of `φ_τ` with `Im ≥ 0` (up to roundoff).
    pub fn spectrum_via_phi(&self, tau: C64) -> Vec<C64> {
        let mut roots: Vec<C64> = self
            .phi_tau(tau)
            .roots()
            .into_iter()
            .filter(|z| z.im >= -self.tol.eq_tol * (1.0 + z.norm()))
            .collect();
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        roots
    }

    /// `h = φ_τ / (z − λ)` in monomial coefficients.
    pub fn eigenfunction(&self, tau: C64, lambda: C64) -> Result<Poly> {
        let phi = self.phi_tau(tau);
        let (h, rem) = phi.div_linear(lambda);
        let scale: f64 = phi
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm() * lambda.norm().powi(k as i32))
            .sum();
        let residual = rem.norm() / scale.max(f64::MIN_POSITIVE);
        if residual > 1e-8 {
            return Err(RelError::LambdaNotARoot { lambda, residual });
        }
        Ok(h)
    }

    /// `e_{w₀}(z) = π (z − w̄₀) k(z, w₀) / (Im w₀ · k(w₀, w₀))`.
    pub fn normalized_hb(&self, w0: C64) -> Result<HermiteBiehlerPoly> {
        Self::check_w(w0)?;
        let n = self.n();
        let kw = self.kernel_vector(w0);
        let kww = self.kernel(w0, w0).re;
        let scale = C64::new(PI / (w0.im * kww), 0.0);
        let kpoly = Poly::new(kw.iter().copied().collect());
        let big = kw.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if kpoly.degree() != Some(n - 1) || kw[n - 1].norm() <= 1e-12 * big {
            return Err(RelError::DegenerateKernel { w0 });
        }
        let e = Poly::new(vec![-w0.conj(), C64::new(1.0, 0.0)]).mul(&kpoly).scale(scale);
        let mut roots = Poly::new(kw.iter().copied().collect()).roots();
        roots.push(w0.conj());
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        HermiteBiehlerPoly::with_lead(e.lead(), roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::poly::match_multisets;
    use crate::random::Sampler;
    use crate::spectra::{eigenvalues, kernel_basis};

    fn random_roots(s: &mut Sampler, n: usize) -> Vec<C64> {
        (0..n).map(|_| c(s.uniform(-2.0, 2.0), -s.uniform(0.2, 2.0))).collect()
    }

    fn two_root_model() -> DeBrangesModel {
        build_model(&[c(0.0, -1.0), c(0.0, -2.0)]).unwrap()
    }

    #[test]
    fn rejects_bad_roots() {
        assert!(matches!(
            build_model(&[c(0.0, 1.0)]),
            Err(RelError::RootInUpperHalfPlaneOrReal { .. })
        ));
        assert!(matches!(
            build_model(&[c(1.0, 0.0), c(0.0, -1.0)]),
            Err(RelError::RootInUpperHalfPlaneOrReal { .. })
        ));
    }

    #[test]
    fn linear_function_gives_constants() {
        // e = z + i: k(z, w) = [(z − i)(w̄ + i) − (z + i)(w̄ − i)] / (2πi (z − w̄)) = 1/π
        let m = build_model(&[c(0.0, -1.0)]).unwrap();
        assert!((m.k[(0, 0)] - c(1.0 / PI, 0.0)).norm() < 1e-15);
        assert!(m.m[(0, 0)].re > 0.0);
    }

    #[test]
    fn two_root_kernel_by_hand() {
        // e = z² + 3iz − 2, e# = z² − 3iz − 2; N/(z − u) = 6i(zu + 2)/… → K = diag(2, 1)·6i/(2πi)…
        // direct expansion: N = 6i(z u² − z² u) + 12i(u − z)·(−1)… checked numerically below
        let m = two_root_model();
        let k = &m.k;
        assert!((k - k.adjoint()).norm() < 1e-14);
        let e = m.e.e();
        let s = m.e.e_sharp();
        for (z, w) in [(c(0.3, 0.1), c(-0.2, 0.7)), (c(1.0, -2.0), c(0.5, 0.5))] {
            let direct = (s.eval(z) * e.eval(w.conj()) - e.eval(z) * s.eval(w.conj()))
                / (c(0.0, 2.0 * PI) * (z - w.conj()));
            assert!((m.kernel(z, w) - direct).norm() < 1e-13);
        }
        // (z+i)(z+2i): K = [[2, 0], [0, 1]] · 3/π
        let want = CMat::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]) * c(3.0 / PI, 0.0);
        assert!((k - want).norm() < 1e-13);
    }

    #[test]
    fn model_invariants() {
        let mut s = Sampler::seeded(1);
        for _ in 0..20 {
            let n = s.usize_in(1, 6);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            assert!((&m.m * &m.k - CMat::identity(n, n)).norm() < 1e-8);
            assert!((m.r.adjoint() * &m.r - &m.m).norm() < 1e-8 * m.m.norm());
            for _ in 0..20 {
                let w = s.complex();
                let kw = m.kernel_vector(w);
                for a in 0..n {
                    let mut mono = CVec::zeros(n);
                    mono[a] = c(1.0, 0.0);
                    assert!((m.inner(&kw, &mono) - w.powu(a as u32)).norm() < 1e-9 * (1.0 + w.norm().powi(a as i32)));
                }
                if w.im != 0.0 {
                    assert!(m.kernel(w, w).re > 0.0);
                }
                // conj k(z̄, w) = k(z, w̄)
                let z = s.complex();
                assert!((m.kernel(z.conj(), w).conj() - m.kernel(z, w.conj())).norm() < 1e-9 * (1.0 + m.kernel(z, w.conj()).norm()));
            }
        }
    }

    #[test]
    fn inner_product_axioms() {
        let mut s = Sampler::seeded(2);
        for _ in 0..20 {
            let n = s.usize_in(2, 5);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let f = s.vector(n);
            let g = s.vector(n);
            let fs = f.map(|x| x.conj());
            let gs = g.map(|x| x.conj());
            assert!((m.inner(&f, &g) - m.inner(&gs, &fs)).norm() < 1e-9 * (1.0 + m.inner(&f, &g).norm()));
            assert!((m.norm(&f) - m.norm(&fs)).abs() < 1e-9 * m.norm(&f));

            // swapping a planted nonreal zero w for w̄ preserves the norm
            let w = s.nonreal();
            let others: Vec<C64> = (0..n - 2).map(|_| s.complex()).collect();
            let base = Poly::from_roots(s.complex(), &others);
            let with_w = base.mul(&Poly::from_roots(c(1.0, 0.0), &[w]));
            let with_wbar = base.mul(&Poly::from_roots(c(1.0, 0.0), &[w.conj()]));
            let a = m.norm(&m.coefficients(&with_w).unwrap());
            let b = m.norm(&m.coefficients(&with_wbar).unwrap());
            assert!((a - b).abs() < 1e-9 * a);
        }
    }

    #[test]
    fn reproducing_property_for_random_polynomials() {
        let mut s = Sampler::seeded(3);
        for _ in 0..20 {
            let n = s.usize_in(1, 6);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let f = s.vector(n);
            let w = s.complex();
            let fw = monomials(n, w).dot(&f);
            assert!((m.inner(&m.kernel_vector(w), &f) - fw).norm() < 1e-9 * (1.0 + fw.norm()));
        }
    }

    #[test]
    fn multiplication_relation_structure() {
        let mut s = Sampler::seeded(4);
        for _ in 0..20 {
            let n = s.usize_in(2, 6);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let sr = m.mult_relation();
            assert_eq!(sr.dim(), n - 1);
            assert_eq!(sr.dom().dim(), n - 1);
            let rep = sr.classify();
            assert!(rep.is_symmetric && rep.is_operator && !rep.is_selfadjoint);
            assert_eq!(sr.deficiency_index(c(0.0, 1.0)), 1);
            assert_eq!(sr.deficiency_index(c(0.0, -1.0)), 1);
            let w = s.upper();
            let kw = m.to_orthonormal(&m.kernel_vector(w));
            let expected = LinearRelation::from_pairs(n, &[(kw.clone(), &kw * w.conj())], m.tol).unwrap();
            assert!(sr.adjoint().deficiency_space(w.conj()).equals(&expected).unwrap());
            for _ in 0..5 {
                assert!(kernel_basis(&sr, s.complex()).is_zero());
            }
        }
    }

    #[test]
    fn phi_examples() {
        let m = two_root_model();
        assert_eq!(m.phi_tau(c(1.0, 0.0)).coeffs, vec![c(0.0, 0.0), c(0.0, 6.0)]);
        let rep = eigenvalues(&m.s_tau(c(1.0, 0.0), c(0.0, 1.0)).unwrap()).unwrap();
        assert_eq!(rep.infinite_multiplicity, 1);
        assert_eq!(rep.finite_eigenvalues.len(), 1);
        assert!(rep.finite_eigenvalues[0].value.norm() < 1e-10);
    }

    #[test]
    fn tau_zero_spectrum_is_conjugated_roots() {
        let mut s = Sampler::seeded(5);
        for _ in 0..20 {
            let n = s.usize_in(2, 5);
            let roots = random_roots(&mut s, n);
            let m = build_model(&roots).unwrap();
            let conj: Vec<C64> = roots.iter().map(|r| r.conj()).collect();
            assert!(match_multisets(&conj, &m.spectrum_via_phi(c(0.0, 0.0))).unwrap() < 1e-8);
            let rep = eigenvalues(&m.s_tau(c(0.0, 0.0), s.upper()).unwrap()).unwrap();
            assert!(match_multisets(&conj, &rep.multiset()).unwrap() < 1e-8);
        }
    }

    #[test]
    fn spectrum_theorem_on_random_models() {
        let mut s = Sampler::seeded(6);
        for _ in 0..10 {
            let n = s.usize_in(2, 6);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            for _ in 0..10 {
                let tau = C64::from_polar(s.uniform(0.0, 1.0).sqrt(), s.uniform(0.0, std::f64::consts::TAU));
                let w = s.upper();
                let st = m.s_tau(tau, w).unwrap();
                let rep = st.classify();
                assert!(rep.is_maximal_dissipative);
                let ev = eigenvalues(&st).unwrap();
                let pencil: Vec<C64> = ev.multiset().into_iter().filter(|z| z.im >= -1e-9).collect();
                let phi = m.spectrum_via_phi(tau);
                assert!(match_multisets(&phi, &pencil).unwrap() < 1e-6, "{phi:?} vs {pencil:?}");
                // no roots in the open lower half-plane when |τ| ≤ 1
                assert!(m.phi_tau(tau).roots().iter().all(|z| z.im >= -1e-9 * (1.0 + z.norm())));
                for e in &ev.finite_eigenvalues {
                    assert!(e.geometric <= 1);
                }
            }
        }
    }

    #[test]
    fn unimodular_tau_is_selfadjoint_with_real_spectrum() {
        let mut s = Sampler::seeded(7);
        for _ in 0..20 {
            let n = s.usize_in(2, 5);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let tau = C64::from_polar(1.0, s.uniform(0.0, std::f64::consts::TAU));
            let st = m.s_tau(tau, s.upper()).unwrap();
            assert!(st.is_selfadjoint());
            for z in eigenvalues(&st).unwrap().values() {
                assert!(z.im.abs() < 1e-8);
            }
            for z in m.spectrum_via_phi(tau) {
                assert!(z.im.abs() < 1e-8);
            }
        }
    }

    #[test]
    fn eigenfunctions_lie_in_kernel() {
        let mut s = Sampler::seeded(8);
        for _ in 0..20 {
            let n = s.usize_in(2, 5);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let tau = C64::from_polar(s.uniform(0.0, 1.0), s.uniform(0.0, std::f64::consts::TAU));
            let st = m.s_tau(tau, s.upper()).unwrap();
            for lambda in m.spectrum_via_phi(tau) {
                let h = m.eigenfunction(tau, lambda).unwrap();
                let x = m.to_orthonormal(&m.coefficients(&h).unwrap());
                assert!(kernel_basis(&st, lambda).member(&x).unwrap());
            }
            assert!(matches!(
                m.eigenfunction(tau, c(100.0, 3.0)),
                Err(RelError::LambdaNotARoot { .. })
            ));
        }
    }

    #[test]
    fn parameter_checks() {
        let m = two_root_model();
        assert!(matches!(m.s_tau(c(1.5, 0.0), c(0.0, 1.0)), Err(RelError::TauOutsideDisk { .. })));
        assert!(matches!(m.s_tau(c(0.5, 0.0), c(0.0, -1.0)), Err(RelError::WNotInUpperHalfPlane { .. })));
    }

    #[test]
    fn normalized_function_reproduces_kernel() {
        let mut s = Sampler::seeded(9);
        let m = build_model(&random_roots(&mut s, 3)).unwrap();
        for _ in 0..10 {
            let w0 = s.upper();
            let hb = m.normalized_hb(w0).unwrap();
            assert!(hb.roots.iter().all(|r| r.im < 0.0));
            let rebuilt = build_model_from(hb.clone()).unwrap();
            let e = hb.e();
            for _ in 0..5 {
                let z = s.complex();
                let lhs = rebuilt.kernel(z, w0);
                let rhs = e.eval(z) / (z - w0.conj());
                assert!((lhs - rhs).norm() < 1e-8 * (1.0 + rhs.norm()));
            }
            // same space; the norm is rescaled by λ = π / (Im w₀ · k(w₀, w₀))
            let lambda = PI / (w0.im * m.kernel(w0, w0).re);
            assert!((&rebuilt.m * C64::from(lambda) - &m.m).norm() < 1e-8 * m.m.norm());
            // normalized at w0 the literal kernel pair realizes φ_τ directly
            let tau = C64::from_polar(s.uniform(0.0, 1.0), s.uniform(0.0, 6.0));
            assert!((rebuilt.kernel_parameter(tau, w0).unwrap() - tau).norm() < 1e-8);
            let literal = rebuilt.kernel_extension(tau, w0).unwrap();
            assert!(literal.equals(&rebuilt.s_tau(tau, w0).unwrap()).unwrap());
        }
    }

    #[test]
    fn extension_at_point_has_simple_eigenvalue() {
        let mut s = Sampler::seeded(10);
        for _ in 0..10 {
            let n = s.usize_in(2, 5);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let z = s.upper();
            let l = crate::extensions::maximal_dissipative_extension(&m.mult_relation(), z).unwrap();
            assert_eq!(kernel_basis(&l, z).dim(), 1);
        }
    }

    #[test]
    fn strict_disk_gives_dissipative_non_symmetric() {
        let mut s = Sampler::seeded(11);
        for _ in 0..10 {
            let n = s.usize_in(2, 5);
            let m = build_model(&random_roots(&mut s, n)).unwrap();
            let tau = c(0.3, 0.2);
            let rep = m.s_tau(tau, c(0.0, 1.0)).unwrap().classify();
            assert!(rep.is_dissipative && !rep.is_symmetric);
            assert!(m.phi_tau(tau).roots().iter().all(|z| z.im > 0.0));
        }
    }
}
