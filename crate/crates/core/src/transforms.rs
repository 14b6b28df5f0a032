//! Cayley and Z transforms.
//!
//! Both are linear changes of the pair coordinates, so they apply to any
//! relation and any ζ; for nonreal ζ the Z transform is an involution.

use crate::relation::LinearRelation;
use crate::C64;

/// `C_ζ T = {(g − ζ̄f, g − ζf) : (f, g) ∈ T}`.
pub fn cayley(t: &LinearRelation, zeta: C64) -> LinearRelation {
    let f = t.f_block();
    let g = t.g_block();
    let nf = &g - &f * zeta.conj();
    let ng = &g - &f * zeta;
    LinearRelation::from_blocks(&nf, &ng, *t.tol()).expect("block shapes preserved")
}

/// `Z_ζ T = ζ̄ C_ζ T = {(g − ζ̄f, ζ̄(g − ζf))}`.
pub fn z_transform(t: &LinearRelation, zeta: C64) -> LinearRelation {
    cayley(t, zeta).scale(zeta.conj())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::random::Sampler;
    use crate::spectra::kernel_basis;
    use crate::{CMat, Subspace};

    fn random_relation(s: &mut Sampler) -> LinearRelation {
        let n = s.usize_in(1, 5);
        let dim = s.usize_in(0, 2 * n);
        let mul = s.usize_in(0, dim.min(n));
        s.relation(n, dim, mul)
    }

    #[test]
    fn involution_for_nonreal_points() {
        let mut s = Sampler::seeded(1);
        for _ in 0..100 {
            let t = random_relation(&mut s);
            let z = s.nonreal();
            assert!(z_transform(&z_transform(&t, z), z).equals(&t).unwrap());
            assert_eq!(z_transform(&t, z).dim(), t.dim());
        }
    }

    #[test]
    fn involution_fails_at_real_points() {
        // at real ζ the double transform collapses every pair to zero
        let mut s = Sampler::seeded(2);
        let t = s.relation(3, 3, 0);
        let zz = z_transform(&z_transform(&t, c(0.5, 0.0)), c(0.5, 0.0));
        assert!(zz.space().is_zero());
    }

    #[test]
    fn order_preserving() {
        let mut s = Sampler::seeded(3);
        for _ in 0..100 {
            let n = s.usize_in(1, 5);
            let arg0 = s.usize_in(1, 2 * n);
            let t = s.relation(n, arg0, 0);
            let arg0 = s.usize_in(0, t.dim());
            let sub_coeffs = s.matrix(t.dim(), arg0);
            let sub = LinearRelation::from_subspace(Subspace::from_columns(
                &(t.space().basis() * sub_coeffs),
                *t.tol(),
            ))
            .unwrap();
            let z = s.nonreal();
            assert!(z_transform(&t, z).contains(&z_transform(&sub, z)).unwrap());
            let arg0 = s.usize_in(1, 2 * n - 1);
            let other = s.relation(n, arg0, 0);
            assert_eq!(
                other.contains(&t).unwrap(),
                z_transform(&other, z).contains(&z_transform(&t, z)).unwrap()
            );
        }
    }

    #[test]
    fn reflection_law() {
        let mut s = Sampler::seeded(4);
        let minus = c(-1.0, 0.0);
        for _ in 0..100 {
            let t = random_relation(&mut s);
            let z = s.complex();
            let lhs = z_transform(&t, -z);
            let rhs = z_transform(&t.scale(minus), z).scale(minus);
            assert!(lhs.equals(&rhs).unwrap());
        }
    }

    #[test]
    fn inverse_law_on_unit_circle() {
        let mut s = Sampler::seeded(5);
        for _ in 0..100 {
            let t = random_relation(&mut s);
            let z = C64::from_polar(1.0, s.uniform(0.0, std::f64::consts::TAU));
            let a = z_transform(&t.inverse(), z);
            assert!(a.equals(&z_transform(&t, z).inverse()).unwrap());
            assert!(a.equals(&z_transform(&t, z.conj())).unwrap());
        }
    }

    #[test]
    fn additive_over_direct_and_orthogonal_sums() {
        let mut s = Sampler::seeded(6);
        for _ in 0..100 {
            let n = s.usize_in(2, 5);
            let arg0 = s.usize_in(2, 2 * n);
            let whole = s.subspace(2 * n, arg0);
            let k = s.usize_in(1, whole.dim() - 1);
            let mix = s.matrix(whole.dim(), whole.dim());
            let cols = whole.basis() * mix;
            let tol = *whole.tol();
            let t = LinearRelation::from_subspace(Subspace::from_columns(&cols.columns(0, k).into_owned(), tol)).unwrap();
            let r = LinearRelation::from_subspace(Subspace::from_columns(
                &cols.columns(k, whole.dim() - k).into_owned(),
                tol,
            ))
            .unwrap();
            let z = s.nonreal();
            let sum = t.direct_sum(&r).unwrap();
            let lhs = z_transform(&sum, z);
            let rhs = z_transform(&t, z).direct_sum(&z_transform(&r, z)).unwrap();
            assert!(lhs.equals(&rhs).unwrap());

            // orthogonal split of the same subspace
            let ob = whole.basis();
            let t = LinearRelation::from_subspace(Subspace::from_columns(&ob.columns(0, k).into_owned(), tol)).unwrap();
            let r = LinearRelation::from_subspace(Subspace::from_columns(
                &ob.columns(k, whole.dim() - k).into_owned(),
                tol,
            ))
            .unwrap();
            for z in [c(0.0, 1.0), c(0.0, -1.0)] {
                let zt = z_transform(&t, z);
                let zr = z_transform(&r, z);
                assert!(zt.is_orthogonal_to(&zr).unwrap());
                let lhs = z_transform(&t.orthogonal_sum(&r).unwrap(), z);
                assert!(lhs.equals(&zt.orthogonal_sum(&zr).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn commutes_with_adjoint() {
        let mut s = Sampler::seeded(7);
        for _ in 0..100 {
            let t = random_relation(&mut s);
            let z = s.complex();
            let lhs = z_transform(&t.adjoint(), z);
            let rhs = z_transform(&t, z.conj()).adjoint();
            assert!(lhs.equals(&rhs).unwrap());
        }
    }

    #[test]
    fn domain_range_kernel_identities() {
        let mut s = Sampler::seeded(8);
        for _ in 0..100 {
            let t = random_relation(&mut s);
            let z = s.nonreal();
            let zt = z_transform(&t, z);
            let p = zt.parts();
            assert!(p.dom.equals(&t.shift(z.conj()).ran()).unwrap());
            assert!(p.ran.equals(&t.shift(z).ran()).unwrap());
            assert!(p.mul.equals(&kernel_basis(&t, z.conj())).unwrap());
            assert!(p.ker.equals(&kernel_basis(&t, z)).unwrap());
        }
    }

    #[test]
    fn cayley_examples() {
        let mut s = Sampler::seeded(9);
        let z = s.nonreal();
        // (f, ζf) ↦ ((ζ − ζ̄)f, 0)
        let g = LinearRelation::scalar_graph(3, z, Default::default());
        let ct = cayley(&g, z);
        assert!(ct.ran().is_zero());
        assert!(ct.dom().is_full());
        // at real ζ both components coincide
        let t = s.relation(3, 4, 1);
        let x = c(s.uniform(-2.0, 2.0), 0.0);
        let diag = LinearRelation::graph(&CMat::identity(3, 3), Default::default()).unwrap();
        assert!(diag.contains(&cayley(&t, x)).unwrap());
    }

    #[test]
    fn dissipative_iff_contractive_transform() {
        let mut s = Sampler::seeded(10);
        for k in 0..100 {
            let l = match k % 4 {
                0 => s.dissipative(1, 5),
                1 => s.non_dissipative(1, 5),
                2 => s.symmetric(1, 5),
                _ => s.maximal_dissipative(1, 5),
            };
            let z = s.unit_upper();
            let zl = z_transform(&l, z);
            let a = l.classify();
            let b = zl.classify();
            assert_eq!(a.is_dissipative, b.is_contraction);
            assert_eq!(a.is_symmetric, b.is_isometry);
            if a.is_dissipative {
                assert_eq!(a.is_maximal_dissipative, zl.dom().is_full());
            }
        }
    }
}
