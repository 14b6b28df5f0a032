use proptest::prelude::*;

use relcalc::io::{emit_relation, parse_relation, RelationDocument};
use relcalc::random::Sampler;
use relcalc::spectra::in_quasi_regular;
use relcalc::transforms::z_transform;
use relcalc::{LinearRelation, ToleranceProfile, C64};

fn relation(seed: u64, with_mul: bool) -> LinearRelation {
    let mut s = Sampler::seeded(seed);
    let n = s.usize_in(1, 6);
    let dim = s.usize_in(1, 2 * n - 1);
    let mul = if with_mul { s.usize_in(1, dim.min(n)) } else { 0 };
    s.relation(n, dim, mul)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_reverses_inclusion(seed in any::<u64>(), with_mul in any::<bool>()) {
        let t = relation(seed, with_mul);
        let mut s = Sampler::seeded(seed ^ 0x5a5a);
        let k = s.usize_in(0, t.dim());
        let cols = t.space().basis() * s.matrix(t.dim(), k);
        let sub = LinearRelation::from_subspace(relcalc::Subspace::from_columns(&cols, *t.tol())).unwrap();
        prop_assert!(sub.adjoint().contains(&t.adjoint()).unwrap());
    }

    #[test]
    fn inverse_and_adjoint_commute(seed in any::<u64>(), with_mul in any::<bool>()) {
        let t = relation(seed, with_mul);
        prop_assert!(t.inverse().adjoint().equals(&t.adjoint().inverse()).unwrap());
    }

    #[test]
    fn kernel_and_multivalued_part_swap_under_inverse(seed in any::<u64>(), with_mul in any::<bool>()) {
        let t = relation(seed, with_mul);
        let inv = t.inverse();
        prop_assert!(inv.ker().equals(&t.mul()).unwrap());
        prop_assert!(inv.dom().equals(&t.ran()).unwrap());
    }

    #[test]
    fn transform_preserves_dissipative_class(seed in any::<u64>()) {
        let mut s = Sampler::seeded(seed);
        let l = s.dissipative(1, 5);
        let z = s.unit_upper();
        let c = z_transform(&l, z);
        prop_assert!(c.classify().is_contraction);
        prop_assert!(z_transform(&c, z).equals(&l).unwrap());
    }

    #[test]
    fn maximal_dissipative_has_lower_half_plane_resolvent(seed in any::<u64>()) {
        let mut s = Sampler::seeded(seed);
        let l = s.maximal_dissipative(1, 5);
        let z = s.lower();
        prop_assert!(in_quasi_regular(&l, z));
        prop_assert_eq!(l.deficiency_index(z), 0);
    }

    #[test]
    fn json_round_trip_preserves_relation(seed in any::<u64>(), with_mul in any::<bool>()) {
        let t = relation(seed, with_mul);
        let doc = RelationDocument::from_relation(&t);
        let bytes = emit_relation(&doc);
        let back = parse_relation(&bytes, ToleranceProfile::default()).unwrap();
        prop_assert!(back.equals(&t).unwrap());
    }

    #[test]
    fn scaling_by_nonzero_is_invertible(seed in any::<u64>(), re in -3.0f64..3.0, im in 0.1f64..3.0) {
        let t = relation(seed, true);
        let a = C64::new(re, im);
        prop_assert!(t.scale(a).scale(a.inv()).equals(&t).unwrap());
    }
}
