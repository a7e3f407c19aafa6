use conncat::analysis::eggbox;
use conncat::cones::{self, DEFAULT_CONE_CAP};
use conncat::functors::{functor_c, roundtrip_semigroup};
use conncat::semigroup::{
    classify, find_isomorphism, parse_cayley, parse_generators, to_cayley_text, to_generators_text, FiniteSemigroup,
    GreensData, Transformation,
};
use conncat::Exec;
use proptest::prelude::*;

fn transformation(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(0..n as u8, n).prop_map(Transformation)
}

/// Subsemigroups of `T_3` generated by one to three random maps.
fn semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop::collection::vec(transformation(3), 1..=3).prop_map(|gens| {
        FiniteSemigroup::from_generators(&gens, |a, b| a.then(b), |a| a.to_string(), 64).unwrap().0
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_tables_are_associative(s in semigroup()) {
        prop_assert!(s.associativity_violation(Exec::Sequential).is_none());
        prop_assert_eq!(s.associativity_violation(Exec::Parallel), None);
    }

    #[test]
    fn greens_classes_partition_and_h_is_l_meet_r(s in semigroup()) {
        let g = GreensData::compute(&s);
        let n = s.size();
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(g.l_related(a, b), g.leq_l(a, b) && g.leq_l(b, a));
                prop_assert_eq!(g.h_class(a) == g.h_class(b), g.l_related(a, b) && g.r_related(a, b));
                if g.l_related(a, b) || g.r_related(a, b) {
                    prop_assert_eq!(g.d_class(a), g.d_class(b));
                }
            }
        }
        let cells: usize = eggbox(&s, &g).classes.iter().map(|d| d.rows.iter().map(|r| r.len()).sum::<usize>()).sum();
        prop_assert_eq!(cells, g.h_classes().len());
    }

    #[test]
    fn parallel_and_sequential_greens_agree(s in semigroup()) {
        let a = GreensData::compute_with(&s, Exec::Sequential);
        let b = GreensData::compute_with(&s, Exec::Parallel);
        prop_assert_eq!(a.l_classes(), b.l_classes());
        prop_assert_eq!(a.r_classes(), b.r_classes());
        prop_assert_eq!(a.idempotents(), b.idempotents());
    }

    #[test]
    fn idempotents_are_idempotent(s in semigroup()) {
        for e in s.idempotents() {
            prop_assert_eq!(s.mul(e, e), e);
            prop_assert_eq!(s.mul(s.mul(e, e), e), e);
        }
    }

    #[test]
    fn relabelling_gives_an_isomorphic_copy((s, perm) in semigroup().prop_flat_map(|s| {
        let n = s.size();
        (Just(s), permutation(n))
    })) {
        let t = s.permuted(&perm);
        let iso = find_isomorphism(&s, &t).expect("a relabelled copy is isomorphic");
        prop_assert!(iso.verify(&s, &t).is_ok());
        prop_assert_eq!(classify(&s), classify(&t));
    }

    #[test]
    fn cayley_text_roundtrips(s in semigroup()) {
        let t = parse_cayley(&to_cayley_text(&s)).unwrap();
        prop_assert_eq!(t.rows(), s.rows());
        prop_assert_eq!(t.opposite().opposite().rows(), s.rows());
    }

    #[test]
    fn generator_text_gives_an_isomorphic_semigroup(s in semigroup()) {
        prop_assume!(s.size() < 16);
        let t = parse_generators(&to_generators_text(&s).unwrap(), 512).unwrap();
        prop_assert!(find_isomorphism(&s, &t).is_some());
    }

    #[test]
    fn roundtrip_on_left_reductive_regular_samples(s in semigroup()) {
        prop_assume!(s.is_regular() && s.is_left_reductive());
        let iso = roundtrip_semigroup(&s).unwrap();
        let lc = functor_c(&s).unwrap();
        let target = lc.cc.connection_semigroup().semigroup();
        for a in 0..s.size() {
            for b in 0..s.size() {
                prop_assert_eq!(iso.map[s.mul(a, b)], target.mul(iso.map[a], iso.map[b]));
            }
        }
    }

    #[test]
    fn cone_product_is_associative_and_star_composes(s in semigroup()) {
        prop_assume!(s.is_regular());
        let lc = conncat::functors::left_connected_category(&s, DEFAULT_CONE_CAP, Exec::default()).unwrap();
        let cs = lc.cc.full_cone_semigroup();
        prop_assert!(cs.semigroup().associativity_violation(Exec::default()).is_none());
        let c = lc.cc.category();
        for gamma in cs.cones() {
            for &f in c.outgoing(gamma.vertex) {
                for &g in c.outgoing(c.cod(f)) {
                    let two = cones::star(c, &cones::star(c, gamma, f), g);
                    prop_assert_eq!(two, cones::star(c, gamma, c.compose(f, g)));
                }
            }
        }
    }

    #[test]
    fn shuffled_rows_of_a_group_stay_a_group(p in permutation(3)) {
        // Z_3 relabelled by p.
        let z3 = FiniteSemigroup::from_cayley_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let t = z3.permuted(&p);
        let f = classify(&t);
        prop_assert!(f.inverse && f.monoid && !f.band);
    }
}
