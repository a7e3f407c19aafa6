use super::{FiniteSemigroup, GreensData};
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub regular: bool,
    pub left_reductive: bool,
    pub right_reductive: bool,
    pub l_unipotent: bool,
    pub r_unipotent: bool,
    pub inverse: bool,
    pub band: bool,
    pub right_regular_band: bool,
    pub left_regular_band: bool,
    pub monoid: bool,
}

pub fn classify(s: &FiniteSemigroup) -> ClassFlags {
    classify_with(s, &GreensData::compute(s))
}

pub fn classify_with(s: &FiniteSemigroup, g: &GreensData) -> ClassFlags {
    let regular = s.is_regular();
    let es = g.idempotents();
    let one_per = |classes: &[Vec<usize>]| {
        classes.iter().all(|c| c.iter().filter(|&&a| g.is_idempotent(a)).count() == 1)
    };
    let band = es.len() == s.size();
    let commute = es.iter().all(|&e| es.iter().all(|&f| s.mul(e, f) == s.mul(f, e)));
    let efe = |left: bool| {
        es.iter().all(|&e| {
            es.iter().all(|&f| {
                let v = s.mul(s.mul(e, f), e);
                v == if left { s.mul(e, f) } else { s.mul(f, e) }
            })
        })
    };
    ClassFlags {
        regular,
        left_reductive: s.is_left_reductive(),
        right_reductive: s.is_right_reductive(),
        l_unipotent: regular && one_per(g.l_classes()),
        r_unipotent: regular && one_per(g.r_classes()),
        inverse: regular && commute,
        band,
        right_regular_band: band && efe(false),
        left_regular_band: band && efe(true),
        monoid: s.identity().is_some(),
    }
}

/// Seven characterizations of L-unipotency of a regular semigroup, each
/// evaluated on its own.
///
/// 1. every L-class holds exactly one idempotent;
/// 2. `eS ∩ fS = efS = feS` for idempotents `e, f`;
/// 3. `efe = fe` for idempotents `e, f`;
/// 4. `a'a = a''a` for all inverses `a', a''` of `a`;
/// 5. the idempotents of `L_a` are exactly `a'a` for every inverse `a'`;
/// 6. `a'ea = a''ea` for inverses `a', a''` of `a` and idempotent `e`;
/// 7. `aa'ea = ea` for every inverse `a'` of `a` and idempotent `e`.
pub fn l_unipotent_conditions(s: &FiniteSemigroup, g: &GreensData) -> [bool; 7] {
    let n = s.size();
    let es = g.idempotents();
    let inv: Vec<Vec<usize>> = (0..n).map(|a| s.inverses(a)).collect();
    let m = |a, b| s.mul(a, b);

    let c1 = g.l_classes().iter().all(|c| c.iter().filter(|&&a| m(a, a) == a).count() == 1);

    let right_ideal = |a: usize| -> Vec<bool> {
        let mut v = vec![false; n];
        for x in 0..n {
            v[m(a, x)] = true;
        }
        v
    };
    let ideals: Vec<Vec<bool>> = es.iter().map(|&e| right_ideal(e)).collect();
    let c2 = es.iter().enumerate().all(|(i, &e)| {
        es.iter().enumerate().all(|(j, &f)| {
            let meet: Vec<bool> = (0..n).map(|x| ideals[i][x] && ideals[j][x]).collect();
            meet == right_ideal(m(e, f)) && meet == right_ideal(m(f, e))
        })
    });

    let c3 = es.iter().all(|&e| es.iter().all(|&f| m(m(e, f), e) == m(f, e)));

    let c4 = (0..n).all(|a| {
        inv[a].iter().all(|&x| inv[a].iter().all(|&y| m(x, a) == m(y, a)))
    });

    let c5 = (0..n).all(|a| {
        !inv[a].is_empty()
            && inv[a].iter().all(|&x| {
                let ea = m(x, a);
                es.iter().filter(|&&e| g.l_related(e, a)).all(|&e| e == ea)
            })
    });

    let c6 = (0..n).all(|a| {
        es.iter().all(|&e| {
            let ea = m(e, a);
            inv[a].iter().all(|&x| inv[a].iter().all(|&y| m(x, ea) == m(y, ea)))
        })
    });

    let c7 = (0..n).all(|a| {
        es.iter().all(|&e| {
            let ea = m(e, a);
            inv[a].iter().all(|&x| m(m(a, x), ea) == ea)
        })
    });

    [c1, c2, c3, c4, c5, c6, c7]
}

/// Four characterizations of inverse semigroups among regular ones.
///
/// 1. idempotents commute;
/// 2. every element has exactly one inverse;
/// 3. `E(S)` is a semilattice: a subsemigroup in which the natural-order
///    meet of `e, f` exists and equals `ef`;
/// 4. every L-class and every R-class holds exactly one idempotent.
pub fn inverse_conditions(s: &FiniteSemigroup, g: &GreensData) -> [bool; 4] {
    let n = s.size();
    let es = g.idempotents();
    let c1 = es.iter().all(|&e| es.iter().all(|&f| s.mul(e, f) == s.mul(f, e)));
    let c2 = (0..n).all(|a| s.inverses(a).len() == 1);
    let order = crate::poset::Poset::from_fn(es.len(), |i, j| g.nat_leq(es[i], es[j]));
    let c3 = es.iter().enumerate().all(|(i, &e)| {
        es.iter().enumerate().all(|(j, &f)| order.meet(i, j).is_some_and(|k| es[k] == s.mul(e, f)))
    });
    let one = |classes: &[Vec<usize>]| {
        classes.iter().all(|c| c.iter().filter(|&&a| s.mul(a, a) == a).count() == 1)
    };
    let c4 = one(g.l_classes()) && one(g.r_classes());
    [c1, c2, c3, c4]
}

/// On idempotents, `e <=_l f` agrees with the natural order.
///
/// This holds in every L-unipotent semigroup.
pub fn idempotent_orders_agree(g: &GreensData) -> bool {
    let es = g.idempotents();
    es.iter().all(|&e| es.iter().all(|&f| g.leq_l(e, f) == g.nat_leq(e, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn all_same<const N: usize>(v: [bool; N]) -> bool {
        v.iter().all(|&b| b == v[0])
    }

    #[test]
    fn symmetric_inverse_monoid_flags() {
        let i2 = catalog::symmetric_inverse_monoid(2).unwrap();
        let f = classify(&i2);
        assert!(f.regular && f.inverse && f.l_unipotent && f.r_unipotent);
        assert!(f.left_reductive && f.right_reductive && f.monoid);
        assert!(!f.band);
    }

    #[test]
    fn l2_with_zero_semigroup() {
        let s = catalog::left_zero2_with_zero();
        let g = GreensData::compute(&s);
        let f = classify_with(&s, &g);
        assert!(f.regular);
        assert!(!f.l_unipotent);
        assert!(!f.left_reductive);
        assert!(g.r_class_poset(&s).unwrap().is_meet_semilattice());
    }

    #[test]
    fn semilattice_flags() {
        let y = catalog::semilattice2();
        let f = classify(&y);
        assert_eq!(
            f,
            ClassFlags {
                regular: true,
                left_reductive: true,
                right_reductive: true,
                l_unipotent: true,
                r_unipotent: true,
                inverse: true,
                band: true,
                right_regular_band: true,
                left_regular_band: true,
                monoid: true,
            }
        );
    }

    #[test]
    fn conditions_agree_on_transformations() {
        for n in 1..=3 {
            let t = catalog::transformation_monoid(n).unwrap();
            let g = GreensData::compute(&t);
            let c = l_unipotent_conditions(&t, &g);
            assert!(all_same(c), "{c:?}");
            assert_eq!(c[0], n <= 2);
            let d = inverse_conditions(&t, &g);
            assert!(all_same(d), "{d:?}");
        }
    }

    #[test]
    fn right_regular_band_is_l_unipotent() {
        let b = catalog::right_regular_band3();
        let g = GreensData::compute(&b);
        let f = classify_with(&b, &g);
        assert!(f.right_regular_band && f.l_unipotent && !f.inverse);
        assert_eq!(l_unipotent_conditions(&b, &g), [true; 7]);
        assert_eq!(inverse_conditions(&b, &g), [false; 4]);
        assert!(idempotent_orders_agree(&g));
    }
}
