//! The categories of principal left and right ideals of a regular semigroup.

use super::{CategoryBuilder, FiniteCategory, Mor, Obj};
use crate::semigroup::{FiniteSemigroup, GreensData};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// `r(e,u,f)` in the left category (`x -> xu` on `Se`, `u ∈ eSf`) or
/// `l(e,u,f)` in the right category (`x -> ux` on `eS`, `u ∈ fSe`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MorphismTriple {
    pub e: usize,
    pub u: usize,
    pub f: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// `𝕃(S)` or `ℝ(S)` with each morphism tagged by its canonical triple.
///
/// Objects are the L-classes (R-classes for the right category) that contain
/// idempotents, each represented by its least idempotent.
#[derive(Clone, Debug)]
pub struct SemigroupCategory {
    pub category: FiniteCategory,
    pub side: Side,
    object_idempotent: Vec<usize>,
    class_object: HashMap<usize, Obj>,
    triples: Vec<MorphismTriple>,
    lookup: HashMap<MorphismTriple, Mor>,
    class_of: Vec<usize>,
}

impl SemigroupCategory {
    /// The canonical idempotent representing object `c`.
    pub fn object_idempotent(&self, c: Obj) -> usize {
        self.object_idempotent[c]
    }

    /// The object `Se` (or `eS`) of an idempotent `e`.
    pub fn object_of(&self, e: usize) -> Option<Obj> {
        self.class_object.get(&self.class_of[e]).copied()
    }

    pub fn triple(&self, m: Mor) -> MorphismTriple {
        self.triples[m]
    }

    /// The morphism equal to the given triple, if the triple denotes one.
    ///
    /// Any idempotents in the right classes may be used; `u` is
    /// canonicalized as `e'u` (or `ue'`) for the canonical `e'`.
    pub fn morphism(&self, s: &FiniteSemigroup, e: usize, u: usize, f: usize) -> Option<Mor> {
        let a = self.object_of(e)?;
        let b = self.object_of(f)?;
        let (ce, cf) = (self.object_idempotent[a], self.object_idempotent[b]);
        let cu = match self.side {
            Side::Left => s.mul(ce, u),
            Side::Right => s.mul(u, ce),
        };
        self.lookup.get(&MorphismTriple { e: ce, u: cu, f: cf }).copied()
    }
}

fn check_regular(s: &FiniteSemigroup) -> Result<()> {
    match s.non_regular_element() {
        Some(a) => Err(Error::NotRegular(a)),
        None => Ok(()),
    }
}

/// `𝕃(S)`: objects `Se`, morphisms `r(e,u,f)` with `u ∈ eSf`, composition
/// `r(e,u,f) r(f,v,h) = r(e,uv,h)` and inclusions `r(e,e,f)` for `Se ⊆ Sf`.
pub fn build_left_category(s: &FiniteSemigroup, g: &GreensData) -> Result<SemigroupCategory> {
    build(s, g, Side::Left)
}

/// `ℝ(S)`: objects `eS`, morphisms `l(e,u,f)` with `u ∈ fSe`, composition
/// `l(e,u,f) l(f,v,h) = l(e,vu,h)` and inclusions `l(e,e,f)` for `eS ⊆ fS`.
pub fn build_right_category(s: &FiniteSemigroup, g: &GreensData) -> Result<SemigroupCategory> {
    build(s, g, Side::Right)
}

fn build(s: &FiniteSemigroup, g: &GreensData, side: Side) -> Result<SemigroupCategory> {
    check_regular(s)?;
    let class_of: Vec<usize> = (0..s.size())
        .map(|a| match side {
            Side::Left => g.l_class(a),
            Side::Right => g.r_class(a),
        })
        .collect();
    let mut object_idempotent = Vec::new();
    let mut class_object = HashMap::new();
    for &e in g.idempotents() {
        if let std::collections::hash_map::Entry::Vacant(slot) = class_object.entry(class_of[e]) {
            slot.insert(object_idempotent.len());
            object_idempotent.push(e);
        }
    }
    let mut b = CategoryBuilder::new();
    for &e in &object_idempotent {
        match side {
            Side::Left => b.add_object(format!("S{}", s.label(e))),
            Side::Right => b.add_object(format!("{}S", s.label(e))),
        };
    }
    let n = object_idempotent.len();
    let mut triples = Vec::new();
    let mut lookup = HashMap::new();
    for a in 0..n {
        for c in 0..n {
            let (e, f) = (object_idempotent[a], object_idempotent[c]);
            let witnesses: BTreeSet<usize> = (0..s.size())
                .map(|x| match side {
                    Side::Left => s.mul(s.mul(e, x), f),
                    Side::Right => s.mul(s.mul(f, x), e),
                })
                .collect();
            for u in witnesses {
                let t = MorphismTriple { e, u, f };
                let name = match side {
                    Side::Left => format!("r({},{},{})", s.label(e), s.label(u), s.label(f)),
                    Side::Right => format!("l({},{},{})", s.label(e), s.label(u), s.label(f)),
                };
                let m = b.add_morphism(a, c, name);
                lookup.insert(t, m);
                triples.push(t);
                if u == e && e == f {
                    b.set_identity(a, m);
                }
            }
        }
    }
    for a in 0..n {
        for c in 0..n {
            let (e, f) = (object_idempotent[a], object_idempotent[c]);
            let below = match side {
                Side::Left => g.leq_l(e, f),
                Side::Right => g.leq_r(e, f),
            };
            if a != c && below {
                b.add_inclusion(a, c, lookup[&MorphismTriple { e, u: e, f }]);
            }
        }
    }
    let category = b.build(|x, y| {
        let (tx, ty) = (triples[x], triples[y]);
        let u = match side {
            Side::Left => s.mul(tx.u, ty.u),
            Side::Right => s.mul(ty.u, tx.u),
        };
        lookup[&MorphismTriple { e: tx.e, u, f: ty.f }]
    })?;
    Ok(SemigroupCategory { category, side, object_idempotent, class_object, triples, lookup, class_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::category::{verify_normal, Functor, NormalCategory};

    #[test]
    fn left_category_of_t2() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let g = GreensData::compute(&t2);
        let l = build_left_category(&t2, &g).unwrap();
        let c = &l.category;
        assert_eq!(c.object_count(), 3);
        // Objects: S[1 1], S[1 2], S[2 2].
        assert!(c.leq(0, 1) && c.leq(2, 1) && !c.leq(0, 2));
        assert_eq!(c.hom(0, 2).len(), 1);
        assert_eq!(c.hom(1, 1).len(), 4);
        assert!(verify_normal(c, 1000).all_passed());
    }

    #[test]
    fn right_category_of_t2() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let g = GreensData::compute(&t2);
        let r = build_right_category(&t2, &g).unwrap();
        assert_eq!(r.category.object_count(), 2);
        assert!(verify_normal(&r.category, 1000).all_passed());
    }

    #[test]
    fn l2_with_zero_left_category() {
        let s = catalog::left_zero2_with_zero();
        let g = GreensData::compute(&s);
        let l = build_left_category(&s, &g).unwrap();
        assert_eq!(l.category.object_count(), 2);
    }

    #[test]
    fn group_has_one_object() {
        let z2 = catalog::cyclic_group2();
        let g = GreensData::compute(&z2);
        let l = build_left_category(&z2, &g).unwrap();
        assert_eq!(l.category.object_count(), 1);
        assert_eq!(l.category.morphism_count(), 2);
        let nc = NormalCategory::new(l.category.clone()).unwrap();
        assert!((0..2).all(|m| nc.is_iso(m)));
        assert_eq!(build_right_category(&z2, &g).unwrap().category.object_count(), 1);
    }

    #[test]
    fn inclusions_and_retractions_in_t3() {
        let t3 = catalog::transformation_monoid(3).unwrap();
        let g = GreensData::compute(&t3);
        let l = build_left_category(&t3, &g).unwrap();
        let c = &l.category;
        for m in 0..c.morphism_count() {
            let t = l.triple(m);
            let (a, b) = (c.dom(m), c.cod(m));
            assert_eq!(c.is_inclusion(m), t.u == t.e && g.leq_l(t.e, t.f) && (a != b || t.e == t.f));
            if c.is_inclusion(m) {
                let q = l.morphism(&t3, t.f, t3.mul(t.f, t.e), t.e).unwrap();
                assert_eq!(c.compose(m, q), c.identity(a));
            }
        }
    }

    #[test]
    fn image_matches_displayed_factorization() {
        let t3 = catalog::transformation_monoid(3).unwrap();
        let g = GreensData::compute(&t3);
        let l = build_left_category(&t3, &g).unwrap();
        let nc = NormalCategory::new(l.category.clone()).unwrap();
        for m in 0..nc.category().morphism_count() {
            let t = l.triple(m);
            // im r(e,u,f) is Su = Sh for h ∈ E(L_u).
            let h = g.idempotents_in_l(t.u)[0];
            assert_eq!(nc.image(m), l.object_of(h).unwrap());
        }
        assert!(nc.check_epi_component_rules(crate::exec::Exec::default()).is_empty());
    }

    #[test]
    fn inverse_semigroup_left_right_isomorphism() {
        let i2 = catalog::symmetric_inverse_monoid(2).unwrap();
        let g = GreensData::compute(&i2);
        let l = build_left_category(&i2, &g).unwrap();
        let r = build_right_category(&i2, &g).unwrap();
        let inv = |u: usize| i2.inverses(u)[0];
        let objects = (0..l.category.object_count())
            .map(|c| r.object_of(l.object_idempotent(c)).unwrap())
            .collect();
        let morphisms = (0..l.category.morphism_count())
            .map(|m| {
                let t = l.triple(m);
                r.morphism(&i2, t.e, inv(t.u), t.f).unwrap()
            })
            .collect();
        let f = Functor { objects, morphisms };
        f.check(&l.category, &r.category).unwrap();
        assert!(f.is_isomorphism(&l.category, &r.category));
    }
}
