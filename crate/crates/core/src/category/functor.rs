use super::{FiniteCategory, Mor, Obj};
use crate::{Error, Result};
use serde::Serialize;

/// A functor between finite categories given by its object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Functor {
    pub objects: Vec<Obj>,
    pub morphisms: Vec<Mor>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Functor { objects: (0..c.object_count()).collect(), morphisms: (0..c.morphism_count()).collect() }
    }

    /// Checks typing, identities, composition and that inclusions go to inclusions.
    pub fn check(&self, src: &FiniteCategory, dst: &FiniteCategory) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(format!("not a functor: {m}")));
        if self.objects.len() != src.object_count() || self.morphisms.len() != src.morphism_count() {
            return bad("map sizes do not match the source".into());
        }
        if self.objects.iter().any(|&o| o >= dst.object_count())
            || self.morphisms.iter().any(|&m| m >= dst.morphism_count())
        {
            return bad("image out of range".into());
        }
        for f in 0..src.morphism_count() {
            let g = self.morphisms[f];
            if dst.dom(g) != self.objects[src.dom(f)] || dst.cod(g) != self.objects[src.cod(f)] {
                return bad(format!("morphism {f} is sent to a mistyped morphism"));
            }
        }
        for c in 0..src.object_count() {
            if self.morphisms[src.identity(c)] != dst.identity(self.objects[c]) {
                return bad(format!("identity of object {c} is not preserved"));
            }
        }
        for f in 0..src.morphism_count() {
            for &g in src.outgoing(src.cod(f)) {
                if self.morphisms[src.compose(f, g)] != dst.compose(self.morphisms[f], self.morphisms[g]) {
                    return bad(format!("composite of {f} and {g} is not preserved"));
                }
            }
            if src.is_inclusion(f) && !dst.is_inclusion(self.morphisms[f]) {
                return bad(format!("inclusion {f} is not sent to an inclusion"));
            }
        }
        Ok(())
    }

    /// True when both maps are bijective and the object map is an order
    /// isomorphism. Together with [`Functor::check`] this makes the functor
    /// an isomorphism of categories with subobjects.
    pub fn is_isomorphism(&self, src: &FiniteCategory, dst: &FiniteCategory) -> bool {
        let bijective = |map: &[usize], n: usize| {
            let mut hit = vec![false; n];
            map.len() == n && map.iter().all(|&v| v < n && !std::mem::replace(&mut hit[v], true))
        };
        if !bijective(&self.objects, dst.object_count()) || !bijective(&self.morphisms, dst.morphism_count()) {
            return false;
        }
        let n = src.object_count();
        (0..n).all(|a| (0..n).all(|b| src.leq(a, b) == dst.leq(self.objects[a], self.objects[b])))
    }

    pub fn inverse(&self) -> Self {
        let mut objects = vec![0; self.objects.len()];
        for (a, &b) in self.objects.iter().enumerate() {
            objects[b] = a;
        }
        let mut morphisms = vec![0; self.morphisms.len()];
        for (a, &b) in self.morphisms.iter().enumerate() {
            morphisms[b] = a;
        }
        Functor { objects, morphisms }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        Functor {
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        }
    }
}
