//! Finite categories with a designated preorder of inclusions.

mod axioms;
mod factor;
mod format;
mod functor;
mod semigroup_category;

pub use axioms::{verify_normal, verify_subobject_axioms, AxiomReport, AxiomResult};
pub use factor::{NormalCategory, NormalFactorization};
pub use format::{parse_category, to_category_text};
pub use functor::Functor;
pub use semigroup_category::{
    build_left_category, build_right_category, MorphismTriple, SemigroupCategory, Side,
};

use crate::{Error, Result};
use std::collections::HashMap;

pub type Obj = usize;
pub type Mor = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismData {
    pub dom: Obj,
    pub cod: Obj,
    pub label: String,
}

/// A finite category stored as explicit tables.
///
/// Morphisms are dense indices. Composition is written left to right:
/// `compose(f, g)` is defined when `cod f = dom g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    homs: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    out_pos: Vec<usize>,
    comp: Vec<Vec<Mor>>,
    identities: Vec<Mor>,
    inclusions: Vec<Option<Mor>>,
}

#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<MorphismData>,
    identities: HashMap<Obj, Mor>,
    inclusions: Vec<(Obj, Obj, Mor)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, label: impl Into<String>) -> Obj {
        self.objects.push(label.into());
        self.objects.len() - 1
    }

    pub fn add_morphism(&mut self, dom: Obj, cod: Obj, label: impl Into<String>) -> Mor {
        self.morphisms.push(MorphismData { dom, cod, label: label.into() });
        self.morphisms.len() - 1
    }

    pub fn set_identity(&mut self, obj: Obj, m: Mor) {
        self.identities.insert(obj, m);
    }

    /// Designates `m` as the inclusion `j(c, d)`.
    pub fn add_inclusion(&mut self, c: Obj, d: Obj, m: Mor) {
        self.inclusions.push((c, d, m));
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    /// Finishes the category, tabulating `compose` on every composable pair.
    ///
    /// Checks typing only; the category laws are checked by
    /// [`verify_subobject_axioms`].
    pub fn build(self, compose: impl Fn(Mor, Mor) -> Mor) -> Result<FiniteCategory> {
        let n = self.objects.len();
        if n == 0 {
            return Err(Error::InvalidCategory("no objects".into()));
        }
        for (i, m) in self.morphisms.iter().enumerate() {
            if m.dom >= n || m.cod >= n {
                return Err(Error::InvalidCategory(format!("morphism {i} has an unknown end")));
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        let mut outgoing = vec![Vec::new(); n];
        let mut out_pos = vec![0; self.morphisms.len()];
        for (i, m) in self.morphisms.iter().enumerate() {
            homs[m.dom * n + m.cod].push(i);
            out_pos[i] = outgoing[m.dom].len();
            outgoing[m.dom].push(i);
        }
        let mut identities = vec![0; n];
        for (c, id) in identities.iter_mut().enumerate() {
            let m = *self
                .identities
                .get(&c)
                .ok_or_else(|| Error::InvalidCategory(format!("object {c} has no identity")))?;
            if m >= self.morphisms.len() || self.morphisms[m].dom != c || self.morphisms[m].cod != c {
                return Err(Error::InvalidCategory(format!("identity of object {c} is not an endomorphism")));
            }
            *id = m;
        }
        let mut inclusions = vec![None; n * n];
        for c in 0..n {
            inclusions[c * n + c] = Some(identities[c]);
        }
        for &(c, d, m) in &self.inclusions {
            if c >= n || d >= n || m >= self.morphisms.len() {
                return Err(Error::InvalidCategory(format!("inclusion ({c},{d}) out of range")));
            }
            let md = &self.morphisms[m];
            if md.dom != c || md.cod != d {
                return Err(Error::InvalidCategory(format!("inclusion ({c},{d}) has the wrong type")));
            }
            match inclusions[c * n + d] {
                Some(old) if old != m => {
                    return Err(Error::InvalidCategory(format!("two inclusions designated for ({c},{d})")));
                }
                _ => inclusions[c * n + d] = Some(m),
            }
        }
        let mut comp = Vec::with_capacity(self.morphisms.len());
        for (f, fd) in self.morphisms.iter().enumerate() {
            let mut row = Vec::with_capacity(outgoing[fd.cod].len());
            for &g in &outgoing[fd.cod] {
                let h = compose(f, g);
                if h >= self.morphisms.len()
                    || self.morphisms[h].dom != fd.dom
                    || self.morphisms[h].cod != self.morphisms[g].cod
                {
                    return Err(Error::InvalidCategory(format!("composite of {f} and {g} is mistyped")));
                }
                row.push(h);
            }
            comp.push(row);
        }
        Ok(FiniteCategory {
            objects: self.objects,
            morphisms: self.morphisms,
            homs,
            outgoing,
            out_pos,
            comp,
            identities,
            inclusions,
        })
    }
}

impl FiniteCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_label(&self, c: Obj) -> &str {
        &self.objects[c]
    }

    pub fn morphism_label(&self, f: Mor) -> &str {
        &self.morphisms[f].label
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f].cod
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn outgoing(&self, a: Obj) -> &[Mor] {
        &self.outgoing[a]
    }

    /// Position of `f` inside its hom-set.
    pub fn hom_position(&self, f: Mor) -> usize {
        let h = self.hom(self.dom(f), self.cod(f));
        h.iter().position(|&g| g == f).expect("morphism is in its hom-set")
    }

    /// `fg`: first `f`, then `g`. Panics unless `cod f = dom g`.
    #[inline]
    pub fn compose(&self, f: Mor, g: Mor) -> Mor {
        assert_eq!(self.cod(f), self.dom(g), "composing non-composable morphisms");
        self.comp[f][self.out_pos[g]]
    }

    pub fn try_compose(&self, f: Mor, g: Mor) -> Option<Mor> {
        (self.cod(f) == self.dom(g)).then(|| self.comp[f][self.out_pos[g]])
    }

    pub fn identity(&self, c: Obj) -> Mor {
        self.identities[c]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// `c ⪯ d`: there is an inclusion from `c` to `d`.
    pub fn leq(&self, c: Obj, d: Obj) -> bool {
        self.inclusions[c * self.objects.len() + d].is_some()
    }

    pub fn inclusion(&self, c: Obj, d: Obj) -> Option<Mor> {
        self.inclusions[c * self.objects.len() + d]
    }

    pub fn is_inclusion(&self, f: Mor) -> bool {
        self.inclusion(self.dom(f), self.cod(f)) == Some(f)
    }

    /// The inverse of `f` if it is an isomorphism.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a).iter().copied().find(|&g| {
            self.compose(f, g) == self.identity(a) && self.compose(g, f) == self.identity(b)
        })
    }

    /// Left-cancellable: `fx = fy` implies `x = y`.
    pub fn is_epi(&self, f: Mor) -> bool {
        let out = self.outgoing(self.cod(f));
        let mut seen = std::collections::HashSet::new();
        out.iter().all(|&x| seen.insert(self.compose(f, x)))
    }

    /// Right-cancellable: `xf = yf` implies `x = y`.
    pub fn is_mono(&self, f: Mor) -> bool {
        let a = self.dom(f);
        (0..self.object_count()).all(|c| {
            let mut seen = std::collections::HashSet::new();
            self.hom(c, a).iter().all(|&x| seen.insert(self.compose(x, f)))
        })
    }

    /// Objects in a linear extension of ⪯ listing larger objects first.
    pub fn top_down_order(&self) -> Vec<Obj> {
        let n = self.object_count();
        let mut order: Vec<Obj> = (0..n).collect();
        let above = |c: Obj| (0..n).filter(|&d| self.leq(c, d)).count();
        order.sort_by_key(|&c| (above(c), c));
        order
    }

    /// The preorder as a poset (it is one whenever the axioms hold).
    pub fn object_poset(&self) -> crate::poset::Poset {
        crate::poset::Poset::from_fn(self.object_count(), |a, b| self.leq(a, b))
    }

    /// A largest object, if one exists.
    pub fn largest_object(&self) -> Option<Obj> {
        let n = self.object_count();
        (0..n).find(|&k| (0..n).all(|c| self.leq(c, k)))
    }

    pub fn is_bounded_above(&self) -> bool {
        self.largest_object().is_some()
    }

    pub fn hom_sizes(&self) -> Vec<Vec<usize>> {
        let n = self.object_count();
        (0..n).map(|a| (0..n).map(|b| self.hom(a, b).len()).collect()).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// One object, one morphism.
    pub(crate) fn trivial() -> FiniteCategory {
        let mut b = CategoryBuilder::new();
        let o = b.add_object("o");
        let id = b.add_morphism(o, o, "1");
        b.set_identity(o, id);
        b.build(|_, _| id).unwrap()
    }

    #[test]
    fn trivial_category() {
        let c = trivial();
        assert_eq!(c.compose(0, 0), 0);
        assert!(c.is_epi(0) && c.is_mono(0));
        assert_eq!(c.inverse(0), Some(0));
        assert_eq!(c.largest_object(), Some(0));
    }

    #[test]
    fn mistyped_composite_rejected() {
        let mut b = CategoryBuilder::new();
        let x = b.add_object("x");
        let y = b.add_object("y");
        let ix = b.add_morphism(x, x, "1x");
        let iy = b.add_morphism(y, y, "1y");
        let f = b.add_morphism(x, y, "f");
        b.set_identity(x, ix);
        b.set_identity(y, iy);
        let err = b.build(|_, _| f).unwrap_err();
        assert!(matches!(err, Error::InvalidCategory(_)));
    }
}
