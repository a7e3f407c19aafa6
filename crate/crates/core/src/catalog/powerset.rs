//! The powerset category `𝕡`, its cone semigroup and the partitions
//! labelling its R-classes.

use super::{powerset_set_category, transformations, SetCategory};
use crate::category::NormalCategory;
use crate::cones::{Cone, DEFAULT_CONE_CAP};
use crate::connected::ConnectedCategory;
use crate::exec::Exec;
use crate::poset::Poset;
use crate::semigroup::{SemigroupIso, Transformation};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A partition of `{0..n-1}` as sorted blocks, ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub blocks: Vec<Vec<u8>>,
}

impl Partition {
    /// The kernel of a map given by its values on `{0..n-1}`.
    pub fn kernel(values: &[u8]) -> Self {
        let mut blocks: Vec<Vec<u8>> = Vec::new();
        for (x, &v) in values.iter().enumerate() {
            match (0..x).find(|&y| values[y] == v) {
                Some(y) => blocks.iter_mut().find(|b| b.contains(&(y as u8))).unwrap().push(x as u8),
                None => blocks.push(vec![x as u8]),
            }
        }
        Partition { blocks }
    }

    fn block_of(&self, x: u8) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).expect("total partition")
    }

    /// Whether every block of `other` lies inside a block of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.blocks.iter().all(|b| b.iter().all(|&x| self.block_of(x) == self.block_of(b[0])))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// All partitions of `{0..n-1}` (restricted growth order), with the poset
/// where `π <= π'` iff `π ⊇ π'` as equivalence relations.
pub fn partition_lattice(n: usize) -> (Vec<Partition>, Poset) {
    fn grow(n: usize, word: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if word.len() == n {
            out.push(Partition::kernel(word));
            return;
        }
        let next = word.iter().copied().max().map_or(0, |m| m + 1);
        for v in 0..=next {
            word.push(v);
            grow(n, word, out);
            word.pop();
        }
    }
    let mut parts = Vec::new();
    grow(n, &mut Vec::new(), &mut parts);
    let poset = Poset::from_fn(parts.len(), |i, j| parts[i].contains(&parts[j]));
    (parts, poset)
}

/// `𝕡_n` connected by every R-class of its cone semigroup.
pub fn powerset_connected(n: usize) -> Result<(SetCategory, ConnectedCategory)> {
    let sc = powerset_set_category(n)?;
    let nc = NormalCategory::new(sc.category.clone())?;
    let cc = ConnectedCategory::with_full_downset(nc, DEFAULT_CONE_CAP, Exec::default())?;
    Ok((sc, cc))
}

fn top_values(sc: &SetCategory, cone: &Cone) -> Vec<u8> {
    let top = sc.object_of_mask((1u32 << sc.n) - 1).expect("full set is an object");
    sc.point_map(cone.components[top]).iter().map(|v| v.expect("total map")).collect()
}

/// The partition `π_γ`, the kernel of `γ(n)`, for a representative of
/// each R-class of `Ĉ(𝕡)` in class order.
pub fn partition_labels(sc: &SetCategory, cc: &ConnectedCategory) -> Vec<Partition> {
    let full = cc.full_cone_semigroup();
    full.greens().r_classes().iter().map(|cl| Partition::kernel(&top_values(sc, full.cone(cl[0])))).collect()
}

/// `φ: γ ↦ γ(n) i(Z,n)` from `Ĉ(𝕡)` into `T_n`, verified to be an isomorphism.
pub fn phi_isomorphism(sc: &SetCategory, cc: &ConnectedCategory) -> Result<SemigroupIso> {
    let full = cc.full_cone_semigroup();
    let elems = transformations(sc.n);
    let map = full
        .cones()
        .iter()
        .map(|cone| {
            let t = Transformation(top_values(sc, cone));
            elems.binary_search(&t).map_err(|_| Error::IsoFailure(format!("{t} is not in T_{}", sc.n)))
        })
        .collect::<Result<Vec<_>>>()?;
    let iso = SemigroupIso { map };
    iso.verify(full.semigroup(), &super::transformation_monoid(sc.n)?)?;
    Ok(iso)
}

/// The restriction cone `γ(S) = α|_S` with vertex the image of `α`.
pub fn restriction_cone(sc: &SetCategory, alpha: &Transformation) -> Option<Cone> {
    let c = &sc.category;
    let vertex = sc.object_of_mask(alpha.image())?;
    let components = (0..c.object_count())
        .map(|a| {
            let mask = sc.mask(a);
            let map: Vec<Option<u8>> =
                (0..sc.n).map(|x| (mask >> x & 1 == 1).then(|| alpha.apply(x) as u8)).collect();
            sc.morphism(a, vertex, &map)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Cone { vertex, components })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partition_lattice(1).0.len(), 1);
        assert_eq!(partition_lattice(3).0.len(), 5);
        assert_eq!(partition_lattice(4).0.len(), 15);
        let (parts, poset) = partition_lattice(3);
        assert!(poset.is_partial_order());
        assert_eq!(parts[poset.maximum().unwrap()].blocks.len(), 3);
        assert_eq!(parts[0].to_string(), "{123}");
    }

    #[test]
    fn phi_is_an_isomorphism() {
        for n in 1..=3 {
            let (sc, cc) = powerset_connected(n).unwrap();
            let iso = phi_isomorphism(&sc, &cc).unwrap();
            let elems = transformations(n);
            for (i, &t) in iso.map.iter().enumerate() {
                let back = restriction_cone(&sc, &elems[t]).unwrap();
                assert_eq!(&back, cc.full_cone_semigroup().cone(i));
            }
        }
    }

    #[test]
    fn classes_are_labelled_by_partitions() {
        let (sc, cc) = powerset_connected(3).unwrap();
        let labels = partition_labels(&sc, &cc);
        let (parts, lattice) = partition_lattice(3);
        let map: Vec<usize> = labels.iter().map(|p| parts.iter().position(|q| q == p).unwrap()).collect();
        assert!(cc.r_poset().is_isomorphism(&lattice, &map));
    }
}
