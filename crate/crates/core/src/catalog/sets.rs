//! Concrete categories whose objects are subsets of `{1..n}` and whose
//! morphisms are pointwise maps.

use crate::category::{CategoryBuilder, FiniteCategory, Mor, Obj};
use crate::Result;
use std::collections::HashMap;

/// A map between subsets, stored pointwise on `{0..n-1}`; points outside
/// the domain map to `None`.
pub type PointMap = Vec<Option<u8>>;

#[derive(Clone, Debug)]
pub struct SetCategory {
    pub n: usize,
    pub category: FiniteCategory,
    masks: Vec<u32>,
    maps: Vec<PointMap>,
    lookup: HashMap<(Obj, Obj, PointMap), Mor>,
}

pub fn mask_label(mask: u32) -> String {
    let pts: Vec<String> = (0..32).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", pts.join(","))
}

fn map_label(m: &PointMap) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter_map(|(x, y)| y.map(|y| format!("{}>{}", x + 1, y + 1)))
        .collect();
    format!("[{}]", parts.join(" "))
}

impl SetCategory {
    /// Builds the category on `masks` with hom-sets listed by `homs(a, b)`.
    /// Inclusions are the identity maps of `a ⊆ b`.
    pub(crate) fn build(n: usize, masks: Vec<u32>, homs: impl Fn(u32, u32) -> Vec<PointMap>) -> Result<Self> {
        let mut b = CategoryBuilder::new();
        for &m in &masks {
            b.add_object(mask_label(m));
        }
        let mut maps = Vec::new();
        let mut lookup = HashMap::new();
        for (i, &a) in masks.iter().enumerate() {
            for (j, &c) in masks.iter().enumerate() {
                for map in homs(a, c) {
                    let m = b.add_morphism(i, j, format!("{}{}", mask_label(c), map_label(&map)));
                    lookup.insert((i, j, map.clone()), m);
                    maps.push(map);
                }
            }
        }
        let identity = |a: u32| -> PointMap { (0..n as u8).map(|x| (a >> x & 1 == 1).then_some(x)).collect() };
        for (i, &a) in masks.iter().enumerate() {
            b.set_identity(i, lookup[&(i, i, identity(a))]);
            for (j, &c) in masks.iter().enumerate() {
                if i != j && a & c == a {
                    b.add_inclusion(i, j, lookup[&(i, j, identity(a))]);
                }
            }
        }
        let dims: Vec<(Obj, Obj)> = {
            let mut v = Vec::with_capacity(maps.len());
            for (i, _) in masks.iter().enumerate() {
                for (j, _) in masks.iter().enumerate() {
                    v.extend(std::iter::repeat_n((i, j), homs(masks[i], masks[j]).len()));
                }
            }
            v
        };
        let category = b.build(|f, g| {
            let composite: PointMap = maps[f].iter().map(|x| x.and_then(|x| maps[g][x as usize])).collect();
            lookup[&(dims[f].0, dims[g].1, composite)]
        })?;
        Ok(SetCategory { n, category, masks, maps, lookup })
    }

    pub fn mask(&self, c: Obj) -> u32 {
        self.masks[c]
    }

    pub fn object_of_mask(&self, mask: u32) -> Option<Obj> {
        self.masks.iter().position(|&m| m == mask)
    }

    pub fn point_map(&self, f: Mor) -> &PointMap {
        &self.maps[f]
    }

    pub fn morphism(&self, dom: Obj, cod: Obj, map: &PointMap) -> Option<Mor> {
        self.lookup.get(&(dom, cod, map.clone())).copied()
    }
}

fn points(mask: u32) -> Vec<u8> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// All total maps from `a` to `b`.
pub(crate) fn all_maps(n: usize, a: u32, b: u32) -> Vec<PointMap> {
    let dom = points(a);
    let cod = points(b);
    let mut out: Vec<PointMap> = vec![vec![None; n]];
    for &x in &dom {
        out = out
            .into_iter()
            .flat_map(|m| {
                cod.iter().map(move |&y| {
                    let mut m = m.clone();
                    m[x as usize] = Some(y);
                    m
                })
            })
            .collect();
    }
    out
}

/// All partial injections with domain inside `a` and image inside `b`.
pub(crate) fn partial_injections(n: usize, a: u32, b: u32) -> Vec<PointMap> {
    let dom = points(a);
    let mut out: Vec<(PointMap, u32)> = vec![(vec![None; n], 0)];
    for &x in &dom {
        out = out
            .into_iter()
            .flat_map(|(m, used)| {
                let mut next = vec![(m.clone(), used)];
                for y in points(b & !used) {
                    let mut m2 = m.clone();
                    m2[x as usize] = Some(y);
                    next.push((m2, used | 1 << y));
                }
                next
            })
            .collect();
    }
    let mut maps: Vec<PointMap> = out.into_iter().map(|(m, _)| m).collect();
    maps.sort();
    maps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_counts() {
        assert_eq!(all_maps(3, 0b011, 0b111).len(), 9);
        assert_eq!(all_maps(3, 0b001, 0b110).len(), 2);
        assert_eq!(partial_injections(2, 0b11, 0b11).len(), 7);
        assert_eq!(partial_injections(2, 0, 0b11).len(), 1);
    }

    #[test]
    fn labels() {
        assert_eq!(mask_label(0b101), "{1,3}");
        assert_eq!(mask_label(0), "{}");
    }
}
