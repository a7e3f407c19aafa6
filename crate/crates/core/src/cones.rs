//! Cones in a normal category and the semigroup they form.

use crate::category::{FiniteCategory, Mor, NormalCategory, Obj, SemigroupCategory};
use crate::exec::Exec;
use crate::poset::Poset;
use crate::semigroup::{FiniteSemigroup, GreensData};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_CONE_CAP: usize = 1_000_000;

/// A family of morphisms `γ(c): c -> vertex`, one per object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cone {
    pub vertex: Obj,
    pub components: Vec<Mor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeDefect {
    /// `γ(c)` is not a morphism from `c` to the vertex.
    WrongType(Obj),
    /// `j(a,b) γ(b) != γ(a)`.
    NotCommuting(Obj, Obj),
    NoIsomorphism,
}

/// Checks both cone conditions exhaustively, returning the first defect.
pub fn check_cone(c: &FiniteCategory, cone: &Cone) -> std::result::Result<(), ConeDefect> {
    let n = c.object_count();
    if cone.components.len() != n || cone.vertex >= n {
        return Err(ConeDefect::WrongType(cone.components.len().min(n)));
    }
    for (a, &m) in cone.components.iter().enumerate() {
        if m >= c.morphism_count() || c.dom(m) != a || c.cod(m) != cone.vertex {
            return Err(ConeDefect::WrongType(a));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if let Some(j) = c.inclusion(a, b) {
                if c.compose(j, cone.components[b]) != cone.components[a] {
                    return Err(ConeDefect::NotCommuting(a, b));
                }
            }
        }
    }
    if cone.components.iter().any(|&m| c.inverse(m).is_some()) {
        Ok(())
    } else {
        Err(ConeDefect::NoIsomorphism)
    }
}

pub fn is_cone(c: &FiniteCategory, cone: &Cone) -> bool {
    check_cone(c, cone).is_ok()
}

/// `γ ∗ f`, the cone with components `γ(c) f` and vertex `cod f`.
pub fn star(c: &FiniteCategory, cone: &Cone, f: Mor) -> Cone {
    Cone { vertex: c.cod(f), components: cone.components.iter().map(|&m| c.compose(m, f)).collect() }
}

/// `γ · δ = γ ∗ (δ(z_γ))°`.
pub fn compose(nc: &NormalCategory, gamma: &Cone, delta: &Cone) -> Cone {
    star(nc.category(), gamma, nc.epi_component(delta.components[gamma.vertex]))
}

pub fn is_idempotent(c: &FiniteCategory, cone: &Cone) -> bool {
    cone.components[cone.vertex] == c.identity(cone.vertex)
}

/// The serialized form `vertex; c0:morph c1:morph ...` using morphism labels.
pub fn cone_line(c: &FiniteCategory, cone: &Cone) -> String {
    let parts: Vec<String> = cone
        .components
        .iter()
        .enumerate()
        .map(|(a, &m)| format!("{a}:{}", c.morphism_label(m)))
        .collect();
    format!("{}; {}", cone.vertex, parts.join(" "))
}

struct Search<'a> {
    c: &'a FiniteCategory,
    order: Vec<Obj>,
    isos: Vec<bool>,
    visited: &'a AtomicUsize,
    cap: usize,
}

impl Search<'_> {
    fn run(&self, vertex: Obj, fixed: Option<(Obj, Mor)>, first_only: bool, out: &mut Vec<Cone>) -> Result<()> {
        let n = self.c.object_count();
        let mut comps = vec![usize::MAX; n];
        self.step(vertex, 0, fixed, first_only, &mut comps, out)
    }

    fn step(
        &self,
        vertex: Obj,
        k: usize,
        fixed: Option<(Obj, Mor)>,
        first_only: bool,
        comps: &mut Vec<Mor>,
        out: &mut Vec<Cone>,
    ) -> Result<()> {
        if first_only && !out.is_empty() {
            return Ok(());
        }
        if self.visited.fetch_add(1, Ordering::Relaxed) >= self.cap {
            return Err(Error::SearchSpaceTooLarge(self.cap));
        }
        if k == self.order.len() {
            if comps.iter().any(|&m| self.isos[m]) {
                out.push(Cone { vertex, components: comps.clone() });
            }
            return Ok(());
        }
        let c = self.c;
        let a = self.order[k];
        // Components at larger objects are already fixed; they force this one.
        let mut forced = None;
        for &b in &self.order[..k] {
            if let Some(j) = c.inclusion(a, b) {
                let v = c.compose(j, comps[b]);
                match forced {
                    None => forced = Some(v),
                    Some(w) if w != v => return Ok(()),
                    _ => {}
                }
            }
        }
        if let Some((fa, fm)) = fixed {
            if fa == a {
                match forced {
                    Some(v) if v != fm => return Ok(()),
                    _ => forced = Some(fm),
                }
            }
        }
        let choices: Vec<Mor> = match forced {
            Some(v) => vec![v],
            None => c.hom(a, vertex).to_vec(),
        };
        for m in choices {
            comps[a] = m;
            self.step(vertex, k + 1, fixed, first_only, comps, out)?;
        }
        comps[a] = usize::MAX;
        Ok(())
    }
}

/// All cones of `c`, sorted by vertex and then components.
///
/// Objects are filled in from the top of the preorder down, so components
/// below an already chosen one are forced. At most `cap` partial
/// assignments are visited in total.
pub fn enumerate_cone_list(c: &FiniteCategory, cap: usize, exec: Exec) -> Result<Vec<Cone>> {
    let visited = AtomicUsize::new(0);
    let search = Search {
        c,
        order: c.top_down_order(),
        isos: (0..c.morphism_count()).map(|m| c.inverse(m).is_some()).collect(),
        visited: &visited,
        cap,
    };
    let per_vertex = exec.map(c.object_count(), |z| {
        let mut out = Vec::new();
        search.run(z, None, false, &mut out).map(|_| out)
    });
    let mut all = Vec::new();
    for r in per_vertex {
        all.extend(r?);
    }
    all.sort();
    Ok(all)
}

/// A cone with vertex `v` whose component at `v` is the identity.
pub fn find_identity_cone(c: &FiniteCategory, v: Obj, cap: usize) -> Result<Option<Cone>> {
    let visited = AtomicUsize::new(0);
    let search = Search {
        c,
        order: c.top_down_order(),
        isos: (0..c.morphism_count()).map(|m| c.inverse(m).is_some()).collect(),
        visited: &visited,
        cap,
    };
    let mut out = Vec::new();
    search.run(v, Some((v, c.identity(v))), true, &mut out)?;
    Ok(out.into_iter().next())
}

/// A semigroup of cones with its multiplication table and Green's data.
#[derive(Clone, Debug)]
pub struct ConeSemigroup {
    cones: Vec<Cone>,
    index: HashMap<Cone, usize>,
    semigroup: FiniteSemigroup,
    greens: GreensData,
}

impl ConeSemigroup {
    /// Tabulates the product on `cones`, which must be closed under it.
    pub fn from_cones(nc: &NormalCategory, cones: Vec<Cone>, exec: Exec) -> Result<Self> {
        let index: HashMap<Cone, usize> = cones.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let k = cones.len();
        if k == 0 {
            return Err(Error::InvalidInput("no cones".into()));
        }
        let rows: Vec<Result<Vec<u32>>> = exec.map(k, |a| {
            (0..k)
                .map(|b| {
                    let p = compose(nc, &cones[a], &cones[b]);
                    index.get(&p).map(|&i| i as u32).ok_or_else(|| {
                        Error::InvalidInput(format!("cone set not closed: product of {a} and {b}"))
                    })
                })
                .collect()
        });
        let mut table = Vec::with_capacity(k * k);
        for r in rows {
            table.extend(r?);
        }
        let labels = (0..k).map(|i| format!("c{i}")).collect();
        let semigroup = FiniteSemigroup::from_trusted(k, table, labels);
        let greens = GreensData::compute_with(&semigroup, exec);
        Ok(ConeSemigroup { cones, index, semigroup, greens })
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn index_of(&self, cone: &Cone) -> Option<usize> {
        self.index.get(cone).copied()
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn greens(&self) -> &GreensData {
        &self.greens
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.semigroup.mul(a, b)
    }

    /// The poset of R-classes (every cone semigroup is regular).
    pub fn r_class_poset(&self) -> Poset {
        let reps: Vec<usize> = self.greens.r_classes().iter().map(|c| c[0]).collect();
        Poset::from_fn(reps.len(), |i, j| self.greens.leq_r(reps[i], reps[j]))
    }
}

/// `Ĉ`, the semigroup of all cones of a normal category.
pub fn enumerate_cones(nc: &NormalCategory, cap: usize, exec: Exec) -> Result<ConeSemigroup> {
    let cones = enumerate_cone_list(nc.category(), cap, exec)?;
    ConeSemigroup::from_cones(nc, cones, exec)
}

/// The principal cone `r^a: Se -> r(e, ea, f)` with `f ∈ E(L_a)`.
pub fn principal_cone(l: &SemigroupCategory, s: &FiniteSemigroup, g: &GreensData, a: usize) -> Result<Cone> {
    let f = *g.idempotents_in_l(a).first().ok_or(Error::NotRegular(a))?;
    let vertex = l.object_of(f).ok_or(Error::NotRegular(a))?;
    let components = (0..l.category.object_count())
        .map(|c| {
            let e = l.object_idempotent(c);
            l.morphism(s, e, s.mul(e, a), f).ok_or(Error::NotRegular(a))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Cone { vertex, components })
}

/// The inverse `χ = μ ∗ γ(d)⁻¹` built from an idempotent cone `μ` with
/// vertex `z_γ` and an object `d` where `γ(d)` is an isomorphism.
pub fn inverse_cone(nc: &NormalCategory, mu: &Cone, gamma: &Cone) -> Option<Cone> {
    let d = (0..gamma.components.len()).find(|&d| nc.is_iso(gamma.components[d]))?;
    Some(star(nc.category(), mu, nc.inverse(gamma.components[d])?))
}

/// Compares the cone-theoretic descriptions of Green's quasi-orders with
/// the ones computed from the multiplication table. Returns mismatches.
///
/// * `γ <=_l δ` iff `z_γ ⪯ z_δ`;
/// * `γ <=_r δ` iff `γ = δ ∗ h` for an epimorphism `h: z_δ -> z_γ`;
///   when `δ` is idempotent, `h` is necessarily `γ(z_δ)`;
/// * for idempotents, `ν <= μ` iff `ν(z_μ)` is a retraction and
///   `ν = μ ∗ ν(z_μ)`.
pub fn cone_greens_check(nc: &NormalCategory, cs: &ConeSemigroup, exec: Exec) -> Vec<String> {
    let c = nc.category();
    let g = cs.greens();
    let k = cs.len();
    let per_row = exec.map(k, |x| {
        let mut bad = Vec::new();
        let gamma = cs.cone(x);
        for y in 0..k {
            let delta = cs.cone(y);
            if g.leq_l(x, y) != c.leq(gamma.vertex, delta.vertex) {
                bad.push(format!("<=_l mismatch for cones {x}, {y}"));
            }
            let by_epi = c
                .hom(delta.vertex, gamma.vertex)
                .iter()
                .any(|&h| nc.is_epi(h) && star(c, delta, h) == *gamma);
            if g.leq_r(x, y) != by_epi {
                bad.push(format!("<=_r mismatch for cones {x}, {y}"));
            }
            if is_idempotent(c, delta) {
                let h = gamma.components[delta.vertex];
                let direct = nc.is_epi(h) && star(c, delta, h) == *gamma;
                if g.leq_r(x, y) != direct {
                    bad.push(format!("<=_r mismatch at idempotent cone {y} for cone {x}"));
                }
                if is_idempotent(c, gamma) {
                    let h = gamma.components[delta.vertex];
                    let by_retraction = nc.is_retraction(h) && star(c, delta, h) == *gamma;
                    if g.nat_leq(x, y) != by_retraction {
                        bad.push(format!("natural order mismatch for idempotent cones {x}, {y}"));
                    }
                }
            }
        }
        bad
    });
    per_row.into_iter().flatten().collect()
}

/// The literal component test `γ(z_δ)` epi and `γ = δ ∗ γ(z_δ)` against
/// `<=_r`, over all pairs, including non-idempotent `δ`. Returns the pairs
/// where the two disagree.
pub fn component_test_disagreements(nc: &NormalCategory, cs: &ConeSemigroup) -> Vec<(usize, usize)> {
    let c = nc.category();
    let g = cs.greens();
    let mut out = Vec::new();
    for x in 0..cs.len() {
        for y in 0..cs.len() {
            let (gamma, delta) = (cs.cone(x), cs.cone(y));
            let h = gamma.components[delta.vertex];
            let test = nc.is_epi(h) && star(c, delta, h) == *gamma;
            if test != g.leq_r(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn p2() -> NormalCategory {
        NormalCategory::new(catalog::powerset_category(2).unwrap()).unwrap()
    }

    #[test]
    fn powerset_two_has_four_cones() {
        let nc = p2();
        let cs = enumerate_cones(&nc, DEFAULT_CONE_CAP, Exec::default()).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(cs.semigroup().is_regular());
        let seq = enumerate_cones(&nc, DEFAULT_CONE_CAP, Exec::Sequential).unwrap();
        assert_eq!(seq.cones(), cs.cones());
        assert!(cone_greens_check(&nc, &cs, Exec::default()).is_empty());
        for (i, cone) in cs.cones().iter().enumerate() {
            assert!(is_cone(nc.category(), cone));
            assert_eq!(is_idempotent(nc.category(), cone), cs.semigroup().is_idempotent(i));
        }
    }

    #[test]
    fn broken_component_is_reported() {
        let nc = p2();
        let c = nc.category();
        let cs = enumerate_cones(&nc, DEFAULT_CONE_CAP, Exec::default()).unwrap();
        let mut bad = cs.cone(0).clone();
        let top = c.largest_object().unwrap();
        let other = c.hom(top, bad.vertex).iter().copied().find(|&m| m != bad.components[top]);
        if let Some(m) = other {
            bad.components[top] = m;
            assert!(matches!(check_cone(c, &bad), Err(ConeDefect::NotCommuting(_, _))));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let nc = p2();
        assert_eq!(
            enumerate_cone_list(nc.category(), 3, Exec::Sequential),
            Err(Error::SearchSpaceTooLarge(3))
        );
    }

    #[test]
    fn trivial_category_has_one_cone() {
        let c = crate::category::tests::trivial();
        let nc = NormalCategory::new(c).unwrap();
        let cs = enumerate_cones(&nc, 10, Exec::default()).unwrap();
        assert_eq!(cs.len(), 1);
    }

    #[test]
    fn principal_cones_form_a_homomorphic_image() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let g = GreensData::compute(&t2);
        let l = crate::category::build_left_category(&t2, &g).unwrap();
        let nc = NormalCategory::new(l.category.clone()).unwrap();
        let cones: Vec<Cone> = (0..4).map(|a| principal_cone(&l, &t2, &g, a).unwrap()).collect();
        for a in 0..4 {
            assert!(is_cone(nc.category(), &cones[a]));
            for b in 0..4 {
                assert_eq!(compose(&nc, &cones[a], &cones[b]), cones[t2.mul(a, b)]);
            }
        }
        for &e in g.idempotents() {
            let r = &cones[e];
            assert_eq!(r.components[r.vertex], nc.category().identity(r.vertex));
        }
        // The swap is a unit; its principal cone has vertex at the top object.
        assert_eq!(cones[2].vertex, nc.category().largest_object().unwrap());
    }

    #[test]
    fn explicit_inverses() {
        let nc = NormalCategory::new(catalog::powerset_category(3).unwrap()).unwrap();
        let cs = enumerate_cones(&nc, DEFAULT_CONE_CAP, Exec::default()).unwrap();
        let c = nc.category();
        for gamma in cs.cones() {
            for mu in cs.cones().iter().filter(|m| m.vertex == gamma.vertex && is_idempotent(c, m)) {
                let chi = inverse_cone(&nc, mu, gamma).unwrap();
                assert_eq!(compose(&nc, &compose(&nc, gamma, &chi), gamma), *gamma);
                assert_eq!(compose(&nc, &compose(&nc, &chi, gamma), &chi), chi);
            }
        }
    }
}
