//! Connected categories: a normal category together with a down-set of
//! R-classes of its cone semigroup, and the connection semigroup `Ĉ_𝔇`.

use crate::category::{FiniteCategory, Mor, NormalCategory, Obj};
use crate::cones::{self, Cone, ConeSemigroup};
use crate::exec::Exec;
use crate::poset::Poset;
use crate::semigroup::{classify_with, FiniteSemigroup, GreensData};
use crate::{Error, Result};
use serde::Serialize;

/// A normal category connected by a down-set `𝔇` of `Ĉ/R`.
#[derive(Clone, Debug)]
pub struct ConnectedCategory {
    nc: NormalCategory,
    full: ConeSemigroup,
    r_poset: Poset,
    downset: Vec<usize>,
    /// `(c, position in downset) -> index in Ĉ` of `ε(c,𝔡)`.
    connection: Vec<Option<usize>>,
    sub: ConeSemigroup,
    sub_to_full: Vec<usize>,
    full_to_sub: Vec<Option<usize>>,
}

/// `γ = ε(c,𝔡) ∗ u`, with indices into `Ĉ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub epsilon: usize,
    pub object: Obj,
    pub u: Mor,
}

/// The support map `Γ`, as an R-class index of `Ĉ` per object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportMap {
    pub classes: Vec<usize>,
}

/// Validates `downset` (R-class indices of `full`) and builds the
/// connection table and `Ĉ_𝔇`.
pub fn check_connected(nc: NormalCategory, full: ConeSemigroup, downset: &[usize], exec: Exec) -> Result<ConnectedCategory> {
    let r_poset = full.r_class_poset();
    let mut downset = downset.to_vec();
    downset.sort_unstable();
    downset.dedup();
    if let Some(&bad) = downset.iter().find(|&&d| d >= r_poset.len()) {
        return Err(Error::InvalidInput(format!("R-class {bad} out of range ({} classes)", r_poset.len())));
    }
    if let Some((missing, member)) = r_poset.down_closure_violation(&downset) {
        return Err(Error::NotDownClosed(missing, member));
    }
    let n = nc.category().object_count();
    let k = downset.len();
    let pos_of = |r: usize| downset.binary_search(&r).ok();
    let mut connection = vec![None; n * k];
    for i in 0..full.len() {
        if !full.semigroup().is_idempotent(i) {
            continue;
        }
        let Some(p) = pos_of(full.greens().r_class(i)) else { continue };
        let slot = &mut connection[full.cone(i).vertex * k + p];
        if slot.is_some() {
            return Err(Error::InvalidCategory(format!(
                "two idempotent cones with vertex {} in R-class {}",
                full.cone(i).vertex,
                downset[p]
            )));
        }
        *slot = Some(i);
    }
    if let Some(p) = (0..k).find(|&p| (0..n).all(|c| connection[c * k + p].is_none())) {
        return Err(Error::InvalidCategory(format!("R-class {} connects no object", downset[p])));
    }
    if let Some(c) = (0..n).find(|&c| (0..k).all(|p| connection[c * k + p].is_none())) {
        return Err(Error::ObjectNotConnected(c));
    }
    let sub_to_full: Vec<usize> =
        (0..full.len()).filter(|&i| pos_of(full.greens().r_class(i)).is_some()).collect();
    let mut full_to_sub = vec![None; full.len()];
    for (j, &i) in sub_to_full.iter().enumerate() {
        full_to_sub[i] = Some(j);
    }
    let sub_cones = sub_to_full.iter().map(|&i| full.cone(i).clone()).collect();
    let sub = ConeSemigroup::from_cones(&nc, sub_cones, exec)?;
    Ok(ConnectedCategory { nc, full, r_poset, downset, connection, sub, sub_to_full, full_to_sub })
}

impl ConnectedCategory {
    /// Enumerates `Ĉ` and connects by every R-class.
    pub fn with_full_downset(nc: NormalCategory, cap: usize, exec: Exec) -> Result<Self> {
        let full = cones::enumerate_cones(&nc, cap, exec)?;
        let all: Vec<usize> = (0..full.greens().r_classes().len()).collect();
        check_connected(nc, full, &all, exec)
    }

    pub fn normal(&self) -> &NormalCategory {
        &self.nc
    }

    pub fn category(&self) -> &FiniteCategory {
        self.nc.category()
    }

    /// `Ĉ`.
    pub fn full_cone_semigroup(&self) -> &ConeSemigroup {
        &self.full
    }

    /// `Ĉ/R` ordered by `<=_r`.
    pub fn r_poset(&self) -> &Poset {
        &self.r_poset
    }

    pub fn downset(&self) -> &[usize] {
        &self.downset
    }

    /// `𝔇` with the order inherited from `Ĉ/R`.
    pub fn downset_poset(&self) -> Poset {
        self.r_poset.restrict(&self.downset)
    }

    /// `ε(c,𝔡)` as an index into `Ĉ`, for `𝔡` given by its position in the down-set.
    pub fn connection(&self, c: Obj, pos: usize) -> Option<usize> {
        self.connection[c * self.downset.len() + pos]
    }

    /// Positions in the down-set of the classes connecting `c`.
    pub fn connecting(&self, c: Obj) -> Vec<usize> {
        (0..self.downset.len()).filter(|&p| self.connection(c, p).is_some()).collect()
    }

    /// Objects connected by the class at position `pos`.
    pub fn connected_by(&self, pos: usize) -> Vec<Obj> {
        (0..self.category().object_count()).filter(|&c| self.connection(c, pos).is_some()).collect()
    }

    pub fn downset_position(&self, r_class: usize) -> Option<usize> {
        self.downset.binary_search(&r_class).ok()
    }

    /// `Ĉ_𝔇`, with cones in the same relative order as in `Ĉ`.
    pub fn connection_semigroup(&self) -> &ConeSemigroup {
        &self.sub
    }

    pub fn sub_to_full(&self, i: usize) -> usize {
        self.sub_to_full[i]
    }

    pub fn full_to_sub(&self, i: usize) -> Option<usize> {
        self.full_to_sub[i]
    }

    /// Position in the down-set of `R_γ` for a cone of `Ĉ_𝔇`.
    pub fn class_position(&self, sub_index: usize) -> usize {
        let r = self.full.greens().r_class(self.sub_to_full[sub_index]);
        self.downset_position(r).expect("cone of the connection semigroup")
    }

    fn member(&self, gamma: &Cone) -> Result<usize> {
        let i = self
            .full
            .index_of(gamma)
            .ok_or_else(|| Error::InvalidInput("not a cone of the category".into()))?;
        match self.full_to_sub[i] {
            Some(_) => Ok(i),
            None => Err(Error::NotInConnectionSemigroup(i)),
        }
    }

    fn decomposition_at(&self, i: usize, c: Obj) -> Option<Decomposition> {
        let gamma = self.full.cone(i);
        let pos = self.downset_position(self.full.greens().r_class(i))?;
        let eps = self.connection(c, pos)?;
        let u = gamma.components[c];
        let ok = self.nc.is_iso(u) && cones::star(self.category(), self.full.cone(eps), u) == *gamma;
        ok.then_some(Decomposition { epsilon: eps, object: c, u })
    }

    /// `γ = ε(c,𝔡) ∗ γ(c)` with `𝔡 = R_γ` and `c` the least object
    /// connected by `𝔡`. An idempotent cone decomposes as itself times
    /// the identity of its vertex.
    pub fn decompose(&self, gamma: &Cone) -> Result<Decomposition> {
        let i = self.member(gamma)?;
        let c = self.category();
        if cones::is_idempotent(c, gamma) {
            return Ok(Decomposition { epsilon: i, object: gamma.vertex, u: c.identity(gamma.vertex) });
        }
        let pos = self.downset_position(self.full.greens().r_class(i)).expect("member");
        let obj = *self.connected_by(pos).first().expect("every class connects an object");
        self.decomposition_at(i, obj)
            .ok_or_else(|| Error::IsoFailure(format!("cone {i} does not factor through ε({obj}, ·)")))
    }

    /// Every decomposition `ε(c,R_γ) ∗ γ(c)`, one per object connected by `R_γ`.
    pub fn decompositions(&self, gamma: &Cone) -> Result<Vec<Decomposition>> {
        let i = self.member(gamma)?;
        let pos = self.downset_position(self.full.greens().r_class(i)).expect("member");
        self.connected_by(pos)
            .into_iter()
            .map(|c| {
                self.decomposition_at(i, c)
                    .ok_or_else(|| Error::IsoFailure(format!("cone {i} does not factor through ε({c}, ·)")))
            })
            .collect()
    }

    /// A representation `ε ∗ p` with `ε` idempotent in `Ĉ_𝔇` and `p` an
    /// epimorphism. The isomorphism of [`Self::decompose`] qualifies.
    pub fn decompose_epi(&self, gamma: &Cone) -> Result<Decomposition> {
        let d = self.decompose(gamma)?;
        debug_assert!(self.nc.is_epi(d.u));
        Ok(d)
    }

    /// Every cone `ε ∗ p` with `ε ∈ E(Ĉ_𝔇)` and `p` an epimorphism out of
    /// its vertex must lie in `Ĉ_𝔇`. Returns the offending pairs.
    pub fn epi_closure_violations(&self) -> Vec<(usize, Mor)> {
        let c = self.category();
        let mut out = Vec::new();
        for (j, eps) in self.sub.cones().iter().enumerate() {
            if !self.sub.semigroup().is_idempotent(j) {
                continue;
            }
            for &p in c.outgoing(eps.vertex) {
                if !self.nc.is_epi(p) {
                    continue;
                }
                let gamma = cones::star(c, eps, p);
                let inside = self.full.index_of(&gamma).and_then(|i| self.full_to_sub[i]).is_some();
                if !inside {
                    out.push((self.sub_to_full[j], p));
                }
            }
        }
        out
    }

    pub fn is_supported(&self) -> bool {
        (0..self.category().object_count()).all(|c| self.connecting(c).len() == 1)
    }

    /// `Γ: c ↦ 𝔡`, when every object is connected by exactly one class.
    pub fn support_map(&self) -> Option<SupportMap> {
        let classes = (0..self.category().object_count())
            .map(|c| match self.connecting(c).as_slice() {
                [p] => Some(self.downset[*p]),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SupportMap { classes })
    }

    /// Properties a supported category must have; empty when unsupported
    /// or when everything holds.
    pub fn support_violations(&self) -> Vec<String> {
        let Some(gamma) = self.support_map() else { return Vec::new() };
        let c = self.category();
        let n = c.object_count();
        let mut bad = Vec::new();
        for &d in &self.downset {
            if !gamma.classes.contains(&d) {
                bad.push(format!("support map misses R-class {d}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if c.leq(a, b) && !self.r_poset.leq(gamma.classes[a], gamma.classes[b]) {
                    bad.push(format!("support map not monotone on objects {a} <= {b}"));
                }
            }
        }
        let flags = classify_with(self.sub.semigroup(), self.sub.greens());
        if !flags.l_unipotent {
            bad.push("connection semigroup is not L-unipotent".into());
        }
        let idem = self.sub.greens().idempotents();
        if idem.len() != n {
            bad.push(format!("{} idempotent cones for {n} objects", idem.len()));
        }
        let mut vertices: Vec<Obj> = idem.iter().map(|&e| self.sub.cone(e).vertex).collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != idem.len() {
            bad.push("two idempotent cones share a vertex".into());
        }
        bad.extend(self.band_law_violations().into_iter().map(|(e, f)| format!("εδε != δε for cones {e}, {f}")));
        bad
    }

    /// Idempotent pairs `(ε, δ)` of `Ĉ_𝔇` with `εδε != δε` or `εδ` not idempotent.
    pub fn band_law_violations(&self) -> Vec<(usize, usize)> {
        let s = self.sub.semigroup();
        let idem = self.sub.greens().idempotents();
        let mut out = Vec::new();
        for &e in idem {
            for &f in idem {
                let ef = s.mul(e, f);
                if !s.is_idempotent(ef) || s.mul(ef, e) != s.mul(f, e) {
                    out.push((e, f));
                }
            }
        }
        out
    }

    /// Whether the support map exists and is an order isomorphism onto `𝔇`.
    pub fn is_self_supported(&self) -> Result<bool> {
        let n = self.category().object_count();
        if let Some(c) = (0..n).find(|&c| self.connecting(c).len() != 1) {
            return Err(Error::NotSupported(c));
        }
        let gamma = self.support_map().expect("supported");
        if n != self.downset.len() {
            return Ok(false);
        }
        let map: Vec<usize> = gamma.classes.iter().map(|&d| self.downset_position(d).expect("in down-set")).collect();
        Ok(self.category().object_poset().is_isomorphism(&self.downset_poset(), &map))
    }

    /// The largest object, if any.
    pub fn largest_object(&self) -> Option<Obj> {
        self.category().largest_object()
    }

    /// For a category bounded above by `k`, the index in `Ĉ_𝔇` of the
    /// cone of inclusions into `k`, when it is a two-sided identity.
    pub fn monoid_identity(&self) -> Option<usize> {
        let c = self.category();
        let k = c.largest_object()?;
        let comps = (0..c.object_count()).map(|a| c.inclusion(a, k)).collect::<Option<Vec<_>>>()?;
        let j = self.sub.index_of(&Cone { vertex: k, components: comps })?;
        (0..self.sub.len())
            .all(|x| self.sub.mul(j, x) == x && self.sub.mul(x, j) == x)
            .then_some(j)
    }

    /// `Ĉ_𝔇` under `γ ∘ δ = δ ∗ (γ(z_δ))°`, on the same cone indices.
    pub fn dual_connection_semigroup(&self) -> FiniteSemigroup {
        let k = self.sub.len();
        let c = self.category();
        let mut table = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let (gamma, delta) = (self.sub.cone(a), self.sub.cone(b));
                let p = cones::star(c, delta, self.nc.epi_component(gamma.components[delta.vertex]));
                table.push(self.sub.index_of(&p).expect("closed under products") as u32);
            }
        }
        FiniteSemigroup::from_trusted(k, table, self.sub.semigroup().labels().to_vec())
    }

    /// Green's structure of `Ĉ_𝔇` against vertices and the down-set:
    /// `<=_l` by vertices, `<=_r` by classes in `𝔇`, the R-poset
    /// isomorphism onto `𝔇`, the idempotents `ε(c,𝔡)`, plus left
    /// reductivity and regularity. Returns mismatches.
    pub fn coherence_violations(&self, exec: Exec) -> Vec<String> {
        let c = self.category();
        let g: &GreensData = self.sub.greens();
        let k = self.sub.len();
        let mut bad: Vec<String> = exec
            .map(k, |x| {
                let mut row = Vec::new();
                for y in 0..k {
                    let (gx, gy) = (self.sub.cone(x), self.sub.cone(y));
                    if g.leq_l(x, y) != c.leq(gx.vertex, gy.vertex) {
                        row.push(format!("<=_l and vertex order differ on {x}, {y}"));
                    }
                    let (dx, dy) = (self.class_position(x), self.class_position(y));
                    if g.leq_r(x, y) != self.r_poset.leq(self.downset[dx], self.downset[dy]) {
                        row.push(format!("<=_r and down-set order differ on {x}, {y}"));
                    }
                }
                row
            })
            .into_iter()
            .flatten()
            .collect();
        let classes = g.r_classes();
        let map: Vec<usize> = classes.iter().map(|cl| self.class_position(cl[0])).collect();
        let own = self.sub.r_class_poset();
        if map.len() != self.downset.len() || !own.is_isomorphism(&self.downset_poset(), &map) {
            bad.push("R-classes of the connection semigroup are not order isomorphic to the down-set".into());
        }
        let n = c.object_count();
        let eps: Vec<(Obj, usize, usize)> = (0..n)
            .flat_map(|a| self.connecting(a).into_iter().map(move |p| (a, p)))
            .map(|(a, p)| (a, p, self.full_to_sub[self.connection(a, p).unwrap()].unwrap()))
            .collect();
        for &(c1, d1, e1) in &eps {
            for &(c2, d2, e2) in &eps {
                if g.leq_r(e1, e2) != self.r_poset.leq(self.downset[d1], self.downset[d2]) {
                    bad.push(format!("ε({c1},{d1}) <=_r ε({c2},{d2}) disagrees with the down-set"));
                }
                if g.leq_l(e1, e2) != c.leq(c1, c2) {
                    bad.push(format!("ε({c1},{d1}) <=_l ε({c2},{d2}) disagrees with the object order"));
                }
            }
        }
        let s = self.sub.semigroup();
        if let Some(x) = s.non_regular_element() {
            bad.push(format!("connection semigroup element {x} is not regular"));
        }
        if let Some((a, b)) = s.left_reductive_witness() {
            bad.push(format!("connection semigroup is not left reductive: {a} and {b} act alike"));
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cones::DEFAULT_CONE_CAP;

    fn powerset(n: usize) -> ConnectedCategory {
        let nc = NormalCategory::new(catalog::powerset_category(n).unwrap()).unwrap();
        ConnectedCategory::with_full_downset(nc, DEFAULT_CONE_CAP, Exec::default()).unwrap()
    }

    #[test]
    fn full_downset_gives_full_semigroup() {
        let cc = powerset(2);
        assert_eq!(cc.connection_semigroup().len(), cc.full_cone_semigroup().len());
        assert_eq!(cc.downset().len(), 2);
        assert!(cc.coherence_violations(Exec::default()).is_empty());
        assert!(cc.epi_closure_violations().is_empty());
    }

    #[test]
    fn powerset_support() {
        let two = powerset(2);
        assert!(two.is_supported());
        assert!(two.support_violations().is_empty());
        assert_eq!(two.is_self_supported(), Ok(false));
        let cc = powerset(3);
        assert!(!cc.is_supported());
        let c = cc.category();
        let pair = (0..c.object_count()).find(|&a| c.object_label(a) == "{1,3}").unwrap();
        assert_eq!(cc.connecting(pair).len(), 2);
        assert!(matches!(cc.is_self_supported(), Err(Error::NotSupported(_))));
    }

    #[test]
    fn missing_class_leaves_top_unconnected() {
        let cc = powerset(2);
        let poset = cc.r_poset();
        let bottom = (0..poset.len()).find(|&r| (0..poset.len()).all(|s| poset.leq(r, s))).unwrap();
        let nc = cc.normal().clone();
        let top = nc.category().largest_object().unwrap();
        let err = check_connected(nc, cc.full_cone_semigroup().clone(), &[bottom], Exec::default()).unwrap_err();
        assert_eq!(err, Error::ObjectNotConnected(top));
    }

    #[test]
    fn upper_class_alone_is_not_down_closed() {
        let cc = powerset(2);
        let poset = cc.r_poset();
        let top = poset.maximum().unwrap();
        let err = check_connected(cc.normal().clone(), cc.full_cone_semigroup().clone(), &[top], Exec::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotDownClosed(_, t) if t == top));
    }

    #[test]
    fn decompositions_recompose() {
        let cc = powerset(3);
        let c = cc.category();
        let cs = cc.connection_semigroup();
        let mut several = 0;
        for gamma in cs.cones() {
            let d = cc.decompose(gamma).unwrap();
            assert_eq!(cones::star(c, cc.full_cone_semigroup().cone(d.epsilon), d.u), *gamma);
            if cones::is_idempotent(c, gamma) {
                assert!(c.is_identity(d.u));
            }
            let all = cc.decompositions(gamma).unwrap();
            if all.len() > 1 {
                several += 1;
            }
        }
        assert!(several > 0);
    }

    #[test]
    fn powerset_is_a_monoid() {
        let cc = powerset(3);
        assert!(cc.monoid_identity().is_some());
        let dual = cc.dual_connection_semigroup();
        assert!(dual.is_right_reductive() && dual.is_regular());
        assert_eq!(dual, cc.connection_semigroup().semigroup().opposite().with_labels(dual.labels().to_vec()).unwrap());
    }
}
