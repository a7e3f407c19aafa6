//! The functors between left reductive regular semigroups and connected
//! categories, the morphisms between connected categories, and the
//! roundtrip checks.

use crate::category::{build_left_category, Functor, NormalCategory, Obj, SemigroupCategory};
use crate::cones::{self, principal_cone, DEFAULT_CONE_CAP};
use crate::connected::{check_connected, ConnectedCategory};
use crate::exec::Exec;
use crate::semigroup::{find_isomorphism_with, FiniteSemigroup, GreensData, SemigroupIso};
use crate::{Error, Result};
use serde::Serialize;

/// `𝕃(S)_ℜ` together with `S` and the principal cones `r^a`.
#[derive(Clone, Debug)]
pub struct LeftConnected {
    pub semigroup: FiniteSemigroup,
    pub greens: GreensData,
    pub left: SemigroupCategory,
    pub cc: ConnectedCategory,
    /// `a -> ` index of `r^a` in `Ĉ(𝕃(S))`.
    pub rho: Vec<usize>,
}

impl LeftConnected {
    /// `ρ̄(a)` as an index into the connection semigroup, if it lands there.
    pub fn rho_sub(&self, a: usize) -> Option<usize> {
        self.cc.full_to_sub(self.rho[a])
    }
}

/// `𝕃(S)` connected by `ℜ = { R_{r^e} : e ∈ E(S) }`. Needs regularity only;
/// the principal cones are distinct only when `S` is left reductive.
pub fn left_connected_category(s: &FiniteSemigroup, cap: usize, exec: Exec) -> Result<LeftConnected> {
    let greens = GreensData::compute_with(s, exec);
    let left = build_left_category(s, &greens)?;
    let nc = NormalCategory::new_with(left.category.clone(), exec)?;
    let full = cones::enumerate_cones(&nc, cap, exec)?;
    let rho = (0..s.size())
        .map(|a| {
            let cone = principal_cone(&left, s, &greens, a)?;
            full.index_of(&cone).ok_or_else(|| Error::InvalidInput(format!("principal cone of {a} not enumerated")))
        })
        .collect::<Result<Vec<_>>>()?;
    let classes: Vec<usize> = greens.idempotents().iter().map(|&e| full.greens().r_class(rho[e])).collect();
    let cc = check_connected(nc, full, &classes, exec)?;
    Ok(LeftConnected { semigroup: s.clone(), greens, left, cc, rho })
}

/// The functor `C`: rejects semigroups that are not left reductive.
pub fn functor_c(s: &FiniteSemigroup) -> Result<LeftConnected> {
    functor_c_with(s, DEFAULT_CONE_CAP, Exec::default())
}

pub fn functor_c_with(s: &FiniteSemigroup, cap: usize, exec: Exec) -> Result<LeftConnected> {
    if let Some(a) = s.non_regular_element() {
        return Err(Error::NotRegular(a));
    }
    if let Some((a, b)) = s.left_reductive_witness() {
        return Err(Error::NotLeftReductive(a, b));
    }
    left_connected_category(s, cap, exec)
}

/// The functor `S`: the connection semigroup as a plain semigroup.
pub fn functor_s(cc: &ConnectedCategory) -> FiniteSemigroup {
    cc.connection_semigroup().semigroup().clone()
}

/// `ρ̄: a ↦ r^a` from `S` onto `Ĉ(𝕃(S)_ℜ)`, verified.
pub fn roundtrip_semigroup(s: &FiniteSemigroup) -> Result<SemigroupIso> {
    let lc = functor_c(s)?;
    rho_isomorphism(&lc)
}

pub fn rho_isomorphism(lc: &LeftConnected) -> Result<SemigroupIso> {
    let map = (0..lc.semigroup.size())
        .map(|a| lc.rho_sub(a).ok_or_else(|| Error::IsoFailure(format!("r^{a} is not a connection cone"))))
        .collect::<Result<Vec<_>>>()?;
    let iso = SemigroupIso { map };
    iso.verify(&lc.semigroup, lc.cc.connection_semigroup().semigroup())?;
    Ok(iso)
}

/// A morphism `(F, G)` of connected categories: a functor and a map
/// between the down-sets (by position).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CCMorphism {
    pub functor: Functor,
    pub order_map: Vec<usize>,
}

impl CCMorphism {
    pub fn identity(cc: &ConnectedCategory) -> Self {
        CCMorphism { functor: Functor::identity(cc.category()), order_map: (0..cc.downset().len()).collect() }
    }

    /// Functoriality, inclusion preservation, monotonicity of `G`, and the
    /// connection condition: when `c` is connected by `𝔡`, `F(c)` is
    /// connected by `G(𝔡)` and `F(ε(c,𝔡)(c')) = ε(F(c),G(𝔡))(F(c'))`.
    pub fn verify(&self, src: &ConnectedCategory, dst: &ConnectedCategory) -> Result<()> {
        self.functor.check(src.category(), dst.category())?;
        let (ps, pd) = (src.downset_poset(), dst.downset_poset());
        if self.order_map.len() != ps.len() || self.order_map.iter().any(|&d| d >= pd.len()) {
            return Err(Error::InvalidInput("order map does not match the down-sets".into()));
        }
        if !ps.is_monotone(&pd, &self.order_map) {
            return Err(Error::InvalidInput("order map is not order preserving".into()));
        }
        let sc = src.category();
        let (fo, fm) = (&self.functor.objects, &self.functor.morphisms);
        for c in 0..sc.object_count() {
            for p in src.connecting(c) {
                let eps = src.full_cone_semigroup().cone(src.connection(c, p).unwrap());
                let Some(target) = dst.connection(fo[c], self.order_map[p]) else {
                    return Err(Error::CCConditionViolated(format!(
                        "object {c} is connected by class {p} but its image is not connected by class {}",
                        self.order_map[p]
                    )));
                };
                let target = dst.full_cone_semigroup().cone(target);
                if let Some(c2) = (0..sc.object_count()).find(|&c2| fm[eps.components[c2]] != target.components[fo[c2]]) {
                    return Err(Error::CCConditionViolated(format!(
                        "F(ε({c},{p})({c2})) differs from ε(F({c}),G({p}))(F({c2}))"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Both maps bijective and order isomorphisms.
    pub fn is_isomorphism(&self, src: &ConnectedCategory, dst: &ConnectedCategory) -> bool {
        self.functor.is_isomorphism(src.category(), dst.category())
            && self.order_map.len() == dst.downset().len()
            && src.downset_poset().is_isomorphism(&dst.downset_poset(), &self.order_map)
    }

    pub fn then(&self, other: &Self) -> Self {
        CCMorphism {
            functor: self.functor.then(&other.functor),
            order_map: self.order_map.iter().map(|&d| other.order_map[d]).collect(),
        }
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Self {
        let mut order_map = vec![0; self.order_map.len()];
        for (a, &b) in self.order_map.iter().enumerate() {
            order_map[b] = a;
        }
        CCMorphism { functor: self.functor.inverse(), order_map }
    }
}

/// Position in `lc`'s down-set of the class `𝔯_e`.
fn class_of_idempotent(lc: &LeftConnected, e: usize) -> usize {
    let r = lc.cc.full_cone_semigroup().greens().r_class(lc.rho[e]);
    lc.cc.downset_position(r).expect("ℜ contains every 𝔯_e")
}

/// An idempotent `e` with `𝔯_e` at position `p` of the down-set.
fn idempotent_of_class(lc: &LeftConnected, p: usize) -> usize {
    *lc.greens
        .idempotents()
        .iter()
        .find(|&&e| class_of_idempotent(lc, e) == p)
        .expect("every class of ℜ is some 𝔯_e")
}

/// `m_φ = (F_φ, G_φ)` with `F_φ(Se) = S'(eφ)`, `F_φ(r(e,u,f)) = r(eφ,uφ,fφ)`
/// and `G_φ(𝔯_e) = 𝔯_{eφ}`.
pub fn hom_to_cc(src: &LeftConnected, dst: &LeftConnected, phi: &[usize]) -> Result<CCMorphism> {
    src.semigroup.check_homomorphism(&dst.semigroup, phi)?;
    let c = &src.left.category;
    let objects = (0..c.object_count())
        .map(|o| dst.left.object_of(phi[src.left.object_idempotent(o)]).expect("idempotents map to idempotents"))
        .collect();
    let morphisms = (0..c.morphism_count())
        .map(|m| {
            let t = src.left.triple(m);
            dst.left
                .morphism(&dst.semigroup, phi[t.e], phi[t.u], phi[t.f])
                .ok_or_else(|| Error::IsoFailure(format!("image of morphism {m} is not in the target category")))
        })
        .collect::<Result<Vec<_>>>()?;
    let order_map = (0..src.cc.downset().len())
        .map(|p| class_of_idempotent(dst, phi[idempotent_of_class(src, p)]))
        .collect();
    let m = CCMorphism { functor: Functor { objects, morphisms }, order_map };
    m.verify(&src.cc, &dst.cc)?;
    Ok(m)
}

/// `φ_m: ε(c,𝔡) ∗ u ↦ ε(F(c),G(𝔡)) ∗ F(u)` on connection semigroup
/// indices. Every decomposition of every cone is tried and must agree,
/// and the result must be multiplicative.
pub fn cc_to_hom(m: &CCMorphism, src: &ConnectedCategory, dst: &ConnectedCategory) -> Result<Vec<usize>> {
    m.verify(src, dst)?;
    let sub = src.connection_semigroup();
    let dsub = dst.connection_semigroup();
    let image = |eps: usize, object: Obj, u: usize| -> Result<usize> {
        let p = src.downset_position(src.full_cone_semigroup().greens().r_class(eps)).expect("member");
        let target = dst
            .connection(m.functor.objects[object], m.order_map[p])
            .ok_or_else(|| Error::CCConditionViolated(format!("image of object {object} not connected")))?;
        let cone = cones::star(dst.category(), dst.full_cone_semigroup().cone(target), m.functor.morphisms[u]);
        dsub.index_of(&cone)
            .ok_or_else(|| Error::CCConditionViolated("image cone outside the target connection semigroup".into()))
    };
    let mut phi = Vec::with_capacity(sub.len());
    for gamma in sub.cones() {
        let d = src.decompose(gamma)?;
        let value = image(d.epsilon, d.object, d.u)?;
        for other in src.decompositions(gamma)? {
            if image(other.epsilon, other.object, other.u)? != value {
                return Err(Error::CCConditionViolated(format!(
                    "value depends on the decomposition through object {}",
                    other.object
                )));
            }
        }
        phi.push(value);
    }
    sub.semigroup().check_homomorphism(dsub.semigroup(), &phi).map_err(|e| match e {
        Error::NotHomomorphism { a, b } => Error::CCConditionViolated(format!("not multiplicative at {a}, {b}")),
        other => other,
    })?;
    Ok(phi)
}

/// `functor_C(functor_S(cc))` and the isomorphism `(F, G)` from it to `cc`,
/// with `F(r(ε₁,γ,ε₂)) = γ(z_{ε₁}) j(z_γ, z_{ε₂})` and `G(𝔯_ε) = R_ε`.
pub fn roundtrip_category(cc: &ConnectedCategory) -> Result<(LeftConnected, CCMorphism)> {
    roundtrip_category_with(cc, DEFAULT_CONE_CAP, Exec::default())
}

pub fn roundtrip_category_with(cc: &ConnectedCategory, cap: usize, exec: Exec) -> Result<(LeftConnected, CCMorphism)> {
    let t = functor_s(cc);
    let lt = functor_c_with(&t, cap, exec)?;
    let sub = cc.connection_semigroup();
    let c = cc.category();
    let lcat = &lt.left.category;
    let objects: Vec<Obj> = (0..lcat.object_count()).map(|o| sub.cone(lt.left.object_idempotent(o)).vertex).collect();
    let morphisms = (0..lcat.morphism_count())
        .map(|m| {
            let tr = lt.left.triple(m);
            let gamma = sub.cone(tr.u);
            let (z1, z2) = (sub.cone(tr.e).vertex, sub.cone(tr.f).vertex);
            let j = c
                .inclusion(gamma.vertex, z2)
                .ok_or_else(|| Error::IsoFailure(format!("vertex of {} not below {}", tr.u, tr.f)))?;
            Ok(c.compose(gamma.components[z1], j))
        })
        .collect::<Result<Vec<_>>>()?;
    let order_map = (0..lt.cc.downset().len()).map(|p| cc.class_position(idempotent_of_class(&lt, p))).collect();
    let m = CCMorphism { functor: Functor { objects, morphisms }, order_map };
    m.verify(&lt.cc, cc)?;
    if !m.is_isomorphism(&lt.cc, cc) {
        return Err(Error::IsoFailure("roundtrip functor is not an isomorphism".into()));
    }
    Ok((lt, m))
}

/// `ρ̄(S) ∘ CS(φ) = φ ∘ ρ̄(S')` elementwise.
pub fn naturality_check(src: &LeftConnected, dst: &LeftConnected, phi: &[usize]) -> Result<()> {
    let m = hom_to_cc(src, dst, phi)?;
    let psi = cc_to_hom(&m, &src.cc, &dst.cc)?;
    for a in 0..src.semigroup.size() {
        let left = src.rho_sub(a).map(|x| psi[x]);
        let right = dst.rho_sub(phi[a]);
        if left.is_none() || left != right {
            return Err(Error::IsoFailure(format!("naturality square fails at element {a}")));
        }
    }
    Ok(())
}

/// An isomorphism of connected categories, found through an isomorphism
/// of their connection semigroups and the two roundtrips.
pub fn find_cc_isomorphism(a: &ConnectedCategory, b: &ConnectedCategory) -> Result<Option<CCMorphism>> {
    let (sa, sb) = (functor_s(a), functor_s(b));
    let (ga, gb) = (a.connection_semigroup().greens(), b.connection_semigroup().greens());
    let Some(theta) = find_isomorphism_with(&sa, &sb, ga, gb) else { return Ok(None) };
    let (la, ma) = roundtrip_category(a)?;
    let (lb, mb) = roundtrip_category(b)?;
    let middle = hom_to_cc(&la, &lb, &theta.map)?;
    let m = ma.inverse().then(&middle).then(&mb);
    m.verify(a, b)?;
    if !m.is_isomorphism(a, b) {
        return Err(Error::IsoFailure("composite is not an isomorphism".into()));
    }
    Ok(Some(m))
}

/// Diagnostics for a right regular band `B`, a target connected category
/// and a homomorphism `φ: B -> E(Ĉ_𝔇)` (connection semigroup indices):
/// every cone of `Ĉ(𝕃(B)_ℜ)` is idempotent, and `φ = ρ̄(B) · E(m_φ)`.
pub fn band_adjunction_check(b: &FiniteSemigroup, target: &ConnectedCategory, phi: &[usize]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let lb = functor_c(b)?;
    let sub = lb.cc.connection_semigroup();
    for x in 0..sub.len() {
        if !sub.semigroup().is_idempotent(x) {
            bad.push(format!("cone {x} of the band's connection semigroup is not idempotent"));
        }
    }
    let tsub = target.connection_semigroup();
    if let Some(&x) = phi.iter().find(|&&x| x >= tsub.len() || !tsub.semigroup().is_idempotent(x)) {
        bad.push(format!("φ leaves the idempotents at {x}"));
        return Ok(bad);
    }
    let (lt, back) = roundtrip_category(target)?;
    let theta = rho_isomorphism(&lt)?;
    let into_lt: Vec<usize> = phi.iter().map(|&x| theta.inverse().map[x]).collect();
    let m = hom_to_cc(&lb, &lt, &into_lt)?.then(&back);
    m.verify(&lb.cc, target)?;
    let e = cc_to_hom(&m, &lb.cc, target)?;
    for a in 0..b.size() {
        let via = lb.rho_sub(a).map(|x| e[x]);
        if via != Some(phi[a]) {
            bad.push(format!("triangle fails at element {a}"));
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn t2_roundtrips() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let lc = functor_c(&t2).unwrap();
        assert_eq!(lc.cc.downset().len(), 2);
        let iso = roundtrip_semigroup(&t2).unwrap();
        assert_eq!(iso.map.len(), 4);
        let (_, m) = roundtrip_category(&lc.cc).unwrap();
        assert!(m.is_isomorphism(&roundtrip_category(&lc.cc).unwrap().0.cc, &lc.cc));
    }

    #[test]
    fn left_zero_is_rejected() {
        assert_eq!(functor_c(&catalog::left_zero2()).unwrap_err(), Error::NotLeftReductive(0, 1));
    }

    #[test]
    fn identity_hom_gives_identity_morphism() {
        let s = catalog::right_regular_band3();
        let lc = functor_c(&s).unwrap();
        let id: Vec<usize> = (0..s.size()).collect();
        let m = hom_to_cc(&lc, &lc, &id).unwrap();
        assert_eq!(m, CCMorphism::identity(&lc.cc));
        let phi = cc_to_hom(&m, &lc.cc, &lc.cc).unwrap();
        assert_eq!(phi, (0..phi.len()).collect::<Vec<_>>());
        naturality_check(&lc, &lc, &id).unwrap();
    }

    #[test]
    fn band_surjection_onto_semilattice() {
        let b = catalog::right_regular_band4();
        let y = catalog::semilattice2();
        // (x, s) ↦ s
        let phi: Vec<usize> = (0..4).map(|i| i % 2).collect();
        b.check_homomorphism(&y, &phi).unwrap();
        let (lb, ly) = (functor_c(&b).unwrap(), functor_c(&y).unwrap());
        let m = hom_to_cc(&lb, &ly, &phi).unwrap();
        let psi = cc_to_hom(&m, &lb.cc, &ly.cc).unwrap();
        for a in 0..4 {
            assert_eq!(psi[lb.rho_sub(a).unwrap()], ly.rho_sub(phi[a]).unwrap());
        }
        naturality_check(&lb, &ly, &phi).unwrap();
    }

    #[test]
    fn band_triangle_commutes() {
        let r2 = catalog::right_zero2();
        let lc = functor_c(&r2).unwrap();
        let rho = rho_isomorphism(&lc).unwrap();
        assert!(band_adjunction_check(&r2, &lc.cc, &rho.map).unwrap().is_empty());
    }

    #[test]
    fn powerset_isomorphic_to_left_category_of_t2() {
        let (_, p) = catalog::powerset_connected(2).unwrap();
        let lc = functor_c(&catalog::transformation_monoid(2).unwrap()).unwrap();
        let m = find_cc_isomorphism(&lc.cc, &p).unwrap().unwrap();
        assert!(m.is_isomorphism(&lc.cc, &p));
    }
}
