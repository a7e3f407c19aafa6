use super::factor::find_factorization;
use super::FiniteCategory;
use crate::exec::Exec;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    fn push(&mut self, name: &str, witness: Option<String>) {
        self.results.push(AxiomResult { name: name.into(), passed: witness.is_none(), witness });
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

fn partial_order(c: &FiniteCategory) -> Option<String> {
    let n = c.object_count();
    for a in 0..n {
        for b in 0..n {
            if a != b && c.leq(a, b) && c.leq(b, a) {
                return Some(format!("objects {a} and {b} include into each other"));
            }
            let Some(ab) = c.inclusion(a, b) else { continue };
            for d in 0..n {
                if let Some(bd) = c.inclusion(b, d) {
                    match c.inclusion(a, d) {
                        Some(ad) if c.compose(ab, bd) == ad => {}
                        _ => return Some(format!("j({a},{b}) j({b},{d}) is not j({a},{d})")),
                    }
                }
            }
        }
    }
    None
}

fn associativity(c: &FiniteCategory, exec: Exec) -> Option<String> {
    exec.find_first(c.morphism_count(), |f| {
        for &g in c.outgoing(c.cod(f)) {
            let fg = c.compose(f, g);
            for &h in c.outgoing(c.cod(g)) {
                if c.compose(fg, h) != c.compose(f, c.compose(g, h)) {
                    return Some(format!("(fg)h != f(gh) for f={f}, g={g}, h={h}"));
                }
            }
        }
        None
    })
}

fn unital(c: &FiniteCategory) -> Option<String> {
    (0..c.morphism_count()).find_map(|f| {
        let ok = c.compose(c.identity(c.dom(f)), f) == f && c.compose(f, c.identity(c.cod(f))) == f;
        (!ok).then(|| format!("identity law fails at morphism {f}"))
    })
}

fn inclusions_mono(c: &FiniteCategory) -> Option<String> {
    let n = c.object_count();
    for a in 0..n {
        for b in 0..n {
            let Some(j) = c.inclusion(a, b) else { continue };
            for x0 in 0..n {
                let hom = c.hom(x0, a);
                for (i, &x) in hom.iter().enumerate() {
                    for &y in &hom[i + 1..] {
                        if c.compose(x, j) == c.compose(y, j) {
                            return Some(format!("j({a},{b}) does not cancel: {x} j = {y} j"));
                        }
                    }
                }
            }
        }
    }
    None
}

fn inclusion_factoring(c: &FiniteCategory) -> Option<String> {
    let n = c.object_count();
    for t in 0..n {
        for a in 0..n {
            let Some(f) = c.inclusion(a, t) else { continue };
            for b in 0..n {
                let Some(g) = c.inclusion(b, t) else { continue };
                for &h in c.hom(a, b) {
                    if c.compose(h, g) == f && !c.is_inclusion(h) {
                        return Some(format!("j({a},{t}) = h j({b},{t}) with h = {h} not an inclusion"));
                    }
                }
            }
        }
    }
    None
}

/// Checks the axioms of a category with subobjects, with witnesses on failure.
pub fn verify_subobject_axioms(c: &FiniteCategory) -> AxiomReport {
    verify_subobject_axioms_with(c, Exec::default())
}

pub fn verify_subobject_axioms_with(c: &FiniteCategory, exec: Exec) -> AxiomReport {
    let mut r = AxiomReport::default();
    r.push("associative", associativity(c, exec));
    r.push("unital", unital(c));
    r.push("inclusions form a partial order", partial_order(c));
    r.push("inclusions are monomorphisms", inclusions_mono(c));
    r.push("inclusion factoring", inclusion_factoring(c));
    r
}

/// Checks NC1 to NC4. The identity cones of NC4 are searched with `cap`.
pub fn verify_normal(c: &FiniteCategory, cap: usize) -> AxiomReport {
    let mut r = verify_subobject_axioms(c);
    let nc1 = r.all_passed();
    let n = c.object_count();
    let mut split = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if let Some(j) = c.inclusion(a, b) {
                if !c.hom(b, a).iter().any(|&q| c.compose(j, q) == c.identity(a)) {
                    split = Some(format!("j({a},{b}) has no right inverse"));
                    break 'outer;
                }
            }
        }
    }
    r.push("NC1 category with subobjects", (!nc1).then(|| "see failed axioms above".to_string()));
    r.push("NC2 inclusions split", split);
    let nc3 = if nc1 {
        (0..c.morphism_count())
            .find(|&f| find_factorization(c, f, false).is_none())
            .map(|f| format!("morphism {f} has no normal factorization"))
    } else {
        Some("skipped: not a category with subobjects".into())
    };
    r.push("NC3 normal factorizations", nc3);
    let nc4 = (0..n).find_map(|v| match crate::cones::find_identity_cone(c, v, cap) {
        Ok(Some(_)) => None,
        Ok(None) => Some(format!("no cone with vertex {v} and identity component")),
        Err(e) => Some(format!("object {v}: {e}")),
    });
    r.push("NC4 identity cones", nc4);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::CategoryBuilder;

    /// Two objects `a ⪯ b` with only identities and the inclusion.
    fn bare_chain() -> FiniteCategory {
        let mut bld = CategoryBuilder::new();
        let a = bld.add_object("a");
        let b = bld.add_object("b");
        let ia = bld.add_morphism(a, a, "1a");
        let ib = bld.add_morphism(b, b, "1b");
        let j = bld.add_morphism(a, b, "j");
        bld.set_identity(a, ia);
        bld.set_identity(b, ib);
        bld.add_inclusion(a, b, j);
        bld.build(|f, g| if f == ia || f == ib { g } else { f }).unwrap()
    }

    #[test]
    fn chain_without_retraction_fails_nc2() {
        let c = bare_chain();
        let r = verify_normal(&c, 1000);
        assert!(r.get("NC1 category with subobjects").unwrap().passed);
        assert!(!r.get("NC2 inclusions split").unwrap().passed);
    }

    #[test]
    fn trivial_category_is_normal() {
        let c = crate::category::tests::trivial();
        assert!(verify_normal(&c, 10).all_passed());
    }

    #[test]
    fn non_mono_inclusion_detected() {
        // a ⪯ b with two endomorphisms of a collapsed by j.
        let mut bld = CategoryBuilder::new();
        let a = bld.add_object("a");
        let b = bld.add_object("b");
        let ia = bld.add_morphism(a, a, "1a");
        let z = bld.add_morphism(a, a, "z");
        let ib = bld.add_morphism(b, b, "1b");
        let j = bld.add_morphism(a, b, "j");
        bld.set_identity(a, ia);
        bld.set_identity(b, ib);
        bld.add_inclusion(a, b, j);
        let c = bld
            .build(|f, g| match (f, g) {
                (f, g) if f == ia || f == ib => g,
                (f, g) if g == ia || g == ib => f,
                (_, g) if g == z => z,
                _ => j,
            })
            .unwrap();
        let r = verify_subobject_axioms(&c);
        assert!(r.get("associative").unwrap().passed);
        let mono = r.get("inclusions are monomorphisms").unwrap();
        assert!(!mono.passed);
        assert!(mono.witness.as_ref().unwrap().contains("does not cancel"));
    }
}
