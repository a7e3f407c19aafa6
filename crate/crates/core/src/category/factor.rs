use super::axioms::verify_subobject_axioms;
use super::{FiniteCategory, Mor, Obj};
use crate::exec::Exec;
use crate::{Error, Result};
use serde::Serialize;

/// `f = q u j` with `q` a retraction, `u` an isomorphism and `j` an inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFactorization {
    pub morphism: Mor,
    pub q: Mor,
    pub u: Mor,
    pub j: Mor,
    pub coimage: Obj,
    pub image: Obj,
    /// The epimorphic component `qu`.
    pub epi: Mor,
}

/// Searches for a normal factorization of `f`.
///
/// Coimages, retractions and isomorphisms are tried in increasing index
/// order, or decreasing when `reverse` is set.
pub(crate) fn find_factorization(c: &FiniteCategory, f: Mor, reverse: bool) -> Option<NormalFactorization> {
    let (a, b) = (c.dom(f), c.cod(f));
    let n = c.object_count();
    let ordered = |v: Vec<usize>| -> Vec<usize> {
        if reverse {
            v.into_iter().rev().collect()
        } else {
            v
        }
    };
    let coimages = ordered((0..n).filter(|&x| c.leq(x, a)).collect());
    let images = ordered((0..n).filter(|&y| c.leq(y, b)).collect());
    for &co in &coimages {
        let split = c.inclusion(co, a)?;
        let retractions = ordered(
            c.hom(a, co).iter().copied().filter(|&q| c.compose(split, q) == c.identity(co)).collect(),
        );
        for &q in &retractions {
            for &im in &images {
                let j = c.inclusion(im, b)?;
                for &u in &ordered(c.hom(co, im).to_vec()) {
                    if c.compose(c.compose(q, u), j) == f && c.inverse(u).is_some() {
                        return Some(NormalFactorization {
                            morphism: f,
                            q,
                            u,
                            j,
                            coimage: co,
                            image: im,
                            epi: c.compose(q, u),
                        });
                    }
                }
            }
        }
    }
    None
}

/// A category verified to satisfy NC1 to NC3, with factorizations cached.
///
/// NC4 concerns cones and is checked where cones are enumerated.
#[derive(Clone, Debug)]
pub struct NormalCategory {
    cat: FiniteCategory,
    factors: Vec<NormalFactorization>,
    inverses: Vec<Option<Mor>>,
    epis: Vec<bool>,
}

impl NormalCategory {
    pub fn new(cat: FiniteCategory) -> Result<Self> {
        Self::new_with(cat, Exec::default())
    }

    pub fn new_with(cat: FiniteCategory, exec: Exec) -> Result<Self> {
        let report = verify_subobject_axioms(&cat);
        if let Some(bad) = report.failures().next() {
            return Err(Error::NotNormal(format!(
                "{}: {}",
                bad.name,
                bad.witness.clone().unwrap_or_default()
            )));
        }
        let n = cat.object_count();
        for a in 0..n {
            for b in 0..n {
                if let Some(j) = cat.inclusion(a, b) {
                    if !cat.hom(b, a).iter().any(|&q| cat.compose(j, q) == cat.identity(a)) {
                        return Err(Error::NotNormal(format!("inclusion j({a},{b}) does not split")));
                    }
                }
            }
        }
        let found = exec.map(cat.morphism_count(), |f| find_factorization(&cat, f, false));
        let mut factors = Vec::with_capacity(found.len());
        for (f, nf) in found.into_iter().enumerate() {
            factors.push(nf.ok_or(Error::NoFactorization(f))?);
        }
        let inverses = exec.map(cat.morphism_count(), |f| cat.inverse(f));
        let epis = exec.map(cat.morphism_count(), |f| cat.is_epi(f));
        Ok(NormalCategory { cat, factors, inverses, epis })
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn factorization(&self, f: Mor) -> &NormalFactorization {
        &self.factors[f]
    }

    /// The epimorphic component `f°`.
    pub fn epi_component(&self, f: Mor) -> Mor {
        self.factors[f].epi
    }

    /// `im f`, the codomain of `f°`.
    pub fn image(&self, f: Mor) -> Obj {
        self.factors[f].image
    }

    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        self.inverses[f]
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverses[f].is_some()
    }

    pub fn is_epi(&self, f: Mor) -> bool {
        self.epis[f]
    }

    /// `q: c -> d` with `j(d, c) q = 1_d`.
    pub fn is_retraction(&self, q: Mor) -> bool {
        let (c, d) = (self.cat.dom(q), self.cat.cod(q));
        self.cat
            .inclusion(d, c)
            .is_some_and(|j| self.cat.compose(j, q) == self.cat.identity(d))
    }

    /// Checks the rules for epimorphic components on every morphism and
    /// composable pair, and that a reversed search order yields the same
    /// `f°`. Returns descriptions of mismatches.
    pub fn check_epi_component_rules(&self, exec: Exec) -> Vec<String> {
        let c = &self.cat;
        let per_f = exec.map(c.morphism_count(), |f| {
            let mut bad = Vec::new();
            let nf = &self.factors[f];
            if let Some(alt) = find_factorization(c, f, true) {
                if alt.epi != nf.epi || alt.image != nf.image {
                    bad.push(format!("morphism {f}: epimorphic component depends on the search order"));
                }
            }
            if self.epis[f] && nf.epi != f {
                bad.push(format!("epimorphism {f} differs from its epimorphic component"));
            }
            if c.is_inclusion(f) && nf.epi != c.identity(c.dom(f)) {
                bad.push(format!("inclusion {f} has a non-identity epimorphic component"));
            }
            if !self.epis[nf.epi] {
                bad.push(format!("epimorphic component of {f} is not epi"));
            }
            let jf = nf.j;
            for &g in c.outgoing(c.cod(f)) {
                let lhs = self.epi_component(c.compose(f, g));
                let rhs = c.compose(nf.epi, self.epi_component(c.compose(jf, g)));
                if lhs != rhs {
                    bad.push(format!("(fg)° != f°(j_f g)° for f={f}, g={g}"));
                }
            }
            bad
        });
        per_f.into_iter().flatten().collect()
    }
}
