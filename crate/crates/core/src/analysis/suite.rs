//! Invariant checks over the catalog and any extra fixtures, grouped by
//! module.

use super::Subject;
use crate::catalog::{self, CatalogObject};
use crate::category::{build_left_category, parse_category, to_category_text, verify_normal, FiniteCategory, NormalCategory};
use crate::cones::{cone_greens_check, enumerate_cones, is_cone};
use crate::connected::ConnectedCategory;
use crate::exec::Exec;
use crate::functors::{functor_c_with, hom_to_cc, naturality_check, rho_isomorphism, roundtrip_category_with};
use crate::semigroup::{classify_with, find_isomorphism, idempotent_orders_agree, parse_cayley, to_cayley_text, FiniteSemigroup, GreensData};
use crate::{Error, Result};
use serde::Serialize;

pub const SCOPES: [&str; 7] = ["all", "semigroup-core", "category-core", "cones", "connected", "functors", "catalog"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub scope: &'static str,
    pub subject: String,
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

struct Suite {
    checks: Vec<SuiteCheck>,
    cap: usize,
    exec: Exec,
}

impl Suite {
    fn record(&mut self, scope: &'static str, subject: &str, name: &'static str, detail: Option<String>) {
        self.checks.push(SuiteCheck { scope, subject: subject.to_string(), name, passed: detail.is_none(), detail });
    }

    fn record_result(&mut self, scope: &'static str, subject: &str, name: &'static str, r: Result<()>) {
        self.record(scope, subject, name, r.err().map(|e| e.to_string()))
    }

    fn semigroup_core(&mut self, name: &str, s: &FiniteSemigroup) {
        const SCOPE: &str = "semigroup-core";
        let assoc = s.associativity_violation(self.exec).map(|(a, b, c)| format!("({a}{b}){c} != {a}({b}{c})"));
        self.record(SCOPE, name, "associative", assoc);
        let g = GreensData::compute_with(s, self.exec);
        let partition = |classes: &[Vec<usize>]| {
            let mut all: Vec<usize> = classes.iter().flatten().copied().collect();
            all.sort_unstable();
            all == (0..s.size()).collect::<Vec<_>>()
        };
        let ok = partition(g.l_classes()) && partition(g.r_classes()) && partition(g.h_classes()) && partition(g.d_classes());
        self.record(SCOPE, name, "greens_partitions", (!ok).then(|| "classes do not partition the elements".into()));
        let h_ok = (0..s.size()).all(|a| {
            (0..s.size()).all(|b| (g.h_class(a) == g.h_class(b)) == (g.l_related(a, b) && g.r_related(a, b)))
        });
        self.record(SCOPE, name, "h_is_l_meet_r", (!h_ok).then(|| "H differs from L ∩ R".into()));
        if classify_with(s, &g).l_unipotent {
            self.record(
                SCOPE,
                name,
                "idempotent_orders_agree",
                (!idempotent_orders_agree(&g)).then(|| "natural order differs from the L order on idempotents".into()),
            );
        }
        let self_iso = find_isomorphism(s, s).is_some();
        self.record(SCOPE, name, "self_isomorphism", (!self_iso).then(|| "no automorphism found".into()));
        let text = parse_cayley(&to_cayley_text(s)).and_then(|t| {
            (t.rows() == s.rows()).then_some(()).ok_or_else(|| Error::InvalidInput("table changed".into()))
        });
        self.record_result(SCOPE, name, "text_roundtrip", text);
    }

    fn category_core(&mut self, name: &str, c: &FiniteCategory) {
        const SCOPE: &str = "category-core";
        let report = verify_normal(c, self.cap);
        let failed: Vec<String> = report.failures().map(|r| r.name.clone()).collect();
        self.record(SCOPE, name, "normal", (!failed.is_empty()).then(|| failed.join(", ")));
        let text = to_category_text(c);
        let text = parse_category(&text).and_then(|d| {
            (to_category_text(&d) == text && d.hom_sizes() == c.hom_sizes())
                .then_some(())
                .ok_or_else(|| Error::InvalidInput("category changed".into()))
        });
        self.record_result(SCOPE, name, "text_roundtrip", text);
        if let Ok(nc) = NormalCategory::new_with(c.clone(), self.exec) {
            let bad = nc.check_epi_component_rules(self.exec);
            self.record(SCOPE, name, "epi_component_rules", bad.first().cloned());
        }
    }

    fn cones(&mut self, name: &str, nc: &NormalCategory) {
        const SCOPE: &str = "cones";
        let cs = match enumerate_cones(nc, self.cap, self.exec) {
            Ok(cs) => cs,
            Err(e) => return self.record(SCOPE, name, "enumerate", Some(e.to_string())),
        };
        let c = nc.category();
        let bad = cs.cones().iter().position(|g| !is_cone(c, g));
        self.record(SCOPE, name, "all_cones_valid", bad.map(|i| format!("cone {i}")));
        let assoc = cs.semigroup().associativity_violation(self.exec);
        self.record(SCOPE, name, "product_associative", assoc.map(|t| format!("{t:?}")));
        let greens = cone_greens_check(nc, &cs, self.exec);
        self.record(SCOPE, name, "greens_by_vertices", greens.first().cloned());
    }

    fn connected(&mut self, name: &str, nc: &NormalCategory) {
        const SCOPE: &str = "connected";
        let cc = match ConnectedCategory::with_full_downset(nc.clone(), self.cap, self.exec) {
            Ok(cc) => cc,
            Err(e) => return self.record(SCOPE, name, "connect", Some(e.to_string())),
        };
        self.record(SCOPE, name, "coherence", cc.coherence_violations(self.exec).first().cloned());
        let epi = cc.epi_closure_violations();
        self.record(SCOPE, name, "epi_closure", epi.first().map(|(j, m)| format!("cone {j}, morphism {m}")));
        let decompose = cc.connection_semigroup().cones().iter().try_for_each(|g| cc.decompose(g).map(|_| ()));
        self.record_result(SCOPE, name, "decomposition_exists", decompose);
        self.record(SCOPE, name, "support_laws", cc.support_violations().first().cloned());
    }

    fn functors(&mut self, name: &str, subject: &Subject) {
        const SCOPE: &str = "functors";
        match subject {
            Subject::Semigroup(s) => {
                if !s.is_regular() || !s.is_left_reductive() {
                    return;
                }
                let lc = match functor_c_with(s, self.cap, self.exec) {
                    Ok(lc) => lc,
                    Err(e) => return self.record(SCOPE, name, "functor_c", Some(e.to_string())),
                };
                self.record_result(SCOPE, name, "roundtrip_semigroup", rho_isomorphism(&lc).map(|_| ()));
                let rt = roundtrip_category_with(&lc.cc, self.cap, self.exec).map(|_| ());
                self.record_result(SCOPE, name, "roundtrip_category", rt);
                let id: Vec<usize> = (0..s.size()).collect();
                let identity = hom_to_cc(&lc, &lc, &id)
                    .and_then(|m| (m.is_isomorphism(&lc.cc, &lc.cc)).then_some(()).ok_or_else(|| {
                        Error::IsoFailure("identity image is not an isomorphism".into())
                    }));
                self.record_result(SCOPE, name, "identity_preserved", identity);
                self.record_result(SCOPE, name, "natural_identity", naturality_check(&lc, &lc, &id));
            }
            Subject::Category(c) => {
                let rt = NormalCategory::new_with(c.clone(), self.exec)
                    .and_then(|nc| ConnectedCategory::with_full_downset(nc, self.cap, self.exec))
                    .and_then(|cc| roundtrip_category_with(&cc, self.cap, self.exec).map(|_| ()));
                self.record_result(SCOPE, name, "roundtrip_category", rt);
            }
        }
    }

    fn run(&mut self, scope: &str, name: &str, subject: &Subject) {
        let want = |s: &str| scope == "all" || scope == s;
        match subject {
            Subject::Semigroup(s) => {
                if want("semigroup-core") {
                    self.semigroup_core(name, s);
                }
                if s.is_regular() && (want("category-core") || want("cones") || want("connected")) {
                    let g = GreensData::compute_with(s, self.exec);
                    match build_left_category(s, &g).and_then(|l| NormalCategory::new_with(l.category, self.exec)) {
                        Ok(nc) => self.category_checks(scope, &format!("L({name})"), &nc),
                        Err(e) => self.record("category-core", name, "left_category", Some(e.to_string())),
                    }
                }
            }
            Subject::Category(c) => match NormalCategory::new_with(c.clone(), self.exec) {
                Ok(nc) => self.category_checks(scope, name, &nc),
                Err(e) => self.record("category-core", name, "normal", Some(e.to_string())),
            },
        }
        if want("functors") {
            self.functors(name, subject);
        }
    }

    fn category_checks(&mut self, scope: &str, name: &str, nc: &NormalCategory) {
        let want = |s: &str| scope == "all" || scope == s;
        if want("category-core") {
            self.category_core(name, nc.category());
        }
        if want("cones") {
            self.cones(name, nc);
        }
        if want("connected") {
            self.connected(name, nc);
        }
    }
}

fn record_entry(suite: &mut Suite, entry: &catalog::CatalogEntry) {
    for check in catalog::verify_entry(entry) {
        let detail =
            (!check.passed).then(|| format!("{}: expected {}, got {}", check.property, check.expected, check.actual));
        suite.record("catalog", &entry.name, "expectation", detail);
    }
}

/// Runs the checks of `scope` (one of [`SCOPES`]) over the default catalog
/// entries and the given fixtures. A fixture with the name of a catalog
/// entry replaces it.
pub fn verify_suite(scope: &str, fixtures: &[(String, Subject)], cap: usize, exec: Exec) -> Result<Vec<SuiteCheck>> {
    if !SCOPES.contains(&scope) {
        return Err(Error::InvalidInput(format!("unknown scope `{scope}`; expected one of {}", SCOPES.join(", "))));
    }
    let mut suite = Suite { checks: Vec::new(), cap, exec };
    let mut subjects: Vec<(String, Subject)> = Vec::new();
    for mut entry in catalog::entries()? {
        if let Some((_, fixture)) = fixtures.iter().find(|(n, _)| *n == entry.name) {
            // The fixture stands in for the entry and must meet its
            // expectations; the remaining checks see it as a fixture.
            match fixture {
                Subject::Semigroup(s) => entry.object = CatalogObject::Semigroup(s.clone()),
                Subject::Category(_) => {
                    if scope == "all" || scope == "catalog" {
                        suite.record("catalog", &entry.name, "expectation", None);
                    }
                    continue;
                }
            }
            if scope == "all" || scope == "catalog" {
                record_entry(&mut suite, &entry);
            }
            continue;
        }
        if scope == "all" || scope == "catalog" {
            record_entry(&mut suite, &entry);
        }
        let subject = match entry.object {
            CatalogObject::Semigroup(s) => Subject::Semigroup(s),
            CatalogObject::Category(sc) => Subject::Category(sc.category),
        };
        subjects.push((entry.name, subject));
    }
    subjects.extend(fixtures.iter().cloned());
    if scope != "catalog" {
        for (name, subject) in &subjects {
            // T4 has 256 elements and thousands of cones; it is covered by
            // the semigroup checks only.
            let large = matches!(subject, Subject::Semigroup(s) if s.size() > 64);
            if large && !fixtures.iter().any(|(n, _)| n == name) {
                if scope == "all" || scope == "semigroup-core" {
                    suite.semigroup_core(name, match subject {
                        Subject::Semigroup(s) => s,
                        Subject::Category(_) => unreachable!(),
                    });
                }
                continue;
            }
            suite.run(scope, name, subject);
        }
    }
    Ok(suite.checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_scope_is_rejected() {
        assert!(verify_suite("nope", &[], 1000, Exec::default()).is_err());
    }

    #[test]
    fn catalog_scope_passes() {
        let checks = verify_suite("catalog", &[], 1000, Exec::default()).unwrap();
        assert!(!checks.is_empty());
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn fixture_replaces_entry() {
        let zero = FiniteSemigroup::from_cayley_table(&[vec![0, 0], vec![0, 0]]).unwrap();
        let fixtures = [("Z2".to_string(), Subject::Semigroup(zero))];
        let checks = verify_suite("catalog", &fixtures, 1000, Exec::default()).unwrap();
        assert!(checks.iter().any(|c| c.subject == "Z2" && !c.passed));
        let checks = verify_suite("functors", &fixtures, 1000, Exec::default()).unwrap();
        assert!(checks.iter().all(|c| c.subject != "Z2" || c.passed));
    }
}
