//! The analysis pipeline behind the command line: classify, build the
//! left category, enumerate cones, connect, and run the roundtrips.

mod eggbox;
mod script;
mod suite;

pub use eggbox::{eggbox, Cell, DClassBox, Eggbox};
pub use script::{parse_input, parse_script, AnalysisScript, Input};
pub use suite::{verify_suite, SuiteCheck, SCOPES};

use crate::category::{verify_normal, AxiomReport, FiniteCategory, NormalCategory};
use crate::cones::{cone_line, ConeSemigroup, DEFAULT_CONE_CAP};
use crate::connected::{check_connected, ConnectedCategory};
use crate::exec::Exec;
use crate::functors::{
    functor_c_with, left_connected_category, naturality_check, roundtrip_category_with, rho_isomorphism, hom_to_cc,
    CCMorphism,
};
use crate::semigroup::{
    classify_with, inverse_conditions, l_unipotent_conditions, ClassFlags, FiniteSemigroup, GreensData, SemigroupIso,
};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

pub const DEFAULT_SIZE_CAP: usize = 256;

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub cone_cap: usize,
    pub size_cap: usize,
    pub exec: Exec,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { cone_cap: DEFAULT_CONE_CAP, size_cap: DEFAULT_SIZE_CAP, exec: Exec::default() }
    }
}

#[derive(Clone, Debug)]
pub enum Subject {
    Semigroup(FiniteSemigroup),
    Category(FiniteCategory),
}

/// Script extras: a down-set for a category, or a homomorphism into a
/// target semigroup.
#[derive(Clone, Debug, Default)]
pub struct Extras {
    pub downset: Option<Vec<usize>>,
    pub hom: Option<(FiniteSemigroup, Vec<usize>)>,
}

/// The outcome of a pipeline stage.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Stage<T> {
    Done { value: T },
    Skipped { reason: String },
    Failed { error: String, cap_exceeded: bool },
}

impl<T> Stage<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(value) => Stage::Done { value },
            Err(e) => Stage::failed(&e),
        }
    }

    fn failed(e: &Error) -> Self {
        Stage::Failed { error: e.to_string(), cap_exceeded: is_cap(e) }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Stage::Skipped { reason: reason.into() }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Stage::Done { value } => Some(value),
            _ => None,
        }
    }

    pub fn cap_exceeded(&self) -> bool {
        matches!(self, Stage::Failed { cap_exceeded: true, .. })
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, Stage::Failed { .. })
    }
}

fn is_cap(e: &Error) -> bool {
    matches!(e, Error::CapExceeded { .. } | Error::SearchSpaceTooLarge(_))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassCounts {
    pub l: usize,
    pub r: usize,
    pub h: usize,
    pub d: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupSummary {
    pub order: usize,
    pub flags: ClassFlags,
    pub l_unipotent_conditions: [bool; 7],
    pub inverse_conditions: [bool; 4],
    pub classes: ClassCounts,
    pub idempotents: Vec<usize>,
    pub eggbox: Eggbox,
}

#[derive(Clone, Debug, Serialize)]
pub struct CategorySummary {
    pub objects: Vec<String>,
    pub morphisms: usize,
    pub hom_sizes: Vec<Vec<usize>>,
    pub largest_object: Option<usize>,
    pub axioms: AxiomReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeSummary {
    pub order: usize,
    pub idempotents: usize,
    pub r_classes: usize,
    /// Covering pairs `(lower, upper)` of the R-class order.
    pub r_covers: Vec<(usize, usize)>,
    pub cones: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectionSummary {
    pub downset: Vec<usize>,
    pub order: usize,
    pub flags: ClassFlags,
    pub supported: bool,
    pub self_supported: Option<bool>,
    pub support_map: Option<Vec<usize>>,
    pub monoid_identity: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomSummary {
    pub map: Vec<usize>,
    pub cc_morphism: CCMorphism,
    pub natural: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub kind: &'static str,
    pub semigroup: Option<SemigroupSummary>,
    pub category: Option<CategorySummary>,
    pub cones: Stage<ConeSummary>,
    pub connection: Stage<ConnectionSummary>,
    pub roundtrip_semigroup: Stage<SemigroupIso>,
    pub roundtrip_category: Stage<CCMorphism>,
    pub homomorphism: Option<Stage<HomSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, f64>>,
}

/// Names accepted by [`AnalysisReport::check`].
pub const CHECKS: [&str; 11] = [
    "regular",
    "left-reductive",
    "l-unipotent",
    "inverse",
    "normal",
    "connected",
    "supported",
    "self-supported",
    "bounded-above",
    "roundtrip",
    "natural",
];

impl AnalysisReport {
    /// Evaluates a named check; `None` for an unknown name.
    pub fn check(&self, name: &str) -> Option<bool> {
        let flags = |f: fn(&ClassFlags) -> bool| match (&self.semigroup, self.connection.value()) {
            (Some(s), _) => f(&s.flags),
            (None, Some(c)) => f(&c.flags),
            _ => false,
        };
        let conn = self.connection.value();
        Some(match name {
            "regular" => flags(|f| f.regular),
            "left-reductive" => flags(|f| f.left_reductive),
            "l-unipotent" => flags(|f| f.l_unipotent),
            "inverse" => flags(|f| f.inverse),
            "normal" => self.category.as_ref().is_some_and(|c| c.axioms.all_passed()),
            "connected" => conn.is_some(),
            "supported" => conn.is_some_and(|c| c.supported),
            "self-supported" => conn.is_some_and(|c| c.self_supported == Some(true)),
            "bounded-above" => self.category.as_ref().is_some_and(|c| c.largest_object.is_some()),
            "roundtrip" => {
                let sg = match self.kind {
                    "semigroup" => self.roundtrip_semigroup.value().is_some(),
                    _ => true,
                };
                sg && self.roundtrip_category.value().is_some()
            }
            "natural" => self
                .homomorphism
                .as_ref()
                .is_some_and(|h| h.value().is_some_and(|h| h.natural)),
            _ => return None,
        })
    }

    /// Whether any stage stopped on a size or search cap.
    pub fn cap_exceeded(&self) -> bool {
        self.cones.cap_exceeded()
            || self.connection.cap_exceeded()
            || self.roundtrip_semigroup.cap_exceeded()
            || self.roundtrip_category.cap_exceeded()
            || self.homomorphism.as_ref().is_some_and(|h| h.cap_exceeded())
    }

    /// Whether a stage failed for a reason other than a cap. Such failures
    /// mean a checked invariant did not hold.
    pub fn invariant_failed(&self) -> bool {
        let bad = |failed: bool, cap: bool| failed && !cap;
        bad(self.roundtrip_semigroup.is_failed(), self.roundtrip_semigroup.cap_exceeded())
            || bad(self.roundtrip_category.is_failed(), self.roundtrip_category.cap_exceeded())
            || self.homomorphism.as_ref().is_some_and(|h| bad(h.is_failed(), h.cap_exceeded()))
    }
}

pub fn semigroup_summary(s: &FiniteSemigroup, g: &GreensData) -> SemigroupSummary {
    SemigroupSummary {
        order: s.size(),
        flags: classify_with(s, g),
        l_unipotent_conditions: l_unipotent_conditions(s, g),
        inverse_conditions: inverse_conditions(s, g),
        classes: ClassCounts {
            l: g.l_classes().len(),
            r: g.r_classes().len(),
            h: g.h_classes().len(),
            d: g.d_classes().len(),
        },
        idempotents: g.idempotents().to_vec(),
        eggbox: eggbox(s, g),
    }
}

pub fn category_summary(c: &FiniteCategory, cone_cap: usize) -> CategorySummary {
    CategorySummary {
        objects: (0..c.object_count()).map(|a| c.object_label(a).to_string()).collect(),
        morphisms: c.morphism_count(),
        hom_sizes: c.hom_sizes(),
        largest_object: c.largest_object(),
        axioms: verify_normal(c, cone_cap),
    }
}

fn cone_summary(c: &FiniteCategory, cs: &ConeSemigroup) -> ConeSummary {
    let p = cs.r_class_poset();
    let k = p.len();
    let mut r_covers = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b && p.leq(a, b) && !(0..k).any(|m| m != a && m != b && p.leq(a, m) && p.leq(m, b)) {
                r_covers.push((a, b));
            }
        }
    }
    ConeSummary {
        order: cs.len(),
        idempotents: cs.greens().idempotents().len(),
        r_classes: k,
        r_covers,
        cones: cs.cones().iter().map(|g| cone_line(c, g)).collect(),
    }
}

fn connection_summary(cc: &ConnectedCategory) -> ConnectionSummary {
    let sub = cc.connection_semigroup();
    ConnectionSummary {
        downset: cc.downset().to_vec(),
        order: sub.len(),
        flags: classify_with(sub.semigroup(), sub.greens()),
        supported: cc.is_supported(),
        self_supported: cc.is_self_supported().ok(),
        support_map: cc.support_map().map(|m| m.classes),
        monoid_identity: cc.monoid_identity(),
    }
}

struct Timer(Option<BTreeMap<&'static str, f64>>);

impl Timer {
    fn time<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(t) = &mut self.0 {
            t.insert(stage, start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }
}

/// Runs the pipeline. Fails only when the subject exceeds the size cap;
/// every later problem is recorded in its stage.
pub fn analyze(subject: &Subject, extras: &Extras, opts: &AnalysisOptions, timing: bool) -> Result<AnalysisReport> {
    let mut timer = Timer(timing.then(BTreeMap::new));
    let report = match subject {
        Subject::Semigroup(s) => {
            if s.size() > opts.size_cap {
                return Err(Error::CapExceeded { what: "semigroup order".into(), value: s.size(), cap: opts.size_cap });
            }
            analyze_semigroup(s, extras, opts, &mut timer)
        }
        Subject::Category(c) => {
            if c.morphism_count() > opts.size_cap * opts.size_cap {
                return Err(Error::CapExceeded {
                    what: "category morphisms".into(),
                    value: c.morphism_count(),
                    cap: opts.size_cap * opts.size_cap,
                });
            }
            analyze_category(c, extras, opts, &mut timer)
        }
    };
    Ok(AnalysisReport { timing_ms: timer.0.clone(), ..report })
}

fn analyze_semigroup(s: &FiniteSemigroup, extras: &Extras, opts: &AnalysisOptions, timer: &mut Timer) -> AnalysisReport {
    let g = timer.time("greens", || GreensData::compute_with(s, opts.exec));
    let summary = timer.time("classify", || semigroup_summary(s, &g));
    let flags = summary.flags;
    let mut report = AnalysisReport {
        kind: "semigroup",
        semigroup: Some(summary),
        category: None,
        cones: Stage::skipped("semigroup is not regular"),
        connection: Stage::skipped("semigroup is not regular"),
        roundtrip_semigroup: Stage::skipped("semigroup is not regular"),
        roundtrip_category: Stage::skipped("semigroup is not regular"),
        homomorphism: None,
        timing_ms: None,
    };
    if !flags.regular {
        return report;
    }
    let lc = timer.time("cones", || left_connected_category(s, opts.cone_cap, opts.exec));
    let lc = match lc {
        Ok(lc) => lc,
        Err(e) => {
            report.cones = Stage::failed(&e);
            report.connection = Stage::skipped("cone enumeration failed");
            report.roundtrip_semigroup = Stage::skipped("cone enumeration failed");
            report.roundtrip_category = Stage::skipped("cone enumeration failed");
            return report;
        }
    };
    report.category = Some(timer.time("category", || category_summary(&lc.left.category, opts.cone_cap)));
    report.cones = Stage::Done { value: cone_summary(lc.cc.category(), lc.cc.full_cone_semigroup()) };
    report.connection = Stage::Done { value: connection_summary(&lc.cc) };
    if let Some((a, b)) = s.left_reductive_witness() {
        let reason = format!("not left reductive: elements {a} and {b} have the same right translation");
        report.roundtrip_semigroup = Stage::skipped(reason.clone());
        report.roundtrip_category = Stage::skipped(reason.clone());
        if extras.hom.is_some() {
            report.homomorphism = Some(Stage::skipped(reason));
        }
        return report;
    }
    report.roundtrip_semigroup = timer.time("roundtrip_semigroup", || Stage::from_result(rho_isomorphism(&lc)));
    report.roundtrip_category = timer.time("roundtrip_category", || {
        Stage::from_result(roundtrip_category_with(&lc.cc, opts.cone_cap, opts.exec).map(|(_, m)| m))
    });
    if let Some((target, map)) = &extras.hom {
        report.homomorphism = Some(timer.time("homomorphism", || {
            Stage::from_result((|| {
                let lt = functor_c_with(target, opts.cone_cap, opts.exec)?;
                let cc_morphism = hom_to_cc(&lc, &lt, map)?;
                let natural = naturality_check(&lc, &lt, map).is_ok();
                Ok(HomSummary { map: map.clone(), cc_morphism, natural })
            })())
        }));
    }
    report
}

fn analyze_category(c: &FiniteCategory, extras: &Extras, opts: &AnalysisOptions, timer: &mut Timer) -> AnalysisReport {
    let summary = timer.time("category", || category_summary(c, opts.cone_cap));
    let normal = summary.axioms.all_passed();
    let mut report = AnalysisReport {
        kind: "category",
        semigroup: None,
        category: Some(summary),
        cones: Stage::skipped("category is not normal"),
        connection: Stage::skipped("category is not normal"),
        roundtrip_semigroup: Stage::skipped("input is a category"),
        roundtrip_category: Stage::skipped("category is not normal"),
        homomorphism: extras.hom.as_ref().map(|_| Stage::skipped("homomorphisms need a semigroup source")),
        timing_ms: None,
    };
    if !normal {
        return report;
    }
    let nc = match NormalCategory::new_with(c.clone(), opts.exec) {
        Ok(nc) => nc,
        Err(e) => {
            report.cones = Stage::failed(&e);
            return report;
        }
    };
    let full = timer.time("cones", || crate::cones::enumerate_cones(&nc, opts.cone_cap, opts.exec));
    let full = match full {
        Ok(f) => f,
        Err(e) => {
            report.cones = Stage::failed(&e);
            report.connection = Stage::skipped("cone enumeration failed");
            report.roundtrip_category = Stage::skipped("cone enumeration failed");
            return report;
        }
    };
    report.cones = Stage::Done { value: cone_summary(c, &full) };
    let downset = extras.downset.clone().unwrap_or_else(|| (0..full.greens().r_classes().len()).collect());
    let cc = timer.time("connection", || check_connected(nc, full, &downset, opts.exec));
    match cc {
        Ok(cc) => {
            report.connection = Stage::Done { value: connection_summary(&cc) };
            report.roundtrip_category = timer.time("roundtrip_category", || {
                Stage::from_result(roundtrip_category_with(&cc, opts.cone_cap, opts.exec).map(|(_, m)| m))
            });
        }
        Err(e) => {
            report.connection = Stage::failed(&e);
            report.roundtrip_category = Stage::skipped("category is not connected by the down-set");
        }
    }
    report
}

/// Re-verifies the witnesses stated in a report against the subject.
pub fn replay(subject: &Subject, report: &AnalysisReport, opts: &AnalysisOptions) -> Result<()> {
    match subject {
        Subject::Semigroup(s) => {
            if let Some(iso) = report.roundtrip_semigroup.value() {
                let lc = functor_c_with(s, opts.cone_cap, opts.exec)?;
                iso.verify(s, lc.cc.connection_semigroup().semigroup())?;
                if let Some(m) = report.roundtrip_category.value() {
                    let (lt, _) = roundtrip_category_with(&lc.cc, opts.cone_cap, opts.exec)?;
                    m.verify(&lt.cc, &lc.cc)?;
                }
            }
        }
        Subject::Category(c) => {
            if let (Some(m), Some(conn)) = (report.roundtrip_category.value(), report.connection.value()) {
                let nc = NormalCategory::new(c.clone())?;
                let full = crate::cones::enumerate_cones(&nc, opts.cone_cap, opts.exec)?;
                let cc = check_connected(nc, full, &conn.downset, opts.exec)?;
                let (lt, _) = roundtrip_category_with(&cc, opts.cone_cap, opts.exec)?;
                m.verify(&lt.cc, &cc)?;
                if !m.is_isomorphism(&lt.cc, &cc) {
                    return Err(Error::IsoFailure("replayed functor is not an isomorphism".into()));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn run(s: FiniteSemigroup) -> AnalysisReport {
        analyze(&Subject::Semigroup(s), &Extras::default(), &AnalysisOptions::default(), false).unwrap()
    }

    #[test]
    fn t2_report_has_witnesses() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let r = run(t2.clone());
        assert_eq!(r.roundtrip_semigroup.value().unwrap().map.len(), 4);
        assert_eq!(r.check("roundtrip"), Some(true));
        replay(&Subject::Semigroup(t2), &r, &AnalysisOptions::default()).unwrap();
    }

    #[test]
    fn left_zero_skips_roundtrips() {
        let r = run(catalog::left_zero2());
        assert_eq!(r.check("left-reductive"), Some(false));
        assert!(matches!(r.roundtrip_semigroup, Stage::Skipped { .. }));
        assert!(!r.invariant_failed());
    }

    #[test]
    fn inverse_monoid_is_self_supported() {
        let r = run(catalog::symmetric_inverse_monoid(2).unwrap());
        assert_eq!(r.check("self-supported"), Some(true));
        assert_eq!(r.check("no-such-check"), None);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run(catalog::transformation_monoid(3).unwrap())).unwrap();
        let b = serde_json::to_string(&run(catalog::transformation_monoid(3).unwrap())).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn category_with_custom_downset() {
        let p = catalog::powerset_category(2).unwrap();
        let extras = Extras { downset: Some(vec![0]), hom: None };
        let r = analyze(&Subject::Category(p), &extras, &AnalysisOptions::default(), true).unwrap();
        assert!(r.timing_ms.is_some());
        assert!(r.cones.value().is_some());
    }

    #[test]
    fn size_cap_is_enforced() {
        let opts = AnalysisOptions { size_cap: 3, ..Default::default() };
        let err = analyze(
            &Subject::Semigroup(catalog::transformation_monoid(2).unwrap()),
            &Extras::default(),
            &opts,
            false,
        )
        .unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
