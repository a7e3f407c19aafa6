//! Named catalog entries and the properties each is expected to have.

use super::*;
use crate::category::{verify_normal, NormalCategory};
use crate::cones::DEFAULT_CONE_CAP;
use crate::connected::ConnectedCategory;
use crate::exec::Exec;
use crate::semigroup::{classify_with, GreensData};
use serde::Serialize;

#[derive(Clone, Debug)]
pub enum CatalogObject {
    Semigroup(FiniteSemigroup),
    Category(SetCategory),
}

/// An expected value of a named property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expectation {
    Flag(&'static str, bool),
    Count(&'static str, usize),
}

impl Expectation {
    pub fn property(&self) -> &'static str {
        match self {
            Expectation::Flag(p, _) | Expectation::Count(p, _) => p,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: &'static str,
    pub object: CatalogObject,
    pub expectations: Vec<Expectation>,
}

impl CatalogEntry {
    pub fn semigroup(&self) -> Option<&FiniteSemigroup> {
        match &self.object {
            CatalogObject::Semigroup(s) => Some(s),
            CatalogObject::Category(_) => None,
        }
    }

    pub fn category(&self) -> Option<&SetCategory> {
        match &self.object {
            CatalogObject::Category(c) => Some(c),
            CatalogObject::Semigroup(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub entry: String,
    pub property: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

const FIXED: [&str; 7] = ["L2", "R2", "L2Z", "RRB3", "RRB4", "Y2", "Z2"];
const FAMILIES: [(&str, usize, usize); 6] = [("T", 1, 4), ("TS", 2, 4), ("I", 1, 3), ("P", 1, 3), ("SP", 2, 3), ("X", 1, 3)];

/// The default entry names, families first.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> =
        FAMILIES.iter().flat_map(|&(p, lo, hi)| (lo..=hi).map(move |n| format!("{p}{n}"))).collect();
    out.extend(FIXED.iter().map(|s| s.to_string()));
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn binomial(n: usize, k: usize) -> usize {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn bell(n: usize) -> usize {
    super::partition_lattice(n).0.len()
}

fn inverse_monoid_order(n: usize) -> usize {
    (0..=n).map(|k| binomial(n, k).pow(2) * factorial(k)).sum()
}

fn split_name(name: &str) -> Option<(&str, usize)> {
    let digits = name.len() - name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if digits == 0 {
        return None;
    }
    let (prefix, num) = name.split_at(name.len() - digits);
    Some((prefix, num.parse().ok()?))
}

/// Builds an entry by name: one of the fixed names, or a family prefix
/// (`T`, `TS`, `I`, `P`, `SP`, `X`) followed by its degree.
pub fn build(name: &str) -> Result<CatalogEntry> {
    use Expectation::{Count, Flag};
    let semigroup = |s: FiniteSemigroup| CatalogObject::Semigroup(s);
    let entry = |description, object, expectations| CatalogEntry { name: name.to_string(), description, object, expectations };
    let fixed = match name {
        "L2" => Some(entry(
            "left-zero semigroup of order two",
            semigroup(left_zero2()),
            vec![Count("order", 2), Flag("regular", true), Flag("left_reductive", false), Flag("right_reductive", true)],
        )),
        "R2" => Some(entry(
            "right-zero semigroup of order two",
            semigroup(right_zero2()),
            vec![
                Count("order", 2),
                Flag("left_reductive", true),
                Flag("right_reductive", false),
                Flag("right_regular_band", true),
                Flag("l_unipotent", true),
            ],
        )),
        "L2Z" => Some(entry(
            "left-zero semigroup {e, f} with a zero adjoined",
            semigroup(left_zero2_with_zero()),
            vec![
                Count("order", 3),
                Flag("regular", true),
                Flag("l_unipotent", false),
                Flag("r_poset_semilattice", true),
                Flag("left_reductive", false),
                Count("l_classes", 2),
                Count("r_classes", 3),
            ],
        )),
        "RRB3" => Some(entry(
            "right-zero band with an identity adjoined",
            semigroup(right_regular_band3()),
            vec![
                Count("order", 3),
                Flag("right_regular_band", true),
                Flag("l_unipotent", true),
                Flag("inverse", false),
                Flag("left_reductive", true),
                Flag("monoid", true),
            ],
        )),
        "RRB4" => Some(entry(
            "product of the right-zero band and the two-element semilattice",
            semigroup(right_regular_band4()),
            vec![Count("order", 4), Flag("right_regular_band", true), Flag("left_reductive", true)],
        )),
        "Y2" => Some(entry(
            "two-element semilattice",
            semigroup(semilattice2()),
            vec![Count("order", 2), Flag("inverse", true), Flag("band", true), Flag("monoid", true)],
        )),
        "Z2" => Some(entry(
            "cyclic group of order two",
            semigroup(cyclic_group2()),
            vec![Count("order", 2), Flag("inverse", true), Flag("band", false), Count("d_classes", 1)],
        )),
        _ => None,
    };
    if let Some(e) = fixed {
        return Ok(e);
    }
    let unknown = || Error::InvalidInput(format!("unknown catalog entry `{name}`"));
    let (prefix, n) = split_name(name).ok_or_else(unknown)?;
    let e = match prefix {
        "T" => entry(
            "full transformation monoid",
            semigroup(transformation_monoid(n)?),
            vec![
                Count("order", n.pow(n as u32)),
                Flag("regular", true),
                Flag("left_reductive", true),
                Flag("monoid", true),
                Flag("l_unipotent", n <= 2),
                Count("l_classes", (1usize << n) - 1),
                Count("r_classes", bell(n)),
            ],
        ),
        "TS" => entry(
            "singular part of the full transformation monoid",
            semigroup(singular_part(n)?),
            vec![
                Count("order", n.pow(n as u32) - factorial(n)),
                Flag("regular", true),
                Flag("left_reductive", true),
                Flag("monoid", false),
            ],
        ),
        "I" => entry(
            "symmetric inverse monoid",
            semigroup(symmetric_inverse_monoid(n)?),
            vec![
                Count("order", inverse_monoid_order(n)),
                Flag("inverse", true),
                Flag("left_reductive", true),
                Count("l_classes", 1 << n),
                Count("r_classes", 1 << n),
            ],
        ),
        "P" => entry(
            "nonempty subsets with all maps",
            CatalogObject::Category(powerset_set_category(n)?),
            vec![
                Count("objects", (1 << n) - 1),
                Flag("normal", true),
                Flag("bounded_above", true),
                Count("cones", n.pow(n as u32)),
                Count("cone_r_classes", bell(n)),
                Flag("supported", n <= 2),
            ],
        ),
        "SP" => entry(
            "nonempty proper subsets with all maps",
            CatalogObject::Category(singular_powerset(n)?),
            vec![
                Count("objects", (1 << n) - 2),
                Flag("normal", true),
                Flag("bounded_above", false),
                Count("cones", n.pow(n as u32) - factorial(n)),
            ],
        ),
        "X" => entry(
            "subsets with partial bijections",
            CatalogObject::Category(partial_bijection_category(n)?),
            vec![
                Count("objects", 1 << n),
                Flag("normal", true),
                Flag("bounded_above", true),
                Count("cones", inverse_monoid_order(n)),
                Flag("self_supported", true),
            ],
        ),
        _ => return Err(unknown()),
    };
    Ok(e)
}

/// Every default entry.
pub fn entries() -> Result<Vec<CatalogEntry>> {
    names().iter().map(|n| build(n)).collect()
}

fn semigroup_property(s: &FiniteSemigroup, g: &GreensData, property: &str) -> Option<String> {
    let f = classify_with(s, g);
    let v = match property {
        "order" => s.size().to_string(),
        "l_classes" => g.l_classes().len().to_string(),
        "r_classes" => g.r_classes().len().to_string(),
        "d_classes" => g.d_classes().len().to_string(),
        "regular" => f.regular.to_string(),
        "left_reductive" => f.left_reductive.to_string(),
        "right_reductive" => f.right_reductive.to_string(),
        "l_unipotent" => f.l_unipotent.to_string(),
        "inverse" => f.inverse.to_string(),
        "band" => f.band.to_string(),
        "right_regular_band" => f.right_regular_band.to_string(),
        "monoid" => f.monoid.to_string(),
        "r_poset_semilattice" => {
            g.r_class_poset(s).map(|p| p.is_meet_semilattice()).unwrap_or(false).to_string()
        }
        _ => return None,
    };
    Some(v)
}

fn category_property(sc: &SetCategory, cc: &Result<ConnectedCategory>, property: &str) -> Option<String> {
    let c = &sc.category;
    let v = match property {
        "objects" => c.object_count().to_string(),
        "normal" => verify_normal(c, DEFAULT_CONE_CAP).all_passed().to_string(),
        "bounded_above" => c.is_bounded_above().to_string(),
        "cones" => cc.as_ref().map_or("error".into(), |cc| cc.full_cone_semigroup().len().to_string()),
        "cone_r_classes" => cc.as_ref().map_or("error".into(), |cc| cc.r_poset().len().to_string()),
        "supported" => cc.as_ref().map_or("error".into(), |cc| cc.is_supported().to_string()),
        "self_supported" => cc
            .as_ref()
            .map_or("error".into(), |cc| cc.is_self_supported().map_or("unsupported".into(), |b| b.to_string())),
        _ => return None,
    };
    Some(v)
}

/// Evaluates every expectation of an entry.
pub fn verify_entry(entry: &CatalogEntry) -> Vec<EntryCheck> {
    let actual: Box<dyn Fn(&str) -> Option<String>> = match &entry.object {
        CatalogObject::Semigroup(s) => {
            let g = GreensData::compute(s);
            let s = s.clone();
            Box::new(move |p| semigroup_property(&s, &g, p))
        }
        CatalogObject::Category(sc) => {
            let cc = NormalCategory::new(sc.category.clone())
                .and_then(|nc| ConnectedCategory::with_full_downset(nc, DEFAULT_CONE_CAP, Exec::default()));
            let sc = sc.clone();
            Box::new(move |p| category_property(&sc, &cc, p))
        }
    };
    entry
        .expectations
        .iter()
        .map(|e| {
            let expected = match e {
                Expectation::Flag(_, b) => b.to_string(),
                Expectation::Count(_, n) => n.to_string(),
            };
            let actual = actual(e.property()).unwrap_or_else(|| "unknown property".into());
            EntryCheck {
                entry: entry.name.clone(),
                property: e.property(),
                passed: actual == expected,
                expected,
                actual,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(split_name("TS3"), Some(("TS", 3)));
        assert_eq!(split_name("L2Z"), None);
        assert!(build("L2Z").is_ok());
        assert!(build("Q3").is_err());
        assert!(matches!(build("T5"), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn small_entries_meet_expectations() {
        for name in ["T2", "T3", "I2", "P2", "X2", "SP3", "L2", "R2", "L2Z", "RRB3", "Y2", "Z2"] {
            let e = build(name).unwrap();
            for check in verify_entry(&e) {
                assert!(check.passed, "{check:?}");
            }
        }
    }
}
