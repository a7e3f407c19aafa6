//! Built-in semigroups and categories with their expected properties.

mod bands;
mod entries;
mod powerset;
mod sets;

pub use bands::right_regular_bands;
pub use entries::{build, entries, names, verify_entry, CatalogEntry, CatalogObject, EntryCheck, Expectation};
pub use powerset::{
    partition_labels, partition_lattice, phi_isomorphism, powerset_connected, restriction_cone, Partition,
};
pub use sets::{mask_label, PointMap, SetCategory};

use crate::category::FiniteCategory;
use crate::semigroup::{FiniteSemigroup, PartialBijection, Transformation};
use crate::{Error, Result};

pub const MAX_TRANSFORMATION_DEGREE: usize = 4;
pub const MAX_CATEGORY_DEGREE: usize = 3;

fn cap(what: &str, n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(format!("{what} needs n >= 1")));
    }
    if n > max {
        return Err(Error::CapExceeded { what: format!("{what} degree"), value: n, cap: max });
    }
    Ok(())
}

/// The elements of `T_n` in index order (lexicographic image lists).
pub fn transformations(n: usize) -> Vec<Transformation> {
    Transformation::all(n)
}

/// The full transformation monoid `T_n`, maps composed left to right.
pub fn transformation_monoid(n: usize) -> Result<FiniteSemigroup> {
    cap("transformation monoid", n, MAX_TRANSFORMATION_DEGREE)?;
    let elems = transformations(n);
    let (s, _) = FiniteSemigroup::from_generators(&elems, |a, b| a.then(b), |a| a.to_string(), usize::MAX)?;
    Ok(s)
}

/// `T_n` without its units, elements in the order inherited from `T_n`.
pub fn singular_part(n: usize) -> Result<FiniteSemigroup> {
    cap("singular transformation semigroup", n, MAX_TRANSFORMATION_DEGREE)?;
    if n == 1 {
        return Err(Error::InvalidInput("T_1 has no singular elements".into()));
    }
    let elems: Vec<Transformation> = transformations(n).into_iter().filter(|t| t.rank() < n).collect();
    let (s, _) = FiniteSemigroup::from_generators(&elems, |a, b| a.then(b), |a| a.to_string(), usize::MAX)?;
    Ok(s)
}

/// The elements of `I_n` in index order.
pub fn partial_bijections(n: usize) -> Vec<PartialBijection> {
    PartialBijection::all(n)
}

/// The symmetric inverse monoid `I_n`.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteSemigroup> {
    cap("symmetric inverse monoid", n, MAX_CATEGORY_DEGREE)?;
    let elems = partial_bijections(n);
    let (s, _) = FiniteSemigroup::from_generators(&elems, |a, b| a.then(b), |a| a.to_string(), usize::MAX)?;
    Ok(s)
}

fn table(rows: &[&[usize]], labels: &[&str]) -> FiniteSemigroup {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    FiniteSemigroup::from_cayley_table(&rows)
        .and_then(|s| s.with_labels(labels.iter().map(|l| l.to_string()).collect()))
        .expect("built-in table is a semigroup")
}

/// Left-zero semigroup `{e, f}` with `xy = x`.
pub fn left_zero2() -> FiniteSemigroup {
    table(&[&[0, 0], &[1, 1]], &["e", "f"])
}

/// Right-zero semigroup `{e, f}` with `xy = y`.
pub fn right_zero2() -> FiniteSemigroup {
    table(&[&[0, 1], &[0, 1]], &["e", "f"])
}

/// The left-zero semigroup `{e, f}` with a zero adjoined.
pub fn left_zero2_with_zero() -> FiniteSemigroup {
    left_zero2().adjoin_zero("0")
}

/// Right-zero band with an identity adjoined: `{e, f, 1}`.
pub fn right_regular_band3() -> FiniteSemigroup {
    right_zero2().adjoin_identity("1")
}

/// The two-element semilattice `{1, e}`.
pub fn semilattice2() -> FiniteSemigroup {
    table(&[&[0, 1], &[1, 1]], &["1", "e"])
}

/// The cyclic group of order two.
pub fn cyclic_group2() -> FiniteSemigroup {
    table(&[&[0, 1], &[1, 0]], &["1", "g"])
}

/// A four-element right regular band mapping onto the semilattice `{1, e}`:
/// the product of the right-zero band `{a, b}` with `{1, e}`.
pub fn right_regular_band4() -> FiniteSemigroup {
    right_zero2().direct_product(&semilattice2())
}

/// `𝕡`: nonempty subsets of `{1..n}` with all maps.
pub fn powerset_category(n: usize) -> Result<FiniteCategory> {
    Ok(powerset_set_category(n)?.category)
}

pub fn powerset_set_category(n: usize) -> Result<SetCategory> {
    cap("powerset category", n, MAX_CATEGORY_DEGREE)?;
    let masks: Vec<u32> = (1..1u32 << n).collect();
    SetCategory::build(n, masks, |a, b| sets::all_maps(n, a, b))
}

/// `𝕊𝕡`: the full subcategory of `𝕡` on proper nonempty subsets.
pub fn singular_powerset(n: usize) -> Result<SetCategory> {
    cap("singular powerset category", n, MAX_CATEGORY_DEGREE)?;
    if n == 1 {
        return Err(Error::InvalidInput("n = 1 has no proper nonempty subsets".into()));
    }
    let full = (1u32 << n) - 1;
    let masks: Vec<u32> = (1..full).collect();
    SetCategory::build(n, masks, |a, b| sets::all_maps(n, a, b))
}

/// `𝕏`: all subsets of `{1..n}` with partial bijections as morphisms.
pub fn partial_bijection_category(n: usize) -> Result<SetCategory> {
    cap("partial bijection category", n, MAX_CATEGORY_DEGREE)?;
    let masks: Vec<u32> = (0..1u32 << n).collect();
    SetCategory::build(n, masks, |a, b| sets::partial_injections(n, a, b))
}

/// The powerset category with the empty set added as an object. It is a
/// category with subobjects, but the inclusion of the empty set does not split.
pub fn powerset_with_empty(n: usize) -> Result<SetCategory> {
    cap("powerset category", n, MAX_CATEGORY_DEGREE)?;
    let masks: Vec<u32> = (0..1u32 << n).collect();
    SetCategory::build(n, masks, |a, b| sets::all_maps(n, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{verify_normal, verify_subobject_axioms};
    use crate::semigroup::classify;

    #[test]
    fn orders() {
        assert_eq!(transformation_monoid(2).unwrap().size(), 4);
        assert_eq!(transformation_monoid(3).unwrap().size(), 27);
        assert_eq!(singular_part(3).unwrap().size(), 21);
        assert_eq!(symmetric_inverse_monoid(2).unwrap().size(), 7);
        assert_eq!(symmetric_inverse_monoid(3).unwrap().size(), 34);
        assert!(matches!(transformation_monoid(5), Err(Error::CapExceeded { .. })));
        assert!(matches!(symmetric_inverse_monoid(4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn transformation_index_order() {
        let t2 = transformation_monoid(2).unwrap();
        let labels: Vec<&str> = t2.labels().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, ["[1 1]", "[1 2]", "[2 1]", "[2 2]"]);
        assert_eq!(t2.identity(), Some(1));
    }

    #[test]
    fn named_example_flags() {
        assert!(!classify(&left_zero2()).left_reductive);
        let r2 = classify(&right_zero2());
        assert!(r2.left_reductive && !r2.right_reductive && r2.right_regular_band);
        assert!(classify(&right_regular_band3()).right_regular_band);
        assert!(classify(&right_regular_band4()).right_regular_band);
        assert!(classify(&cyclic_group2()).inverse);
    }

    #[test]
    fn powerset_objects_and_morphisms() {
        let p = powerset_category(3).unwrap();
        assert_eq!(p.object_count(), 7);
        // sum over nonempty A, B of |B|^|A|
        let total: usize = (1u32..8)
            .flat_map(|a| (1u32..8).map(move |b| (b.count_ones() as usize).pow(a.count_ones())))
            .sum();
        assert_eq!(p.morphism_count(), total);
        assert!(verify_normal(&p, 1_000_000).all_passed());
    }

    #[test]
    fn empty_set_breaks_normality() {
        let p = powerset_with_empty(2).unwrap();
        let r = verify_normal(&p.category, 1_000_000);
        assert!(verify_subobject_axioms(&p.category).all_passed());
        assert!(!r.get("NC2 inclusions split").unwrap().passed);
        assert!(!r.get("NC4 identity cones").unwrap().passed);
    }

    #[test]
    fn partial_bijection_category_is_normal() {
        let x = partial_bijection_category(2).unwrap();
        assert_eq!(x.category.object_count(), 4);
        assert!(verify_normal(&x.category, 1_000_000).all_passed());
        let sp = singular_powerset(3).unwrap();
        assert_eq!(sp.category.object_count(), 6);
        assert!(verify_normal(&sp.category, 1_000_000).all_passed());
    }
}
