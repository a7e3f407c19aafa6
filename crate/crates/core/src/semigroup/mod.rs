//! Finite semigroups given by Cayley tables.

mod classify;
mod format;
mod greens;
mod iso;
mod transform;

pub use classify::{
    classify, classify_with, idempotent_orders_agree, inverse_conditions, l_unipotent_conditions,
    ClassFlags,
};
pub use format::{
    parse_cayley, parse_generators, parse_semigroup, to_cayley_text, to_generators_text, MAX_GENERATOR_DEGREE,
};
pub use greens::GreensData;
pub use iso::{find_isomorphism, find_isomorphism_with, SemigroupIso};
pub use transform::{PartialBijection, Transformation};

use crate::exec::Exec;
use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::hash::Hash;

/// A finite semigroup on the dense index set `0..size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<u32>,
    labels: Vec<String>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a square table, checking range and associativity.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_table_with(rows, Exec::default())
    }

    pub fn from_cayley_table_with(rows: &[Vec<usize>], exec: Exec) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("a semigroup needs at least one element".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, &flat, exec)
    }

    /// Builds a semigroup from a row-major table of length `n * n`.
    pub fn from_flat(n: usize, flat: &[usize], exec: Exec) -> Result<Self> {
        if n == 0 || flat.len() != n * n {
            return Err(Error::InvalidInput(format!("table of length {} is not {n}x{n}", flat.len())));
        }
        for (i, &v) in flat.iter().enumerate() {
            if v >= n {
                return Err(Error::IndexOutOfRange { row: i / n, col: i % n, value: v, size: n });
            }
        }
        let s = Self::from_parts(n, flat.iter().map(|&v| v as u32).collect(), None);
        if let Some((a, b, c)) = s.associativity_violation(exec) {
            return Err(Error::NonAssociative { a, b, c });
        }
        Ok(s)
    }

    fn from_parts(size: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        let labels = labels.unwrap_or_else(|| (0..size).map(|i| i.to_string()).collect());
        let mut s = FiniteSemigroup { size, table, labels, identity: None };
        s.identity = (0..size).find(|&e| (0..size).all(|x| s.mul(e, x) == x && s.mul(x, e) == x));
        s
    }

    /// Closes `gens` under `mul`. Elements are indexed in sorted order.
    ///
    /// Returns the semigroup together with the element for each index.
    pub fn from_generators<T, M, L>(gens: &[T], mul: M, label: L, cap: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Ord + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        if gens.is_empty() {
            return Err(Error::InvalidInput("no generators given".into()));
        }
        let mut seen: BTreeSet<T> = gens.iter().cloned().collect();
        let mut queue: VecDeque<T> = seen.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = mul(&x, g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "generated semigroup order".into(),
                            value: seen.len() + 1,
                            cap,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<T> = seen.into_iter().collect();
        let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&mul(a, b)] as u32);
            }
        }
        let labels = elems.iter().map(&label).collect();
        Ok((Self::from_parts(n, table, Some(labels)), elems))
    }

    /// Builds from a table known to be associative, e.g. a composition table of cones.
    pub(crate) fn from_trusted(n: usize, table: Vec<u32>, labels: Vec<String>) -> Self {
        Self::from_parts(n, table, Some(labels))
    }

    /// Replaces the element labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::InvalidInput(format!(
                "{} labels given for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size).map(|a| (0..self.size).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The first triple in lexicographic order with `(ab)c != a(bc)`.
    pub fn associativity_violation(&self, exec: Exec) -> Option<(usize, usize, usize)> {
        let n = self.size;
        exec.find_first(n, |a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Weak-inverse regularity: every `a` has some `x` with `axa = a`.
    pub fn is_regular(&self) -> bool {
        self.non_regular_element().is_none()
    }

    pub fn non_regular_element(&self) -> Option<usize> {
        (0..self.size).find(|&a| !(0..self.size).any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// `V(a) = { x : axa = a and xax = x }`.
    pub fn inverses(&self, a: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.mul(self.mul(a, x), a) == a && self.mul(self.mul(x, a), x) == x)
            .collect()
    }

    fn column(&self, a: usize) -> Vec<u32> {
        (0..self.size).map(|x| self.table[x * self.size + a]).collect()
    }

    fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.size..(a + 1) * self.size]
    }

    /// Two distinct elements whose right translations `x -> xa` coincide.
    pub fn left_reductive_witness(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        for a in 0..self.size {
            if let Some(&b) = seen.get(&self.column(a)) {
                return Some((b, a));
            }
            seen.insert(self.column(a), a);
        }
        None
    }

    /// Two distinct elements whose left translations `x -> ax` coincide.
    pub fn right_reductive_witness(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<&[u32], usize> = HashMap::new();
        for a in 0..self.size {
            if let Some(&b) = seen.get(self.row(a)) {
                return Some((b, a));
            }
            seen.insert(self.row(a), a);
        }
        None
    }

    pub fn is_left_reductive(&self) -> bool {
        self.left_reductive_witness().is_none()
    }

    pub fn is_right_reductive(&self) -> bool {
        self.right_reductive_witness().is_none()
    }

    /// The opposite semigroup, with product `a * b = ba`.
    pub fn opposite(&self) -> Self {
        let n = self.size;
        let table = (0..n * n).map(|i| self.table[(i % n) * n + i / n]).collect();
        Self::from_parts(n, table, Some(self.labels.clone()))
    }

    /// The subsemigroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in gens {
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.size).filter(|&a| seen[a]).collect()
    }

    /// The subsemigroup on `elems`, reindexed in the given order.
    ///
    /// Fails if `elems` is not closed under the product.
    pub fn subsemigroup(&self, elems: &[usize]) -> Result<Self> {
        let mut pos = vec![usize::MAX; self.size];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let k = elems.len();
        if k == 0 {
            return Err(Error::InvalidInput("empty subset".into()));
        }
        let mut table = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "subset not closed: {a}*{b} = {}",
                        self.mul(a, b)
                    )));
                }
                table.push(p as u32);
            }
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Ok(Self::from_parts(k, table, Some(labels)))
    }

    fn adjoin(&self, label: &str, absorbing: bool) -> Self {
        let n = self.size;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let v = match (a == n, b == n) {
                    (false, false) => self.mul(a, b),
                    (true, true) => n,
                    (true, false) => if absorbing { n } else { b },
                    (false, true) => if absorbing { n } else { a },
                };
                table.push(v as u32);
            }
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Self::from_parts(m, table, Some(labels))
    }

    /// `S` with a new zero element appended as the last index.
    pub fn adjoin_zero(&self, label: &str) -> Self {
        self.adjoin(label, true)
    }

    /// `S` with a new identity element appended as the last index.
    pub fn adjoin_identity(&self, label: &str) -> Self {
        self.adjoin(label, false)
    }

    /// The direct product, with `(a, b)` at index `a * other.size() + b`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (n, m) = (self.size, other.size);
        let k = n * m;
        let mut table = Vec::with_capacity(k * k);
        for x in 0..k {
            for y in 0..k {
                let a = self.mul(x / m, y / m);
                let b = other.mul(x % m, y % m);
                table.push((a * m + b) as u32);
            }
        }
        let labels = (0..k)
            .map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m]))
            .collect();
        Self::from_parts(k, table, Some(labels))
    }

    /// Relabels elements so that `a` becomes `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(perm[self.mul(inv[x], inv[y])] as u32);
            }
        }
        let labels = (0..n).map(|x| self.labels[inv[x]].clone()).collect();
        Self::from_parts(n, table, Some(labels))
    }

    /// Checks that `map` is a homomorphism into `target`.
    pub fn check_homomorphism(&self, target: &Self, map: &[usize]) -> Result<()> {
        if map.len() != self.size {
            return Err(Error::InvalidInput(format!(
                "map has {} entries for {} elements",
                map.len(),
                self.size
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size) {
            return Err(Error::InvalidInput(format!("image {v} outside target of size {}", target.size)));
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn l2() -> FiniteSemigroup {
        FiniteSemigroup::from_cayley_table(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn left_zero_has_no_identity() {
        let s = l2();
        assert_eq!(s.identity(), None);
        assert!(s.is_regular());
        assert_eq!(s.left_reductive_witness(), Some((0, 1)));
        assert!(s.is_right_reductive());
    }

    #[test]
    fn cyclic_group_identity() {
        let z2 = FiniteSemigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.identity(), Some(0));
        assert_eq!(z2.inverses(1), vec![1]);
    }

    #[test]
    fn rejects_non_associative() {
        let err = FiniteSemigroup::from_cayley_table(&[vec![1, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::NonAssociative { a: 0, b: 0, c: 1 });
    }

    #[test]
    fn rejects_out_of_range() {
        let err = FiniteSemigroup::from_cayley_table(&[vec![0, 2], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { row: 0, col: 1, value: 2, size: 2 }));
    }

    #[test]
    fn opposite_swaps_reductivity() {
        let s = l2();
        let op = s.opposite();
        assert!(op.is_left_reductive());
        assert!(!op.is_right_reductive());
        assert_eq!(op.opposite(), s);
    }

    #[test]
    fn adjoined_zero_is_absorbing() {
        let s = l2().adjoin_zero("0");
        assert_eq!(s.size(), 3);
        for a in 0..3 {
            assert_eq!(s.mul(a, 2), 2);
            assert_eq!(s.mul(2, a), 2);
        }
    }

    #[test]
    fn closure_of_generators() {
        let z2 = FiniteSemigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.closure(&[1]), vec![0, 1]);
        assert_eq!(z2.closure(&[0]), vec![0]);
        assert!(z2.subsemigroup(&[1]).is_err());
    }
}
