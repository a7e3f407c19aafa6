//! Finite posets given by their order matrix.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                m[a * n + b] = leq(a, b);
            }
        }
        Poset { n, leq: m }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| self.leq(a, a))
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq(a, b) || (0..n).all(|c| !self.leq(b, c) || self.leq(a, c)))
            })
    }

    /// The greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n).filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&c| self.leq(c, m)))
    }

    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.meet(a, b).is_some()))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|c| self.leq(c, m)))
    }

    /// A pair `(missing, member)` showing that `set` is not downward closed.
    pub fn down_closure_violation(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut inside = vec![false; self.n];
        for &a in set {
            inside[a] = true;
        }
        for &a in set {
            if let Some(b) = (0..self.n).find(|&b| !inside[b] && self.leq(b, a)) {
                return Some((b, a));
            }
        }
        None
    }

    /// The subposet on `elems`, indexed by position.
    pub fn restrict(&self, elems: &[usize]) -> Poset {
        Poset::from_fn(elems.len(), |i, j| self.leq(elems[i], elems[j]))
    }

    /// Checks that `map` is an order isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &v in map {
            if v >= self.n || std::mem::replace(&mut hit[v], true) {
                return false;
            }
        }
        (0..self.n).all(|a| (0..self.n).all(|b| self.leq(a, b) == other.leq(map[a], map[b])))
    }

    /// Checks that `map` is order preserving into `other`.
    pub fn is_monotone(&self, other: &Poset, map: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| !self.leq(a, b) || other.leq(map[a], map[b])))
    }

    fn profile(&self, a: usize) -> (usize, usize) {
        let below = (0..self.n).filter(|&b| self.leq(b, a)).count();
        let above = (0..self.n).filter(|&b| self.leq(a, b)).count();
        (below, above)
    }

    /// The first order isomorphism to `other` in lexicographic order, if any.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let ps: Vec<_> = (0..self.n).map(|a| self.profile(a)).collect();
        let po: Vec<_> = (0..other.n).map(|a| other.profile(a)).collect();
        let mut map = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.extend(other, &ps, &po, &mut map, &mut used).then_some(map)
    }

    fn extend(
        &self,
        other: &Poset,
        ps: &[(usize, usize)],
        po: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let a = map.len();
        if a == self.n {
            return true;
        }
        for c in 0..self.n {
            if used[c] || ps[a] != po[c] {
                continue;
            }
            let ok = (0..a).all(|b| {
                self.leq(a, b) == other.leq(c, map[b]) && self.leq(b, a) == other.leq(map[b], c)
            });
            if ok {
                map.push(c);
                used[c] = true;
                if self.extend(other, ps, po, map, used) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        Poset::from_fn(n, |a, b| a <= b)
    }

    #[test]
    fn chain_basics() {
        let c = chain(3);
        assert!(c.is_partial_order());
        assert!(c.is_meet_semilattice());
        assert_eq!(c.meet(2, 1), Some(1));
        assert_eq!(c.maximum(), Some(2));
        assert_eq!(c.down_closure_violation(&[1]), Some((0, 1)));
        assert_eq!(c.down_closure_violation(&[0, 1]), None);
    }

    #[test]
    fn antichain_has_no_meets() {
        let a = Poset::from_fn(2, |x, y| x == y);
        assert!(!a.is_meet_semilattice());
        assert_eq!(a.maximum(), None);
    }

    #[test]
    fn isomorphism_search() {
        let rev = Poset::from_fn(3, |a, b| a >= b);
        let map = chain(3).find_isomorphism(&rev).unwrap();
        assert_eq!(map, vec![2, 1, 0]);
        assert!(chain(3).is_isomorphism(&rev, &map));
        let v = Poset::from_fn(3, |a, b| a == b || a == 0);
        assert!(chain(3).find_isomorphism(&v).is_none());
    }
}
