use super::{FiniteSemigroup, GreensData};
use crate::{Error, Result};
use serde::Serialize;

/// An explicit isomorphism witness: element `a` of the source maps to `map[a]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupIso {
    pub map: Vec<usize>,
}

impl SemigroupIso {
    pub fn identity(n: usize) -> Self {
        SemigroupIso { map: (0..n).collect() }
    }

    /// Checks bijectivity and the homomorphism property on all pairs.
    pub fn verify(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> Result<()> {
        if source.size() != target.size() {
            return Err(Error::IsoFailure(format!(
                "orders differ: {} vs {}",
                source.size(),
                target.size()
            )));
        }
        let mut hit = vec![false; target.size()];
        for &v in &self.map {
            if v >= target.size() || std::mem::replace(&mut hit[v], true) {
                return Err(Error::IsoFailure(format!("map is not a bijection at image {v}")));
            }
        }
        source.check_homomorphism(target, &self.map).map_err(|e| match e {
            Error::NotHomomorphism { a, b } => {
                Error::IsoFailure(format!("product of {a} and {b} is not preserved"))
            }
            other => other,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            inv[b] = a;
        }
        SemigroupIso { map: inv }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        SemigroupIso { map: self.map.iter().map(|&a| other.map[a]).collect() }
    }
}

type Signature = (bool, usize, usize, usize, usize, usize, usize, usize, usize);

fn signatures(s: &FiniteSemigroup, g: &GreensData) -> Vec<Signature> {
    let n = s.size();
    (0..n)
        .map(|a| {
            // Index and period of the monogenic subsemigroup.
            let mut powers = vec![a];
            let mut x = a;
            let (index, period) = loop {
                x = s.mul(x, a);
                if let Some(p) = powers.iter().position(|&y| y == x) {
                    break (p, powers.len() - p);
                }
                powers.push(x);
            };
            let below_l = (0..n).filter(|&b| g.leq_l(b, a)).count();
            let below_r = (0..n).filter(|&b| g.leq_r(b, a)).count();
            (
                s.is_idempotent(a),
                g.l_classes()[g.l_class(a)].len(),
                g.r_classes()[g.r_class(a)].len(),
                g.d_classes()[g.d_class(a)].len(),
                below_l,
                below_r,
                index,
                period,
                g.idempotents_in_l(a).len() * n + g.idempotents_in_r(a).len(),
            )
        })
        .collect()
}

/// A generating set chosen greedily from the largest principal ideals down.
fn generators(s: &FiniteSemigroup, g: &GreensData) -> Vec<usize> {
    let n = s.size();
    let mut order: Vec<usize> = (0..n).collect();
    let ideal = |a: usize| (0..n).filter(|&b| g.leq_l(b, a) || g.leq_r(b, a)).count();
    order.sort_by_key(|&a| (std::cmp::Reverse(ideal(a)), a));
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    for a in order {
        if !covered[a] {
            gens.push(a);
            for b in s.closure(&gens) {
                covered[b] = true;
            }
        }
    }
    gens
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `map` over everything generated by `gens[..k]`, checking consistency.
    fn propagate(&self, k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let mut known: Vec<usize> = (0..map.len()).filter(|&a| map[a] != usize::MAX).collect();
        let mut i = 0;
        while i < known.len() {
            let x = known[i];
            for &h in &self.gens[..k] {
                let y = self.s.mul(x, h);
                let img = self.t.mul(map[x], map[h]);
                if map[y] == usize::MAX {
                    if used[img] {
                        return false;
                    }
                    map[y] = img;
                    used[img] = true;
                    known.push(y);
                } else if map[y] != img {
                    return false;
                }
            }
            i += 1;
        }
        true
    }

    fn run(&self, k: usize, map: Vec<usize>, used: Vec<bool>) -> Option<Vec<usize>> {
        if k == self.gens.len() {
            return Some(map);
        }
        let g = self.gens[k];
        let options: Vec<usize> = if map[g] != usize::MAX {
            vec![map[g]]
        } else {
            self.candidates[g].iter().copied().filter(|&c| !used[c]).collect()
        };
        for c in options {
            let mut m = map.clone();
            let mut u = used.clone();
            if m[g] == usize::MAX {
                m[g] = c;
                u[c] = true;
            }
            // Re-propagate over all known elements with the first k+1 generators.
            if self.propagate(k + 1, &mut m, &mut u) {
                if let Some(done) = self.run(k + 1, m, u) {
                    return Some(done);
                }
            }
        }
        None
    }
}

pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<SemigroupIso> {
    find_isomorphism_with(s, t, &GreensData::compute(s), &GreensData::compute(t))
}

/// Searches for an isomorphism `s -> t` by mapping a generating set of `s`
/// and extending multiplicatively. Candidates are pruned by Green's-class
/// and monogenic invariants. The first witness in candidate order is returned.
pub fn find_isomorphism_with(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    gs: &GreensData,
    gt: &GreensData,
) -> Option<SemigroupIso> {
    if s.size() != t.size() {
        return None;
    }
    let sig_s = signatures(s, gs);
    let sig_t = signatures(t, gt);
    let mut a = sig_s.clone();
    let mut b = sig_t.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let n = s.size();
    let candidates = (0..n)
        .map(|x| (0..n).filter(|&y| sig_t[y] == sig_s[x]).collect())
        .collect();
    let search = Search { s, t, gens: generators(s, gs), candidates };
    let map = search.run(0, vec![usize::MAX; n], vec![false; n])?;
    let iso = SemigroupIso { map };
    iso.verify(s, t).ok()?;
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn finds_relabelings() {
        let t3 = catalog::transformation_monoid(3).unwrap();
        let perm: Vec<usize> = (0..27).map(|i| (i * 5 + 3) % 27).collect();
        let u = t3.permuted(&perm);
        let iso = find_isomorphism(&t3, &u).unwrap();
        iso.verify(&t3, &u).unwrap();
    }

    #[test]
    fn distinguishes_left_and_right_zero() {
        let l2 = FiniteSemigroup::from_cayley_table(&[vec![0, 0], vec![1, 1]]).unwrap();
        let r2 = l2.opposite();
        assert!(find_isomorphism(&l2, &r2).is_none());
        assert!(find_isomorphism(&l2, &l2).is_some());
    }

    #[test]
    fn inverse_and_composition() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let iso = find_isomorphism(&t2, &t2).unwrap();
        let back = iso.then(&iso.inverse());
        assert_eq!(back, SemigroupIso::identity(4));
    }
}
