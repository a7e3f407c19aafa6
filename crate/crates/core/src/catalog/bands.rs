use crate::exec::Exec;
use crate::semigroup::FiniteSemigroup;

const UNSET: usize = usize::MAX;

/// Checks every associativity and `xyx = yx` instance whose entries are set.
fn consistent(n: usize, t: &[usize]) -> bool {
    let at = |a: usize, b: usize| t[a * n + b];
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            if xy == UNSET {
                continue;
            }
            let yx = at(y, x);
            let xyx = at(xy, x);
            if yx != UNSET && xyx != UNSET && xyx != yx {
                return false;
            }
            for z in 0..n {
                let yz = at(y, z);
                if yz == UNSET {
                    continue;
                }
                let l = at(xy, z);
                let r = at(x, yz);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(n: usize, cell: usize, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(t.clone());
        return;
    }
    if cell / n == cell % n {
        return fill(n, cell + 1, t, out);
    }
    for v in 0..n {
        t[cell] = v;
        if consistent(n, t) {
            fill(n, cell + 1, t, out);
        }
    }
    t[cell] = UNSET;
}

fn canonical(n: usize, t: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inv = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let relabelled: Vec<usize> =
            (0..n * n).map(|i| perm[t[inv[i / n] * n + inv[i % n]]]).collect();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap()
}

/// All right regular bands (`xx = x`, `xyx = yx`) of order `1..=max_order`,
/// one per isomorphism class, in canonical-table order.
pub fn right_regular_bands(max_order: usize) -> Vec<FiniteSemigroup> {
    let mut all = Vec::new();
    for n in 1..=max_order {
        let mut t = vec![UNSET; n * n];
        for a in 0..n {
            t[a * n + a] = a;
        }
        let mut tables = Vec::new();
        fill(n, 0, &mut t, &mut tables);
        let mut classes: Vec<Vec<usize>> = tables.iter().map(|t| canonical(n, t)).collect();
        classes.sort();
        classes.dedup();
        for c in classes {
            let s = FiniteSemigroup::from_flat(n, &c, Exec::Sequential).expect("enumerated table is associative");
            all.push(s);
        }
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{classify, find_isomorphism};

    /// Every table of order `n`, filtered by the axioms directly.
    fn brute(n: usize) -> Vec<FiniteSemigroup> {
        let mut found: Vec<FiniteSemigroup> = Vec::new();
        let total = n.pow((n * n) as u32);
        for code in 0..total {
            let mut c = code;
            let t: Vec<usize> = (0..n * n)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v
                })
                .collect();
            let Ok(s) = FiniteSemigroup::from_flat(n, &t, Exec::Sequential) else { continue };
            if !classify(&s).right_regular_band {
                continue;
            }
            if !found.iter().any(|f| find_isomorphism(f, &s).is_some()) {
                found.push(s);
            }
        }
        found
    }

    #[test]
    fn matches_brute_force_up_to_three() {
        let bands = right_regular_bands(3);
        for n in 1..=3 {
            let mine: Vec<_> = bands.iter().filter(|b| b.size() == n).collect();
            assert_eq!(mine.len(), brute(n).len(), "order {n}");
        }
    }

    #[test]
    fn all_are_pairwise_non_isomorphic_right_regular_bands() {
        let bands = right_regular_bands(4);
        for (i, a) in bands.iter().enumerate() {
            assert!(classify(a).right_regular_band);
            for b in &bands[i + 1..] {
                assert!(a.size() != b.size() || find_isomorphism(a, b).is_none());
            }
        }
    }
}
