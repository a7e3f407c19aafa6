use super::FiniteSemigroup;
use crate::exec::Exec;
use crate::poset::Poset;
use crate::{Error, Result};

/// Green's quasi-orders and relations of a finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreensData {
    n: usize,
    leq_l: Vec<bool>,
    leq_r: Vec<bool>,
    nat_leq: Vec<bool>,
    l_class: Vec<usize>,
    r_class: Vec<usize>,
    h_class: Vec<usize>,
    d_class: Vec<usize>,
    l_classes: Vec<Vec<usize>>,
    r_classes: Vec<Vec<usize>>,
    h_classes: Vec<Vec<usize>>,
    d_classes: Vec<Vec<usize>>,
    idempotents: Vec<usize>,
}

/// Numbers the classes of an equivalence by first occurrence.
fn partition(n: usize, same: impl Fn(usize, usize) -> bool) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (a..n).filter(|&b| class[b] == usize::MAX && same(a, b)).collect();
        for &b in &members {
            class[b] = id;
        }
        classes.push(members);
    }
    (class, classes)
}

impl GreensData {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        Self::compute_with(s, Exec::default())
    }

    pub fn compute_with(s: &FiniteSemigroup, exec: Exec) -> Self {
        let n = s.size();
        // Principal one-sided ideals S^1 b and b S^1, one sweep per b.
        let left_ideals: Vec<Vec<bool>> = exec.map(n, |b| {
            let mut row = vec![false; n];
            row[b] = true;
            for x in 0..n {
                row[s.mul(x, b)] = true;
            }
            row
        });
        let right_ideals: Vec<Vec<bool>> = exec.map(n, |b| {
            let mut row = vec![false; n];
            row[b] = true;
            for x in 0..n {
                row[s.mul(b, x)] = true;
            }
            row
        });
        let mut leq_l = vec![false; n * n];
        let mut leq_r = vec![false; n * n];
        for b in 0..n {
            for a in 0..n {
                leq_l[a * n + b] = left_ideals[b][a];
                leq_r[a * n + b] = right_ideals[b][a];
            }
        }
        let idempotents = s.idempotents();
        let nat_rows: Vec<Vec<bool>> = exec.map(n, |b| {
            let mut left = vec![false; n];
            let mut right = vec![false; n];
            for &e in &idempotents {
                left[s.mul(e, b)] = true;
                right[s.mul(b, e)] = true;
            }
            (0..n).map(|a| left[a] && right[a]).collect()
        });
        let mut nat_leq = vec![false; n * n];
        for b in 0..n {
            for a in 0..n {
                nat_leq[a * n + b] = nat_rows[b][a];
            }
        }
        let (l_class, l_classes) = partition(n, |a, b| leq_l[a * n + b] && leq_l[b * n + a]);
        let (r_class, r_classes) = partition(n, |a, b| leq_r[a * n + b] && leq_r[b * n + a]);
        let (h_class, h_classes) = partition(n, |a, b| l_class[a] == l_class[b] && r_class[a] == r_class[b]);
        // In a finite semigroup D = L o R: a D b iff L_a meets R_b.
        let (d_class, d_classes) = partition(n, |a, b| {
            l_classes[l_class[a]].iter().any(|&c| r_class[c] == r_class[b])
        });
        GreensData {
            n,
            leq_l,
            leq_r,
            nat_leq,
            l_class,
            r_class,
            h_class,
            d_class,
            l_classes,
            r_classes,
            h_classes,
            d_classes,
            idempotents,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a <=_l b`, i.e. `a` lies in `S^1 b`.
    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        self.leq_l[a * self.n + b]
    }

    /// `a <=_r b`, i.e. `a` lies in `b S^1`.
    pub fn leq_r(&self, a: usize, b: usize) -> bool {
        self.leq_r[a * self.n + b]
    }

    /// Natural partial order: `a = eb = bf` for some idempotents `e, f`.
    ///
    /// On idempotents this is `<=_l` intersected with `<=_r`.
    pub fn nat_leq(&self, a: usize, b: usize) -> bool {
        self.nat_leq[a * self.n + b]
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l_class[a] == self.l_class[b]
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r_class[a] == self.r_class[b]
    }

    pub fn l_class(&self, a: usize) -> usize {
        self.l_class[a]
    }

    pub fn r_class(&self, a: usize) -> usize {
        self.r_class[a]
    }

    pub fn h_class(&self, a: usize) -> usize {
        self.h_class[a]
    }

    pub fn d_class(&self, a: usize) -> usize {
        self.d_class[a]
    }

    pub fn l_classes(&self) -> &[Vec<usize>] {
        &self.l_classes
    }

    pub fn r_classes(&self) -> &[Vec<usize>] {
        &self.r_classes
    }

    pub fn h_classes(&self) -> &[Vec<usize>] {
        &self.h_classes
    }

    pub fn d_classes(&self) -> &[Vec<usize>] {
        &self.d_classes
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotents.binary_search(&a).is_ok()
    }

    /// Idempotents in the L-class of `a`.
    pub fn idempotents_in_l(&self, a: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&e| self.l_related(e, a)).collect()
    }

    /// Idempotents in the R-class of `a`.
    pub fn idempotents_in_r(&self, a: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&e| self.r_related(e, a)).collect()
    }

    /// Poset of R-classes: `R_a <= R_b` iff `aS^1` is contained in `bS^1`.
    pub fn r_class_poset(&self, s: &FiniteSemigroup) -> Result<Poset> {
        if let Some(a) = s.non_regular_element() {
            return Err(Error::NotRegular(a));
        }
        let reps: Vec<usize> = self.r_classes.iter().map(|c| c[0]).collect();
        Ok(Poset::from_fn(reps.len(), |i, j| self.leq_r(reps[i], reps[j])))
    }

    /// Poset of L-classes: `L_a <= L_b` iff `S^1a` is contained in `S^1b`.
    pub fn l_class_poset(&self, s: &FiniteSemigroup) -> Result<Poset> {
        if let Some(a) = s.non_regular_element() {
            return Err(Error::NotRegular(a));
        }
        let reps: Vec<usize> = self.l_classes.iter().map(|c| c[0]).collect();
        Ok(Poset::from_fn(reps.len(), |i, j| self.leq_l(reps[i], reps[j])))
    }
}
