use std::fmt;

/// A full transformation of `{0, .., n-1}`, composed left to right:
/// `x(ab) = (xa)b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transformation(pub Vec<u8>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn then(&self, other: &Self) -> Self {
        Transformation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    /// Image as a bitmask.
    pub fn image(&self) -> u32 {
        self.0.iter().fold(0, |m, &x| m | (1 << x))
    }

    pub fn rank(&self) -> usize {
        self.image().count_ones() as usize
    }

    /// Kernel classes as sorted blocks of points.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot: Vec<Option<usize>> = vec![None; self.degree()];
        for x in 0..self.degree() {
            let y = self.apply(x);
            match slot[y] {
                Some(b) => blocks[b].push(x),
                None => {
                    slot[y] = Some(blocks.len());
                    blocks.push(vec![x]);
                }
            }
        }
        blocks
    }

    /// All `n^n` transformations in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u8>| {
                    (0..n as u8).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Transformation).collect()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A partial injective map of `{0, .., n-1}`, composed left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection(pub Vec<Option<u8>>);

impl PartialBijection {
    pub fn identity_on(n: usize, mask: u32) -> Self {
        PartialBijection((0..n as u8).map(|x| (mask >> x & 1 == 1).then_some(x)).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn then(&self, other: &Self) -> Self {
        PartialBijection(self.0.iter().map(|x| x.and_then(|x| other.0[x as usize])).collect())
    }

    pub fn domain(&self) -> u32 {
        self.0.iter().enumerate().fold(0, |m, (i, x)| if x.is_some() { m | 1 << i } else { m })
    }

    pub fn image(&self) -> u32 {
        self.0.iter().flatten().fold(0, |m, &x| m | 1 << x)
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![None; self.degree()];
        for (i, x) in self.0.iter().enumerate() {
            if let Some(x) = x {
                v[*x as usize] = Some(i as u8);
            }
        }
        PartialBijection(v)
    }

    pub fn is_injective(&self) -> bool {
        self.image().count_ones() == self.domain().count_ones()
    }

    /// All partial bijections of degree `n`, sorted.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<Option<u8>>| {
                    std::iter::once(None).chain((0..n as u8).map(Some)).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        let mut all: Vec<Self> = out.into_iter().map(PartialBijection).filter(|p| p.is_injective()).collect();
        all.sort();
        all
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|x| x.map_or("-".to_string(), |x| (x + 1).to_string()))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(Transformation::all(3).len(), 27);
        assert_eq!(PartialBijection::all(2).len(), 7);
        assert_eq!(PartialBijection::all(3).len(), 34);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Transformation(vec![1, 1, 2]);
        let b = Transformation(vec![0, 0, 1]);
        // 0 -a-> 1 -b-> 0, 2 -a-> 2 -b-> 1
        assert_eq!(a.then(&b), Transformation(vec![0, 0, 1]));
        assert_eq!(a.to_string(), "[2 2 3]");
        assert_eq!(a.kernel(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn partial_inverse() {
        let p = PartialBijection(vec![Some(1), None, Some(0)]);
        assert_eq!(p.then(&p.inverse()), PartialBijection::identity_on(3, 0b101));
        assert_eq!(p.to_string(), "[2 - 1]");
    }
}
