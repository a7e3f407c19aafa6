//! Text formats for semigroups.
//!
//! A Cayley table is a line holding the order `n` followed by `n` rows of
//! `n` space-separated 0-based indices. Generator files hold lines such as
//! `t 3: 1 1 2` (a transformation, images 1-based) or `p 3: 2 - 1` (a partial
//! bijection, `-` for undefined). `#` starts a comment in both.

use super::{FiniteSemigroup, PartialBijection, Transformation};
use crate::exec::Exec;
use crate::text::content_lines;
use crate::{Error, Result};

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a non-negative integer, got `{tok}`")))
}

pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = content_lines(text);
    let (l0, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n = parse_usize(l0, first)?;
    if n == 0 {
        return Err(Error::parse(l0, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = l0;
    for (ln, l) in lines {
        if rows.len() == n {
            return Err(Error::parse(ln, "more rows than the declared order"));
        }
        let row = l.split_whitespace().map(|t| parse_usize(ln, t)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
        last = ln;
    }
    if rows.len() != n {
        return Err(Error::parse(last, format!("expected {n} rows, found {}", rows.len())));
    }
    FiniteSemigroup::from_cayley_table_with(&rows, Exec::default())
}

enum Gen {
    T(Transformation),
    P(PartialBijection),
}

fn parse_generator(ln: usize, l: &str) -> Result<Gen> {
    let (head, body) = l.split_once(':').ok_or_else(|| Error::parse(ln, "missing `:`"))?;
    let mut head = head.split_whitespace();
    let kind = head.next().unwrap_or("");
    let deg = parse_usize(ln, head.next().ok_or_else(|| Error::parse(ln, "missing degree"))?)?;
    if deg == 0 || deg > MAX_GENERATOR_DEGREE {
        return Err(Error::parse(ln, format!("degree {deg} outside 1..={MAX_GENERATOR_DEGREE}")));
    }
    let toks: Vec<&str> = body.split_whitespace().collect();
    if toks.len() != deg {
        return Err(Error::parse(ln, format!("{} images for degree {deg}", toks.len())));
    }
    let point = |t: &str| -> Result<u8> {
        let v = parse_usize(ln, t)?;
        if v == 0 || v > deg {
            return Err(Error::parse(ln, format!("image {v} outside 1..={deg}")));
        }
        Ok((v - 1) as u8)
    };
    match kind {
        "t" => Ok(Gen::T(Transformation(toks.iter().map(|t| point(t)).collect::<Result<_>>()?))),
        "p" => {
            let p = PartialBijection(
                toks.iter()
                    .map(|&t| if t == "-" { Ok(None) } else { point(t).map(Some) })
                    .collect::<Result<_>>()?,
            );
            if !p.is_injective() {
                return Err(Error::parse(ln, "partial map is not injective"));
            }
            Ok(Gen::P(p))
        }
        other => Err(Error::parse(ln, format!("unknown generator kind `{other}`"))),
    }
}

/// Parses generator lines and closes them under composition.
pub fn parse_generators(text: &str, cap: usize) -> Result<FiniteSemigroup> {
    let mut ts = Vec::new();
    let mut ps = Vec::new();
    let mut degree = None;
    for (ln, l) in content_lines(text) {
        let g = parse_generator(ln, l)?;
        let d = match &g {
            Gen::T(t) => t.degree(),
            Gen::P(p) => p.degree(),
        };
        if *degree.get_or_insert(d) != d {
            return Err(Error::parse(ln, "generators have different degrees"));
        }
        match g {
            Gen::T(t) => ts.push(t),
            Gen::P(p) => ps.push(p),
        }
        if !ts.is_empty() && !ps.is_empty() {
            return Err(Error::parse(ln, "cannot mix `t` and `p` generators"));
        }
    }
    if !ts.is_empty() {
        Ok(FiniteSemigroup::from_generators(&ts, |a, b| a.then(b), |a| a.to_string(), cap)?.0)
    } else if !ps.is_empty() {
        Ok(FiniteSemigroup::from_generators(&ps, |a, b| a.then(b), |a| a.to_string(), cap)?.0)
    } else {
        Err(Error::parse(1, "no generators"))
    }
}

/// Parses either format, deciding by the first token.
pub fn parse_semigroup(text: &str, cap: usize) -> Result<FiniteSemigroup> {
    let first = content_lines(text).next().map(|(_, l)| l);
    let s = match first.and_then(|l| l.split_whitespace().next()) {
        Some("t") | Some("p") => parse_generators(text, cap)?,
        _ => {
            if let Some((ln, l)) = content_lines(text).next() {
                let n = parse_usize(ln, l)?;
                if n > cap {
                    return Err(Error::CapExceeded { what: "semigroup order".into(), value: n, cap });
                }
            }
            parse_cayley(text)?
        }
    };
    Ok(s)
}

pub fn to_cayley_text(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    let labelled = s.labels().iter().enumerate().any(|(i, l)| *l != i.to_string());
    if labelled {
        out.push_str("# elements:");
        for (i, l) in s.labels().iter().enumerate() {
            out.push_str(&format!(" {i}={l}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("{}\n", s.size()));
    for row in s.rows() {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Largest degree accepted in generator files.
pub const MAX_GENERATOR_DEGREE: usize = 16;

/// Generator lines for `s` through its right regular representation on
/// `S¹`: element `a` acts as `x ↦ xa`, with the last point standing for the
/// adjoined identity. Each generator is the element that enlarges the
/// generated subsemigroup most, ties going to the smaller index.
pub fn to_generators_text(s: &FiniteSemigroup) -> Result<String> {
    let n = s.size();
    if n + 1 > MAX_GENERATOR_DEGREE {
        return Err(Error::CapExceeded { what: "generator degree".into(), value: n + 1, cap: MAX_GENERATOR_DEGREE });
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = 0;
    while covered < n {
        let (size, a) = (0..n)
            .filter(|a| !gens.contains(a))
            .map(|a| {
                let mut trial = gens.clone();
                trial.push(a);
                (s.closure(&trial).len(), std::cmp::Reverse(a))
            })
            .max()
            .map(|(size, std::cmp::Reverse(a))| (size, a))
            .expect("an unused element remains");
        gens.push(a);
        covered = size;
    }
    let mut out = format!("# right regular representation of an order {n} semigroup\n");
    for &a in &gens {
        let images: Vec<String> = (0..=n).map(|x| if x == n { a + 1 } else { s.mul(x, a) + 1 }.to_string()).collect();
        out.push_str(&format!("t {}: {}\n", n + 1, images.join(" ")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_roundtrip() {
        let s = parse_cayley("# left zero\n2\n0 0\n1 1 # row two\n").unwrap();
        assert_eq!(s.rows(), vec![vec![0, 0], vec![1, 1]]);
        let again = parse_cayley(&to_cayley_text(&s)).unwrap();
        assert_eq!(again.rows(), s.rows());
    }

    #[test]
    fn cayley_errors_carry_lines() {
        assert!(matches!(parse_cayley("2\n0 0\n1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_cayley("2\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cayley("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_cayley("2\n0 5\n0 0\n"), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn generators_of_t3() {
        let text = "t 3: 2 3 1\nt 3: 2 1 3\nt 3: 1 1 3\n";
        let s = parse_generators(text, 512).unwrap();
        assert_eq!(s.size(), 27);
        assert_eq!(s.label(0), "[1 1 1]");
    }

    #[test]
    fn generators_of_i2() {
        let s = parse_semigroup("p 2: 2 1\np 2: 1 -\n", 512).unwrap();
        assert_eq!(s.size(), 7);
    }

    #[test]
    fn regular_representation_is_faithful() {
        let i2 = parse_semigroup("p 2: 2 1\np 2: 1 -\n", 512).unwrap();
        let back = parse_generators(&to_generators_text(&i2).unwrap(), 512).unwrap();
        assert!(crate::semigroup::find_isomorphism(&i2, &back).is_some());
        let big = FiniteSemigroup::from_cayley_table(&vec![vec![0; 16]; 16]).unwrap();
        assert!(matches!(to_generators_text(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(parse_generators("t 3: 1 2\n", 10), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_generators("t 2: 1 2\np 2: 1 -\n", 10), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_generators("p 2: 1 1\n", 10), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_generators("t 3: 2 3 1\nt 3: 2 1 3\nt 3: 1 1 3\n", 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
