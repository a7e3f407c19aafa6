//! Text format for finite categories.
//!
//! ```text
//! objects 2
//! name 0 a            # optional object labels
//! order               # preorder matrix, row c column d is 1 when c ⪯ d
//! 1 1
//! 0 1
//! homs                # hom-set sizes, row c column d is |C(c,d)|
//! 1 1
//! 0 1
//! id 0 (0,0)          # identity of each object
//! id 1 (3,0)
//! inc 0 1 (1,0)       # inclusion j(0,1)
//! c (0,0)(1,0)=(1,0)  # one line per composable pair
//! ```
//!
//! A morphism `(p,i)` is the `i`-th morphism of hom-set `p = c * n + d`.

use super::{CategoryBuilder, FiniteCategory, Mor};
use crate::text::content_lines;
use crate::{Error, Result};
use std::collections::HashMap;

fn num(line: usize, t: &str) -> Result<usize> {
    t.trim().parse().map_err(|_| Error::parse(line, format!("expected an integer, got `{t}`")))
}

fn morph_ref(line: usize, t: &str) -> Result<(usize, usize)> {
    let inner = t
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line, format!("expected `(p,i)`, got `{t}`")))?;
    let (p, i) = inner.split_once(',').ok_or_else(|| Error::parse(line, "expected `(p,i)`"))?;
    Ok((num(line, p)?, num(line, i)?))
}

fn matrix<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, l) = lines.next().ok_or_else(|| Error::parse(0, format!("{what} matrix is short")))?;
        let row = l.split_whitespace().map(|t| num(ln, t)).collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(ln, format!("{what} row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn parse_category(text: &str) -> Result<FiniteCategory> {
    let mut lines = content_lines(text).peekable();
    let (l0, first) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let n = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["objects", k] => num(l0, k)?,
        _ => return Err(Error::parse(l0, "expected `objects <n>`")),
    };
    if n == 0 {
        return Err(Error::parse(l0, "a category needs at least one object"));
    }
    let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut order = None;
    let mut homs = None;
    let mut ids = vec![None; n];
    let mut incs = Vec::new();
    let mut comps = Vec::new();
    while let Some((ln, l)) = lines.next() {
        let mut words = l.split_whitespace();
        match words.next() {
            Some("name") => {
                let k = num(ln, words.next().unwrap_or(""))?;
                if k >= n {
                    return Err(Error::parse(ln, format!("object {k} out of range")));
                }
                names[k] = words.collect::<Vec<_>>().join(" ");
            }
            Some("order") => order = Some(matrix(&mut lines, n, "order")?),
            Some("homs") => homs = Some(matrix(&mut lines, n, "homs")?),
            Some("id") => {
                let k = num(ln, words.next().unwrap_or(""))?;
                if k >= n {
                    return Err(Error::parse(ln, format!("object {k} out of range")));
                }
                ids[k] = Some((ln, morph_ref(ln, &words.collect::<String>())?));
            }
            Some("inc") => {
                let c = num(ln, words.next().unwrap_or(""))?;
                let d = num(ln, words.next().unwrap_or(""))?;
                incs.push((ln, c, d, morph_ref(ln, &words.collect::<String>())?));
            }
            Some("c") => {
                let rest: String = words.collect();
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| Error::parse(ln, "missing `=`"))?;
                let (f, g) = lhs
                    .split_once(")(")
                    .ok_or_else(|| Error::parse(ln, "expected `(p,i)(q,j)`"))?;
                comps.push((
                    ln,
                    morph_ref(ln, &format!("{f})"))?,
                    morph_ref(ln, &format!("({g}"))?,
                    morph_ref(ln, rhs)?,
                ));
            }
            _ => return Err(Error::parse(ln, format!("unrecognized line `{l}`"))),
        }
    }
    let order = order.ok_or_else(|| Error::parse(0, "missing `order` section"))?;
    let homs = homs.ok_or_else(|| Error::parse(0, "missing `homs` section"))?;

    let mut b = CategoryBuilder::new();
    for name in &names {
        b.add_object(name.clone());
    }
    let mut index: HashMap<(usize, usize), Mor> = HashMap::new();
    for (c, row) in homs.iter().enumerate() {
        for (d, &k) in row.iter().enumerate() {
            for i in 0..k {
                let m = b.add_morphism(c, d, format!("({},{i})", c * n + d));
                index.insert((c * n + d, i), m);
            }
        }
    }
    let resolve = |ln: usize, r: (usize, usize)| -> Result<Mor> {
        index.get(&r).copied().ok_or_else(|| Error::parse(ln, format!("no morphism ({},{})", r.0, r.1)))
    };
    for (k, id) in ids.iter().enumerate() {
        let (ln, r) = id.ok_or_else(|| Error::parse(0, format!("object {k} has no `id` line")))?;
        b.set_identity(k, resolve(ln, r)?);
    }
    let mut designated = vec![vec![false; n]; n];
    for c in 0..n {
        designated[c][c] = true;
    }
    for &(ln, c, d, r) in &incs {
        if c >= n || d >= n {
            return Err(Error::parse(ln, "inclusion end out of range"));
        }
        b.add_inclusion(c, d, resolve(ln, r)?);
        designated[c][d] = true;
    }
    for c in 0..n {
        for d in 0..n {
            if (order[c][d] != 0) != designated[c][d] {
                return Err(Error::parse(0, format!("order entry ({c},{d}) disagrees with the inclusions")));
            }
        }
    }
    let m = b.morphism_count();
    let mut table: HashMap<(Mor, Mor), Mor> = HashMap::new();
    for &(ln, f, g, h) in &comps {
        let (f, g, h) = (resolve(ln, f)?, resolve(ln, g)?, resolve(ln, h)?);
        if table.insert((f, g), h).is_some() {
            return Err(Error::parse(ln, "composite given twice"));
        }
    }
    let missing = std::cell::Cell::new(None);
    let cat = b.build(|f, g| {
        table.get(&(f, g)).copied().unwrap_or_else(|| {
            missing.set(Some((f, g)));
            m
        })
    });
    if let Some((f, g)) = missing.get() {
        return Err(Error::parse(0, format!("no composition line for morphisms {f} and {g}")));
    }
    let cat = cat?;
    if table.len() != (0..m).map(|f| cat.outgoing(cat.cod(f)).len()).sum::<usize>() {
        return Err(Error::parse(0, "composition line for a non-composable pair"));
    }
    Ok(cat)
}

pub fn to_category_text(c: &FiniteCategory) -> String {
    let n = c.object_count();
    let mut out = format!("objects {n}\n");
    for k in 0..n {
        out.push_str(&format!("name {k} {}\n", c.object_label(k)));
    }
    let r = |f: Mor| format!("({},{})", c.dom(f) * n + c.cod(f), c.hom_position(f));
    out.push_str("order\n");
    for a in 0..n {
        let row: Vec<&str> = (0..n).map(|b| if c.leq(a, b) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("homs\n");
    for row in c.hom_sizes() {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for k in 0..n {
        out.push_str(&format!("id {k} {}\n", r(c.identity(k))));
    }
    for a in 0..n {
        for b in 0..n {
            if a != b {
                if let Some(j) = c.inclusion(a, b) {
                    out.push_str(&format!("inc {a} {b} {}\n", r(j)));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for &f in c.hom(a, b) {
                for &g in c.outgoing(b) {
                    out.push_str(&format!("c {}{}={}\n", r(f), r(g), r(c.compose(f, g))));
                }
            }
        }
    }
    out
}
