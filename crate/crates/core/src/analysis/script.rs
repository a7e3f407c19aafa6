//! Input files: semigroups, categories, or analysis scripts naming them.
//!
//! An analysis script starts with the word `analysis` and continues with
//! `key: value` lines:
//!
//! ```text
//! analysis
//! source: catalog:P2
//! downset: 0 1
//! target: catalog:Y2
//! hom: 0->1
//! ```
//!
//! `downset` selects R-classes of `Ĉ` for a category source. `hom` lines
//! give an element map from the source semigroup to the target semigroup.

use crate::category::{parse_category, FiniteCategory};
use crate::semigroup::{parse_semigroup, FiniteSemigroup};
use crate::text::content_lines;
use crate::{Error, Result};

fn parse(line: usize, message: impl Into<String>) -> Error {
    Error::parse(line, message)
}

#[derive(Clone, Debug)]
pub enum Input {
    Semigroup(FiniteSemigroup),
    Category(FiniteCategory),
    Script(AnalysisScript),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisScript {
    pub source: String,
    pub target: Option<String>,
    pub downset: Option<Vec<usize>>,
    pub hom: Vec<(usize, usize)>,
}

fn first_word(text: &str) -> Option<&str> {
    content_lines(text).next().and_then(|(_, l)| l.split_whitespace().next())
}

/// Detects the format from the first token: `objects` for a category,
/// `analysis` for a script, anything else is a semigroup.
pub fn parse_input(text: &str, size_cap: usize) -> Result<Input> {
    match first_word(text) {
        Some("objects") => Ok(Input::Category(parse_category(text)?)),
        Some("analysis") => Ok(Input::Script(parse_script(text)?)),
        _ => Ok(Input::Semigroup(parse_semigroup(text, size_cap)?)),
    }
}

pub fn parse_script(text: &str) -> Result<AnalysisScript> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "analysis")) => {}
        Some((n, _)) => return Err(parse(n, "expected `analysis`")),
        None => return Err(parse(1, "empty script")),
    }
    let mut script = AnalysisScript::default();
    let mut have_source = false;
    for (n, line) in lines {
        let (key, value) = line.split_once(':').ok_or_else(|| parse(n, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "source" if have_source => return Err(parse(n, "duplicate source")),
            "source" => {
                script.source = value.to_string();
                have_source = true;
            }
            "target" => script.target = Some(value.to_string()),
            "downset" => {
                let ids = value
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| parse(n, format!("bad R-class index `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                script.downset = Some(ids);
            }
            "hom" => {
                let (a, b) = value.split_once("->").ok_or_else(|| parse(n, "expected `hom: i->j`"))?;
                let a = a.trim().parse().map_err(|_| parse(n, format!("bad element `{}`", a.trim())))?;
                let b = b.trim().parse().map_err(|_| parse(n, format!("bad element `{}`", b.trim())))?;
                if script.hom.iter().any(|&(x, _)| x == a) {
                    return Err(parse(n, format!("element {a} mapped twice")));
                }
                script.hom.push((a, b));
            }
            other => return Err(parse(n, format!("unknown key `{other}`"))),
        }
    }
    if !have_source {
        return Err(parse(1, "script has no source"));
    }
    if !script.hom.is_empty() && script.target.is_none() {
        return Err(parse(1, "hom lines need a target"));
    }
    script.hom.sort_unstable();
    Ok(script)
}

impl AnalysisScript {
    /// The element map of the `hom` lines, which must cover `0..n`.
    pub fn hom_map(&self, n: usize) -> Result<Vec<usize>> {
        let map: Vec<usize> = self.hom.iter().map(|&(_, b)| b).collect();
        if self.hom.iter().enumerate().any(|(i, &(a, _))| a != i) || map.len() != n {
            return Err(Error::InvalidInput(format!("hom must map each of the {n} source elements once")));
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_script() {
        let s = parse_script("analysis\nsource: catalog:RRB4\ntarget: catalog:Y2\nhom: 1->1\nhom: 0->0\nhom: 2->0\nhom: 3->1\n")
            .unwrap();
        assert_eq!(s.source, "catalog:RRB4");
        assert_eq!(s.hom_map(4).unwrap(), vec![0, 1, 0, 1]);
        assert!(s.hom_map(5).is_err());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_script("analysis\nsource: x\n\ndownset: 0 a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        assert!(matches!(parse_script("analysis\nhom: 0->1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn detects_formats() {
        assert!(matches!(parse_input("2\n0 1\n1 0\n", 10).unwrap(), Input::Semigroup(_)));
        assert!(matches!(parse_input("# c\nanalysis\nsource: a\n", 10).unwrap(), Input::Script(_)));
    }
}
