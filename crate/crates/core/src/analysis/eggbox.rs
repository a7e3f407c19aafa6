//! Egg-box diagrams: each D-class as a grid with R-classes as rows and
//! L-classes as columns.

use crate::semigroup::{FiniteSemigroup, GreensData};
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub elements: Vec<usize>,
    pub idempotent: bool,
}

/// One D-class; `rows[i][j]` is the H-class at R-class `i`, L-class `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DClassBox {
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eggbox {
    pub labels: Vec<String>,
    pub classes: Vec<DClassBox>,
    /// Covering pairs `(lower, upper)` of the order on D-classes.
    pub covers: Vec<(usize, usize)>,
}

fn first_occurrence(ids: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut seen = Vec::new();
    for i in ids {
        if !seen.contains(&i) {
            seen.push(i);
        }
    }
    seen
}

pub fn eggbox(s: &FiniteSemigroup, g: &GreensData) -> Eggbox {
    let classes: Vec<DClassBox> = g
        .d_classes()
        .iter()
        .map(|d| {
            let rows = first_occurrence(d.iter().map(|&a| g.r_class(a)));
            let cols = first_occurrence(d.iter().map(|&a| g.l_class(a)));
            let rows = rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&l| {
                            let elements: Vec<usize> =
                                d.iter().copied().filter(|&a| g.r_class(a) == r && g.l_class(a) == l).collect();
                            let idempotent = elements.iter().any(|&a| s.is_idempotent(a));
                            Cell { elements, idempotent }
                        })
                        .collect()
                })
                .collect();
            DClassBox { rows }
        })
        .collect();
    // D_a <= D_b iff a <=_l c <=_r b for some c.
    let reps: Vec<usize> = g.d_classes().iter().map(|d| d[0]).collect();
    let k = reps.len();
    let below = |i: usize, j: usize| (0..s.size()).any(|c| g.leq_l(reps[i], c) && g.leq_r(c, reps[j]));
    let leq: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| below(i, j)).collect()).collect();
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && leq[i][j] && !(0..k).any(|m| m != i && m != j && leq[i][m] && leq[m][j]) {
                covers.push((i, j));
            }
        }
    }
    Eggbox { labels: s.labels().to_vec(), classes, covers }
}

impl Eggbox {
    fn cell_text(&self, cell: &Cell) -> String {
        let names: Vec<&str> = cell.elements.iter().map(|&a| self.labels[a].as_str()).collect();
        format!("{}{}", names.join(" "), if cell.idempotent { "*" } else { "" })
    }

    /// Fixed-width text grids, one per D-class.
    pub fn to_text(&self) -> String {
        let width = self
            .classes
            .iter()
            .flat_map(|d| d.rows.iter().flatten())
            .map(|c| self.cell_text(c).chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (i, d) in self.classes.iter().enumerate() {
            let cols = d.rows[0].len();
            let _ = writeln!(out, "D{i} ({}x{cols})", d.rows.len());
            let rule = format!("+{}", format!("{}+", "-".repeat(width + 2)).repeat(cols));
            out.push_str(&rule);
            out.push('\n');
            for row in &d.rows {
                out.push('|');
                for cell in row {
                    let _ = write!(out, " {:<width$} |", self.cell_text(cell));
                }
                out.push('\n');
                out.push_str(&rule);
                out.push('\n');
            }
        }
        out
    }

    /// A DOT graph with one cluster per D-class holding an HTML table, and
    /// edges for the covering relation between D-classes.
    pub fn to_dot(&self) -> String {
        let escape = |s: &str| s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let mut out = String::from("digraph eggbox {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, d) in self.classes.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_d{i} {{\n    label=\"D{i}\";");
            let _ = write!(out, "    d{i} [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">");
            for row in &d.rows {
                out.push_str("<TR>");
                for cell in row {
                    let _ = write!(out, "<TD>{}</TD>", escape(&self.cell_text(cell)));
                }
                out.push_str("</TR>");
            }
            out.push_str("</TABLE>>];\n  }\n");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  d{a} -> d{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn shapes(e: &Eggbox) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = e.classes.iter().map(|d| (d.rows.len(), d.rows[0].len())).collect();
        v.sort();
        v
    }

    #[test]
    fn t2_has_a_row_of_constants_and_a_group() {
        let t2 = catalog::transformation_monoid(2).unwrap();
        let e = eggbox(&t2, &GreensData::compute(&t2));
        assert_eq!(shapes(&e), vec![(1, 1), (1, 2)]);
        let group = e.classes.iter().find(|d| d.rows[0].len() == 1).unwrap();
        assert_eq!(group.rows[0][0].elements.len(), 2);
        assert_eq!(e.covers.len(), 1);
    }

    #[test]
    fn group_is_one_starred_cell() {
        let z2 = catalog::cyclic_group2();
        let e = eggbox(&z2, &GreensData::compute(&z2));
        assert_eq!(shapes(&e), vec![(1, 1)]);
        assert!(e.classes[0].rows[0][0].idempotent);
        assert!(e.to_text().contains("1 g*"));
    }

    #[test]
    fn l2_with_zero_has_one_column_two_rows() {
        let s = catalog::left_zero2_with_zero();
        let e = eggbox(&s, &GreensData::compute(&s));
        assert_eq!(shapes(&e), vec![(1, 1), (2, 1)]);
        let top = e.classes.iter().find(|d| d.rows.len() == 2).unwrap();
        assert!(top.rows.iter().all(|r| r[0].idempotent));
        let dot = e.to_dot();
        assert!(dot.starts_with("digraph eggbox {") && dot.contains("cluster_d1"));
    }
}
