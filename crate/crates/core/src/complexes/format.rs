//! Text formats for complexes, voltages and permutation lists.
//!
//! ```text
//! point p
//! point q
//! seg s p q
//! seg t q q
//! ```
//!
//! Voltage files hold `volt <seg> <cycles>` lines and an optional
//! `sheets <k>` line; `#` starts a comment everywhere.

use std::collections::HashMap;

use super::{Graph1, GraphError, Voltage};
use crate::perm::Perm;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Syntax { line, msg: msg.into() }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphNames {
    pub points: Vec<String>,
    pub segments: Vec<String>,
}

impl GraphNames {
    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn segment_index(&self, name: &str) -> Option<usize> {
        self.segments.iter().position(|s| s == name)
    }

    /// Numeric names, as used for generated complexes.
    pub fn numbered(g: &Graph1) -> Self {
        GraphNames {
            points: (0..g.n_points()).map(|i| format!("p{}", i)).collect(),
            segments: (0..g.n_segments()).map(|i| format!("s{}", i)).collect(),
        }
    }

    pub fn parse_graph(text: &str) -> Result<(Graph1, GraphNames), GraphError> {
        let mut names = GraphNames::default();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut segs = Vec::new();
        for (ln, l) in lines(text) {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                ["point", name] => {
                    if index.insert(name.to_string(), names.points.len()).is_some() {
                        return Err(syntax(ln, format!("duplicate point {}", name)));
                    }
                    names.points.push(name.to_string());
                }
                ["seg", name, from, to] => {
                    if names.segments.iter().any(|s| s == name) {
                        return Err(syntax(ln, format!("duplicate segment {}", name)));
                    }
                    let look = |p: &str| index.get(p).copied().ok_or_else(|| syntax(ln, format!("unknown point {}", p)));
                    segs.push((look(from)?, look(to)?));
                    names.segments.push(name.to_string());
                }
                _ => return Err(syntax(ln, "expected `point <name>` or `seg <name> <from> <to>`")),
            }
        }
        Ok((Graph1::new(names.points.len(), segs)?, names))
    }

    pub fn graph_to_text(&self, g: &Graph1) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!("point {}\n", p));
        }
        for (s, &(a, b)) in g.segments().iter().enumerate() {
            out.push_str(&format!("seg {} {} {}\n", self.segments[s], self.points[a], self.points[b]));
        }
        out
    }

    /// Unlisted segments get the identity. Without a `sheets` line the sheet
    /// count is one more than the largest sheet mentioned.
    pub fn parse_voltage(&self, g: &Graph1, text: &str) -> Result<Voltage, GraphError> {
        let mut sheets = None;
        let mut raw: Vec<(usize, usize, &str)> = Vec::new();
        for (ln, l) in lines(text) {
            if let Some(k) = l.strip_prefix("sheets") {
                let k = k.trim().parse().map_err(|_| syntax(ln, "bad sheet count"))?;
                sheets = Some(k);
            } else if let Some(rest) = l.strip_prefix("volt ") {
                let rest = rest.trim();
                let (seg, cycles) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let s = self
                    .segment_index(seg)
                    .ok_or_else(|| syntax(ln, format!("unknown segment {}", seg)))?;
                raw.push((ln, s, cycles.trim()));
            } else {
                return Err(syntax(ln, "expected `volt <seg> <cycles>` or `sheets <k>`"));
            }
        }
        let k = match sheets {
            Some(k) => k,
            None => {
                let mut max = 0;
                for &(ln, _, c) in &raw {
                    for tok in c.split(|ch: char| !ch.is_ascii_digit()).filter(|t| !t.is_empty()) {
                        let x: usize = tok.parse().map_err(|_| syntax(ln, "bad sheet"))?;
                        max = max.max(x + 1);
                    }
                }
                max.max(1)
            }
        };
        if k == 0 || k > super::cover::MAX_SHEETS {
            return Err(GraphError::SheetGuard(k));
        }
        let mut assign = Vec::new();
        for (_, s, c) in raw {
            assign.push((s, Perm::parse_cycles(k, c)?));
        }
        Voltage::from_assignments(g, k, &assign)
    }
}

/// `degree <n>` followed by `<name> <cycles>` lines.
pub fn parse_permutation_list(text: &str) -> Result<(Vec<String>, Vec<Perm>), GraphError> {
    let mut degree = None;
    let mut names = Vec::new();
    let mut perms = Vec::new();
    for (ln, l) in lines(text) {
        let (head, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        if head == "degree" {
            degree = Some(rest.trim().parse().map_err(|_| syntax(ln, "bad degree"))?);
            continue;
        }
        let n = degree.ok_or_else(|| syntax(ln, "`degree <n>` must come first"))?;
        names.push(head.to_string());
        perms.push(Perm::parse_cycles(n, rest)?);
    }
    if degree.is_none() {
        return Err(syntax(0, "missing `degree <n>` line"));
    }
    Ok((names, perms))
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "point p\npoint q # comment\nseg a p q\nseg b p q\nseg c q p\n";

    #[test]
    fn graph_round_trip() {
        let (g, names) = GraphNames::parse_graph(THETA).unwrap();
        assert_eq!((g.n_points(), g.n_segments()), (2, 3));
        let again = GraphNames::parse_graph(&names.graph_to_text(&g)).unwrap();
        assert_eq!(again, (g, names));
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(
            GraphNames::parse_graph("point p\nseg a p z"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(GraphNames::parse_graph("point p\npoint p").is_err());
        assert!(GraphNames::parse_graph("vertex p").is_err());
    }

    #[test]
    fn voltages() {
        let (g, names) = GraphNames::parse_graph(THETA).unwrap();
        let v = names.parse_voltage(&g, "volt b (0 1 2)\n").unwrap();
        assert_eq!(v.sheets, 3);
        assert!(v.perms[0].is_identity());
        let v = names.parse_voltage(&g, "sheets 4\nvolt c (0 1)").unwrap();
        assert_eq!(v.sheets, 4);
        assert!(names.parse_voltage(&g, "volt z (0 1)").is_err());
    }

    #[test]
    fn permutation_lists() {
        let (n, p) = parse_permutation_list("degree 3\na (0 1)\nb (0 1 2)\n").unwrap();
        assert_eq!(n, vec!["a", "b"]);
        assert_eq!(p[1].order(), 3);
        assert!(parse_permutation_list("a (0 1)").is_err());
    }
}
