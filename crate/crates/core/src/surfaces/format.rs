//! Surface file format: the point and segment lines of a 1-complex plus
//! `face <name> <word>` lines, where the word runs over segment names.
//!
//! `polygon <word>` alone describes one face whose sides are glued by the
//! letters of `word`; the points come from the corner identifications.

use super::{SurfaceComplex, SurfaceError};
use crate::complexes::{Graph1, GraphNames};
use crate::presentations::GeneratorNames;
use crate::words::{Letter, Word};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceNames {
    pub graph: GraphNames,
    pub faces: Vec<String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> SurfaceError {
    SurfaceError::Syntax { line, msg: msg.into() }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// One-face complex glued from a polygon word. Segments are numbered by
/// first appearance.
pub fn polygon_complex(word: &Word) -> Result<(SurfaceComplex, SurfaceNames), SurfaceError> {
    let mut order: Vec<usize> = Vec::new();
    for l in word {
        if !order.contains(&l.generator()) {
            order.push(l.generator());
        }
    }
    let seg_of = |g: usize| order.iter().position(|&x| x == g).expect("listed");
    let w: Word = word.iter().map(|l| Letter::new(seg_of(l.generator()), l.is_inverse())).collect();
    let n = w.len();
    let m = order.len();
    if n == 0 {
        return Err(SurfaceError::EmptyFace(0));
    }
    // corners 0..n, then tail/head of each segment
    let mut parent: Vec<usize> = (0..n + 2 * m).collect();
    let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    };
    for (i, l) in w.iter().enumerate() {
        let s = l.generator();
        let (start, end) = (i, (i + 1) % n);
        let (tail, head) = if l.is_inverse() { (end, start) } else { (start, end) };
        union(n + 2 * s, tail, &mut parent);
        union(n + 2 * s + 1, head, &mut parent);
    }
    let mut label = vec![usize::MAX; n + 2 * m];
    let mut n_points = 0;
    for x in 0..n {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = n_points;
            n_points += 1;
        }
    }
    let segs = (0..m)
        .map(|s| {
            let t = find(&mut parent, n + 2 * s);
            let h = find(&mut parent, n + 2 * s + 1);
            (label[t], label[h])
        })
        .collect();
    let graph = Graph1::new(n_points, segs)?;
    let names = SurfaceNames {
        graph: GraphNames {
            points: (0..n_points).map(|p| format!("p{}", p)).collect(),
            segments: order.iter().map(|&g| Letter::pos(g).to_string()).collect(),
        },
        faces: vec!["f".to_string()],
    };
    Ok((SurfaceComplex::new(graph, vec![w])?, names))
}

impl SurfaceNames {
    pub fn parse(text: &str) -> Result<(SurfaceComplex, SurfaceNames), SurfaceError> {
        let mut graph_text = String::new();
        let mut face_lines = Vec::new();
        let mut polygon = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let head = line.split_whitespace().next().unwrap_or("");
            match head {
                "point" | "seg" => graph_text.push_str(line),
                "face" => face_lines.push((i + 1, line)),
                "polygon" => {
                    if polygon.is_some() {
                        return Err(syntax(i + 1, "only one polygon line is allowed"));
                    }
                    polygon = Some((i + 1, line["polygon".len()..].trim()));
                }
                "" => {}
                _ => return Err(syntax(i + 1, format!("unknown directive `{}`", head))),
            }
            graph_text.push('\n');
        }
        if let Some((ln, w)) = polygon {
            if !graph_text.trim().is_empty() || !face_lines.is_empty() {
                return Err(syntax(ln, "`polygon` cannot be mixed with other lines"));
            }
            let word: Word = w.parse().map_err(|e| syntax(ln, format!("{}", e)))?;
            return polygon_complex(&word);
        }
        let (graph, gnames) = GraphNames::parse_graph(&graph_text)?;
        let seg_names =
            GeneratorNames::new(gnames.segments.clone()).map_err(|e| syntax(0, e.to_string()))?;
        let mut faces = Vec::new();
        let mut names = Vec::new();
        for (ln, line) in face_lines {
            let rest = line["face".len()..].trim();
            let (name, word) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if name.is_empty() || names.iter().any(|n| n == name) {
                return Err(syntax(ln, "missing or duplicate face name"));
            }
            let w = seg_names
                .parse_word(word)
                .map_err(|e| syntax(ln, e.to_string()))?;
            names.push(name.to_string());
            faces.push(w);
        }
        let c = SurfaceComplex::new(graph, faces)?;
        Ok((c, SurfaceNames { graph: gnames, faces: names }))
    }

    /// Numbered names for a generated complex.
    pub fn numbered(c: &SurfaceComplex) -> Self {
        SurfaceNames {
            graph: GraphNames::numbered(c.graph()),
            faces: (0..c.n_faces()).map(|f| format!("f{}", f)).collect(),
        }
    }

    pub fn to_text(&self, c: &SurfaceComplex) -> String {
        let mut out = self.graph.graph_to_text(c.graph());
        let seg_names = GeneratorNames::new(self.graph.segments.clone()).expect("distinct names");
        for (f, w) in c.faces().iter().enumerate() {
            out.push_str(&format!("face {} {}\n", self.faces[f], seg_names.format_word(w)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygons() {
        let (c, names) = SurfaceNames::parse("polygon a b A B").unwrap();
        assert_eq!((c.n_points(), c.n_segments(), c.n_faces()), (1, 2, 1));
        assert_eq!(names.graph.segments, vec!["a", "b"]);
        let (c, _) = SurfaceNames::parse("polygon abab").unwrap();
        assert_eq!(c.n_points(), 2);
        let (c, _) = SurfaceNames::parse("polygon c c").unwrap();
        assert_eq!(c.faces()[0].to_string(), "a a");
    }

    #[test]
    fn round_trip() {
        let text = "point p\npoint q\nseg a p q\nseg b p q\nface f a B\nface g b A\n";
        let (c, names) = SurfaceNames::parse(text).unwrap();
        assert_eq!(names.to_text(&c), text);
        let (c2, _) = SurfaceNames::parse(&names.to_text(&c)).unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            SurfaceNames::parse("point p\nseg a p p\nface f a z"),
            Err(SurfaceError::Syntax { line: 3, .. })
        ));
        assert!(SurfaceNames::parse("polygon a A\npoint p").is_err());
        assert!(SurfaceNames::parse("edge x").is_err());
        assert!(matches!(
            SurfaceNames::parse("point p\npoint q\nseg a p q\nface f a"),
            Err(SurfaceError::OpenBoundary { .. })
        ));
    }
}
