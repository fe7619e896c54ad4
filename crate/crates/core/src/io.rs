//! Line-oriented text format for divides.
//!
//! ```text
//! # trefoil
//! surface planar n=1
//! vertex c crossing
//! vertex b1 endpoint b=0@1/8
//! vertex b2 endpoint b=0@7/8
//! edge loop c.1 c.2
//! edge up c.0 b1.0
//! edge down c.3 b2.0
//! ```
//!
//! A closed edge without double points is written `edge <id> loop`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::divide::{Divide, Edge, Position, Vertex, VertexKind};
use crate::error::{Error, Result};

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Divide> {
    let mut circles = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut strands: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tok: Vec<&str> = line.split_whitespace().collect();
        match tok[0] {
            "surface" => {
                if tok.len() != 3 || tok[1] != "planar" {
                    return Err(syntax(ln, "expected `surface planar n=<k>`"));
                }
                let n = tok[2]
                    .strip_prefix("n=")
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| syntax(ln, "bad boundary count"))?;
                circles = Some(n);
            }
            "vertex" => {
                if tok.len() != 3 && tok.len() != 4 {
                    return Err(syntax(ln, "expected `vertex <id> <kind>`"));
                }
                let kind = match (tok[2], tok.get(3)) {
                    ("crossing", None) => VertexKind::Crossing,
                    ("free", None) => VertexKind::Free,
                    ("endpoint", Some(spec)) => {
                        let spec = spec
                            .strip_prefix("b=")
                            .ok_or_else(|| syntax(ln, "expected b=<circle>@<pos>"))?;
                        let (c, p) = spec
                            .split_once('@')
                            .ok_or_else(|| syntax(ln, "expected <circle>@<pos>"))?;
                        let circle = c.parse().map_err(|_| syntax(ln, "bad circle index"))?;
                        let pos: Position = p.parse().map_err(|_| syntax(ln, "bad position"))?;
                        VertexKind::Boundary { circle, pos }
                    }
                    _ => return Err(syntax(ln, format!("unknown vertex kind `{}`", tok[2]))),
                };
                if index.insert(tok[1].to_string(), vertices.len()).is_some() {
                    return Err(Error::DuplicateId(tok[1].to_string()));
                }
                vertices.push(Vertex {
                    name: tok[1].to_string(),
                    kind,
                });
            }
            "edge" => {
                if tok.len() == 3 && tok[2] == "loop" {
                    let name = format!("~{}", tok[1]);
                    if index.insert(name.clone(), vertices.len()).is_some() {
                        return Err(Error::DuplicateId(tok[1].to_string()));
                    }
                    let v = vertices.len();
                    vertices.push(Vertex {
                        name,
                        kind: VertexKind::Phantom,
                    });
                    edges.push(Edge {
                        name: tok[1].to_string(),
                        ends: ((v, 0), (v, 1)),
                    });
                    continue;
                }
                if tok.len() != 4 {
                    return Err(syntax(ln, "expected `edge <id> <v>.<slot> <v>.<slot>`"));
                }
                let slot = |s: &str| -> Result<(usize, usize)> {
                    let (v, k) = s
                        .rsplit_once('.')
                        .ok_or_else(|| syntax(ln, format!("bad slot `{s}`")))?;
                    let v = *index
                        .get(v)
                        .ok_or_else(|| syntax(ln, format!("unknown vertex `{v}`")))?;
                    let k = k
                        .parse()
                        .map_err(|_| syntax(ln, format!("bad slot number in `{s}`")))?;
                    if k >= vertices[v].kind.degree() {
                        return Err(Error::Invalid(format!(
                            "slot {s} exceeds the vertex degree"
                        )));
                    }
                    Ok((v, k))
                };
                edges.push(Edge {
                    name: tok[1].to_string(),
                    ends: (slot(tok[2])?, slot(tok[3])?),
                });
            }
            "strand" => {
                if tok.len() < 3 {
                    return Err(syntax(ln, "expected `strand <id> <edge>...`"));
                }
                strands.push((ln, tok[2..].iter().map(|s| s.to_string()).collect()));
            }
            other => return Err(syntax(ln, format!("unknown directive `{other}`"))),
        }
    }
    let circles = circles.ok_or_else(|| syntax(1, "missing `surface planar n=<k>`"))?;
    let divide = Divide::new(circles, vertices, edges)?;
    for (ln, names) in strands {
        let want: HashSet<&str> = names.iter().map(String::as_str).collect();
        let ok = divide.strands().iter().any(|s| {
            let have: HashSet<&str> = s
                .darts
                .iter()
                .map(|&d| divide.edges()[divide.map().edge(d)].name.as_str())
                .collect();
            have == want
        });
        if !ok {
            return Err(syntax(ln, "strand does not match the traced strands"));
        }
    }
    Ok(divide)
}

/// Canonical text form; `parse(&emit(d))` reproduces `d`.
pub fn emit(d: &Divide) -> String {
    let mut out = String::new();
    writeln!(out, "surface planar n={}", d.boundary_circles()).unwrap();
    for v in d.vertices() {
        match &v.kind {
            VertexKind::Crossing => writeln!(out, "vertex {} crossing", v.name).unwrap(),
            VertexKind::Free => writeln!(out, "vertex {} free", v.name).unwrap(),
            VertexKind::Boundary { circle, pos } => {
                writeln!(out, "vertex {} endpoint b={circle}@{pos}", v.name).unwrap()
            }
            VertexKind::Phantom => {}
        }
    }
    for e in d.edges() {
        let ((a, s), (b, t)) = e.ends;
        if d.kind(a) == &VertexKind::Phantom {
            writeln!(out, "edge {} loop", e.name).unwrap();
        } else {
            let (na, nb) = (&d.vertices()[a].name, &d.vertices()[b].name);
            writeln!(out, "edge {} {na}.{s} {nb}.{t}", e.name).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "# trefoil
surface planar n=1
vertex c crossing
vertex b1 endpoint b=0@1/8
vertex b2 endpoint b=0@7/8
edge loop c.1 c.2
edge up c.0 b1.0
edge down c.3 b2.0
";

    #[test]
    fn parses_trefoil() {
        let d = parse(TREFOIL).unwrap();
        assert_eq!(d.vertices().len(), 3);
        assert_eq!(d.edges().len(), 3);
        assert_eq!(d.strands().len(), 1);
    }

    #[test]
    fn degree_three_crossing_is_dangling() {
        let text = "surface planar n=1
vertex c crossing
vertex a endpoint b=0@0
vertex b endpoint b=0@1/2
vertex f free
edge e1 c.0 a.0
edge e2 c.2 b.0
edge e3 c.1 f.0
";
        assert!(matches!(
            parse(text),
            Err(Error::DanglingSlot { slot: 3, .. })
        ));
    }

    #[test]
    fn empty_surface() {
        let d = parse("surface planar n=1\n").unwrap();
        assert_eq!(d.regions().unwrap().regions.len(), 1);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse("surface planar n=1\nvertex x blob\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }));
        let err = parse("surface planar n=1\nvertex x free\nvertex x free\n").unwrap_err();
        assert_eq!(err, Error::DuplicateId("x".into()));
    }

    #[test]
    fn emit_round_trips() {
        let d = parse(TREFOIL).unwrap();
        assert_eq!(parse(&emit(&d)).unwrap(), d);
        let c = parse("surface planar n=1\nedge o loop\n").unwrap();
        assert_eq!(parse(&emit(&c)).unwrap(), c);
    }

    #[test]
    fn strand_lines_are_checked() {
        let ok = format!("{TREFOIL}strand s up loop down\n");
        parse(&ok).unwrap();
        let bad = format!("{TREFOIL}strand s up loop\n");
        assert!(parse(&bad).is_err());
    }
}
