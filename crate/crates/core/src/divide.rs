//! Divides on planar surfaces as combinatorial maps: strands, regions,
//! admissibility and the classification of free divides.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::map::{PlanarMap, Slot};

/// Position of an endpoint on its boundary circle, in units of full turns.
pub type Position = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    /// Transverse double point; slots 0-2 and 1-3 belong to one strand.
    Crossing,
    /// Interval endpoint on boundary circle `circle`.
    Boundary { circle: usize, pos: Position },
    /// Interval endpoint in the interior of the surface.
    Free,
    /// Degree-2 marker carrying a closed edge without double points.
    Phantom,
}

impl VertexKind {
    pub fn degree(&self) -> usize {
        match self {
            VertexKind::Crossing => 4,
            VertexKind::Boundary { .. } | VertexKind::Free => 1,
            VertexKind::Phantom => 2,
        }
    }

    pub fn is_endpoint(&self) -> bool {
        matches!(self, VertexKind::Boundary { .. } | VertexKind::Free)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    pub kind: VertexKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub ends: (Slot, Slot),
}

/// An immersed interval or circle, as the sequence of darts it traverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub closed: bool,
    pub darts: Vec<usize>,
}

/// A divide in the planar surface with `boundary_circles` boundary
/// components. Circle 0 is the outer circle; the others are holes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divide {
    boundary_circles: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    map: PlanarMap,
    strands: Vec<Strand>,
}

impl Divide {
    pub fn new(boundary_circles: usize, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if boundary_circles == 0 {
            return Err(Error::Invalid(
                "a planar surface needs at least one boundary circle".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.name.clone()) {
                return Err(Error::DuplicateId(v.name.clone()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            if !seen.insert(e.name.clone()) {
                return Err(Error::DuplicateId(e.name.clone()));
            }
        }
        let mut positions: Vec<(usize, Position)> = Vec::new();
        for v in &vertices {
            if let VertexKind::Boundary { circle, pos } = &v.kind {
                if *circle >= boundary_circles {
                    return Err(Error::Invalid(format!(
                        "endpoint {} lies on circle {circle}, surface has {boundary_circles}",
                        v.name
                    )));
                }
                if *pos < Ratio::from_integer(0) || *pos >= Ratio::from_integer(1) {
                    return Err(Error::Invalid(format!(
                        "position of {} outside [0, 1)",
                        v.name
                    )));
                }
                if positions.contains(&(*circle, *pos)) {
                    return Err(Error::Invalid(format!(
                        "two endpoints share position on circle {circle}"
                    )));
                }
                positions.push((*circle, *pos));
            }
        }
        let degrees: Vec<usize> = vertices.iter().map(|v| v.kind.degree()).collect();
        let pairs: Vec<(Slot, Slot)> = edges.iter().map(|e| e.ends).collect();
        let map = PlanarMap::new(&degrees, &pairs).map_err(|err| match err {
            Error::DanglingSlot { vertex, slot } => {
                let idx: usize = vertex.parse().unwrap_or(0);
                Error::DanglingSlot {
                    vertex: vertices[idx].name.clone(),
                    slot,
                }
            }
            other => other,
        })?;
        let strands = trace_strands(&map, &vertices);
        let d = Self {
            boundary_circles,
            vertices,
            edges,
            map,
            strands,
        };
        d.completed().map.check_planar()?;
        Ok(d)
    }

    pub fn boundary_circles(&self) -> usize {
        self.boundary_circles
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn kind(&self, v: usize) -> &VertexKind {
        &self.vertices[v].kind
    }

    /// Number of double points.
    pub fn double_points(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Crossing)
            .count()
    }

    pub fn crossings(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].kind == VertexKind::Crossing)
    }

    /// Whether edge `e` has an endpoint (degree-1 vertex) at either end.
    pub fn edge_touches_endpoint(&self, e: usize) -> bool {
        let (a, b) = self.edges[e].ends;
        self.vertices[a.0].kind.is_endpoint() || self.vertices[b.0].kind.is_endpoint()
    }

    /// Strand index of every dart.
    pub fn strand_of_dart(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.map.num_darts()];
        for (i, s) in self.strands.iter().enumerate() {
            for &d in &s.darts {
                out[d] = i;
                out[self.map.twin(d)] = i;
            }
        }
        out
    }

    /// Whether the divide, as a subset of the surface, is connected.
    pub fn is_connected(&self) -> bool {
        self.map.num_vertices() > 0 && self.map.num_components() == 1
    }

    /// The divide together with its boundary circles.
    pub fn completed(&self) -> Completed {
        Completed::new(self)
    }

    /// Faces of the complement, grouped into regions.
    pub fn regions(&self) -> Result<Regions> {
        let c = self.completed();
        c.map.check_planar()?;
        Ok(c.regions())
    }
}

fn trace_strands(map: &PlanarMap, vertices: &[Vertex]) -> Vec<Strand> {
    let next = |d: usize| -> Option<usize> {
        let arrive = map.twin(d);
        let v = map.vertex(arrive);
        let s = map.slot(arrive);
        match vertices[v].kind {
            VertexKind::Crossing => Some(map.dart(v, (s + 2) % 4)),
            VertexKind::Phantom => Some(map.dart(v, (s + 1) % 2)),
            _ => None,
        }
    };
    let mut used = vec![false; map.num_edges()];
    let mut strands = Vec::new();
    for (v, vx) in vertices.iter().enumerate() {
        if !vx.kind.is_endpoint() || used[map.edge(map.dart(v, 0))] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = Some(map.dart(v, 0));
        while let Some(cur) = d {
            used[map.edge(cur)] = true;
            darts.push(cur);
            d = next(cur);
        }
        strands.push(Strand {
            closed: false,
            darts,
        });
    }
    for start in 0..map.num_darts() {
        if used[map.edge(start)] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            used[map.edge(d)] = true;
            darts.push(d);
            d = next(d).expect("closed strand passes no endpoint");
            if d == start {
                break;
            }
        }
        strands.push(Strand {
            closed: true,
            darts,
        });
    }
    strands
}

/// Boundary arc dart information in the completed map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub circle: usize,
    /// Runs counterclockwise along the circle (increasing position).
    pub forward: bool,
}

/// The divide map completed with its boundary circles.
#[derive(Debug, Clone)]
pub struct Completed {
    pub map: PlanarMap,
    /// Completed dart of every divide dart.
    pub dart_of: Vec<usize>,
    /// Divide dart of every completed dart, if any.
    pub divide_dart: Vec<Option<usize>>,
    pub arcs: Vec<Option<Arc>>,
    /// Forward arc dart of the first vertex of each circle.
    pub circle_anchor: Vec<usize>,
    /// Completed-map vertex of every divide vertex.
    pub divide_vertices: usize,
}

impl Completed {
    fn new(d: &Divide) -> Self {
        let mut degrees = Vec::new();
        // (forward, inward, backward) slots for endpoints on circles
        let mut layout = Vec::new();
        for v in &d.vertices {
            match &v.kind {
                VertexKind::Boundary { circle, .. } => {
                    degrees.push(3);
                    layout.push(if *circle == 0 { (0, 1, 2) } else { (0, 2, 1) });
                }
                k => {
                    degrees.push(k.degree());
                    layout.push((usize::MAX, 0, usize::MAX));
                }
            }
        }
        let mut pairs: Vec<(Slot, Slot)> = Vec::new();
        let mut arc_pairs: Vec<(usize, bool)> = Vec::new();
        for e in &d.edges {
            let fix = |(v, s): Slot| -> Slot {
                if matches!(d.vertices[v].kind, VertexKind::Boundary { .. }) {
                    (v, layout[v].1)
                } else {
                    (v, s)
                }
            };
            pairs.push((fix(e.ends.0), fix(e.ends.1)));
        }
        let n_div_edges = pairs.len();
        let mut circle_first = Vec::new();
        for circle in 0..d.boundary_circles {
            let mut on: Vec<(Position, usize)> = d
                .vertices
                .iter()
                .enumerate()
                .filter_map(|(i, v)| match &v.kind {
                    VertexKind::Boundary { circle: c, pos } if *c == circle => Some((*pos, i)),
                    _ => None,
                })
                .collect();
            on.sort();
            if on.is_empty() {
                let v = degrees.len();
                degrees.push(2);
                layout.push((0, usize::MAX, 1));
                on.push((Ratio::from_integer(0), v));
            }
            circle_first.push(on[0].1);
            for i in 0..on.len() {
                let a = on[i].1;
                let b = on[(i + 1) % on.len()].1;
                pairs.push(((a, layout[a].0), (b, layout[b].2)));
                arc_pairs.push((circle, true));
            }
        }
        let map = PlanarMap::new(&degrees, &pairs).expect("completion preserves slot usage");
        let mut dart_of = vec![0; d.map.num_darts()];
        let mut divide_dart = vec![None; map.num_darts()];
        for dd in 0..d.map.num_darts() {
            let v = d.map.vertex(dd);
            let s = if matches!(d.vertices[v].kind, VertexKind::Boundary { .. }) {
                layout[v].1
            } else {
                d.map.slot(dd)
            };
            let cd = map.dart(v, s);
            dart_of[dd] = cd;
            divide_dart[cd] = Some(dd);
        }
        let mut arcs = vec![None; map.num_darts()];
        for (k, &(circle, _)) in arc_pairs.iter().enumerate() {
            let (fwd, bwd) = map.edge_darts(n_div_edges + k);
            arcs[fwd] = Some(Arc {
                circle,
                forward: true,
            });
            arcs[bwd] = Some(Arc {
                circle,
                forward: false,
            });
        }
        let circle_anchor = circle_first
            .iter()
            .map(|&v| map.dart(v, layout[v].0))
            .collect();
        Self {
            map,
            dart_of,
            divide_dart,
            arcs,
            circle_anchor,
            divide_vertices: d.vertices.len(),
        }
    }

    fn is_exterior(&self, walk: &[usize]) -> bool {
        walk.iter().all(|&x| match self.arcs[x] {
            Some(a) => a.forward == (a.circle != 0),
            None => false,
        })
    }

    fn regions(&self) -> Regions {
        let faces = self.map.faces();
        let comp = self.map.components();
        let root = self.map.vertex(self.circle_anchor[0]);
        let host_walk = faces.face_of[self.circle_anchor[0]];
        // outer walk of every non-root component
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut outer_walk = vec![None; ncomp];
        for &anchor in self.circle_anchor.iter().skip(1) {
            let c = comp[self.map.vertex(anchor)];
            if c != comp[root] && outer_walk[c].is_none() {
                outer_walk[c] = Some(faces.face_of[self.map.twin(anchor)]);
            }
        }
        for v in 0..self.map.num_vertices() {
            let c = comp[v];
            if c != comp[root] && outer_walk[c].is_none() {
                outer_walk[c] = Some(faces.face_of[self.map.twin(self.map.dart(v, 0))]);
            }
        }
        let mut region_of_walk = vec![usize::MAX; faces.walks.len()];
        let mut regions: Vec<Region> = Vec::new();
        let mut merged: Vec<usize> = outer_walk.iter().flatten().copied().collect();
        merged.sort();
        for (w, walk) in faces.walks.iter().enumerate() {
            if self.is_exterior(walk) || merged.contains(&w) {
                continue;
            }
            region_of_walk[w] = regions.len();
            regions.push(Region {
                id: regions.len(),
                walks: vec![walk.clone()],
                outside: false,
                euler: 0,
            });
        }
        let host = region_of_walk[host_walk];
        for &w in &merged {
            if !self.is_exterior(&faces.walks[w]) {
                region_of_walk[w] = host;
                regions[host].walks.push(faces.walks[w].clone());
            }
        }
        for r in &mut regions {
            r.outside = r.walks.iter().flatten().any(|&x| self.arcs[x].is_some());
            r.euler = 2 - r.walks.len() as i64;
        }
        let mut left = vec![usize::MAX; self.dart_of.len()];
        for (dd, &cd) in self.dart_of.iter().enumerate() {
            left[dd] = region_of_walk[faces.face_of[cd]];
        }
        Regions {
            regions,
            left_of_dart: left,
        }
    }
}

/// A complementary region of the divide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: usize,
    /// Boundary walks as darts of the completed map.
    pub walks: Vec<Vec<usize>>,
    pub outside: bool,
    /// Euler characteristic of the region.
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    pub regions: Vec<Region>,
    /// Region to the left of each divide dart.
    pub left_of_dart: Vec<usize>,
}

impl Regions {
    pub fn inside(&self) -> impl Iterator<Item = &Region> {
        self.regions.iter().filter(|r| !r.outside)
    }

    pub fn num_inside(&self) -> usize {
        self.inside().count()
    }
}

/// Result of one admissibility condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub checks: Vec<Check>,
}

impl AdmissibilityReport {
    pub fn admissible(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verdict {}",
            if self.admissible() {
                "admissible"
            } else {
                "violations"
            }
        )?;
        for c in &self.checks {
            write!(
                f,
                "check {} {}",
                c.name,
                if c.passed { "pass" } else { "fail" }
            )?;
            if !c.detail.is_empty() {
                write!(f, " {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Divide {
    pub fn check_admissibility(&self) -> Result<AdmissibilityReport> {
        let regions = self.regions()?;
        let completed = self.completed();
        let mut checks = Vec::new();

        let comps = self.map.num_components();
        checks.push(Check {
            name: "connectivity",
            passed: comps == 1,
            detail: if comps == 1 {
                String::new()
            } else {
                format!("{comps} components")
            },
        });

        let bad: Vec<usize> = regions
            .inside()
            .filter(|r| r.walks.len() != 1)
            .map(|r| r.id)
            .collect();
        checks.push(Check {
            name: "inside-simply-connected",
            passed: bad.is_empty(),
            detail: list("regions", &bad),
        });

        let bad: Vec<usize> = regions
            .regions
            .iter()
            .filter(|r| r.outside)
            .filter(|r| match r.walks.len() {
                1 => false,
                2 => {
                    let pure = |w: &Vec<usize>| w.iter().all(|&x| completed.arcs[x].is_some());
                    let none = |w: &Vec<usize>| w.iter().all(|&x| completed.arcs[x].is_none());
                    let (a, b) = (&r.walks[0], &r.walks[1]);
                    !((pure(a) && none(b)) || (pure(b) && none(a)))
                }
                _ => true,
            })
            .map(|r| r.id)
            .collect();
        checks.push(Check {
            name: "outside-shape",
            passed: bad.is_empty(),
            detail: list("regions", &bad),
        });

        let mut counts = vec![0usize; self.boundary_circles];
        for v in &self.vertices {
            if let VertexKind::Boundary { circle, .. } = v.kind {
                counts[circle] += 1;
            }
        }
        let bad: Vec<usize> = (0..self.boundary_circles)
            .filter(|&c| counts[c] % 2 == 1)
            .collect();
        checks.push(Check {
            name: "boundary-parity",
            passed: bad.is_empty(),
            detail: list("circles", &bad),
        });

        let strand_of = self.strand_of_dart();
        let mut bad = Vec::new();
        for (i, s) in self.strands.iter().enumerate() {
            if !s.closed {
                continue;
            }
            let mut count = 0;
            for c in self.crossings() {
                let here: Vec<usize> = self.map.darts_at(c).map(|d| strand_of[d]).collect();
                let mine = here.iter().filter(|&&x| x == i).count();
                // a passage pairs two darts; count passages meeting a different strand
                if mine == 2 && here.iter().any(|&x| x != i) {
                    count += 1;
                }
            }
            if count % 2 == 1 {
                bad.push(i);
            }
        }
        checks.push(Check {
            name: "circle-parity",
            passed: bad.is_empty(),
            detail: list("strands", &bad),
        });
        Ok(AdmissibilityReport { checks })
    }
}

fn list(what: &str, ids: &[usize]) -> String {
    if ids.is_empty() {
        return String::new();
    }
    let s: Vec<String> = ids.iter().map(ToString::to_string).collect();
    format!("{what}={}", s.join(","))
}

/// Which case of the fiberedness criterion for free divides applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeCase {
    /// The first double point `c` lies on an outside region; `e` is the
    /// edge at `c` between the outside region and the free-endpoint region.
    Case1 {
        free: usize,
        c: usize,
        e: usize,
    },
    /// The arc from `c` to the non-free endpoint passes one double point `c2`.
    Case2 {
        free: usize,
        c: usize,
        c2: usize,
        e: usize,
        region: usize,
        e2: usize,
    },
    Neither {
        free: usize,
        c: Option<usize>,
    },
}

impl FreeCase {
    /// Edges whose mid-edge crossing is suppressed in the doubling.
    pub fn suppressed_edges(&self) -> Vec<usize> {
        match *self {
            FreeCase::Case1 { e, .. } => vec![e],
            FreeCase::Case2 { e, e2, .. } => vec![e, e2],
            FreeCase::Neither { .. } => vec![],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FreeCase::Case1 { .. } => "case1",
            FreeCase::Case2 { .. } => "case2",
            FreeCase::Neither { .. } => "neither",
        }
    }
}

impl Divide {
    /// Classifies a free divide consisting of one interval with one
    /// boundary endpoint and one free endpoint.
    pub fn classify_free(&self) -> Result<FreeCase> {
        self.classify_free_as(None)
    }

    /// Like `classify_free`, but with `force` only case 1 or case 2 is tried.
    pub fn classify_free_as(&self, force: Option<u8>) -> Result<FreeCase> {
        if self.boundary_circles != 1 || self.strands.len() != 1 || self.strands[0].closed {
            return Err(Error::NotFreeDivide(
                "expected one immersed interval in the disk".into(),
            ));
        }
        let frees: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| self.vertices[v].kind == VertexKind::Free)
            .collect();
        let bounds = self
            .vertices
            .iter()
            .filter(|v| matches!(v.kind, VertexKind::Boundary { .. }))
            .count();
        if frees.len() != 1 || bounds != 1 {
            return Err(Error::NotFreeDivide(
                "expected one boundary and one free endpoint".into(),
            ));
        }
        let free = frees[0];
        let regions = self.regions()?;
        let fd = self.map.dart(free, 0);
        let free_region = regions.left_of_dart[fd];
        if regions.regions[free_region].outside {
            return Err(Error::NotFreeDivide(
                "the free endpoint touches the outside region".into(),
            ));
        }
        // passages in order from the free endpoint
        let mut darts = self.strands[0].darts.clone();
        if self.map.vertex(darts[0]) != free {
            darts = darts.iter().rev().map(|&d| self.map.twin(d)).collect();
        }
        let passages: Vec<usize> = darts[1..].iter().map(|&d| self.map.vertex(d)).collect();
        let Some(&c) = passages.first() else {
            return Ok(FreeCase::Neither { free, c: None });
        };
        let left = |d: usize| regions.left_of_dart[d];
        let right = |d: usize| regions.left_of_dart[self.map.twin(d)];
        let outside = |r: usize| regions.regions[r].outside;

        let touches_outside = self.map.darts_at(c).any(|d| outside(left(d)));
        if touches_outside && force != Some(2) {
            let cands: Vec<usize> = self
                .map
                .darts_at(c)
                .filter(|&d| {
                    let (l, r) = (left(d), right(d));
                    (outside(l) && r == free_region) || (outside(r) && l == free_region)
                })
                .map(|d| self.map.edge(d))
                .collect();
            let mut uniq = cands.clone();
            uniq.sort();
            uniq.dedup();
            return match uniq.len() {
                1 => Ok(FreeCase::Case1 {
                    free,
                    c,
                    e: uniq[0],
                }),
                n => Err(Error::Ambiguous(format!(
                    "{n} candidate edges e at the first double point"
                ))),
            };
        }
        if force == Some(1) {
            return Ok(FreeCase::Neither { free, c: Some(c) });
        }
        // passages after the last visit of c, up to the boundary endpoint
        let last = passages.iter().rposition(|&p| p == c).unwrap();
        let interior = &passages[last + 1..];
        if interior.len() == 1 {
            let c2 = interior[0];
            let de = darts[last + 1];
            let e = self.map.edge(de);
            let region = if left(de) == free_region {
                right(de)
            } else {
                left(de)
            };
            let cands: Vec<usize> = self
                .map
                .darts_at(c2)
                .filter(|&d| {
                    let (l, r) = (left(d), right(d));
                    (outside(l) && r == region) || (outside(r) && l == region)
                })
                .map(|d| self.map.edge(d))
                .collect();
            let mut uniq = cands;
            uniq.sort();
            uniq.dedup();
            return match uniq.len() {
                1 => Ok(FreeCase::Case2 {
                    free,
                    c,
                    c2,
                    e,
                    region,
                    e2: uniq[0],
                }),
                n => Err(Error::Ambiguous(format!(
                    "{n} candidate edges e' at the second double point"
                ))),
            };
        }
        Ok(FreeCase::Neither { free, c: Some(c) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{chebyshev, divide_from_curves, Curve};
    use crate::io::parse;

    fn circle(cx: f64, cy: f64, r: f64) -> Curve {
        Curve::closed(
            (0..16)
                .map(|i| {
                    let a = i as f64 * std::f64::consts::PI / 8.0;
                    (cx + r * a.cos(), cy + r * a.sin())
                })
                .collect(),
        )
    }

    #[test]
    fn bare_circle_regions_and_admissibility() {
        let d = parse("surface planar n=1\nedge o loop\n").unwrap();
        let r = d.regions().unwrap();
        assert_eq!(r.regions.len(), 2);
        assert_eq!(r.num_inside(), 1);
        let outside: Vec<_> = r.regions.iter().filter(|x| x.outside).collect();
        assert_eq!(outside[0].euler, 0);
        assert!(d.check_admissibility().unwrap().admissible());
    }

    #[test]
    fn trefoil_regions() {
        let d = chebyshev(2, 3);
        let r = d.regions().unwrap();
        assert_eq!(r.regions.len(), 3);
        assert_eq!(r.num_inside(), 1);
        assert!(d.check_admissibility().unwrap().admissible());
    }

    #[test]
    fn empty_divide_has_one_outside_region() {
        let d = parse("surface planar n=1\n").unwrap();
        let r = d.regions().unwrap();
        assert_eq!(r.regions.len(), 1);
        assert!(r.regions[0].outside);
    }

    #[test]
    fn two_disjoint_circles_fail_connectivity() {
        let d = divide_from_curves(&[circle(-0.4, 0.0, 0.3), circle(0.4, 0.0, 0.3)]).unwrap();
        let r = d.regions().unwrap();
        assert_eq!(r.num_inside(), 2);
        let rep = d.check_admissibility().unwrap();
        assert!(!rep.admissible());
        let v: Vec<_> = rep.violations().map(|c| c.name).collect();
        assert_eq!(v, ["connectivity", "outside-shape"]);
    }

    #[test]
    fn euler_sum_matches_disk() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
            let d = chebyshev(p, q);
            let r = d.regions().unwrap();
            let sum: i64 = r.regions.iter().map(|x| x.euler).sum();
            // boundary endpoints belong to the outside regions
            let v = d
                .vertices()
                .iter()
                .filter(|x| !matches!(x.kind, VertexKind::Boundary { .. }))
                .count() as i64;
            let e = d.edges().len() as i64;
            assert_eq!(sum + v - e, 1, "({p},{q})");
        }
    }

    #[test]
    fn regions_partition_dart_sides() {
        let d = chebyshev(3, 5);
        let r = d.regions().unwrap();
        let c = d.completed();
        let mut count = 0;
        for reg in &r.regions {
            count += reg
                .walks
                .iter()
                .flatten()
                .filter(|&&x| c.divide_dart[x].is_some())
                .count();
        }
        assert_eq!(count, d.map().num_darts());
    }
}
