//! The doubled curve `P2` of a divide and its orientation.
//!
//! Every double point becomes four crossings, one per corner; every edge not
//! touching an endpoint gets one extra crossing between its two parallel
//! copies; endpoints are closed by half circles.

use std::collections::VecDeque;

use crate::divide::{Divide, FreeCase, Regions, Vertex, VertexKind};
use crate::error::{Error, Result};
use crate::map::{Faces, PlanarMap, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    White,
    Black,
}

/// Checkerboard coloring of the inside regions, indexed by region id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn swapped(&self) -> Self {
        let flip = |c: &Option<Color>| {
            c.map(|c| match c {
                Color::White => Color::Black,
                Color::Black => Color::White,
            })
        };
        Self {
            colors: self.colors.iter().map(flip).collect(),
        }
    }
}

/// Two-colors the inside regions so that regions sharing an edge differ.
/// Regions opposite at a double point share a color. In every class of
/// related regions the smallest id is white.
pub fn checkerboard(d: &Divide) -> Result<Coloring> {
    let regions = d.regions()?;
    checkerboard_with(d, &regions, None)
}

/// `skip` is a double point whose opposite regions are left unrelated.
pub(crate) fn checkerboard_with(
    d: &Divide,
    regions: &Regions,
    skip: Option<usize>,
) -> Result<Coloring> {
    let n = regions.regions.len();
    let mut adj = vec![Vec::new(); n];
    let map = d.map();
    let inside = |r: usize| !regions.regions[r].outside;
    for x in 0..map.num_darts() {
        let (l, r) = (regions.left_of_dart[x], regions.left_of_dart[map.twin(x)]);
        if inside(l) && inside(r) && l != r {
            adj[l].push((r, true));
        }
    }
    // regions opposite at a double point share a color
    for v in d.crossings().filter(|&v| Some(v) != skip) {
        for k in 0..2 {
            let a = regions.left_of_dart[map.dart(v, k)];
            let b = regions.left_of_dart[map.dart(v, k + 2)];
            if inside(a) && inside(b) {
                adj[a].push((b, false));
                adj[b].push((a, false));
            }
        }
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for start in 0..n {
        if regions.regions[start].outside || colors[start].is_some() {
            continue;
        }
        colors[start] = Some(Color::White);
        let mut queue = VecDeque::from([start]);
        while let Some(r) = queue.pop_front() {
            let here = colors[r].unwrap();
            for &(s, differ) in &adj[r] {
                let want = match (here, differ) {
                    (Color::White, true) | (Color::Black, false) => Color::Black,
                    _ => Color::White,
                };
                match colors[s] {
                    None => {
                        colors[s] = Some(want);
                        queue.push_back(s);
                    }
                    Some(c) if c != want => return Err(Error::NotTwoColorable),
                    _ => {}
                }
            }
        }
    }
    Ok(Coloring { colors })
}

/// Where a vertex of the doubled curve comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexTag {
    /// Corner `corner` of double point `vertex`.
    Corner { vertex: usize, corner: usize },
    /// Crossing added on an edge.
    Midpoint { edge: usize },
    /// Crossing created by the free-endpoint deformation.
    Finger,
}

/// Where a face of the doubled curve comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceTag {
    /// Image of an inside region of the divide.
    Image { region: usize },
    /// The images of the outside regions, which meet the surface boundary.
    Outside,
    /// Small quadrilateral around a double point.
    Quad { vertex: usize },
    /// Half of the strip along an edge with an added crossing; `end` is the
    /// index into `Edge::ends` of the nearer end.
    Triangle { edge: usize, end: usize },
    /// Strip closed by a half circle at an endpoint.
    Bigon { edge: usize },
    /// Strip along an edge without an added crossing or endpoint.
    Strip { edge: usize },
    /// Face created by the free-endpoint deformation.
    Finger,
}

impl FaceTag {
    pub fn name(&self) -> &'static str {
        match self {
            FaceTag::Image { .. } => "region",
            FaceTag::Outside => "outside",
            FaceTag::Quad { .. } => "quad",
            FaceTag::Triangle { .. } => "triangle",
            FaceTag::Bigon { .. } => "bigon",
            FaceTag::Strip { .. } => "strip",
            FaceTag::Finger => "finger",
        }
    }
}

/// Face label of an angle at a vertex of the doubled curve, before strips
/// are resolved into triangles, bigons and plain strips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Angle {
    Image(usize),
    Quad(usize),
    /// Strip along the given divide dart.
    Strip(usize),
    Finger,
}

/// The doubled curve as slot pairs, before it is turned into a divide.
#[derive(Debug, Clone, Default)]
pub(crate) struct Raw {
    pub vertices: Vec<Vertex>,
    pub tags: Vec<VertexTag>,
    /// Angle `i` lies between slots `i` and `i + 1`.
    pub angles: Vec<[Angle; 4]>,
    pub pairs: Vec<(Slot, Slot)>,
}

impl Raw {
    pub fn push(&mut self, name: String, tag: VertexTag, angles: [Angle; 4]) -> usize {
        self.vertices.push(Vertex {
            name,
            kind: VertexKind::Crossing,
        });
        self.tags.push(tag);
        self.angles.push(angles);
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Open,
    At(Slot),
    /// Joined to the inner (vertex side) end of a port.
    Inner(usize),
    /// Joined to the outer (edge side) end of a port.
    Outer(usize),
}

/// Whether edge `e` carries an added crossing.
pub(crate) fn has_midpoint(d: &Divide, e: usize, suppressed: &[usize]) -> bool {
    !d.edge_touches_endpoint(e) && !suppressed.contains(&e)
}

pub(crate) fn raw_double(d: &Divide, regions: &Regions, suppressed: &[usize]) -> Result<Raw> {
    let map = d.map();
    // ports: the left and right parallel copies of each divide dart
    let left = |h: usize| 2 * h;
    let right = |h: usize| 2 * h + 1;
    let np = 2 * map.num_darts();
    let mut inner = vec![End::Open; np];
    let mut outer = vec![End::Open; np];
    let mut raw = Raw::default();
    for v in 0..map.num_vertices() {
        let deg = map.degree(v);
        let h = |k: usize| map.dart(v, k % deg);
        if d.kind(v) == &VertexKind::Crossing {
            let base = raw.vertices.len();
            for k in 0..4 {
                let angles = [
                    Angle::Image(regions.left_of_dart[h(k)]),
                    Angle::Strip(h(k + 1)),
                    Angle::Quad(v),
                    Angle::Strip(h(k)),
                ];
                let name = format!("{}:{k}", d.vertices()[v].name);
                raw.push(
                    name,
                    VertexTag::Corner {
                        vertex: v,
                        corner: k,
                    },
                    angles,
                );
                inner[left(h(k))] = End::At((base + k, 0));
                inner[right(h(k + 1))] = End::At((base + k, 1));
                raw.pairs.push(((base + k, 2), (base + (k + 1) % 4, 3)));
            }
        } else {
            for k in 0..deg {
                inner[left(h(k))] = End::Inner(right(h(k + 1)));
                inner[right(h(k + 1))] = End::Inner(left(h(k)));
            }
        }
    }
    for (e, edge) in d.edges().iter().enumerate() {
        let (h, h2) = map.edge_darts(e);
        if has_midpoint(d, e, suppressed) {
            let angles = [
                Angle::Image(regions.left_of_dart[h]),
                Angle::Strip(h),
                Angle::Image(regions.left_of_dart[h2]),
                Angle::Strip(h2),
            ];
            let m = raw.push(
                format!("{}:m", edge.name),
                VertexTag::Midpoint { edge: e },
                angles,
            );
            outer[right(h2)] = End::At((m, 0));
            outer[left(h)] = End::At((m, 1));
            outer[right(h)] = End::At((m, 2));
            outer[left(h2)] = End::At((m, 3));
        } else {
            outer[left(h)] = End::Outer(right(h2));
            outer[right(h2)] = End::Outer(left(h));
            outer[right(h)] = End::Outer(left(h2));
            outer[left(h2)] = End::Outer(right(h));
        }
    }
    let mut located = std::collections::BTreeMap::new();
    for p in 0..np {
        if let End::At(s) = inner[p] {
            located.insert(s, (p, true));
        }
        if let End::At(s) = outer[p] {
            located.insert(s, (p, false));
        }
    }
    let mut visited = vec![false; np];
    let mut partner = std::collections::BTreeMap::new();
    for (&s, &(p0, at_inner0)) in &located {
        let (mut p, mut at_inner) = (p0, at_inner0);
        let t = loop {
            visited[p] = true;
            match if at_inner { outer[p] } else { inner[p] } {
                End::At(t) => break t,
                End::Inner(q) => (p, at_inner) = (q, true),
                End::Outer(q) => (p, at_inner) = (q, false),
                End::Open => unreachable!("every port end is joined"),
            }
        };
        partner.insert(s, t);
    }
    for (&s, &t) in &partner {
        if s < t {
            raw.pairs.push((s, t));
        }
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::Invalid(
            "a component of the doubled curve has no crossing".into(),
        ));
    }
    Ok(raw)
}

/// A doubled curve with provenance and an orientation of every component.
#[derive(Debug, Clone)]
pub struct OrientedDivide {
    /// The divide that was doubled.
    pub base: Divide,
    pub base_regions: Regions,
    pub coloring: Option<Coloring>,
    /// Base edges without an added crossing although they touch no endpoint.
    pub suppressed: Vec<usize>,
    /// The doubled curve; all of its vertices are crossings.
    pub curve: Divide,
    pub vertex_tags: Vec<VertexTag>,
    pub faces: Faces,
    pub face_tags: Vec<FaceTag>,
    /// Orientation of each strand of `curve` relative to its traced darts.
    pub forward: Vec<bool>,
}

impl OrientedDivide {
    pub fn map(&self) -> &PlanarMap {
        self.curve.map()
    }

    /// Whether face `f` is the image of a region meeting the surface boundary.
    pub fn is_outside(&self, f: usize) -> bool {
        self.face_tags[f] == FaceTag::Outside
    }

    /// Whether dart `x` of the curve points along the orientation.
    pub fn along(&self, x: usize) -> bool {
        let sod = self.curve.strand_of_dart();
        let s = sod[x];
        self.curve.strands()[s].darts.contains(&x) == self.forward[s]
    }

    /// `along` for every dart.
    pub fn along_all(&self) -> Vec<bool> {
        let map = self.map();
        let mut out = vec![false; map.num_darts()];
        for (s, strand) in self.curve.strands().iter().enumerate() {
            for &x in &strand.darts {
                out[x] = self.forward[s];
                out[map.twin(x)] = !self.forward[s];
            }
        }
        out
    }

    /// Number of vertices of the doubled curve.
    pub fn crossings(&self) -> usize {
        self.map().num_vertices()
    }

    pub fn count(&self, name: &str) -> usize {
        self.face_tags.iter().filter(|t| t.name() == name).count()
    }
}

/// Turns the raw doubled curve into a divide and labels its faces.
pub(crate) fn assemble(
    d: &Divide,
    regions: &Regions,
    suppressed: &[usize],
    raw: Raw,
) -> Result<(Divide, Faces, Vec<FaceTag>)> {
    let edges = raw
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &ends)| crate::divide::Edge {
            name: format!("q{}", i + 1),
            ends,
        })
        .collect();
    let curve = Divide::new(d.boundary_circles(), raw.vertices, edges)?;
    let map = curve.map();
    let faces = map.faces();
    let resolve = |a: Angle| -> FaceTag {
        match a {
            Angle::Image(region) if regions.regions[region].outside => FaceTag::Outside,
            Angle::Image(region) => FaceTag::Image { region },
            Angle::Quad(vertex) => FaceTag::Quad { vertex },
            Angle::Finger => FaceTag::Finger,
            Angle::Strip(h) => {
                let edge = d.map().edge(h);
                if has_midpoint(d, edge, suppressed) {
                    let end = if d.map().edge_darts(edge).0 == h {
                        0
                    } else {
                        1
                    };
                    FaceTag::Triangle { edge, end }
                } else if d.edge_touches_endpoint(edge) {
                    FaceTag::Bigon { edge }
                } else {
                    FaceTag::Strip { edge }
                }
            }
        }
    };
    let mut tags: Vec<Option<FaceTag>> = vec![None; faces.walks.len()];
    for (v, angles) in raw.angles.iter().enumerate() {
        for (i, &a) in angles.iter().enumerate() {
            let f = faces.face_of[map.dart(v, i)];
            let t = resolve(a);
            tags[f] = match (tags[f], t) {
                (None, t) => Some(t),
                (Some(s), t) if s == t => Some(s),
                // a strip pinched by its own added crossing
                (Some(FaceTag::Triangle { edge, .. }), FaceTag::Triangle { edge: e2, .. })
                    if edge == e2 =>
                {
                    Some(FaceTag::Strip { edge })
                }
                (Some(FaceTag::Strip { edge }), FaceTag::Triangle { edge: e2, .. })
                    if edge == e2 =>
                {
                    Some(FaceTag::Strip { edge })
                }
                (Some(s), t) => {
                    return Err(Error::Invalid(format!(
                        "face {f} has provenance {s:?} and {t:?}"
                    )));
                }
            };
        }
    }
    let tags = tags
        .into_iter()
        .enumerate()
        .map(|(f, t)| t.ok_or(Error::MissingProvenance(f)))
        .collect::<Result<_>>()?;
    Ok((curve, faces, tags))
}

/// Direction of base edge `e` relative to its first dart, keeping white on
/// the left and black on the right. `None` when both sides are outside.
pub fn edge_direction(
    d: &Divide,
    regions: &Regions,
    coloring: &Coloring,
    e: usize,
) -> Option<bool> {
    let (h, h2) = d.map().edge_darts(e);
    let (l, r) = (
        coloring.colors[regions.left_of_dart[h]],
        coloring.colors[regions.left_of_dart[h2]],
    );
    match (l, r) {
        (Some(Color::White), _) | (_, Some(Color::Black)) => Some(true),
        (Some(Color::Black), _) | (_, Some(Color::White)) => Some(false),
        _ => None,
    }
}

/// Orients every strand of the curve so that triangles nearer the tail of
/// their edge lie on the left of their boundary and the others on the right.
fn orient_by_triangles(
    d: &Divide,
    regions: &Regions,
    coloring: &Coloring,
    curve: &Divide,
    faces: &Faces,
    tags: &[FaceTag],
) -> Result<Vec<bool>> {
    let map = curve.map();
    let sod = curve.strand_of_dart();
    let mut on_strand = vec![false; map.num_darts()];
    for s in curve.strands() {
        for &x in &s.darts {
            on_strand[x] = true;
        }
    }
    let mut forward: Vec<Option<bool>> = vec![None; curve.strands().len()];
    for (f, walk) in faces.walks.iter().enumerate() {
        let FaceTag::Triangle { edge, end } = tags[f] else {
            continue;
        };
        let Some(dir) = edge_direction(d, regions, coloring, edge) else {
            continue;
        };
        let positive = end == if dir { 0 } else { 1 };
        for &x in walk {
            let s = sod[x];
            let want = on_strand[x] == positive;
            match forward[s] {
                None => forward[s] = Some(want),
                Some(w) if w != want => {
                    return Err(Error::NonOrientable(format!(
                        "triangles disagree along strand {s}"
                    )));
                }
                _ => {}
            }
        }
    }
    Ok(forward.into_iter().map(|f| f.unwrap_or(true)).collect())
}

/// Doubles an admissible divide using its canonical checkerboard coloring.
pub fn double(d: &Divide) -> Result<OrientedDivide> {
    let coloring = checkerboard(d)?;
    double_colored(d, &coloring)
}

/// Doubles an admissible divide with a given coloring of its inside regions.
pub fn double_colored(d: &Divide, coloring: &Coloring) -> Result<OrientedDivide> {
    let report = d.check_admissibility()?;
    if !report.admissible() {
        let names: Vec<&str> = report.violations().map(|c| c.name).collect();
        return Err(Error::NotAdmissible(names.join(", ")));
    }
    let regions = d.regions()?;
    let raw = raw_double(d, &regions, &[])?;
    let (curve, faces, face_tags) = assemble(d, &regions, &[], raw.clone())?;
    let forward = orient_by_triangles(d, &regions, coloring, &curve, &faces, &face_tags)?;
    Ok(OrientedDivide {
        base: d.clone(),
        base_regions: regions,
        coloring: Some(coloring.clone()),
        suppressed: Vec::new(),
        curve,
        vertex_tags: raw.tags,
        faces,
        face_tags,
        forward,
    })
}

/// Pushes a finger of curve dart `x` across curve dart `y` through the face
/// on the left of both, creating two crossings and a bigon between them.
pub(crate) fn finger_move(raw: &Raw, map: &PlanarMap, x: usize, y: usize) -> Raw {
    let at = |d: usize| (map.vertex(d), map.slot(d));
    let (p, q) = (at(x), at(map.twin(x)));
    let (r, s) = (at(y), at(map.twin(y)));
    let f = raw.angles[p.0][p.1];
    let h = raw.angles[s.0][s.1];
    let b = raw.angles[q.0][q.1];
    let (ex, ey) = (map.edge(x), map.edge(y));
    let mut out = raw.clone();
    out.pairs = raw
        .pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != ex && i != ey)
        .map(|(_, &pr)| pr)
        .collect();
    let x1 = out.push(
        "finger:1".into(),
        VertexTag::Finger,
        [Angle::Finger, h, f, b],
    );
    let x2 = out.push(
        "finger:2".into(),
        VertexTag::Finger,
        [h, Angle::Finger, b, f],
    );
    out.pairs.extend([
        (p, (x1, 3)),
        ((x1, 1), (x2, 1)),
        ((x2, 3), q),
        (r, (x2, 0)),
        ((x2, 2), (x1, 0)),
        ((x1, 2), s),
    ]);
    out
}

/// Removes the bigon `face` by pulling its two edges apart, deleting both of
/// its vertices. The faces touching the bigon only at its vertices merge and
/// lose their provenance. `None` when the bigon is not a simple one.
pub(crate) fn retract(raw: &Raw, map: &PlanarMap, faces: &Faces, face: usize) -> Option<Raw> {
    let [u, w] = faces.walks[face][..] else {
        return None;
    };
    let (a, b) = (map.vertex(u), map.vertex(w));
    if a == b || map.head(u) != b || map.head(w) != a {
        return None;
    }
    let across = |z: usize| map.twin(map.dart(map.vertex(z), (map.slot(z) + 2) % 4));
    let mut joins = Vec::new();
    for z in [u, w] {
        let (s, t) = (across(z), across(map.twin(z)));
        if [s, t].iter().any(|&x| [a, b].contains(&map.vertex(x))) {
            return None;
        }
        joins.push(((map.vertex(s), map.slot(s)), (map.vertex(t), map.slot(t))));
    }
    let merged = [(a, u), (b, w)].map(|(v, z)| faces.face_of[map.dart(v, (map.slot(z) + 2) % 4)]);
    let keep: Vec<usize> = (0..raw.vertices.len())
        .filter(|&v| v != a && v != b)
        .collect();
    let mut index = vec![usize::MAX; raw.vertices.len()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let re = |(v, s): Slot| (index[v], s);
    let mut out = Raw::default();
    for &v in &keep {
        let mut angles = raw.angles[v];
        for (i, x) in angles.iter_mut().enumerate() {
            if merged.contains(&faces.face_of[map.dart(v, i)]) {
                *x = Angle::Finger;
            }
        }
        out.vertices.push(raw.vertices[v].clone());
        out.tags.push(raw.tags[v]);
        out.angles.push(angles);
    }
    out.pairs = raw
        .pairs
        .iter()
        .chain(&joins)
        .filter(|(x, y)| ![x.0, y.0].iter().any(|v| *v == a || *v == b))
        .map(|&(x, y)| (re(x), re(y)))
        .collect();
    Some(out)
}

/// Every orientation of the strands of `curve`.
fn orientations(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1usize << n).map(move |m| (0..n).map(|i| m >> i & 1 == 0).collect())
}

/// All deformed doublings of a free divide: the half circle at the free
/// endpoint is pushed across each edge of either face beside it, and the
/// result is taken with every orientation of its components.
pub fn free_candidates(d: &Divide, fc: &FreeCase) -> Result<Vec<OrientedDivide>> {
    let (free, c) = match *fc {
        FreeCase::Neither { .. } => return Err(Error::NeitherCase),
        FreeCase::Case1 { free, c, .. } | FreeCase::Case2 { free, c, .. } => (free, c),
    };
    let regions = d.regions()?;
    let suppressed = fc.suppressed_edges();
    let raw = raw_double(d, &regions, &suppressed)?;
    let (curve, faces, tags) = assemble(d, &regions, &suppressed, raw.clone())?;
    let ef = d.map().edge(d.map().dart(free, 0));
    let bigon = tags
        .iter()
        .position(|t| *t == FaceTag::Bigon { edge: ef })
        .ok_or_else(|| Error::NotFreeDivide("no half circle at the free endpoint".into()))?;
    let map = curve.map();
    let hc = *faces.walks[bigon]
        .iter()
        .find(|&&x| map.slot(x) < 2)
        .ok_or_else(|| Error::NotFreeDivide("no half circle at the free endpoint".into()))?;
    let mut out = Vec::new();
    let coloring = checkerboard_with(d, &regions, Some(c)).ok();
    let mut push = |curve: &Divide, faces: &Faces, face_tags: &[FaceTag], tags: &[VertexTag]| {
        let forwards: Vec<Vec<bool>> = match coloring
            .as_ref()
            .map(|c| orient_by_triangles(d, &regions, c, curve, faces, face_tags))
        {
            Some(Ok(f)) => vec![f],
            _ => orientations(curve.strands().len()).collect(),
        };
        for forward in forwards {
            out.push(OrientedDivide {
                base: d.clone(),
                base_regions: regions.clone(),
                coloring: coloring.clone(),
                suppressed: suppressed.clone(),
                curve: curve.clone(),
                vertex_tags: tags.to_vec(),
                faces: faces.clone(),
                face_tags: face_tags.to_vec(),
                forward,
            });
        }
    };
    if let Some(pulled) = retract(&raw, map, &faces, bigon) {
        if let Ok((curve, faces, face_tags)) = assemble(d, &regions, &suppressed, pulled.clone()) {
            push(&curve, &faces, &face_tags, &pulled.tags);
        }
    }
    for x in [hc, map.twin(hc)] {
        for &y in &faces.walks[faces.face_of[x]] {
            if map.edge(y) == map.edge(x) {
                continue;
            }
            let moved = finger_move(&raw, map, x, y);
            let Ok((curve, faces, face_tags)) = assemble(d, &regions, &suppressed, moved.clone())
            else {
                continue;
            };
            push(&curve, &faces, &face_tags, &moved.tags);
        }
    }
    Ok(out)
}

/// Doubles a free divide, keeping the first deformation that carries an
/// LF-structure.
pub fn double_free(d: &Divide, fc: &FreeCase) -> Result<OrientedDivide> {
    for od in free_candidates(d, fc)? {
        let sp = crate::shadow::build_polyhedron(&od, crate::shadow::CONVENTION);
        if crate::lf::find_lf(&sp).is_ok() {
            return Ok(od);
        }
    }
    Err(Error::NoValidDeformation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{chebyshev, torus_2};
    use crate::io::parse;

    #[test]
    fn trefoil_counts() {
        let od = double(&chebyshev(2, 3)).unwrap();
        assert_eq!(od.crossings(), 5);
        assert_eq!(od.count("bigon"), 2);
        assert_eq!(od.count("triangle"), 2);
        assert_eq!(od.count("quad"), 1);
        assert_eq!(od.curve.strands().len(), 1);
        assert!(od.curve.strands().iter().all(|s| s.closed));
    }

    #[test]
    fn bare_circle_is_a_limacon() {
        let od = double(&parse("surface planar n=1\nedge o loop\n").unwrap()).unwrap();
        assert_eq!(od.crossings(), 1);
        assert_eq!(od.count("bigon"), 0);
        assert_eq!(od.count("strip"), 1);
        assert_eq!(od.count("region"), 1);
        assert_eq!(od.count("outside"), 1);
    }

    #[test]
    fn crossing_count_law() {
        for d in [
            chebyshev(2, 3),
            torus_2(2),
            torus_2(3),
            chebyshev(3, 4),
            chebyshev(3, 5),
        ] {
            let internal = (0..d.edges().len())
                .filter(|&e| !d.edge_touches_endpoint(e))
                .count();
            let od = double(&d).unwrap();
            assert_eq!(od.crossings(), 4 * d.double_points() + internal);
            od.curve.map().check_planar().unwrap();
        }
    }

    #[test]
    fn snake_regions_share_color() {
        let d = torus_2(2);
        let c = checkerboard(&d).unwrap();
        let mut inside: Vec<Color> = c.colors.iter().flatten().copied().collect();
        inside.sort_by_key(|c| *c == Color::Black);
        // the loop and the lens are opposite at a double point
        assert_eq!(inside, [Color::White, Color::White]);
        let c = checkerboard(&chebyshev(3, 4)).unwrap();
        assert!(c.colors.contains(&Some(Color::Black)));
    }

    #[test]
    fn non_admissible_is_refused() {
        let text = "surface planar n=1\nedge a loop\nedge b loop\n";
        assert!(matches!(
            double(&parse(text).unwrap()),
            Err(Error::NotAdmissible(_))
        ));
    }
}
