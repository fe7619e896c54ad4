//! LF-structures: ordered gleam -1 disks whose removal leaves the fiber.
//!
//! The polyhedron is first collapsed from the surface boundary: the faces
//! meeting the boundary go away and every face sharing an edge with them
//! becomes part of a boundary region. What remains of the plane faces and
//! the annuli, minus the disks, is the fiber surface.

use std::fmt;

use crate::divide::{Check, Divide, FreeCase, VertexKind};
use crate::doubling::{double, double_free, Color, FaceTag};
use crate::error::{Error, Result};
use crate::shadow::{build_polyhedron, ShadowedPolyhedron, CONVENTION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Max,
    Saddle,
    Min,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::Max, Class::Saddle, Class::Min];

    pub fn name(self) -> &'static str {
        match self {
            Class::Max => "max",
            Class::Saddle => "saddle",
            Class::Min => "min",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Disk {
    pub face: usize,
    pub class: Class,
}

/// The result of collapsing from the surface boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapsed {
    /// Faces removed by the collapse.
    pub removed: Vec<bool>,
    /// Faces that remain internal regions.
    pub internal: Vec<bool>,
}

/// Removes the faces meeting the surface boundary, smallest face first.
/// Faces sharing an edge with a removed face lose their internal status.
pub fn collapse(sp: &ShadowedPolyhedron) -> Collapsed {
    collapse_in_order(sp, 0..sp.od.faces.walks.len())
}

/// Elementary collapses offered in the given face order. A face goes when
/// it still has a free edge, which only faces meeting the surface boundary
/// have; the walls keep every other edge covered.
pub fn collapse_in_order(
    sp: &ShadowedPolyhedron,
    order: impl IntoIterator<Item = usize>,
) -> Collapsed {
    let od = &sp.od;
    let map = od.map();
    let n = od.faces.walks.len();
    let mut removed = vec![false; n];
    for f in order {
        removed[f] |= od.is_outside(f);
    }
    let mut internal: Vec<bool> = (0..n)
        .map(|f| sp.regions[f].internal && !removed[f])
        .collect();
    for x in 0..map.num_darts() {
        let (f, g) = (od.faces.face_of[x], od.faces.face_of[map.twin(x)]);
        if removed[g] {
            internal[f] = false;
        }
    }
    Collapsed { removed, internal }
}

#[derive(Debug, Clone)]
pub struct LfStructure {
    pub sp: ShadowedPolyhedron,
    pub collapsed: Collapsed,
    /// Disks in order.
    pub disks: Vec<Disk>,
    /// Orientation sign of the fiber under which condition (iv) holds.
    pub epsilon: i64,
    pub checks: Vec<Check>,
}

impl LfStructure {
    /// Faces of the doubled curve that belong to the fiber surface.
    pub fn kept(&self) -> Vec<bool> {
        kept_faces(&self.collapsed, &self.disks)
    }
}

fn kept_faces(c: &Collapsed, disks: &[Disk]) -> Vec<bool> {
    let mut kept: Vec<bool> = c.removed.iter().map(|r| !r).collect();
    for d in disks {
        kept[d.face] = false;
    }
    kept
}

/// Doubled contribution at a crossing of two disk boundaries.
fn contribution(a: Class, b: Class) -> i64 {
    match (a, b) {
        (Class::Max, Class::Min) | (Class::Min, Class::Max) => -1,
        _ => 1,
    }
}

/// Condition (iv): recomputes the gleam of every internal region of the
/// fiber from crossings of disk boundaries. Returns the faces that disagree
/// under orientation sign `epsilon`.
pub fn condition_iv_mismatches(
    sp: &ShadowedPolyhedron,
    c: &Collapsed,
    disks: &[Disk],
    epsilon: i64,
) -> Vec<usize> {
    let od = &sp.od;
    let map = od.map();
    let mut class = vec![None; od.faces.walks.len()];
    for d in disks {
        class[d.face] = Some(d.class);
    }
    let mut bad = Vec::new();
    for (f, walk) in od.faces.walks.iter().enumerate() {
        if !c.internal[f] || class[f].is_some() {
            continue;
        }
        let mut sum = 0;
        for &x in walk {
            let v = map.vertex(x);
            let i = map.slot(x);
            let next = od.faces.face_of[map.dart(v, (i + 1) % 4)];
            let prev = od.faces.face_of[map.dart(v, (i + 3) % 4)];
            if let (Some(a), Some(b)) = (class[next], class[prev]) {
                if next != prev {
                    sum += epsilon * contribution(a, b);
                }
            }
        }
        if Some(sum) != sp.regions[f].gleam.map(|g| g.0) {
            bad.push(f);
        }
    }
    bad
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Verifies conditions (i) to (v) for an ordered disk list. Returns the
/// checks and the orientation sign that satisfies (iv), if any.
pub fn verify(sp: &ShadowedPolyhedron, c: &Collapsed, disks: &[Disk]) -> (Vec<Check>, Option<i64>) {
    let od = &sp.od;
    let map = od.map();
    let mut checks = Vec::new();
    let removed = c.removed.iter().filter(|&&r| r).count();
    checks.push(check(
        "i",
        true,
        format!("collapsed {removed} boundary faces"),
    ));

    let mut is_disk = vec![false; od.faces.walks.len()];
    for d in disks {
        is_disk[d.face] = true;
    }
    let mut shared = Vec::new();
    for e in 0..map.num_edges() {
        let (x, y) = map.edge_darts(e);
        let (f, g) = (od.faces.face_of[x], od.faces.face_of[y]);
        if is_disk[f] && is_disk[g] {
            shared.push(e);
        }
    }
    checks.push(check("ii", shared.is_empty(), list("edges", &shared)));

    let kept = kept_faces(c, disks);
    let surface = crate::fibration::fiber_complex(od, &kept);
    let detail = match &surface {
        Ok(s) => format!(
            "chi={} genus={} boundary={}",
            s.euler(),
            s.genus(),
            s.boundary_components
        ),
        Err(e) => e.to_string(),
    };
    checks.push(check("iii", surface.is_ok(), detail));

    let mut epsilon = None;
    let mut best: Option<Vec<usize>> = None;
    for eps in [1, -1] {
        let bad = condition_iv_mismatches(sp, c, disks, eps);
        if bad.is_empty() {
            epsilon = Some(eps);
            break;
        }
        if best.as_ref().is_none_or(|b| bad.len() < b.len()) {
            best = Some(bad);
        }
    }
    let detail = match epsilon {
        Some(e) => format!("orientation={}", if e > 0 { "+" } else { "-" }),
        None => list("regions", &best.unwrap_or_default()),
    };
    checks.push(check("iv", epsilon.is_some(), detail));

    let not_minus_one: Vec<usize> = disks
        .iter()
        .filter(|d| !c.internal[d.face] || sp.regions[d.face].gleam.map(|g| g.0) != Some(-2))
        .map(|d| d.face)
        .collect();
    checks.push(check(
        "v",
        not_minus_one.is_empty(),
        list("regions", &not_minus_one),
    ));

    let mut touching = Vec::new();
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            if a.class == b.class && share_vertex(sp, a.face, b.face) {
                touching.push(a.face);
                touching.push(b.face);
            }
        }
    }
    touching.sort();
    touching.dedup();
    checks.push(check(
        "class-disjoint",
        touching.is_empty(),
        list("regions", &touching),
    ));
    (checks, epsilon)
}

fn share_vertex(sp: &ShadowedPolyhedron, f: usize, g: usize) -> bool {
    let map = sp.od.map();
    let vs = |f: usize| -> Vec<usize> {
        sp.od.faces.walks[f]
            .iter()
            .map(|&x| map.vertex(x))
            .collect()
    };
    let a = vs(f);
    vs(g).iter().any(|v| a.contains(v))
}

fn list(what: &str, ids: &[usize]) -> String {
    if ids.is_empty() {
        return String::new();
    }
    let s: Vec<String> = ids.iter().map(ToString::to_string).collect();
    format!("{what}={}", s.join(","))
}

fn finish(sp: &ShadowedPolyhedron, c: Collapsed, disks: Vec<Disk>) -> Result<LfStructure> {
    let (checks, epsilon) = verify(sp, &c, &disks);
    if let Some(bad) = checks.iter().find(|k| !k.passed) {
        return Err(Error::NoLfStructure {
            condition: bad.name,
            detail: bad.detail.clone(),
        });
    }
    Ok(LfStructure {
        sp: sp.clone(),
        collapsed: c,
        disks,
        epsilon: epsilon.unwrap(),
        checks,
    })
}

/// Sorts disks by class, then by face.
pub fn class_sorted(mut disks: Vec<Disk>) -> Vec<Disk> {
    disks.sort_by_key(|d| (d.class, d.face));
    disks
}

/// Disks read off the doubling: white regions are maxima, quadrilaterals
/// saddles and black regions minima.
pub fn provenance_disks(sp: &ShadowedPolyhedron) -> Option<Vec<Disk>> {
    let coloring = sp.od.coloring.as_ref()?;
    let mut disks = Vec::new();
    for (f, t) in sp.od.face_tags.iter().enumerate() {
        let class = match *t {
            FaceTag::Image { region } => match coloring.colors[region]? {
                Color::White => Class::Max,
                Color::Black => Class::Min,
            },
            FaceTag::Quad { .. } => Class::Saddle,
            _ => continue,
        };
        disks.push(Disk { face: f, class });
    }
    Some(class_sorted(disks))
}

/// Finds an LF-structure on a collapsed polyhedron: from provenance when
/// the polyhedron comes from a divide, by search otherwise.
pub fn find_lf(sp: &ShadowedPolyhedron) -> Result<LfStructure> {
    let c = collapse(sp);
    if let Some(disks) = provenance_disks(sp) {
        return finish(sp, c, disks);
    }
    let all = search_lf(sp, 1)?;
    Ok(all.into_iter().next().unwrap())
}

/// Disk sets that make every boundary-adjacent face a fiber face and take
/// exactly one side of every other edge between surviving faces.
pub fn disk_sets(sp: &ShadowedPolyhedron, c: &Collapsed) -> Vec<Vec<usize>> {
    let od = &sp.od;
    let map = od.map();
    let n = od.faces.walks.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut forced = vec![false; n];
    for x in 0..map.num_darts() {
        let (f, g) = (od.faces.face_of[x], od.faces.face_of[map.twin(x)]);
        if c.removed[f] {
            continue;
        }
        if c.removed[g] || f == g {
            forced[f] = true;
        } else {
            adj[f].push(g);
        }
    }
    // side[f]: true for disks
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut free = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if c.removed[s] || side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let f = comp[i];
            i += 1;
            for &g in &adj[f] {
                match side[g] {
                    None => {
                        side[g] = Some(!side[f].unwrap());
                        comp.push(g);
                    }
                    Some(x) if x == side[f].unwrap() => return Vec::new(),
                    _ => {}
                }
            }
        }
        let pinned = |want: bool| comp.iter().any(|&f| forced[f] && side[f] == Some(want));
        match (pinned(false), pinned(true)) {
            (true, true) => return Vec::new(),
            (false, true) => {
                for &f in &comp {
                    side[f] = side[f].map(|x| !x);
                }
            }
            (false, false) => free.push(comps.len()),
            _ => {}
        }
        comps.push(comp);
    }
    let mut out = Vec::new();
    for mask in 0..1usize << free.len() {
        let mut s = side.clone();
        for (b, &k) in free.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for &f in &comps[k] {
                    s[f] = s[f].map(|x| !x);
                }
            }
        }
        out.push((0..n).filter(|&f| s[f] == Some(true)).collect());
    }
    out
}

/// All LF-structures found by search, class-sorted, up to `limit` of them.
/// A limit of zero means no limit.
pub fn search_lf(sp: &ShadowedPolyhedron, limit: usize) -> Result<Vec<LfStructure>> {
    let c = collapse(sp);
    let mut found = Vec::new();
    let mut last_err = Error::NoLfStructure {
        condition: "ii",
        detail: "no disk set separates the fiber".into(),
    };
    for set in disk_sets(sp, &c) {
        let trial: Vec<Disk> = set
            .iter()
            .map(|&face| Disk {
                face,
                class: Class::Saddle,
            })
            .collect();
        let (checks, _) = verify(sp, &c, &trial);
        if let Some(bad) = checks
            .iter()
            .find(|k| !k.passed && matches!(k.name, "ii" | "iii" | "v"))
        {
            last_err = Error::NoLfStructure {
                condition: bad.name,
                detail: bad.detail.clone(),
            };
            continue;
        }
        let k = set.len();
        for code in 0..3usize.pow(k as u32) {
            let mut x = code;
            let disks: Vec<Disk> = set
                .iter()
                .map(|&face| {
                    let class = Class::ALL[x % 3];
                    x /= 3;
                    Disk { face, class }
                })
                .collect();
            match finish(sp, c.clone(), class_sorted(disks)) {
                Ok(lf) => {
                    found.push(lf);
                    if found.len() == limit {
                        return Ok(found);
                    }
                }
                Err(e) => last_err = e,
            }
        }
    }
    if found.is_empty() {
        return Err(last_err);
    }
    Ok(found)
}

/// Order for the second case of free divides: the saddle on face `r2` is
/// moved between the first two maxima.
pub fn case2_order(disks: &[Disk], r2: usize) -> Option<Vec<Disk>> {
    let saddle = *disks
        .iter()
        .find(|d| d.face == r2 && d.class == Class::Saddle)?;
    let maxima: Vec<Disk> = disks
        .iter()
        .filter(|d| d.class == Class::Max)
        .take(2)
        .copied()
        .collect();
    if maxima.len() < 2 {
        return None;
    }
    let head = [maxima[0], saddle, maxima[1]];
    Some(
        head.iter()
            .chain(disks.iter().filter(|d| !head.contains(d)))
            .copied()
            .collect(),
    )
}

/// Finds the LF-structure of a doubled free divide, in the order its case
/// prescribes.
pub fn find_lf_free(sp: &ShadowedPolyhedron, fc: &FreeCase) -> Result<LfStructure> {
    let mut lf = find_lf(sp)?;
    if let FreeCase::Case2 { c, .. } = *fc {
        let r2 = sp
            .od
            .face_tags
            .iter()
            .position(|t| *t == FaceTag::Quad { vertex: c });
        if let Some(order) = r2.and_then(|f| case2_order(&lf.disks, f)) {
            lf.disks = order;
        }
    }
    Ok(lf)
}

/// The whole pipeline from a divide to a verified LF-structure. Free
/// divides go through `classify_free_as(force)` and the deformation.
pub fn lf_of_divide(d: &Divide, force: Option<u8>) -> Result<LfStructure> {
    if !d.vertices().iter().any(|v| v.kind == VertexKind::Free) {
        let report = d.check_admissibility()?;
        if let Some(c) = report.violations().next() {
            return Err(Error::NotAdmissible(format!("{} {}", c.name, c.detail)));
        }
        return find_lf(&build_polyhedron(&double(d)?, CONVENTION));
    }
    let fc = d.classify_free_as(force)?;
    if let FreeCase::Neither { .. } = fc {
        return Err(Error::NeitherCase);
    }
    find_lf_free(&build_polyhedron(&double_free(d, &fc)?, CONVENTION), &fc)
}

impl fmt::Display for LfStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "orientation {}",
            if self.epsilon > 0 { "+" } else { "-" }
        )?;
        for (i, d) in self.disks.iter().enumerate() {
            let g = self.sp.regions[d.face].gleam.unwrap();
            writeln!(
                f,
                "D{} region={} class={} gleam={g}",
                i + 1,
                d.face,
                d.class.name()
            )?;
        }
        for k in &self.checks {
            let status = if k.passed { "pass" } else { "fail" };
            write!(f, "condition {} {status}", k.name)?;
            if !k.detail.is_empty() {
                write!(f, " {}", k.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::double;
    use crate::geometry::{chebyshev, torus_2};
    use crate::shadow::{build_polyhedron, Gleam, CONVENTION};

    fn polyhedron(d: &crate::divide::Divide) -> ShadowedPolyhedron {
        build_polyhedron(&double(d).unwrap(), CONVENTION)
    }

    #[test]
    fn count_identity() {
        for d in [chebyshev(2, 3), torus_2(4), chebyshev(3, 4)] {
            let lf = find_lf(&polyhedron(&d)).unwrap();
            let inside = d.regions().unwrap().num_inside();
            assert_eq!(lf.disks.len(), d.double_points() + inside);
        }
    }

    #[test]
    fn search_agrees_with_provenance() {
        let sp = polyhedron(&chebyshev(2, 3));
        let found = search_lf(&sp, 0).unwrap();
        let given = find_lf(&sp).unwrap();
        assert!(found.iter().any(|lf| lf.disks == given.disks));
        for lf in &found {
            assert_eq!(lf.disks.len(), 2);
        }
    }

    #[test]
    fn corrupted_gleam_fails_condition_iv() {
        let mut sp = polyhedron(&chebyshev(3, 4));
        let lf = find_lf(&sp).unwrap();
        let c = collapse(&sp);
        let f = (0..sp.regions.len())
            .find(|&f| c.internal[f] && !lf.disks.iter().any(|d| d.face == f))
            .unwrap();
        sp.regions[f].gleam = sp.regions[f].gleam.map(|g| g + Gleam(2));
        let (checks, eps) = verify(&sp, &c, &lf.disks);
        assert_eq!(eps, None);
        let iv = checks.iter().find(|k| k.name == "iv").unwrap();
        assert!(!iv.passed);
        assert!(iv
            .detail
            .split('=')
            .nth(1)
            .unwrap()
            .split(',')
            .any(|x| x == f.to_string()));
    }
}
