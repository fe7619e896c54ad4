//! Shadowed polyhedra of oriented divides and their gleams.
//!
//! The polyhedron is the surface with one annulus attached along every
//! component of the doubled curve. Its regions are the faces of the curve
//! plus the annuli; faces meeting the surface boundary and the annuli are
//! boundary regions.

use std::fmt;

use crate::doubling::{FaceTag, OrientedDivide};
use crate::error::{Error, Result};

/// A half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gleam(pub i64);

impl Gleam {
    pub const HALF: Gleam = Gleam(1);
    pub const ZERO: Gleam = Gleam(0);
    pub const MINUS_ONE: Gleam = Gleam(-2);

    pub fn doubled(self) -> i64 {
        self.0
    }
}

impl std::ops::Add for Gleam {
    type Output = Gleam;
    fn add(self, o: Gleam) -> Gleam {
        Gleam(self.0 + o.0)
    }
}

impl fmt::Display for Gleam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Sign pattern of the local contribution at a crossing. Quadrants between
/// one incoming and one outgoing ray always contribute +1/2; the quadrant
/// between the two outgoing rays and the one between the two incoming rays
/// contribute opposite halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Outgoing pair +1/2, incoming pair -1/2.
    OutPositive,
    /// Outgoing pair -1/2, incoming pair +1/2.
    InPositive,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::OutPositive, Convention::InPositive];

    /// Doubled contribution of the quadrant between two rays.
    pub fn contribution(self, first_out: bool, second_out: bool) -> i64 {
        match (first_out, second_out, self) {
            (true, true, Convention::OutPositive) | (false, false, Convention::InPositive) => 1,
            (true, true, _) | (false, false, _) => -1,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::OutPositive => "out-positive",
            Convention::InPositive => "in-positive",
        }
    }
}

/// The frozen crossing convention used by every report.
pub const CONVENTION: Convention = Convention::OutPositive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowRegion {
    /// Face of the doubled curve.
    pub face: usize,
    pub tag: FaceTag,
    pub internal: bool,
    pub euler: i64,
    /// Corners of the face at true vertices.
    pub corners: usize,
    pub gleam: Option<Gleam>,
}

#[derive(Debug, Clone)]
pub struct ShadowedPolyhedron {
    pub od: OrientedDivide,
    pub convention: Convention,
    /// One region per face of the doubled curve, indexed by face.
    pub regions: Vec<ShadowRegion>,
    /// Number of attached annuli, one per component of the curve.
    pub annuli: usize,
}

/// Builds the polyhedron and computes gleams from crossing contributions.
pub fn build_polyhedron(od: &OrientedDivide, convention: Convention) -> ShadowedPolyhedron {
    let map = od.map();
    let along = od.along_all();
    let regions = od
        .faces
        .walks
        .iter()
        .enumerate()
        .map(|(f, walk)| {
            let internal = !od.is_outside(f);
            let euler = 1;
            let sum: i64 = walk
                .iter()
                .map(|&x| convention.contribution(along[x], along[map.ccw_next(x)]))
                .sum();
            ShadowRegion {
                face: f,
                tag: od.face_tags[f],
                internal,
                euler,
                corners: walk.len(),
                gleam: internal.then_some(Gleam(sum - 2 * euler)),
            }
        })
        .collect();
    ShadowedPolyhedron {
        od: od.clone(),
        convention,
        regions,
        annuli: od.curve.strands().len(),
    }
}

/// Gleam of a face by its provenance: triangles 1/2, bigons 0, other
/// internal regions -1.
pub fn recipe_gleam(tag: &FaceTag) -> Option<Option<Gleam>> {
    match tag {
        FaceTag::Outside => Some(None),
        FaceTag::Triangle { .. } => Some(Some(Gleam::HALF)),
        FaceTag::Bigon { .. } => Some(Some(Gleam::ZERO)),
        FaceTag::Finger => None,
        _ => Some(Some(Gleam::MINUS_ONE)),
    }
}

/// Gleams of all faces by provenance.
pub fn gleam_recipe(od: &OrientedDivide) -> Result<Vec<Option<Gleam>>> {
    od.face_tags
        .iter()
        .enumerate()
        .map(|(f, t)| recipe_gleam(t).ok_or(Error::MissingProvenance(f)))
        .collect()
}

impl ShadowedPolyhedron {
    /// Z/2-gleam: parity of the number of times the boundary of the region
    /// passes a true vertex.
    pub fn z2_gleam(&self, r: usize) -> Result<u8> {
        let reg = self
            .regions
            .get(r)
            .filter(|x| x.internal)
            .ok_or(Error::NotInternal(r))?;
        Ok((reg.corners % 2) as u8)
    }

    pub fn internal(&self) -> impl Iterator<Item = &ShadowRegion> {
        self.regions.iter().filter(|r| r.internal)
    }

    /// Regions whose gleam is not congruent to half their Z/2-gleam.
    pub fn integrality_failures(&self) -> Vec<usize> {
        self.internal()
            .filter(|r| (r.gleam.unwrap().0 - self.z2_gleam(r.face).unwrap() as i64) % 2 != 0)
            .map(|r| r.face)
            .collect()
    }

    /// Gleam table, one line per internal region.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for r in self.internal() {
            let tag = provenance(&r.tag);
            let z2 = self.z2_gleam(r.face).unwrap();
            out += &format!(
                "region {} provenance={tag} gleam={} z2={z2}\n",
                r.face,
                r.gleam.unwrap()
            );
        }
        out
    }
}

/// Short provenance label of a face.
pub fn provenance(t: &FaceTag) -> String {
    match *t {
        FaceTag::Image { region } => format!("region:{region}"),
        FaceTag::Outside => "outside".into(),
        FaceTag::Quad { vertex } => format!("quad:{vertex}"),
        FaceTag::Triangle { edge, end } => format!("triangle:{edge}.{end}"),
        FaceTag::Bigon { edge } => format!("bigon:{edge}"),
        FaceTag::Strip { edge } => format!("strip:{edge}"),
        FaceTag::Finger => "finger".into(),
    }
}
