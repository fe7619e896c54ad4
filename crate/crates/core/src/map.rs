//! Combinatorial planar maps given by a rotation system.
//!
//! Every vertex carries a counterclockwise list of slots; an edge joins two
//! slots. A slot doubles as a dart (half-edge) leaving its vertex. Faces are
//! traced with the face kept on the left of each dart, so bounded faces are
//! walked counterclockwise.

use crate::error::{Error, Result};

/// A slot reference `(vertex, slot)`.
pub type Slot = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    offsets: Vec<usize>,
    dart_vertex: Vec<usize>,
    twin: Vec<usize>,
    dart_edge: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// Result of face tracing: every dart lies on exactly one walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub walks: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
}

impl PlanarMap {
    /// Builds a map from vertex degrees and slot pairs. Every slot must be
    /// used by exactly one edge.
    pub fn new(degrees: &[usize], edges: &[(Slot, Slot)]) -> Result<Self> {
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        let mut total = 0;
        for &d in degrees {
            offsets.push(total);
            total += d;
        }
        offsets.push(total);
        let mut dart_vertex = vec![0; total];
        for (v, w) in offsets.windows(2).enumerate() {
            dart_vertex[w[0]..w[1]].iter_mut().for_each(|x| *x = v);
        }
        let mut twin = vec![usize::MAX; total];
        let mut dart_edge = vec![usize::MAX; total];
        let mut edge_darts = Vec::with_capacity(edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            let da = Self::slot_dart(&offsets, a)?;
            let db = Self::slot_dart(&offsets, b)?;
            for (d, s) in [(da, a), (db, b)] {
                if twin[d] != usize::MAX || da == db {
                    return Err(Error::Invalid(format!(
                        "slot {}.{} is used by more than one edge",
                        s.0, s.1
                    )));
                }
            }
            twin[da] = db;
            twin[db] = da;
            dart_edge[da] = e;
            dart_edge[db] = e;
            edge_darts.push((da, db));
        }
        if let Some(d) = twin.iter().position(|&t| t == usize::MAX) {
            return Err(Error::DanglingSlot {
                vertex: dart_vertex[d].to_string(),
                slot: d - offsets[dart_vertex[d]],
            });
        }
        Ok(Self {
            offsets,
            dart_vertex,
            twin,
            dart_edge,
            edges: edge_darts,
        })
    }

    fn slot_dart(offsets: &[usize], (v, s): Slot) -> Result<usize> {
        if v + 1 >= offsets.len() || s >= offsets[v + 1] - offsets[v] {
            return Err(Error::Invalid(format!("slot {v}.{s} does not exist")));
        }
        Ok(offsets[v] + s)
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn dart(&self, v: usize, slot: usize) -> usize {
        debug_assert!(slot < self.degree(v));
        self.offsets[v] + slot
    }

    pub fn darts_at(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn vertex(&self, d: usize) -> usize {
        self.dart_vertex[d]
    }

    pub fn slot(&self, d: usize) -> usize {
        d - self.offsets[self.dart_vertex[d]]
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn edge(&self, d: usize) -> usize {
        self.dart_edge[d]
    }

    /// The two darts of edge `e`, in the order they were given.
    pub fn edge_darts(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Target vertex of dart `d`.
    pub fn head(&self, d: usize) -> usize {
        self.dart_vertex[self.twin[d]]
    }

    pub fn ccw_next(&self, d: usize) -> usize {
        let v = self.dart_vertex[d];
        let deg = self.degree(v);
        self.offsets[v] + (self.slot(d) + 1) % deg
    }

    pub fn cw_next(&self, d: usize) -> usize {
        let v = self.dart_vertex[d];
        let deg = self.degree(v);
        self.offsets[v] + (self.slot(d) + deg - 1) % deg
    }

    /// Next dart along the face lying to the left of `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.cw_next(self.twin[d])
    }

    /// Traces all face walks. Walks start at their smallest dart and are
    /// listed in order of that dart, so the result is deterministic.
    pub fn faces(&self) -> Faces {
        let n = self.num_darts();
        let mut face_of = vec![usize::MAX; n];
        let mut walks = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            walks.push(walk);
        }
        Faces { walks, face_of }
    }

    /// Connected component label of every vertex, numbered by first vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            label[s] = next;
            while let Some(v) = stack.pop() {
                for d in self.darts_at(v) {
                    let w = self.head(d);
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn num_components(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Checks `V - E + F = 2C`: every component is traced as its own
    /// sphere, so each must satisfy the genus-zero Euler relation.
    pub fn check_planar(&self) -> Result<()> {
        let v = self.num_vertices() as i64;
        let e = self.num_edges() as i64;
        let f = self.faces().walks.len() as i64;
        let c = self.num_components() as i64;
        if v - e + f != 2 * c {
            return Err(Error::NonPlanar {
                euler: v - e + f,
                expected: 2 * c,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> PlanarMap {
        // two vertices joined by three edges
        PlanarMap::new(
            &[3, 3],
            &[((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))],
        )
        .unwrap()
    }

    #[test]
    fn theta_graph_has_three_faces() {
        let m = theta();
        assert_eq!(m.faces().walks.len(), 3);
        m.check_planar().unwrap();
    }

    #[test]
    fn nonplanar_rotation_is_rejected() {
        // two interleaved loops at one vertex only embed in the torus
        let torus = PlanarMap::new(&[4], &[((0, 0), (0, 2)), ((0, 1), (0, 3))]).unwrap();
        assert!(matches!(
            torus.check_planar(),
            Err(Error::NonPlanar {
                euler: 0,
                expected: 2
            })
        ));
        let plane = PlanarMap::new(&[4], &[((0, 0), (0, 1)), ((0, 2), (0, 3))]).unwrap();
        plane.check_planar().unwrap();
    }

    #[test]
    fn dangling_slot_is_reported() {
        let err = PlanarMap::new(&[2], &[((0, 0), (0, 0))]);
        assert!(err.is_err());
        let err = PlanarMap::new(&[3, 1], &[((0, 0), (1, 0)), ((0, 1), (0, 2))]);
        assert!(err.is_ok());
        let err = PlanarMap::new(&[4, 1], &[((0, 0), (1, 0)), ((0, 1), (0, 2))]);
        assert!(matches!(err, Err(Error::DanglingSlot { slot: 3, .. })));
    }

    #[test]
    fn every_dart_on_one_face() {
        let m = theta();
        let f = m.faces();
        let total: usize = f.walks.iter().map(Vec::len).sum();
        assert_eq!(total, m.num_darts());
    }
}
