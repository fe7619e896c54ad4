//! The fiber surface of an LF-structure and its monodromy.
//!
//! The fiber is built as a cell complex. Every fiber face of the plane
//! contributes itself, every edge of the doubled curve contributes a wall
//! rectangle going up into its annulus, and the walls over the two strands
//! through a vertex meet at two separate top vertices.

use crate::doubling::OrientedDivide;
use crate::error::{Error, Result};
use crate::lf::LfStructure;
use crate::linalg::{IntMatrix, IntPolynomial};
use crate::surface::{RibbonSurface, Step};

/// Sign `s` in the twist `x -> x + s <x, C> C` along a vanishing cycle.
pub const TWIST_SIGN: i64 = 1;

fn step(od: &OrientedDivide, x: usize) -> Step {
    let map = od.map();
    let e = map.edge(x);
    (e, map.edge_darts(e).0 == x)
}

/// Glues the kept plane faces and the walls into an oriented surface.
pub fn fiber_complex(od: &OrientedDivide, kept: &[bool]) -> Result<RibbonSurface> {
    let map = od.map();
    let (nv, ne) = (map.num_vertices(), map.num_edges());
    let top = |x: usize| nv + 2 * map.vertex(x) + map.slot(x) % 2;
    let vertical = |x: usize| ne + 2 * map.vertex(x) + map.slot(x) % 2;
    let mut edges = Vec::with_capacity(3 * ne + 2 * nv);
    for e in 0..ne {
        let (a, b) = map.edge_darts(e);
        edges.push((map.vertex(a), map.vertex(b)));
    }
    for v in 0..nv {
        for pair in 0..2 {
            edges.push((v, nv + 2 * v + pair));
        }
    }
    for e in 0..ne {
        let (a, b) = map.edge_darts(e);
        edges.push((top(a), top(b)));
    }
    let mut faces: Vec<Vec<Step>> = Vec::new();
    let mut reference = None;
    for (f, walk) in od.faces.walks.iter().enumerate() {
        if !kept[f] {
            continue;
        }
        let along = od.along(walk[0]);
        if reference.is_none() && walk.iter().all(|&x| od.along(x) == along) {
            reference = Some((faces.len(), along));
        }
        faces.push(walk.iter().map(|&x| step(od, x)).collect());
    }
    for e in 0..ne {
        let (a, b) = map.edge_darts(e);
        faces.push(vec![
            (e, true),
            (vertical(b), true),
            (2 * nv + ne + e, false),
            (vertical(a), false),
        ]);
    }
    let surface = RibbonSurface::new(3 * nv, edges, faces, reference.unwrap_or((0, true)))?;
    let k = surface.num_components();
    if k != 1 {
        return Err(Error::Disconnected(k));
    }
    Ok(surface)
}

/// The fiber surface of an LF-structure.
pub fn fiber_surface(lf: &LfStructure) -> Result<RibbonSurface> {
    fiber_complex(&lf.sp.od, &lf.kept())
}

/// Vanishing cycles: the boundaries of the disks, in order.
pub fn vanishing_cycles(lf: &LfStructure) -> Vec<Vec<Step>> {
    let od = &lf.sp.od;
    lf.disks
        .iter()
        .map(|d| {
            od.faces.walks[d.face]
                .iter()
                .map(|&x| step(od, x))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Basis {
    /// The vanishing cycles themselves.
    Vanishing,
    /// Tree-cotree generators of the fiber.
    Generators,
}

#[derive(Debug, Clone)]
pub struct Monodromy {
    pub surface: RibbonSurface,
    pub cycles: Vec<Vec<Step>>,
    pub basis: Basis,
    /// Intersection form in the chosen basis.
    pub form: IntMatrix,
    /// Coordinates of the vanishing cycles in the chosen basis.
    pub coords: Vec<Vec<i64>>,
    pub twists: Vec<IntMatrix>,
    /// The product, later twists on the left.
    pub matrix: IntMatrix,
    pub charpoly: IntPolynomial,
}

fn pairing(s: &RibbonSurface, walks: &[Vec<Step>]) -> IntMatrix {
    IntMatrix::new(
        walks
            .iter()
            .map(|a| walks.iter().map(|b| s.intersection(a, b)).collect())
            .collect(),
    )
}

/// Twist matrix along a cycle with coordinates `c` under form `j`.
pub fn twist_matrix(j: &IntMatrix, c: &[i64]) -> IntMatrix {
    let n = j.size();
    let jc: Vec<i64> = (0..n)
        .map(|r| (0..n).map(|l| j.rows[r][l] * c[l]).sum())
        .collect();
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for k in 0..n {
            m.rows[i][k] += TWIST_SIGN * c[i] * jc[k];
        }
    }
    m
}

/// Product of the twists of an ordered list, later twists on the left.
pub fn product(twists: &[IntMatrix], n: usize) -> IntMatrix {
    twists.iter().fold(IntMatrix::identity(n), |m, t| t.mul(&m))
}

pub fn monodromy(lf: &LfStructure) -> Result<Monodromy> {
    let surface = fiber_surface(lf)?;
    let cycles = vanishing_cycles(lf);
    let h = surface.homology()?;
    let n = h.generators.len();
    let coords: Vec<Vec<i64>> = cycles.iter().map(|w| surface.coordinates(&h, w)).collect();
    let spans = cycles.len() == n && IntMatrix::new(coords.clone()).det().abs() == 1;
    let (basis, form, coords) = if spans {
        let unit = (0..n)
            .map(|k| (0..n).map(|i| i64::from(i == k)).collect())
            .collect();
        (Basis::Vanishing, pairing(&surface, &cycles), unit)
    } else {
        (Basis::Generators, pairing(&surface, &h.cycles), coords)
    };
    let twists: Vec<IntMatrix> = coords.iter().map(|c| twist_matrix(&form, c)).collect();
    let matrix = product(&twists, n);
    let charpoly = matrix.charpoly();
    Ok(Monodromy {
        surface,
        cycles,
        basis,
        form,
        coords,
        twists,
        matrix,
        charpoly,
    })
}
