//! Combinatorial surfaces given by polygons glued along edges.
//!
//! An edge end is `2 * edge + end`, where end 0 is the first vertex of the
//! edge. A walk is a list of `(edge, forward)` steps.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Step = (usize, bool);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonSurface {
    pub num_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Faces as closed walks, oriented coherently.
    pub faces: Vec<Vec<Step>>,
    /// Counterclockwise successor of each edge end around its vertex;
    /// `None` where the end borders the boundary.
    pub succ: Vec<Option<usize>>,
    pub boundary_components: usize,
}

fn tail_end((e, fwd): Step) -> usize {
    2 * e + usize::from(!fwd)
}

fn head_end((e, fwd): Step) -> usize {
    2 * e + usize::from(fwd)
}

fn reversed(walk: &[Step]) -> Vec<Step> {
    walk.iter().rev().map(|&(e, f)| (e, !f)).collect()
}

impl RibbonSurface {
    /// Glues the faces and orients them coherently, starting from face
    /// `reference.0` taken as given (`reference.1 == true`) or reversed.
    pub fn new(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        faces: Vec<Vec<Step>>,
        reference: (usize, bool),
    ) -> Result<Self> {
        let vertex_of = |end: usize| {
            if end % 2 == 0 {
                edges[end / 2].0
            } else {
                edges[end / 2].1
            }
        };
        for walk in &faces {
            for (i, &s) in walk.iter().enumerate() {
                let next = walk[(i + 1) % walk.len()];
                if vertex_of(head_end(s)) != vertex_of(tail_end(next)) {
                    return Err(Error::Invalid("face boundary is not a closed walk".into()));
                }
            }
        }
        let mut uses: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
        for (f, walk) in faces.iter().enumerate() {
            for &(e, _) in walk {
                uses[e].push(f);
            }
        }
        if let Some(e) = uses.iter().position(|u| u.len() > 2) {
            return Err(Error::NonOrientable(format!(
                "edge {e} lies on more than two faces"
            )));
        }
        // flip[f]: whether face f is reversed
        let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
        let dir = |f: usize, e: usize, flip: bool| -> Vec<bool> {
            faces[f]
                .iter()
                .filter(|s| s.0 == e)
                .map(|s| s.1 != flip)
                .collect()
        };
        let mut order: Vec<usize> = vec![reference.0];
        order.extend((0..faces.len()).filter(|&f| f != reference.0));
        for &start in &order {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(if start == reference.0 {
                !reference.1
            } else {
                false
            });
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let ff = flip[f].unwrap();
                for &(e, _) in &faces[f] {
                    for &g in &uses[e] {
                        if g == f {
                            if dir(f, e, ff).len() == 2 && dir(f, e, ff)[0] == dir(f, e, ff)[1] {
                                return Err(Error::NonOrientable(format!(
                                    "face {f} meets edge {e} twice in one direction"
                                )));
                            }
                            continue;
                        }
                        // the two faces must cross e in opposite directions
                        let want = !dir(f, e, ff)[0];
                        let g_same = dir(g, e, false)[0] == want;
                        let gf = !g_same;
                        match flip[g] {
                            None => {
                                flip[g] = Some(gf);
                                queue.push_back(g);
                            }
                            Some(x) if x != gf => {
                                return Err(Error::NonOrientable(format!(
                                    "faces {f} and {g} disagree along edge {e}"
                                )));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let faces: Vec<Vec<Step>> = faces
            .iter()
            .zip(&flip)
            .map(|(w, fl)| if fl.unwrap() { reversed(w) } else { w.clone() })
            .collect();
        let mut succ: Vec<Option<usize>> = vec![None; 2 * edges.len()];
        for walk in &faces {
            for (i, &s) in walk.iter().enumerate() {
                let next = walk[(i + 1) % walk.len()];
                let (a, b) = (head_end(s), tail_end(next));
                if succ[b].is_some() {
                    return Err(Error::NonOrientable(format!(
                        "edge end {b} has two successors"
                    )));
                }
                succ[b] = Some(a);
            }
        }
        let mut surface = RibbonSurface {
            num_vertices,
            edges,
            faces,
            succ,
            boundary_components: 0,
        };
        surface.check_links()?;
        surface.boundary_components = surface.boundary_walks().len();
        Ok(surface)
    }

    pub fn vertex_of(&self, end: usize) -> usize {
        if end % 2 == 0 {
            self.edges[end / 2].0
        } else {
            self.edges[end / 2].1
        }
    }

    /// Every vertex link must be a single path or cycle.
    fn check_links(&self) -> Result<()> {
        let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices];
        for end in 0..self.succ.len() {
            ends_at[self.vertex_of(end)].push(end);
        }
        let mut pred = vec![None; self.succ.len()];
        for (b, a) in self.succ.iter().enumerate() {
            if let Some(a) = *a {
                if pred[a].is_some() {
                    return Err(Error::NonOrientable(format!(
                        "edge end {a} has two predecessors"
                    )));
                }
                pred[a] = Some(b);
            }
        }
        for (v, ends) in ends_at.iter().enumerate() {
            if ends.is_empty() {
                continue;
            }
            let starts: Vec<usize> = ends
                .iter()
                .copied()
                .filter(|&x| pred[x].is_none())
                .collect();
            let start = match starts.len() {
                0 => ends[0],
                1 => starts[0],
                _ => {
                    return Err(Error::NonOrientable(format!(
                        "vertex {v} is not a manifold point"
                    )))
                }
            };
            let mut seen = 1;
            let mut x = start;
            while let Some(y) = self.succ[x] {
                if y == start {
                    break;
                }
                seen += 1;
                x = y;
            }
            if seen != ends.len() {
                return Err(Error::NonOrientable(format!(
                    "vertex {v} is not a manifold point"
                )));
            }
        }
        Ok(())
    }

    /// Boundary components as closed walks, with the surface on the left.
    pub fn boundary_walks(&self) -> Vec<Vec<Step>> {
        let mut pred = vec![None; self.succ.len()];
        for (b, a) in self.succ.iter().enumerate() {
            if let Some(a) = *a {
                pred[a] = Some(b);
            }
        }
        let mut on_boundary = vec![None; self.edges.len()];
        for w in &self.faces {
            for &s in w {
                on_boundary[s.0] = match on_boundary[s.0] {
                    None => Some(Some(s)),
                    Some(_) => Some(None),
                };
            }
        }
        let mut used = vec![false; self.edges.len()];
        let mut walks = Vec::new();
        for e0 in 0..self.edges.len() {
            let Some(Some(s0)) = on_boundary[e0] else {
                continue;
            };
            if used[e0] {
                continue;
            }
            let mut walk = Vec::new();
            let mut s = s0;
            while !used[s.0] {
                used[s.0] = true;
                walk.push(s);
                // across the gap: the first end of the link path at the head
                let mut z = head_end(s);
                while let Some(p) = pred[z] {
                    z = p;
                }
                s = (z / 2, z % 2 == 0);
            }
            walks.push(walk);
        }
        walks
    }

    pub fn euler(&self) -> i64 {
        self.num_vertices as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn genus(&self) -> i64 {
        (2 - self.euler() - self.boundary_components as i64) / 2
    }

    /// First Betti number, assuming the surface is connected with boundary.
    pub fn betti1(&self) -> usize {
        (1 - self.euler()) as usize
    }

    pub fn num_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut n = self.num_vertices;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                n -= 1;
            }
        }
        n
    }
}

/// A basis of first homology from a spanning tree and a dual cotree.
#[derive(Debug, Clone)]
pub struct Homology {
    /// Edges outside the tree and the cotree.
    pub generators: Vec<usize>,
    /// The cycle of each generator: the edge closed up through the tree.
    pub cycles: Vec<Vec<Step>>,
    /// Dual tree edge to the parent of each face, in pre-order.
    cotree: Vec<(usize, usize)>,
}

/// Cancels consecutive back-and-forth steps, also across the wrap-around.
pub fn reduce(walk: &[Step]) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::new();
    for &s in walk {
        match out.last() {
            Some(&(e, f)) if e == s.0 && f != s.1 => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    while out.len() >= 2 {
        let (a, b) = (out[0], out[out.len() - 1]);
        if a.0 == b.0 && a.1 != b.1 {
            out.remove(0);
            out.pop();
        } else {
            break;
        }
    }
    out
}

impl RibbonSurface {
    /// Tree-cotree basis of the first homology of a connected surface.
    pub fn homology(&self) -> Result<Homology> {
        let n = self.num_components();
        if n != 1 {
            return Err(Error::Disconnected(n));
        }
        let mut incident: Vec<Vec<Step>> = vec![Vec::new(); self.num_vertices];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            incident[a].push((e, true));
            incident[b].push((e, false));
        }
        let mut in_tree = vec![false; self.edges.len()];
        let mut to_root: Vec<Vec<Step>> = vec![Vec::new(); self.num_vertices];
        let mut seen = vec![false; self.num_vertices];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(e, fwd) in &incident[v] {
                let w = if fwd {
                    self.edges[e].1
                } else {
                    self.edges[e].0
                };
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    let mut path = to_root[v].clone();
                    path.push((e, fwd));
                    to_root[w] = path;
                    queue.push_back(w);
                }
            }
        }
        // dual graph: faces plus one node for the boundary
        let nf = self.faces.len();
        let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf + 1];
        let mut sides: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (f, w) in self.faces.iter().enumerate() {
            for &(e, _) in w {
                sides[e].push(f);
            }
        }
        for e in 0..self.edges.len() {
            if in_tree[e] {
                continue;
            }
            let (f, g) = match sides[e][..] {
                [f] => (f, nf),
                [f, g] if f != g => (f, g),
                _ => continue,
            };
            dual[f].push((g, e));
            dual[g].push((f, e));
        }
        let mut in_cotree = vec![false; self.edges.len()];
        let mut reached = vec![false; nf + 1];
        reached[nf] = true;
        let mut cotree = Vec::new();
        let mut stack = vec![nf];
        // depth-first, so parents precede children
        while let Some(f) = stack.pop() {
            for &(g, e) in &dual[f] {
                if !reached[g] {
                    reached[g] = true;
                    in_cotree[e] = true;
                    cotree.push((g, e));
                    stack.push(g);
                }
            }
        }
        let generators: Vec<usize> = (0..self.edges.len())
            .filter(|&e| !in_tree[e] && !in_cotree[e])
            .collect();
        let cycles = generators
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                let mut w = to_root[a].clone();
                w.push((e, true));
                w.extend(reversed(&to_root[b]));
                reduce(&w)
            })
            .collect();
        Ok(Homology {
            generators,
            cycles,
            cotree,
        })
    }

    /// Coordinates of a closed walk in the generator basis.
    pub fn coordinates(&self, h: &Homology, walk: &[Step]) -> Vec<i64> {
        let mut c = vec![0i64; self.edges.len()];
        for &(e, f) in walk {
            c[e] += if f { 1 } else { -1 };
        }
        for &(f, pe) in &h.cotree {
            let sign: i64 = self.faces[f]
                .iter()
                .filter(|s| s.0 == pe)
                .map(|s| if s.1 { 1 } else { -1 })
                .sum();
            if c[pe] == 0 {
                continue;
            }
            let a = c[pe] / sign;
            for &(e, fwd) in &self.faces[f] {
                c[e] -= a * if fwd { 1 } else { -1 };
            }
        }
        h.generators.iter().map(|&g| c[g]).collect()
    }

    /// Edge ends around every vertex in counterclockwise order, starting
    /// after the boundary gap if there is one.
    fn rotations(&self) -> (Vec<usize>, Vec<usize>) {
        let mut pred = vec![None; self.succ.len()];
        for (b, a) in self.succ.iter().enumerate() {
            if let Some(a) = *a {
                pred[a] = Some(b);
            }
        }
        let mut pos = vec![usize::MAX; self.succ.len()];
        let mut size = vec![0; self.num_vertices];
        for start in 0..self.succ.len() {
            if pos[start] != usize::MAX || (pred[start].is_some() && self.is_on_path(start, &pred))
            {
                continue;
            }
            let mut k = 0;
            let mut x = start;
            loop {
                pos[x] = k;
                k += 1;
                match self.succ[x] {
                    Some(y) if y != start => x = y,
                    _ => break,
                }
            }
            size[self.vertex_of(start)] = k;
        }
        (pos, size)
    }

    /// Whether `x` lies on a link path (as opposed to a link cycle).
    fn is_on_path(&self, x: usize, pred: &[Option<usize>]) -> bool {
        let mut y = x;
        while let Some(p) = pred[y] {
            if p == x {
                return false;
            }
            y = p;
        }
        true
    }

    /// Algebraic intersection number of two closed walks.
    pub fn intersection(&self, a: &[Step], b: &[Step]) -> i64 {
        let (pos, size) = self.rotations();
        let visits = |w: &[Step]| -> Vec<(usize, usize, usize)> {
            (0..w.len())
                .map(|i| {
                    let inn = head_end(w[i]);
                    let out = tail_end(w[(i + 1) % w.len()]);
                    (self.vertex_of(inn), inn, out)
                })
                .collect()
        };
        let (va, vb) = (visits(a), visits(b));
        let mut twice = 0;
        for &(v, a_in, a_out) in &va {
            let n = size[v];
            let span = (pos[a_in] + n - pos[a_out]) % n;
            let side = |x: usize| -> i64 {
                if x == a_in || x == a_out {
                    return 0;
                }
                let d = (pos[x] + n - pos[a_out]) % n;
                if d < span {
                    1
                } else {
                    -1
                }
            };
            for &(w, b_in, b_out) in &vb {
                if w == v {
                    twice += side(b_out) - side(b_in);
                }
            }
        }
        debug_assert!(twice % 2 == 0);
        twice / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus() -> RibbonSurface {
        let edges = vec![(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (1, 3)];
        let faces = vec![
            vec![(0, true), (5, true), (2, false), (4, false)],
            vec![(1, true), (4, true), (3, false), (5, false)],
        ];
        RibbonSurface::new(4, edges, faces, (0, true)).unwrap()
    }

    #[test]
    fn annulus_topology() {
        let s = annulus();
        assert_eq!(s.euler(), 0);
        assert_eq!(s.boundary_components, 2);
        assert_eq!(s.genus(), 0);
        let h = s.homology().unwrap();
        assert_eq!(h.generators.len(), 1);
        let core = [(0, true), (1, true)];
        assert_eq!(
            s.coordinates(&h, &core)
                .iter()
                .map(|x| x.abs())
                .sum::<i64>(),
            1
        );
        assert_eq!(s.intersection(&core, &core), 0);
        assert_eq!(s.intersection(&h.cycles[0], &core), 0);
    }

    #[test]
    fn mobius_band_is_rejected() {
        let edges = vec![(0, 1), (1, 0), (0, 1)];
        let faces = vec![vec![(0, true), (1, true), (2, true), (1, true)]];
        assert!(matches!(
            RibbonSurface::new(2, edges, faces, (0, true)),
            Err(Error::NonOrientable(_))
        ));
    }

    #[test]
    fn reduce_cancels_backtracks() {
        assert_eq!(
            reduce(&[(0, true), (1, true), (1, false), (2, true), (0, false)]),
            vec![(2, true)]
        );
    }
}
