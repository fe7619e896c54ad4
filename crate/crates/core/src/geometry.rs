//! Builds divides in the unit disk from polylines.
//!
//! Used for fixtures (Chebyshev divides, spirals, random divides) and by the
//! examples. Only the combinatorics of the result is kept.

use std::f64::consts::PI;

use num_rational::Ratio;

use crate::divide::{Divide, Edge, Vertex, VertexKind};
use crate::error::{Error, Result};

pub type Point = (f64, f64);

/// A polyline; open curves end on the unit circle or at a free endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub points: Vec<Point>,
    pub closed: bool,
}

impl Curve {
    pub fn open(points: Vec<Point>) -> Self {
        Self {
            points,
            closed: false,
        }
    }

    pub fn closed(points: Vec<Point>) -> Self {
        Self {
            points,
            closed: true,
        }
    }
}

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Proper intersection parameters of segments `p1p2` and `q1q2`.
fn intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> Option<(f64, f64)> {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        Some((d1 / (d1 - d2), d3 / (d3 - d4)))
    } else {
        None
    }
}

fn angle(v: Point) -> f64 {
    let a = v.1.atan2(v.0);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

struct Event {
    seg: usize,
    t: f64,
    crossing: usize,
    /// direction of travel at the crossing
    dir: Point,
}

/// Converts polylines in the unit disk into a divide.
pub fn divide_from_curves(curves: &[Curve]) -> Result<Divide> {
    let segs = |c: &Curve| -> Vec<(Point, Point)> {
        let n = c.points.len();
        let m = if c.closed { n } else { n - 1 };
        (0..m)
            .map(|i| (c.points[i], c.points[(i + 1) % n]))
            .collect()
    };
    let all: Vec<Vec<(Point, Point)>> = curves.iter().map(segs).collect();
    let mut events: Vec<Vec<Event>> = curves.iter().map(|_| Vec::new()).collect();
    let mut ncross = 0;
    for ci in 0..curves.len() {
        for cj in ci..curves.len() {
            for (si, &(a1, a2)) in all[ci].iter().enumerate() {
                for (sj, &(b1, b2)) in all[cj].iter().enumerate() {
                    if ci == cj {
                        let m = all[ci].len();
                        if sj <= si + 1 || (curves[ci].closed && si == 0 && sj == m - 1) {
                            continue;
                        }
                    }
                    if let Some((s, t)) = intersect(a1, a2, b1, b2) {
                        let da = (a2.0 - a1.0, a2.1 - a1.1);
                        let db = (b2.0 - b1.0, b2.1 - b1.1);
                        events[ci].push(Event {
                            seg: si,
                            t: s,
                            crossing: ncross,
                            dir: da,
                        });
                        events[cj].push(Event {
                            seg: sj,
                            t,
                            crossing: ncross,
                            dir: db,
                        });
                        ncross += 1;
                    }
                }
            }
        }
    }
    for ev in &mut events {
        ev.sort_by(|a, b| (a.seg, a.t).partial_cmp(&(b.seg, b.t)).unwrap());
    }
    // rays at each crossing: (angle, curve, index in events)
    let mut rays: Vec<Vec<(f64, usize, usize, bool)>> = vec![Vec::new(); ncross];
    for (ci, ev) in events.iter().enumerate() {
        for (k, e) in ev.iter().enumerate() {
            rays[e.crossing].push((angle(e.dir), ci, k, true));
            rays[e.crossing].push((angle((-e.dir.0, -e.dir.1)), ci, k, false));
        }
    }
    for r in &mut rays {
        r.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }
    let slot_of = |x: usize, ci: usize, k: usize, fwd: bool| -> usize {
        rays[x]
            .iter()
            .position(|&(_, c, kk, f)| c == ci && kk == k && f == fwd)
            .unwrap()
    };

    let mut vertices: Vec<Vertex> = Vec::new();
    let mut cross_vertex = vec![usize::MAX; ncross];
    let mut edges: Vec<Edge> = Vec::new();
    let mut nb = 0;
    let mut nf = 0;
    let mut nc = 0;
    let mut endpoint = |p: Point, vertices: &mut Vec<Vertex>| -> usize {
        let r = (p.0 * p.0 + p.1 * p.1).sqrt();
        let kind = if (r - 1.0).abs() < 1e-9 {
            let pos = angle(p) / (2.0 * PI);
            let num = ((pos * 1e6).round() as i64).rem_euclid(1_000_000);
            nb += 1;
            VertexKind::Boundary {
                circle: 0,
                pos: Ratio::new(num, 1_000_000),
            }
        } else {
            nf += 1;
            VertexKind::Free
        };
        let name = match kind {
            VertexKind::Boundary { .. } => format!("b{nb}"),
            _ => format!("f{nf}"),
        };
        vertices.push(Vertex { name, kind });
        vertices.len() - 1
    };
    let mut crossing =
        |x: usize, vertices: &mut Vec<Vertex>, cross_vertex: &mut Vec<usize>| -> usize {
            if cross_vertex[x] == usize::MAX {
                nc += 1;
                vertices.push(Vertex {
                    name: format!("c{nc}"),
                    kind: VertexKind::Crossing,
                });
                cross_vertex[x] = vertices.len() - 1;
            }
            cross_vertex[x]
        };
    for (ci, c) in curves.iter().enumerate() {
        let ev = &events[ci];
        let mut ends: Vec<((usize, usize), (usize, usize))> = Vec::new();
        if c.closed {
            if ev.is_empty() {
                vertices.push(Vertex {
                    name: format!("~e{}", edges.len() + 1),
                    kind: VertexKind::Phantom,
                });
                let v = vertices.len() - 1;
                ends.push(((v, 0), (v, 1)));
            } else {
                for k in 0..ev.len() {
                    let k2 = (k + 1) % ev.len();
                    let a = crossing(ev[k].crossing, &mut vertices, &mut cross_vertex);
                    let b = crossing(ev[k2].crossing, &mut vertices, &mut cross_vertex);
                    ends.push((
                        (a, slot_of(ev[k].crossing, ci, k, true)),
                        (b, slot_of(ev[k2].crossing, ci, k2, false)),
                    ));
                }
            }
        } else {
            let s = endpoint(c.points[0], &mut vertices);
            let mut prev = (s, 0);
            for (k, e) in ev.iter().enumerate() {
                let v = crossing(e.crossing, &mut vertices, &mut cross_vertex);
                ends.push((prev, (v, slot_of(e.crossing, ci, k, false))));
                prev = (v, slot_of(e.crossing, ci, k, true));
            }
            let t = endpoint(*c.points.last().unwrap(), &mut vertices);
            ends.push((prev, (t, 0)));
        }
        for (a, b) in ends {
            edges.push(Edge {
                name: format!("e{}", edges.len() + 1),
                ends: (a, b),
            });
        }
    }
    if vertices.is_empty() && !curves.is_empty() {
        return Err(Error::Invalid("no vertices produced".into()));
    }
    Divide::new(1, vertices, edges)
}

fn chebyshev_t(n: u32, t: f64) -> f64 {
    let (mut a, mut b) = (1.0, t);
    if n == 0 {
        return 1.0;
    }
    for _ in 1..n {
        let c = 2.0 * t * b - a;
        a = b;
        b = c;
    }
    b
}

/// Chebyshev divide `t -> (T_p(t), T_q(t))`, the real morsification of
/// `x^p - y^q` for coprime `p`, `q`.
pub fn chebyshev(p: u32, q: u32) -> Divide {
    let n = 40 * (p + q) as usize + 1;
    let scale = 0.7;
    let mut pts: Vec<Point> = (0..n)
        .map(|i| {
            let t = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
            (scale * chebyshev_t(p, t), scale * chebyshev_t(q, t))
        })
        .collect();
    let radial = |p: Point| {
        let r = (p.0 * p.0 + p.1 * p.1).sqrt();
        (p.0 / r, p.1 / r)
    };
    pts.insert(0, radial(pts[0]));
    let last = *pts.last().unwrap();
    pts.push(radial(last));
    divide_from_curves(&[Curve::open(pts)]).expect("Chebyshev divides are generic")
}

/// The divide of the torus knot `T(2, 2m + 1)`: a snake with `m` double points.
pub fn torus_2(m: u32) -> Divide {
    chebyshev(2, 2 * m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_double_point_counts() {
        for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)] {
            let d = chebyshev(p, q);
            assert_eq!(d.double_points() as u32, (p - 1) * (q - 1) / 2, "({p},{q})");
        }
    }

    #[test]
    fn circle_gets_phantom_vertex() {
        let pts: Vec<Point> = (0..12)
            .map(|i| {
                let a = i as f64 * PI / 6.0;
                (0.5 * a.cos(), 0.5 * a.sin())
            })
            .collect();
        let d = divide_from_curves(&[Curve::closed(pts)]).unwrap();
        assert_eq!(d.vertices().len(), 1);
        assert_eq!(d.kind(0), &VertexKind::Phantom);
    }
}
