//! Schematic SVG drawings of divides, doubled curves and shadows.
//!
//! Vertices are placed by a Tutte layout: pinned vertices sit on a circle,
//! the others are moved to the barycenter of their neighbours until the
//! positions settle.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::divide::{Divide, VertexKind};
use crate::doubling::OrientedDivide;
use crate::map::PlanarMap;
use crate::shadow::ShadowedPolyhedron;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;
const ROUNDS: usize = 400;

type Point = (f64, f64);

fn layout(map: &PlanarMap, pins: &[Option<Point>]) -> Vec<Point> {
    let n = map.num_vertices();
    let mut pos: Vec<Point> = pins.iter().map(|p| p.unwrap_or((0.0, 0.0))).collect();
    let comps = map.components();
    let mut pinned = pins.to_vec();
    // components without pins get their longest face on a small circle
    let faces = map.faces();
    let count = comps.iter().copied().max().map_or(0, |m| m + 1);
    for k in 0..count {
        if (0..n).any(|v| comps[v] == k && pins[v].is_some()) {
            continue;
        }
        let walk = faces
            .walks
            .iter()
            .filter(|w| comps[map.vertex(w[0])] == k)
            .max_by_key(|w| w.len())
            .unwrap();
        let mut ring: Vec<usize> = walk.iter().map(|&d| map.vertex(d)).collect();
        ring.dedup();
        let cx = if count > 1 {
            (k as f64 + 0.5) / count as f64 * 2.0 - 1.0
        } else {
            0.0
        };
        let r = if count > 1 { 0.8 / count as f64 } else { 0.6 };
        for (i, &v) in ring.iter().enumerate() {
            if pinned[v].is_none() {
                let a = TAU * i as f64 / ring.len() as f64;
                pinned[v] = Some((cx + r * a.cos(), r * a.sin()));
            }
        }
    }
    for v in 0..n {
        if let Some(p) = pinned[v] {
            pos[v] = p;
        }
    }
    for _ in 0..ROUNDS {
        for v in 0..n {
            if pinned[v].is_some() {
                continue;
            }
            let nbrs: Vec<usize> = map
                .darts_at(v)
                .map(|d| map.head(d))
                .filter(|&w| w != v)
                .collect();
            if nbrs.is_empty() {
                continue;
            }
            let k = nbrs.len() as f64;
            pos[v] = (
                nbrs.iter().map(|&w| pos[w].0).sum::<f64>() / k,
                nbrs.iter().map(|&w| pos[w].1).sum::<f64>() / k,
            );
        }
    }
    pos
}

fn screen(p: Point) -> Point {
    (SIZE / 2.0 + RADIUS * p.0, SIZE / 2.0 - RADIUS * p.1)
}

fn header(out: &mut String, title: &str) {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
    writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 6 6" refX="3" refY="3" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>"#
    )
    .unwrap();
    let c = SIZE / 2.0;
    writeln!(out, r##"<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##).unwrap();
}

/// Draws every edge of the map; parallel edges and loops bend apart.
fn edges(out: &mut String, map: &PlanarMap, pos: &[Point], arrows: Option<&[bool]>) {
    let mut seen: Vec<((usize, usize), usize)> = Vec::new();
    for e in 0..map.num_edges() {
        let (a, b) = map.edge_darts(e);
        let (u, v) = (map.vertex(a), map.vertex(b));
        let key = (u.min(v), u.max(v));
        let k = match seen.iter_mut().find(|(x, _)| *x == key) {
            Some((_, c)) => {
                *c += 1;
                *c
            }
            None => {
                seen.push((key, 0));
                0
            }
        };
        let (p, q) = (screen(pos[u]), screen(pos[v]));
        let marker = match arrows {
            Some(_) => r#" marker-mid="url(#arrow)""#,
            _ => "",
        };
        if u == v {
            let r = 36.0 + 10.0 * k as f64;
            writeln!(out, r#"<path d="M{:.2},{:.2} c{r:.2},-{r:.2} {r:.2},{r:.2} 0,0" fill="none" stroke="black"/>"#, p.0, p.1).unwrap();
            continue;
        }
        let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        let side = if k % 2 == 0 { 1.0 } else { -1.0 };
        let bend = side * 14.0 * k.div_ceil(2) as f64 * if u <= v { 1.0 } else { -1.0 };
        let (cx, cy) = (mx - dy / len * bend, my + dx / len * bend);
        let (hx, hy) = ((p.0 + 2.0 * cx + q.0) / 4.0, (p.1 + 2.0 * cy + q.1) / 4.0);
        let (p, q) = match arrows {
            Some(al) if !al[a] => (q, p),
            _ => (p, q),
        };
        writeln!(
            out,
            r#"<path d="M{:.2},{:.2} Q{:.2},{:.2} {hx:.2},{hy:.2} T{:.2},{:.2}" fill="none" stroke="black"{marker}/>"#,
            p.0,
            p.1,
            (p.0 + cx) / 2.0,
            (p.1 + cy) / 2.0,
            q.0,
            q.1
        )
        .unwrap();
    }
}

fn dots(out: &mut String, pos: &[Point], fill: impl Fn(usize) -> &'static str) {
    for (v, &p) in pos.iter().enumerate() {
        let (x, y) = screen(p);
        writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{}"/>"#,
            fill(v)
        )
        .unwrap();
    }
}

pub fn render_divide(d: &Divide) -> String {
    let map = d.map();
    let pins: Vec<Option<Point>> = d
        .vertices()
        .iter()
        .map(|v| match &v.kind {
            VertexKind::Boundary { pos, .. } => {
                let a = TAU * (*pos.numer() as f64 / *pos.denom() as f64);
                Some((a.cos(), a.sin()))
            }
            _ => None,
        })
        .collect();
    let mut pos = layout(map, &pins);
    // a free endpoint would sit on its neighbour
    for (v, vx) in d.vertices().iter().enumerate() {
        if vx.kind == VertexKind::Free {
            let w = map.head(map.dart(v, 0));
            let (x, y) = pos[w];
            let r = (x * x + y * y).sqrt().max(0.1);
            pos[v] = (x - 0.15 * x / r, y - 0.15 * y / r);
        }
    }
    let mut out = String::new();
    header(&mut out, "divide");
    edges(&mut out, map, &pos, None);
    dots(&mut out, &pos, |v| match d.kind(v) {
        VertexKind::Crossing => "black",
        VertexKind::Free => "red",
        VertexKind::Phantom => "none",
        VertexKind::Boundary { .. } => "blue",
    });
    out.push_str("</svg>\n");
    out
}

fn curve_drawing(od: &OrientedDivide, labels: &[(usize, String)]) -> String {
    let map = od.map();
    let pins = vec![None; map.num_vertices()];
    let pos = layout(map, &pins);
    let mut out = String::new();
    header(
        &mut out,
        if labels.is_empty() {
            "doubled curve"
        } else {
            "shadow"
        },
    );
    edges(&mut out, map, &pos, Some(&od.along_all()));
    dots(&mut out, &pos, |_| "black");
    for (f, text) in labels {
        let walk = &od.faces.walks[*f];
        let k = walk.len() as f64;
        let c = (
            walk.iter().map(|&x| pos[map.vertex(x)].0).sum::<f64>() / k,
            walk.iter().map(|&x| pos[map.vertex(x)].1).sum::<f64>() / k,
        );
        let (x, y) = screen(c);
        writeln!(out, r#"<text x="{x:.2}" y="{y:.2}" font-size="11" text-anchor="middle" fill="darkgreen">{text}</text>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_doubled(od: &OrientedDivide) -> String {
    curve_drawing(od, &[])
}

/// The doubled curve with the gleam of every internal region.
pub fn render_shadow(sp: &ShadowedPolyhedron) -> String {
    let labels: Vec<(usize, String)> = sp
        .internal()
        .map(|r| (r.face, r.gleam.unwrap().to_string()))
        .collect();
    curve_drawing(&sp.od, &labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::double;
    use crate::geometry::chebyshev;
    use crate::shadow::{build_polyhedron, CONVENTION};

    #[test]
    fn drawings_are_well_formed() {
        let d = chebyshev(2, 3);
        let sp = build_polyhedron(&double(&d).unwrap(), CONVENTION);
        for s in [
            render_divide(&d),
            render_doubled(&sp.od),
            render_shadow(&sp),
        ] {
            assert!(s.starts_with("<?xml") && s.ends_with("</svg>\n"));
            assert!(!s.contains("NaN"));
        }
        assert_eq!(render_shadow(&sp).matches("<text").count(), 6);
    }
}
