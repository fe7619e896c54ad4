//! Exhaustive enumeration of small free divides.

use num_rational::Ratio;

use crate::divide::{Divide, Edge, FreeCase, Vertex, VertexKind};
use crate::map::Slot;

fn matchings(slots: &[Slot], acc: &mut Vec<(Slot, Slot)>, out: &mut Vec<Vec<(Slot, Slot)>>) {
    let Some((&first, rest)) = slots.split_first() else {
        out.push(acc.clone());
        return;
    };
    for i in 0..rest.len() {
        let mut remaining = rest.to_vec();
        let other = remaining.remove(i);
        acc.push((first, other));
        matchings(&remaining, acc, out);
        acc.pop();
    }
}

/// Every free divide made of one immersed interval with `n` double points,
/// one boundary endpoint and one free endpoint whose region is bounded.
/// Isomorphic copies are not removed.
pub fn free_divides(n: usize) -> Vec<Divide> {
    let mut vertices: Vec<Vertex> = (1..=n)
        .map(|i| Vertex {
            name: format!("c{i}"),
            kind: VertexKind::Crossing,
        })
        .collect();
    vertices.push(Vertex {
        name: "b".into(),
        kind: VertexKind::Boundary {
            circle: 0,
            pos: Ratio::from_integer(0),
        },
    });
    vertices.push(Vertex {
        name: "f".into(),
        kind: VertexKind::Free,
    });
    let mut slots: Vec<Slot> = (0..n).flat_map(|v| (0..4).map(move |s| (v, s))).collect();
    slots.push((n, 0));
    slots.push((n + 1, 0));
    let mut all = Vec::new();
    matchings(&slots, &mut Vec::new(), &mut all);
    let mut out = Vec::new();
    for m in all {
        let edges = m
            .iter()
            .enumerate()
            .map(|(i, &ends)| Edge {
                name: format!("e{}", i + 1),
                ends,
            })
            .collect();
        let Ok(d) = Divide::new(1, vertices.clone(), edges) else {
            continue;
        };
        if d.strands().len() != 1 || d.strands()[0].closed {
            continue;
        }
        let free_ok = d
            .regions()
            .is_ok_and(|r| !r.regions[r.left_of_dart[d.map().dart(n + 1, 0)]].outside);
        if free_ok {
            out.push(d);
        }
    }
    out
}

/// Free divides with `n` double points satisfying one of the two cases.
pub fn fibered_free_divides(n: usize) -> Vec<(Divide, FreeCase)> {
    free_divides(n)
        .into_iter()
        .filter_map(|d| {
            let case = d.classify_free().ok()?;
            (!matches!(case, FreeCase::Neither { .. })).then_some((d, case))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        let slots: Vec<Slot> = (0..10).map(|i| (0, i)).collect();
        let mut out = Vec::new();
        matchings(&slots, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 945);
    }

    #[test]
    fn small_catalog() {
        assert!(free_divides(1).is_empty());
        let all = free_divides(2);
        assert_eq!(all.len(), 64);
        assert!(all
            .iter()
            .all(|d| matches!(d.classify_free(), Ok(FreeCase::Case1 { .. }))));
        assert_eq!(fibered_free_divides(2).len(), 64);
    }
}
