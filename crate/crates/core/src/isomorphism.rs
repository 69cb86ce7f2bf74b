//! Brute-force isomorphism of small biased graphs.
//!
//! Two gain graphs are biased-isomorphic when a vertex bijection extends to an
//! edge bijection preserving endpoints under which balanced circles
//! correspond. Circles are enumerated exhaustively, so this is only offered
//! for graphs on at most four vertices.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::gain_graph::{ClosedWalk, GainGraph};

pub const MAX_VERTICES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("isomorphism test is limited to {MAX_VERTICES} vertices, got {0}")]
pub struct TooLarge(pub usize);

/// Every circle of `g` as `(edge set, balanced)`.
pub fn circles(g: &GainGraph) -> Vec<(BTreeSet<usize>, bool)> {
    let classes = g.parallel_classes();
    let class = |u: usize, v: usize| classes.get(&(u.min(v), u.max(v))).cloned().unwrap_or_default();
    let mut out = Vec::new();

    for e in g.edges().iter().filter(|e| e.is_loop()) {
        let walk = ClosedWalk::new(vec![e.tail, e.tail], vec![e.id]);
        out.push(([e.id].into(), g.is_balanced_circle(&walk).unwrap()));
    }

    for (&(u, v), ids) in &classes {
        if u == v {
            continue;
        }
        for (&a, &b) in ids.iter().tuple_combinations() {
            let walk = ClosedWalk::new(vec![u, v, u], vec![a, b]);
            out.push(([a, b].into(), g.is_balanced_circle(&walk).unwrap()));
        }
    }

    // cycles of length >= 3: start at the smallest vertex, and fix the
    // direction by requiring the second vertex to be smaller than the last
    let n = g.vertex_count();
    for len in 3..=n {
        for start in 1..=n {
            let rest: Vec<usize> = (start + 1..=n).collect();
            for tail in rest.iter().copied().permutations(len - 1) {
                if tail[0] > tail[len - 2] {
                    continue;
                }
                let mut cycle = vec![start];
                cycle.extend(tail);
                cycle.push(start);
                let choices: Vec<Vec<usize>> = cycle.windows(2).map(|w| class(w[0], w[1])).collect();
                if choices.iter().any(Vec::is_empty) {
                    continue;
                }
                for edges in choices.into_iter().multi_cartesian_product() {
                    let walk = ClosedWalk::new(cycle.clone(), edges.clone());
                    let balanced = g.is_balanced_circle(&walk).unwrap();
                    out.push((edges.into_iter().collect(), balanced));
                }
            }
        }
    }
    out
}

fn balanced_set(g: &GainGraph) -> BTreeSet<BTreeSet<usize>> {
    circles(g).into_iter().filter(|(_, b)| *b).map(|(c, _)| c).collect()
}

pub fn is_biased_isomorphic(a: &GainGraph, b: &GainGraph) -> Result<bool, TooLarge> {
    for g in [a, b] {
        if g.vertex_count() > MAX_VERTICES {
            return Err(TooLarge(g.vertex_count()));
        }
    }
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let bal_a = balanced_set(a);
    let bal_b = balanced_set(b);
    if bal_a.len() != bal_b.len() {
        return Ok(false);
    }
    let classes_a = a.parallel_classes();
    let classes_b = b.parallel_classes();
    let n = a.vertex_count();

    for perm in (1..=n).permutations(n) {
        let map_vertex = |v: usize| perm[v - 1];
        let mut targets: Vec<(&Vec<usize>, &Vec<usize>)> = Vec::new();
        let mut consistent = true;
        let mut covered = 0;
        for (&(u, v), ids) in &classes_a {
            let (x, y) = (map_vertex(u), map_vertex(v));
            match classes_b.get(&(x.min(y), x.max(y))) {
                Some(image) if image.len() == ids.len() => {
                    targets.push((ids, image));
                    covered += 1;
                }
                _ => {
                    consistent = false;
                    break;
                }
            }
        }
        if !consistent || covered != classes_b.len() {
            continue;
        }

        // every way of matching parallel edges within each class
        let per_class: Vec<Vec<Vec<(usize, usize)>>> = targets
            .iter()
            .map(|(src, dst)| {
                dst.iter()
                    .copied()
                    .permutations(dst.len())
                    .map(|p| src.iter().copied().zip(p).collect())
                    .collect()
            })
            .collect();
        for combo in per_class.into_iter().multi_cartesian_product() {
            let edge_map: BTreeMap<usize, usize> = combo.into_iter().flatten().collect();
            let all_map = bal_a.iter().all(|c| {
                let image: BTreeSet<usize> = c.iter().map(|e| edge_map[e]).collect();
                bal_b.contains(&image)
            });
            if all_map {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
