//! Small gain graphs that recur in tests, fixtures and documentation.
//!
//! Edge orders are fixed; `g_circ` lists its edges as
//! `e21(1), e12(0), e13(0), e31(1), e23(0)` so that hyperplane `i` of its
//! arrangement is edge `i`.

use crate::gain_graph::GainGraph;

fn build(vertex_count: usize, edges: &[(usize, usize, i64)]) -> GainGraph {
    GainGraph::from_int_edges(vertex_count, edges).expect("reference graph is well formed")
}

/// Contrabalanced digon.
pub fn d2() -> GainGraph {
    build(2, &[(2, 1, 1), (1, 2, 0)])
}

/// Balanced triangle.
pub fn k3() -> GainGraph {
    build(3, &[(1, 2, 0), (2, 3, 0), (1, 3, 0)])
}

/// Balanced complete graph on four vertices (all gains zero).
pub fn k4() -> GainGraph {
    build(
        4,
        &[(1, 2, 0), (1, 3, 0), (1, 4, 0), (2, 3, 0), (2, 4, 0), (3, 4, 0)],
    )
}

/// Two digons at vertex 1 plus a single edge on `{2,3}`; two balanced triangles.
pub fn g_circ() -> GainGraph {
    build(3, &[(2, 1, 1), (1, 2, 0), (1, 3, 0), (3, 1, 1), (2, 3, 0)])
}

/// Three digons with three balanced triangles.
pub fn s3() -> GainGraph {
    build(
        3,
        &[(1, 2, 0), (2, 1, 1), (1, 3, 0), (3, 1, 1), (2, 3, 0), (2, 3, 1)],
    )
}

/// Four vertices, five digons and a single edge on `{2,4}`; census
/// `(k3, k4, d2, g_circ, s3) = (9, 2, 5, 1, 2)`.
pub fn final_example() -> GainGraph {
    build(
        4,
        &[
            (1, 2, 1),
            (2, 1, 0),
            (1, 3, 1),
            (3, 1, 0),
            (1, 4, 1),
            (4, 1, 0),
            (2, 3, 0),
            (3, 2, 1),
            (2, 4, 0),
            (4, 3, 1),
            (3, 4, 0),
        ],
    )
}
