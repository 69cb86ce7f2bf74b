//! Property tests for the invariants of each module.

mod common;

use std::collections::BTreeSet;

use falk::census::{self, count_g_circ, count_s3};
use falk::gain_graph::{ClosedWalk, GainGraph, SwitchingFunction};
use falk::isomorphism::{circles, is_biased_isomorphic};
use falk::lift_os::{self, build_arrangement, three_circuits};
use falk::linalg::{rank, rank_of_stacked, SparseMatrix, SparseVector};
use falk::reference_graphs as refs;
use falk::{text_format, Rational};
use itertools::Itertools;
use proptest::prelude::*;

// ============================================================================
// STRATEGIES
// ============================================================================

const GAINS: [i64; 5] = common::GAINS;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Per vertex pair: edge count and (gain index, flip orientation) per edge.
type PairPlan = (usize, [(usize, bool); 2]);

fn build_valid(ell: usize, plans: &[PairPlan]) -> GainGraph {
    let mut g = GainGraph::new(ell).unwrap();
    for ((i, j), (count, edges)) in (1..=ell).tuple_combinations().zip(plans) {
        let first = edges[0].0;
        for (k, &(idx, flip)) in edges.iter().take(*count).enumerate() {
            // a repeated gain on the second edge is shifted to keep the digon unbalanced
            let idx = if k == 1 && idx == first { (idx + 1) % GAINS.len() } else { idx };
            let gain = GAINS[idx];
            let (t, h, x) = if flip { (j, i, -gain) } else { (i, j, gain) };
            g.add_edge(t, h, q(x)).unwrap();
        }
    }
    g
}

fn pair_plan() -> impl Strategy<Value = PairPlan> {
    (0usize..=2, [(0usize..5, any::<bool>()), (0usize..5, any::<bool>())])
}

/// Graphs satisfying the standing hypotheses, up to `max_ell` vertices.
fn valid_graph(max_ell: usize) -> impl Strategy<Value = GainGraph> {
    (2..=max_ell).prop_flat_map(|ell| {
        let pairs = ell * (ell - 1) / 2;
        prop::collection::vec(pair_plan(), pairs).prop_map(move |plans| build_valid(ell, &plans))
    })
}

/// Any multigraph, loops and balanced digons included.
fn raw_graph() -> impl Strategy<Value = GainGraph> {
    (1usize..=4).prop_flat_map(|ell| {
        prop::collection::vec((1..=ell, 1..=ell, -2i64..=2), 0..10).prop_map(move |edges| {
            GainGraph::from_int_edges(ell, &edges).unwrap()
        })
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn graph_and_switching(max_ell: usize) -> impl Strategy<Value = (GainGraph, SwitchingFunction)> {
    valid_graph(max_ell).prop_flat_map(|g| {
        let ell = g.vertex_count();
        (Just(g), prop::collection::vec(rational(), ell).prop_map(SwitchingFunction::new))
    })
}

fn int_matrix(max: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(lo..=hi, c), r)
    })
}

// ============================================================================
// ORACLES
// ============================================================================

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for (c, &x) in m[0].iter().enumerate() {
        if x == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect())
            .collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * x * det(&minor);
    }
    total
}

/// Largest `k` with a nonzero `k × k` minor.
fn brute_rank(m: &[Vec<i64>]) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    for k in (1..=rows.min(cols)).rev() {
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                if det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn triangle_walks(g: &GainGraph) -> Vec<ClosedWalk> {
    let mut walks: Vec<ClosedWalk> = census::triangle_patterns(g)
        .into_iter()
        .map(|p| {
            let [a, b, c] = p.vertices;
            let [ab, bc, ac] = p.edges;
            ClosedWalk::new(vec![a, b, c, a], vec![ab, bc, ac])
        })
        .collect();
    for (&(u, v), ids) in &g.parallel_classes() {
        for (&x, &y) in ids.iter().tuple_combinations() {
            walks.push(ClosedWalk::new(vec![u, v, u], vec![x, y]));
        }
    }
    walks
}

// ============================================================================
// EXACT RANK
// ============================================================================

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose(m in int_matrix(7, -3, 3)) {
        let a = SparseMatrix::from_dense_i64(&m);
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn rank_invariant_under_row_operations(
        m in int_matrix(6, -2, 2),
        scale in rational().prop_filter("nonzero", |x| *x != q(0)),
        seed in any::<u64>(),
    ) {
        let a = SparseMatrix::from_dense_i64(&m);
        let mut rows: Vec<SparseVector> = (0..a.rows()).map(|r| a.row(r).clone()).collect();
        let expected = rank_of_stacked(&rows);
        let k = (seed as usize) % rows.len();
        rows[k] = rows[k].iter().map(|(&c, v)| (c, v * &scale)).collect();
        let shift = (seed >> 8) as usize % rows.len();
        rows.rotate_left(shift);
        prop_assert_eq!(rank_of_stacked(&rows), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_matches_minor_oracle(m in int_matrix(8, -1, 1)) {
        let a = SparseMatrix::from_dense_i64(&m);
        prop_assert_eq!(rank(&a), brute_rank(&m));
    }
}

// ============================================================================
// GAIN GRAPHS
// ============================================================================

proptest! {
    #[test]
    fn switching_preserves_circle_gains((g, lambda) in graph_and_switching(5)) {
        let s = g.switch(&lambda);
        for w in triangle_walks(&g) {
            prop_assert_eq!(g.circle_gain(&w).unwrap(), s.circle_gain(&w).unwrap());
        }
    }

    #[test]
    fn reversal_negates_circle_gain(g in valid_graph(5)) {
        for w in triangle_walks(&g) {
            let gain = g.circle_gain(&w).unwrap();
            prop_assert_eq!(g.circle_gain(&w.reversed()).unwrap(), -gain.clone());
            prop_assert_eq!(
                g.is_balanced_circle(&w.reversed()).unwrap(),
                g.is_balanced_circle(&w).unwrap()
            );
            prop_assert_eq!(g.circle_gain(&w.rotated(1)).unwrap(), gain);
        }
    }

    #[test]
    fn switching_preserves_violations(
        g in raw_graph(),
        values in prop::collection::vec(rational(), 4),
    ) {
        let lambda = SwitchingFunction::new(values[..g.vertex_count()].to_vec());
        prop_assert_eq!(g.switch(&lambda).validate(), g.validate());
    }

    #[test]
    fn text_format_round_trip((g, lambda) in graph_and_switching(5)) {
        // switching produces non-integer gains
        let g = g.switch(&lambda);
        let back = text_format::parse(&text_format::serialize(&g)).unwrap();
        prop_assert_eq!(back, g);
    }
}

// ============================================================================
// CENSUS
// ============================================================================

proptest! {
    #[test]
    fn census_structure(g in valid_graph(5)) {
        let c = census::census(&g).unwrap();
        prop_assert!(c.k3 >= 3 * c.s3);
        let doubled = g.parallel_classes().values().filter(|ids| ids.len() == 2).count() as u64;
        prop_assert_eq!(c.d2, doubled);
    }

    #[test]
    fn census_is_switching_invariant((g, lambda) in graph_and_switching(5)) {
        prop_assert_eq!(census::census(&g.switch(&lambda)).unwrap(), census::census(&g).unwrap());
    }

    #[test]
    fn k4_selections_balance_every_circle(g in valid_graph(5)) {
        for sel in census::k4_selections(&g).unwrap() {
            let edges: Vec<_> = sel
                .edges
                .iter()
                .map(|&id| g.edge(id).unwrap())
                .map(|e| {
                    let pos = |v: usize| sel.vertices.iter().position(|&x| x == v).unwrap() + 1;
                    (pos(e.tail), pos(e.head), e.gain.clone())
                })
                .collect();
            let sub = GainGraph::from_edges(4, edges).unwrap();
            let all = circles(&sub);
            prop_assert_eq!(all.len(), 7);
            prop_assert!(all.iter().all(|(_, balanced)| *balanced));
        }
    }

    #[test]
    fn s3_shortcut_matches_isomorphism(plans in prop::collection::vec(pair_plan(), 3)) {
        let plans: Vec<PairPlan> = plans.into_iter().map(|(_, e)| (2, e)).collect();
        let g = build_valid(3, &plans);
        let shortcut = count_s3(&g).unwrap() == 1;
        prop_assert_eq!(shortcut, is_biased_isomorphic(&g, &refs::s3()).unwrap());
    }

    #[test]
    fn g_circ_shortcut_matches_isomorphism(
        plans in prop::collection::vec(pair_plan(), 3),
        single in 0usize..3,
    ) {
        let plans: Vec<PairPlan> = plans
            .into_iter()
            .enumerate()
            .map(|(k, (_, e))| (if k == single { 1 } else { 2 }, e))
            .collect();
        let g = build_valid(3, &plans);
        let shortcut = count_g_circ(&g).unwrap() == 1;
        prop_assert_eq!(shortcut, is_biased_isomorphic(&g, &refs::g_circ()).unwrap());
    }
}

// ============================================================================
// ARRANGEMENT AND ORLIK–SOLOMON
// ============================================================================

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn circuits_are_exactly_rank_two_triples(g in valid_graph(5)) {
        prop_assume!(g.edge_count() < 12);
        let a = build_arrangement(&g).unwrap();
        prop_assert_eq!(three_circuits(&g).unwrap(), a.rank_two_triples());
    }

    #[test]
    fn lemma_identities_and_agreement(g in valid_graph(5)) {
        let r = lift_os::report(&g).unwrap();
        prop_assert!(r.w2_matches_census(), "w2 {} vs {}", r.w2, lift_os::w2_from_census(r.n_edges, &r.census));
        prop_assert!(r.dim_i2_3_matches_census());
        prop_assert_eq!(r.dim_i2, r.circuits.len());
        prop_assert_eq!(r.phi3_census, r.phi3_falk);
        prop_assert_eq!(r.phi3_falk, r.phi3_kernel);
    }

    #[test]
    fn f3_generator_count(g in valid_graph(5)) {
        let m = g.edge_count() + 1;
        let c = three_circuits(&g).unwrap();
        let expected = c.len() * m.saturating_sub(3);
        prop_assert_eq!(lift_os::f3_generators(m, &c).len(), expected);
    }

    #[test]
    fn phi3_falk_is_switching_invariant((g, lambda) in graph_and_switching(5)) {
        let s = g.switch(&lambda);
        let a = build_arrangement(&g).unwrap();
        let b = build_arrangement(&s).unwrap();
        prop_assert_eq!(
            lift_os::phi3_falk(&a, &three_circuits(&g).unwrap()),
            lift_os::phi3_falk(&b, &three_circuits(&s).unwrap())
        );
        prop_assert_eq!(lift_os::w2(&a), lift_os::w2(&b));
    }

    #[test]
    fn flats_partition_pairs(g in valid_graph(4)) {
        let a = build_arrangement(&g).unwrap();
        let flats = a.rank_two_flats();
        let pairs: usize = flats.iter().map(|f| f.len() * (f.len() - 1) / 2).sum();
        let m = a.hyperplane_count();
        prop_assert_eq!(pairs, m * (m - 1) / 2);
        let distinct: BTreeSet<_> = flats.iter().collect();
        prop_assert_eq!(distinct.len(), flats.len());
    }
}
