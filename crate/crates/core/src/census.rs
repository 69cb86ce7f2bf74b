//! Counts of the distinguished biased subgraphs K₃, K₄, D₂, G∘ and S₃.
//!
//! Everything is counted per edge selection, not per vertex set: a vertex
//! triple carrying digons can host several balanced triangles, and a vertex
//! quadruple several balanced K₄ selections.
//!
//! S₃ and G∘ are recognized by counting balanced triangle selections. On a
//! triple whose three pairs are unbalanced digons, switching two tree edges to
//! gain zero leaves the balance pattern determined by two residual gains, and
//! the only pattern with three balanced selections (out of eight) is S₃. On a
//! five-edge selection with one single pair, G∘ is exactly the case with two
//! balanced selections out of four. The brute-force check lives in
//! [`crate::isomorphism`].

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::gain_graph::{GainGraph, Violation};
use crate::Rational;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BiasedCensus {
    pub k3: u64,
    pub k4: u64,
    pub d2: u64,
    pub g_circ: u64,
    pub s3: u64,
}

impl BiasedCensus {
    pub fn new(k3: u64, k4: u64, d2: u64, g_circ: u64, s3: u64) -> Self {
        BiasedCensus {
            k3,
            k4,
            d2,
            g_circ,
            s3,
        }
    }

    /// `2(k₃ + k₄ + d₂ + g∘) + 5 s₃`
    pub fn phi3(&self) -> u64 {
        2 * (self.k3 + self.k4 + self.d2 + self.g_circ) + 5 * self.s3
    }
}

pub fn phi3_census(c: &BiasedCensus) -> u64 {
    c.phi3()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("graph violates the census preconditions: {}", .0.iter().map(|v| v.to_string()).join("; "))]
    Invalid(Vec<Violation>),
}

fn ensure_valid(g: &GainGraph) -> Result<(), CensusError> {
    let violations = g.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CensusError::Invalid(violations))
    }
}

/// One edge choice per pair of a vertex triple `a < b < c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePattern {
    pub vertices: [usize; 3],
    /// Edge ids on the pairs `ab`, `bc`, `ac`.
    pub edges: [usize; 3],
    /// `φ(a→b) + φ(b→c) − φ(a→c)`
    pub gain: Rational,
}

impl TrianglePattern {
    pub fn is_balanced(&self) -> bool {
        self.gain.is_zero()
    }
}

type Classes = BTreeMap<(usize, usize), Vec<usize>>;

fn class(classes: &Classes, a: usize, b: usize) -> &[usize] {
    classes.get(&(a.min(b), a.max(b))).map_or(&[], Vec::as_slice)
}

fn triangle_gain(g: &GainGraph, [a, b, c]: [usize; 3], [ab, bc, ac]: [usize; 3]) -> Rational {
    g.oriented_gain(ab, a, b) + g.oriented_gain(bc, b, c) - g.oriented_gain(ac, a, c)
}

fn patterns_on(g: &GainGraph, classes: &Classes, vertices: [usize; 3]) -> Vec<TrianglePattern> {
    let [a, b, c] = vertices;
    let mut out = Vec::new();
    for &ab in class(classes, a, b) {
        for &bc in class(classes, b, c) {
            for &ac in class(classes, a, c) {
                let edges = [ab, bc, ac];
                out.push(TrianglePattern {
                    vertices,
                    edges,
                    gain: triangle_gain(g, vertices, edges),
                });
            }
        }
    }
    out
}

/// All triangle selections, balanced or not, in lexicographic vertex order
/// and ascending edge ids.
pub fn triangle_patterns(g: &GainGraph) -> Vec<TrianglePattern> {
    let classes = g.parallel_classes();
    (1..=g.vertex_count())
        .tuple_combinations()
        .flat_map(|(a, b, c)| patterns_on(g, &classes, [a, b, c]))
        .collect()
}

pub fn balanced_triangles(g: &GainGraph) -> Result<Vec<TrianglePattern>, CensusError> {
    ensure_valid(g)?;
    Ok(triangle_patterns(g)
        .into_iter()
        .filter(TrianglePattern::is_balanced)
        .collect())
}

pub fn count_k3(g: &GainGraph) -> Result<u64, CensusError> {
    Ok(balanced_triangles(g)?.len() as u64)
}

/// A balanced K₄ selection on `a < b < c < d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Selection {
    pub vertices: [usize; 4],
    /// Edge ids on `ab, ac, ad, bc, bd, cd`.
    pub edges: [usize; 6],
}

fn k4_on(g: &GainGraph, classes: &Classes, vertices: [usize; 4]) -> Vec<K4Selection> {
    let pairs: Vec<(usize, usize)> = vertices.iter().copied().tuple_combinations().collect();
    let choices: Vec<&[usize]> = pairs.iter().map(|&(u, v)| class(classes, u, v)).collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let slot = |u: usize, v: usize| pairs.iter().position(|&p| p == (u, v)).unwrap();
    let triangles: Vec<([usize; 3], [usize; 3])> = vertices
        .iter()
        .copied()
        .tuple_combinations()
        .map(|(a, b, c)| ([a, b, c], [slot(a, b), slot(b, c), slot(a, c)]))
        .collect();

    choices
        .into_iter()
        .map(|c| c.iter().copied())
        .multi_cartesian_product()
        .filter(|sel| {
            triangles.iter().all(|(vs, slots)| {
                triangle_gain(g, *vs, [sel[slots[0]], sel[slots[1]], sel[slots[2]]]).is_zero()
            })
        })
        .map(|sel| K4Selection {
            vertices,
            edges: sel.try_into().expect("six pairs"),
        })
        .collect()
}

/// Balanced K₄ selections. Only the four triangles are tested; the three
/// 4-circles are signed sums of two triangles each and follow.
pub fn k4_selections(g: &GainGraph) -> Result<Vec<K4Selection>, CensusError> {
    ensure_valid(g)?;
    let classes = g.parallel_classes();
    Ok((1..=g.vertex_count())
        .tuple_combinations()
        .flat_map(|(a, b, c, d)| k4_on(g, &classes, [a, b, c, d]))
        .collect())
}

pub fn count_k4(g: &GainGraph) -> Result<u64, CensusError> {
    Ok(k4_selections(g)?.len() as u64)
}

pub fn count_d2(g: &GainGraph) -> Result<u64, CensusError> {
    ensure_valid(g)?;
    Ok(count_digons(g))
}

fn count_digons(g: &GainGraph) -> u64 {
    g.parallel_classes().values().filter(|c| c.len() == 2).count() as u64
}

/// Per-triple data for S₃ and G∘ recognition.
struct TripleScan {
    vertices: [usize; 3],
    class_sizes: [usize; 3],
    balanced: Vec<[usize; 3]>,
}

impl TripleScan {
    fn is_s3(&self) -> bool {
        self.class_sizes == [2, 2, 2] && self.balanced.len() == 3
    }
}

fn scan_triples(g: &GainGraph) -> Vec<TripleScan> {
    let classes = g.parallel_classes();
    (1..=g.vertex_count())
        .tuple_combinations()
        .map(|(a, b, c)| {
            let vertices = [a, b, c];
            let class_sizes = [
                class(&classes, a, b).len(),
                class(&classes, b, c).len(),
                class(&classes, a, c).len(),
            ];
            let balanced = patterns_on(g, &classes, vertices)
                .into_iter()
                .filter(TrianglePattern::is_balanced)
                .map(|p| p.edges)
                .collect();
            TripleScan {
                vertices,
                class_sizes,
                balanced,
            }
        })
        .collect()
}

/// Vertex triples whose six edges form an S₃.
pub fn s3_triples(g: &GainGraph) -> Result<Vec<[usize; 3]>, CensusError> {
    ensure_valid(g)?;
    Ok(scan_triples(g)
        .into_iter()
        .filter(TripleScan::is_s3)
        .map(|t| t.vertices)
        .collect())
}

pub fn count_s3(g: &GainGraph) -> Result<u64, CensusError> {
    Ok(s3_triples(g)?.len() as u64)
}

/// A G∘ selection: the two doubled pairs meet at `apex`, and `single` is the
/// one chosen edge on the opposite pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCircSelection {
    pub vertices: [usize; 3],
    pub apex: usize,
    pub single: usize,
    /// All five edge ids, ascending.
    pub edges: Vec<usize>,
}

/// G∘ selections not contained in an S₃. With at most two parallel edges an
/// S₃ containing the five edges must be the whole triple, so an S₃ triple
/// contributes nothing.
pub fn g_circ_selections(g: &GainGraph) -> Result<Vec<GCircSelection>, CensusError> {
    ensure_valid(g)?;
    let classes = g.parallel_classes();
    let mut out = Vec::new();
    for scan in scan_triples(g) {
        if scan.is_s3() {
            continue;
        }
        let [a, b, c] = scan.vertices;
        // slot order matches TrianglePattern::edges: ab, bc, ac; the apex is
        // the vertex opposite the single pair
        let slots = [((a, b), c), ((b, c), a), ((a, c), b)];
        for (slot, ((u, v), apex)) in slots.into_iter().enumerate() {
            let doubled = (0..3).filter(|&s| s != slot).all(|s| scan.class_sizes[s] == 2);
            if !doubled {
                continue;
            }
            for &single in class(&classes, u, v) {
                let hits = scan.balanced.iter().filter(|e| e[slot] == single).count();
                if hits == 2 {
                    let mut edges: Vec<usize> = vec![single];
                    edges.extend_from_slice(class(&classes, apex.min(u), apex.max(u)));
                    edges.extend_from_slice(class(&classes, apex.min(v), apex.max(v)));
                    edges.sort_unstable();
                    out.push(GCircSelection {
                        vertices: scan.vertices,
                        apex,
                        single,
                        edges,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn count_g_circ(g: &GainGraph) -> Result<u64, CensusError> {
    Ok(g_circ_selections(g)?.len() as u64)
}

pub fn census(g: &GainGraph) -> Result<BiasedCensus, CensusError> {
    ensure_valid(g)?;
    let scans = scan_triples(g);
    let k3 = scans.iter().map(|s| s.balanced.len() as u64).sum();
    let s3 = scans.iter().filter(|s| s.is_s3()).count() as u64;
    Ok(BiasedCensus {
        k3,
        k4: count_k4(g)?,
        d2: count_digons(g),
        g_circ: count_g_circ(g)?,
        s3,
    })
}
