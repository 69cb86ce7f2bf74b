//! Additive rational gain graphs.
//!
//! Each edge is stored once with a fixed orientation `tail -> head` and a gain
//! `g`; reading it from `head` to `tail` gives `-g`. Vertices are `1..=ℓ`,
//! edge ids are `1..=n` in insertion order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainEdge {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
    pub gain: Rational,
}

impl GainEdge {
    /// Gain of the edge when traversed from `from` to `to`, or `None` if the
    /// edge does not join them.
    pub fn gain_from(&self, from: usize, to: usize) -> Option<Rational> {
        if (from, to) == (self.tail, self.head) {
            Some(self.gain.clone())
        } else if (from, to) == (self.head, self.tail) {
            Some(-self.gain.clone())
        } else {
            None
        }
    }

    /// Endpoints as an unordered pair `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a gain graph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} has endpoint {vertex} outside 1..={vertex_count}")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("a closed walk needs one more vertex than edges (got {vertices} vertices, {edges} edges)")]
    LengthMismatch { vertices: usize, edges: usize },
    #[error("walk does not close: starts at {start}, ends at {end}")]
    NotClosed { start: usize, end: usize },
    #[error("walk uses unknown edge {0}")]
    UnknownEdge(usize),
    #[error("edge {edge} does not join vertices {from} and {to}")]
    NotIncident { edge: usize, from: usize, to: usize },
}

/// A closed walk `v0 e1 v1 e2 ... ek vk` with `vk == v0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl ClosedWalk {
    pub fn new(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        ClosedWalk { vertices, edges }
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        ClosedWalk { vertices, edges }
    }

    /// The same closed walk started `k` steps later.
    pub fn rotated(&self, k: usize) -> Self {
        let len = self.edges.len();
        if len == 0 {
            return self.clone();
        }
        let k = k % len;
        let mut edges = self.edges.clone();
        edges.rotate_left(k);
        let mut vertices: Vec<usize> = self.vertices[..len].to_vec();
        vertices.rotate_left(k);
        vertices.push(vertices[0]);
        ClosedWalk { vertices, edges }
    }
}

/// Vertex potentials used to switch a gain graph. Indexed by vertex, `values[v - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    values: Vec<Rational>,
}

impl SwitchingFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        SwitchingFunction { values }
    }

    pub fn zero(vertex_count: usize) -> Self {
        SwitchingFunction {
            values: vec![Rational::zero(); vertex_count],
        }
    }

    pub fn value(&self, vertex: usize) -> &Rational {
        &self.values[vertex - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A hard violation of the standing hypotheses (no loops, at most two edges
/// per vertex pair, every digon unbalanced).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Loop { edge: usize },
    TripleParallel { pair: (usize, usize), edges: Vec<usize> },
    BalancedDigon { pair: (usize, usize), edges: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { edge } => write!(f, "loop: edge {edge}"),
            Violation::TripleParallel { pair, edges } => {
                let ids: Vec<String> = edges.iter().map(usize::to_string).collect();
                write!(
                    f,
                    "triple parallel: vertices {} and {} joined by edges {}",
                    pair.0,
                    pair.1,
                    ids.join(", ")
                )
            }
            Violation::BalancedDigon { pair, edges } => write!(
                f,
                "balanced digon: edges {} and {} between vertices {} and {}",
                edges.0, edges.1, pair.0, pair.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainGraph {
    vertex_count: usize,
    edges: Vec<GainEdge>,
}

impl GainGraph {
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(GainGraph {
            vertex_count,
            edges: Vec::new(),
        })
    }

    /// Builds a graph from `(tail, head, gain)` triples; ids follow the order given.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut g = GainGraph::new(vertex_count)?;
        for (tail, head, gain) in edges {
            g.add_edge(tail, head, gain)?;
        }
        Ok(g)
    }

    /// Integer-gain convenience constructor.
    pub fn from_int_edges(vertex_count: usize, edges: &[(usize, usize, i64)]) -> Result<Self, GraphError> {
        GainGraph::from_edges(
            vertex_count,
            edges
                .iter()
                .map(|&(t, h, g)| (t, h, Rational::from_integer(g.into()))),
        )
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, tail: usize, head: usize, gain: Rational) -> Result<usize, GraphError> {
        let id = self.edges.len() + 1;
        for vertex in [tail, head] {
            if vertex == 0 || vertex > self.vertex_count {
                return Err(GraphError::EndpointOutOfRange {
                    edge: id,
                    vertex,
                    vertex_count: self.vertex_count,
                });
            }
        }
        self.edges.push(GainEdge {
            id,
            tail,
            head,
            gain,
        });
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[GainEdge] {
        &self.edges
    }

    /// Edge by 1-based id.
    pub fn edge(&self, id: usize) -> Option<&GainEdge> {
        id.checked_sub(1).and_then(|i| self.edges.get(i))
    }

    /// Gain of edge `id` read from `from` to `to`.
    ///
    /// Panics if the edge does not join the two vertices.
    pub fn oriented_gain(&self, id: usize, from: usize, to: usize) -> Rational {
        self.edge(id)
            .and_then(|e| e.gain_from(from, to))
            .unwrap_or_else(|| panic!("edge {id} does not join {from} and {to}"))
    }

    /// Sum of oriented gains along a closed walk.
    pub fn circle_gain(&self, walk: &ClosedWalk) -> Result<Rational, WalkError> {
        let (vs, es) = (&walk.vertices, &walk.edges);
        if vs.len() != es.len() + 1 {
            return Err(WalkError::LengthMismatch {
                vertices: vs.len(),
                edges: es.len(),
            });
        }
        let (start, end) = (vs[0], vs[vs.len() - 1]);
        if start != end {
            return Err(WalkError::NotClosed { start, end });
        }
        let mut total = Rational::zero();
        for (i, &id) in es.iter().enumerate() {
            let edge = self.edge(id).ok_or(WalkError::UnknownEdge(id))?;
            let (from, to) = (vs[i], vs[i + 1]);
            let g = edge
                .gain_from(from, to)
                .ok_or(WalkError::NotIncident { edge: id, from, to })?;
            total += g;
        }
        Ok(total)
    }

    pub fn is_balanced_circle(&self, walk: &ClosedWalk) -> Result<bool, WalkError> {
        Ok(self.circle_gain(walk)?.is_zero())
    }

    /// Replaces every gain by `-λ(tail) + gain + λ(head)`.
    pub fn switch(&self, lambda: &SwitchingFunction) -> GainGraph {
        assert_eq!(
            lambda.len(),
            self.vertex_count,
            "switching function must assign every vertex"
        );
        let edges = self
            .edges
            .iter()
            .map(|e| GainEdge {
                gain: -lambda.value(e.tail).clone() + &e.gain + lambda.value(e.head),
                ..e.clone()
            })
            .collect();
        GainGraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Edge ids grouped by unordered endpoint pair, ascending within each class.
    pub fn parallel_classes(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for e in &self.edges {
            classes.entry(e.pair()).or_default().push(e.id);
        }
        classes
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for e in self.edges.iter().filter(|e| e.is_loop()) {
            out.push(Violation::Loop { edge: e.id });
        }
        for (pair, ids) in self.parallel_classes() {
            if pair.0 == pair.1 {
                continue;
            }
            if ids.len() > 2 {
                out.push(Violation::TripleParallel {
                    pair,
                    edges: ids.clone(),
                });
                continue;
            }
            if let [a, b] = ids[..] {
                let ga = self.oriented_gain(a, pair.0, pair.1);
                let gb = self.oriented_gain(b, pair.0, pair.1);
                if ga == gb {
                    out.push(Violation::BalancedDigon { pair, edges: (a, b) });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}
