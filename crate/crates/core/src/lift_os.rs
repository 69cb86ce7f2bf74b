//! The canonical complete lift arrangement of a gain graph and the pieces of
//! its Orlik–Solomon algebra needed for φ₃.
//!
//! Hyperplane `0` is `{x₀ = 0}`; hyperplane `i ≥ 1` belongs to edge `i` and has
//! normal `e_tail − e_head + gain·e₀`. Exterior monomials are sorted index
//! lists and `∂ e_{i<j<k} = e_{jk} − e_{ik} + e_{ij}`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::census::{self, BiasedCensus, CensusError};
use crate::gain_graph::{GainGraph, Violation};
use crate::linalg::{self, SparseMatrix, SparseVector};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("graph violates the standing hypotheses: {}", .0.iter().map(|v| v.to_string()).join("; "))]
    Invalid(Vec<Violation>),
}

impl From<CensusError> for LiftError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Invalid(v) => LiftError::Invalid(v),
        }
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

// ---------------------------------------------------------------------------
// Exterior algebra

/// Sparse element of the exterior algebra. Keys are strictly increasing
/// index lists; stored coefficients are nonzero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExteriorVector {
    terms: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or `None` if an index repeats.
fn sort_with_sign(indices: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

impl ExteriorVector {
    pub fn zero() -> Self {
        ExteriorVector::default()
    }

    /// The monomial `e_{i₁} ∧ ⋯ ∧ e_{i_p}` in the given order.
    pub fn monomial(indices: &[usize]) -> Self {
        let mut v = ExteriorVector::zero();
        v.add_term(indices, Rational::one());
        v
    }

    /// Adds `coeff · e_{indices}`, reordering the indices with the sign of the permutation.
    pub fn add_term(&mut self, indices: &[usize], coeff: Rational) {
        let mut key = indices.to_vec();
        let Some(negative) = sort_with_sign(&mut key) else {
            return;
        };
        let coeff = if negative { -coeff } else { coeff };
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                if !coeff.is_zero() {
                    slot.insert(coeff);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> + '_ {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, indices: &[usize]) -> Rational {
        let mut key = indices.to_vec();
        match sort_with_sign(&mut key) {
            None => Rational::zero(),
            Some(negative) => {
                let c = self.terms.get(&key).cloned().unwrap_or_else(Rational::zero);
                if negative {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// `e_t ∧ self`
    pub fn wedge_left(&self, t: usize) -> Self {
        let mut out = ExteriorVector::zero();
        for (key, c) in &self.terms {
            let mut indices = Vec::with_capacity(key.len() + 1);
            indices.push(t);
            indices.extend_from_slice(key);
            out.add_term(&indices, c.clone());
        }
        out
    }

    /// `∂ e_S = Σ_j (−1)^{j−1} e_{S∖s_j}`, extended linearly.
    pub fn boundary(&self) -> Self {
        let mut out = ExteriorVector::zero();
        for (key, c) in &self.terms {
            for j in 0..key.len() {
                let rest: Vec<usize> = key
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &x)| x)
                    .collect();
                let coeff = if j % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(&rest, coeff);
            }
        }
        out
    }

    pub fn negated(&self) -> Self {
        ExteriorVector {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl fmt::Display for ExteriorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            let label: String = key.iter().map(|x| x.to_string()).join(",");
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "e{{{label}}}")?;
        }
        Ok(())
    }
}

/// Position of a strictly increasing `subset` of `0..universe` among all
/// subsets of the same size in lexicographic order.
pub fn lex_rank(subset: &[usize], universe: usize) -> usize {
    let p = subset.len();
    let mut rank = 0usize;
    let mut next = 0usize;
    for (i, &s) in subset.iter().enumerate() {
        for v in next..s {
            rank += binomial((universe - 1 - v) as u64, (p - 1 - i) as u64) as usize;
        }
        next = s + 1;
    }
    rank
}

/// Rows are `vectors`, columns are the degree-`degree` monomials on
/// `0..universe` in lexicographic order.
pub fn exterior_matrix(vectors: &[ExteriorVector], universe: usize, degree: usize) -> SparseMatrix {
    let cols = binomial(universe as u64, degree as u64) as usize;
    let entries = vectors.iter().enumerate().flat_map(|(r, v)| {
        v.terms().map(move |(key, c)| {
            assert_eq!(key.len(), degree, "mixed degrees in exterior matrix");
            (r, lex_rank(key, universe), c.clone())
        })
    });
    SparseMatrix::from_entries(vectors.len(), cols, entries).expect("lexicographic columns are in range")
}

fn exterior_rank(vectors: &[ExteriorVector], universe: usize) -> usize {
    let rows: Vec<SparseVector> = vectors
        .iter()
        .map(|v| v.terms().map(|(k, c)| (lex_rank(k, universe), c.clone())).collect())
        .collect();
    linalg::rank_of_stacked(&rows)
}

// ---------------------------------------------------------------------------
// Arrangement

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    normals: Vec<Vec<Rational>>,
}

/// A dependent triple of hyperplanes, sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThreeCircuit(pub [usize; 3]);

impl ThreeCircuit {
    pub fn new(mut indices: [usize; 3]) -> Self {
        indices.sort_unstable();
        ThreeCircuit(indices)
    }

    pub fn indices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, t: usize) -> bool {
        self.0.contains(&t)
    }
}

impl fmt::Display for ThreeCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{{{a},{b},{c}}}")
    }
}

/// Reduced row-echelon form of a small dense matrix, zero rows dropped.
fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut lead = 0;
    for c in 0..cols {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(lead, p);
        let inv = rows[lead][c].recip();
        for x in rows[lead].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != lead && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    rows.truncate(lead);
    rows
}

impl Arrangement {
    /// Arrangement from explicit normals, each of length `ambient_dim`.
    pub fn new(ambient_dim: usize, normals: Vec<Vec<Rational>>) -> Self {
        assert!(
            normals.iter().all(|n| n.len() == ambient_dim),
            "normal length must equal the ambient dimension"
        );
        Arrangement {
            ambient_dim,
            normals,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplane_count(&self) -> usize {
        self.normals.len()
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    pub fn normal(&self, i: usize) -> &[Rational] {
        &self.normals[i]
    }

    /// Linear form of hyperplane `i`, e.g. `x1 - x2 - x0`.
    pub fn linear_form(&self, i: usize) -> String {
        let n = &self.normals[i];
        let mut order: Vec<usize> = (1..n.len()).collect();
        order.push(0);
        let mut out = String::new();
        for c in order {
            let v = &n[c];
            if v.is_zero() {
                continue;
            }
            let negative = v < &Rational::zero();
            let abs = if negative { -v.clone() } else { v.clone() };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}"));
            }
            out.push_str(&format!("x{c}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn rank_of(&self, indices: &[usize]) -> usize {
        let rows: Vec<SparseVector> = indices
            .iter()
            .map(|&i| {
                self.normals[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        linalg::rank_of_stacked(&rows)
    }

    /// Triples whose normals have rank exactly two, found by direct rank
    /// computation.
    pub fn rank_two_triples(&self) -> Vec<ThreeCircuit> {
        (0..self.hyperplane_count())
            .tuple_combinations()
            .filter(|&(a, b, c)| self.rank_of(&[a, b, c]) == 2)
            .map(|(a, b, c)| ThreeCircuit([a, b, c]))
            .collect()
    }

    /// Codimension-two flats as sorted hyperplane sets, keyed by the reduced
    /// row-echelon form of any two of their normals.
    pub fn rank_two_flats(&self) -> Vec<BTreeSet<usize>> {
        let mut flats: HashMap<Vec<Vec<Rational>>, BTreeSet<usize>> = HashMap::new();
        for (i, j) in (0..self.hyperplane_count()).tuple_combinations() {
            let key = rref(vec![self.normals[i].clone(), self.normals[j].clone()]);
            if key.len() == 2 {
                flats.entry(key).or_default().extend([i, j]);
            }
        }
        let mut out: Vec<BTreeSet<usize>> = flats.into_values().collect();
        out.sort();
        out
    }
}

pub fn build_arrangement(g: &GainGraph) -> Result<Arrangement, LiftError> {
    let violations = g.validate();
    if !violations.is_empty() {
        return Err(LiftError::Invalid(violations));
    }
    let dim = g.vertex_count() + 1;
    let mut normals = Vec::with_capacity(g.edge_count() + 1);
    let mut x0 = vec![Rational::zero(); dim];
    x0[0] = Rational::one();
    normals.push(x0);
    for e in g.edges() {
        let mut n = vec![Rational::zero(); dim];
        n[0] = e.gain.clone();
        n[e.tail] += Rational::one();
        n[e.head] -= Rational::one();
        normals.push(n);
    }
    Ok(Arrangement::new(dim, normals))
}

/// Dependent triples read off the graph: balanced triangles, and `{0, i, j}`
/// for each digon `{i, j}`. Sorted.
pub fn three_circuits(g: &GainGraph) -> Result<Vec<ThreeCircuit>, LiftError> {
    let mut out: Vec<ThreeCircuit> = census::balanced_triangles(g)?
        .into_iter()
        .map(|p| ThreeCircuit::new(p.edges))
        .collect();
    for ids in g.parallel_classes().values() {
        if let [i, j] = ids[..] {
            out.push(ThreeCircuit::new([0, i, j]));
        }
    }
    out.sort();
    Ok(out)
}

/// `e_t ∧ ∂ e_S`
pub fn boundary_generator(t: usize, s: &ThreeCircuit) -> ExteriorVector {
    ExteriorVector::monomial(&s.0).boundary().wedge_left(t)
}

/// `{ e_t ∂ e_S : S a circuit, t ∉ S }`, circuit-major.
pub fn f3_generators(hyperplanes: usize, circuits: &[ThreeCircuit]) -> Vec<ExteriorVector> {
    circuits
        .iter()
        .flat_map(|s| {
            (0..hyperplanes)
                .filter(move |&t| !s.contains(t))
                .map(move |t| boundary_generator(t, s))
        })
        .collect()
}

/// Spanning set of `(I₂)³`: the F₃ generators together with each `e_S`.
pub fn i2_3_generators(hyperplanes: usize, circuits: &[ThreeCircuit]) -> Vec<ExteriorVector> {
    let mut gens: Vec<ExteriorVector> = circuits.iter().map(|s| ExteriorVector::monomial(&s.0)).collect();
    gens.extend(f3_generators(hyperplanes, circuits));
    gens
}

pub fn dim_span_f3(a: &Arrangement, circuits: &[ThreeCircuit]) -> usize {
    let m = a.hyperplane_count();
    exterior_rank(&f3_generators(m, circuits), m)
}

pub fn dim_i2_3(a: &Arrangement, circuits: &[ThreeCircuit]) -> usize {
    let m = a.hyperplane_count();
    exterior_rank(&i2_3_generators(m, circuits), m)
}

/// `dim I²`, the rank of the boundaries `∂ e_S` in degree two.
pub fn dim_i2(a: &Arrangement, circuits: &[ThreeCircuit]) -> usize {
    let m = a.hyperplane_count();
    let boundaries: Vec<ExteriorVector> = circuits
        .iter()
        .map(|s| ExteriorVector::monomial(&s.0).boundary())
        .collect();
    exterior_rank(&boundaries, m)
}

/// Second Whitney number from the geometry: each codimension-two flat
/// holding `k` hyperplanes contributes `μ = k − 1`.
pub fn w2(a: &Arrangement) -> usize {
    a.rank_two_flats().iter().map(|f| f.len() - 1).sum()
}

/// `2·C(m+1,3) − m·w₂ + C(m,3) − dim (I₂)³` with `m` hyperplanes.
pub fn falk_formula(m: usize, w2: usize, dim_i2_3: usize) -> i64 {
    let m64 = m as u64;
    2 * binomial(m64 + 1, 3) - (m as i64) * (w2 as i64) + binomial(m64, 3) - dim_i2_3 as i64
}

pub fn phi3_falk(a: &Arrangement, circuits: &[ThreeCircuit]) -> i64 {
    falk_formula(a.hyperplane_count(), w2(a), dim_i2_3(a, circuits))
}

/// `dim ker(E¹ ⊗ I² → E³) = m·dim I² − rank`, the image being `(I₂)³`.
pub fn phi3_kernel(a: &Arrangement, circuits: &[ThreeCircuit]) -> i64 {
    let m = a.hyperplane_count() as i64;
    m * dim_i2(a, circuits) as i64 - dim_i2_3(a, circuits) as i64
}

/// `C(n+1, 2) − k₃ − d₂` for a graph with `n` edges.
pub fn w2_from_census(n_edges: usize, c: &BiasedCensus) -> i64 {
    binomial(n_edges as u64 + 1, 2) - c.k3 as i64 - c.d2 as i64
}

/// `(n − 1)(k₃ + d₂) − 2k₄ − 2g∘ − 5s₃` for a graph with `n` edges.
pub fn dim_i2_3_from_census(n_edges: usize, c: &BiasedCensus) -> i64 {
    (n_edges as i64 - 1) * (c.k3 + c.d2) as i64
        - 2 * c.k4 as i64
        - 2 * c.g_circ as i64
        - 5 * c.s3 as i64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phi3Report {
    pub n_edges: usize,
    pub m_hyperplanes: usize,
    pub census: BiasedCensus,
    pub circuits: Vec<ThreeCircuit>,
    pub w2: usize,
    pub dim_i2: usize,
    pub dim_i2_3: usize,
    pub phi3_census: i64,
    pub phi3_falk: i64,
    pub phi3_kernel: i64,
}

impl Phi3Report {
    pub fn agreement(&self) -> bool {
        self.phi3_census == self.phi3_falk && self.phi3_falk == self.phi3_kernel
    }

    pub fn w2_matches_census(&self) -> bool {
        self.w2 as i64 == w2_from_census(self.n_edges, &self.census)
    }

    pub fn dim_i2_3_matches_census(&self) -> bool {
        self.dim_i2_3 as i64 == dim_i2_3_from_census(self.n_edges, &self.census)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Invalid(#[from] LiftError),
    #[error(
        "methods disagree: census {}, falk {}, kernel {}",
        .0.phi3_census, .0.phi3_falk, .0.phi3_kernel
    )]
    Disagreement(Box<Phi3Report>),
}

/// Runs every route and insists they agree.
pub fn report(g: &GainGraph) -> Result<Phi3Report, ReportError> {
    let a = build_arrangement(g)?;
    let census = census::census(g).map_err(LiftError::from)?;
    let circuits = three_circuits(g)?;
    let m = a.hyperplane_count();
    let w2 = w2(&a);
    let dim_i2 = dim_i2(&a, &circuits);
    let dim_i2_3 = dim_i2_3(&a, &circuits);
    let r = Phi3Report {
        n_edges: g.edge_count(),
        m_hyperplanes: m,
        census,
        circuits,
        w2,
        dim_i2,
        dim_i2_3,
        phi3_census: census.phi3() as i64,
        phi3_falk: falk_formula(m, w2, dim_i2_3),
        phi3_kernel: m as i64 * dim_i2 as i64 - dim_i2_3 as i64,
    };
    if r.agreement() {
        Ok(r)
    } else {
        Err(ReportError::Disagreement(Box::new(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference_graphs as refs;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ev(terms: &[(i64, [usize; 3])]) -> ExteriorVector {
        let mut v = ExteriorVector::zero();
        for (c, k) in terms {
            v.add_term(k, q(*c));
        }
        v
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(21, 3), 1330);
    }

    #[test]
    fn monomial_signs() {
        let v = ExteriorVector::monomial(&[3, 1, 2]);
        assert_eq!(v.coefficient(&[1, 2, 3]), q(1));
        let w = ExteriorVector::monomial(&[2, 1, 3]);
        assert_eq!(w.coefficient(&[1, 2, 3]), q(-1));
        assert_eq!(w.coefficient(&[2, 1, 3]), q(1));
        assert!(ExteriorVector::monomial(&[1, 1, 2]).is_zero());
    }

    #[test]
    fn boundary_of_triple() {
        let b = ExteriorVector::monomial(&[2, 3, 5]).boundary();
        let mut expected = ExteriorVector::zero();
        expected.add_term(&[3, 5], q(1));
        expected.add_term(&[2, 5], q(-1));
        expected.add_term(&[2, 3], q(1));
        assert_eq!(b, expected);
        assert!(b.boundary().is_zero());
    }

    #[test]
    fn printed_generators() {
        let s012 = ThreeCircuit([0, 1, 2]);
        assert_eq!(
            boundary_generator(3, &s012),
            ev(&[(1, [0, 1, 3]), (-1, [0, 2, 3]), (1, [1, 2, 3])])
        );
        let s235 = ThreeCircuit([2, 3, 5]);
        assert_eq!(
            boundary_generator(1, &s235),
            ev(&[(1, [1, 3, 5]), (-1, [1, 2, 5]), (1, [1, 2, 3])])
        );
    }

    #[test]
    fn generator_inside_circuit_is_a_monomial() {
        let s = ThreeCircuit([1, 4, 6]);
        // e_t ∧ ∂e_S = e_S for every t in S
        for t in [1, 4, 6] {
            let v = boundary_generator(t, &s);
            assert_eq!(v.len(), 1);
            assert_eq!(v.coefficient(&[1, 4, 6]), q(1));
        }
    }

    #[test]
    fn lex_rank_enumerates_in_order() {
        let all: Vec<Vec<usize>> = (0..6).combinations(3).collect();
        for (i, s) in all.iter().enumerate() {
            assert_eq!(lex_rank(s, 6), i);
        }
    }

    #[test]
    fn g_circ_arrangement_forms() {
        let a = build_arrangement(&refs::g_circ()).unwrap();
        let forms: Vec<String> = (0..a.hyperplane_count()).map(|i| a.linear_form(i)).collect();
        assert_eq!(
            forms,
            vec!["x0", "-x1 + x2 + x0", "x1 - x2", "x1 - x3", "-x1 + x3 + x0", "x2 - x3"]
        );
    }

    #[test]
    fn single_edge_normals() {
        let g = GainGraph::from_edges(2, [(1, 2, Rational::new(1.into(), 2.into()))]).unwrap();
        let a = build_arrangement(&g).unwrap();
        assert_eq!(a.normal(0), &[q(1), q(0), q(0)]);
        assert_eq!(a.normal(1), &[Rational::new(1.into(), 2.into()), q(1), q(-1)]);
    }

    #[test]
    fn empty_graph_has_only_the_extra_hyperplane() {
        let a = build_arrangement(&GainGraph::new(2).unwrap()).unwrap();
        assert_eq!(a.hyperplane_count(), 1);
        assert_eq!(w2(&a), 0);
        assert_eq!(phi3_falk(&a, &[]), 0);
        assert_eq!(phi3_kernel(&a, &[]), 0);
        assert_eq!(dim_i2_3(&a, &[]), 0);
    }

    #[test]
    fn g_circ_circuits_and_dimensions() {
        let g = refs::g_circ();
        let a = build_arrangement(&g).unwrap();
        let c = three_circuits(&g).unwrap();
        let labels: Vec<[usize; 3]> = c.iter().map(|s| s.0).collect();
        assert_eq!(labels, vec![[0, 1, 2], [0, 3, 4], [1, 4, 5], [2, 3, 5]]);
        assert_eq!(a.rank_two_triples(), c);
        assert_eq!(f3_generators(6, &c).len(), 12);
        assert_eq!(dim_span_f3(&a, &c), 10);
        assert_eq!(dim_i2_3(&a, &c), 14);
        assert_eq!(dim_i2(&a, &c), 4);
        assert_eq!(w2(&a), 11);
        assert_eq!(phi3_falk(&a, &c), 10);
        assert_eq!(phi3_kernel(&a, &c), 10);
    }

    #[test]
    fn s3_dimensions() {
        let g = refs::s3();
        let a = build_arrangement(&g).unwrap();
        let c = three_circuits(&g).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(f3_generators(7, &c).len(), 24);
        assert_eq!(dim_span_f3(&a, &c), 19);
        assert_eq!(dim_i2_3(&a, &c), 25);
        assert_eq!(w2(&a), 15);
        assert_eq!(phi3_falk(&a, &c), 17);
        assert_eq!(phi3_kernel(&a, &c), 17);
    }

    #[test]
    fn balanced_k4_dimensions() {
        let g = refs::k4();
        let a = build_arrangement(&g).unwrap();
        let c = three_circuits(&g).unwrap();
        assert_eq!(dim_span_f3(&a, &c), 14);
    }

    #[test]
    fn generic_arrangement_w2() {
        // four generic planes in 3-space: every pair is its own flat
        let normals = vec![
            vec![q(1), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
            vec![q(1), q(2), q(5)],
        ];
        let a = Arrangement::new(3, normals);
        assert_eq!(w2(&a), binomial(4, 2) as usize);
    }

    #[test]
    fn final_example_report() {
        let r = report(&refs::final_example()).unwrap();
        assert_eq!(r.m_hyperplanes, 12);
        assert_eq!(r.circuits.len(), 14);
        assert_eq!((r.phi3_census, r.phi3_falk, r.phi3_kernel), (44, 44, 44));
        assert!(r.w2_matches_census());
        assert!(r.dim_i2_3_matches_census());
    }

    #[test]
    fn invalid_graph_is_rejected() {
        let g = GainGraph::from_int_edges(2, &[(1, 2, 0), (2, 1, 0)]).unwrap();
        assert!(matches!(build_arrangement(&g), Err(LiftError::Invalid(_))));
        assert!(matches!(report(&g), Err(ReportError::Invalid(_))));
    }

    #[test]
    fn display_forms() {
        assert_eq!(ThreeCircuit::new([5, 0, 2]).to_string(), "{0,2,5}");
        let v = boundary_generator(3, &ThreeCircuit([0, 1, 2]));
        assert_eq!(v.to_string(), "e{0,1,3} - e{0,2,3} + e{1,2,3}");
    }
}
