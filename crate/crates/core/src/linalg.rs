//! Exact rank over the rationals.
//!
//! Every matrix is reduced to integer rows (denominators cleared per row) and
//! brought to echelon form by fraction-free elimination: a row is combined
//! with a stored pivot row as `p * row - r * pivot`, after which the row is
//! divided by the gcd of its entries. All intermediates are arbitrary
//! precision, so no entry growth can overflow and no tolerance is involved.
//!
//! Pivoting is first-nonzero: the pivot of a row is its lowest nonzero column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A sparse row vector: column index to nonzero value.
pub type SparseVector = BTreeMap<usize, Rational>;

/// Sparse matrix with exact rational entries. Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("entry ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate entry at ({row}, {col})")]
    Duplicate { row: usize, col: usize },
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVector::new(); rows],
        }
    }

    /// Builds a matrix from `(row, col, value)` triples. Zero values are dropped.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = SparseMatrix::zeros(rows, cols);
        for (row, col, value) in entries {
            if row >= rows || col >= cols {
                return Err(MatrixError::OutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            if m.data[row].contains_key(&col) {
                return Err(MatrixError::Duplicate { row, col });
            }
            if !value.is_zero() {
                m.data[row].insert(col, value);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from dense rows of integers.
    pub fn from_dense_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.data[r].insert(c, Rational::from_integer(BigInt::from(v)));
                }
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix::from_entries(n, n, (0..n).map(|i| (i, i, Rational::one())))
            .expect("diagonal entries are in range")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVector {
        &self.data[r]
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.data[row].get(&col).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = SparseMatrix::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.data[c].insert(r, v.clone());
        }
        t
    }

    pub fn rank(&self) -> usize {
        rank_of_stacked(&self.data)
    }
}

/// Rank of a matrix over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    m.rank()
}

/// Rank of the matrix whose rows are `rows`. Column indices only need to be
/// consistent across the vectors; no explicit column count is required.
pub fn rank_of_stacked(rows: &[SparseVector]) -> usize {
    let mut echelon = Echelon::default();
    for row in rows {
        echelon.insert(integer_row(row));
    }
    echelon.rank()
}

type IntRow = Vec<(usize, BigInt)>;

/// Incremental row-echelon basis with integer pivot rows, keyed by pivot column.
#[derive(Debug, Default)]
struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; keeps it as a new pivot if
    /// anything survives. Returns whether the rank grew.
    fn insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some((lead_col, _)) = row.first() else {
                return false;
            };
            let lead_col = *lead_col;
            match self.pivots.get(&lead_col) {
                Some(pivot) => {
                    row = eliminate(&row, pivot);
                    normalize(&mut row);
                }
                None => {
                    self.pivots.insert(lead_col, row);
                    return true;
                }
            }
        }
    }
}

/// Clears denominators of a rational row, yielding a primitive integer row
/// with positive leading coefficient.
fn integer_row(row: &SparseVector) -> IntRow {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(&c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    normalize(&mut out);
    out
}

/// `p * row - r * pivot` where `p`, `r` are the leading coefficients; the
/// leading column cancels.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let p = &pivot[0].1;
    let r = &row[0].1;
    let g = p.gcd(r);
    let p = p / &g;
    let r = r / &g;

    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        let (col, value) = match (ci, cj) {
            (Some(a), Some(b)) if a == b => {
                let v = &p * &row[i].1 - &r * &pivot[j].1;
                i += 1;
                j += 1;
                (a, v)
            }
            (Some(a), Some(b)) if a < b => {
                i += 1;
                (a, &p * &row[i - 1].1)
            }
            (Some(a), None) => {
                i += 1;
                (a, &p * &row[i - 1].1)
            }
            (_, Some(b)) => {
                j += 1;
                (b, -(&r * &pivot[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

fn normalize(row: &mut IntRow) {
    let Some(first) = row.first() else {
        return;
    };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if g.is_one() && !flip {
        return;
    }
    for (_, v) in row.iter_mut() {
        if !g.is_one() {
            *v = &*v / &g;
        }
        if flip {
            *v = -&*v;
        }
    }
}
