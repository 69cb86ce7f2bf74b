//! Gain graphs whose complete lifts are the cones of the braid, Shi, Linial
//! and semiorder arrangements, with their closed-form φ₃.
//!
//! Coning `x_i − x_j − c = 0` gives `x_i − x_j − c·x₀ = 0`, i.e. an edge
//! `i → j` with gain `−c`. Edges are emitted pair by pair in lexicographic
//! order.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::gain_graph::GainGraph;
use crate::lift_os::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Braid,
    Shi,
    Linial,
    Semiorder,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Braid, Family::Shi, Family::Linial, Family::Semiorder];

    pub fn name(self) -> &'static str {
        match self {
            Family::Braid => "braid",
            Family::Shi => "shi",
            Family::Linial => "linial",
            Family::Semiorder => "semiorder",
        }
    }

    /// Gains placed on each pair `i < j`, in emission order.
    fn gains(self) -> &'static [i64] {
        match self {
            Family::Braid => &[0],
            Family::Shi => &[0, -1],
            Family::Linial => &[-1],
            Family::Semiorder => &[1, -1],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family `{0}` (expected braid, shi, linial or semiorder)")]
    UnknownFamily(String),
    #[error("ell must be at least 1, got {0}")]
    EllTooSmall(usize),
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    ell: usize,
}

impl FamilySpec {
    pub fn new(family: Family, ell: usize) -> Result<Self, FamilyError> {
        if ell < 1 {
            return Err(FamilyError::EllTooSmall(ell));
        }
        Ok(FamilySpec { family, ell })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn ell(&self) -> usize {
        self.ell
    }
}

pub fn generate(spec: &FamilySpec) -> GainGraph {
    let edges: Vec<(usize, usize, i64)> = (1..=spec.ell)
        .tuple_combinations()
        .flat_map(|(i, j)| spec.family.gains().iter().map(move |&g| (i, j, g)))
        .collect();
    GainGraph::from_int_edges(spec.ell, &edges).expect("family edges stay in range")
}

pub fn phi3_closed_form(spec: &FamilySpec) -> i64 {
    let l = spec.ell as i64;
    match spec.family {
        Family::Braid => 2 * binomial(spec.ell as u64 + 1, 4),
        Family::Shi => l * (l - 1) * (2 * l * l + l - 4) / 6,
        Family::Linial => 0,
        Family::Semiorder => l * (l - 1),
    }
}
