//! Exact computation of the Falk invariant φ₃ for arrangements that are
//! canonical complete lift representations of additive rational gain graphs.
//!
//! Three independent routes are provided and cross-checked:
//!
//! * a census of small biased subgraphs ([`census`]),
//! * Falk's formula from `w₂` and `dim (I₂)³` ([`lift_os::phi3_falk`]),
//! * rank–nullity of the multiplication map `E¹ ⊗ I² → E³` ([`lift_os::phi3_kernel`]).
//!
//! All arithmetic is exact.

pub mod census;
pub mod cli;
pub mod families;
pub mod gain_graph;
pub mod isomorphism;
pub mod lift_os;
pub mod linalg;
pub mod reference_graphs;
pub mod text_format;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub use census::{census, phi3_census, BiasedCensus};
pub use gain_graph::{ClosedWalk, GainEdge, GainGraph, SwitchingFunction, Violation};
pub use lift_os::{report, Arrangement, Phi3Report, ThreeCircuit};
