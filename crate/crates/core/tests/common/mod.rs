#![allow(dead_code)]

use std::path::PathBuf;

use falk::{GainGraph, Rational, SwitchingFunction};
use itertools::Itertools;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> GainGraph {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    falk::text_format::parse(&text).unwrap()
}

pub const GAINS: [i64; 5] = [-2, -1, 0, 1, 2];

/// Random graph on `ell` vertices: each pair gets 0, 1 or 2 edges with gains
/// from `GAINS` and random orientation; a second parallel edge is redrawn
/// until the digon is unbalanced.
pub fn random_graph<R: Rng>(rng: &mut R, ell: usize) -> GainGraph {
    let mut g = GainGraph::new(ell).unwrap();
    for (i, j) in (1..=ell).tuple_combinations() {
        let count = rng.gen_range(0..=2);
        let mut used: Vec<i64> = Vec::new();
        for _ in 0..count {
            let gain = loop {
                let x = GAINS[rng.gen_range(0..GAINS.len())];
                if !used.contains(&x) {
                    break x;
                }
            };
            used.push(gain);
            let (t, h, x) = if rng.gen_bool(0.5) { (i, j, gain) } else { (j, i, -gain) };
            g.add_edge(t, h, Rational::from_integer(x.into())).unwrap();
        }
    }
    g
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=4).into())
}

pub fn random_switching<R: Rng>(rng: &mut R, ell: usize) -> SwitchingFunction {
    SwitchingFunction::new((0..ell).map(|_| random_rational(rng)).collect())
}
