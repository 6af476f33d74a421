//! Randomized cross-validation of the decider against the brute-force
//! oracle on small instances.

use rand::{Rng, RngCore};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::color::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::is_rainbow_connected;
use crate::rainbow::oracle::{oracle_rainbow_connected, ORACLE_MAX_N};
use crate::rng;

#[derive(Debug, Clone)]
pub struct MismatchCase {
    pub case: usize,
    pub n: usize,
    pub r: u32,
    pub edges: usize,
    pub decider: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone)]
pub struct OracleComparison {
    pub cases: usize,
    pub matches: usize,
    pub mismatches: Vec<MismatchCase>,
}

impl OracleComparison {
    pub fn all_agree(&self) -> bool {
        self.matches == self.cases
    }
}

/// Random instances: `n` uniform in `3..=n_max`, edge density uniform in
/// `[0,1)`, `r` uniform in `1..=5`. Deterministic in the seed.
pub fn compare_with_oracle(n_max: usize, cases: usize, seed: u64) -> Result<OracleComparison> {
    if !(3..=ORACLE_MAX_N).contains(&n_max) {
        return Err(Error::param(format!(
            "n_max must be in 3..={ORACLE_MAX_N}, got {n_max}"
        )));
    }
    let mut matches = 0;
    let mut mismatches = Vec::new();
    for case in 0..cases {
        let mut rng = ChaCha8Rng::seed_from_u64(rng::mix(&[seed, case as u64]));
        let n = rng.random_range(3..=n_max);
        let p: f64 = rng.random();
        let r: u32 = rng.random_range(1..=5);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random::<f64>() < p {
                    g.add_edge(u, v);
                }
            }
        }
        let col = EdgeColoring::uniform(&g, r, rng.next_u64())?;
        let decider = is_rainbow_connected(&g, &col, false)?.connected;
        let oracle = oracle_rainbow_connected(&g, &col)?;
        if decider == oracle {
            matches += 1;
        } else {
            mismatches.push(MismatchCase {
                case,
                n,
                r,
                edges: g.edge_count(),
                decider,
                oracle,
            });
        }
    }
    Ok(OracleComparison {
        cases,
        matches,
        mismatches,
    })
}
