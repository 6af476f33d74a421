//! Random perturbation: add `m` uniformly random edges to a host graph.
//!
//! Two sampling modes exist because the model can be read two ways and the
//! weaker one simplifies proofs:
//!
//! * [`ReplacementMode::Weak`]: `m` pair draws from all of `C(n,2)`, with
//!   replacement; duplicates and pairs already in the host are absorbed.
//! * [`ReplacementMode::Strict`]: `m` edges drawn uniformly without
//!   replacement from `C(n,2) \ E(H)`.
//!
//! Both modes consume a single seeded pair stream, so edge sets are nested
//! across increasing `m` at a fixed seed; coupled-monotonicity experiments
//! rely on that prefix property.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ReplacementMode {
    #[default]
    Weak,
    Strict,
}

impl ReplacementMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ReplacementMode::Weak => "weak",
            ReplacementMode::Strict => "strict",
        }
    }
}

impl fmt::Display for ReplacementMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReplacementMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(ReplacementMode::Weak),
            "strict" => Ok(ReplacementMode::Strict),
            other => Err(Error::param(format!(
                "unknown replacement mode `{other}` (expected weak or strict)"
            ))),
        }
    }
}

/// Uniform stream of unordered pairs from `C(n,2)`.
struct PairStream {
    n: usize,
    rng: ChaCha8Rng,
}

impl PairStream {
    fn new(n: usize, seed: u64) -> Self {
        PairStream {
            n,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn next_pair(&mut self) -> (usize, usize) {
        loop {
            let u = self.rng.random_range(0..self.n);
            let v = self.rng.random_range(0..self.n);
            if u != v {
                return (u.min(v), u.max(v));
            }
        }
    }
}

/// Add `m` random edges to `h`. Deterministic in the seed; the host's edges
/// are always preserved.
pub fn perturb(h: &Graph, m: usize, mode: ReplacementMode, seed: u64) -> Result<Graph> {
    let n = h.n();
    if n < 2 && m > 0 {
        return Err(Error::param(format!(
            "cannot add edges to a graph on {n} vertices"
        )));
    }
    let mut g = h.clone();
    let mut stream = PairStream::new(n, seed);
    match mode {
        ReplacementMode::Weak => {
            for _ in 0..m {
                let (u, v) = stream.next_pair();
                g.add_edge(u, v);
            }
        }
        ReplacementMode::Strict => {
            let free = n * (n - 1) / 2 - h.edge_count();
            if m > free {
                return Err(Error::param(format!(
                    "strict mode: m = {m} exceeds the {free} pairs outside the host"
                )));
            }
            let mut added = 0;
            while added < m {
                let (u, v) = stream.next_pair();
                if g.add_edge(u, v) {
                    added += 1;
                }
            }
        }
    }
    debug_assert!(g.check_invariants());
    Ok(g)
}
