//! Host generators: dense graphs with minimum degree at least `⌈δn⌉`.
//!
//! The model places no other constraint on the host, so the menu here is
//! deliberately adversarial rather than benign. `TwoCliques` in particular
//! is disconnected: hosts are not required to be connected, and a
//! disconnected host forces the random perturbation edges to do all
//! cross-component work.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HostKind {
    /// Complete graph K_n.
    Complete,
    /// Two disjoint cliques of sizes ⌈n/2⌉ and ⌊n/2⌋, no edges between them.
    TwoCliques,
    /// Complete multipartite graph with parts of size n − ⌈δn⌉.
    Blowup,
    /// Erdős–Rényi at edge density δ, then greedy additions up to the
    /// degree floor.
    RandomMinDeg,
}

impl HostKind {
    pub const ALL: [HostKind; 4] = [
        HostKind::Complete,
        HostKind::TwoCliques,
        HostKind::Blowup,
        HostKind::RandomMinDeg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HostKind::Complete => "complete",
            HostKind::TwoCliques => "two_cliques",
            HostKind::Blowup => "blowup",
            HostKind::RandomMinDeg => "random_mindeg",
        }
    }
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HostKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(HostKind::Complete),
            "two_cliques" => Ok(HostKind::TwoCliques),
            "blowup" => Ok(HostKind::Blowup),
            "random_mindeg" => Ok(HostKind::RandomMinDeg),
            other => Err(Error::param(format!(
                "unknown host kind `{other}` (expected complete, two_cliques, blowup, random_mindeg)"
            ))),
        }
    }
}

/// Ceiling with a 1e-9 slack so that decimal parameters round the way they
/// read (0.3 * 50 must give 15, not 16, despite binary representation).
pub(crate) fn ceil_slack(x: f64) -> usize {
    (x - 1e-9).ceil().max(0.0) as usize
}

/// The degree floor `⌈δn⌉`.
pub fn degree_target(n: usize, delta: f64) -> usize {
    ceil_slack(delta * n as f64)
}

fn validate(kind: HostKind, n: usize, delta: f64) -> Result<usize> {
    if n < 3 {
        return Err(Error::param(format!("host needs n >= 3, got {n}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::param(format!("delta must be in (0,1), got {delta}")));
    }
    if delta >= (n - 1) as f64 / n as f64 {
        return Err(Error::param(format!(
            "delta = {delta} >= (n-1)/n: no simple graph on {n} vertices has min degree ceil(delta*n)"
        )));
    }
    let target = degree_target(n, delta);
    if kind == HostKind::TwoCliques && target > n / 2 {
        return Err(Error::param(format!(
            "two_cliques max min-degree is {} but ceil(delta*n) = {target}",
            n / 2 - 1
        )));
    }
    Ok(target)
}

/// Build a host graph. Deterministic in `(kind, n, delta, seed)`.
///
/// Postcondition: `min_degree >= degree_target(n, delta)` for all kinds
/// except `TwoCliques`, whose structural maximum is `⌊n/2⌋ - 1`; it is
/// accepted when the target is at most `⌊n/2⌋`, i.e. a deficit of exactly
/// one at the δ = 1/2 boundary (even n), where no two-disjoint-clique graph
/// can meet the ceiling.
pub fn build_host(kind: HostKind, n: usize, delta: f64, seed: u64) -> Result<Graph> {
    let target = validate(kind, n, delta)?;
    let g = match kind {
        HostKind::Complete => complete(n),
        HostKind::TwoCliques => two_cliques(n),
        HostKind::Blowup => blowup(n, target),
        HostKind::RandomMinDeg => random_mindeg(n, delta, target, seed),
    };
    debug_assert!(g.check_invariants());
    debug_assert!(g.min_degree() + 1 >= target);
    Ok(g)
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn two_cliques(n: usize) -> Graph {
    let first = n.div_ceil(2);
    let mut g = Graph::new(n);
    for u in 0..first {
        for v in u + 1..first {
            g.add_edge(u, v);
        }
    }
    for u in first..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

fn blowup(n: usize, target: usize) -> Graph {
    // Vertices in consecutive chunks of size n - target; edges between
    // distinct chunks only. Degree of a vertex in a full part is exactly
    // the target; the (smaller) last part only does better.
    let part = (n - target).max(1);
    let part_of = |v: usize| v / part;
    Graph::from_edges(
        n,
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| part_of(u) != part_of(v))
                .map(move |v| (u, v))
        }),
    )
}

fn random_mindeg(n: usize, delta: f64, target: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < delta {
                g.add_edge(u, v);
            }
        }
    }
    // Greedy repair: wire each deficient vertex to the currently
    // lowest-degree non-neighbor (smallest index on ties).
    for v in 0..n {
        while g.degree(v) < target {
            let u = (0..n)
                .filter(|&u| u != v && !g.has_edge(u, v))
                .min_by_key(|&u| (g.degree(u), u))
                .expect("target <= n-1 guarantees a non-neighbor");
            g.add_edge(u, v);
        }
    }
    g
}
