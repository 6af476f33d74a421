//! Constructive rainbow-path certificates.
//!
//! The procedure samples `t` small vertex sets, tests each for "goodness"
//! (every pair of members has an edge between their trimmed neighborhoods),
//! and then assembles, for every vertex pair `(u, v)`, a rainbow path of
//! length at most 5 of the shape `u-a-a'-b'-b-v` (or shorter degenerate
//! forms). Success yields a checkable [`Certificate`]; failure is a value
//! listing the pairs that resisted, not an error. The procedure is
//! one-sided: a certificate implies rainbow connectivity, but the exact
//! decider can succeed where the procedure fails.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::color::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::host::ceil_slack;
use crate::rainbow::{is_rainbow_path, ColorMask};
use crate::rng;

/// Default number of sampled sets, `⌈100 ln n⌉`.
pub fn default_t(n: usize) -> usize {
    ceil_slack(100.0 * (n as f64).ln())
}

/// Default set size, `⌈6/δ⌉ + 1` (the smallest integer beyond `6/δ`).
pub fn default_k(delta: f64) -> usize {
    ceil_slack(6.0 / delta) + 1
}

/// Which vertices are carved out of the neighborhoods in the goodness
/// test. The asymptotic argument removes the union of all sampled sets;
/// at desk scale `t·k` exceeds `n`, the union is all of `V`, and nothing
/// would ever be good, so the default removes only the set under test
/// (which is what the construction actually needs: the witness edge must
/// avoid the members it is routed around).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodnessScope {
    #[default]
    SampledSet,
    FamilyUnion,
}

/// `t` multisets of `k` vertices drawn uniformly with replacement.
pub struct SampleFamily {
    pub t: usize,
    pub k: usize,
    pub seed: u64,
    n: usize,
    /// Draws per set, sorted; repeats are kept (multiset semantics).
    sets: Vec<Vec<usize>>,
    /// Distinct members per set, sorted.
    supports: Vec<Vec<usize>>,
    /// Supports again, as bitsets (the assembly hot path).
    support_bits: Vec<Bitset>,
    /// Union of all supports.
    union: Bitset,
    /// Neighborhood of each set's support: `N(S_i) = ∪_{s∈S_i} N(s)`.
    nbhd: Vec<Bitset>,
}

impl SampleFamily {
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn support(&self, i: usize) -> &[usize] {
        &self.supports[i]
    }

    pub fn support_bits(&self, i: usize) -> &Bitset {
        &self.support_bits[i]
    }

    pub fn union(&self) -> &Bitset {
        &self.union
    }

    pub fn support_neighborhood(&self, i: usize) -> &Bitset {
        &self.nbhd[i]
    }

    /// True when `k >= n`: sampling is still valid but the union of the
    /// sets is likely to cover every vertex.
    pub fn oversampled(&self) -> bool {
        self.k >= self.n
    }

    /// Does set `i` see both `u` and `v` in its support's neighborhood?
    #[inline]
    pub fn covers_pair(&self, i: usize, u: usize, v: usize) -> bool {
        self.nbhd[i].contains(u) && self.nbhd[i].contains(v)
    }

    /// Index set `{ i : u, v ∈ N(S_i) }`, ascending.
    pub fn index_set(&self, u: usize, v: usize) -> Vec<usize> {
        assert!(u != v, "index_set needs distinct vertices");
        (0..self.t).filter(|&i| self.covers_pair(i, u, v)).collect()
    }
}

/// Draw the family. Deterministic in `(seed, t, k)`; overrides exist for
/// experiments, defaults follow `default_t` / `default_k`.
pub fn sample_family(
    g: &Graph,
    delta: f64,
    seed: u64,
    t_override: Option<usize>,
    k_override: Option<usize>,
) -> Result<SampleFamily> {
    let n = g.n();
    if n < 2 {
        return Err(Error::param(format!("sampling needs n >= 2, got {n}")));
    }
    let t = t_override.unwrap_or_else(|| default_t(n));
    let k = k_override.unwrap_or_else(|| default_k(delta));
    if t == 0 || k == 0 {
        return Err(Error::param(format!(
            "degenerate family shape t={t}, k={k}"
        )));
    }
    let mut rng = rng::stream(seed, rng::TAG_FAMILY);
    let mut sets = Vec::with_capacity(t);
    let mut supports = Vec::with_capacity(t);
    let mut support_bits = Vec::with_capacity(t);
    let mut union = Bitset::new(n);
    let mut nbhd = Vec::with_capacity(t);
    for _ in 0..t {
        let mut draws: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).collect();
        draws.sort_unstable();
        let mut support = draws.clone();
        support.dedup();
        let mut hood = Bitset::new(n);
        let mut bits = Bitset::new(n);
        for &s in &support {
            union.insert(s);
            bits.insert(s);
            hood.union_with(g.neighbors(s));
        }
        sets.push(draws);
        supports.push(support);
        support_bits.push(bits);
        nbhd.push(hood);
    }
    Ok(SampleFamily {
        t,
        k,
        seed,
        n,
        sets,
        supports,
        support_bits,
        union,
        nbhd,
    })
}

/// Goodness verdict for one sampled set.
#[derive(Debug, Clone)]
pub struct GoodnessRecord {
    pub good: bool,
    /// For good sets: per support pair `(a, b)` with `a < b`, a witness
    /// edge `(a', b')` with `a' ∈ N(a)∖X`, `b' ∈ N(b)∖X`. The two trimmed
    /// neighborhoods need not be disjoint, so the edge may lie inside
    /// their intersection.
    pub witnesses: BTreeMap<(usize, usize), (usize, usize)>,
    /// For bad sets: the first pair with no witness edge.
    pub failing_pair: Option<(usize, usize)>,
}

/// Test set `i`: every pair of distinct members must have an edge of `g`
/// between their neighborhoods minus the excluded vertices. Witness per
/// pair: smallest `a'`, then smallest `b'`.
pub fn is_good(g: &Graph, family: &SampleFamily, i: usize, scope: GoodnessScope) -> GoodnessRecord {
    let support = family.support(i);
    let excluded = exclusion(family, i, scope);
    let mut witnesses = BTreeMap::new();
    for (ai, &a) in support.iter().enumerate() {
        for &b in &support[ai + 1..] {
            let mut side_b = g.neighbors(b).clone();
            side_b.subtract(&excluded);
            let mut found = None;
            let mut side_a = g.neighbors(a).clone();
            side_a.subtract(&excluded);
            for a_prime in side_a.iter() {
                if let Some(b_prime) = g.neighbors(a_prime).first_common(&side_b) {
                    found = Some((a_prime, b_prime));
                    break;
                }
            }
            match found {
                Some(edge) => {
                    witnesses.insert((a, b), edge);
                }
                None => {
                    return GoodnessRecord {
                        good: false,
                        witnesses: BTreeMap::new(),
                        failing_pair: Some((a, b)),
                    }
                }
            }
        }
    }
    GoodnessRecord {
        good: true,
        witnesses,
        failing_pair: None,
    }
}

fn exclusion(family: &SampleFamily, i: usize, scope: GoodnessScope) -> Bitset {
    match scope {
        GoodnessScope::FamilyUnion => family.union.clone(),
        GoodnessScope::SampledSet => family.support_bits[i].clone(),
    }
}

/// Where a certified path came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `uv` is itself an edge.
    DirectEdge,
    /// `u-a-v` through a common sampled neighbor.
    TwoPath { set: usize, via: usize },
    /// The full `u-a-a'-b'-b-v` construction.
    FivePath {
        set: usize,
        a: usize,
        b: usize,
        a_prime: usize,
        b_prime: usize,
    },
}

#[derive(Debug, Clone)]
pub struct CertifiedPath {
    pub path: Vec<usize>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairDiagnosis {
    /// No sampled set sees both endpoints.
    NoIndex,
    /// Some sets see the pair, but every candidate assembly failed
    /// rainbowness (or vertex distinctness).
    AllIndicesFailed,
}

impl PairDiagnosis {
    pub fn as_str(self) -> &'static str {
        match self {
            PairDiagnosis::NoIndex => "no-index",
            PairDiagnosis::AllIndicesFailed => "all-indices-failed",
        }
    }
}

/// Try to assemble a rainbow `u`–`v` path of length at most 5 from the
/// sampled sets, scanning indices in ascending order and candidate
/// `(a, b)` pairs exhaustively within each set (vertex order breaks ties).
/// `None` means the procedure failed for this pair; callers may fall back
/// to the exact decider.
pub fn assemble_path(
    g: &Graph,
    col: &EdgeColoring,
    family: &SampleFamily,
    goodness: &[GoodnessRecord],
    u: usize,
    v: usize,
) -> Option<CertifiedPath> {
    assemble_with_diag(g, col, family, goodness, u, v).0.ok()
}

fn assemble_with_diag(
    g: &Graph,
    col: &EdgeColoring,
    family: &SampleFamily,
    goodness: &[GoodnessRecord],
    u: usize,
    v: usize,
) -> (std::result::Result<CertifiedPath, PairDiagnosis>, u64) {
    assert!(u != v, "assemble_path needs distinct vertices");
    if g.has_edge(u, v) {
        // A single edge is trivially rainbow.
        return (
            Ok(CertifiedPath {
                path: vec![u, v],
                provenance: Provenance::DirectEdge,
            }),
            0,
        );
    }
    let r = col.r();
    let fail = |saw_index: bool, attempts: u64| {
        let diag = if saw_index {
            PairDiagnosis::AllIndicesFailed
        } else {
            PairDiagnosis::NoIndex
        };
        (Err(diag), attempts)
    };
    // A 2-path needs two colors; with one color only direct edges exist
    // and the whole scan is foregone (the diagnosis still distinguishes
    // uncovered pairs).
    if r < 2 {
        let saw_index = (0..family.t).any(|i| family.covers_pair(i, u, v));
        return fail(saw_index, 0);
    }
    // Candidates that cannot pass the rainbow check are never evaluated:
    // the a = b form needs r >= 2, the five-edge form needs r >= 5 and a
    // good set. Within those constraints the enumeration order is the
    // nested (a, b) vertex-order scan.
    let five_possible = r >= 5;
    let mut common = g.neighbors(u).clone();
    common.intersect_with(g.neighbors(v));
    let mut scratch = Bitset::new(g.n());
    let mut attempts = 0u64;
    let mut saw_index = false;
    for (i, record) in goodness.iter().enumerate() {
        if !family.covers_pair(i, u, v) {
            continue;
        }
        saw_index = true;
        if five_possible && record.good {
            let support = family.support(i);
            for &a in support.iter().filter(|&&a| g.has_edge(u, a)) {
                for &b in support.iter().filter(|&&b| g.has_edge(v, b)) {
                    attempts += 1;
                    if a == b {
                        // u-a-v, rainbow iff its two colors differ.
                        let c1 = col.color(u, a).expect("edge");
                        let c2 = col.color(a, v).expect("edge");
                        if c1 != c2 {
                            return (
                                Ok(CertifiedPath {
                                    path: vec![u, a, v],
                                    provenance: Provenance::TwoPath { set: i, via: a },
                                }),
                                attempts,
                            );
                        }
                    } else {
                        let key = (a.min(b), a.max(b));
                        let &(x, y) = record
                            .witnesses
                            .get(&key)
                            .expect("good set has all pair witnesses");
                        let (a_prime, b_prime) = if a == key.0 { (x, y) } else { (y, x) };
                        if let Some(path) = five_path(col, u, a, a_prime, b_prime, b, v) {
                            return (
                                Ok(CertifiedPath {
                                    path,
                                    provenance: Provenance::FivePath {
                                        set: i,
                                        a,
                                        b,
                                        a_prime,
                                        b_prime,
                                    },
                                }),
                                attempts,
                            );
                        }
                    }
                }
            }
        } else {
            // Only the a = b form is viable here; its candidates are the
            // support members adjacent to both endpoints, in vertex order
            // (the same relative order the full scan would visit them).
            scratch.copy_from(&common);
            scratch.intersect_with(family.support_bits(i));
            for a in scratch.iter() {
                attempts += 1;
                let c1 = col.color(u, a).expect("edge");
                let c2 = col.color(a, v).expect("edge");
                if c1 != c2 {
                    return (
                        Ok(CertifiedPath {
                            path: vec![u, a, v],
                            provenance: Provenance::TwoPath { set: i, via: a },
                        }),
                        attempts,
                    );
                }
            }
        }
    }
    fail(saw_index, attempts)
}

/// Accept `u-a-a'-b'-b-v` iff all six vertices are distinct and the five
/// edge colors are pairwise distinct. Degenerate collisions (e.g. a' = v)
/// are skipped rather than shortened: shorter routes are found through
/// their own candidate forms or the exact fallback.
fn five_path(
    col: &EdgeColoring,
    u: usize,
    a: usize,
    a_prime: usize,
    b_prime: usize,
    b: usize,
    v: usize,
) -> Option<Vec<usize>> {
    let path = [u, a, a_prime, b_prime, b, v];
    for i in 0..6 {
        for j in i + 1..6 {
            if path[i] == path[j] {
                return None;
            }
        }
    }
    let mut mask = ColorMask::EMPTY;
    for w in path.windows(2) {
        let c = col.color(w[0], w[1]).expect("construction uses edges");
        if mask.contains(c) {
            return None;
        }
        mask = mask.with(c);
    }
    Some(path.to_vec())
}

/// Tunables for [`certify`]; `Default` is the procedure as analyzed.
#[derive(Debug, Clone, Copy, Default)]
pub struct CertifyParams {
    pub t_override: Option<usize>,
    pub k_override: Option<usize>,
    pub scope: GoodnessScope,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifyStats {
    pub seed: u64,
    pub t: usize,
    pub k: usize,
    pub good_sets: usize,
    pub good_fraction: f64,
    /// Minimum of `|I_{u,v}| / t` over non-adjacent pairs (1 if none).
    pub min_index_fraction: f64,
    pub pairs: usize,
    pub pairs_direct: usize,
    pub pairs_two: usize,
    pub pairs_five: usize,
    pub pairs_failed: usize,
    pub attempts_total: u64,
    pub attempts_max: u64,
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub paths: BTreeMap<(usize, usize), CertifiedPath>,
    pub stats: CertifyStats,
}

#[derive(Debug, Clone)]
pub struct FailedPair {
    pub pair: (usize, usize),
    pub diagnosis: PairDiagnosis,
}

#[derive(Debug, Clone)]
pub struct CertifyFailure {
    pub failed: Vec<FailedPair>,
    pub stats: CertifyStats,
}

/// Failure is an outcome, not an error.
pub enum CertifyOutcome {
    Certified(Box<Certificate>),
    Failed(CertifyFailure),
}

impl CertifyOutcome {
    pub fn succeeded(&self) -> bool {
        matches!(self, CertifyOutcome::Certified(_))
    }

    pub fn stats(&self) -> &CertifyStats {
        match self {
            CertifyOutcome::Certified(c) => &c.stats,
            CertifyOutcome::Failed(f) => &f.stats,
        }
    }
}

/// Run the whole procedure: sample, grade every set, assemble every pair.
pub fn certify(
    g: &Graph,
    col: &EdgeColoring,
    delta: f64,
    seed: u64,
    params: CertifyParams,
) -> Result<CertifyOutcome> {
    let family = sample_family(g, delta, seed, params.t_override, params.k_override)?;
    let goodness: Vec<GoodnessRecord> = (0..family.t)
        .map(|i| is_good(g, &family, i, params.scope))
        .collect();
    let good_sets = goodness.iter().filter(|r| r.good).count();

    let n = g.n();
    let mut paths = BTreeMap::new();
    let mut failed = Vec::new();
    let mut min_index_fraction = 1.0f64;
    let mut attempts_total = 0u64;
    let mut attempts_max = 0u64;
    let (mut pairs_direct, mut pairs_two, mut pairs_five) = (0usize, 0usize, 0usize);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let covered = (0..family.t)
                    .filter(|&i| family.covers_pair(i, u, v))
                    .count();
                min_index_fraction = min_index_fraction.min(covered as f64 / family.t as f64);
            }
            let (outcome, attempts) = assemble_with_diag(g, col, &family, &goodness, u, v);
            attempts_total += attempts;
            attempts_max = attempts_max.max(attempts);
            match outcome {
                Ok(cp) => {
                    match cp.provenance {
                        Provenance::DirectEdge => pairs_direct += 1,
                        Provenance::TwoPath { .. } => pairs_two += 1,
                        Provenance::FivePath { .. } => pairs_five += 1,
                    }
                    paths.insert((u, v), cp);
                }
                Err(diagnosis) => failed.push(FailedPair {
                    pair: (u, v),
                    diagnosis,
                }),
            }
        }
    }

    let pairs = n * (n - 1) / 2;
    let stats = CertifyStats {
        seed,
        t: family.t,
        k: family.k,
        good_sets,
        good_fraction: good_sets as f64 / family.t as f64,
        min_index_fraction,
        pairs,
        pairs_direct,
        pairs_two,
        pairs_five,
        pairs_failed: failed.len(),
        attempts_total,
        attempts_max,
    };
    if failed.is_empty() {
        Ok(CertifyOutcome::Certified(Box::new(Certificate {
            paths,
            stats,
        })))
    } else {
        Ok(CertifyOutcome::Failed(CertifyFailure { failed, stats }))
    }
}

impl Certificate {
    /// Soundness: every stored path is rainbow, joins its pair, and has at
    /// most 5 edges.
    pub fn validate(&self, g: &Graph, col: &EdgeColoring) -> Result<()> {
        for (&(u, v), cp) in &self.paths {
            if cp.path.first() != Some(&u) || cp.path.last() != Some(&v) {
                return Err(Error::validation(format!(
                    "path for ({u},{v}) has wrong endpoints"
                )));
            }
            if cp.path.len() > 6 {
                return Err(Error::validation(format!(
                    "path for ({u},{v}) longer than 5 edges"
                )));
            }
            if !is_rainbow_path(g, col, &cp.path)? {
                return Err(Error::validation(format!(
                    "path for ({u},{v}) is not rainbow"
                )));
            }
        }
        Ok(())
    }

    pub fn max_path_edges(&self) -> usize {
        self.paths
            .values()
            .map(|cp| cp.path.len() - 1)
            .max()
            .unwrap_or(0)
    }
}

fn stats_block(stats: &CertifyStats) -> String {
    let mut out = String::from("# stats\n");
    let _ = writeln!(out, "seed={}", stats.seed);
    let _ = writeln!(out, "t={}", stats.t);
    let _ = writeln!(out, "k={}", stats.k);
    let _ = writeln!(out, "good_sets={}", stats.good_sets);
    let _ = writeln!(out, "good_fraction={}", stats.good_fraction);
    let _ = writeln!(out, "min_index_fraction={}", stats.min_index_fraction);
    let _ = writeln!(out, "pairs={}", stats.pairs);
    let _ = writeln!(out, "pairs_direct={}", stats.pairs_direct);
    let _ = writeln!(out, "pairs_two={}", stats.pairs_two);
    let _ = writeln!(out, "pairs_five={}", stats.pairs_five);
    let _ = writeln!(out, "pairs_failed={}", stats.pairs_failed);
    let _ = writeln!(out, "attempts_total={}", stats.attempts_total);
    let _ = writeln!(out, "attempts_max={}", stats.attempts_max);
    out
}

/// Text form: one `c <u> <v> : <path>` line per pair, then a stats block.
pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    for (&(u, v), cp) in &cert.paths {
        let _ = write!(out, "c {u} {v} :");
        for w in &cp.path {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out.push_str(&stats_block(&cert.stats));
    out
}

/// Text form of a failure: one `f <u> <v> <diagnosis>` line per pair.
pub fn write_failure(failure: &CertifyFailure) -> String {
    let mut out = String::new();
    for fp in &failure.failed {
        let _ = writeln!(
            out,
            "f {} {} {}",
            fp.pair.0,
            fp.pair.1,
            fp.diagnosis.as_str()
        );
    }
    out.push_str(&stats_block(&failure.stats));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::{build_host, HostKind};
    use crate::perturb::{perturb, ReplacementMode};

    #[test]
    fn default_shapes_match_the_analysis() {
        assert_eq!(default_t(22026), 1000); // ceil(100 ln n) at n ≈ e^10
        assert_eq!(default_t(300), 571);
        assert_eq!(default_t(400), 600);
        assert_eq!(default_k(0.5), 13);
        assert_eq!(default_k(0.3), 21);
    }

    #[test]
    fn family_shape_and_reproducibility() {
        let g = build_host(HostKind::RandomMinDeg, 10, 0.3, 1).unwrap();
        let f1 = sample_family(&g, 0.3, 2, Some(5), Some(3)).unwrap();
        let f2 = sample_family(&g, 0.3, 2, Some(5), Some(3)).unwrap();
        assert_eq!(f1.t, 5);
        assert_eq!(f1.k, 3);
        for i in 0..5 {
            assert_eq!(f1.set(i), f2.set(i));
            assert_eq!(f1.set(i).len(), 3);
            assert!(f1.set(i).windows(2).all(|w| w[0] <= w[1]));
            assert!(f1.support(i).len() <= 3);
        }
        assert!(!f1.oversampled());
        assert!(sample_family(&g, 0.3, 2, Some(3), Some(12))
            .unwrap()
            .oversampled());
    }

    #[test]
    fn singleton_support_is_vacuously_good() {
        let g = build_host(HostKind::Complete, 8, 0.5, 0).unwrap();
        let f = sample_family(&g, 0.5, 3, Some(40), Some(1)).unwrap();
        for i in 0..f.t {
            let rec = is_good(&g, &f, i, GoodnessScope::SampledSet);
            assert!(rec.good);
            assert!(rec.witnesses.is_empty());
        }
    }

    #[test]
    fn complete_graph_sets_are_good() {
        let g = build_host(HostKind::Complete, 30, 0.5, 0).unwrap();
        let f = sample_family(&g, 0.5, 5, Some(20), Some(4)).unwrap();
        for i in 0..f.t {
            let rec = is_good(&g, &f, i, GoodnessScope::SampledSet);
            assert!(rec.good, "set {i}");
        }
    }

    #[test]
    fn unperturbed_two_cliques_cross_set_is_bad() {
        let g = build_host(HostKind::TwoCliques, 10, 0.4, 1).unwrap();
        // Oracle first: no edge of g crosses the cliques at all, so no
        // witness can exist for a cross pair whatever the exclusions.
        assert!(g.edges().all(|(u, v)| (u < 5) == (v < 5)));
        // Force a cross-support set by hand-rolling the family via overrides
        // until one appears; seed 0 with k=2 yields one quickly.
        let mut found = false;
        for seed in 0..50 {
            let f = sample_family(&g, 0.4, seed, Some(1), Some(2)).unwrap();
            let s = f.support(0);
            if s.len() == 2 && (s[0] < 5) != (s[1] < 5) {
                let rec = is_good(&g, &f, 0, GoodnessScope::SampledSet);
                assert!(!rec.good);
                assert_eq!(rec.failing_pair, Some((s[0], s[1])));
                found = true;
                break;
            }
        }
        assert!(found, "no cross-support set sampled in 50 seeds");
    }

    #[test]
    fn witnesses_avoid_exclusions_and_are_edges() {
        let h = build_host(HostKind::TwoCliques, 40, 0.4, 4).unwrap();
        let g = perturb(&h, 60, ReplacementMode::Weak, 5).unwrap();
        let f = sample_family(&g, 0.4, 6, Some(30), None).unwrap();
        for i in 0..f.t {
            let rec = is_good(&g, &f, i, GoodnessScope::SampledSet);
            if !rec.good {
                continue;
            }
            for (&(a, b), &(ap, bp)) in &rec.witnesses {
                assert!(g.has_edge(ap, bp));
                assert!(g.has_edge(a, ap) && g.has_edge(b, bp));
                assert!(!f.support(i).contains(&ap) && !f.support(i).contains(&bp));
            }
        }
    }

    #[test]
    fn index_set_on_complete_graph_is_everything() {
        let g = build_host(HostKind::Complete, 12, 0.5, 0).unwrap();
        let f = sample_family(&g, 0.5, 7, Some(9), Some(2)).unwrap();
        assert_eq!(f.index_set(0, 5), (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn index_sets_concentrate_on_dense_random_hosts() {
        // Default family shape on a min-degree-0.3n host: essentially
        // every sampled pair should be covered by at least 0.6t sets.
        let g = build_host(HostKind::RandomMinDeg, 200, 0.3, 31).unwrap();
        let f = sample_family(&g, 0.3, 32, None, None).unwrap();
        assert_eq!(f.t, 530); // ceil(100 ln 200)
        assert_eq!(f.k, 21);
        let threshold = (0.6 * f.t as f64).ceil() as usize;
        let mut word = 0xFEEDu64;
        let mut pairs = 0;
        let mut covered = 0;
        while pairs < 50 {
            word = crate::rng::splitmix64(word);
            let u = (word % 200) as usize;
            word = crate::rng::splitmix64(word);
            let v = (word % 200) as usize;
            if u == v {
                continue;
            }
            pairs += 1;
            if f.index_set(u, v).len() >= threshold {
                covered += 1;
            }
        }
        assert_eq!(covered, 50, "only {covered}/50 pairs had |I| >= 0.6t");
    }

    #[test]
    fn isolated_members_exclude_an_index() {
        // delta = 0 style fixture built directly: vertex 4 is isolated.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3)]);
        let f = sample_family(&g, 0.5, 5, Some(8), Some(1)).unwrap();
        for i in 0..f.t {
            if f.support(i) == [4] {
                assert!(!f.covers_pair(i, 0, 2));
            }
        }
    }

    #[test]
    fn adjacent_pair_gets_the_edge() {
        let g = build_host(HostKind::Complete, 6, 0.5, 0).unwrap();
        let col = EdgeColoring::uniform(&g, 5, 1).unwrap();
        let f = sample_family(&g, 0.5, 2, Some(4), Some(2)).unwrap();
        let goodness: Vec<_> = (0..f.t)
            .map(|i| is_good(&g, &f, i, GoodnessScope::SampledSet))
            .collect();
        let cp = assemble_path(&g, &col, &f, &goodness, 0, 3).unwrap();
        assert_eq!(cp.path, vec![0, 3]);
        assert_eq!(cp.provenance, Provenance::DirectEdge);
    }

    #[test]
    fn two_path_through_a_common_neighbor() {
        // Star plus leaves: u=1, v=2 share only the center 0.
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]);
        let col = EdgeColoring::from_fn(&g, 5, |_, v| v as u8).unwrap(); // colors 1, 2
        let mut f = sample_family(&g, 0.5, 1, Some(1), Some(1)).unwrap();
        // Pin the sampled set to {0} regardless of seed.
        f.sets[0] = vec![0];
        f.supports[0] = vec![0];
        f.support_bits[0] = {
            let mut b = Bitset::new(3);
            b.insert(0);
            b
        };
        f.nbhd[0] = {
            let mut b = Bitset::new(3);
            b.insert(1);
            b.insert(2);
            b
        };
        let goodness: Vec<_> = (0..1)
            .map(|i| is_good(&g, &f, i, GoodnessScope::SampledSet))
            .collect();
        let cp = assemble_path(&g, &col, &f, &goodness, 1, 2).unwrap();
        assert_eq!(cp.path, vec![1, 0, 2]);
        assert!(matches!(cp.provenance, Provenance::TwoPath { via: 0, .. }));
    }

    #[test]
    fn five_path_fixture_is_accepted() {
        // u a a' b' b v as 0..6 with injective colors; the sampled set is
        // {a, b} = {1, 4} and the witness edge is (2, 3).
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let col = EdgeColoring::from_fn(&g, 5, |u, _| (u + 1) as u8).unwrap();
        let mut f = sample_family(&g, 0.5, 1, Some(1), Some(2)).unwrap();
        f.sets[0] = vec![1, 4];
        f.supports[0] = vec![1, 4];
        f.support_bits[0] = {
            let mut b = Bitset::new(6);
            b.insert(1);
            b.insert(4);
            b
        };
        f.nbhd[0] = {
            let mut b = Bitset::new(6);
            for w in [0, 2, 3, 5] {
                b.insert(w);
            }
            b
        };
        let goodness = vec![is_good(&g, &f, 0, GoodnessScope::SampledSet)];
        assert!(goodness[0].good);
        assert_eq!(goodness[0].witnesses.get(&(1, 4)), Some(&(2, 3)));
        let cp = assemble_path(&g, &col, &f, &goodness, 0, 5).unwrap();
        assert_eq!(cp.path, vec![0, 1, 2, 3, 4, 5]);
        assert!(matches!(
            cp.provenance,
            Provenance::FivePath {
                a: 1,
                b: 4,
                a_prime: 2,
                b_prime: 3,
                ..
            }
        ));
    }

    #[test]
    fn certify_complete_graph_is_all_direct_edges() {
        let g = build_host(HostKind::Complete, 10, 0.5, 0).unwrap();
        let col = EdgeColoring::uniform(&g, 5, 3).unwrap();
        match certify(&g, &col, 0.5, 4, CertifyParams::default()).unwrap() {
            CertifyOutcome::Certified(cert) => {
                assert_eq!(cert.stats.pairs_direct, 45);
                assert_eq!(cert.max_path_edges(), 1);
                cert.validate(&g, &col).unwrap();
            }
            CertifyOutcome::Failed(_) => panic!("complete graph must certify"),
        }
    }

    #[test]
    fn certify_unperturbed_two_cliques_diagnoses_cross_pairs() {
        let g = build_host(HostKind::TwoCliques, 12, 0.4, 1).unwrap();
        let col = EdgeColoring::uniform(&g, 5, 2).unwrap();
        match certify(&g, &col, 0.4, 3, CertifyParams::default()).unwrap() {
            CertifyOutcome::Certified(_) => {
                panic!("no cross edges exist; certification is impossible")
            }
            CertifyOutcome::Failed(f) => {
                assert_eq!(f.failed.len(), 36); // all cross pairs
                for fp in &f.failed {
                    let (u, v) = fp.pair;
                    assert!((u < 6) != (v < 6));
                }
                assert_eq!(f.stats.pairs_failed, 36);
            }
        }
    }

    #[test]
    fn certify_perturbed_two_cliques_succeeds_and_validates() {
        let h = build_host(HostKind::TwoCliques, 120, 0.5, 10).unwrap();
        let g = perturb(&h, 80, ReplacementMode::Weak, 11).unwrap();
        let col = EdgeColoring::uniform(&g, 5, 12).unwrap();
        let mut successes = 0;
        for seed in 0..10 {
            if let CertifyOutcome::Certified(cert) =
                certify(&g, &col, 0.5, seed, CertifyParams::default()).unwrap()
            {
                cert.validate(&g, &col).unwrap();
                successes += 1;
            }
        }
        assert!(successes >= 8, "only {successes}/10 seeds certified");
    }

    #[test]
    fn certificate_bytes_are_deterministic() {
        let h = build_host(HostKind::TwoCliques, 40, 0.4, 7).unwrap();
        let g = perturb(&h, 30, ReplacementMode::Weak, 8).unwrap();
        let col = EdgeColoring::uniform(&g, 5, 9).unwrap();
        let render = |seed| match certify(&g, &col, 0.4, seed, CertifyParams::default()).unwrap() {
            CertifyOutcome::Certified(c) => write_certificate(&c),
            CertifyOutcome::Failed(f) => write_failure(&f),
        };
        assert_eq!(render(5), render(5));
        let text = render(5);
        assert!(text.contains("# stats"));
        assert!(text.contains("good_fraction="));
    }
}
