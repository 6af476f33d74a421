//! Exact rainbow-path and rainbow-connectivity decisions.
//!
//! A path is rainbow when its edges carry pairwise distinct colors; a
//! colored graph is rainbow connected when every vertex pair is joined by
//! a rainbow path. The decider is a dynamic program over states
//! `(vertex, set of used colors)`: a state `(w, M)` is reachable from `u`
//! iff some rainbow walk from `u` to `w` uses exactly the colors in `M`.
//!
//! Vertex revisits are not tracked. That is sound by the shortcut
//! argument: deleting a closed subwalk from a rainbow walk leaves a
//! shorter rainbow walk, so walk-reachability and simple-path
//! reachability coincide. Witness reconstruction always starts from a
//! minimum-popcount state, whose walk is shortest and therefore simple.

pub mod oracle;

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::bitset::Bitset;
use crate::color::{EdgeColoring, MAX_COLORS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Set of colors in `{1..r}` as a machine word; bit `c-1` is color `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ColorMask(pub u64);

impl ColorMask {
    pub const EMPTY: ColorMask = ColorMask(0);

    #[inline]
    pub fn contains(self, color: u8) -> bool {
        self.0 & (1u64 << (color - 1)) != 0
    }

    #[inline]
    pub fn with(self, color: u8) -> ColorMask {
        ColorMask(self.0 | (1u64 << (color - 1)))
    }

    #[inline]
    pub fn count(self) -> u32 {
        self.0.count_ones()
    }
}

/// Outcome of a connectivity check.
#[derive(Debug, Clone)]
pub struct RainbowReport {
    pub connected: bool,
    /// One rainbow path per unordered pair, when requested and connected.
    pub witness_paths: Option<BTreeMap<(usize, usize), Vec<usize>>>,
    /// Lexicographically first pair with no rainbow path.
    pub failing_pair: Option<(usize, usize)>,
}

/// True iff `path` walks along edges of `g` and uses pairwise distinct
/// colors. A single vertex counts as a (trivial) rainbow path. Repeated
/// or out-of-range vertices are input errors, not a `false` answer.
pub fn is_rainbow_path(g: &Graph, col: &EdgeColoring, path: &[usize]) -> Result<bool> {
    if path.is_empty() {
        return Err(Error::validation("empty vertex sequence"));
    }
    let mut seen = BTreeSet::new();
    for &v in path {
        if v >= g.n() {
            return Err(Error::validation(format!(
                "vertex {v} out of range 0..{}",
                g.n()
            )));
        }
        if !seen.insert(v) {
            return Err(Error::validation(format!("vertex {v} repeats in path")));
        }
    }
    let mut mask = ColorMask::EMPTY;
    for w in path.windows(2) {
        let (u, v) = (w[0], w[1]);
        if !g.has_edge(u, v) {
            return Ok(false);
        }
        let c = col.color(u, v).expect("edge exists");
        if mask.contains(c) {
            return Ok(false);
        }
        mask = mask.with(c);
    }
    Ok(true)
}

/// Colors along a path's edges, for diagnostics and tests.
pub fn colors_along(col: &EdgeColoring, path: &[usize]) -> Vec<u8> {
    path.windows(2)
        .map(|w| col.color(w[0], w[1]).expect("edge"))
        .collect()
}

/// Vertices reachable from `u` by a rainbow path.
pub fn rainbow_reachable(g: &Graph, col: &EdgeColoring, u: usize) -> Result<Bitset> {
    Ok(RainbowChecker::new(g, col)?.reach_set(u))
}

/// Decide rainbow connectivity; optionally reconstruct one witness path
/// per pair. Early-exits on the lexicographically first failing pair.
pub fn is_rainbow_connected(
    g: &Graph,
    col: &EdgeColoring,
    want_witnesses: bool,
) -> Result<RainbowReport> {
    Ok(RainbowChecker::new(g, col)?.check_connected(want_witnesses))
}

/// A rainbow `u`–`v` path with at most `max_len` edges, if one exists.
pub fn bounded_rainbow_path(
    g: &Graph,
    col: &EdgeColoring,
    u: usize,
    v: usize,
    max_len: u32,
) -> Result<Option<Vec<usize>>> {
    if max_len > col.r() {
        return Err(Error::param(format!(
            "max_len = {max_len} exceeds r = {}: a rainbow path cannot repeat a color",
            col.r()
        )));
    }
    let checker = RainbowChecker::new(g, col)?;
    let table = checker.search(u, max_len, false);
    Ok(checker.witness(&table, u, v))
}

/// Reusable decision engine for one `(graph, coloring)` pair: color-sliced
/// adjacency is built once, searches run per source vertex.
pub struct RainbowChecker<'a> {
    g: &'a Graph,
    r: u32,
    /// `slices[c-1][v]` = vertices joined to `v` by an edge of color `c`.
    slices: Vec<Vec<Bitset>>,
}

/// Reachable `(vertex, mask)` states from one source. Dense keeps one
/// vertex-bitset per mask; sparse keeps a mask set per vertex (used when
/// `2^r * n` stops fitting in memory).
enum ReachTable {
    Dense {
        sets: Vec<Bitset>,
        reached: Bitset,
    },
    Sparse {
        masks: Vec<BTreeSet<u64>>,
        reached: Bitset,
    },
}

impl ReachTable {
    fn reached(&self) -> &Bitset {
        match self {
            ReachTable::Dense { reached, .. } | ReachTable::Sparse { reached, .. } => reached,
        }
    }

    /// Mask of a shortest rainbow walk to `v`: minimal popcount, then
    /// numerically smallest. Only shortest-walk states yield simple paths.
    fn minimal_mask(&self, v: usize) -> Option<u64> {
        match self {
            ReachTable::Dense { sets, .. } => sets
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(v))
                .map(|(m, _)| m as u64)
                .min_by_key(|&m| (m.count_ones(), m)),
            ReachTable::Sparse { masks, .. } => masks[v]
                .iter()
                .copied()
                .min_by_key(|&m| (m.count_ones(), m)),
        }
    }
}

/// Memory ceiling for the dense table: `2^r * n` bits.
const DENSE_BIT_LIMIT: u128 = 1 << 28;

impl<'a> RainbowChecker<'a> {
    pub fn new(g: &'a Graph, col: &'a EdgeColoring) -> Result<Self> {
        let r = col.r();
        if r > MAX_COLORS {
            return Err(Error::capacity(format!(
                "r = {r} exceeds {MAX_COLORS} colors"
            )));
        }
        let n = g.n();
        let mut slices: Vec<Vec<Bitset>> = (0..r)
            .map(|_| (0..n).map(|_| Bitset::new(n)).collect())
            .collect();
        for (u, v) in g.edges() {
            let c = col.color(u, v).expect("coloring covers the graph") as usize - 1;
            slices[c][u].insert(v);
            slices[c][v].insert(u);
        }
        Ok(RainbowChecker { g, r, slices })
    }

    fn use_dense(&self) -> bool {
        (1u128 << self.r) * self.g.n() as u128 <= DENSE_BIT_LIMIT
    }

    /// Explore all rainbow walks from `source` of length at most `max_len`.
    ///
    /// `early_stop` abandons the sweep once every vertex is reached; the
    /// resulting table is only valid for reachability queries, never for
    /// witness reconstruction (minimum-popcount states may be missing).
    fn search(&self, source: usize, max_len: u32, early_stop: bool) -> ReachTable {
        let max_len = max_len.min(self.r);
        if self.use_dense() {
            self.search_dense(source, max_len, early_stop)
        } else {
            self.search_sparse(source, max_len)
        }
    }

    fn search_dense(&self, source: usize, max_len: u32, early_stop: bool) -> ReachTable {
        let n = self.g.n();
        let mut sets: Vec<Bitset> = (0..1usize << self.r).map(|_| Bitset::new(n)).collect();
        let mut reached = Bitset::new(n);
        let mut scratch = Bitset::new(n);
        sets[0].insert(source);
        reached.insert(source);
        // Every proper submask is numerically smaller, so a single
        // ascending sweep sees set[M] complete before expanding it.
        'sweep: for m in 0..1u64 << self.r {
            if sets[m as usize].is_empty() || m.count_ones() >= max_len {
                continue;
            }
            for c in 0..self.r {
                if m & (1 << c) != 0 {
                    continue;
                }
                let next = (m | (1 << c)) as usize;
                let slice = &self.slices[c as usize];
                scratch.clear();
                for v in sets[m as usize].iter() {
                    scratch.union_with(&slice[v]);
                }
                sets[next].union_with(&scratch);
                reached.union_with(&scratch);
                if early_stop && reached.count() == n {
                    break 'sweep;
                }
            }
        }
        ReachTable::Dense { sets, reached }
    }

    fn search_sparse(&self, source: usize, max_len: u32) -> ReachTable {
        let n = self.g.n();
        let mut masks: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n];
        let mut reached = Bitset::new(n);
        masks[source].insert(0);
        reached.insert(source);
        let mut frontier: Vec<(usize, u64)> = vec![(source, 0)];
        for _ in 0..max_len {
            let mut next_frontier = Vec::new();
            for &(v, m) in &frontier {
                for c in 0..self.r {
                    if m & (1 << c) != 0 {
                        continue;
                    }
                    let next = m | (1 << c);
                    for w in self.slices[c as usize][v].iter() {
                        if masks[w].insert(next) {
                            reached.insert(w);
                            next_frontier.push((w, next));
                        }
                    }
                }
            }
            if next_frontier.is_empty() {
                break;
            }
            frontier = next_frontier;
        }
        ReachTable::Sparse { masks, reached }
    }

    /// Vertices joined to `u` by a rainbow path (always includes `u`).
    pub fn reach_set(&self, u: usize) -> Bitset {
        self.search(u, self.r, true).reached().clone()
    }

    /// Reconstruct the witness path for `target` from a completed table.
    ///
    /// Walks predecessors from the minimum-popcount state; at each step the
    /// candidate `(vertex, color)` pairs are totally ordered and the
    /// smallest is taken, so witnesses are deterministic.
    fn witness(&self, table: &ReachTable, source: usize, target: usize) -> Option<Vec<usize>> {
        let mut mask = table.minimal_mask(target)?;
        let mut path = vec![target];
        let mut w = target;
        while mask != 0 {
            let mut best: Option<(usize, u32)> = None;
            for c in 0..self.r {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let prev_mask = mask & !(1u64 << c);
                let candidate = match table {
                    ReachTable::Dense { sets, .. } => {
                        self.slices[c as usize][w].first_common(&sets[prev_mask as usize])
                    }
                    ReachTable::Sparse { masks, .. } => self.slices[c as usize][w]
                        .iter()
                        .find(|&x| masks[x].contains(&prev_mask)),
                };
                if let Some(x) = candidate {
                    if best.is_none_or(|b| (x, c) < b) {
                        best = Some((x, c));
                    }
                }
            }
            let (x, c) = best.expect("reachable state has a predecessor");
            path.push(x);
            mask &= !(1u64 << c);
            w = x;
        }
        debug_assert_eq!(w, source);
        path.reverse();
        Some(path)
    }

    /// Decide connectivity. Pairs are scanned in lexicographic order and
    /// the scan stops at the first failing pair.
    pub fn check_connected(&self, want_witnesses: bool) -> RainbowReport {
        let n = self.g.n();
        let mut witnesses = want_witnesses.then(BTreeMap::new);
        for u in 0..n {
            if let Some(map) = &mut witnesses {
                let table = self.search(u, self.r, false);
                for v in u + 1..n {
                    match self.witness(&table, u, v) {
                        Some(path) => {
                            map.insert((u, v), path);
                        }
                        None => {
                            return RainbowReport {
                                connected: false,
                                witness_paths: None,
                                failing_pair: Some((u, v)),
                            }
                        }
                    }
                }
            } else {
                let reach = self.reach_set(u);
                if let Some(v) = (u + 1..n).find(|&v| !reach.contains(v)) {
                    return RainbowReport {
                        connected: false,
                        witness_paths: None,
                        failing_pair: Some((u, v)),
                    };
                }
            }
        }
        RainbowReport {
            connected: true,
            witness_paths: witnesses,
            failing_pair: None,
        }
    }
}
