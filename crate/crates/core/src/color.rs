//! Uniform random edge colorings with colors in `{1..r}`.
//!
//! The coloring need not be proper: colors are independent uniform draws
//! per edge. A color is derived by hashing `(seed, u, v)`, so it is a pure
//! function of the edge; graphs with nested edge sets colored from the same
//! seed agree on their common edges, which is exactly the coupling the
//! monotone-in-m experiments need.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng;

/// Colors of every edge of one graph. Colors are `1..=r`; 0 marks absence.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    r: u32,
    colors: Vec<u8>,
}

/// Largest supported color count (color sets must fit one machine word).
pub const MAX_COLORS: u32 = 64;

impl EdgeColoring {
    /// Color every edge of `g` with `color_of(u, v)` (called with `u < v`).
    pub fn from_fn(
        g: &Graph,
        r: u32,
        mut color_of: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        if r < 1 {
            return Err(Error::param("color count r must be >= 1"));
        }
        if r > MAX_COLORS {
            return Err(Error::capacity(format!(
                "r = {r} exceeds {MAX_COLORS} colors"
            )));
        }
        let n = g.n();
        let mut colors = vec![0u8; n * n];
        for (u, v) in g.edges() {
            let c = color_of(u, v);
            assert!(
                c >= 1 && u64::from(c) <= u64::from(r),
                "color {c} out of 1..={r}"
            );
            colors[u * n + v] = c;
            colors[v * n + u] = c;
        }
        Ok(EdgeColoring { n, r, colors })
    }

    /// Independent uniform colors, deterministic in `seed`.
    pub fn uniform(g: &Graph, r: u32, seed: u64) -> Result<Self> {
        Self::from_fn(g, r, |u, v| uniform_color(seed, u, v, r))
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Color of edge `{u, v}`, or None if the pair is not an edge.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Option<u8> {
        let c = self.colors[u * self.n + v];
        (c != 0).then_some(c)
    }

    /// Number of colored edges.
    pub fn edge_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count() / 2
    }

    /// Histogram over colors `1..=r`.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.r as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            let (u, v) = (i / self.n, i % self.n);
            if c != 0 && u < v {
                h[(c - 1) as usize] += 1;
            }
        }
        h
    }

    /// Domain check: colored pairs are exactly the edges of `g`.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        if self.n != g.n() {
            return false;
        }
        (0..self.n)
            .all(|u| (0..self.n).all(|v| (self.colors[u * self.n + v] != 0) == g.has_edge(u, v)))
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EdgeColoring(n={}, r={})", self.n, self.r)
    }
}

/// The uniform per-edge color used by [`EdgeColoring::uniform`].
#[inline]
pub fn uniform_color(seed: u64, u: usize, v: usize, r: u32) -> u8 {
    let (a, b) = (u.min(v) as u64, u.max(v) as u64);
    1 + rng::bounded(rng::mix(&[seed, a, b]), u64::from(r)) as u8
}
