//! Brute-force ground truth for rainbow connectivity on small instances.
//!
//! Enumerates every simple path (depth-first, at most `min(n-1, r)` edges)
//! and checks color distinctness directly. Quadratic-exponential and proud
//! of it; the point is independence from the dynamic program it validates.

use crate::bitset::Bitset;
use crate::color::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::ColorMask;

/// Largest instance the oracle will touch.
pub const ORACLE_MAX_N: usize = 12;

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::capacity(format!(
            "oracle enumerates all simple paths; n = {} exceeds {ORACLE_MAX_N}",
            g.n()
        )));
    }
    Ok(())
}

/// Every vertex reachable from `u` along some simple rainbow path.
pub fn oracle_rainbow_reachable(g: &Graph, col: &EdgeColoring, u: usize) -> Result<Bitset> {
    check_size(g)?;
    let max_edges = (g.n() - 1).min(col.r() as usize);
    let mut reach = Bitset::new(g.n());
    reach.insert(u);
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    extend(
        g,
        col,
        u,
        ColorMask::EMPTY,
        0,
        max_edges,
        &mut on_path,
        &mut reach,
    );
    Ok(reach)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    col: &EdgeColoring,
    v: usize,
    mask: ColorMask,
    len: usize,
    max_edges: usize,
    on_path: &mut Vec<bool>,
    reach: &mut Bitset,
) {
    if len == max_edges {
        return;
    }
    for w in g.neighbors(v).iter() {
        if on_path[w] {
            continue;
        }
        let c = col.color(v, w).expect("edge exists");
        if mask.contains(c) {
            continue;
        }
        reach.insert(w);
        on_path[w] = true;
        extend(g, col, w, mask.with(c), len + 1, max_edges, on_path, reach);
        on_path[w] = false;
    }
}

/// Ground-truth rainbow connectivity by exhaustive path enumeration.
pub fn oracle_rainbow_connected(g: &Graph, col: &EdgeColoring) -> Result<bool> {
    check_size(g)?;
    for u in 0..g.n() {
        let reach = oracle_rainbow_reachable(g, col, u)?;
        if (u + 1..g.n()).any(|v| !reach.contains(v)) {
            return Ok(false);
        }
    }
    Ok(true)
}
