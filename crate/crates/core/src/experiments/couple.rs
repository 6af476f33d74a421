//! Monotone couplings.
//!
//! Rainbow connectivity is monotone in added colored edges, so it should
//! be monotone along a sweep in `m` and in `r` — but only per-trial under
//! a coupling, not per independent sample. Two couplings are provided:
//!
//! * in `m`: all points of a chain share one pair stream, so edge sets are
//!   nested, and colors are a pure per-edge function of the seed, so the
//!   common edges agree;
//! * in `r`: a base coloring is drawn at the largest `r` and coarser
//!   colorings are produced by a per-trial chain of random merge maps
//!   `[r+1] -> [r]` (remove one uniformly chosen color, relabel
//!   order-preservingly, send the removed color to a uniformly chosen
//!   survivor). Every level is marginally uniform per edge, and a path
//!   rainbow under the coarse coloring is rainbow under any finer one.

use crate::certificate::{certify, CertifyOutcome, CertifyParams};
use crate::color::{uniform_color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::host::{build_host, HostKind};
use crate::perturb::{perturb, ReplacementMode};
use crate::rainbow::is_rainbow_connected;
use crate::rng;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct ChainPoint {
    pub m: usize,
    pub r: u32,
    pub connected: bool,
    pub certificate_succeeded: bool,
    pub certificate_valid: bool,
}

#[derive(Debug, Clone)]
pub struct ChainResult {
    pub points: Vec<ChainPoint>,
    /// Count of adjacent steps where connectivity flipped true -> false.
    pub violations: usize,
}

fn count_violations(points: &[ChainPoint]) -> usize {
    points
        .windows(2)
        .filter(|w| w[0].connected && !w[1].connected)
        .count()
}

fn evaluate_point(
    g: &Graph,
    col: &EdgeColoring,
    delta: f64,
    seed: u64,
    with_certificates: bool,
) -> Result<(bool, bool, bool)> {
    let connected = is_rainbow_connected(g, col, false)?.connected;
    if !with_certificates {
        return Ok((connected, false, true));
    }
    match certify(
        g,
        col,
        delta,
        rng::mix(&[seed, rng::TAG_FAMILY]),
        CertifyParams::default(),
    )? {
        CertifyOutcome::Certified(cert) => {
            let valid = cert.validate(g, col).is_ok();
            Ok((connected, true, valid))
        }
        CertifyOutcome::Failed(_) => Ok((connected, false, true)),
    }
}

/// One coupled chain over ascending `ms` at fixed `r`.
#[allow(clippy::too_many_arguments)]
pub fn coupled_m_chain(
    host: HostKind,
    n: usize,
    delta: f64,
    mode: ReplacementMode,
    ms: &[usize],
    r: u32,
    seed: u64,
    with_certificates: bool,
) -> Result<ChainResult> {
    if ms.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::param("m chain must be ascending"));
    }
    let h = build_host(host, n, delta, rng::mix(&[seed, rng::TAG_HOST]))?;
    let perturb_seed = rng::mix(&[seed, rng::TAG_PERTURB]);
    let color_seed = rng::mix(&[seed, rng::TAG_COLOR]);
    let mut points = Vec::with_capacity(ms.len());
    for &m in ms {
        let g = perturb(&h, m, mode, perturb_seed)?;
        let col = EdgeColoring::uniform(&g, r, color_seed)?;
        let (connected, cert_ok, cert_valid) =
            evaluate_point(&g, &col, delta, seed, with_certificates)?;
        points.push(ChainPoint {
            m,
            r,
            connected,
            certificate_succeeded: cert_ok,
            certificate_valid: cert_valid,
        });
    }
    let violations = count_violations(&points);
    Ok(ChainResult { points, violations })
}

/// Composed merge tables: `tables[r-1][c]` is the color of base color `c`
/// after merging down from `r_max` to `r`. Marginally uniform at every
/// level; deterministic in the seed.
fn merge_tables(r_max: u32, seed: u64) -> Vec<Vec<u8>> {
    let mut rng = rng::stream(seed, rng::TAG_MERGE);
    let mut tables = vec![Vec::new(); r_max as usize];
    let mut table: Vec<u8> = (0..=r_max as u8).collect(); // identity at r_max; index 0 unused
    tables[r_max as usize - 1] = table.clone();
    for r in (1..r_max).rev() {
        // Merge [r+1] -> [r]: drop color `b`, relabel order-preservingly,
        // send `b` to survivor `a`.
        let b = rng.random_range(1..=r + 1) as u8;
        let a = rng.random_range(1..=r) as u8;
        for c in table.iter_mut().skip(1) {
            *c = match (*c).cmp(&b) {
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Greater => *c - 1,
                std::cmp::Ordering::Less => *c,
            };
        }
        tables[r as usize - 1] = table.clone();
    }
    tables
}

/// One coupled chain over ascending `rs` at fixed `m`: refinement
/// recoloring of a single perturbed graph.
#[allow(clippy::too_many_arguments)]
pub fn coupled_r_chain(
    host: HostKind,
    n: usize,
    delta: f64,
    mode: ReplacementMode,
    m: usize,
    rs: &[u32],
    seed: u64,
    with_certificates: bool,
) -> Result<ChainResult> {
    if rs.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::param("r chain must be ascending"));
    }
    let r_max = *rs.last().ok_or_else(|| Error::param("empty r chain"))?;
    let h = build_host(host, n, delta, rng::mix(&[seed, rng::TAG_HOST]))?;
    let g = perturb(&h, m, mode, rng::mix(&[seed, rng::TAG_PERTURB]))?;
    let color_seed = rng::mix(&[seed, rng::TAG_COLOR]);
    let tables = merge_tables(r_max, seed);
    let mut points = Vec::with_capacity(rs.len());
    for &r in rs {
        let table = &tables[r as usize - 1];
        let col = EdgeColoring::from_fn(&g, r, |u, v| {
            table[uniform_color(color_seed, u, v, r_max) as usize]
        })?;
        let (connected, cert_ok, cert_valid) =
            evaluate_point(&g, &col, delta, seed, with_certificates)?;
        points.push(ChainPoint {
            m,
            r,
            connected,
            certificate_succeeded: cert_ok,
            certificate_valid: cert_valid,
        });
    }
    let violations = count_violations(&points);
    Ok(ChainResult { points, violations })
}
