//! Seeded grid sweeps with deterministic parallelism.
//!
//! Cells are the cartesian product host × n × δ × m × r in that nested
//! order. Per-trial seeds are derived from `(master_seed, cell index,
//! trial index)` before any work is scheduled, results are collected in
//! task order, and aggregation is sequential — so the emitted rows are
//! byte-identical at any parallelism degree.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::couple::{coupled_m_chain, coupled_r_chain};
use crate::experiments::trial::run_trial;
use crate::host::HostKind;
use crate::model::PerturbConfig;
use crate::perturb::ReplacementMode;
use crate::rng;

/// Two-sided 95% normal quantile for the Wilson score interval.
pub const Z95: f64 = 1.959963984540054;

/// Wilson score interval at 95%; well-behaved at p̂ = 0 and 1.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The boundary cases are exactly 0 and 1 analytically; don't let
    // floating-point rounding leak into them.
    let low = if successes == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let high = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (low, high)
}

/// Optional per-trial coupling along one grid axis. Coupled trials share
/// their randomness across that axis (nested edge sets for `m`,
/// refinement recoloring for `r`), making monotonicity assertable
/// per trial instead of only in distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coupling {
    #[default]
    None,
    M,
    R,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub hosts: Vec<HostKind>,
    pub ns: Vec<usize>,
    pub deltas: Vec<f64>,
    pub ms: Vec<usize>,
    pub rs: Vec<u32>,
    #[serde(default)]
    pub mode: ReplacementMode,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default)]
    pub coupling: Coupling,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub host: HostKind,
    pub n: usize,
    pub delta: f64,
    pub m: usize,
    pub r: u32,
    pub trials: usize,
    pub successes: usize,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub cert_rate: f64,
    pub master_seed: u64,
}

#[derive(Debug)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    /// Coupled-mode true→false flips along the coupled axis (0 when
    /// uncoupled).
    pub coupling_violations: usize,
    /// Every emitted certificate re-verified.
    pub certificates_valid: bool,
}

type Cell = (HostKind, usize, f64, usize, u32);

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.hosts.is_empty()
            || self.ns.is_empty()
            || self.deltas.is_empty()
            || self.ms.is_empty()
            || self.rs.is_empty()
        {
            return Err(Error::param("sweep grid has an empty axis"));
        }
        if self.trials == 0 {
            return Err(Error::param("trials must be >= 1"));
        }
        match self.coupling {
            Coupling::M if self.ms.windows(2).any(|w| w[0] > w[1]) => {
                Err(Error::param("m-coupled sweep needs ascending ms"))
            }
            Coupling::R if self.rs.windows(2).any(|w| w[0] > w[1]) => {
                Err(Error::param("r-coupled sweep needs ascending rs"))
            }
            _ => Ok(()),
        }
    }

    /// Grid cells in emission order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for &host in &self.hosts {
            for &n in &self.ns {
                for &delta in &self.deltas {
                    for &m in &self.ms {
                        for &r in &self.rs {
                            cells.push((host, n, delta, m, r));
                        }
                    }
                }
            }
        }
        cells
    }
}

#[derive(Clone, Copy, Default)]
struct CellTally {
    connected: usize,
    certified: usize,
    cert_invalid: usize,
}

/// Run the sweep on a private thread pool of the given width.
pub fn sweep(cfg: &SweepConfig, threads: usize) -> Result<SweepOutput> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::param(format!("thread pool: {e}")))?;
    let cells = cfg.cells();
    let mut tallies = vec![CellTally::default(); cells.len()];
    let mut violations = 0usize;

    match cfg.coupling {
        Coupling::None => {
            let tasks: Vec<(usize, usize)> = (0..cells.len())
                .flat_map(|ci| (0..cfg.trials).map(move |ti| (ci, ti)))
                .collect();
            let results: Vec<(bool, bool, bool)> = pool.install(|| {
                tasks
                    .par_iter()
                    .map(|&(ci, ti)| {
                        let (host, n, delta, m, r) = cells[ci];
                        let config = PerturbConfig {
                            host,
                            n,
                            delta,
                            m,
                            r,
                            seed: rng::mix(&[cfg.master_seed, ci as u64, ti as u64]),
                            mode: cfg.mode,
                        };
                        let trial = run_trial(&config)?;
                        Ok((
                            trial.rainbow_connected,
                            trial.certificate_succeeded,
                            trial.certificate_valid,
                        ))
                    })
                    .collect::<Result<_>>()
            })?;
            for (&(ci, _), &(connected, certified, valid)) in tasks.iter().zip(&results) {
                let t = &mut tallies[ci];
                t.connected += connected as usize;
                t.certified += certified as usize;
                t.cert_invalid += (!valid) as usize;
            }
        }
        Coupling::M | Coupling::R => {
            // Chains span the coupled axis; the chain's own cell tuple
            // excludes it so coupled points share their seed. Chain bases
            // are the cells sitting at index 0 of the coupled axis.
            let (m_len, r_len) = (cfg.ms.len(), cfg.rs.len());
            let chain_cells: Vec<(usize, Cell)> = cells
                .iter()
                .enumerate()
                .filter(|(i, _)| match cfg.coupling {
                    Coupling::M => (i / r_len) % m_len == 0,
                    _ => i % r_len == 0,
                })
                .map(|(i, c)| (i, *c))
                .collect();
            let tasks: Vec<(usize, usize)> = (0..chain_cells.len())
                .flat_map(|ci| (0..cfg.trials).map(move |ti| (ci, ti)))
                .collect();
            let chains: Vec<crate::experiments::couple::ChainResult> = pool.install(|| {
                tasks
                    .par_iter()
                    .map(|&(ci, ti)| {
                        let (_, (host, n, delta, m, r)) = chain_cells[ci];
                        let seed = rng::mix(&[cfg.master_seed, ci as u64, ti as u64]);
                        match cfg.coupling {
                            Coupling::M => {
                                coupled_m_chain(host, n, delta, cfg.mode, &cfg.ms, r, seed, true)
                            }
                            _ => coupled_r_chain(host, n, delta, cfg.mode, m, &cfg.rs, seed, true),
                        }
                    })
                    .collect::<Result<_>>()
            })?;
            // The coupled axis is innermost-or-not in the flat cell index;
            // walk the chain points back to their cells by stride.
            for (&(ci, _), chain) in tasks.iter().zip(&chains) {
                violations += chain.violations;
                let (base_idx, _) = chain_cells[ci];
                for (pi, point) in chain.points.iter().enumerate() {
                    let flat = match cfg.coupling {
                        Coupling::M => base_idx + pi * r_len,
                        _ => base_idx + pi,
                    };
                    let t = &mut tallies[flat];
                    t.connected += point.connected as usize;
                    t.certified += point.certificate_succeeded as usize;
                    t.cert_invalid += (!point.certificate_valid) as usize;
                }
            }
        }
    }

    let rows = cells
        .iter()
        .zip(&tallies)
        .map(|(&(host, n, delta, m, r), tally)| {
            let (ci_low, ci_high) = wilson_interval(tally.connected, cfg.trials);
            SweepRow {
                host,
                n,
                delta,
                m,
                r,
                trials: cfg.trials,
                successes: tally.connected,
                p_hat: tally.connected as f64 / cfg.trials as f64,
                ci_low,
                ci_high,
                cert_rate: tally.certified as f64 / cfg.trials as f64,
                master_seed: cfg.master_seed,
            }
        })
        .collect();
    Ok(SweepOutput {
        rows,
        coupling_violations: violations,
        certificates_valid: tallies.iter().all(|t| t.cert_invalid == 0),
    })
}
