//! The full model instance: host + perturbation + coloring.

use serde::{Deserialize, Serialize};

use crate::color::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::host::{build_host, HostKind};
use crate::perturb::{perturb, ReplacementMode};
use crate::rng;

/// Complete reproducibility key for one model instance: the perturbed,
/// colored graph is a pure function of this struct.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbConfig {
    pub host: HostKind,
    pub n: usize,
    pub delta: f64,
    pub m: usize,
    pub r: u32,
    pub seed: u64,
    #[serde(default)]
    pub mode: ReplacementMode,
}

/// The three stages of one realized instance.
pub struct Realization {
    pub host: Graph,
    pub graph: Graph,
    pub coloring: EdgeColoring,
}

impl PerturbConfig {
    pub fn validate(&self) -> Result<()> {
        if self.delta * self.n as f64 > (self.n - 1) as f64 {
            return Err(Error::param(format!(
                "n*delta = {} exceeds n-1 = {}: no such host exists",
                self.delta * self.n as f64,
                self.n - 1
            )));
        }
        if self.r < 1 {
            return Err(Error::param("r must be >= 1"));
        }
        Ok(())
    }

    /// Sub-seeds for the stages, derived from the trial seed.
    pub fn host_seed(&self) -> u64 {
        rng::mix(&[self.seed, rng::TAG_HOST])
    }

    pub fn perturb_seed(&self) -> u64 {
        rng::mix(&[self.seed, rng::TAG_PERTURB])
    }

    pub fn color_seed(&self) -> u64 {
        rng::mix(&[self.seed, rng::TAG_COLOR])
    }

    pub fn family_seed(&self) -> u64 {
        rng::mix(&[self.seed, rng::TAG_FAMILY])
    }

    /// Build host, perturb, and color. Deterministic in the config.
    pub fn realize(&self) -> Result<Realization> {
        self.validate()?;
        let host = build_host(self.host, self.n, self.delta, self.host_seed())?;
        let graph = perturb(&host, self.m, self.mode, self.perturb_seed())?;
        let coloring = EdgeColoring::uniform(&graph, self.r, self.color_seed())?;
        Ok(Realization {
            host,
            graph,
            coloring,
        })
    }
}
