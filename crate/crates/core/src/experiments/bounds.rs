//! Numerical audit of the closed-form inequalities behind the analysis.
//!
//! At the reference parameters `m = ⌈20 δ⁻²⌉` and `k = ⌈6/δ⌉ + 1` the
//! following chains must hold, exactly as evaluated in f64 with zero
//! tolerance:
//!
//! * bad-set chain: `(1 − δ²/4)^m < exp(−δ²m/4) < 0.01`
//! * uncovered-pair chain: `2(1−δ)^k ≤ 2 exp(−δk) < 0.01`
//! * concentration exponent: `½ · 0.39² · 0.99 · 100 > 7`
//! * per-index success rate `0.99 · 24/625 ≈ 0.0380` and the final union
//!   exponent `0.99 · (24/625) · 0.6 · 100 > 2.25`

use std::fmt;

use crate::certificate::default_k;
use crate::error::{Error, Result};
use crate::host::ceil_slack;

#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs < rhs` (or `<=` where flagged) evaluated exactly in f64.
    pub pass: bool,
}

impl BoundCheck {
    fn strict(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        BoundCheck {
            label: label.into(),
            lhs,
            rhs,
            pass: lhs < rhs,
        }
    }

    fn weak(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        BoundCheck {
            label: label.into(),
            lhs,
            rhs,
            pass: lhs <= rhs,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoundAuditReport {
    pub checks: Vec<BoundCheck>,
    pub all_pass: bool,
}

impl fmt::Display for BoundAuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "bound {} lhs={} rhs={} {}",
                c.label,
                c.lhs,
                c.rhs,
                if c.pass { "PASS" } else { "FAIL" }
            )?;
        }
        writeln!(f, "audit {}", if self.all_pass { "PASS" } else { "FAIL" })
    }
}

/// Reference perturbation size `⌈20 δ⁻²⌉`.
pub fn reference_m(delta: f64) -> usize {
    ceil_slack(20.0 / (delta * delta))
}

pub fn bound_audit(deltas: &[f64]) -> Result<BoundAuditReport> {
    if deltas.iter().any(|&d| !(d > 0.0 && d < 1.0)) {
        return Err(Error::param("bound audit deltas must lie in (0,1)"));
    }
    let mut checks = Vec::new();
    for &delta in deltas {
        let m = reference_m(delta) as f64;
        let k = default_k(delta) as f64;
        let bad_exact = (1.0 - delta * delta / 4.0).powf(m);
        let bad_exp = (-delta * delta * m / 4.0).exp();
        checks.push(BoundCheck::strict(
            format!("bad-set-exact<exp delta={delta}"),
            bad_exact,
            bad_exp,
        ));
        checks.push(BoundCheck::strict(
            format!("bad-set-exp<0.01 delta={delta}"),
            bad_exp,
            0.01,
        ));
        let miss_exact = 2.0 * (1.0 - delta).powf(k);
        let miss_exp = 2.0 * (-delta * k).exp();
        checks.push(BoundCheck::weak(
            format!("uncovered-exact<=exp delta={delta}"),
            miss_exact,
            miss_exp,
        ));
        checks.push(BoundCheck::strict(
            format!("uncovered-exp<0.01 delta={delta}"),
            miss_exp,
            0.01,
        ));
    }
    // Concentration: with per-set coverage probability 0.99 and relative
    // slack 0.39, the tail exponent beats 7 (so the miss probability is
    // below n^-7 for t = 100 ln n sets).
    let chernoff_exponent = 0.5 * 0.39 * 0.39 * 0.99 * 100.0;
    checks.push(BoundCheck::strict(
        "chernoff-exponent>7",
        7.0,
        chernoff_exponent,
    ));
    // Per-index success rate: a good set yields a rainbow 5-path with
    // probability 24/625, discounted by the 0.99 goodness rate.
    let per_index = 0.99 * 24.0 / 625.0;
    checks.push(BoundCheck::strict(
        "per-index-success>0.038",
        0.038,
        per_index,
    ));
    // Union exponent over >= 0.6t usable indices.
    let union_exponent = per_index * 0.6 * 100.0;
    checks.push(BoundCheck::strict(
        "union-exponent>2.25",
        2.25,
        union_exponent,
    ));
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(BoundAuditReport { checks, all_pass })
}
