//! Acceptance suite: one criterion per step, one PASS/FAIL line each.
//!
//! Run with `cargo test -p rcg-core --test acceptance -- --nocapture` to
//! see the lines as they complete. Each criterion carries a hard runtime
//! budget and fixed thresholds; nothing is tuned at runtime.

use std::time::{Duration, Instant};

use rcg_core::certificate::{default_k, is_good, sample_family, GoodnessScope};
use rcg_core::color::EdgeColoring;
use rcg_core::experiments::{
    bound_audit, compare_with_oracle, coupled_m_chain, coupled_r_chain, csv_string, sweep,
    Coupling, SweepConfig, SweepOutput,
};
use rcg_core::host::{build_host, HostKind};
use rcg_core::perturb::{perturb, ReplacementMode};
use rcg_core::rng;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn criterion(
    name: &'static str,
    budget_secs: u64,
    body: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_secs);
    let (mut pass, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > budget {
        pass = false;
        detail = format!("{detail}; exceeded {budget_secs}s budget");
    }
    Outcome {
        name,
        pass,
        detail,
        elapsed,
        budget,
    }
}

/// 1. The decider agrees with the brute-force oracle on 1000 random
///    instances, n in 3..=8, r in 1..=5, random densities.
fn c1_oracle_equivalence() -> Result<String, String> {
    let cmp = compare_with_oracle(8, 1000, 0xC0FFEE).map_err(|e| e.to_string())?;
    if cmp.all_agree() {
        Ok(format!("{}/{} agree", cmp.matches, cmp.cases))
    } else {
        Err(format!(
            "{} mismatches: {:?}",
            cmp.mismatches.len(),
            &cmp.mismatches[..cmp.mismatches.len().min(3)]
        ))
    }
}

/// 2. Closed-form inequality chains hold exactly (zero tolerance) on the
///    delta grid 0.1..=0.9 with m = ceil(20/δ²), k = ceil(6/δ)+1.
fn c2_bound_audit() -> Result<String, String> {
    let deltas: Vec<f64> = (1..10).map(|i| i as f64 / 10.0).collect();
    let report = bound_audit(&deltas).map_err(|e| e.to_string())?;
    if report.all_pass {
        Ok(format!("{} inequalities hold", report.checks.len()))
    } else {
        let failing: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} lhs={} rhs={}", c.label, c.lhs, c.rhs))
            .collect();
        Err(failing.join("; "))
    }
}

/// 3. Bad-set frequency at reference parameters: two_cliques n=400,
///    δ=0.5, m=80, r=5, 2000 sampled sets with default k — at most 0.02.
fn c3_bad_set_frequency() -> Result<String, String> {
    let seed = 0xACCE_5501_u64;
    let h = build_host(
        HostKind::TwoCliques,
        400,
        0.5,
        rng::mix(&[seed, rng::TAG_HOST]),
    )
    .map_err(|e| e.to_string())?;
    let g = perturb(
        &h,
        80,
        ReplacementMode::Weak,
        rng::mix(&[seed, rng::TAG_PERTURB]),
    )
    .map_err(|e| e.to_string())?;
    // Coloring plays no role in goodness, but the criterion fixes r = 5.
    let _col = EdgeColoring::uniform(&g, 5, rng::mix(&[seed, rng::TAG_COLOR]))
        .map_err(|e| e.to_string())?;
    let family = sample_family(&g, 0.5, seed, Some(2000), None).map_err(|e| e.to_string())?;
    assert_eq!(family.k, default_k(0.5));
    let bad = (0..family.t)
        .filter(|&i| !is_good(&g, &family, i, GoodnessScope::SampledSet).good)
        .count();
    let freq = bad as f64 / family.t as f64;
    if freq <= 0.02 {
        Ok(format!("bad-set frequency {freq} ({bad}/{})", family.t))
    } else {
        Err(format!("bad-set frequency {freq} > 0.02"))
    }
}

/// 4. Index coverage at the same parameters: over 200 random pairs, the
///    fraction with |I_uv| >= 0.6t is at least 0.99.
fn c4_index_coverage() -> Result<String, String> {
    let seed = 0xACCE_5502_u64;
    let h = build_host(
        HostKind::TwoCliques,
        400,
        0.5,
        rng::mix(&[seed, rng::TAG_HOST]),
    )
    .map_err(|e| e.to_string())?;
    let g = perturb(
        &h,
        80,
        ReplacementMode::Weak,
        rng::mix(&[seed, rng::TAG_PERTURB]),
    )
    .map_err(|e| e.to_string())?;
    let family = sample_family(&g, 0.5, seed, Some(2000), None).map_err(|e| e.to_string())?;
    let threshold = (0.6 * family.t as f64).ceil() as usize;
    let mut covered = 0;
    let n = g.n();
    let mut pair_word = rng::mix(&[seed, 0xFA17]);
    let mut pairs_seen = 0;
    while pairs_seen < 200 {
        pair_word = rng::splitmix64(pair_word);
        let u = (pair_word % n as u64) as usize;
        pair_word = rng::splitmix64(pair_word);
        let v = (pair_word % n as u64) as usize;
        if u == v {
            continue;
        }
        pairs_seen += 1;
        if family.index_set(u, v).len() >= threshold {
            covered += 1;
        }
    }
    let frac = covered as f64 / 200.0;
    if frac >= 0.99 {
        Ok(format!("{covered}/200 pairs have |I| >= 0.6t"))
    } else {
        Err(format!("only {covered}/200 pairs covered (need >= 198)"))
    }
}

/// 5. Desk-scale probe of the threshold statement: two_cliques n=300,
///    δ=0.5, r=5; at m=80 at least 95% of 200 trials are rainbow
///    connected; at m=0 none are.
fn c5_threshold_probe() -> Result<(String, SweepOutput), String> {
    let cfg = SweepConfig {
        hosts: vec![HostKind::TwoCliques],
        ns: vec![300],
        deltas: vec![0.5],
        ms: vec![0, 80],
        rs: vec![5],
        mode: ReplacementMode::Weak,
        trials: 200,
        master_seed: 0xACCE_5505,
        coupling: Coupling::None,
    };
    let out = sweep(&cfg, 0).map_err(|e| e.to_string())?;
    let at0 = &out.rows[0];
    let at80 = &out.rows[1];
    if at0.successes != 0 {
        return Err(format!("m=0 produced {} successes", at0.successes));
    }
    if at80.p_hat < 0.95 {
        return Err(format!("m=80 success fraction {} < 0.95", at80.p_hat));
    }
    Ok((
        format!(
            "m=0: 0/200; m=80: {}/200 (cert rate {})",
            at80.successes, at80.cert_rate
        ),
        out,
    ))
}

/// 6. Coupled monotonicity: 100 nested-m chains and 100 refinement-r
///    chains, no true->false flip anywhere.
fn c6_coupled_monotonicity() -> Result<(String, Vec<rcg_core::experiments::ChainResult>), String> {
    use rayon::prelude::*;
    let ms = [0usize, 5, 10, 20, 40, 80, 160];
    let rs = [1u32, 2, 3, 4, 5];
    let chains: Vec<_> = (0..200u64)
        .into_par_iter()
        .map(|trial| {
            if trial < 100 {
                coupled_m_chain(
                    HostKind::TwoCliques,
                    120,
                    0.5,
                    ReplacementMode::Weak,
                    &ms,
                    5,
                    rng::mix(&[0xACCE_5506, 0, trial]),
                    true,
                )
            } else {
                coupled_r_chain(
                    HostKind::TwoCliques,
                    120,
                    0.5,
                    ReplacementMode::Weak,
                    80,
                    &rs,
                    rng::mix(&[0xACCE_5506, 1, trial - 100]),
                    true,
                )
            }
        })
        .collect::<rcg_core::Result<_>>()
        .map_err(|e| e.to_string())?;
    let violations: usize = chains.iter().map(|c| c.violations).sum();
    if violations == 0 {
        Ok((
            format!(
                "200 chains ({} points), 0 violations",
                chains.iter().map(|c| c.points.len()).sum::<usize>()
            ),
            chains,
        ))
    } else {
        Err(format!("{violations} monotonicity violations"))
    }
}

/// 7. Certificate soundness across everything the run emitted: every
///    certificate re-verified, and cert_rate <= p_hat in every sweep cell.
fn c7_certificate_soundness(
    sweeps: &[&SweepOutput],
    chains: &[rcg_core::experiments::ChainResult],
) -> Result<String, String> {
    let mut cells = 0;
    for out in sweeps {
        if !out.certificates_valid {
            return Err("a sweep emitted an invalid certificate".into());
        }
        for row in &out.rows {
            cells += 1;
            if row.cert_rate > row.p_hat {
                return Err(format!(
                    "cert_rate {} > p_hat {} in cell m={} r={}",
                    row.cert_rate, row.p_hat, row.m, row.r
                ));
            }
        }
    }
    let mut points = 0;
    for chain in chains {
        for p in &chain.points {
            points += 1;
            if !p.certificate_valid {
                return Err(format!("invalid certificate at m={} r={}", p.m, p.r));
            }
            if p.certificate_succeeded && !p.connected {
                return Err(format!("one-sidedness broken at m={} r={}", p.m, p.r));
            }
        }
    }
    Ok(format!(
        "{cells} sweep cells and {points} chain points sound"
    ))
}

/// 8. Determinism: the same sweep at parallelism 1 and 8 yields
///    byte-identical CSV.
fn c8_determinism() -> Result<(String, SweepOutput), String> {
    let cfg = SweepConfig {
        hosts: vec![HostKind::TwoCliques],
        ns: vec![60],
        deltas: vec![0.4],
        ms: vec![0, 20, 60],
        rs: vec![3, 5],
        mode: ReplacementMode::Weak,
        trials: 12,
        master_seed: 0xACCE_5508,
        coupling: Coupling::None,
    };
    let serial = sweep(&cfg, 1).map_err(|e| e.to_string())?;
    let parallel = sweep(&cfg, 8).map_err(|e| e.to_string())?;
    let a = csv_string(&serial.rows);
    let b = csv_string(&parallel.rows);
    if a == b {
        Ok((
            format!("{} bytes identical across 1 and 8 threads", a.len()),
            parallel,
        ))
    } else {
        Err("CSV bytes differ between parallelism 1 and 8".into())
    }
}

#[test]
fn acceptance_criteria() {
    let mut outcomes = Vec::new();
    let mut c5_sweep = None;
    let mut c6_chains = Vec::new();
    let mut c8_sweep = None;

    outcomes.push(criterion("1-oracle-equivalence", 10, c1_oracle_equivalence));
    outcomes.push(criterion("2-analytic-bound-audit", 1, c2_bound_audit));
    outcomes.push(criterion("3-bad-set-frequency", 60, c3_bad_set_frequency));
    outcomes.push(criterion("4-index-coverage", 60, c4_index_coverage));
    outcomes.push(criterion("5-threshold-probe", 300, || {
        c5_threshold_probe().map(|(detail, out)| {
            c5_sweep = Some(out);
            detail
        })
    }));
    outcomes.push(criterion("6-coupled-monotonicity", 300, || {
        c6_coupled_monotonicity().map(|(detail, chains)| {
            c6_chains = chains;
            detail
        })
    }));
    // Criterion 8 runs before 7 so that 7 can audit its sweep output too.
    let c8 = criterion("8-determinism", 120, || {
        c8_determinism().map(|(detail, out)| {
            c8_sweep = Some(out);
            detail
        })
    });
    let sweeps: Vec<&SweepOutput> = c5_sweep.iter().chain(c8_sweep.iter()).collect();
    outcomes.push(criterion("7-certificate-soundness", 60, || {
        c7_certificate_soundness(&sweeps, &c6_chains)
    }));
    outcomes.push(c8);
    outcomes.sort_by_key(|o| o.name);

    let mut failures = Vec::new();
    for o in &outcomes {
        println!(
            "{} criterion-{} [{:.2?} / {:.0?}] {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed,
            o.budget,
            o.detail
        );
        if !o.pass {
            failures.push(o.name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
