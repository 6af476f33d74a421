//! Pinned end-to-end sweep output. Catches any drift in seed derivation,
//! generators, the decider, the certificate procedure, or CSV formatting:
//! these bytes were produced once and must never change for this config.

use rcg_core::experiments::{csv_string, parse_csv, sweep, Coupling, SweepConfig};
use rcg_core::host::HostKind;
use rcg_core::perturb::ReplacementMode;

const GOLDEN: &str = "\
host,n,delta,m,r,trials,successes,p_hat,ci_low,ci_high,cert_rate,master_seed
two_cliques,20,0.4,0,5,5,0,0,0,0.43448246478317476,0,12345
two_cliques,20,0.4,8,5,5,5,1,0.5655175352168251,1,0.8,12345
two_cliques,20,0.4,30,5,5,5,1,0.5655175352168251,1,1,12345
";

fn golden_config() -> SweepConfig {
    SweepConfig {
        hosts: vec![HostKind::TwoCliques],
        ns: vec![20],
        deltas: vec![0.4],
        ms: vec![0, 8, 30],
        rs: vec![5],
        mode: ReplacementMode::Weak,
        trials: 5,
        master_seed: 12345,
        coupling: Coupling::None,
    }
}

#[test]
fn golden_csv_is_byte_stable() {
    let out = sweep(&golden_config(), 2).unwrap();
    assert_eq!(csv_string(&out.rows), GOLDEN);
}

#[test]
fn golden_csv_round_trips() {
    let rows = parse_csv(GOLDEN, "<golden>").unwrap();
    assert_eq!(csv_string(&rows), GOLDEN);
    // The failed cell pins the Wilson boundary: zero successes give a
    // zero lower bound, full successes give an upper bound of exactly 1.
    assert_eq!(rows[0].ci_low, 0.0);
    assert_eq!(rows[2].ci_high, 1.0);
}
