//! Sweep output: CSV rows and a standalone plot script.
//!
//! Floats are printed in Rust's shortest round-trip form, so parsing an
//! emitted CSV reproduces the rows exactly and identical sweeps yield
//! byte-identical files.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::experiments::sweep::SweepRow;
use crate::host::HostKind;

pub const CSV_HEADER: &str =
    "host,n,delta,m,r,trials,successes,p_hat,ci_low,ci_high,cert_rate,master_seed";

pub fn csv_string(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            row.host,
            row.n,
            row.delta,
            row.m,
            row.r,
            row.trials,
            row.successes,
            row.p_hat,
            row.ci_low,
            row.ci_high,
            row.cert_rate,
            row.master_seed
        ));
    }
    out
}

pub fn write_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::param("refusing to write an empty CSV"));
    }
    fs::write(path, csv_string(rows)).map_err(|e| Error::io(path, e))
}

pub fn parse_csv(text: &str, source: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => return Err(Error::parse(source, 1, "missing or wrong CSV header")),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 12 {
            return Err(Error::parse(
                source,
                lineno,
                format!("expected 12 fields, got {}", fields.len()),
            ));
        }
        fn num<T: FromStr>(s: &str, source: &str, lineno: usize, what: &str) -> Result<T> {
            s.parse()
                .map_err(|_| Error::parse(source, lineno, format!("bad {what}: `{s}`")))
        }
        rows.push(SweepRow {
            host: HostKind::from_str(fields[0])
                .map_err(|e| Error::parse(source, lineno, e.to_string()))?,
            n: num(fields[1], source, lineno, "n")?,
            delta: num(fields[2], source, lineno, "delta")?,
            m: num(fields[3], source, lineno, "m")?,
            r: num(fields[4], source, lineno, "r")?,
            trials: num(fields[5], source, lineno, "trials")?,
            successes: num(fields[6], source, lineno, "successes")?,
            p_hat: num(fields[7], source, lineno, "p_hat")?,
            ci_low: num(fields[8], source, lineno, "ci_low")?,
            ci_high: num(fields[9], source, lineno, "ci_high")?,
            cert_rate: num(fields[10], source, lineno, "cert_rate")?,
            master_seed: num(fields[11], source, lineno, "master_seed")?,
        });
    }
    Ok(rows)
}

/// A standalone matplotlib script plotting p_hat against m, one curve per
/// r (and per host/n/delta combination), with the Wilson band shaded.
pub fn plot_script(csv_path: &str) -> String {
    format!(
        r#"#!/usr/bin/env python3
"""Plot sweep success probability vs m, one curve per r."""
import csv
import sys
from collections import defaultdict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "{csv_path}"
out = sys.argv[2] if len(sys.argv) > 2 else path.rsplit(".", 1)[0] + ".png"

groups = defaultdict(list)
with open(path) as fh:
    for row in csv.DictReader(fh):
        key = (row["host"], row["n"], row["delta"], row["r"])
        groups[key].append((int(row["m"]), float(row["p_hat"]),
                            float(row["ci_low"]), float(row["ci_high"])))

fig, ax = plt.subplots(figsize=(7, 4.5))
for key in sorted(groups):
    host, n, delta, r = key
    pts = sorted(groups[key])
    ms = [p[0] for p in pts]
    ps = [p[1] for p in pts]
    lo = [p[2] for p in pts]
    hi = [p[3] for p in pts]
    label = f"{{host}} n={{n}} d={{delta}} r={{r}}"
    line, = ax.plot(ms, ps, marker="o", label=label)
    ax.fill_between(ms, lo, hi, alpha=0.2, color=line.get_color())

ax.set_xlabel("m (random edges added)")
ax.set_ylabel("empirical P(rainbow connected)")
ax.set_ylim(-0.02, 1.02)
ax.legend(fontsize=8)
ax.grid(True, alpha=0.3)
fig.tight_layout()
fig.savefig(out, dpi=150)
print(f"wrote {{out}}")
"#
    )
}

pub fn write_plot_script(csv_path: &str, out: &Path) -> Result<()> {
    fs::write(out, plot_script(csv_path)).map_err(|e| Error::io(out, e))
}
