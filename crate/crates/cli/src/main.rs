//! `rcg`: generate, check, certify, sweep, audit, and oracle-compare for
//! randomly perturbed, randomly edge-colored graphs.
//!
//! Exit codes: 0 = success / property holds, 1 = property fails or a
//! mismatch was found, 2 = usage or input error. Stdout is line-oriented
//! with a stable first token per line; every randomized subcommand echoes
//! its seed.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rcg_core::certificate::{
    certify, write_certificate, write_failure, CertifyOutcome, CertifyParams, GoodnessScope,
};
use rcg_core::experiments::{
    bound_audit, compare_with_oracle, csv_string, sweep, write_plot_script, SweepConfig,
};
use rcg_core::format::{read_colored_file, write_colored_file};
use rcg_core::rainbow::is_rainbow_connected;
use rcg_core::{Error, HostKind, PerturbConfig, ReplacementMode};

#[derive(Parser)]
#[command(name = "rcg", version, about = "Randomly perturbed, randomly colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for randomized subcommands; echoed into all outputs.
    /// (Sweeps draw theirs from the config file's master_seed instead.)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for sweeps (0 = all cores). Output bytes are
    /// identical at any width.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output path. Required by generate; default `sweep.csv` for sweep;
    /// certify falls back to stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a perturbed colored graph and write it as a text file.
    Generate(GenerateArgs),
    /// Decide rainbow connectivity of a colored graph file.
    Check {
        /// Colored graph file (`p rcg` format, r >= 1).
        file: PathBuf,
    },
    /// Run the constructive certificate procedure on a colored graph file.
    Certify(CertifyArgs),
    /// Run a Monte Carlo sweep described by a TOML config file.
    Sweep {
        /// Sweep config (axes, trials, master_seed, optional coupling).
        config: PathBuf,
    },
    /// Numerically audit the closed-form inequality chains.
    Audit {
        /// Comma-separated density parameters in (0,1).
        #[arg(long, default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", value_delimiter = ',')]
        deltas: Vec<f64>,
    },
    /// Cross-check the exact decider against the brute-force oracle.
    OracleCompare {
        /// Largest instance size (3..=12).
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Number of random instances.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// complete | two_cliques | blowup | random_mindeg
    #[arg(long)]
    host: HostKind,
    #[arg(long)]
    n: usize,
    /// Minimum-degree density in (0,1).
    #[arg(long)]
    delta: f64,
    /// Random edges to add.
    #[arg(long)]
    m: usize,
    /// Colors; 0 writes an uncolored graph.
    #[arg(long)]
    r: u32,
    /// weak (with replacement over all pairs) | strict (without, outside the host)
    #[arg(long, default_value = "weak")]
    mode: ReplacementMode,
}

#[derive(Args)]
struct CertifyArgs {
    /// Colored graph file.
    file: PathBuf,
    /// Density parameter used for the default set size k.
    #[arg(long)]
    delta: f64,
    /// Override the number of sampled sets (default ceil(100 ln n)).
    #[arg(long)]
    t_override: Option<usize>,
    /// Override the sampled set size (default ceil(6/delta)+1).
    #[arg(long)]
    k_override: Option<usize>,
    /// sampled_set | family_union: vertices excluded in the goodness test.
    #[arg(long, default_value = "sampled_set")]
    scope: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let globals = Globals {
        seed: cli.seed,
        threads: cli.threads,
        output: cli.output,
    };
    match cli.command {
        Command::Generate(args) => generate(args, &globals),
        Command::Check { file } => check(&file),
        Command::Certify(args) => do_certify(args, &globals),
        Command::Sweep { config } => do_sweep(&config, &globals),
        Command::Audit { deltas } => audit(&deltas),
        Command::OracleCompare { n_max, cases } => oracle_compare(n_max, cases, globals.seed),
    }
}

struct Globals {
    seed: u64,
    threads: usize,
    output: Option<PathBuf>,
}

impl Globals {
    fn required_output(&self, what: &str) -> Result<&Path, Error> {
        self.output
            .as_deref()
            .ok_or_else(|| Error::param(format!("--output is required for {what}")))
    }
}

fn generate(args: GenerateArgs, globals: &Globals) -> Result<ExitCode, Error> {
    let output = globals.required_output("generate")?;
    let color_count = args.r.max(1);
    let config = PerturbConfig {
        host: args.host,
        n: args.n,
        delta: args.delta,
        m: args.m,
        r: color_count,
        seed: globals.seed,
        mode: args.mode,
    };
    let real = config.realize()?;
    let comments = vec![
        format!(
            "host={} n={} delta={} m={} r={} mode={}",
            args.host, args.n, args.delta, args.m, args.r, args.mode
        ),
        format!("seed={}", globals.seed),
    ];
    let coloring = (args.r >= 1).then_some(&real.coloring);
    write_colored_file(output, &real.graph, coloring, &comments)?;
    println!("n {}", args.n);
    println!("host-edges {}", real.host.edge_count());
    println!("edges {}", real.graph.edge_count());
    println!("min-degree {}", real.graph.min_degree());
    println!("seed {}", globals.seed);
    println!("output {}", output.display());
    Ok(ExitCode::SUCCESS)
}

fn check(file: &Path) -> Result<ExitCode, Error> {
    let parsed = read_colored_file(file)?;
    let coloring = parsed
        .coloring
        .ok_or_else(|| Error::param("check needs a colored graph (r >= 1)"))?;
    let report = is_rainbow_connected(&parsed.graph, &coloring, false)?;
    if report.connected {
        println!("RAINBOW-CONNECTED");
        Ok(ExitCode::SUCCESS)
    } else {
        let (u, v) = report.failing_pair.expect("disconnected report has a pair");
        println!("NOT-CONNECTED {u} {v}");
        Ok(ExitCode::from(1))
    }
}

fn do_certify(args: CertifyArgs, globals: &Globals) -> Result<ExitCode, Error> {
    let parsed = read_colored_file(&args.file)?;
    let coloring = parsed
        .coloring
        .ok_or_else(|| Error::param("certify needs a colored graph (r >= 1)"))?;
    let scope = match args.scope.as_str() {
        "sampled_set" => GoodnessScope::SampledSet,
        "family_union" => GoodnessScope::FamilyUnion,
        other => return Err(Error::param(format!("unknown scope `{other}`"))),
    };
    let params = CertifyParams {
        t_override: args.t_override,
        k_override: args.k_override,
        scope,
    };
    let outcome = certify(&parsed.graph, &coloring, args.delta, globals.seed, params)?;
    let (text, certified) = match &outcome {
        CertifyOutcome::Certified(cert) => {
            cert.validate(&parsed.graph, &coloring)?;
            (write_certificate(cert), true)
        }
        CertifyOutcome::Failed(fail) => (write_failure(fail), false),
    };
    match &globals.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| Error::io(path, e))?,
        None => print!("{text}"),
    }
    let stats = outcome.stats();
    println!("certified {certified}");
    println!("seed {}", globals.seed);
    println!("good-fraction {}", stats.good_fraction);
    println!("pairs-failed {}", stats.pairs_failed);
    if let Some(path) = &globals.output {
        println!("output {}", path.display());
    }
    Ok(if certified { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn do_sweep(config_path: &Path, globals: &Globals) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(config_path).map_err(|e| Error::io(config_path, e))?;
    let config: SweepConfig =
        toml::from_str(&text).map_err(|e| Error::param(format!("{}: {e}", config_path.display())))?;
    let out = sweep(&config, globals.threads)?;
    let default_output = PathBuf::from("sweep.csv");
    let output = globals.output.as_deref().unwrap_or(&default_output);
    std::fs::write(output, csv_string(&out.rows)).map_err(|e| Error::io(output, e))?;
    let plot_path = output.with_extension("plot.py");
    write_plot_script(&output.display().to_string(), &plot_path)?;
    println!("cells {}", out.rows.len());
    println!("trials-per-cell {}", config.trials);
    println!("master-seed {}", config.master_seed);
    println!("csv {}", output.display());
    println!("plot {}", plot_path.display());
    println!("coupling-violations {}", out.coupling_violations);
    println!("certificates-valid {}", out.certificates_valid);
    let ok = out.coupling_violations == 0 && out.certificates_valid;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn audit(deltas: &[f64]) -> Result<ExitCode, Error> {
    let report = bound_audit(deltas)?;
    print!("{report}");
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn oracle_compare(n_max: usize, cases: usize, seed: u64) -> Result<ExitCode, Error> {
    let cmp = compare_with_oracle(n_max, cases, seed)?;
    println!("seed {seed}");
    for mc in &cmp.mismatches {
        println!(
            "mismatch case={} n={} r={} edges={} decider={} oracle={}",
            mc.case, mc.n, mc.r, mc.edges, mc.decider, mc.oracle
        );
    }
    println!("agree {}/{}", cmp.matches, cmp.cases);
    Ok(if cmp.all_agree() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
