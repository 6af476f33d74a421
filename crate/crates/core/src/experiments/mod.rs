//! Monte Carlo engine: seeded trials over parameter grids, aggregated
//! success probabilities with Wilson intervals, coupled-monotonicity
//! chains, closed-form bound audits, and CSV/plot output.

mod bounds;
mod compare;
mod couple;
mod output;
mod sweep;
mod trial;

pub use bounds::{bound_audit, reference_m, BoundAuditReport, BoundCheck};
pub use compare::{compare_with_oracle, MismatchCase, OracleComparison};
pub use couple::{coupled_m_chain, coupled_r_chain, ChainPoint, ChainResult};
pub use output::{csv_string, parse_csv, plot_script, write_csv, write_plot_script, CSV_HEADER};
pub use sweep::{sweep, wilson_interval, Coupling, SweepConfig, SweepOutput, SweepRow, Z95};
pub use trial::{run_trial, TrialResult};
