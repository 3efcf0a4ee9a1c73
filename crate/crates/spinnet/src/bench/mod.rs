//! Sampling harness measuring how the asymptotic 9j formulas converge.

mod campaign;
mod sample;
mod stats;

pub use campaign::{gnuplot_script, read_records, run_campaign, Campaign, CampaignConfig, CSV_HEADER, RNG_NAME};
pub use sample::{sample_cell, sample_nine_j, BenchError, Cell, Formula, Sample, SampleConfig};
pub use stats::{error_stats, scaling_fit, BenchRecord};
