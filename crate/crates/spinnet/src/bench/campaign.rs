use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::sample::{sample_cell, BenchError, Cell, Formula};
use super::stats::{error_stats, BenchRecord};

pub const CSV_HEADER: &str = "formula,J,twice_jm,n_samples,seed,rms_dev,rms_mag,frac_err,zero_frac";
pub const RNG_NAME: &str = "ChaCha8 (rand_chacha 0.3), seed_from_u64(seed), stream = cell id, word_pos = 256 * attempt";

/// Grid of `J` × `j_m` × formula cells sharing one count and seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub j_values: Vec<u32>,
    pub twice_jm_values: Vec<u32>,
    pub formulas: Vec<Formula>,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Campaign {
    pub csv: String,
    pub records: Vec<BenchRecord>,
}

impl CampaignConfig {
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for &formula in &self.formulas {
            for &twice_jm in &self.twice_jm_values {
                for &big_j in &self.j_values {
                    out.push(Cell { big_j, twice_jm, count: self.count, seed: self.seed, formula });
                }
            }
        }
        out
    }
}

fn metadata(cfg: &CampaignConfig) -> String {
    let mut s = String::new();
    writeln!(s, "# spinnet bench campaign").unwrap();
    writeln!(s, "# rng: {RNG_NAME}").unwrap();
    writeln!(s, "# sampling: large 2J + U[0, twice_jm], small U[0, twice_jm] (twice-values); nonzero exact 9j only")
        .unwrap();
    writeln!(s, "# rms: over all samples, zero approximations included").unwrap();
    writeln!(s, "# count: {}, seed: {}", cfg.count, cfg.seed).unwrap();
    s
}

/// Samples and scores every cell. Output rows follow the grid order.
///
/// `threads` sizes a dedicated worker pool; the output is identical for any
/// thread count.
pub fn run_campaign(cfg: &CampaignConfig, threads: Option<usize>) -> Result<Campaign, BenchError> {
    let run = || -> Result<Vec<BenchRecord>, BenchError> {
        cfg.cells().iter().map(|c| error_stats(&sample_cell(c)?, c.formula, c.big_j, c.twice_jm, c.seed)).collect()
    };
    let records = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| BenchError::Csv(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut body = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in &records {
        body.serialize(r).map_err(|e| BenchError::Csv(e.to_string()))?;
    }
    let body = String::from_utf8(body.into_inner().map_err(|e| BenchError::Csv(e.to_string()))?).unwrap();
    let csv = format!("{}{CSV_HEADER}\n{body}", metadata(cfg));
    Ok(Campaign { csv, records })
}

/// Parses campaign CSV, skipping `#` metadata lines.
pub fn read_records(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    r.deserialize().map(|x| x.map_err(|e: csv::Error| BenchError::Csv(e.to_string()))).collect()
}

/// A gnuplot script drawing `frac_err` against `J` on log axes.
pub fn gnuplot_script(csv_path: &str) -> String {
    format!(
        "set datafile separator ','\nset logscale xy\nset xlabel 'J'\nset ylabel 'fractional error'\n\
         plot '{csv_path}' using 2:8 every ::1 with linespoints title 'frac_err'\n"
    )
}
