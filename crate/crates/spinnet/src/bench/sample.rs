use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::asymptotics::AsymError;
use crate::recoupling::{nine_j_uncached, NineJLabels};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("only {found} of {wanted} samples after {attempts} attempts")]
    Budget { found: usize, wanted: usize, attempts: u64 },
    #[error("count must be at least 1")]
    EmptyCount,
    #[error("scaling fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("scaling fit needs positive values, got {0} at J = {1}")]
    NonPositive(f64, f64),
    #[error(transparent)]
    Asym(#[from] AsymError),
    #[error("csv: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    Asym63,
    Asym45,
    /// The exact kernel compared with itself, on the (6,3) pattern.
    Exact,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Asym63 => "asym63",
            Formula::Asym45 => "asym45",
            Formula::Exact => "exact",
        }
    }

    fn code(self) -> u64 {
        match self {
            Formula::Asym63 => 1,
            Formula::Asym45 => 2,
            Formula::Exact => 3,
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "asym63" | "63" => Ok(Formula::Asym63),
            "asym45" | "45" => Ok(Formula::Asym45),
            "exact" => Ok(Formula::Exact),
            _ => Err(format!("unknown formula {s:?}")),
        }
    }
}

/// Sampling request over several values of `J` for one `j_m` and formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub j_values: Vec<u32>,
    pub twice_jm: u32,
    pub count: usize,
    pub seed: u64,
    pub formula: Formula,
}

/// One grid cell: a single `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub big_j: u32,
    pub twice_jm: u32,
    pub count: usize,
    pub seed: u64,
    pub formula: Formula,
}

impl Cell {
    /// ChaCha stream selecting this cell.
    pub fn stream(&self) -> u64 {
        (self.formula.code() << 56) | ((self.twice_jm as u64) << 32) | self.big_j as u64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub labels: NineJLabels,
    pub exact: f64,
}

const WORDS_PER_ATTEMPT: u128 = 256;
const BATCH: u64 = 64;

/// Labels drawn by attempt number `k`: large entries `2J + [0, 2 j_m]` and
/// small ones `[0, 2 j_m]`, twice-valued, placed by the formula's pattern.
fn draw(cell: &Cell, k: u64) -> NineJLabels {
    let mut rng = ChaCha8Rng::seed_from_u64(cell.seed);
    rng.set_stream(cell.stream());
    rng.set_word_pos(k as u128 * WORDS_PER_ATTEMPT);
    let jm = cell.twice_jm;
    let mut large = || 2 * cell.big_j + rng.gen_range(0..=jm);
    let l: [u32; 6] = std::array::from_fn(|_| large());
    let s: [u32; 5] = std::array::from_fn(|_| rng.gen_range(0..=jm));
    let t = match cell.formula {
        Formula::Asym63 | Formula::Exact => [s[0], l[0], l[1], l[2], s[1], l[3], l[4], l[5], s[2]],
        Formula::Asym45 => [l[0], s[0], l[1], s[1], s[2], s[3], l[2], s[4], l[3]],
    };
    NineJLabels::from_twice(t)
}

fn attempt(cell: &Cell, k: u64) -> Option<Sample> {
    let labels = draw(cell, k);
    if !labels.is_admissible() {
        return None;
    }
    let exact = nine_j_uncached(&labels);
    if exact.is_zero() {
        return None;
    }
    Some(Sample { labels, exact: exact.to_f64() })
}

/// Rejection sampling of admissible labels with nonzero exact 9j.
///
/// Attempts are evaluated in parallel batches and accepted in attempt order,
/// so the result does not depend on the number of worker threads.
pub fn sample_cell(cell: &Cell) -> Result<Vec<Sample>, BenchError> {
    sample_with_budget(cell, 1000 * cell.count as u64)
}

fn sample_with_budget(cell: &Cell, budget: u64) -> Result<Vec<Sample>, BenchError> {
    if cell.count == 0 {
        return Err(BenchError::EmptyCount);
    }
    let mut out = Vec::with_capacity(cell.count);
    let mut next = 0;
    while out.len() < cell.count && next < budget {
        let end = (next + BATCH).min(budget);
        let batch: Vec<Option<Sample>> = (next..end).into_par_iter().map(|k| attempt(cell, k)).collect();
        out.extend(batch.into_iter().flatten().take(cell.count - out.len()));
        next = end;
    }
    if out.len() < cell.count {
        return Err(BenchError::Budget { found: out.len(), wanted: cell.count, attempts: budget });
    }
    Ok(out)
}

/// One sample list per `J` in `cfg.j_values`.
pub fn sample_nine_j(cfg: &SampleConfig) -> Result<Vec<Vec<Sample>>, BenchError> {
    cfg.j_values
        .iter()
        .map(|&big_j| {
            sample_cell(&Cell { big_j, twice_jm: cfg.twice_jm, count: cfg.count, seed: cfg.seed, formula: cfg.formula })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_admissible() {
        let cell = Cell { big_j: 10, twice_jm: 4, count: 12, seed: 3, formula: Formula::Asym45 };
        let a = sample_cell(&cell).unwrap();
        let b = sample_cell(&cell).unwrap();
        assert_eq!(a, b);
        for s in &a {
            assert!(s.labels.is_admissible());
            assert!(s.exact != 0.0);
            let t = s.labels.twice();
            for i in [0, 2, 6, 8] {
                assert!((20..=24).contains(&t[i]));
            }
            for i in [1, 3, 4, 5, 7] {
                assert!(t[i] <= 4);
            }
        }
    }

    #[test]
    fn budget_exhaustion() {
        let cell = Cell { big_j: 5, twice_jm: 2, count: 40, seed: 0, formula: Formula::Asym63 };
        assert!(matches!(
            sample_with_budget(&cell, 30),
            Err(BenchError::Budget { found: _, wanted: 40, attempts: 30 })
        ));
        let empty = Cell { count: 0, ..cell };
        assert_eq!(sample_cell(&empty), Err(BenchError::EmptyCount));
    }
}
