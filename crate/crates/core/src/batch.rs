//! Batch evaluation over many independent inputs.
//!
//! With the `parallel` feature (on by default) [`map`] and [`map_range`]
//! spread work over the rayon thread pool; without it they run in order on
//! the calling thread. Results are in input order either way.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{kappa_fast, kappa_quadratic, WitnessMode};
use crate::diagram::TrapezoidDiagram;
use crate::oracle;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// `f(0), ..., f(len - 1)`.
pub fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// Always sequential; the baseline for [`map`].
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Largest input the graph-level oracle accepts.
pub const ORACLE_LIMIT: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Fast,
    Quadratic,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Fast, Algorithm::Quadratic, Algorithm::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fast => "fast",
            Algorithm::Quadratic => "quadratic",
            Algorithm::Oracle => "oracle",
        }
    }

    /// Connectivity only, no witness.
    pub fn kappa(self, dg: &TrapezoidDiagram) -> usize {
        match self {
            Algorithm::Fast => kappa_fast(dg, WitnessMode::Skip).kappa,
            Algorithm::Quadratic => kappa_quadratic(dg, WitnessMode::Skip).kappa,
            Algorithm::Oracle => oracle::kappa_bruteforce(&dg.intersection_graph()),
        }
    }

    /// Connectivity and the wall time of the computation alone.
    pub fn timed(self, dg: &TrapezoidDiagram) -> (usize, u128) {
        let start = Instant::now();
        let kappa = self.kappa(dg);
        (kappa, start.elapsed().as_nanos())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}' (expected fast, quadratic or oracle)"))
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub seeds_per_size: u64,
    pub algorithms: Vec<Algorithm>,
    /// Run instances concurrently. Timings then include contention.
    pub parallel: bool,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub seed: u64,
    pub algorithm: &'static str,
    pub elapsed_ns: u128,
    pub kappa: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("algorithms disagree on n = {n}, seed = {seed}: {}", format_kappas(.kappas))]
pub struct Disagreement {
    pub n: usize,
    pub seed: u64,
    pub kappas: Vec<(&'static str, usize)>,
}

fn format_kappas(kappas: &[(&'static str, usize)]) -> String {
    kappas
        .iter()
        .map(|(name, k)| format!("{name}={k}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Times every algorithm on `random(n, seed)` for each size and seeds
/// `0..seeds_per_size`. Every instance must get the same answer from all
/// algorithms; the first mismatch aborts with its records discarded.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, Disagreement> {
    let instances: Vec<(usize, u64)> = config
        .sizes
        .iter()
        .flat_map(|&n| (0..config.seeds_per_size).map(move |seed| (n, seed)))
        .collect();
    let run = |&(n, seed): &(usize, u64)| -> Result<Vec<BenchRecord>, Disagreement> {
        let dg = TrapezoidDiagram::random(n, seed);
        let records: Vec<BenchRecord> = config
            .algorithms
            .iter()
            .map(|&algorithm| {
                let (kappa, elapsed_ns) = algorithm.timed(&dg);
                BenchRecord {
                    n,
                    seed,
                    algorithm: algorithm.name(),
                    elapsed_ns,
                    kappa,
                }
            })
            .collect();
        if records.windows(2).any(|w| w[0].kappa != w[1].kappa) {
            return Err(Disagreement {
                n,
                seed,
                kappas: records.iter().map(|r| (r.algorithm, r.kappa)).collect(),
            });
        }
        Ok(records)
    };
    let results = if config.parallel {
        map(&instances, run)
    } else {
        map_sequential(&instances, run)
    };
    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    Ok(records)
}

/// Writes records as CSV with header `n,seed,algorithm,elapsed_ns,kappa`.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

/// Median elapsed time of `algorithm` at size `n`.
pub fn median_ns(records: &[BenchRecord], n: usize, algorithm: Algorithm) -> Option<u128> {
    let mut times: Vec<u128> = records
        .iter()
        .filter(|r| r.n == n && r.algorithm == algorithm.name())
        .map(|r| r.elapsed_ns)
        .collect();
    if times.is_empty() {
        return None;
    }
    times.sort_unstable();
    Some(times[times.len() / 2])
}
