//! Timing and operation-count sweeps.
//!
//! A sweep runs every selected algorithm on `u64` buffers of each configured
//! size, for a set of rotation amounts, and records the median wall time of
//! `repetitions` runs together with the operation counters. Buffers are
//! filled from a seeded generator, so the counter columns of two sweeps with
//! equal configs are identical.

use std::io::Write;
use std::time::Instant;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::counters::Counters;
use crate::error::{Error, Result};
use crate::modular::gcd_sub;
use crate::rotate::{Algorithm, RECURSION_LIMIT};

pub const CSV_HEADER: &str = "algorithm,n,r,elapsed_ns,reads,writes,swaps,aux_peak,depth_max,repetitions";

/// Which rotation amounts a sweep visits for each size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmountPolicy {
    /// Every `1 <= r < n`. Rotation by 0 is the identity and is skipped.
    All,
    /// `k` distinct amounts drawn uniformly from `1..n` (all of them if
    /// `k >= n − 1`).
    Sample(usize),
    /// These amounts, for every size they are valid for (`0 < r < n`).
    Fixed(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub sizes: Vec<usize>,
    pub amounts: AmountPolicy,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
    pub repetitions: usize,
    /// Run cells on the rayon pool. Each cell still times its repetitions on
    /// a single thread.
    pub parallel: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            sizes: vec![1000],
            amounts: AmountPolicy::All,
            algorithms: Algorithm::BENCHMARKED.to_vec(),
            seed: 0,
            repetitions: 1,
            parallel: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::Config("at least one size is required".into()));
        }
        if let Some(n) = self.sizes.iter().find(|&&n| n < 2) {
            return Err(Error::Config(format!("sizes must be at least 2 (got {n})")));
        }
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("at least one algorithm is required".into()));
        }
        if let AmountPolicy::Sample(0) = self.amounts {
            return Err(Error::Config("sample size must be at least 1".into()));
        }
        Ok(())
    }

    fn amounts_for(&self, n: usize) -> Vec<usize> {
        match &self.amounts {
            AmountPolicy::All => (1..n).collect(),
            AmountPolicy::Sample(k) if *k >= n - 1 => (1..n).collect(),
            AmountPolicy::Sample(k) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(n as u64);
                let mut picked: Vec<usize> = index::sample(&mut rng, n - 1, *k).into_iter().map(|i| i + 1).collect();
                picked.sort_unstable();
                picked
            }
            AmountPolicy::Fixed(rs) => rs.iter().copied().filter(|&r| 0 < r && r < n).collect(),
        }
    }
}

/// One `(algorithm, n, r)` measurement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    #[serde(serialize_with = "algorithm_name")]
    pub algorithm: Algorithm,
    pub n: usize,
    pub r: usize,
    /// Median over the repetitions, at least 1.
    pub elapsed_ns: u64,
    pub reads: u64,
    pub writes: u64,
    pub swaps: u64,
    pub aux_peak: u64,
    pub depth_max: u64,
    pub repetitions: usize,
}

fn algorithm_name<S: Serializer>(algorithm: &Algorithm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(algorithm.name())
}

impl BenchRecord {
    pub fn counters(&self) -> Counters {
        Counters {
            reads: self.reads,
            writes: self.writes,
            swaps: self.swaps,
            aux_peak: self.aux_peak,
            depth_max: self.depth_max,
        }
    }
}

/// A cell left out of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip {
    pub algorithm: Algorithm,
    pub n: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub records: Vec<BenchRecord>,
    pub skipped: Vec<Skip>,
}

/// Seeded buffer contents for size `n`; identical for every cell of that size.
pub fn fill(seed: u64, n: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random()).collect()
}

fn run_cell(algorithm: Algorithm, source: &[u64], r: usize, repetitions: usize) -> Result<BenchRecord> {
    let mut times = Vec::with_capacity(repetitions);
    let mut counters = Counters::default();
    for _ in 0..repetitions {
        let mut buf = source.to_vec();
        let mut c = Counters::default();
        let start = Instant::now();
        algorithm.apply(&mut buf, r, &mut c)?;
        times.push(start.elapsed().as_nanos() as u64);
        std::hint::black_box(&buf);
        counters = c;
    }
    times.sort_unstable();
    Ok(BenchRecord {
        algorithm,
        n: source.len(),
        r,
        elapsed_ns: times[times.len() / 2].max(1),
        reads: counters.reads,
        writes: counters.writes,
        swaps: counters.swaps,
        aux_peak: counters.aux_peak,
        depth_max: counters.depth_max,
        repetitions,
    })
}

pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    config.validate()?;
    let mut outcome = SweepOutcome::default();
    for &n in &config.sizes {
        let source = fill(config.seed, n);
        let amounts = config.amounts_for(n);
        let mut cells = Vec::new();
        for &algorithm in &config.algorithms {
            if algorithm == Algorithm::SwapRecursive && n > RECURSION_LIMIT {
                outcome.skipped.push(Skip {
                    algorithm,
                    n,
                    reason: format!("exceeds the recursion guard of {RECURSION_LIMIT} elements"),
                });
                continue;
            }
            cells.extend(amounts.iter().map(|&r| (algorithm, r)));
        }
        let run = |&(algorithm, r): &(Algorithm, usize)| run_cell(algorithm, &source, r, config.repetitions);
        let records: Result<Vec<_>> =
            if config.parallel { cells.par_iter().map(run).collect() } else { cells.iter().map(run).collect() };
        outcome.records.extend(records?);
    }
    Ok(outcome)
}

/// A counter that does not match its closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub algorithm: Algorithm,
    pub n: usize,
    pub r: usize,
    pub field: &'static str,
    pub expected: u64,
    pub actual: u64,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} n={} r={}: {} = {}, expected {}",
            self.algorithm, self.n, self.r, self.field, self.actual, self.expected
        )
    }
}

/// Closed-form counter values the record must satisfy, as `(field, expected, actual)`.
fn identities(rec: &BenchRecord) -> Vec<(&'static str, u64, u64)> {
    let (n, r) = (rec.n as u64, rec.r as u64);
    let half_up = |x: u64| x.div_ceil(2);
    match rec.algorithm {
        Algorithm::SwapRecursive | Algorithm::SwapIterative => {
            let g = gcd_sub(rec.r, rec.n - rec.r).unwrap_or(0) as u64;
            vec![("swaps", n - g, rec.swaps)]
        }
        Algorithm::Modulo => vec![("writes", n, rec.writes)],
        Algorithm::Reverse => vec![("swaps", half_up(r) + half_up(n - r) + half_up(n), rec.swaps)],
        Algorithm::Copy => vec![("aux_peak", n, rec.aux_peak)],
        Algorithm::CopyNative => vec![("aux_peak", r.min(n - r), rec.aux_peak)],
    }
}

pub fn verify_counters(records: &[BenchRecord]) -> std::result::Result<(), Vec<Discrepancy>> {
    let mut found = Vec::new();
    for rec in records {
        if rec.r == 0 || rec.r >= rec.n {
            continue;
        }
        for (field, expected, actual) in identities(rec) {
            if expected != actual {
                found.push(Discrepancy { algorithm: rec.algorithm, n: rec.n, r: rec.r, field, expected, actual });
            }
        }
    }
    if found.is_empty() {
        Ok(())
    } else {
        Err(found)
    }
}

/// Writes the header and one row per record, sorted by `(algorithm name, n, r)`.
pub fn write_csv<W: Write>(records: &[BenchRecord], destination: W) -> Result<()> {
    let mut sorted: Vec<&BenchRecord> = records.iter().collect();
    sorted.sort_by(|a, b| (a.algorithm.name(), a.n, a.r).cmp(&(b.algorithm.name(), b.n, b.r)));
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(destination);
    writer.write_record(CSV_HEADER.split(',')).map_err(csv_error)?;
    for rec in sorted {
        writer.serialize(rec).map_err(csv_error)?;
    }
    writer.flush()?;
    Ok(())
}

fn csv_error(err: csv::Error) -> Error {
    Error::Io(err.to_string())
}

/// Median time at size `2m` over median time at size `m`.
///
/// Both sizes are run at the same relative amounts `r / n`, drawn from
/// `seed`, so the cycle structure of the modular visit is comparable. Runs
/// at the two sizes alternate, so drift in machine load affects both alike.
pub fn linearity_ratio(algorithm: Algorithm, m: usize, samples: usize, repetitions: usize, seed: u64) -> Result<f64> {
    if m < 2 || samples == 0 || repetitions == 0 {
        return Err(Error::Config("linearity probe needs m >= 2 and nonzero samples and repetitions".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sources = [fill(seed, m), fill(seed, 2 * m)];
    let mut times = [Vec::new(), Vec::new()];
    // the first round only warms caches and the allocator
    for round in 0..=samples {
        let fraction: f64 = rng.random_range(0.05..0.95);
        for _ in 0..repetitions {
            for (source, times) in sources.iter().zip(times.iter_mut()) {
                let n = source.len();
                let r = ((n as f64 * fraction) as usize).clamp(1, n - 1);
                let elapsed = run_cell(algorithm, source, r, 1)?.elapsed_ns;
                if round > 0 {
                    times.push(elapsed);
                }
            }
        }
    }
    let median = |t: &mut Vec<u64>| {
        t.sort_unstable();
        t[t.len() / 2]
    };
    let [small, large] = &mut times;
    Ok(median(large) as f64 / median(small) as f64)
}
