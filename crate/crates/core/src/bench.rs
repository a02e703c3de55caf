//! Wall-clock and size comparison of the filtration methods on sampled
//! shapes.
//!
//! A cell is one (method, n, trial). Its time runs from the point cloud being
//! in memory to the diagram being produced; sampling and file I/O are
//! excluded. Cells run one after another on a single thread.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::budget::{Budget, BudgetExceeded};
use crate::cloud::PointCloud;
use crate::datagen::{add_noise, sample_shape, DatagenError, ShapeClass};
use crate::filtration::{build_with_budget, FiltrationError, FiltrationSpec, Method};
use crate::persistence::{diagram_with_budget, PersistenceError};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub shape: ShapeClass,
    pub noise: f64,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub methods: Vec<Method>,
    pub max_hom_dim: usize,
    pub timeout: Duration,
    pub max_simplices: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            shape: ShapeClass::Sphere { radius: 1.0 },
            noise: 0.1,
            sizes: vec![100, 200, 300, 400, 500],
            trials: 10,
            methods: Method::ALL.to_vec(),
            max_hom_dim: 1,
            timeout: Duration::from_secs(7),
            max_simplices: 2_000_000,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Ok,
    Timeout,
    TooLarge,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Ok => "ok",
            CellStatus::Timeout => "timeout",
            CellStatus::TooLarge => "too_large",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub method: Method,
    pub n: usize,
    pub trial: usize,
    pub status: CellStatus,
    /// Wall time; `None` unless the cell finished.
    pub seconds: Option<f64>,
    /// Simplices in the complex. For a `TooLarge` cell this is the size that
    /// was refused; for a timeout it is unknown.
    pub simplices: Option<u128>,
}

impl BenchRecord {
    /// Wall time with unfinished cells counted as infinitely slow.
    pub fn effective_seconds(&self) -> f64 {
        self.seconds.unwrap_or(f64::INFINITY)
    }
}

/// Errors that stop the whole run, as opposed to a cell running out of
/// budget.
#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Datagen(#[from] DatagenError),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
}

/// Seed of the cloud used by every method in trial `trial` at size `n`.
pub fn cell_seed(seed: u64, n: usize, trial: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((n as u64) << 24)
        .wrapping_add(trial as u64)
}

pub fn bench_cloud(config: &BenchConfig, n: usize, trial: usize) -> Result<PointCloud, DatagenError> {
    let s = cell_seed(config.seed, n, trial);
    let clean = sample_shape(config.shape, n, s)?;
    add_noise(&clean, config.noise, s ^ 0xA5A5_A5A5)
}

/// Times one method on one cloud.
pub fn run_cell(
    cloud: &PointCloud,
    method: Method,
    max_hom_dim: usize,
    timeout: Duration,
    max_simplices: usize,
) -> Result<(CellStatus, Option<f64>, Option<u128>), BenchError> {
    let spec = FiltrationSpec::new(method, max_hom_dim);
    let start = Instant::now();
    let budget = Budget::unlimited()
        .with_timeout(timeout)
        .with_max_simplices(max_simplices);
    let filt = match build_with_budget(cloud, &spec, &budget) {
        Ok(f) => f,
        Err(FiltrationError::Budget(e)) => return Ok(unfinished(e)),
        Err(e) => return Err(e.into()),
    };
    let size = filt.len() as u128;
    if let Err(e) = budget.check_size(size) {
        return Ok(unfinished(e));
    }
    match diagram_with_budget(&filt, &budget) {
        Ok(_) => {}
        Err(PersistenceError::Budget(e)) => return Ok(unfinished(e)),
        Err(e) => return Err(e.into()),
    }
    let elapsed = start.elapsed();
    if elapsed > timeout {
        return Ok((CellStatus::Timeout, None, Some(size)));
    }
    Ok((CellStatus::Ok, Some(elapsed.as_secs_f64()), Some(size)))
}

fn unfinished(e: BudgetExceeded) -> (CellStatus, Option<f64>, Option<u128>) {
    match e {
        BudgetExceeded::Timeout => (CellStatus::Timeout, None, None),
        BudgetExceeded::TooLarge { count, .. } => (CellStatus::TooLarge, None, Some(count)),
    }
}

/// Runs every cell, calling `progress` after each one.
pub fn run_bench(
    config: &BenchConfig,
    mut progress: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, BenchError> {
    let mut out = Vec::new();
    for &n in &config.sizes {
        for trial in 0..config.trials {
            let cloud = bench_cloud(config, n, trial)?;
            for &method in &config.methods {
                let (status, seconds, simplices) = run_cell(
                    &cloud,
                    method,
                    config.max_hom_dim,
                    config.timeout,
                    config.max_simplices,
                )?;
                let rec = BenchRecord {
                    method,
                    n,
                    trial,
                    status,
                    seconds,
                    simplices,
                };
                progress(&rec);
                out.push(rec);
            }
        }
    }
    Ok(out)
}

/// Median wall time of the records for (method, n), unfinished cells
/// counting as infinite. `None` when there are no such records.
pub fn median_seconds(records: &[BenchRecord], method: Method, n: usize) -> Option<f64> {
    let mut t: Vec<f64> = records
        .iter()
        .filter(|r| r.method == method && r.n == n)
        .map(BenchRecord::effective_seconds)
        .collect();
    if t.is_empty() {
        return None;
    }
    t.sort_by(f64::total_cmp);
    let m = t.len() / 2;
    Some(if t.len() % 2 == 1 || t[m].is_infinite() {
        t[m]
    } else {
        (t[m - 1] + t[m]) / 2.0
    })
}

/// `method,n,trial,status,seconds,simplices,median_seconds`, one row per cell.
pub fn format_bench_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("method,n,trial,status,seconds,simplices,median_seconds\n");
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in records {
        let median = median_seconds(records, r.method, r.n).unwrap_or(f64::NAN);
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.method,
            r.n,
            r.trial,
            r.status.as_str(),
            opt(r.seconds.map(|s| format!("{s:.6}"))),
            opt(r.simplices.map(|s| s.to_string())),
            if median.is_finite() {
                format!("{median:.6}")
            } else {
                "inf".into()
            }
        )
        .unwrap();
    }
    out
}
