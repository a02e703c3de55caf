//! A small run of the method comparison; `delrips bench` runs the full grid.

use std::time::Duration;

use delrips::bench::{format_bench_csv, median_seconds, run_bench, BenchConfig};
use delrips::filtration::Method;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = BenchConfig {
        sizes: vec![50, 100],
        trials: 3,
        timeout: Duration::from_secs(2),
        ..BenchConfig::default()
    };
    let records = run_bench(&config, |_| {})?;
    print!("{}", format_bench_csv(&records));
    for n in &config.sizes {
        for m in Method::ALL {
            println!("{m:>5} n={n}: median {:?} s", median_seconds(&records, m, *n));
        }
    }
    Ok(())
}
