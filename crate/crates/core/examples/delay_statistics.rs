//! Delay-embed a noisy periodic series and summarise its diagrams with the
//! 48 persistence statistics.

use delrips::filtration::{build, FiltrationSpec, Method};
use delrips::persistence::diagram;
use delrips::vectorize::{delay_embed, stats_feature_names, stats_feature_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let series: Vec<f64> = (0..200)
        .map(|i| {
            let t = i as f64 * 0.21;
            t.sin() + 0.3 * (2.7 * t).cos() + 0.01 * ((i * 7919) % 13) as f64
        })
        .collect();
    let cloud = delay_embed(&series, 3, 5, 2)?;
    let filt = build(&cloud, &FiltrationSpec::new(Method::DelaunayRips, 2))?;
    let dgm = diagram(&filt)?.without_zero_persistence();
    let values = stats_feature_vector(&[dgm.dim(0), dgm.dim(1), dgm.dim(2)]);
    for (name, v) in stats_feature_names(3).iter().zip(&values) {
        println!("{name:>16} {v:.5}");
    }
    Ok(())
}
