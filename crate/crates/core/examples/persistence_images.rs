//! Persistence images of the six shape classes on grids shared across
//! all samples, one grid per homology dimension.
//!
//! Noise is added before triangulating: the noiseless circle lies exactly in
//! a plane, which the Delaunay-based filtrations reject.

use delrips::datagen::{add_noise, sample_shape, ShapeClass};
use delrips::filtration::{build, FiltrationSpec, Method};
use delrips::persistence::diagram;
use delrips::vectorize::{fit_pi_grid, persistence_image};
use delrips::PersistenceDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut diagrams: Vec<(String, PersistenceDiagram)> = Vec::new();
    for name in ShapeClass::NAMES {
        let cloud = add_noise(&sample_shape(name.parse()?, 120, 1)?, 0.05, 2)?;
        let filt = build(&cloud, &FiltrationSpec::new(Method::Alpha, 2))?;
        diagrams.push((name.to_string(), diagram(&filt)?.without_zero_persistence()));
    }
    let resolutions = [(5, 1), (5, 5), (5, 5)];
    let mut features: Vec<Vec<f64>> = vec![Vec::new(); diagrams.len()];
    for (p, res) in resolutions.into_iter().enumerate() {
        let slices: Vec<_> = diagrams.iter().map(|(_, d)| d.dim(p)).collect();
        let grid = fit_pi_grid(&slices, res, None)?;
        for (f, pairs) in features.iter_mut().zip(&slices) {
            f.extend(persistence_image(pairs, &grid));
        }
    }
    for ((name, _), f) in diagrams.iter().zip(&features) {
        let head: Vec<String> = f.iter().skip(3).take(5).map(|v| format!("{v:.3e}")).collect();
        println!("{name:>16} ({} values): {} ...", f.len(), head.join(" "));
    }
    Ok(())
}
