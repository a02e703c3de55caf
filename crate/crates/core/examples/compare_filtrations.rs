//! Rips, Delaunay-Rips and Alpha on the same sampled circle: sizes, and
//! the most persistent loop of each.

use delrips::datagen::{add_noise, sample_shape, ShapeClass};
use delrips::filtration::{build, FiltrationSpec, Method};
use delrips::persistence::diagram;
use delrips::PointCloud;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circle = sample_shape(ShapeClass::Circle { radius: 1.0 }, 60, 3)?;
    let noisy = add_noise(&circle, 0.05, 4)?;
    // the circle lies in z = 0; drop the third coordinate
    let flat: Vec<[f64; 2]> = noisy.points().map(|p| [p[0], p[1]]).collect();
    let cloud = PointCloud::from_points2(&flat)?;

    for method in [Method::Rips, Method::DelaunayRips, Method::Alpha] {
        let filt = build(&cloud, &FiltrationSpec::new(method, 1))?;
        let dgm = diagram(&filt)?;
        let loop_ = dgm
            .dim(1)
            .iter()
            .max_by(|a, b| a.persistence().total_cmp(&b.persistence()))
            .unwrap();
        println!(
            "{method:>5}: {:>6} simplices {:?}, longest H1 bar [{:.4}, {:.4})",
            filt.len(),
            filt.count_by_dim(),
            loop_.birth,
            loop_.death
        );
    }
    Ok(())
}
