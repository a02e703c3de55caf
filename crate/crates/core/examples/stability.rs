//! Perturb a cloud by less than epsilon; while the Delaunay triangulation is
//! unchanged the Delaunay-Rips diagrams move by at most twice the Hausdorff
//! distance.

use delrips::datagen::{sample_shape, ShapeClass};
use delrips::filtration::{build, FiltrationSpec, Method};
use delrips::geometry::{epsilon_perturb, hausdorff_distance, same_triangulation};
use delrips::metrics::{bottleneck, DiagonalCost};
use delrips::persistence::diagram;
use delrips::PointCloud;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sample = sample_shape(ShapeClass::Random { half_width: 1.0 }, 25, 11)?;
    let flat: Vec<[f64; 2]> = sample.points().map(|p| [p[0], p[1]]).collect();
    let cloud = PointCloud::from_points2(&flat)?;
    let spec = FiltrationSpec::new(Method::DelaunayRips, 1);
    let before = diagram(&build(&cloud, &spec)?)?;

    for eps in [1e-6, 1e-3, 1e-2, 5e-2] {
        let pair = match epsilon_perturb(&cloud, eps, 5) {
            Ok(p) => p,
            Err(e) => {
                println!("eps {eps:e}: {e}");
                continue;
            }
        };
        let dh = hausdorff_distance(pair.source(), pair.target())?;
        let after = diagram(&build(pair.target(), &spec)?)?;
        let w0 = bottleneck(before.dim(0), after.dim(0), DiagonalCost::Half)?.0;
        let w1 = bottleneck(before.dim(1), after.dim(1), DiagonalCost::Half)?.0;
        println!(
            "eps {eps:e}: same triangulation {:5}  d_H {dh:.3e}  W0 {w0:.3e}  W1 {w1:.3e}  2 d_H {:.3e}",
            same_triangulation(&pair)?,
            2.0 * dh
        );
    }
    Ok(())
}
