//! Delaunay triangulation of a small planar cloud, and what happens on
//! cocircular input.

use delrips::geometry::delaunay;
use delrips::PointCloud;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cloud = PointCloud::from_points2(&[
        [0.0, 0.0],
        [2.0, 0.1],
        [1.1, 1.7],
        [-0.9, 1.4],
        [0.6, 0.7],
        [2.3, 1.9],
    ])?;
    let dc = delaunay(&cloud)?;
    for s in dc.top_simplices() {
        println!("{s}");
    }

    let square = PointCloud::from_points2(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])?;
    let dc = delaunay(&square)?;
    println!(
        "square: {} triangles, degenerate = {}",
        dc.top_simplices().len(),
        dc.is_degenerate()
    );
    Ok(())
}
