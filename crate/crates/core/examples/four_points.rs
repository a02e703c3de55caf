//! Delaunay-Rips persistence of four points, read from `data/lemma_x0.1.csv`
//! or built in place when run from elsewhere.

use delrips::filtration::{build, FiltrationSpec, Method};
use delrips::instability::four_point_cloud;
use delrips::{io, persistence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/lemma_x0.1.csv");
    let cloud = match io::read_cloud(&path) {
        Ok(c) => c,
        Err(_) => four_point_cloud(0.1)?,
    };
    let filt = build(&cloud, &FiltrationSpec::new(Method::DelaunayRips, 1))?;
    println!("filtration:");
    for e in filt.entries() {
        println!("  {:<8} {:.6}", e.simplex.to_string(), e.scale);
    }
    let dgm = persistence::diagram(&filt)?.canonical();
    print!("{}", io::format_diagram_csv(&dgm, io::NumberFormat::Fixed));
    Ok(())
}
