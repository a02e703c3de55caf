//! Bottleneck distance between two small diagrams, with the optimal
//! matching under both diagonal conventions.

use delrips::metrics::{bottleneck, DiagonalCost};
use delrips::PersistencePair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = [
        PersistencePair::new(0.0, 3.0),
        PersistencePair::new(1.0, 1.4),
        PersistencePair::essential(0.0),
    ];
    let y = [
        PersistencePair::new(0.2, 2.6),
        PersistencePair::new(2.0, 2.5),
        PersistencePair::essential(0.1),
    ];
    for cost in [DiagonalCost::Half, DiagonalCost::Full] {
        let (d, m) = bottleneck(&x, &y, cost)?;
        println!("{cost}: distance {d}");
        for (i, j) in &m.matched {
            println!("  {:?} <-> {:?}", x[*i], y[*j]);
        }
        for i in &m.to_diagonal_x {
            println!("  {:?} -> diagonal", x[*i]);
        }
        for j in &m.to_diagonal_y {
            println!("  diagonal <- {:?}", y[*j]);
        }
    }
    Ok(())
}
