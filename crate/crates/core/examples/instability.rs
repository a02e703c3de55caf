//! The H1 diagram of four points jumps when the fourth point crosses the
//! circle through the other three, however small the move.

use delrips::instability::demo_instability;
use delrips::metrics::DiagonalCost;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let offsets = [-0.02, -0.01, -0.001, 0.001, 0.01, 0.02];
    for cost in [DiagonalCost::Half, DiagonalCost::Full] {
        let report = demo_instability(&offsets, cost)?;
        println!("diagonal cost: {cost}");
        for t in &report.transitions {
            println!(
                "  x {:>6} -> {:>6}  H1 distance {:.6}{}",
                t.from,
                t.to,
                t.bottleneck_h1,
                if t.same_triangulation { "" } else { "  (edge flip)" }
            );
        }
    }
    Ok(())
}
