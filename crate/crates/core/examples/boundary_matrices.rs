//! Boundary matrix of the four-point filtration and its column reduction.

use delrips::instability::four_point_filtration;
use delrips::persistence::{boundary_matrix, reduce_standard};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let filt = four_point_filtration(0.1)?;
    let names = ["a", "b", "c", "d"];
    let label = |i: usize| -> String {
        filt.entries()[i]
            .simplex
            .vertices()
            .iter()
            .map(|&v| names[v])
            .collect()
    };
    let b = boundary_matrix(&filt)?;
    let r = reduce_standard(&b);
    for (title, m) in [("boundary", b.dense()), ("reduced", r.dense())] {
        println!("{title}:");
        print!("      ");
        for j in 0..filt.len() {
            print!("{:>4}", label(j));
        }
        println!();
        for (i, row) in m.iter().enumerate() {
            print!("{:>6}", label(i));
            for v in row {
                print!("{v:>4}");
            }
            println!();
        }
    }
    for (i, j) in r.index_pairs() {
        println!("({}, {})", label(i), label(j));
    }
    Ok(())
}
