// The segregation index on hand-written cell lengths.
//
// ```text
// cargo run --example gini_index
// ```

use particle_segregation::gini::{gini_index, gini_ratio};
use particle_segregation::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(&str, &[u64]); 5] = [
        ("every cell alike", &[1, 1, 1, 1]),
        ("all edges in one cell", &[0, 0, 0, 7]),
        ("linear ramp", &[1, 2, 3, 4]),
        ("mostly even", &[12, 9, 11, 10, 13, 10, 9, 12, 11]),
        ("single cell", &[5]),
    ];
    for (label, y) in cases {
        let (num, den) = gini_ratio(y)?;
        println!("{label:<24} {y:?} -> {:.4}  ({num}/{den})", gini_index(y)?);
    }

    // no edge pixels at all is a distinct outcome, not a zero index
    match gini_index(&[0, 0, 0]) {
        Err(Error::NoEdges) => println!("{:<24} [0, 0, 0] -> no edges", "empty"),
        other => return Err(format!("expected NoEdges, got {other:?}").into()),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
