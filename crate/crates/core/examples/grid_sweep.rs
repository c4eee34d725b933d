// Index over every grid from 1x1 to 8x8, as a CSV table. Small grids swing
// widely; the values settle as the grid gets finer.
//
// ```text
// cargo run --example grid_sweep
// ```

use particle_segregation::report::sweep_to_csv;
use particle_segregation::synth::generate;
use particle_segregation::{sweep, EdgeSource, Layout, SynthSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SynthSpec {
        layout: Layout::Separated {
            species_fraction: 0.4,
        },
        radius_min: 4,
        radius_max: 16,
        seed: 8,
        ..Default::default()
    };
    let img = generate(&spec)?;
    let table = sweep(&img, 8, 8, &EdgeSource::default(), 0.5)?;
    print!("{}", sweep_to_csv(&table));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
