// Full evaluation of a clustered and a uniform particle image on a 7x7 grid,
// printing the JSON report of the clustered one.
//
// ```text
// cargo run --example analyze_image
// ```

use particle_segregation::synth::generate;
use particle_segregation::{evaluate, EdgeSource, GridSpec, Layout, SynthSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let grid = GridSpec::new(7, 7)?;
    let source = EdgeSource::default();

    let clustered = SynthSpec {
        layout: Layout::Clustered {
            clusters: 1,
            spread: 15.0,
        },
        seed: 2,
        ..Default::default()
    };
    let uniform = SynthSpec {
        layout: Layout::Uniform,
        ..clustered.clone()
    };

    let squeezed = evaluate(&generate(&clustered)?, grid, &source, 0.5)?;
    let scattered = evaluate(&generate(&uniform)?, grid, &source, 0.5)?;
    println!("clustered particles: {:.4}", squeezed.index);
    println!("uniform particles:   {:.4}", scattered.index);
    print!("{}", squeezed.to_json());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
