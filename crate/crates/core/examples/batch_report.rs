// Quality-control style batch run through the CLI entry point: a directory of
// synthetic samples in, one CSV row per image out.
//
// ```text
// cargo run --example batch_report
// ```

use clap::Parser;
use particle_segregation::cli::{run, Cli};
use particle_segregation::synth::generate;
use particle_segregation::{Layout, SynthSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let samples = [
        (
            "sample_1.png",
            Layout::Clustered {
                clusters: 1,
                spread: 15.0,
            },
        ),
        (
            "sample_2.png",
            Layout::Clustered {
                clusters: 3,
                spread: 30.0,
            },
        ),
        ("sample_3.png", Layout::Uniform),
    ];
    for (name, layout) in samples {
        let spec = SynthSpec {
            layout,
            seed: 21,
            ..Default::default()
        };
        generate(&spec)?.save_png(dir.path().join(name))?;
    }

    let cli = Cli::try_parse_from([
        "segregate",
        "batch",
        "--input",
        dir.path().to_str().unwrap(),
    ])?;
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run(cli, &mut stdout, &mut stderr);
    print!("{}", String::from_utf8(stdout)?);
    if code != 0 {
        return Err(format!(
            "batch exited with {code}: {}",
            String::from_utf8_lossy(&stderr)
        )
        .into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
