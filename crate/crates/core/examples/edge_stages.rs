// Each stage of edge extraction on one synthetic image, saved as PNGs.
//
// ```text
// cargo run --example edge_stages -- /tmp/stages
// ```

use std::path::PathBuf;

use particle_segregation::edge::detect_edges;
use particle_segregation::synth::generate;
use particle_segregation::thin::{binarize, thin};
use particle_segregation::{DetectorParams, SynthSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = match std::env::args().nth(1) {
        Some(dir) => PathBuf::from(dir),
        None => std::env::temp_dir().join("particle-segregation-stages"),
    };
    std::fs::create_dir_all(&out_dir)?;

    let spec = SynthSpec {
        width: 256,
        height: 256,
        particle_count: 30,
        seed: 11,
        ..Default::default()
    };
    let img = generate(&spec)?;
    let edges = detect_edges(&img, &DetectorParams::default())?;
    let bw = binarize(&edges, 0.5)?;
    let skeleton = thin(&bw);

    img.save_png(out_dir.join("1_input.png"))?;
    edges.save_png(out_dir.join("2_edges.png"))?;
    bw.save_png(out_dir.join("3_binary.png"))?;
    skeleton.save_png(out_dir.join("4_thinned.png"))?;

    println!("binary edge pixels:  {}", bw.foreground_count());
    println!("after thinning:      {}", skeleton.foreground_count());
    println!("stages written to {}", out_dir.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
