// Evaluating with an edge-probability map produced by some other detector.
// The map is an 8-bit grayscale PNG where value v means strength v/255.
//
// ```text
// cargo run --example imported_edge_map
// ```

use particle_segregation::edge::import_edge_map;
use particle_segregation::{evaluate, EdgeSource, GrayImage, GridSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let (w, h) = (120, 90);
    let photo = GrayImage::filled(w, h, 100)?;

    // soft rings of probability around three centers, denser on the left
    let centers = [(20.0, 20.0), (30.0, 60.0), (95.0, 45.0)];
    let map_path = dir.path().join("probabilities.png");
    GrayImage::from_fn(w, h, |x, y| {
        let best = centers
            .iter()
            .map(|&(cx, cy): &(f64, f64)| ((x as f64 - cx).hypot(y as f64 - cy) - 10.0).abs())
            .fold(f64::MAX, f64::min);
        (255.0 * (-best * best / 2.0).exp()).round() as u8
    })?
    .save_png(&map_path)?;

    let map = import_edge_map(&map_path, w, h)?;
    let source = EdgeSource::Imported {
        map,
        path: Some(map_path.clone()),
    };
    for threshold in [0.3, 0.5, 0.8] {
        let report = evaluate(&photo, GridSpec::new(3, 4)?, &source, threshold)?;
        println!(
            "threshold {threshold}: index {:.4} over {} skeleton pixels",
            report.index, report.total_edge_pixels
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
