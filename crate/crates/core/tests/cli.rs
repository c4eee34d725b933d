use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use particle_segregation::cli::{EXIT_INVALID, EXIT_IO, EXIT_NO_EDGES};
use particle_segregation::image_io::load_image;
use particle_segregation::report::{format_index, sweep_from_csv, ReportDocument, Status};
use particle_segregation::synth::generate;
use particle_segregation::{sweep, EdgeSource, GrayImage, Layout, SynthSpec};

fn segregate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segregate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn particles_png(dir: &Path, name: &str, seed: u64) -> PathBuf {
    let path = dir.join(name);
    let spec = SynthSpec {
        width: 160,
        height: 160,
        particle_count: 25,
        radius_min: 4,
        radius_max: 8,
        seed,
        ..Default::default()
    };
    generate(&spec).unwrap().save_png(&path).unwrap();
    path
}

fn blank_png(dir: &Path) -> PathBuf {
    let path = dir.join("blank.png");
    GrayImage::filled(64, 64, 128)
        .unwrap()
        .save_png(&path)
        .unwrap();
    path
}

#[test]
fn analyze_writes_json_and_prints_four_decimals() {
    let dir = tempfile::tempdir().unwrap();
    let input = particles_png(dir.path(), "img.png", 1);
    let report = dir.path().join("r.json");
    let out = segregate(&[
        "analyze",
        "--input",
        s(&input),
        "--rows",
        "7",
        "--cols",
        "7",
        "--out",
        s(&report),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let printed = String::from_utf8(out.stdout).unwrap();
    let printed = printed.trim();
    assert_eq!(printed.len(), 6, "{printed}");
    assert!(printed.starts_with("0.") || printed == "1.0000");

    let doc = ReportDocument::from_json(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(doc.status, Status::Ok);
    assert_eq!(format_index(doc.index), printed);
    assert_eq!(doc.cells.len(), 49);
    assert_eq!(doc.cells.iter().sum::<u64>(), doc.total_edge_pixels);
    assert_eq!(doc.source.input.as_deref(), Some(s(&input)));
}

#[test]
fn analyze_csv_format() {
    let dir = tempfile::tempdir().unwrap();
    let input = particles_png(dir.path(), "img.png", 2);
    let report = dir.path().join("r.csv");
    let out = segregate(&[
        "analyze",
        "--input",
        s(&input),
        "--format",
        "csv",
        "--rows",
        "3",
        "--cols",
        "4",
        "--out",
        s(&report),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&report).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "rows,cols,index,total_edge_pixels,status,input");
    assert!(lines[1].starts_with("3,4,"));
    assert_eq!(lines.len(), 2);
}

#[test]
fn analyze_missing_file() {
    let out = segregate(&["analyze", "--input", "/definitely/not/here.png"]);
    assert_eq!(out.status.code(), Some(EXIT_IO));
    assert!(String::from_utf8_lossy(&out.stderr).contains("file not found"));
}

#[test]
fn analyze_blank_image_reports_no_edges() {
    let dir = tempfile::tempdir().unwrap();
    let input = blank_png(dir.path());
    let report = dir.path().join("r.json");
    let out = segregate(&["analyze", "--input", s(&input), "--out", s(&report)]);
    assert_eq!(out.status.code(), Some(EXIT_NO_EDGES));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "NA");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(json["index"].is_null());
    assert_eq!(json["status"], "no_edges");
}

#[test]
fn analyze_with_imported_edge_map() {
    let dir = tempfile::tempdir().unwrap();
    let input = blank_png(dir.path());
    let map = dir.path().join("edges.png");
    // strong responses only in the top-left quadrant
    GrayImage::from_fn(64, 64, |x, y| if x == 10 && y < 30 { 230 } else { 20 })
        .unwrap()
        .save_png(&map)
        .unwrap();
    let out = segregate(&[
        "analyze",
        "--input",
        s(&input),
        "--edge-map",
        s(&map),
        "--rows",
        "2",
        "--cols",
        "2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1.0000");

    let small = dir.path().join("small.png");
    GrayImage::filled(10, 10, 255)
        .unwrap()
        .save_png(&small)
        .unwrap();
    let out = segregate(&["analyze", "--input", s(&input), "--edge-map", s(&small)]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected 64x64"));
}

#[test]
fn analyze_rejects_bad_thresholds() {
    let dir = tempfile::tempdir().unwrap();
    let input = particles_png(dir.path(), "img.png", 3);
    let out = segregate(&[
        "analyze",
        "--input",
        s(&input),
        "--low",
        "0.5",
        "--high",
        "0.2",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
}

#[test]
fn sweep_csv_matches_in_process_table() {
    let dir = tempfile::tempdir().unwrap();
    let input = particles_png(dir.path(), "img.png", 4);
    let out = segregate(&[
        "sweep",
        "--input",
        s(&input),
        "--max-rows",
        "8",
        "--max-cols",
        "8",
    ]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("rows\\cols,1,2,3,4,5,6,7,8\n1,0.0000,"));

    let parsed = sweep_from_csv(&csv).unwrap();
    let img = load_image(&input).unwrap();
    let table = sweep(&img, 8, 8, &EdgeSource::default(), 0.5).unwrap();
    let render = |v: &[Option<f64>]| v.iter().map(|x| format_index(*x)).collect::<Vec<_>>();
    assert_eq!(render(parsed.values()), render(table.values()));
}

#[test]
fn sweep_blank_image_is_all_na() {
    let dir = tempfile::tempdir().unwrap();
    let input = blank_png(dir.path());
    let out = segregate(&[
        "sweep",
        "--input",
        s(&input),
        "--max-rows",
        "3",
        "--max-cols",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_NO_EDGES));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(csv, "rows\\cols,1,2\n1,NA,NA\n2,NA,NA\n3,NA,NA\n");
}

#[test]
fn synth_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.png"), dir.path().join("b.png"));
    for path in [&a, &b] {
        let out = segregate(&[
            "synth",
            "--layout",
            "uniform",
            "--count",
            "100",
            "--seed",
            "42",
            "--out",
            s(path),
        ]);
        assert!(out.status.success());
        let echo: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(echo["seed"], 42);
        assert_eq!(echo["layout"]["kind"], "uniform");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let expected = generate(&SynthSpec {
        seed: 42,
        layout: Layout::Uniform,
        ..Default::default()
    })
    .unwrap();
    assert_eq!(load_image(&a).unwrap(), expected);
}

#[test]
fn synth_clustered_and_invalid() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("c.png");
    let out = segregate(&[
        "synth",
        "--layout",
        "clustered",
        "--clusters",
        "1",
        "--spread",
        "10",
        "--count",
        "40",
        "--out",
        s(&out_path),
    ]);
    assert!(out.status.success());
    assert_eq!(load_image(&out_path).unwrap().width(), 512);

    let bad = dir.path().join("bad.png");
    let out = segregate(&["synth", "--rmin", "9", "--rmax", "3", "--out", s(&bad)]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    assert!(!bad.exists());
}

#[test]
fn batch_rows_are_lexicographic_and_failures_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let images = dir.path().join("images");
    std::fs::create_dir(&images).unwrap();
    particles_png(&images, "c.png", 5);
    particles_png(&images, "a.png", 6);
    std::fs::write(images.join("b.png"), b"\x89PNG\r\n\x1a\nnot really").unwrap();
    std::fs::write(images.join("notes.txt"), b"ignored").unwrap();

    let out = segregate(&["batch", "--input", s(&images)]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "path,rows,cols,index,total_edge_pixels,status,detail"
    );
    assert_eq!(lines.len(), 4);
    assert!(lines[1].contains("a.png") && lines[1].contains(",ok,"));
    assert!(lines[2].contains("b.png") && lines[2].contains(",NA,,error,"));
    assert!(lines[3].contains("c.png") && lines[3].contains(",ok,"));

    let report = dir.path().join("batch.csv");
    let out = segregate(&[
        "batch",
        "--input",
        s(&images),
        "--parallel",
        "--out",
        s(&report),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&report).unwrap(), csv);
}

#[test]
fn batch_empty_or_missing_directory_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = segregate(&["batch", "--input", s(dir.path())]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID));
    let out = segregate(&["batch", "--input", s(&dir.path().join("missing"))]);
    assert_eq!(out.status.code(), Some(EXIT_IO));
}
