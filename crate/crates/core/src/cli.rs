//! Command-line front end: `analyze`, `sweep`, `synth` and `batch`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::edge::import_edge_map;
use crate::image_io::load_image;
use crate::report::{format_index, sweep_to_csv, ReportDocument};
use crate::synth::generate;
use crate::{
    evaluate, sweep, DetectorParams, EdgeSource, Error, GridSpec, Layout, Provenance, Result,
    SynthSpec,
};

pub const EXIT_OK: i32 = 0;
/// Missing, unreadable or undecodable files.
pub const EXIT_IO: i32 = 1;
/// Reserved by clap for malformed command lines.
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_EDGES: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

const SAMPLING_NOTE: &str =
    "The index is most informative when the picture shows more than about 20 \
particles and fewer than about 300; with many more, edges spread evenly over any grid.";

#[derive(Debug, Parser)]
#[command(
    name = "segregate",
    version,
    about = "Quantify particle segregation in images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Segregation index of one image on one grid.
    #[command(after_help = SAMPLING_NOTE)]
    Analyze(AnalyzeArgs),
    /// Index table over every grid from 1x1 up to max-rows x max-cols.
    Sweep(SweepArgs),
    /// Render a synthetic particle image.
    Synth(SynthArgs),
    /// Analyze every PNG/JPEG in a directory.
    #[command(after_help = SAMPLING_NOTE)]
    Batch(BatchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct EdgeArgs {
    /// Gaussian smoothing sigma in pixels.
    #[arg(long, default_value_t = 1.4)]
    pub sigma: f64,
    /// Hysteresis low threshold, fraction of the largest gradient.
    #[arg(long, default_value_t = 0.1)]
    pub low: f64,
    /// Hysteresis high threshold, fraction of the largest gradient.
    #[arg(long, default_value_t = 0.3)]
    pub high: f64,
    /// Edge strength at or above which a pixel counts as edge.
    #[arg(long, default_value_t = 0.5)]
    pub threshold: f64,
}

impl EdgeArgs {
    fn detector(&self) -> DetectorParams {
        DetectorParams {
            sigma: self.sigma,
            low: self.low,
            high: self.high,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Report file; when omitted only the index is printed.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub rows: usize,
    #[arg(long, default_value_t = 7)]
    pub cols: usize,
    #[command(flatten)]
    pub edge: EdgeArgs,
    /// 8-bit PNG edge-probability map to use instead of the built-in detector.
    #[arg(long)]
    pub edge_map: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    pub max_rows: usize,
    #[arg(long, default_value_t = 8)]
    pub max_cols: usize,
    #[command(flatten)]
    pub edge: EdgeArgs,
    #[arg(long)]
    pub edge_map: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LayoutArg {
    Uniform,
    Clustered,
    Separated,
    Mixed,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum, default_value_t = LayoutArg::Uniform)]
    pub layout: LayoutArg,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub clusters: usize,
    /// Standard deviation of particle centers around a cluster anchor.
    #[arg(long, default_value_t = 15.0)]
    pub spread: f64,
    /// Share of small particles for the two-species layouts.
    #[arg(long, default_value_t = 0.5)]
    pub fraction: f64,
    #[arg(long, default_value_t = 6)]
    pub rmin: u32,
    #[arg(long, default_value_t = 12)]
    pub rmax: u32,
    #[arg(long, default_value_t = 512)]
    pub width: usize,
    #[arg(long, default_value_t = 512)]
    pub height: usize,
    #[arg(long, default_value_t = 40)]
    pub background: u8,
    #[arg(long, default_value_t = 200)]
    pub particle: u8,
    #[arg(long)]
    pub out: PathBuf,
}

impl SynthArgs {
    pub fn spec(&self) -> SynthSpec {
        let layout = match self.layout {
            LayoutArg::Uniform => Layout::Uniform,
            LayoutArg::Clustered => Layout::Clustered {
                clusters: self.clusters,
                spread: self.spread,
            },
            LayoutArg::Separated => Layout::Separated {
                species_fraction: self.fraction,
            },
            LayoutArg::Mixed => Layout::Mixed {
                species_fraction: self.fraction,
            },
        };
        SynthSpec {
            width: self.width,
            height: self.height,
            particle_count: self.count,
            radius_min: self.rmin,
            radius_max: self.rmax,
            layout,
            seed: self.seed,
            background_level: self.background,
            particle_level: self.particle,
        }
    }
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Directory of PNG/JPEG images.
    #[arg(long)]
    pub input: PathBuf,
    /// Aggregate CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 7)]
    pub rows: usize,
    #[arg(long, default_value_t = 7)]
    pub cols: usize,
    #[command(flatten)]
    pub edge: EdgeArgs,
    /// Analyze images concurrently; row order is unaffected.
    #[arg(long)]
    pub parallel: bool,
}

/// Runs a parsed command line, returning the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match cli.command {
        Command::Analyze(args) => analyze(&args, stdout),
        Command::Sweep(args) => run_sweep(&args, stdout),
        Command::Synth(args) => synth(&args, stdout),
        Command::Batch(args) => batch(&args, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoEdges => EXIT_NO_EDGES,
        e if e.is_io() => EXIT_IO,
        _ => EXIT_INVALID,
    }
}

fn edge_source(
    edge_map: Option<&Path>,
    edge: &EdgeArgs,
    width: usize,
    height: usize,
) -> Result<EdgeSource> {
    match edge_map {
        Some(path) => Ok(EdgeSource::Imported {
            map: import_edge_map(path, width, height)?,
            path: Some(path.to_owned()),
        }),
        None => {
            let params = edge.detector();
            params.validate()?;
            Ok(EdgeSource::Detector(params))
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

fn console(stdout: &mut dyn Write, text: std::fmt::Arguments) {
    // a closed pipe on stdout is not worth failing the run over
    let _ = stdout.write_fmt(text);
}

fn analyze_one(
    input: &Path,
    grid: GridSpec,
    source: &EdgeSource,
    threshold: f64,
) -> Result<ReportDocument> {
    let img = load_image(input)?;
    let mut provenance = Provenance::new(source, threshold);
    provenance.input = Some(input.display().to_string());
    match evaluate(&img, grid, source, threshold) {
        Ok(mut report) => {
            report.source = provenance;
            Ok(ReportDocument::from(&report))
        }
        Err(Error::NoEdges) => Ok(ReportDocument::no_edges(grid, provenance)),
        Err(e) => Err(e),
    }
}

fn analyze(args: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<i32> {
    let grid = GridSpec::new(args.rows, args.cols)?;
    let img = load_image(&args.input)?;
    let source = edge_source(
        args.edge_map.as_deref(),
        &args.edge,
        img.width(),
        img.height(),
    )?;
    let doc = analyze_one(&args.input, grid, &source, args.edge.threshold)?;
    if let Some(out) = &args.out {
        let body = match args.format {
            Format::Json => doc.to_json(),
            Format::Csv => doc.to_csv(),
        };
        write_file(out, &body)?;
    }
    console(stdout, format_args!("{}\n", format_index(doc.index)));
    Ok(if doc.index.is_some() {
        EXIT_OK
    } else {
        EXIT_NO_EDGES
    })
}

fn run_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let img = load_image(&args.input)?;
    let source = edge_source(
        args.edge_map.as_deref(),
        &args.edge,
        img.width(),
        img.height(),
    )?;
    let table = sweep(
        &img,
        args.max_rows,
        args.max_cols,
        &source,
        args.edge.threshold,
    )?;
    let csv = sweep_to_csv(&table);
    match &args.out {
        Some(out) => write_file(out, &csv)?,
        None => console(stdout, format_args!("{csv}")),
    }
    Ok(if table.values().iter().all(Option::is_none) {
        EXIT_NO_EDGES
    } else {
        EXIT_OK
    })
}

fn synth(args: &SynthArgs, stdout: &mut dyn Write) -> Result<i32> {
    let spec = args.spec();
    let img = generate(&spec)?;
    img.save_png(&args.out)?;
    let echo = serde_json::to_string(&spec).expect("spec serializes");
    console(stdout, format_args!("{echo}\n"));
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct BatchRow {
    path: String,
    rows: usize,
    cols: usize,
    index: String,
    total_edge_pixels: Option<u64>,
    status: &'static str,
    detail: String,
}

fn is_image(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| matches!(e.to_ascii_lowercase().as_str(), "png" | "jpg" | "jpeg"))
}

fn batch(args: &BatchArgs, stdout: &mut dyn Write) -> Result<i32> {
    let grid = GridSpec::new(args.rows, args.cols)?;
    let params = args.edge.detector();
    params.validate()?;
    let source = EdgeSource::Detector(params);
    let threshold = args.edge.threshold;

    let io_err = |source| Error::Io {
        path: args.input.clone(),
        source,
    };
    if !args.input.is_dir() {
        return Err(Error::FileNotFound {
            path: args.input.clone(),
        });
    }
    let mut files: Vec<PathBuf> = fs::read_dir(&args.input)
        .map_err(io_err)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<std::io::Result<_>>()
        .map_err(io_err)?;
    files.retain(|p| p.is_file() && is_image(p));
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    if files.is_empty() {
        return Err(Error::InvalidParams(format!(
            "no PNG or JPEG files in {}",
            args.input.display()
        )));
    }

    let row_for = |path: &PathBuf| {
        let (index, total, status, detail) = match analyze_one(path, grid, &source, threshold) {
            Ok(doc) if doc.index.is_some() => (
                format_index(doc.index),
                Some(doc.total_edge_pixels),
                "ok",
                String::new(),
            ),
            Ok(_) => ("NA".into(), Some(0), "no_edges", String::new()),
            Err(e) => ("NA".into(), None, "error", e.to_string()),
        };
        BatchRow {
            path: path.display().to_string(),
            rows: grid.rows,
            cols: grid.cols,
            index,
            total_edge_pixels: total,
            status,
            detail,
        }
    };
    let rows: Vec<BatchRow> = if args.parallel {
        files.par_iter().map(row_for).collect()
    } else {
        files.iter().map(row_for).collect()
    };

    let mut w = csv::Writer::from_writer(vec![]);
    for row in &rows {
        w.serialize(row).expect("in-memory csv write");
    }
    let csv =
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8");
    match &args.out {
        Some(out) => write_file(out, &csv)?,
        None => console(stdout, format_args!("{csv}")),
    }
    Ok(EXIT_OK)
}
