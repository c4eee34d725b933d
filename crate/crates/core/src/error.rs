use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: file not found", path.display())]
    FileNotFound { path: PathBuf },

    #[error("{}: unsupported format: {reason}", path.display())]
    UnsupportedFormat { path: PathBuf, reason: String },

    #[error("{}: corrupt image: {reason}", path.display())]
    CorruptImage { path: PathBuf, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image has zero width or height")]
    EmptyImage,

    #[error("pixel buffer holds {actual} values, expected {expected}")]
    BufferSize { expected: usize, actual: usize },

    #[error(
        "edge map is {}x{}, expected {}x{}",
        actual.0, actual.1, expected.0, expected.1
    )]
    DimensionMismatch {
        expected: (usize, usize),
        actual: (usize, usize),
    },

    #[error("grid {rows}x{cols} is finer than the {width}x{height} image")]
    GridTooFine {
        rows: usize,
        cols: usize,
        width: usize,
        height: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),

    /// The thinned edge map has no foreground pixels, so the index is undefined.
    #[error("no edges detected; segregation index is undefined")]
    NoEdges,
}

impl Error {
    /// Whether this error came from reading or decoding a file.
    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::FileNotFound { .. }
                | Error::UnsupportedFormat { .. }
                | Error::CorruptImage { .. }
                | Error::Io { .. }
        )
    }
}
