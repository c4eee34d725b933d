//! Decoding PNG/JPEG files into single-channel 8-bit luminance.

use std::path::Path;

use image::{DynamicImage, ImageError, ImageFormat, ImageReader};

use crate::{Error, Result};

/// Row-major 8-bit luminance image with non-zero dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage);
        }
        if data.len() != width * height {
            return Err(Error::BufferSize {
                expected: width * height,
                actual: data.len(),
            });
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    /// An image filled with `value`.
    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.width + x]
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        save_gray_png(path.as_ref(), self.width, self.height, &self.data)
    }
}

/// Rec. 601 luma, rounded to the nearest integer.
pub fn to_grayscale(r: u8, g: u8, b: u8) -> u8 {
    let luma = 0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b);
    luma.round().clamp(0.0, 255.0) as u8
}

/// Loads a PNG or JPEG file as grayscale. Alpha is dropped, not composited.
pub fn load_image(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let decoded = decode(path)?;
    let (width, height) = (decoded.width() as usize, decoded.height() as usize);
    let data = match decoded {
        DynamicImage::ImageLuma8(buf) => buf.into_raw(),
        DynamicImage::ImageLumaA8(buf) => buf.pixels().map(|p| p.0[0]).collect(),
        DynamicImage::ImageLuma16(_) | DynamicImage::ImageLumaA16(_) => {
            decoded.to_luma8().into_raw()
        }
        other => other
            .to_rgb8()
            .pixels()
            .map(|p| to_grayscale(p.0[0], p.0[1], p.0[2]))
            .collect(),
    };
    GrayImage::new(width, height, data).map_err(|e| Error::CorruptImage {
        path: path.to_owned(),
        reason: e.to_string(),
    })
}

pub(crate) fn decode(path: &Path) -> Result<DynamicImage> {
    let reader = ImageReader::open(path)
        .map_err(|e| io_error(path, e))?
        .with_guessed_format()
        .map_err(|e| io_error(path, e))?;
    match reader.format() {
        Some(ImageFormat::Png | ImageFormat::Jpeg) => {}
        Some(other) => {
            return Err(Error::UnsupportedFormat {
                path: path.to_owned(),
                reason: format!("{other:?} is not PNG or JPEG"),
            })
        }
        None => {
            return Err(Error::UnsupportedFormat {
                path: path.to_owned(),
                reason: "unrecognized file signature".into(),
            })
        }
    }
    reader.decode().map_err(|e| match e {
        ImageError::Unsupported(u) => Error::UnsupportedFormat {
            path: path.to_owned(),
            reason: u.to_string(),
        },
        ImageError::IoError(io) => io_error(path, io),
        other => Error::CorruptImage {
            path: path.to_owned(),
            reason: other.to_string(),
        },
    })
}

pub(crate) fn save_gray_png(path: &Path, width: usize, height: usize, data: &[u8]) -> Result<()> {
    image::save_buffer_with_format(
        path,
        data,
        width as u32,
        height as u32,
        image::ExtendedColorType::L8,
        ImageFormat::Png,
    )
    .map_err(|e| match e {
        ImageError::IoError(io) => io_error(path, io),
        other => Error::Io {
            path: path.to_owned(),
            source: std::io::Error::other(other.to_string()),
        },
    })
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::NotFound {
        Error::FileNotFound {
            path: path.to_owned(),
        }
    } else {
        Error::Io {
            path: path.to_owned(),
            source: e,
        }
    }
}
