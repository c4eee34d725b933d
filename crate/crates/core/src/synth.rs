//! Seeded synthetic particle images with a known spatial layout.
//!
//! The random stream is ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! and draws happen in a fixed order, so a spec always renders the same
//! pixels on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::{Error, GrayImage, Result};

/// Minimum luminance difference between particles and background.
pub const MIN_CONTRAST: u8 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Layout {
    /// Centers i.i.d. uniform over the image, radii uniform in `[radius_min, radius_max]`.
    Uniform,
    /// Centers Gaussian around `clusters` anchors; `spread` is the standard deviation.
    Clustered { clusters: usize, spread: f64 },
    /// Two species: small disks (`radius_min`) in the left half, large
    /// (`radius_max`) in the right. `species_fraction` is the share of small ones.
    Separated { species_fraction: f64 },
    /// The same two species with centers uniform over the whole image.
    Mixed { species_fraction: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub width: usize,
    pub height: usize,
    pub particle_count: usize,
    pub radius_min: u32,
    pub radius_max: u32,
    pub layout: Layout,
    pub seed: u64,
    pub background_level: u8,
    pub particle_level: u8,
}

impl Default for SynthSpec {
    fn default() -> Self {
        Self {
            width: 512,
            height: 512,
            particle_count: 100,
            radius_min: 6,
            radius_max: 12,
            layout: Layout::Uniform,
            seed: 0,
            background_level: 40,
            particle_level: 200,
        }
    }
}

/// A filled disk, center in pixel coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Particle {
    pub x: f64,
    pub y: f64,
    pub radius: u32,
}

impl SynthSpec {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        if self.width == 0 || self.height == 0 {
            return invalid(format!(
                "image must be non-empty, got {}x{}",
                self.width, self.height
            ));
        }
        if self.particle_count == 0 {
            return invalid("particle_count must be >= 1".into());
        }
        if self.radius_min == 0 {
            return invalid("radius_min must be >= 1".into());
        }
        if self.radius_min > self.radius_max {
            return invalid(format!(
                "radius_min ({}) exceeds radius_max ({})",
                self.radius_min, self.radius_max
            ));
        }
        if 2 * self.radius_max as usize >= self.width.min(self.height) {
            return invalid(format!(
                "particles of radius {} do not fit a {}x{} image",
                self.radius_max, self.width, self.height
            ));
        }
        if self.background_level.abs_diff(self.particle_level) < MIN_CONTRAST {
            return invalid(format!(
                "contrast between background ({}) and particles ({}) is below {MIN_CONTRAST}",
                self.background_level, self.particle_level
            ));
        }
        match self.layout {
            Layout::Uniform => {}
            Layout::Clustered { clusters, spread } => {
                if clusters == 0 {
                    return invalid("cluster count must be >= 1".into());
                }
                if !(spread > 0.0 && spread.is_finite()) {
                    return invalid(format!("cluster spread must be > 0, got {spread}"));
                }
            }
            Layout::Separated { species_fraction } | Layout::Mixed { species_fraction } => {
                if !(species_fraction > 0.0 && species_fraction < 1.0) {
                    return invalid(format!(
                        "species fraction must be in (0, 1), got {species_fraction}"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Draws the particle list for `spec`, in drawing order.
pub fn particles(spec: &SynthSpec) -> Result<Vec<Particle>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (w, h) = (spec.width as f64, spec.height as f64);
    let mut out = Vec::with_capacity(spec.particle_count);

    match spec.layout {
        Layout::Uniform => {
            for _ in 0..spec.particle_count {
                let radius = rng.random_range(spec.radius_min..=spec.radius_max);
                let x = rng.random_range(0.0..w);
                let y = rng.random_range(0.0..h);
                out.push(Particle { x, y, radius });
            }
        }
        Layout::Clustered { clusters, spread } => {
            let margin = f64::from(spec.radius_max);
            let anchors: Vec<(f64, f64)> = (0..clusters)
                .map(|_| {
                    (
                        rng.random_range(margin..w - margin),
                        rng.random_range(margin..h - margin),
                    )
                })
                .collect();
            let normal = Normal::new(0.0, spread).expect("spread validated");
            for _ in 0..spec.particle_count {
                let (ax, ay) = anchors[rng.random_range(0..clusters)];
                let radius = rng.random_range(spec.radius_min..=spec.radius_max);
                let (x, y) = loop {
                    let x = ax + normal.sample(&mut rng);
                    let y = ay + normal.sample(&mut rng);
                    if (0.0..w).contains(&x) && (0.0..h).contains(&y) {
                        break (x, y);
                    }
                };
                out.push(Particle { x, y, radius });
            }
        }
        Layout::Separated { species_fraction } | Layout::Mixed { species_fraction } => {
            let separated = matches!(spec.layout, Layout::Separated { .. });
            let small = ((spec.particle_count as f64 * species_fraction).round() as usize)
                .min(spec.particle_count);
            for i in 0..spec.particle_count {
                let is_small = i < small;
                let radius = if is_small {
                    spec.radius_min
                } else {
                    spec.radius_max
                };
                let x_range = match (separated, is_small) {
                    (false, _) => 0.0..w,
                    (true, true) => 0.0..w / 2.0,
                    (true, false) => w / 2.0..w,
                };
                let x = rng.random_range(x_range);
                let y = rng.random_range(0.0..h);
                out.push(Particle { x, y, radius });
            }
        }
    }
    Ok(out)
}

/// Renders the spec's particles as filled disks, later disks over earlier.
pub fn generate(spec: &SynthSpec) -> Result<GrayImage> {
    let disks = particles(spec)?;
    let (w, h) = (spec.width, spec.height);
    let mut data = vec![spec.background_level; w * h];
    for p in &disks {
        let r = f64::from(p.radius);
        let y0 = (p.y - r).floor().max(0.0) as usize;
        let y1 = ((p.y + r).ceil() as usize).min(h - 1);
        let x0 = (p.x - r).floor().max(0.0) as usize;
        let x1 = ((p.x + r).ceil() as usize).min(w - 1);
        for py in y0..=y1 {
            let dy = py as f64 + 0.5 - p.y;
            for px in x0..=x1 {
                let dx = px as f64 + 0.5 - p.x;
                if dx * dx + dy * dy <= r * r {
                    data[py * w + px] = spec.particle_level;
                }
            }
        }
    }
    GrayImage::new(w, h, data)
}
