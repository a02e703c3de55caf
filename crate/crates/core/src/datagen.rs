//! Synthetic point clouds in R^3 for the six shape classes, and bounded noise.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Normal, StandardNormal};
use thiserror::Error;

use crate::cloud::PointCloud;
use crate::geometry::perturb::displaced;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DatagenError {
    #[error("unknown shape '{0}' (expected circle, sphere, torus, random, three_clusters or nested_clusters)")]
    UnknownShape(String),
    #[error("sample size must be at least 1")]
    EmptySample,
    #[error("invalid shape parameter: {0}")]
    InvalidParameter(String),
    #[error("noise magnitude must be finite and non-negative, got {0}")]
    InvalidNoise(f64),
}

/// A shape to sample from. Every class lives in R^3; the circle lies in the
/// plane z = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShapeClass {
    Circle { radius: f64 },
    Sphere { radius: f64 },
    Torus { major: f64, minor: f64 },
    /// Uniform in the cube `[-half_width, half_width]^3`.
    Random { half_width: f64 },
    /// Gaussian blobs at the corners of an equilateral triangle.
    ThreeClusters { side: f64, sigma: f64 },
    /// Each of the three blobs is itself three smaller blobs.
    NestedClusters {
        side: f64,
        sub_side: f64,
        sigma: f64,
    },
}

impl ShapeClass {
    pub const NAMES: [&'static str; 6] = [
        "circle",
        "sphere",
        "torus",
        "random",
        "three_clusters",
        "nested_clusters",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ShapeClass::Circle { .. } => "circle",
            ShapeClass::Sphere { .. } => "sphere",
            ShapeClass::Torus { .. } => "torus",
            ShapeClass::Random { .. } => "random",
            ShapeClass::ThreeClusters { .. } => "three_clusters",
            ShapeClass::NestedClusters { .. } => "nested_clusters",
        }
    }

    fn validate(&self) -> Result<(), DatagenError> {
        let params: &[f64] = match self {
            ShapeClass::Circle { radius } | ShapeClass::Sphere { radius } => &[*radius],
            ShapeClass::Torus { major, minor } => {
                if minor >= major {
                    return Err(DatagenError::InvalidParameter(format!(
                        "torus needs minor < major radius, got {minor} >= {major}"
                    )));
                }
                &[*major, *minor]
            }
            ShapeClass::Random { half_width } => &[*half_width],
            ShapeClass::ThreeClusters { side, sigma } => &[*side, *sigma],
            ShapeClass::NestedClusters {
                side,
                sub_side,
                sigma,
            } => &[*side, *sub_side, *sigma],
        };
        match params.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            Some(v) => Err(DatagenError::InvalidParameter(format!(
                "{} parameters must be positive, got {v}",
                self.name()
            ))),
            None => Ok(()),
        }
    }
}

impl FromStr for ShapeClass {
    type Err = DatagenError;

    /// Parses a class name into its default parameters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "circle" => ShapeClass::Circle { radius: 1.0 },
            "sphere" => ShapeClass::Sphere { radius: 1.0 },
            "torus" => ShapeClass::Torus {
                major: 2.0,
                minor: 1.0,
            },
            "random" => ShapeClass::Random { half_width: 1.0 },
            "three_clusters" | "clusters" => ShapeClass::ThreeClusters {
                side: 2.0,
                sigma: 0.1,
            },
            "nested_clusters" | "nested" => ShapeClass::NestedClusters {
                side: 2.0,
                sub_side: 0.4,
                sigma: 0.03,
            },
            other => return Err(DatagenError::UnknownShape(other.to_string())),
        })
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `n` points from `shape`, reproducible from `seed`.
///
/// Cluster classes assign point `i` to blob `i % 3` (and, when nested, to
/// sub-blob `(i / 3) % 3`) so the class sizes differ by at most one.
pub fn sample_shape(shape: ShapeClass, n: usize, seed: u64) -> Result<PointCloud, DatagenError> {
    shape.validate()?;
    if n == 0 {
        return Err(DatagenError::EmptySample);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = Vec::with_capacity(3 * n);
    for i in 0..n {
        let p = match shape {
            ShapeClass::Circle { radius } => {
                let t = rng.random_range(0.0..TAU);
                [radius * t.cos(), radius * t.sin(), 0.0]
            }
            ShapeClass::Sphere { radius } => {
                let d = unit_vector(&mut rng);
                [radius * d[0], radius * d[1], radius * d[2]]
            }
            ShapeClass::Torus { major, minor } => torus_point(major, minor, &mut rng),
            ShapeClass::Random { half_width } => {
                std::array::from_fn(|_| rng.random_range(-half_width..=half_width))
            }
            ShapeClass::ThreeClusters { side, sigma } => {
                let c = triangle_corner(side, i % 3);
                blob(c, sigma, &mut rng)
            }
            ShapeClass::NestedClusters {
                side,
                sub_side,
                sigma,
            } => {
                let c = triangle_corner(side, i % 3);
                let o = triangle_corner(sub_side, (i / 3) % 3);
                blob([c[0] + o[0], c[1] + o[1], 0.0], sigma, &mut rng)
            }
        };
        coords.extend_from_slice(&p);
    }
    Ok(PointCloud::from_flat(3, coords).expect("sampled coordinates are finite"))
}

fn unit_vector<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 1e-12 {
            return v.map(|x| x / norm);
        }
    }
}

// The area element of the torus is proportional to major + minor cos(theta),
// so theta is accepted with that relative probability.
fn torus_point<R: Rng>(major: f64, minor: f64, rng: &mut R) -> [f64; 3] {
    let theta = loop {
        let t = rng.random_range(0.0..TAU);
        let u: f64 = rng.random();
        if u * (major + minor) <= major + minor * t.cos() {
            break t;
        }
    };
    let phi = rng.random_range(0.0..TAU);
    let ring = major + minor * theta.cos();
    [ring * phi.cos(), ring * phi.sin(), minor * theta.sin()]
}

/// Corner `k` of an equilateral triangle with the given side, centred on the
/// origin in the plane z = 0.
fn triangle_corner(side: f64, k: usize) -> [f64; 3] {
    let circumradius = side / 3f64.sqrt();
    let angle = PI / 2.0 + k as f64 * TAU / 3.0;
    [circumradius * angle.cos(), circumradius * angle.sin(), 0.0]
}

fn blob<R: Rng>(centre: [f64; 3], sigma: f64, rng: &mut R) -> [f64; 3] {
    let normal = Normal::new(0.0, sigma).expect("positive sigma");
    centre.map(|c| c + rng.sample(normal))
}

/// Displaces every point by an independent vector drawn uniformly from the
/// ball of radius `nu`.
pub fn add_noise(cloud: &PointCloud, nu: f64, seed: u64) -> Result<PointCloud, DatagenError> {
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(DatagenError::InvalidNoise(nu));
    }
    if nu == 0.0 {
        return Ok(cloud.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = cloud.dim();
    let mut coords = Vec::with_capacity(cloud.coords().len());
    for p in cloud.points() {
        coords.extend(displaced(p, nu, dim, &mut rng));
    }
    Ok(PointCloud::from_flat(dim, coords).expect("finite displacement"))
}
