//! Filtrations and the three builders: Vietoris-Rips, Delaunay-Rips and Alpha.
//!
//! All builders report scales as distances: a simplex enters the
//! Vietoris-Rips and Delaunay-Rips complexes at the largest distance between
//! two of its vertices, and enters the Alpha complex at twice its alpha
//! radius. Vertices enter at 0.

mod alpha;
mod delaunay_rips;
mod rips;

pub use alpha::{alpha_from_delaunay, build_alpha};
pub use delaunay_rips::{build_delaunay_rips, delaunay_rips_from_delaunay};
pub use rips::{build_rips, build_rips_with_budget, rips_simplex_count};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::cloud::PointCloud;
use crate::geometry::GeometryError;
use crate::simplex::Simplex;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FiltrationError {
    #[error("face {face} of {simplex} is missing")]
    MissingFace { simplex: Simplex, face: Simplex },
    #[error("face {face} of {simplex} enters later than its coface")]
    NonMonotone { simplex: Simplex, face: Simplex },
    #[error("simplex {0} is listed twice")]
    DuplicateSimplex(Simplex),
    #[error("simplex {simplex} has invalid scale {scale}")]
    InvalidScale { simplex: Simplex, scale: f64 },
    #[error("simplex {simplex} exceeds the dimension cap {max_dim}")]
    DimensionAboveCap { simplex: Simplex, max_dim: usize },
    #[error("invalid filtration spec: {0}")]
    InvalidSpec(String),
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationEntry {
    pub simplex: Simplex,
    pub scale: f64,
}

impl FiltrationEntry {
    pub fn new(simplex: Simplex, scale: f64) -> Self {
        Self { simplex, scale }
    }
}

/// Canonical filtration order: scale, then dimension, then vertex list.
pub fn entry_order(a: &FiltrationEntry, b: &FiltrationEntry) -> Ordering {
    a.scale
        .total_cmp(&b.scale)
        .then(a.simplex.dim().cmp(&b.simplex.dim()))
        .then_with(|| a.simplex.cmp(&b.simplex))
}

/// A simplicial complex with a monotone scale per simplex.
///
/// `max_dim` is the largest simplex dimension the builder was allowed to
/// produce; simplices of that dimension kill cycles but their own homology
/// is not reported.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    entries: Vec<FiltrationEntry>,
    max_dim: usize,
}

impl Filtration {
    /// Wraps entries in any order; use [`sort_filtration`] to validate and sort.
    pub fn new(entries: Vec<FiltrationEntry>, max_dim: usize) -> Self {
        Self { entries, max_dim }
    }

    /// Entries a builder produced closed and monotone by construction.
    pub(crate) fn sorted_unchecked(mut entries: Vec<FiltrationEntry>, max_dim: usize) -> Self {
        entries.sort_unstable_by(entry_order);
        Self { entries, max_dim }
    }

    pub fn entries(&self) -> &[FiltrationEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<FiltrationEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Number of homology dimensions a reduction of this filtration reports.
    pub fn num_hom_dims(&self) -> usize {
        self.max_dim.max(1)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.entries.iter().map(|e| &e.simplex)
    }

    /// Simplex counts indexed by dimension.
    pub fn count_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim + 1];
        for e in &self.entries {
            let d = e.simplex.dim();
            if d >= counts.len() {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    pub fn is_sorted(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| entry_order(&w[0], &w[1]) == Ordering::Less)
    }

    /// Checks closure, monotonicity, uniqueness, scale validity and the
    /// dimension cap.
    pub fn validate(&self) -> Result<(), FiltrationError> {
        let mut scales: HashMap<&Simplex, f64> = HashMap::with_capacity(self.entries.len());
        for e in &self.entries {
            if !(e.scale.is_finite() && e.scale >= 0.0) {
                return Err(FiltrationError::InvalidScale {
                    simplex: e.simplex.clone(),
                    scale: e.scale,
                });
            }
            if e.simplex.dim() > self.max_dim {
                return Err(FiltrationError::DimensionAboveCap {
                    simplex: e.simplex.clone(),
                    max_dim: self.max_dim,
                });
            }
            if scales.insert(&e.simplex, e.scale).is_some() {
                return Err(FiltrationError::DuplicateSimplex(e.simplex.clone()));
            }
        }
        for e in &self.entries {
            for face in e.simplex.facets() {
                match scales.get(&face) {
                    None => {
                        return Err(FiltrationError::MissingFace {
                            simplex: e.simplex.clone(),
                            face,
                        })
                    }
                    Some(&s) if s > e.scale => {
                        return Err(FiltrationError::NonMonotone {
                            simplex: e.simplex.clone(),
                            face,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }
}

/// Validates `filt` and sorts it by (scale, dimension, vertex list).
///
/// Faces always precede cofaces in the result: monotonicity puts them at an
/// equal or smaller scale, and ties are broken by dimension.
pub fn sort_filtration(filt: Filtration) -> Result<Filtration, FiltrationError> {
    filt.validate()?;
    let Filtration { mut entries, max_dim } = filt;
    entries.sort_by(entry_order);
    Ok(Filtration { entries, max_dim })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Rips,
    DelaunayRips,
    Alpha,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Rips, Method::DelaunayRips, Method::Alpha];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Rips => "rips",
            Method::DelaunayRips => "dr",
            Method::Alpha => "alpha",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rips" | "vr" | "vietoris_rips" => Ok(Method::Rips),
            "dr" | "delaunay_rips" | "del_rips" => Ok(Method::DelaunayRips),
            "alpha" => Ok(Method::Alpha),
            other => Err(format!("unknown method `{other}` (expected rips, dr or alpha)")),
        }
    }
}

/// What to build: the method, the top homology dimension and, for Rips
/// only, an optional scale cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiltrationSpec {
    pub method: Method,
    /// Simplices up to dimension `max_hom_dim + 1` are built.
    pub max_hom_dim: usize,
    pub threshold: Option<f64>,
}

impl FiltrationSpec {
    pub fn new(method: Method, max_hom_dim: usize) -> Self {
        Self {
            method,
            max_hom_dim,
            threshold: None,
        }
    }

    pub fn with_threshold(mut self, threshold: f64) -> Self {
        self.threshold = Some(threshold);
        self
    }

    /// Largest simplex dimension built.
    pub fn max_simplex_dim(&self) -> usize {
        self.max_hom_dim + 1
    }

    pub fn validate(&self, ambient_dim: usize) -> Result<(), FiltrationError> {
        if let Some(t) = self.threshold {
            if self.method != Method::Rips {
                return Err(FiltrationError::InvalidSpec(
                    "a threshold applies to the rips method only".into(),
                ));
            }
            if t.is_nan() || t < 0.0 {
                return Err(FiltrationError::InvalidSpec(format!(
                    "threshold must be non-negative, got {t}"
                )));
            }
        }
        if self.method != Method::Rips && self.max_simplex_dim() > ambient_dim {
            return Err(FiltrationError::InvalidSpec(format!(
                "{} in R^{ambient_dim} supports max_hom_dim up to {}, got {}",
                self.method,
                ambient_dim - 1,
                self.max_hom_dim
            )));
        }
        Ok(())
    }
}

/// Builds the filtration described by `spec`.
pub fn build(cloud: &PointCloud, spec: &FiltrationSpec) -> Result<Filtration, FiltrationError> {
    build_with_budget(cloud, spec, &Budget::unlimited())
}

/// As [`build`], aborting when `budget` runs out.
pub fn build_with_budget(
    cloud: &PointCloud,
    spec: &FiltrationSpec,
    budget: &Budget,
) -> Result<Filtration, FiltrationError> {
    match spec.method {
        Method::Rips => build_rips_with_budget(cloud, spec, budget),
        Method::DelaunayRips => build_delaunay_rips(cloud, spec),
        Method::Alpha => build_alpha(cloud, spec),
    }
}
