//! Delaunay triangulation, circumspheres, Hausdorff distance and
//! epsilon-perturbations of point clouds.

mod circumsphere;
mod delaunay;
pub(crate) mod perturb;
pub(crate) mod predicates;

pub use circumsphere::{circumsphere, Circumsphere};
pub use delaunay::{delaunay, DelaunayComplex};
pub use perturb::{epsilon_perturb, hausdorff_distance, same_triangulation, PerturbationPairing};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("need at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("all points lie on a common hyperplane")]
    AffinelyDegenerateInput,
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("epsilon {epsilon} must be below half the minimum pairwise distance ({bound})")]
    EpsilonTooLarge { epsilon: f64, bound: f64 },
    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),
    #[error("invalid perturbation pairing: {0}")]
    InvalidPairing(String),
}
