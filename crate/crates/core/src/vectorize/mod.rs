//! Feature vectors from persistence diagrams, and delay embedding of time
//! series into point clouds.

mod embed;
mod image;
mod stats;

pub use embed::delay_embed;
pub use image::{fit_pi_grid, persistence_image, PIGrid};
pub use stats::{
    persistence_stats, persistence_stats_with, persistent_entropy, stats_feature_names,
    stats_feature_vector, stats_feature_vector_with, EntropyLog, StatsVector, STATS_PER_DIM,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VectorizeError {
    #[error("no finite persistence pairs in any diagram")]
    AllEmpty,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("series of length {len} is too short for embedding dimension {dim} and delay {tau}")]
    SeriesTooShort { len: usize, dim: usize, tau: usize },
    #[error("invalid embedding parameters: {0}")]
    InvalidEmbedding(String),
}
