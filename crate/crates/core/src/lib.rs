//! Persistent homology of Euclidean point clouds with Delaunay-Rips,
//! Vietoris-Rips and Alpha filtrations.
//!
//! The pipeline is
//!
//! 1. a [`PointCloud`] in R^2 or R^3,
//! 2. a [`Filtration`] from one of the builders in [`filtration`],
//! 3. a Z/2 boundary matrix reduced in [`persistence`] into a
//!    [`PersistenceDiagram`],
//! 4. optionally compared with [`metrics::bottleneck`] or turned into feature
//!    vectors by [`vectorize`].
//!
//! ```
//! use delrips::{filtration::{build, FiltrationSpec, Method}, persistence::diagram, PointCloud};
//!
//! let h = 3f64.sqrt() / 2.0;
//! let cloud = PointCloud::from_points2(&[[-1.0, 0.0], [0.5, h], [0.5, -h], [0.9, 0.0]]).unwrap();
//! let filt = build(&cloud, &FiltrationSpec::new(Method::DelaunayRips, 1)).unwrap();
//! let dgm = diagram(&filt).unwrap();
//! let loops: Vec<_> = dgm.dim(1).iter().filter(|p| p.persistence() > 0.0).collect();
//! assert_eq!(loops.len(), 1);
//! assert!((loops[0].birth - 3f64.sqrt()).abs() < 1e-12);
//! ```

pub mod bench;
pub mod budget;
pub mod cli;
pub mod cloud;
pub mod datagen;
pub mod diagram;
pub mod filtration;
pub mod geometry;
pub mod instability;
pub mod io;
pub mod metrics;
pub mod persistence;
pub mod simplex;
pub mod vectorize;

pub use cloud::PointCloud;
pub use diagram::{PersistenceDiagram, PersistencePair};
pub use filtration::{sort_filtration, Filtration, FiltrationEntry};
pub use simplex::Simplex;
