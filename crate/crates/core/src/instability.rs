//! The four-point configuration whose Delaunay-Rips diagram jumps when an
//! edge flip happens.
//!
//! Points `a = (-1, 0)`, `b = (1/2, √3/2)`, `c = (1/2, -√3/2)` sit on the unit
//! circle and `d = (1 - x, 0)` moves along the axis. For `0 < x < 2 - √3` the
//! triangulation is `{abd, acd}` and H1 has the pair `(√3, 2 - x)`; for
//! `x < 0` it flips to `{abc, bcd}` and every H1 pair has zero persistence.
//! The bottleneck distance across `x = 0` therefore stays bounded away from
//! zero however small `|x|` is.

use thiserror::Error;

use crate::cloud::PointCloud;
use crate::diagram::PersistenceDiagram;
use crate::filtration::{delaunay_rips_from_delaunay, Filtration, FiltrationError};
use crate::geometry::{delaunay, GeometryError};
use crate::metrics::{bottleneck, DiagonalCost, MetricsError};
use crate::persistence::{diagram, PersistenceError};
use crate::simplex::Simplex;

pub const DEFAULT_OFFSETS: [f64; 5] = [-0.05, 0.01, 0.05, 0.1, 0.2];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InstabilityError {
    #[error("offset x = {0} must be finite and below 2 - sqrt(3)")]
    OffsetOutOfRange(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error(transparent)]
    Persistence(#[from] PersistenceError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// Largest offset for which `d` stays strictly closer to `a` than `√3`.
pub fn max_offset() -> f64 {
    2.0 - 3f64.sqrt()
}

/// The four points `a, b, c, d` in that index order.
pub fn four_point_cloud(x: f64) -> Result<PointCloud, InstabilityError> {
    if !(x.is_finite() && x < max_offset()) {
        return Err(InstabilityError::OffsetOutOfRange(x));
    }
    let h = 3f64.sqrt() / 2.0;
    Ok(PointCloud::from_points2(&[[-1.0, 0.0], [0.5, h], [0.5, -h], [1.0 - x, 0.0]])
        .expect("finite points"))
}

/// Delaunay-Rips filtration of the four points, up to triangles.
pub fn four_point_filtration(x: f64) -> Result<Filtration, InstabilityError> {
    let dc = delaunay(&four_point_cloud(x)?)?;
    Ok(delaunay_rips_from_delaunay(&dc, 2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OffsetResult {
    pub x: f64,
    pub triangles: Vec<Simplex>,
    /// d lies on the circle through a, b, c (only at x = 0).
    pub degenerate: bool,
    /// H0 and H1, zero-persistence pairs included.
    pub diagram: PersistenceDiagram,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub from: f64,
    pub to: f64,
    pub same_triangulation: bool,
    pub bottleneck_h0: f64,
    pub bottleneck_h1: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstabilityReport {
    pub diagonal: DiagonalCost,
    pub offsets: Vec<OffsetResult>,
    /// Between consecutive offsets in the order given.
    pub transitions: Vec<Transition>,
}

pub fn demo_instability(
    offsets: &[f64],
    diagonal: DiagonalCost,
) -> Result<InstabilityReport, InstabilityError> {
    let mut results = Vec::with_capacity(offsets.len());
    let mut complexes = Vec::with_capacity(offsets.len());
    for &x in offsets {
        let dc = delaunay(&four_point_cloud(x)?)?;
        let dgm = diagram(&delaunay_rips_from_delaunay(&dc, 2))?;
        results.push(OffsetResult {
            x,
            triangles: dc.top_simplices().to_vec(),
            degenerate: dc.is_degenerate(),
            diagram: dgm,
        });
        complexes.push(dc);
    }
    let mut transitions = Vec::new();
    for k in 1..results.len() {
        let (a, b) = (&results[k - 1], &results[k]);
        transitions.push(Transition {
            from: a.x,
            to: b.x,
            same_triangulation: complexes[k - 1].all_simplices() == complexes[k].all_simplices(),
            bottleneck_h0: bottleneck(a.diagram.dim(0), b.diagram.dim(0), diagonal)?.0,
            bottleneck_h1: bottleneck(a.diagram.dim(1), b.diagram.dim(1), diagonal)?.0,
        });
    }
    Ok(InstabilityReport {
        diagonal,
        offsets: results,
        transitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_offsets_past_the_bound() {
        assert!(four_point_cloud(0.27).is_err());
        assert!(four_point_cloud(f64::NAN).is_err());
        assert!(four_point_cloud(0.26).is_ok());
    }

    #[test]
    fn flip_across_zero() {
        let r = demo_instability(&[-0.01, 0.01], DiagonalCost::Full).unwrap();
        let t = &r.transitions[0];
        assert!(!t.same_triangulation);
        assert!((t.bottleneck_h1 - (1.99 - 3f64.sqrt())).abs() < 1e-9);
        assert_eq!(r.offsets[0].triangles, vec![Simplex::new(vec![0, 1, 2]).unwrap(), Simplex::new(vec![1, 2, 3]).unwrap()]);
    }

    #[test]
    fn same_side_moves_continuously() {
        let r = demo_instability(&[0.01, 0.02], DiagonalCost::Half).unwrap();
        let t = &r.transitions[0];
        assert!(t.same_triangulation);
        assert!((t.bottleneck_h1 - 0.01).abs() < 1e-12);
    }
}
