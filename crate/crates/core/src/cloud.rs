//! Point clouds in two or three dimensions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CloudError {
    #[error("ambient dimension must be 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("point {index} has {found} coordinates, expected {expected}")]
    RaggedPoint {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
}

/// An ordered list of points in R^2 or R^3.
///
/// The position of a point in the cloud is its identity: simplices, diagrams
/// and perturbation pairings all refer to points by index.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
}

impl PointCloud {
    /// Builds a cloud from row-major coordinates.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self, CloudError> {
        if !(2..=3).contains(&dim) {
            return Err(CloudError::UnsupportedDimension(dim));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(CloudError::RaggedPoint {
                index: coords.len() / dim,
                expected: dim,
                found: coords.len() % dim,
            });
        }
        if let Some(pos) = coords.iter().position(|c| !c.is_finite()) {
            return Err(CloudError::NonFinite { index: pos / dim });
        }
        Ok(Self { dim, coords })
    }

    /// Builds a cloud from a list of points; the dimension is taken from the
    /// first point (or `dim_hint` when the list is empty).
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R], dim_hint: usize) -> Result<Self, CloudError> {
        let dim = rows.first().map_or(dim_hint, |r| r.as_ref().len());
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (index, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(CloudError::RaggedPoint {
                    index,
                    expected: dim,
                    found: row.len(),
                });
            }
            coords.extend_from_slice(row);
        }
        Self::from_flat(dim, coords)
    }

    pub fn from_points2(points: &[[f64; 2]]) -> Result<Self, CloudError> {
        Self::from_flat(2, points.iter().flatten().copied().collect())
    }

    pub fn from_points3(points: &[[f64; 3]]) -> Result<Self, CloudError> {
        Self::from_flat(3, points.iter().flatten().copied().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean distance between points `i` and `j`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(self.point(i), self.point(j))
    }

    /// Largest pairwise distance, 0 for fewer than two points.
    pub fn diameter(&self) -> f64 {
        let n = self.len();
        let mut best = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                best = best.max(self.distance(i, j));
            }
        }
        best
    }

    /// Smallest pairwise distance, `inf` for fewer than two points.
    pub fn min_pairwise_distance(&self) -> f64 {
        let n = self.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                best = best.min(self.distance(i, j));
            }
        }
        best
    }
}

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            PointCloud::from_flat(4, vec![0.0; 4]),
            Err(CloudError::UnsupportedDimension(4))
        );
        assert!(matches!(
            PointCloud::from_rows(&[vec![0.0, 1.0], vec![2.0]], 2),
            Err(CloudError::RaggedPoint { index: 1, .. })
        ));
        assert_eq!(
            PointCloud::from_flat(2, vec![0.0, 1.0, f64::NAN, 0.0]),
            Err(CloudError::NonFinite { index: 1 })
        );
    }

    #[test]
    fn distances() {
        let c = PointCloud::from_points2(&[[0.0, 0.0], [3.0, 4.0], [1.0, 0.0]]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.distance(0, 1), 5.0);
        assert_eq!(c.diameter(), 5.0);
        assert_eq!(c.min_pairwise_distance(), 1.0);
    }
}
