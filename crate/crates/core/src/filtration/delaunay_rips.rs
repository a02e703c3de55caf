use super::{Filtration, FiltrationEntry, FiltrationError, FiltrationSpec, Method};
use crate::cloud::PointCloud;
use crate::geometry::{delaunay, DelaunayComplex};

/// Delaunay-Rips filtration: the faces of the Delaunay triangulation up to
/// dimension `max_hom_dim + 1`, each entering at the largest distance
/// between two of its vertices.
pub fn build_delaunay_rips(
    cloud: &PointCloud,
    spec: &FiltrationSpec,
) -> Result<Filtration, FiltrationError> {
    debug_assert_eq!(spec.method, Method::DelaunayRips);
    spec.validate(cloud.dim())?;
    let dc = delaunay(cloud)?;
    Ok(delaunay_rips_from_delaunay(&dc, spec.max_simplex_dim()))
}

/// Delaunay-Rips scales on an existing triangulation, keeping simplices up
/// to dimension `max_simplex_dim`.
pub fn delaunay_rips_from_delaunay(dc: &DelaunayComplex, max_simplex_dim: usize) -> Filtration {
    let cloud = dc.cloud();
    let entries = dc
        .all_simplices()
        .iter()
        .filter(|s| s.dim() <= max_simplex_dim)
        .map(|s| {
            let v = s.vertices();
            let mut scale = 0.0f64;
            for (i, &a) in v.iter().enumerate() {
                for &b in &v[i + 1..] {
                    scale = scale.max(cloud.distance(a, b));
                }
            }
            FiltrationEntry::new(s.clone(), scale)
        })
        .collect();
    Filtration::sorted_unchecked(entries, max_simplex_dim)
}
