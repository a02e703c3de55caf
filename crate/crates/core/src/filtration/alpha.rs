use std::collections::HashMap;

use super::{Filtration, FiltrationEntry, FiltrationError, FiltrationSpec, Method};
use crate::cloud::PointCloud;
use crate::geometry::{circumsphere, delaunay, DelaunayComplex};
use crate::simplex::Simplex;

/// Alpha filtration on the Delaunay triangulation, with scales reported as
/// twice the alpha radius so they share an axis with the Rips builders.
pub fn build_alpha(cloud: &PointCloud, spec: &FiltrationSpec) -> Result<Filtration, FiltrationError> {
    debug_assert_eq!(spec.method, Method::Alpha);
    spec.validate(cloud.dim())?;
    let dc = delaunay(cloud)?;
    alpha_from_delaunay(&dc, spec.max_simplex_dim())
}

/// Alpha values for every face of `dc`.
///
/// A face whose smallest circumsphere contains no opposite vertex of a
/// coface (a Gabriel face) gets that sphere's radius. Any other face gets
/// the smallest value among its cofaces. Values are then clamped to the
/// coface minimum so the result is monotone in floating point as well.
pub fn alpha_from_delaunay(
    dc: &DelaunayComplex,
    max_simplex_dim: usize,
) -> Result<Filtration, FiltrationError> {
    let cloud = dc.cloud();
    let top_dim = cloud.dim();
    let mut radius: HashMap<Simplex, f64> = HashMap::with_capacity(dc.all_simplices().len());

    for cell in dc.top_simplices() {
        let sphere = circumsphere(&points_of(cloud, cell))?;
        radius.insert(cell.clone(), sphere.radius);
    }

    for dim in (1..top_dim).rev() {
        let mut cofaces: HashMap<Simplex, Vec<&Simplex>> = HashMap::new();
        for s in dc.simplices_of_dim(dim + 1) {
            for f in s.facets() {
                cofaces.entry(f).or_default().push(s);
            }
        }
        for s in dc.simplices_of_dim(dim) {
            let up = cofaces.get(s).map_or(&[][..], Vec::as_slice);
            let coface_min = up.iter().map(|c| radius[*c]).fold(f64::INFINITY, f64::min);
            let sphere = circumsphere(&points_of(cloud, s))?;
            let r2 = sphere.radius * sphere.radius;
            let attached = up.iter().any(|c| {
                let opposite = c.vertices().iter().find(|v| !s.contains(**v)).unwrap();
                squared_distance(cloud.point(*opposite), &sphere.center) < r2
            });
            let value = if attached { coface_min } else { sphere.radius };
            radius.insert(s.clone(), value.min(coface_min));
        }
    }

    let entries = dc
        .all_simplices()
        .iter()
        .filter(|s| s.dim() <= max_simplex_dim)
        .map(|s| {
            let scale = if s.dim() == 0 { 0.0 } else { 2.0 * radius[s] };
            FiltrationEntry::new(s.clone(), scale)
        })
        .collect();
    Ok(Filtration::sorted_unchecked(entries, max_simplex_dim))
}

fn points_of<'a>(cloud: &'a PointCloud, s: &Simplex) -> Vec<&'a [f64]> {
    s.vertices().iter().map(|&v| cloud.point(v)).collect()
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}
