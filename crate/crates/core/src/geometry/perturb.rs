use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{delaunay, GeometryError};
use crate::cloud::{euclidean, PointCloud};

/// A cloud and its epsilon-perturbation, paired index by index.
#[derive(Debug, Clone)]
pub struct PerturbationPairing {
    source: PointCloud,
    target: PointCloud,
    epsilon: f64,
}

impl PerturbationPairing {
    /// Checks that every `target[i]` is within `epsilon` of `source[i]` and
    /// that no other point of either cloud is that close to its partner.
    pub fn new(source: PointCloud, target: PointCloud, epsilon: f64) -> Result<Self, GeometryError> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(GeometryError::InvalidEpsilon(epsilon));
        }
        if source.dim() != target.dim() {
            return Err(GeometryError::DimensionMismatch {
                left: source.dim(),
                right: target.dim(),
            });
        }
        if source.len() != target.len() {
            return Err(GeometryError::InvalidPairing(format!(
                "clouds have {} and {} points",
                source.len(),
                target.len()
            )));
        }
        let n = source.len();
        for i in 0..n {
            let d = euclidean(source.point(i), target.point(i));
            if d >= epsilon {
                return Err(GeometryError::InvalidPairing(format!(
                    "point {i} moved {d}, not below epsilon {epsilon}"
                )));
            }
            for j in (0..n).filter(|&j| j != i) {
                if euclidean(source.point(i), target.point(j)) < epsilon
                    || euclidean(source.point(j), target.point(i)) < epsilon
                {
                    return Err(GeometryError::InvalidPairing(format!(
                        "points {i} and {j} are both within epsilon of a partner"
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            epsilon,
        })
    }

    pub fn source(&self) -> &PointCloud {
        &self.source
    }

    pub fn target(&self) -> &PointCloud {
        &self.target
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Largest displacement of a paired point.
    pub fn max_displacement(&self) -> f64 {
        (0..self.source.len())
            .map(|i| euclidean(self.source.point(i), self.target.point(i)))
            .fold(0.0, f64::max)
    }
}

/// Hausdorff distance between two finite clouds.
pub fn hausdorff_distance(p: &PointCloud, q: &PointCloud) -> Result<f64, GeometryError> {
    if p.is_empty() || q.is_empty() {
        return Err(GeometryError::EmptyCloud);
    }
    if p.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(directed(p, q).max(directed(q, p)))
}

fn directed(from: &PointCloud, to: &PointCloud) -> f64 {
    from.points()
        .map(|a| to.points().map(|b| euclidean(a, b)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

/// Moves every point by an independent vector drawn uniformly from the open
/// ball of radius `eps`.
///
/// `eps` must be below half the minimum pairwise distance so the balls are
/// disjoint and the index pairing is the unique nearest-partner pairing.
pub fn epsilon_perturb(
    cloud: &PointCloud,
    eps: f64,
    seed: u64,
) -> Result<PerturbationPairing, GeometryError> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(GeometryError::InvalidEpsilon(eps));
    }
    let bound = cloud.min_pairwise_distance() / 2.0;
    if eps >= bound {
        return Err(GeometryError::EpsilonTooLarge { epsilon: eps, bound });
    }
    let dim = cloud.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = Vec::with_capacity(cloud.coords().len());
    for p in cloud.points() {
        loop {
            let q = displaced(p, eps, dim, &mut rng);
            // rounding of p + v can push the displacement onto the boundary
            if euclidean(p, &q) < eps {
                coords.extend_from_slice(&q);
                break;
            }
        }
    }
    let target = PointCloud::from_flat(dim, coords).expect("finite displacement of a valid cloud");
    PerturbationPairing::new(cloud.clone(), target, eps)
}

/// `p` plus a vector uniform in the ball of radius `radius`.
pub(crate) fn displaced<R: Rng>(p: &[f64], radius: f64, dim: usize, rng: &mut R) -> Vec<f64> {
    let dir: Vec<f64> = loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            break v.into_iter().map(|x| x / norm).collect();
        }
    };
    let u: f64 = rng.random();
    let r = radius * u.powf(1.0 / dim as f64);
    p.iter().zip(dir).map(|(a, d)| a + r * d).collect()
}

/// Whether both clouds of the pairing triangulate to the same index sets.
pub fn same_triangulation(pair: &PerturbationPairing) -> Result<bool, GeometryError> {
    let a = delaunay(&pair.source)?;
    let b = delaunay(&pair.target)?;
    Ok(a.all_simplices() == b.all_simplices())
}
