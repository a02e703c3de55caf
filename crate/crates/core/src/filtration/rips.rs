use super::{Filtration, FiltrationEntry, FiltrationError, FiltrationSpec, Method};
use crate::budget::Budget;
use crate::cloud::PointCloud;
use crate::simplex::Simplex;

/// Vietoris-Rips filtration: every vertex subset of at most
/// `max_hom_dim + 2` points whose diameter is within the threshold.
pub fn build_rips(cloud: &PointCloud, spec: &FiltrationSpec) -> Result<Filtration, FiltrationError> {
    build_rips_with_budget(cloud, spec, &Budget::unlimited())
}

/// Number of simplices of the untruncated Rips complex with simplices up to
/// dimension `max_simplex_dim`, i.e. the sum of binomial(n, k) for k up to
/// `max_simplex_dim + 1`. Saturates at `u128::MAX`.
pub fn rips_simplex_count(n: usize, max_simplex_dim: usize) -> u128 {
    let n = n as u128;
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 1..=(max_simplex_dim as u128 + 1) {
        if k > n {
            break;
        }
        // binomial(n, k) = binomial(n, k-1) * (n - k + 1) / k, exact at each step
        binom = match binom.checked_mul(n - k + 1) {
            Some(b) => b / k,
            None => return u128::MAX,
        };
        total = total.saturating_add(binom);
    }
    total
}

pub fn build_rips_with_budget(
    cloud: &PointCloud,
    spec: &FiltrationSpec,
    budget: &Budget,
) -> Result<Filtration, FiltrationError> {
    debug_assert_eq!(spec.method, Method::Rips);
    spec.validate(cloud.dim())?;
    let n = cloud.len();
    if n == 0 {
        return Err(FiltrationError::EmptyCloud);
    }
    let cap = spec.max_simplex_dim();
    let threshold = spec.threshold.unwrap_or(f64::INFINITY);
    if spec.threshold.is_none() {
        budget.check_size(rips_simplex_count(n, cap))?;
    }

    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = cloud.distance(i, j);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }

    let mut entries: Vec<FiltrationEntry> = (0..n)
        .map(|v| FiltrationEntry::new(Simplex::vertex(v), 0.0))
        .collect();
    // Each simplex is produced once, from the face that omits its largest vertex.
    let mut level_start = 0;
    for _dim in 1..=cap {
        let level_end = entries.len();
        for idx in level_start..level_end {
            let (verts, scale) = {
                let e = &entries[idx];
                (e.simplex.vertices().to_vec(), e.scale)
            };
            let last = *verts.last().unwrap();
            for v in last + 1..n {
                let s = verts
                    .iter()
                    .map(|&u| dist[u * n + v])
                    .fold(scale, f64::max);
                if s <= threshold {
                    let mut w = verts.clone();
                    w.push(v);
                    entries.push(FiltrationEntry::new(Simplex::from_sorted(&w), s));
                    if entries.len().is_multiple_of(1 << 16) {
                        budget.check_time()?;
                        budget.check_size(entries.len() as u128)?;
                    }
                }
            }
        }
        level_start = level_end;
        if level_start == entries.len() {
            break;
        }
    }
    budget.check_time()?;
    Ok(Filtration::sorted_unchecked(entries, cap))
}
