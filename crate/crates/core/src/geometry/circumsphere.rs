use super::predicates::{collinear, orient3};
use super::GeometryError;

/// Smallest sphere through a set of affinely independent points.
#[derive(Debug, Clone, PartialEq)]
pub struct Circumsphere {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Smallest sphere passing through `points` inside their affine hull.
///
/// Accepts 1 to D+1 affinely independent points of a common ambient
/// dimension D in {2, 3}. Degeneracy is decided with exact predicates.
pub fn circumsphere(points: &[&[f64]]) -> Result<Circumsphere, GeometryError> {
    let Some(first) = points.first() else {
        return Err(GeometryError::DegenerateSimplex);
    };
    let dim = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(GeometryError::DimensionMismatch {
            left: dim,
            right: p.len(),
        });
    }
    let k = points.len() - 1;
    if k > dim || !affinely_independent(points) {
        return Err(GeometryError::DegenerateSimplex);
    }
    if k == 0 {
        return Ok(Circumsphere {
            center: first.to_vec(),
            radius: 0.0,
        });
    }

    // center = p0 + sum_j lambda_j v_j with 2 (v_i . v_j) lambda_j = |v_i|^2
    let v: Vec<Vec<f64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let mut gram = [[0.0f64; 4]; 3];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = 2.0 * dot(&v[i], &v[j]);
        }
        gram[i][k] = dot(&v[i], &v[i]);
    }
    let lambda = solve(&mut gram, k).ok_or(GeometryError::DegenerateSimplex)?;

    let mut offset = vec![0.0; dim];
    for (l, vj) in lambda.iter().zip(&v) {
        for (o, x) in offset.iter_mut().zip(vj) {
            *o += l * x;
        }
    }
    let radius = dot(&offset, &offset).sqrt();
    let center = first.iter().zip(&offset).map(|(a, o)| a + o).collect();
    Ok(Circumsphere { center, radius })
}

fn affinely_independent(points: &[&[f64]]) -> bool {
    match points.len() {
        1 => true,
        2 => points[0] != points[1],
        3 => !collinear(points[0], points[1], points[2]),
        4 if points[0].len() == 3 => orient3(points[0], points[1], points[2], points[3]) != 0.0,
        _ => false,
    }
}

/// Gaussian elimination with partial pivoting on a k x (k+1) augmented system.
fn solve(m: &mut [[f64; 4]; 3], k: usize) -> Option<Vec<f64>> {
    for col in 0..k {
        let pivot = (col..k).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col] == 0.0 {
            return None;
        }
        m.swap(col, pivot);
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut().take(k - col - 1) {
            let f = row[col] / pivot_row[col];
            for (v, p) in row[col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                *v -= f * p;
            }
        }
    }
    let mut x = vec![0.0; k];
    for row in (0..k).rev() {
        let mut acc = m[row][k];
        for c in row + 1..k {
            acc -= m[row][c] * x[c];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}
