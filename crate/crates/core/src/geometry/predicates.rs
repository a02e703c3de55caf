//! Thin index-free wrappers over the adaptive exact predicates of `robust`.

use robust::{Coord, Coord3D};

fn c2(p: &[f64]) -> Coord<f64> {
    Coord { x: p[0], y: p[1] }
}

fn c3(p: &[f64]) -> Coord3D<f64> {
    Coord3D {
        x: p[0],
        y: p[1],
        z: p[2],
    }
}

/// Positive when `a, b, c` turn counterclockwise.
pub(crate) fn orient2(a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    robust::orient2d(c2(a), c2(b), c2(c))
}

/// Positive when `d` lies below the plane through `a, b, c` (seen
/// counterclockwise from above).
pub(crate) fn orient3(a: &[f64], b: &[f64], c: &[f64], d: &[f64]) -> f64 {
    robust::orient3d(c3(a), c3(b), c3(c), c3(d))
}

/// Positive when `d` is inside the circle through counterclockwise `a, b, c`.
pub(crate) fn incircle(a: &[f64], b: &[f64], c: &[f64], d: &[f64]) -> f64 {
    robust::incircle(c2(a), c2(b), c2(c), c2(d))
}

/// Positive when `e` is inside the sphere through positively oriented `a, b, c, d`.
pub(crate) fn insphere(a: &[f64], b: &[f64], c: &[f64], d: &[f64], e: &[f64]) -> f64 {
    robust::insphere(c3(a), c3(b), c3(c), c3(d), c3(e))
}

pub(crate) fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Exact collinearity test for three points in R^2 or R^3.
pub(crate) fn collinear(a: &[f64], b: &[f64], c: &[f64]) -> bool {
    if a.len() == 2 {
        return orient2(a, b, c) == 0.0;
    }
    // Collinear in space iff every coordinate-plane projection is collinear.
    [(0, 1), (1, 2), (0, 2)].iter().all(|&(i, j)| {
        orient2(&[a[i], a[j]], &[b[i], b[j]], &[c[i], c[j]]) == 0.0
    })
}
