//! Random inputs and from-scratch reference implementations shared by the
//! integration tests. Nothing here calls into the library's algorithms.

#![allow(dead_code)]

use std::collections::HashMap;

use delrips::{PersistencePair, PointCloud};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points2<R: Rng>(rng: &mut R, n: usize) -> Vec<[f64; 2]> {
    (0..n).map(|_| [rng.random::<f64>(), rng.random::<f64>()]).collect()
}

pub fn random_cloud<R: Rng>(rng: &mut R, n: usize, dim: usize) -> PointCloud {
    let coords = (0..n * dim).map(|_| rng.random::<f64>()).collect();
    PointCloud::from_flat(dim, coords).unwrap()
}

/// Points on a coarse grid, so distances tie and points may coincide.
pub fn snapped_points2<R: Rng>(rng: &mut R, n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|_| [rng.random_range(0..4) as f64 * 0.5, rng.random_range(0..4) as f64 * 0.5])
        .collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Pairs as sorted (birth, death) tuples per dimension.
pub type PairLists = Vec<Vec<(f64, f64)>>;

pub fn sorted_pairs(pairs: &[PersistencePair]) -> Vec<(f64, f64)> {
    let mut v: Vec<(f64, f64)> = pairs.iter().map(|p| (p.birth, p.death)).collect();
    v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    v
}

/// Vietoris-Rips persistence by brute force: every vertex subset of at
/// most `max_hom_dim + 2` points, a dense Z/2 matrix and the textbook
/// left-to-right reduction.
pub fn naive_rips_pairs(points: &[&[f64]], max_hom_dim: usize) -> PairLists {
    let n = points.len();
    assert!(n <= 12);
    let max_size = max_hom_dim + 2;
    let mut simplices: Vec<(f64, Vec<usize>)> = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if verts.len() > max_size {
            continue;
        }
        let mut scale: f64 = 0.0;
        for (k, &i) in verts.iter().enumerate() {
            for &j in &verts[k + 1..] {
                scale = scale.max(dist(points[i], points[j]));
            }
        }
        simplices.push((scale, verts));
    }
    simplices.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.len().cmp(&b.1.len()))
            .then(a.1.cmp(&b.1))
    });
    let index: HashMap<&[usize], usize> = simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.1.as_slice(), i))
        .collect();
    let m = simplices.len();
    let mut cols: Vec<Vec<bool>> = vec![vec![false; m]; m];
    for (j, (_, verts)) in simplices.iter().enumerate() {
        if verts.len() < 2 {
            continue;
        }
        for skip in 0..verts.len() {
            let face: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &v)| v)
                .collect();
            cols[j][index[face.as_slice()]] = true;
        }
    }
    let low = |c: &[bool]| c.iter().rposition(|&b| b);
    for j in 0..m {
        while let Some(l) = low(&cols[j]) {
            let Some(k) = (0..j).find(|&k| low(&cols[k]) == Some(l)) else {
                break;
            };
            let src = cols[k].clone();
            for (t, s) in cols[j].iter_mut().zip(src) {
                *t ^= s;
            }
        }
    }
    let mut out: PairLists = vec![Vec::new(); max_hom_dim + 1];
    let mut paired = vec![false; m];
    for j in 0..m {
        if let Some(i) = low(&cols[j]) {
            paired[i] = true;
            paired[j] = true;
            let d = simplices[i].1.len() - 1;
            if d <= max_hom_dim {
                out[d].push((simplices[i].0, simplices[j].0));
            }
        }
    }
    for (j, (scale, verts)) in simplices.iter().enumerate() {
        let d = verts.len() - 1;
        if !paired[j] && d <= max_hom_dim {
            out[d].push((*scale, f64::INFINITY));
        }
    }
    for v in &mut out {
        v.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    }
    out
}

/// Bottleneck distance between finite diagrams by trying every partial
/// injection from `x` into `y`; unmatched points go to the diagonal.
/// Points with birth == death belong to the diagonal and are removed first.
pub fn exhaustive_bottleneck(x: &[(f64, f64)], y: &[(f64, f64)], full_diagonal: bool) -> f64 {
    let off = |v: &[(f64, f64)]| v.iter().copied().filter(|p| p.0 != p.1).collect::<Vec<_>>();
    exhaustive_bottleneck_raw(&off(x), &off(y), full_diagonal)
}

/// As [`exhaustive_bottleneck`], but points on the diagonal are kept and may
/// be matched like any other point.
pub fn exhaustive_bottleneck_raw(x: &[(f64, f64)], y: &[(f64, f64)], full_diagonal: bool) -> f64 {
    let diag = |p: &(f64, f64)| {
        if full_diagonal {
            p.1 - p.0
        } else {
            (p.1 - p.0) / 2.0
        }
    };
    let sup = |a: &(f64, f64), b: &(f64, f64)| (a.0 - b.0).abs().max((a.1 - b.1).abs());
    type Pt = (f64, f64);
    #[allow(clippy::too_many_arguments)]
    fn search(
        i: usize,
        used: &mut Vec<bool>,
        acc: f64,
        best: &mut f64,
        x: &[(f64, f64)],
        y: &[(f64, f64)],
        diag: &dyn Fn(&Pt) -> f64,
        sup: &dyn Fn(&Pt, &Pt) -> f64,
    ) {
        if acc >= *best {
            return;
        }
        if i == x.len() {
            let rest = y
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(p, _)| diag(p))
                .fold(acc, f64::max);
            *best = best.min(rest);
            return;
        }
        search(i + 1, used, acc.max(diag(&x[i])), best, x, y, diag, sup);
        for j in 0..y.len() {
            if !used[j] {
                used[j] = true;
                search(i + 1, used, acc.max(sup(&x[i], &y[j])), best, x, y, diag, sup);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    search(0, &mut vec![false; y.len()], 0.0, &mut best, x, y, &diag, &sup);
    best
}

/// A finite diagram of at most `max_len` points on a 0.25 grid, so that
/// ties and zero-persistence points are common.
pub fn random_small_diagram<R: Rng>(rng: &mut R, max_len: usize) -> Vec<(f64, f64)> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| {
            let b = rng.random_range(0..8) as f64 * 0.25;
            let l = rng.random_range(0..6) as f64 * 0.25;
            (b, b + l)
        })
        .collect()
}

pub fn to_pairs(v: &[(f64, f64)]) -> Vec<PersistencePair> {
    v.iter().map(|&(b, d)| PersistencePair { birth: b, death: d }).collect()
}

/// Rank over Z/2 of a set of vectors given as sorted index lists.
pub fn z2_rank(vectors: &[Vec<usize>], width: usize) -> usize {
    let words = width.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| {
            let mut bits = vec![0u64; words];
            for &i in v {
                bits[i / 64] ^= 1 << (i % 64);
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for bit in 0..width {
        let (w, m) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & m != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & m != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of H_p(K_i) -> H_p(K_j) computed from boundary ranks alone, where
/// K_s holds the simplices of scale at most s.
///
/// dim Z_p(K_i) = #p-simplices(K_i) - rank d_p(K_i), and the boundaries of
/// K_j that live in K_i are the kernel of projecting B_p(K_j) away from K_i.
pub fn betti_by_ranks(
    simplices: &[(Vec<usize>, f64)],
    p: usize,
    i: f64,
    j: f64,
) -> usize {
    let index: HashMap<&[usize], usize> = simplices
        .iter()
        .enumerate()
        .map(|(k, s)| (s.0.as_slice(), k))
        .collect();
    let n = simplices.len();
    let boundary = |verts: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = (0..verts.len())
            .map(|skip| {
                let face: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                index[face.as_slice()]
            })
            .collect();
        out.sort_unstable();
        out
    };
    let of_dim = |d: usize, s: f64| {
        simplices
            .iter()
            .filter(move |(v, sc)| v.len() == d + 1 && *sc <= s)
    };
    let cycles_in_i = {
        let count = of_dim(p, i).count();
        let rank = if p == 0 {
            0
        } else {
            z2_rank(&of_dim(p, i).map(|(v, _)| boundary(v)).collect::<Vec<_>>(), n)
        };
        count - rank
    };
    let bounds_j: Vec<Vec<usize>> = of_dim(p + 1, j).map(|(v, _)| boundary(v)).collect();
    let rank_b = z2_rank(&bounds_j, n);
    let outside: Vec<Vec<usize>> = bounds_j
        .iter()
        .map(|c| c.iter().copied().filter(|&k| simplices[k].1 > i).collect())
        .collect();
    let rank_proj = z2_rank(&outside, n);
    cycles_in_i - (rank_b - rank_proj)
}
