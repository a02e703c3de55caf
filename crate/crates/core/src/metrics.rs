//! Bottleneck distance between persistence diagrams.
//!
//! The distance is found exactly: every optimal matching costs one of a
//! finite set of candidate values (point-to-point sup-norm distances and
//! point-to-diagonal costs), so a binary search over the sorted candidates
//! with a perfect-matching feasibility test on the threshold graph finds
//! the smallest feasible one.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::PersistencePair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("diagrams have {left} and {right} essential classes; the distance is infinite")]
    InfiniteDistance { left: usize, right: usize },
}

/// Cost of sending a point to the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DiagonalCost {
    /// Sup-norm distance to the nearest diagonal point, `(death - birth) / 2`.
    #[default]
    Half,
    /// The full persistence `death - birth`.
    Full,
}

impl DiagonalCost {
    pub fn cost(self, p: &PersistencePair) -> f64 {
        match self {
            DiagonalCost::Half => (p.death - p.birth) / 2.0,
            DiagonalCost::Full => p.death - p.birth,
        }
    }
}

impl FromStr for DiagonalCost {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "half" => Ok(DiagonalCost::Half),
            "full" => Ok(DiagonalCost::Full),
            other => Err(format!("unknown diagonal cost `{other}` (expected half or full)")),
        }
    }
}

impl fmt::Display for DiagonalCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagonalCost::Half => "half",
            DiagonalCost::Full => "full",
        })
    }
}

/// An optimal partial matching between two diagrams.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Matching {
    /// (index in X, index in Y)
    pub matched: Vec<(usize, usize)>,
    pub to_diagonal_x: Vec<usize>,
    pub to_diagonal_y: Vec<usize>,
    pub cost: f64,
}

/// Sup-norm distance between two finite points.
pub fn sup_distance(a: &PersistencePair, b: &PersistencePair) -> f64 {
    (a.birth - b.birth).abs().max((a.death - b.death).abs())
}

/// Bottleneck distance between two same-dimension diagrams and an optimal
/// matching witnessing it.
pub fn bottleneck(
    x: &[PersistencePair],
    y: &[PersistencePair],
    diagonal: DiagonalCost,
) -> Result<(f64, Matching), MetricsError> {
    let mut matching = Matching::default();

    // Essential classes can only match each other; sorted order is optimal
    // for matching points on a line.
    let mut ex: Vec<usize> = (0..x.len()).filter(|&i| x[i].is_essential()).collect();
    let mut ey: Vec<usize> = (0..y.len()).filter(|&i| y[i].is_essential()).collect();
    if ex.len() != ey.len() {
        return Err(MetricsError::InfiniteDistance {
            left: ex.len(),
            right: ey.len(),
        });
    }
    ex.sort_by(|&a, &b| x[a].birth.total_cmp(&x[b].birth));
    ey.sort_by(|&a, &b| y[a].birth.total_cmp(&y[b].birth));
    let mut cost = 0.0f64;
    for (&i, &j) in ex.iter().zip(&ey) {
        cost = cost.max((x[i].birth - y[j].birth).abs());
        matching.matched.push((i, j));
    }

    // Points with birth == death are part of the diagonal, not matchable
    // points. Under the half convention this changes nothing; under the full
    // convention it stops an on-diagonal point from undercutting the
    // diagonal cost of its partner.
    let fx: Vec<usize> = (0..x.len())
        .filter(|&i| !x[i].is_essential() && x[i].death > x[i].birth)
        .collect();
    let fy: Vec<usize> = (0..y.len())
        .filter(|&j| !y[j].is_essential() && y[j].death > y[j].birth)
        .collect();
    matching.to_diagonal_x.extend(
        (0..x.len()).filter(|&i| !x[i].is_essential() && x[i].death <= x[i].birth),
    );
    matching.to_diagonal_y.extend(
        (0..y.len()).filter(|&j| !y[j].is_essential() && y[j].death <= y[j].birth),
    );

    let px: Vec<PersistencePair> = fx.iter().map(|&i| x[i]).collect();
    let py: Vec<PersistencePair> = fy.iter().map(|&j| y[j]).collect();
    let graph = ThresholdGraph::new(&px, &py, diagonal);

    let mut candidates: Vec<f64> = Vec::with_capacity(px.len() * py.len() + px.len() + py.len() + 1);
    candidates.push(0.0);
    for a in &px {
        candidates.push(diagonal.cost(a));
        for b in &py {
            candidates.push(sup_distance(a, b));
        }
    }
    candidates.extend(py.iter().map(|b| diagonal.cost(b)));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // Smallest feasible candidate; the largest is always feasible.
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if graph.perfect_matching(candidates[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let t = candidates[lo];
    let assignment = graph
        .perfect_matching(t)
        .expect("largest candidate is always feasible");

    let (n, m) = (px.len(), py.len());
    for (left, &right) in assignment.iter().enumerate() {
        match (left < n, right < m) {
            (true, true) => matching.matched.push((fx[left], fy[right])),
            (true, false) => matching.to_diagonal_x.push(fx[left]),
            (false, true) => matching.to_diagonal_y.push(fy[right]),
            (false, false) => {}
        }
    }
    matching.matched.sort_unstable();
    matching.to_diagonal_x.sort_unstable();
    matching.to_diagonal_y.sort_unstable();
    cost = cost.max(t);
    matching.cost = cost;
    Ok((cost, matching))
}

/// Bipartite graph on (X points + Y diagonal copies) versus
/// (Y points + X diagonal copies), restricted to edges of cost at most t.
struct ThresholdGraph<'a> {
    x: &'a [PersistencePair],
    y: &'a [PersistencePair],
    diagonal: DiagonalCost,
}

impl<'a> ThresholdGraph<'a> {
    fn new(x: &'a [PersistencePair], y: &'a [PersistencePair], diagonal: DiagonalCost) -> Self {
        Self { x, y, diagonal }
    }

    /// Right-side neighbours of left vertex `u` at threshold `t`.
    fn neighbours(&self, u: usize, t: f64, out: &mut Vec<usize>) {
        out.clear();
        let (n, m) = (self.x.len(), self.y.len());
        if u < n {
            let a = &self.x[u];
            out.extend((0..m).filter(|&j| sup_distance(a, &self.y[j]) <= t));
            if self.diagonal.cost(a) <= t {
                out.push(m + u);
            }
        } else {
            let j = u - n;
            if self.diagonal.cost(&self.y[j]) <= t {
                out.push(j);
            }
            out.extend(m..m + n);
        }
    }

    /// Hopcroft-Karp; returns the right partner of every left vertex when a
    /// perfect matching exists.
    fn perfect_matching(&self, t: f64) -> Option<Vec<usize>> {
        let size = self.x.len() + self.y.len();
        let adj: Vec<Vec<usize>> = (0..size)
            .map(|u| {
                let mut v = Vec::new();
                self.neighbours(u, t, &mut v);
                v
            })
            .collect();
        let matched = hopcroft_karp(&adj, size);
        matched.iter().all(Option::is_some).then(|| matched.into_iter().flatten().collect())
    }
}

fn hopcroft_karp(adj: &[Vec<usize>], right_size: usize) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let left_size = adj.len();
    let mut match_l: Vec<Option<usize>> = vec![None; left_size];
    let mut match_r: Vec<Option<usize>> = vec![None; right_size];
    let mut dist = vec![INF; left_size];

    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for u in 0..left_size {
            if match_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_r[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; left_size];
        for u in 0..left_size {
            if match_l[u].is_none() {
                augment(u, adj, &mut match_l, &mut match_r, &mut dist, &mut it);
            }
        }
    }
    match_l
}

/// Iterative DFS along the BFS layers.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    while let Some(&u) = stack.last() {
        if it[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            continue;
        }
        let v = adj[u][it[u]];
        it[u] += 1;
        match match_r[v] {
            None => {
                // flip the alternating path recorded on the stack
                let mut v = v;
                while let Some(u) = stack.pop() {
                    let prev = match_l[u];
                    match_l[u] = Some(v);
                    match_r[v] = Some(u);
                    match prev {
                        Some(p) => v = p,
                        None => break,
                    }
                }
                return true;
            }
            Some(w) if dist[w] == dist[u] + 1 => stack.push(w),
            Some(_) => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: f64, d: f64) -> PersistencePair {
        PersistencePair::new(b, d)
    }

    #[test]
    fn identical_diagrams() {
        let x = [p(0.0, 2.0), p(1.0, 3.0), PersistencePair::essential(0.0)];
        assert_eq!(bottleneck(&x, &x, DiagonalCost::Half).unwrap().0, 0.0);
    }

    #[test]
    fn against_empty() {
        let (d, m) = bottleneck(&[p(0.0, 2.0)], &[], DiagonalCost::Half).unwrap();
        assert_eq!(d, 1.0);
        assert_eq!(m.to_diagonal_x, vec![0]);
        assert_eq!(bottleneck(&[p(0.0, 2.0)], &[], DiagonalCost::Full).unwrap().0, 2.0);
    }

    #[test]
    fn direct_match_beats_diagonal() {
        let (d, m) = bottleneck(&[p(0.0, 2.0)], &[p(0.0, 3.0)], DiagonalCost::Half).unwrap();
        assert_eq!(d, 1.0);
        assert_eq!(m.matched, vec![(0, 0)]);
    }

    #[test]
    fn essential_mismatch() {
        let x = [PersistencePair::essential(0.0)];
        assert_eq!(
            bottleneck(&x, &[], DiagonalCost::Half),
            Err(MetricsError::InfiniteDistance { left: 1, right: 0 })
        );
        let y = [PersistencePair::essential(0.5)];
        assert_eq!(bottleneck(&x, &y, DiagonalCost::Half).unwrap().0, 0.5);
    }

    #[test]
    fn zero_persistence_points_are_free() {
        let x = [p(1.0, 1.0), p(2.0, 2.0)];
        let (d, m) = bottleneck(&x, &[], DiagonalCost::Half).unwrap();
        assert_eq!(d, 0.0);
        assert_eq!(m.to_diagonal_x, vec![0, 1]);
    }

    #[test]
    fn matching_covers_everything() {
        let x = [p(0.0, 1.0), p(0.2, 4.0), p(1.0, 1.1)];
        let y = [p(0.1, 3.5), p(2.0, 2.5)];
        let (d, m) = bottleneck(&x, &y, DiagonalCost::Half).unwrap();
        let mut seen_x: Vec<usize> = m.matched.iter().map(|e| e.0).chain(m.to_diagonal_x.clone()).collect();
        let mut seen_y: Vec<usize> = m.matched.iter().map(|e| e.1).chain(m.to_diagonal_y.clone()).collect();
        seen_x.sort();
        seen_y.sort();
        assert_eq!(seen_x, vec![0, 1, 2]);
        assert_eq!(seen_y, vec![0, 1]);
        assert_eq!(d, 0.5);
        assert_eq!(m.cost, d);
    }
}
