//! Persistence diagrams.

use std::cmp::Ordering;

/// A (birth, death) pair; essential classes have `death == f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub birth: f64,
    pub death: f64,
}

impl PersistencePair {
    pub fn new(birth: f64, death: f64) -> Self {
        debug_assert!(birth <= death);
        Self { birth, death }
    }

    pub fn essential(birth: f64) -> Self {
        Self {
            birth,
            death: f64::INFINITY,
        }
    }

    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    pub fn midpoint(&self) -> f64 {
        (self.birth + self.death) / 2.0
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.birth
            .total_cmp(&other.birth)
            .then(self.death.total_cmp(&other.death))
    }
}

/// Multisets of persistence pairs, one per homology dimension.
///
/// Zero-persistence pairs are kept; use
/// [`without_zero_persistence`](Self::without_zero_persistence) for the
/// reduced view.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PersistenceDiagram {
    pairs_by_dim: Vec<Vec<PersistencePair>>,
}

impl PersistenceDiagram {
    /// An empty diagram covering dimensions `0..num_dims`.
    pub fn with_dims(num_dims: usize) -> Self {
        Self {
            pairs_by_dim: vec![Vec::new(); num_dims],
        }
    }

    pub fn from_pairs(pairs_by_dim: Vec<Vec<PersistencePair>>) -> Self {
        Self { pairs_by_dim }
    }

    pub fn push(&mut self, dim: usize, pair: PersistencePair) {
        if dim >= self.pairs_by_dim.len() {
            self.pairs_by_dim.resize(dim + 1, Vec::new());
        }
        self.pairs_by_dim[dim].push(pair);
    }

    /// Number of homology dimensions the diagram covers.
    pub fn num_dims(&self) -> usize {
        self.pairs_by_dim.len()
    }

    /// Pairs of dimension `p`; empty when `p` is not covered.
    pub fn dim(&self, p: usize) -> &[PersistencePair] {
        self.pairs_by_dim.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &PersistencePair)> {
        self.pairs_by_dim
            .iter()
            .enumerate()
            .flat_map(|(d, v)| v.iter().map(move |p| (d, p)))
    }

    pub fn len(&self) -> usize {
        self.pairs_by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn without_zero_persistence(&self) -> Self {
        Self {
            pairs_by_dim: self
                .pairs_by_dim
                .iter()
                .map(|v| v.iter().copied().filter(|p| p.birth != p.death).collect())
                .collect(),
        }
    }

    /// Pairs sorted by (birth, death) within each dimension; two diagrams
    /// are equal as multisets iff their canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.pairs_by_dim {
            v.sort_by(PersistencePair::cmp_key);
        }
        out
    }
}
