//! Abstract simplices over point indices.

use smallvec::SmallVec;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplexError {
    #[error("a simplex needs at least one vertex")]
    Empty,
    #[error("vertex {0} is repeated")]
    RepeatedVertex(usize),
}

/// A simplex stored as its strictly increasing vertex list.
///
/// Ordering is lexicographic on the vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(SmallVec<[usize; 4]>);

impl Simplex {
    /// Sorts the vertices; rejects empty and repeated vertex lists.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, SimplexError> {
        let mut v: SmallVec<[usize; 4]> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(SimplexError::Empty);
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(SimplexError::RepeatedVertex(w[0]));
        }
        Ok(Self(v))
    }

    /// Caller guarantees `vertices` is non-empty and strictly increasing.
    pub(crate) fn from_sorted(vertices: &[usize]) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(SmallVec::from_slice(vertices))
    }

    pub fn vertex(v: usize) -> Self {
        Self(smallvec::smallvec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Codimension-one faces, in the order obtained by dropping vertex 0, 1, ...
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All non-empty faces of dimension `dim` (including the simplex itself
    /// when `dim == self.dim()`), in lexicographic order.
    pub fn faces_of_dim(&self, dim: usize) -> Vec<Simplex> {
        let k = dim + 1;
        let mut out = Vec::new();
        if k > self.0.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        let n = self.0.len();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
