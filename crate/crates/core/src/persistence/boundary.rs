use std::collections::HashMap;

use super::PersistenceError;
use crate::filtration::{entry_order, Filtration};
use crate::simplex::Simplex;

/// Sparse Z/2 boundary matrix in filtration order.
///
/// Column `j` lists the row indices of the facets of simplex `j`, sorted
/// ascending; every row index is below `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMatrix {
    columns: Vec<Vec<usize>>,
    dims: Vec<usize>,
    scales: Vec<f64>,
}

impl BoundaryMatrix {
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Dense 0/1 rendering, `dense()[row][col]`.
    pub fn dense(&self) -> Vec<Vec<u8>> {
        dense_from_columns(&self.columns)
    }
}

pub(crate) fn dense_from_columns(columns: &[Vec<usize>]) -> Vec<Vec<u8>> {
    let n = columns.len();
    let mut m = vec![vec![0u8; n]; n];
    for (j, col) in columns.iter().enumerate() {
        for &i in col {
            m[i][j] = 1;
        }
    }
    m
}

/// Builds the boundary matrix of a filtration already in canonical order.
pub fn boundary_matrix(filt: &Filtration) -> Result<BoundaryMatrix, PersistenceError> {
    let entries = filt.entries();
    if let Some(w) = entries
        .windows(2)
        .position(|w| entry_order(&w[0], &w[1]) != std::cmp::Ordering::Less)
    {
        return Err(PersistenceError::UnsortedFiltration { index: w + 1 });
    }
    let index: HashMap<&Simplex, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.simplex, i))
        .collect();
    let mut columns = Vec::with_capacity(entries.len());
    for (j, e) in entries.iter().enumerate() {
        let mut col = Vec::with_capacity(e.simplex.dim() + 1);
        for face in e.simplex.facets() {
            match index.get(&face) {
                Some(&i) if i < j => col.push(i),
                _ => {
                    return Err(PersistenceError::MissingFace {
                        simplex: e.simplex.clone(),
                        face,
                    })
                }
            }
        }
        col.sort_unstable();
        columns.push(col);
    }
    Ok(BoundaryMatrix {
        columns,
        dims: entries.iter().map(|e| e.simplex.dim()).collect(),
        scales: entries.iter().map(|e| e.scale).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::{Filtration, FiltrationEntry};

    fn e(v: &[usize], s: f64) -> FiltrationEntry {
        FiltrationEntry::new(Simplex::new(v.iter().copied()).unwrap(), s)
    }

    #[test]
    fn single_vertex() {
        let f = Filtration::new(vec![e(&[0], 0.0)], 1);
        let b = boundary_matrix(&f).unwrap();
        assert_eq!(b.dense(), vec![vec![0]]);
    }

    #[test]
    fn one_edge() {
        let f = Filtration::new(vec![e(&[0], 0.0), e(&[1], 0.0), e(&[0, 1], 1.0)], 1);
        let b = boundary_matrix(&f).unwrap();
        assert_eq!(b.columns(), &[vec![], vec![], vec![0, 1]]);
        assert_eq!(b.dims(), &[0, 0, 1]);
    }

    #[test]
    fn unsorted_rejected() {
        let f = Filtration::new(vec![e(&[0, 1], 1.0), e(&[0], 0.0), e(&[1], 0.0)], 1);
        assert_eq!(
            boundary_matrix(&f),
            Err(PersistenceError::UnsortedFiltration { index: 1 })
        );
        let missing = Filtration::new(vec![e(&[0], 0.0), e(&[0, 1], 1.0)], 1);
        assert!(matches!(
            boundary_matrix(&missing),
            Err(PersistenceError::MissingFace { .. })
        ));
    }
}
