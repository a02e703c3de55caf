use super::boundary::{dense_from_columns, BoundaryMatrix};
use crate::budget::{Budget, BudgetExceeded};

/// A reduced boundary matrix: all defined lowest row indices are distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedMatrix {
    columns: Vec<Vec<usize>>,
    low: Vec<Option<usize>>,
}

impl ReducedMatrix {
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Lowest nonzero row of each column.
    pub fn lows(&self) -> &[Option<usize>] {
        &self.low
    }

    pub fn dense(&self) -> Vec<Vec<u8>> {
        dense_from_columns(&self.columns)
    }

    /// (birth, death) column index pairs.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        self.low
            .iter()
            .enumerate()
            .filter_map(|(j, l)| l.map(|i| (i, j)))
            .collect()
    }
}

/// Left-to-right column reduction.
pub fn reduce_standard(b: &BoundaryMatrix) -> ReducedMatrix {
    let mut columns = b.columns().to_vec();
    let n = columns.len();
    let mut pivot_col: Vec<Option<usize>> = vec![None; n];
    let mut scratch = Vec::new();
    for j in 0..n {
        reduce_column(&mut columns, &pivot_col, j, &mut scratch);
        if let Some(&i) = columns[j].last() {
            pivot_col[i] = Some(j);
        }
    }
    finish(columns)
}

/// Reduction with clearing: dimensions are processed from the top down, and
/// once column `j` is found to kill simplex `i`, column `i` is zeroed
/// without being reduced.
pub fn reduce_twist(b: &BoundaryMatrix) -> ReducedMatrix {
    reduce_twist_with_budget(b, &Budget::unlimited()).expect("unlimited budget")
}

pub fn reduce_twist_with_budget(
    b: &BoundaryMatrix,
    budget: &Budget,
) -> Result<ReducedMatrix, BudgetExceeded> {
    let mut columns = b.columns().to_vec();
    let n = columns.len();
    let dims = b.dims();
    let top = dims.iter().copied().max().unwrap_or(0);
    let mut pivot_col: Vec<Option<usize>> = vec![None; n];
    let mut cleared = vec![false; n];
    let mut scratch = Vec::new();
    let mut work = 0usize;
    for dim in (1..=top).rev() {
        for j in 0..n {
            if dims[j] != dim || cleared[j] {
                continue;
            }
            reduce_column(&mut columns, &pivot_col, j, &mut scratch);
            if let Some(&i) = columns[j].last() {
                pivot_col[i] = Some(j);
                columns[i].clear();
                cleared[i] = true;
            }
            work += 1;
            if work.is_multiple_of(1024) {
                budget.check_time()?;
            }
        }
    }
    Ok(finish(columns))
}

fn reduce_column(
    columns: &mut [Vec<usize>],
    pivot_col: &[Option<usize>],
    j: usize,
    scratch: &mut Vec<usize>,
) {
    while let Some(&l) = columns[j].last() {
        let Some(k) = pivot_col[l] else { break };
        let (left, right) = columns.split_at_mut(j);
        add_into(&mut right[0], &left[k], scratch);
    }
}

/// `target ^= source` on sorted index lists.
fn add_into(target: &mut Vec<usize>, source: &[usize], scratch: &mut Vec<usize>) {
    scratch.clear();
    let (mut a, mut b) = (0, 0);
    while a < target.len() && b < source.len() {
        match target[a].cmp(&source[b]) {
            std::cmp::Ordering::Less => {
                scratch.push(target[a]);
                a += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(source[b]);
                b += 1;
            }
            std::cmp::Ordering::Equal => {
                a += 1;
                b += 1;
            }
        }
    }
    scratch.extend_from_slice(&target[a..]);
    scratch.extend_from_slice(&source[b..]);
    std::mem::swap(target, scratch);
}

fn finish(columns: Vec<Vec<usize>>) -> ReducedMatrix {
    let low = columns.iter().map(|c| c.last().copied()).collect();
    ReducedMatrix { columns, low }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_difference() {
        let mut t = vec![1, 3, 5];
        let mut s = Vec::new();
        add_into(&mut t, &[0, 3, 6], &mut s);
        assert_eq!(t, vec![0, 1, 5, 6]);
        add_into(&mut t, &[0, 1, 5, 6], &mut s);
        assert!(t.is_empty());
    }
}
