//! Z/2 boundary matrices, column reduction and persistence pairs.

mod boundary;
mod reduce;

pub use boundary::{boundary_matrix, BoundaryMatrix};
pub use reduce::{reduce_standard, reduce_twist, reduce_twist_with_budget, ReducedMatrix};

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::diagram::{PersistenceDiagram, PersistencePair};
use crate::filtration::Filtration;
use crate::simplex::Simplex;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PersistenceError {
    #[error("filtration is not in canonical order at entry {index}")]
    UnsortedFiltration { index: usize },
    #[error("face {face} of {simplex} does not precede it in the filtration")]
    MissingFace { simplex: Simplex, face: Simplex },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Which column reduction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    Standard,
    #[default]
    Twist,
}

/// Reads persistence pairs off a reduced matrix.
///
/// A column with lowest entry `i` pairs simplex `i` with the column's
/// simplex. Zero columns that are never a lowest entry are essential.
/// Classes in the filtration's top simplex dimension are not reported.
pub fn extract_pairs(r: &ReducedMatrix, filt: &Filtration) -> PersistenceDiagram {
    let entries = filt.entries();
    let num_dims = filt.num_hom_dims();
    let mut out = PersistenceDiagram::with_dims(num_dims);
    let mut is_birth_of_pair = vec![false; entries.len()];
    for (j, low) in r.lows().iter().enumerate() {
        if let Some(i) = *low {
            is_birth_of_pair[i] = true;
            let dim = entries[i].simplex.dim();
            if dim < num_dims {
                out.push(dim, PersistencePair::new(entries[i].scale, entries[j].scale));
            }
        }
    }
    for (j, e) in entries.iter().enumerate() {
        let dim = e.simplex.dim();
        if r.lows()[j].is_none() && !is_birth_of_pair[j] && dim < num_dims {
            out.push(dim, PersistencePair::essential(e.scale));
        }
    }
    out
}

/// Persistence diagram of a sorted filtration.
pub fn diagram(filt: &Filtration) -> Result<PersistenceDiagram, PersistenceError> {
    diagram_with(filt, Reduction::Twist)
}

pub fn diagram_with(filt: &Filtration, reduction: Reduction) -> Result<PersistenceDiagram, PersistenceError> {
    let b = boundary_matrix(filt)?;
    let r = match reduction {
        Reduction::Standard => reduce_standard(&b),
        Reduction::Twist => reduce_twist(&b),
    };
    Ok(extract_pairs(&r, filt))
}

/// Twist reduction that gives up when `budget` runs out.
pub fn diagram_with_budget(
    filt: &Filtration,
    budget: &Budget,
) -> Result<PersistenceDiagram, PersistenceError> {
    let b = boundary_matrix(filt)?;
    let r = reduce_twist_with_budget(&b, budget)?;
    Ok(extract_pairs(&r, filt))
}

/// Rank of the map H_p(K_i) -> H_p(K_j): the number of dimension-`p`
/// classes born at or before scale `i` and still alive at scale `j`.
pub fn persistent_betti(diag: &PersistenceDiagram, p: usize, i: f64, j: f64) -> usize {
    debug_assert!(i <= j);
    diag.dim(p)
        .iter()
        .filter(|pair| pair.birth <= i && pair.death > j)
        .count()
}
