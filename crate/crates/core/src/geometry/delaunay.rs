//! Incremental Bowyer-Watson triangulation in R^2 and R^3.
//!
//! The convex hull is closed off with "ghost" cells that join each hull facet
//! to a vertex at infinity, so no bounding super-simplex is needed and the
//! result is exact for any input the predicates can represent. A point is in
//! conflict with a finite cell when it lies strictly inside its circumsphere,
//! and with a ghost cell when it lies strictly beyond the hull facet or, when
//! coplanar with it, strictly inside the facet's circumcircle.
//!
//! Points are inserted in index order. Points exactly on a circumsphere never
//! conflict, so cospherical ties keep the cells formed by earlier (lower
//! index) points.

use std::collections::{HashMap, HashSet};

use super::predicates::{collinear, incircle, insphere, orient2, orient3, sign};
use super::GeometryError;
use crate::cloud::PointCloud;
use crate::simplex::Simplex;

const GHOST: usize = usize::MAX;

/// The Delaunay triangulation of a point cloud together with its face closure.
#[derive(Debug, Clone)]
pub struct DelaunayComplex {
    cloud: PointCloud,
    top_simplices: Vec<Simplex>,
    all_simplices: Vec<Simplex>,
    degenerate: bool,
}

impl DelaunayComplex {
    pub fn cloud(&self) -> &PointCloud {
        &self.cloud
    }

    /// Full-dimensional cells, lexicographically sorted.
    pub fn top_simplices(&self) -> &[Simplex] {
        &self.top_simplices
    }

    /// Every face of every cell, sorted by dimension then vertex list.
    pub fn all_simplices(&self) -> &[Simplex] {
        &self.all_simplices
    }

    /// Faces of dimension `dim`.
    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &Simplex> {
        self.all_simplices.iter().filter(move |s| s.dim() == dim)
    }

    /// True when some pair of adjacent cells is cospherical, i.e. the
    /// triangulation was one of several valid choices.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Computes the Delaunay triangulation of `cloud`.
pub fn delaunay(cloud: &PointCloud) -> Result<DelaunayComplex, GeometryError> {
    let dim = cloud.dim();
    if cloud.len() < dim + 1 {
        return Err(GeometryError::TooFewPoints {
            needed: dim + 1,
            found: cloud.len(),
        });
    }
    let mut tri = Triangulator::new(cloud)?;
    let seeded: HashSet<usize> = tri.seed[..=dim].iter().copied().collect();
    for p in 0..cloud.len() {
        if !seeded.contains(&p) {
            tri.insert(p)?;
        }
    }

    let mut top: Vec<Simplex> = tri
        .cells
        .iter()
        .filter(|c| !c.ghost)
        .map(|c| Simplex::from_sorted(&c.v[..=dim]))
        .collect();
    top.sort();

    let mut faces: HashSet<Simplex> = HashSet::new();
    for cell in &top {
        for d in 0..=dim {
            faces.extend(cell.faces_of_dim(d));
        }
    }
    let mut all: Vec<Simplex> = faces.into_iter().collect();
    all.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));

    let degenerate = tri.has_cospherical_neighbors();
    Ok(DelaunayComplex {
        cloud: cloud.clone(),
        top_simplices: top,
        all_simplices: all,
        degenerate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    On,
    Outside,
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    /// Sorted vertex ids; ghost cells end with `GHOST`. Slots past `dim`
    /// are unused.
    v: [usize; 4],
    ghost: bool,
    /// For ghost cells, the orientation sign of interior points relative to
    /// the finite facet.
    inner: i8,
}

type FacetKey = [usize; 3];

struct Triangulator<'a> {
    cloud: &'a PointCloud,
    dim: usize,
    cells: Vec<Cell>,
    seed: [usize; 4],
}

impl<'a> Triangulator<'a> {
    fn new(cloud: &'a PointCloud) -> Result<Self, GeometryError> {
        let dim = cloud.dim();
        let seed = initial_simplex(cloud)?;
        let mut tri = Self {
            cloud,
            dim,
            cells: Vec::new(),
            seed,
        };
        let mut first = [0usize; 4];
        first[..=dim].copy_from_slice(&seed[..=dim]);
        first[..=dim].sort_unstable();
        tri.cells.push(Cell {
            v: first,
            ghost: false,
            inner: 0,
        });
        for skip in 0..=dim {
            let facet: Vec<usize> = (0..=dim).filter(|&i| i != skip).map(|i| first[i]).collect();
            let cell = tri.ghost_cell(&facet);
            tri.cells.push(cell);
        }
        Ok(tri)
    }

    fn pt(&self, i: usize) -> &[f64] {
        self.cloud.point(i)
    }

    /// Builds a ghost cell over the finite facet `facet` (dim vertices).
    fn ghost_cell(&self, facet: &[usize]) -> Cell {
        let mut v = [0usize; 4];
        v[..self.dim].copy_from_slice(facet);
        v[..self.dim].sort_unstable();
        v[self.dim] = GHOST;
        let inner = self.seed[..=self.dim]
            .iter()
            .map(|&w| self.facet_orientation(&v[..self.dim], w))
            .find(|&s| s != 0)
            .expect("seed simplex is full-dimensional");
        Cell {
            v,
            ghost: true,
            inner,
        }
    }

    fn facet_orientation(&self, facet: &[usize], p: usize) -> i8 {
        match self.dim {
            2 => sign(orient2(self.pt(facet[0]), self.pt(facet[1]), self.pt(p))),
            _ => sign(orient3(
                self.pt(facet[0]),
                self.pt(facet[1]),
                self.pt(facet[2]),
                self.pt(p),
            )),
        }
    }

    /// Where `p` lies relative to the circumsphere of a finite cell.
    fn finite_side(&self, v: &[usize], p: usize) -> Side {
        let s = match self.dim {
            2 => {
                let (a, b, c) = (self.pt(v[0]), self.pt(v[1]), self.pt(v[2]));
                sign(orient2(a, b, c)) * sign(incircle(a, b, c, self.pt(p)))
            }
            _ => {
                let (a, b, c, d) = (self.pt(v[0]), self.pt(v[1]), self.pt(v[2]), self.pt(v[3]));
                sign(orient3(a, b, c, d)) * sign(insphere(a, b, c, d, self.pt(p)))
            }
        };
        match s {
            1 => Side::Inside,
            0 => Side::On,
            _ => Side::Outside,
        }
    }

    fn side(&self, cell: &Cell, p: usize) -> Side {
        if !cell.ghost {
            return self.finite_side(&cell.v[..=self.dim], p);
        }
        let facet = &cell.v[..self.dim];
        let o = self.facet_orientation(facet, p);
        if o == -cell.inner {
            return Side::Inside;
        }
        if o == cell.inner {
            return Side::Outside;
        }
        match self.dim {
            2 => self.on_open_segment(facet[0], facet[1], p),
            _ => self.coplanar_circle_side(facet, p),
        }
    }

    /// For `p` collinear with segment `ab`.
    fn on_open_segment(&self, a: usize, b: usize, p: usize) -> Side {
        let (a, b, p) = (self.pt(a), self.pt(b), self.pt(p));
        let axis = if a[0] != b[0] { 0 } else { 1 };
        let (lo, hi) = if a[axis] < b[axis] {
            (a[axis], b[axis])
        } else {
            (b[axis], a[axis])
        };
        if lo < p[axis] && p[axis] < hi {
            Side::Inside
        } else if p[axis] == lo || p[axis] == hi {
            Side::On
        } else {
            Side::Outside
        }
    }

    /// For `p` coplanar with triangle `facet`: the sphere through the
    /// triangle and any off-plane apex cuts the plane in the triangle's
    /// circumcircle, so an insphere test decides the circle test exactly.
    fn coplanar_circle_side(&self, facet: &[usize], p: usize) -> Side {
        let (a, b, c) = (self.pt(facet[0]), self.pt(facet[1]), self.pt(facet[2]));
        for axis in 0..3 {
            let mut apex = [a[0], a[1], a[2]];
            apex[axis] += 1.0 + a[axis].abs();
            let o = sign(orient3(a, b, c, &apex));
            if o != 0 {
                return match o * sign(insphere(a, b, c, &apex, self.pt(p))) {
                    1 => Side::Inside,
                    0 => Side::On,
                    _ => Side::Outside,
                };
            }
        }
        unreachable!("a non-degenerate triangle has an off-plane axis offset")
    }

    fn facets_of(&self, cell: &Cell) -> impl Iterator<Item = FacetKey> + '_ {
        let n = self.dim + 1;
        let v = cell.v;
        (0..n).map(move |skip| {
            let mut key = [0usize; 3];
            let mut k = 0;
            for (i, &x) in v[..n].iter().enumerate() {
                if i != skip {
                    key[k] = x;
                    k += 1;
                }
            }
            key
        })
    }

    fn insert(&mut self, p: usize) -> Result<(), GeometryError> {
        let conflicts: Vec<usize> = (0..self.cells.len())
            .filter(|&i| self.side(&self.cells[i], p) == Side::Inside)
            .collect();
        if conflicts.is_empty() {
            let first = (0..p)
                .find(|&q| self.pt(q) == self.pt(p))
                .unwrap_or(p);
            return Err(GeometryError::DuplicatePoint { first, second: p });
        }

        let mut counts: HashMap<FacetKey, usize> = HashMap::new();
        for &ci in &conflicts {
            for f in self.facets_of(&self.cells[ci]) {
                *counts.entry(f).or_insert(0) += 1;
            }
        }
        let mut boundary: Vec<FacetKey> = counts
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(f, _)| f)
            .collect();
        boundary.sort_unstable();

        for &ci in conflicts.iter().rev() {
            self.cells.swap_remove(ci);
        }

        let d = self.dim;
        for facet in boundary {
            let facet = &facet[..d];
            if facet.contains(&GHOST) {
                let mut finite: Vec<usize> = facet.iter().copied().filter(|&x| x != GHOST).collect();
                finite.push(p);
                let cell = self.ghost_cell(&finite);
                self.cells.push(cell);
            } else {
                let mut v = [0usize; 4];
                v[..d].copy_from_slice(facet);
                v[d] = p;
                v[..=d].sort_unstable();
                debug_assert!(self.finite_orientation(&v[..=d]) != 0);
                self.cells.push(Cell {
                    v,
                    ghost: false,
                    inner: 0,
                });
            }
        }
        Ok(())
    }

    fn finite_orientation(&self, v: &[usize]) -> i8 {
        match self.dim {
            2 => sign(orient2(self.pt(v[0]), self.pt(v[1]), self.pt(v[2]))),
            _ => sign(orient3(self.pt(v[0]), self.pt(v[1]), self.pt(v[2]), self.pt(v[3]))),
        }
    }

    /// Detects flippable ties: two cells sharing a facet whose opposite
    /// vertices lie on a common circumsphere (or, across the hull, two
    /// coplanar cocircular hull triangles).
    fn has_cospherical_neighbors(&self) -> bool {
        let d = self.dim;
        let mut by_facet: HashMap<FacetKey, Vec<usize>> = HashMap::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            for f in self.facets_of(cell) {
                by_facet.entry(f).or_default().push(ci);
            }
        }
        for (facet, cells) in &by_facet {
            let [a, b] = cells[..] else { continue };
            let (ca, cb) = (&self.cells[a], &self.cells[b]);
            let facet = &facet[..d];
            let opposite = |c: &Cell| *c.v[..=d].iter().find(|x| !facet.contains(x)).unwrap();
            match (ca.ghost, cb.ghost) {
                (false, false) => {
                    if self.finite_side(&ca.v[..=d], opposite(cb)) == Side::On {
                        return true;
                    }
                }
                (true, true) if d == 3 => {
                    let q = opposite(cb);
                    if self.facet_orientation(&ca.v[..3], q) == 0
                        && self.coplanar_circle_side(&ca.v[..3], q) == Side::On
                    {
                        return true;
                    }
                }
                _ => {}
            }
        }
        false
    }
}

/// Picks the first D+1 affinely independent points in index order.
fn initial_simplex(cloud: &PointCloud) -> Result<[usize; 4], GeometryError> {
    let n = cloud.len();
    let p = |i: usize| cloud.point(i);
    let mut seed = [0usize; 4];
    let i1 = (1..n)
        .find(|&j| p(j) != p(0))
        .ok_or(GeometryError::AffinelyDegenerateInput)?;
    let i2 = (i1 + 1..n)
        .find(|&j| !collinear(p(0), p(i1), p(j)))
        .ok_or(GeometryError::AffinelyDegenerateInput)?;
    seed[1] = i1;
    seed[2] = i2;
    if cloud.dim() == 3 {
        let i3 = (i2 + 1..n)
            .find(|&j| orient3(p(0), p(i1), p(i2), p(j)) != 0.0)
            .ok_or(GeometryError::AffinelyDegenerateInput)?;
        seed[3] = i3;
    }
    Ok(seed)
}
