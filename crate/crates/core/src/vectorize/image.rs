use super::VectorizeError;
use crate::diagram::PersistencePair;

/// Pixel grid for persistence images in (birth, persistence) coordinates.
///
/// Rows run along persistence, bottom row first; columns run along birth.
#[derive(Debug, Clone, PartialEq)]
pub struct PIGrid {
    birth_range: (f64, f64),
    persistence_range: (f64, f64),
    resolution: (usize, usize),
    sigma: f64,
}

impl PIGrid {
    pub fn new(
        birth_range: (f64, f64),
        persistence_range: (f64, f64),
        resolution: (usize, usize),
        sigma: f64,
    ) -> Result<Self, VectorizeError> {
        let ok = |r: (f64, f64)| r.0.is_finite() && r.1.is_finite() && r.1 > r.0;
        if !ok(birth_range) || !ok(persistence_range) {
            return Err(VectorizeError::InvalidGrid(format!(
                "ranges must be finite and non-degenerate: {birth_range:?}, {persistence_range:?}"
            )));
        }
        if resolution.0 == 0 || resolution.1 == 0 {
            return Err(VectorizeError::InvalidGrid("resolution must be at least 1x1".into()));
        }
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(VectorizeError::InvalidGrid(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self {
            birth_range,
            persistence_range,
            resolution,
            sigma,
        })
    }

    pub fn birth_range(&self) -> (f64, f64) {
        self.birth_range
    }

    pub fn persistence_range(&self) -> (f64, f64) {
        self.persistence_range
    }

    /// (rows, cols)
    pub fn resolution(&self) -> (usize, usize) {
        self.resolution
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.resolution.0 * self.resolution.1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pixel_height(&self) -> f64 {
        (self.persistence_range.1 - self.persistence_range.0) / self.resolution.0 as f64
    }

    pub fn pixel_width(&self) -> f64 {
        (self.birth_range.1 - self.birth_range.0) / self.resolution.1 as f64
    }

    /// Birth interval covered by column `c`.
    pub fn column_bounds(&self, c: usize) -> (f64, f64) {
        let w = self.pixel_width();
        let lo = self.birth_range.0 + c as f64 * w;
        (lo, lo + w)
    }

    /// Persistence interval covered by row `r`.
    pub fn row_bounds(&self, r: usize) -> (f64, f64) {
        let h = self.pixel_height();
        let lo = self.persistence_range.0 + r as f64 * h;
        (lo, lo + h)
    }

    /// Persistence weight, linear from 0 at zero persistence to 1 at the
    /// top of the grid.
    pub fn weight(&self, persistence: f64) -> f64 {
        let top = self.persistence_range.1;
        if top <= 0.0 || persistence <= 0.0 {
            0.0
        } else {
            persistence / top
        }
    }

    /// Pixel names `r{row}_c{col}` in output order.
    pub fn pixel_names(&self) -> Vec<String> {
        let (rows, cols) = self.resolution;
        (0..rows)
            .flat_map(|r| (0..cols).map(move |c| format!("r{r}_c{c}")))
            .collect()
    }
}

/// Fits one grid covering every finite pair of every diagram, so that the
/// same pair lands in the same pixel whichever diagram it came from.
///
/// A degenerate range is widened symmetrically to `max(1e-9, 1% of |value|)`.
/// `sigma` defaults to half the pixel height.
pub fn fit_pi_grid(
    diagrams: &[&[PersistencePair]],
    resolution: (usize, usize),
    sigma: Option<f64>,
) -> Result<PIGrid, VectorizeError> {
    let finite = diagrams.iter().flat_map(|d| d.iter()).filter(|p| !p.is_essential());
    let mut birth = (f64::INFINITY, f64::NEG_INFINITY);
    let mut pers = (f64::INFINITY, f64::NEG_INFINITY);
    for p in finite {
        birth = (birth.0.min(p.birth), birth.1.max(p.birth));
        pers = (pers.0.min(p.persistence()), pers.1.max(p.persistence()));
    }
    if birth.0 > birth.1 {
        return Err(VectorizeError::AllEmpty);
    }
    let birth = widen(birth);
    let pers = widen(pers);
    if resolution.0 == 0 || resolution.1 == 0 {
        return Err(VectorizeError::InvalidGrid("resolution must be at least 1x1".into()));
    }
    let sigma = sigma.unwrap_or((pers.1 - pers.0) / resolution.0 as f64 / 2.0);
    PIGrid::new(birth, pers, resolution, sigma)
}

fn widen(range: (f64, f64)) -> (f64, f64) {
    if range.1 > range.0 {
        return range;
    }
    let w = (0.01 * range.0.abs()).max(1e-9);
    (range.0 - w / 2.0, range.1 + w / 2.0)
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
}

/// Persistence image of one diagram, flattened row-major.
///
/// Each finite pair becomes an isotropic Gaussian centred at (birth,
/// persistence), scaled by its persistence weight; a pixel holds the exact
/// integral of that mass over the pixel. Essential pairs are ignored.
pub fn persistence_image(diagram: &[PersistencePair], grid: &PIGrid) -> Vec<f64> {
    let (rows, cols) = grid.resolution();
    let mut out = vec![0.0; rows * cols];
    let s = grid.sigma();
    for p in diagram.iter().filter(|p| !p.is_essential()) {
        let w = grid.weight(p.persistence());
        if w == 0.0 {
            continue;
        }
        let col_mass: Vec<f64> = (0..cols)
            .map(|c| {
                let (lo, hi) = grid.column_bounds(c);
                normal_cdf((hi - p.birth) / s) - normal_cdf((lo - p.birth) / s)
            })
            .collect();
        for r in 0..rows {
            let (lo, hi) = grid.row_bounds(r);
            let row_mass = normal_cdf((hi - p.persistence()) / s) - normal_cdf((lo - p.persistence()) / s);
            for (c, cm) in col_mass.iter().enumerate() {
                out[r * cols + c] += w * row_mass * cm;
            }
        }
    }
    out
}
