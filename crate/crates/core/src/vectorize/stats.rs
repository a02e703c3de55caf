use crate::diagram::PersistencePair;

/// Statistics per homology dimension: eight for midpoints, eight for lifespans.
pub const STATS_PER_DIM: usize = 16;

const STAT_NAMES: [&str; 8] = ["mean", "std", "skew", "kurtosis", "p25", "p50", "p75", "entropy"];

/// Summary statistics of the finite pairs of one diagram dimension.
///
/// `midpoint` and `lifespan` each hold mean, standard deviation, skewness,
/// excess kurtosis, the 25/50/75th percentiles and persistent entropy.
/// Every entry is NaN when there are no finite pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsVector {
    pub midpoint: [f64; 8],
    pub lifespan: [f64; 8],
}

impl StatsVector {
    pub fn to_vec(&self) -> Vec<f64> {
        self.midpoint.iter().chain(&self.lifespan).copied().collect()
    }
}

/// Logarithm used by persistent entropy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyLog {
    #[default]
    Natural,
    Base2,
}

impl EntropyLog {
    fn scale(self) -> f64 {
        match self {
            EntropyLog::Natural => 1.0,
            EntropyLog::Base2 => std::f64::consts::LN_2,
        }
    }
}

impl std::str::FromStr for EntropyLog {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e" | "ln" | "natural" => Ok(EntropyLog::Natural),
            "2" | "log2" => Ok(EntropyLog::Base2),
            _ => Err(format!("unknown log base '{s}' (expected e or 2)")),
        }
    }
}

pub fn persistence_stats(pairs: &[PersistencePair]) -> StatsVector {
    persistence_stats_with(pairs, EntropyLog::Natural)
}

pub fn persistence_stats_with(pairs: &[PersistencePair], log: EntropyLog) -> StatsVector {
    let finite: Vec<&PersistencePair> = pairs.iter().filter(|p| !p.is_essential()).collect();
    let mids: Vec<f64> = finite.iter().map(|p| p.midpoint()).collect();
    let lives: Vec<f64> = finite.iter().map(|p| p.persistence()).collect();
    StatsVector {
        midpoint: summary(&mids, log),
        lifespan: summary(&lives, log),
    }
}

fn summary(values: &[f64], log: EntropyLog) -> [f64; 8] {
    if values.is_empty() {
        return [f64::NAN; 8];
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let moment = |k: i32| values.iter().map(|v| (v - mean).powi(k)).sum::<f64>() / n;
    let m2 = moment(2);
    let (skew, kurt) = if m2 > 0.0 {
        (moment(3) / m2.powf(1.5), moment(4) / (m2 * m2) - 3.0)
    } else {
        (0.0, -3.0)
    };
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    [
        mean,
        m2.sqrt(),
        skew,
        kurt,
        percentile(&sorted, 25.0),
        percentile(&sorted, 50.0),
        percentile(&sorted, 75.0),
        persistent_entropy(values) / log.scale(),
    ]
}

/// Linear interpolation between closest ranks.
fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Shannon entropy (natural log) of `values` normalised to sum to one.
/// NaN when the values sum to zero or there are none.
pub fn persistent_entropy(values: &[f64]) -> f64 {
    let total: f64 = values.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return f64::NAN;
    }
    -values
        .iter()
        .filter(|&&v| v > 0.0)
        .map(|v| {
            let p = v / total;
            p * p.ln()
        })
        .sum::<f64>()
}

/// Concatenated statistics for each diagram dimension, 16 values per dimension.
pub fn stats_feature_vector(diagrams: &[&[PersistencePair]]) -> Vec<f64> {
    stats_feature_vector_with(diagrams, EntropyLog::Natural)
}

pub fn stats_feature_vector_with(diagrams: &[&[PersistencePair]], log: EntropyLog) -> Vec<f64> {
    diagrams
        .iter()
        .flat_map(|d| persistence_stats_with(d, log).to_vec())
        .collect()
}

/// Column names matching [`stats_feature_vector`], e.g. `H1_L_entropy`.
pub fn stats_feature_names(num_dims: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(num_dims * STATS_PER_DIM);
    for p in 0..num_dims {
        for kind in ["M", "L"] {
            for stat in STAT_NAMES {
                names.push(format!("H{p}_{kind}_{stat}"));
            }
        }
    }
    names
}
