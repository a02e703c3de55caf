//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use delrips::bench::{median_seconds, run_bench, BenchConfig, CellStatus};
use delrips::datagen::{add_noise, sample_shape, ShapeClass};
use delrips::filtration::{
    alpha_from_delaunay, build, delaunay_rips_from_delaunay, Filtration, FiltrationSpec, Method,
};
use delrips::geometry::{delaunay, epsilon_perturb, hausdorff_distance, same_triangulation};
use delrips::instability::{four_point_cloud, four_point_filtration};
use delrips::metrics::{bottleneck, DiagonalCost};
use delrips::persistence::{boundary_matrix, diagram, diagram_with, reduce_standard, Reduction};
use delrips::vectorize::{
    fit_pi_grid, persistence_image, persistent_entropy, stats_feature_vector, STATS_PER_DIM,
};
use delrips::{PersistenceDiagram, PersistencePair, PointCloud, Simplex};
use rand::Rng;

use common::*;

// Tolerances and limits.
const FOUR_POINT_TOL: f64 = 1e-9;
const FOUR_POINT_TIME: Duration = Duration::from_secs(1);
const JUMP_MIN: f64 = 0.1;
const JUMP_TOL: f64 = 1e-9;
const STABILITY_CLOUDS: usize = 200;
const STABILITY_EPS: f64 = 1e-6;
const STABILITY_SLACK: f64 = 1e-12;
const STABILITY_TIME: Duration = Duration::from_secs(60);
const ORACLE_CLOUDS: usize = 500;
const ORACLE_TIME: Duration = Duration::from_secs(120);
const IDENTITY_CLOUDS: usize = 100;
const VR_COUNT_100: usize = 166_750;
const DR_BOUND_100: usize = 589;
const PI_LENGTH: usize = 55;
const STATS_LENGTH: usize = 48;
const ENTROPY_TOL: f64 = 1e-12;
const ADDITIVITY_TOL: f64 = 1e-12;
const TRIANGLE_SLACK: f64 = 1e-12;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn nonzero(pairs: &[PersistencePair]) -> Vec<(f64, f64)> {
    sorted_pairs(pairs).into_iter().filter(|p| p.0 != p.1).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let sqrt3 = 3f64.sqrt();
    for x in [0.01, 0.1, 0.2] {
        let dgm = diagram(&build(&four_point_cloud(x).unwrap(), &FiltrationSpec::new(Method::DelaunayRips, 1)).unwrap())
            .unwrap();
        let r = (1.0 - x + x * x).sqrt();
        let mut expected_h0 = vec![(0.0, r), (0.0, r), (0.0, sqrt3), (0.0, f64::INFINITY)];
        expected_h0.sort_by(|a, b| a.1.total_cmp(&b.1));
        let h0 = sorted_pairs(dgm.dim(0));
        check(h0.len() == 4, format!("x={x}: {} H0 pairs", h0.len()))?;
        for (got, want) in h0.iter().zip(&expected_h0) {
            let close = |a: f64, b: f64| a == b || (a - b).abs() <= FOUR_POINT_TOL;
            check(close(got.0, want.0) && close(got.1, want.1), format!("x={x}: H0 {got:?} vs {want:?}"))?;
        }
        let h1 = nonzero(dgm.dim(1));
        check(h1.len() == 1, format!("x={x}: {} nonzero H1 pairs", h1.len()))?;
        check(
            (h1[0].0 - sqrt3).abs() <= FOUR_POINT_TOL && (h1[0].1 - (2.0 - x)).abs() <= FOUR_POINT_TOL,
            format!("x={x}: H1 {:?}", h1[0]),
        )?;
    }
    let t = start.elapsed();
    check(t < FOUR_POINT_TIME, format!("took {t:?}"))?;
    Ok(format!("x in {{0.01, 0.1, 0.2}} within {FOUR_POINT_TOL:e}, {t:.2?}"))
}

fn criterion_2() -> Outcome {
    // columns a b c d bd cd ab ac ad abd acd
    const B: [[u8; 11]; 11] = [
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0; 11],
        [0; 11],
    ];
    const B_REDUCED: [[u8; 11]; 11] = [
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0; 11],
        [0; 11],
    ];
    let order = ["a", "b", "c", "d", "bd", "cd", "ab", "ac", "ad", "abd", "acd"];
    let label = |s: &Simplex| -> String { s.vertices().iter().map(|&v| ["a", "b", "c", "d"][v]).collect() };
    for x in [0.01, 0.1, 0.2] {
        let filt = four_point_filtration(x).unwrap();
        let names: Vec<String> = filt.simplices().map(label).collect();
        check(names == order, format!("x={x}: order {names:?}"))?;
        let b = boundary_matrix(&filt).unwrap();
        let dense_b = b.dense();
        check(dense_b.iter().zip(&B).all(|(r, e)| r[..] == e[..]), format!("x={x}: B differs"))?;
        let dense_r = reduce_standard(&b).dense();
        check(dense_r.iter().zip(&B_REDUCED).all(|(r, e)| r[..] == e[..]), format!("x={x}: reduced B differs"))?;
    }
    Ok("B and reduced B match bit for bit at x in {0.01, 0.1, 0.2}".into())
}

fn criterion_3() -> Outcome {
    let h1 = |x: f64| {
        diagram(&four_point_filtration(x).unwrap()).unwrap().dim(1).to_vec()
    };
    let (left, right) = (h1(-0.01), h1(0.01));
    let half = bottleneck(&left, &right, DiagonalCost::Half).unwrap().0;
    let full = bottleneck(&left, &right, DiagonalCost::Full).unwrap().0;
    let expected = (2.0 - 0.01) - 3f64.sqrt();
    check(half >= JUMP_MIN, format!("half-convention distance {half}"))?;
    check((full - expected).abs() <= JUMP_TOL, format!("full-convention distance {full} vs {expected}"))?;
    Ok(format!("half {half:.6} >= {JUMP_MIN}, full {full:.12} = (2-x)-sqrt3"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(4);
    let spec = FiltrationSpec::new(Method::DelaunayRips, 1);
    let (mut compared, mut violations, mut clouds) = (0usize, Vec::new(), 0usize);
    while clouds < STABILITY_CLOUDS {
        let n = rng.random_range(3..=25);
        let points = random_points2(&mut rng, n);
        let cloud = PointCloud::from_points2(&points).unwrap();
        let Ok(pair) = epsilon_perturb(&cloud, STABILITY_EPS, rng.random()) else {
            continue;
        };
        clouds += 1;
        if !same_triangulation(&pair).unwrap() {
            continue;
        }
        compared += 1;
        let dh = hausdorff_distance(pair.source(), pair.target()).unwrap();
        let a = diagram(&build(pair.source(), &spec).unwrap()).unwrap();
        let b = diagram(&build(pair.target(), &spec).unwrap()).unwrap();
        for p in 0..2 {
            let w = bottleneck(a.dim(p), b.dim(p), DiagonalCost::Half).unwrap().0;
            if w > 2.0 * dh + STABILITY_SLACK {
                violations.push(format!("cloud {clouds} H{p}: W {w:e} > 2 d_H {:e}", 2.0 * dh));
            }
        }
    }
    let t = start.elapsed();
    check(violations.is_empty(), violations.join("; "))?;
    check(t < STABILITY_TIME, format!("took {t:?}"))?;
    Ok(format!("{compared}/{STABILITY_CLOUDS} clouds kept their triangulation, 0 violations, {t:.2?}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(5);
    let canon = |d: &PersistenceDiagram, dims: usize| -> PairLists {
        (0..dims).map(|p| sorted_pairs(d.dim(p))).collect()
    };
    for i in 0..ORACLE_CLOUDS {
        let n = rng.random_range(3..=7);
        let points = if i % 2 == 0 {
            random_points2(&mut rng, n)
        } else {
            snapped_points2(&mut rng, n)
        };
        let cloud = PointCloud::from_points2(&points).unwrap();
        for max_hom_dim in [1, 2] {
            let vr = build(&cloud, &FiltrationSpec::new(Method::Rips, max_hom_dim)).unwrap();
            let std = canon(&diagram_with(&vr, Reduction::Standard).unwrap(), max_hom_dim + 1);
            let twist = canon(&diagram_with(&vr, Reduction::Twist).unwrap(), max_hom_dim + 1);
            check(std == twist, format!("cloud {i}: VR twist != standard"))?;
            let rows: Vec<&[f64]> = points.iter().map(|p| &p[..]).collect();
            let naive = naive_rips_pairs(&rows, max_hom_dim);
            check(std == naive, format!("cloud {i}: VR != powerset oracle\n{std:?}\n{naive:?}"))?;
        }
        if let Ok(dc) = delaunay(&cloud) {
            let dr = delaunay_rips_from_delaunay(&dc, 2);
            let std = canon(&diagram_with(&dr, Reduction::Standard).unwrap(), 2);
            let twist = canon(&diagram_with(&dr, Reduction::Twist).unwrap(), 2);
            check(std == twist, format!("cloud {i}: DR twist != standard"))?;
        } else {
            check(i % 2 == 1, format!("cloud {i}: generic cloud failed to triangulate"))?;
        }
    }
    let t = start.elapsed();
    check(t < ORACLE_TIME, format!("took {t:?}"))?;
    Ok(format!("{ORACLE_CLOUDS} clouds, exact equality, {t:.2?}"))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    for i in 0..IDENTITY_CLOUDS {
        let dim = if i % 2 == 0 { 2 } else { 3 };
        let n = rng.random_range(dim + 1..=40);
        let cloud = random_cloud(&mut rng, n, dim);
        let dc = delaunay(&cloud).unwrap();
        for cap in 1..=dim {
            let set = |f: &Filtration| f.simplices().cloned().collect::<BTreeSet<_>>();
            let dr = set(&delaunay_rips_from_delaunay(&dc, cap));
            let alpha = set(&alpha_from_delaunay(&dc, cap).unwrap());
            let del: BTreeSet<Simplex> = dc.all_simplices().iter().filter(|s| s.dim() <= cap).cloned().collect();
            check(dr == alpha, format!("cloud {i}, cap {cap}: DR and Alpha differ"))?;
            check(dr == del, format!("cloud {i}, cap {cap}: DR differs from Del(X)"))?;
        }
        let dr_full = build(&cloud, &FiltrationSpec::new(Method::DelaunayRips, dim - 1)).unwrap();
        let alpha_full = build(&cloud, &FiltrationSpec::new(Method::Alpha, dim - 1)).unwrap();
        check(
            dr_full.simplices().collect::<BTreeSet<_>>() == alpha_full.simplices().collect::<BTreeSet<_>>(),
            format!("cloud {i}: built filtrations differ"),
        )?;
    }
    Ok(format!("{IDENTITY_CLOUDS} clouds in R^2 and R^3, every dimension cap"))
}

fn criterion_7() -> Outcome {
    let mut rng = rng(7);
    let cloud = PointCloud::from_points2(&random_points2(&mut rng, 100)).unwrap();
    let vr = build(&cloud, &FiltrationSpec::new(Method::Rips, 1)).unwrap().len();
    let dr = build(&cloud, &FiltrationSpec::new(Method::DelaunayRips, 1)).unwrap().len();
    check(vr == VR_COUNT_100, format!("VR count {vr}"))?;
    check(dr <= DR_BOUND_100, format!("DR count {dr}"))?;

    let config = BenchConfig {
        shape: ShapeClass::Sphere { radius: 1.0 },
        noise: 0.1,
        sizes: vec![400],
        trials: 10,
        methods: vec![Method::DelaunayRips, Method::Rips],
        max_hom_dim: 1,
        ..BenchConfig::default()
    };
    let records = run_bench(&config, |_| {}).map_err(|e| e.to_string())?;
    let dr_t = median_seconds(&records, Method::DelaunayRips, 400).unwrap();
    let vr_t = median_seconds(&records, Method::Rips, 400).unwrap();
    let vr_status: BTreeSet<&str> = records
        .iter()
        .filter(|r| r.method == Method::Rips)
        .map(|r| r.status.as_str())
        .collect();
    check(
        records.iter().filter(|r| r.method == Method::DelaunayRips).all(|r| r.status == CellStatus::Ok),
        "a DR cell did not finish",
    )?;
    check(dr_t < vr_t, format!("median DR {dr_t} s vs VR {vr_t} s"))?;
    Ok(format!(
        "VR {vr}, DR {dr} at n=100; n=400 sphere median DR {dr_t:.4} s vs VR {vr_t} s (VR cells: {vr_status:?})"
    ))
}

fn criterion_8() -> Outcome {
    let four = diagram(&four_point_filtration(0.1).unwrap()).unwrap();
    let stats = stats_feature_vector(&[four.dim(0), four.dim(1), four.dim(2)]);
    check(stats.len() == STATS_LENGTH, format!("stats length {}", stats.len()))?;
    check(stats[..32].iter().all(|v| v.is_finite()), "H0/H1 stats not finite")?;
    check(stats[32..].iter().all(|v| v.is_nan()), "empty H2 stats are not NaN")?;
    let empty = stats_feature_vector(&[&[], &[], &[]]);
    check(empty.len() == STATS_LENGTH && empty.iter().all(|v| v.is_nan()), "empty diagrams are not all NaN")?;
    check(STATS_PER_DIM * 3 == STATS_LENGTH, "per-dimension count")?;

    let diagrams: Vec<PersistenceDiagram> = ["sphere", "torus", "three_clusters"]
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let c = add_noise(&sample_shape(name.parse().unwrap(), 60, i as u64).unwrap(), 0.05, 9).unwrap();
            diagram(&build(&c, &FiltrationSpec::new(Method::DelaunayRips, 2)).unwrap())
                .unwrap()
                .without_zero_persistence()
        })
        .collect();
    let resolutions = [(5, 1), (5, 5), (5, 5)];
    let grids: Vec<_> = resolutions
        .iter()
        .enumerate()
        .map(|(p, &res)| {
            let slices: Vec<&[PersistencePair]> = diagrams.iter().map(|d| d.dim(p)).collect();
            fit_pi_grid(&slices, res, None).unwrap()
        })
        .collect();
    for d in &diagrams {
        let v: Vec<f64> = grids.iter().enumerate().flat_map(|(p, g)| persistence_image(d.dim(p), g)).collect();
        check(v.len() == PI_LENGTH, format!("PI length {}", v.len()))?;
    }
    Ok(format!("stats {STATS_LENGTH} (NaN for empty), PI {PI_LENGTH}"))
}

fn criterion_9() -> Outcome {
    let mut rng = rng(9);

    // persistence images add over diagram union
    for _ in 0..200 {
        let a = to_pairs(&random_small_diagram(&mut rng, 6));
        let b = to_pairs(&random_small_diagram(&mut rng, 6));
        let union: Vec<PersistencePair> = a.iter().chain(&b).copied().collect();
        let Ok(grid) = fit_pi_grid(&[&union], (3, 4), None) else { continue };
        let (pa, pb, pu) = (persistence_image(&a, &grid), persistence_image(&b, &grid), persistence_image(&union, &grid));
        for k in 0..pu.len() {
            let sum = pa[k] + pb[k];
            check(
                (pu[k] - sum).abs() <= ADDITIVITY_TOL * sum.abs().max(1.0),
                format!("PI additivity: {} vs {sum}", pu[k]),
            )?;
        }
    }

    // entropy of k equal bars
    for k in 1..=100usize {
        let len = rng.random_range(0.01..10.0);
        let e = persistent_entropy(&vec![len; k]);
        check((e - (k as f64).ln()).abs() <= ENTROPY_TOL, format!("entropy of {k} bars: {e}"))?;
    }

    // boundary of a boundary
    let mut checked = 0;
    for i in 0..60 {
        let dim = 2 + i % 2;
        let n = rng.random_range(dim + 1..=14);
        let cloud = random_cloud(&mut rng, n, dim);
        for method in [Method::Rips, Method::DelaunayRips, Method::Alpha] {
            let b = boundary_matrix(&build(&cloud, &FiltrationSpec::new(method, dim - 1)).unwrap()).unwrap();
            for col in b.columns() {
                let mut acc = BTreeSet::new();
                for &face in col {
                    for &r in &b.columns()[face] {
                        if !acc.insert(r) {
                            acc.remove(&r);
                        }
                    }
                }
                check(acc.is_empty(), format!("boundary of boundary nonzero ({method})"))?;
                checked += 1;
            }
        }
    }

    // bottleneck against exhaustive search; symmetry; triangle inequality
    for _ in 0..400 {
        let x = random_small_diagram(&mut rng, 5);
        let y = random_small_diagram(&mut rng, 5);
        let z = random_small_diagram(&mut rng, 5);
        let (px, py, pz) = (to_pairs(&x), to_pairs(&y), to_pairs(&z));
        for (cost, full) in [(DiagonalCost::Half, false), (DiagonalCost::Full, true)] {
            let d = |a: &[PersistencePair], b: &[PersistencePair]| bottleneck(a, b, cost).unwrap().0;
            let dxy = d(&px, &py);
            let oracle = exhaustive_bottleneck(&x, &y, full);
            check(dxy == oracle, format!("{cost}: bottleneck {dxy} vs exhaustive {oracle} on {x:?} / {y:?}"))?;
            if !full {
                // a point is never closer to a diagonal point than to the diagonal
                let raw = exhaustive_bottleneck_raw(&x, &y, false);
                check(dxy == raw, format!("half: {dxy} vs {raw} with diagonal points kept"))?;
            }
            check(dxy == d(&py, &px), "bottleneck not symmetric")?;
            if !full {
                let (dxz, dyz) = (d(&px, &pz), d(&py, &pz));
                check(dxz <= dxy + dyz + TRIANGLE_SLACK, format!("triangle inequality: {dxz} > {dxy} + {dyz}"))?;
            }
        }
    }
    // The full convention charges more than the distance to the diagonal, so
    // it is not a metric: {(0,1)} -> {(0.25,0.75)} -> {} shortcuts {(0,1)} -> {}.
    let full = |a: &[(f64, f64)], b: &[(f64, f64)]| bottleneck(&to_pairs(a), &to_pairs(b), DiagonalCost::Full).unwrap().0;
    check(full(&[(0.0, 1.0)], &[]) > full(&[(0.0, 1.0)], &[(0.25, 0.75)]) + full(&[(0.25, 0.75)], &[]), "full convention counterexample")?;
    Ok(format!("PI additivity, entropy ln k, {checked} columns with zero boundary, bottleneck = exhaustive"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("four-point diagrams", criterion_1),
        ("boundary matrices", criterion_2),
        ("instability jump", criterion_3),
        ("stability bound", criterion_4),
        ("reduction oracles", criterion_5),
        ("DR and Alpha complexes", criterion_6),
        ("size separation", criterion_7),
        ("vector shapes", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
