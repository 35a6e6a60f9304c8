//! Exact curve estimation: the largest value distance among site pairs
//! within each scale, for every scale of a grid.
//!
//! Each pair is assigned to the smallest bucket whose scale covers its site
//! distance (a constant-time lookup on structured grids); a prefix max over
//! buckets then yields the whole curve. Total cost O(N^2 + K) instead of the
//! O(N^2 K) of the direct triple loop, with identical results: both compute
//! a floating-point max over exactly the same value set per scale.

use rayon::prelude::*;

use crate::error::{DmocError, Result};
use crate::grid::Grid;
use crate::metric::{DataSet, GeometrySummary};

/// Which algorithm produced a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    Exact,
    Minibatch,
}

impl Estimator {
    pub fn name(&self) -> &'static str {
        match self {
            Estimator::Exact => "exact",
            Estimator::Minibatch => "minibatch",
        }
    }
}

/// A grid together with the nondecreasing curve values on it.
///
/// `omega[k]` is zero when no visited pair sits within `t_k`, and at
/// `t_k >= diameter` it equals the largest visited value distance. For the
/// minibatch estimator "visited" means within-batch pairs only, and `meta`
/// summarizes exactly those pairs (its separation is an upper bound on the
/// true separation distance, its diameter a lower bound on the data
/// diameter).
#[derive(Debug, Clone, PartialEq)]
pub struct DmocCurve {
    grid: Grid,
    omega: Vec<f64>,
    meta: GeometrySummary,
    estimator: Estimator,
    pairs_evaluated: u64,
    zero_distance_jump: bool,
}

impl DmocCurve {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    pub fn meta(&self) -> &GeometrySummary {
        &self.meta
    }

    pub fn estimator(&self) -> Estimator {
        self.estimator
    }

    /// Number of site pairs the estimator actually visited.
    pub fn pairs_evaluated(&self) -> u64 {
        self.pairs_evaluated
    }

    /// True when duplicate sites carry differing values: the curve is then
    /// strictly positive at every scale and no finite Lipschitz constant
    /// exists for the sampled map.
    pub fn zero_distance_jump(&self) -> bool {
        self.zero_distance_jump
    }

    pub(crate) fn from_scan(grid: Grid, scan: PairScan, estimator: Estimator, n_points: usize) -> Self {
        let mut omega = scan.bucket_max;
        let mut running = 0.0_f64;
        for w in omega.iter_mut() {
            running = running.max(*w);
            *w = running;
        }
        DmocCurve {
            grid,
            omega,
            meta: GeometrySummary {
                separation: scan.min_r,
                diameter: scan.max_r,
                fill: None,
                n_points,
            },
            estimator,
            pairs_evaluated: scan.pairs,
            zero_distance_jump: scan.zero_distance_jump,
        }
    }
}

/// Which dataset rows a pair scan ranges over.
#[derive(Clone, Copy)]
pub(crate) enum Rows<'a> {
    /// Original rows `start..start + len`.
    Span { start: usize, len: usize },
    /// Rows given by a permuted index slice.
    Mapped(&'a [usize]),
}

impl Rows<'_> {
    #[inline]
    fn len(&self) -> usize {
        match self {
            Rows::Span { len, .. } => *len,
            Rows::Mapped(m) => m.len(),
        }
    }

    #[inline]
    fn get(&self, p: usize) -> usize {
        match self {
            Rows::Span { start, .. } => start + p,
            Rows::Mapped(m) => m[p],
        }
    }
}

/// Worker-local accumulator for one partition of the pair set. Merging is a
/// pointwise `f64::max`, which is order-independent for non-NaN inputs, so
/// any partitioning yields the same curve.
pub(crate) struct PairScan {
    bucket_max: Vec<f64>,
    min_r: f64,
    max_r: f64,
    zero_distance_jump: bool,
    pairs: u64,
}

impl PairScan {
    pub(crate) fn new(buckets: usize) -> Self {
        PairScan {
            bucket_max: vec![0.0; buckets],
            min_r: f64::INFINITY,
            max_r: f64::NEG_INFINITY,
            zero_distance_jump: false,
            pairs: 0,
        }
    }

    #[inline]
    fn record(&mut self, grid: &Grid, r: f64, s: f64) {
        self.pairs += 1;
        self.min_r = self.min_r.min(r);
        self.max_r = self.max_r.max(r);
        if r == 0.0 && s > 0.0 {
            self.zero_distance_jump = true;
        }
        if let Some(k) = grid.bucket(r) {
            if s > self.bucket_max[k] {
                self.bucket_max[k] = s;
            }
        }
    }

    pub(crate) fn merge(mut self, other: PairScan) -> Self {
        for (a, b) in self.bucket_max.iter_mut().zip(&other.bucket_max) {
            *a = a.max(*b);
        }
        self.min_r = self.min_r.min(other.min_r);
        self.max_r = self.max_r.max(other.max_r);
        self.zero_distance_jump |= other.zero_distance_jump;
        self.pairs += other.pairs;
        self
    }
}

/// Scan all pairs among the given rows, in parallel over the leading index.
pub(crate) fn scan_pairs(ds: &DataSet, grid: &Grid, rows: Rows<'_>) -> PairScan {
    let m = rows.len();
    if m < 2 {
        return PairScan::new(grid.len());
    }
    let dx = ds.site_dim();
    let dy = ds.value_dim();
    let xs = ds.site_slice();
    let ys = ds.value_slice();
    let mx = ds.metric_x();
    let my = ds.metric_y();
    (0..m - 1)
        .into_par_iter()
        .fold(
            || PairScan::new(grid.len()),
            |mut acc, p| {
                let i = rows.get(p);
                let xi = &xs[i * dx..(i + 1) * dx];
                let yi = &ys[i * dy..(i + 1) * dy];
                for q in p + 1..m {
                    let j = rows.get(q);
                    let r = mx.eval(xi, &xs[j * dx..(j + 1) * dx]);
                    let s = my.eval(yi, &ys[j * dy..(j + 1) * dy]);
                    acc.record(grid, r, s);
                }
                acc
            },
        )
        .reduce(|| PairScan::new(grid.len()), PairScan::merge)
}

/// Exact curve of a dataset on a grid: `omega[k]` is the largest value
/// distance over all site pairs within `t_k`. Pairs farther apart than the
/// last scale fall outside every bucket.
pub fn compute_dmoc(ds: &DataSet, grid: &Grid) -> Result<DmocCurve> {
    let n = ds.n_points();
    if n < 2 {
        return Err(DmocError::TooFewPoints { n, required: 2 });
    }
    let scan = scan_pairs(ds, grid, Rows::Span { start: 0, len: n });
    Ok(DmocCurve::from_scan(grid.clone(), scan, Estimator::Exact, n))
}

/// Exact curve evaluated on the dataset's own positive pair distances,
/// sorted ascending: for each distinct distance `z` the largest value
/// distance over pairs within `z`. Zero-distance pairs contribute to every
/// entry but are not scales themselves.
///
/// Materializes all N(N-1)/2 pair records; meant for desk-scale N. The
/// seminorm routines stream pairs instead and have no such footprint.
pub fn dmoc_at_pair_distances(ds: &DataSet) -> Result<Vec<(f64, f64)>> {
    let n = ds.n_points();
    if n < 2 {
        return Err(DmocError::TooFewPoints { n, required: 2 });
    }
    let mut pairs: Vec<(f64, f64)> = ds.all_pairs().map(|p| (p.r, p.s)).collect();
    if pairs.iter().all(|&(r, _)| r == 0.0) {
        return Err(DmocError::NoPositiveDistance);
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut out = Vec::new();
    let mut running = 0.0_f64;
    let mut idx = 0;
    while idx < pairs.len() {
        let z = pairs[idx].0;
        while idx < pairs.len() && pairs[idx].0 == z {
            running = running.max(pairs[idx].1);
            idx += 1;
        }
        if z > 0.0 {
            out.push((z, running));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    fn ds_1d(sites: &[f64], values: &[f64]) -> DataSet {
        let n = sites.len();
        DataSet::euclidean(
            Array2::from_shape_vec((n, 1), sites.to_vec()).unwrap(),
            Array2::from_shape_vec((n, 1), values.to_vec()).unwrap(),
        )
        .unwrap()
    }

    // Printed triple loop, kept independent of the bucket path.
    fn naive_curve(ds: &DataSet, scales: &[f64]) -> Vec<f64> {
        let n = ds.n_points();
        let mut omega = vec![0.0_f64; scales.len()];
        for (k, &t) in scales.iter().enumerate() {
            for i in 0..n {
                for j in i + 1..n {
                    let r = ds.metric_x().distance(ds.site(i), ds.site(j)).unwrap();
                    let s = ds.metric_y().distance(ds.value(i), ds.value(j)).unwrap();
                    if r <= t {
                        omega[k] = omega[k].max(s);
                    }
                }
            }
        }
        omega
    }

    #[test]
    fn three_point_example() {
        // pairs: (0,1): r=0.5 s=0.25; (0,2): r=1 s=1; (1,2): r=0.5 s=0.75
        let ds = ds_1d(&[0.0, 0.5, 1.0], &[0.0, 0.25, 1.0]);
        let grid = Grid::explicit(vec![0.25, 0.5, 1.0]).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(curve.omega(), &[0.0, 0.75, 1.0]);
        assert_eq!(curve.omega(), naive_curve(&ds, grid.scales()).as_slice());
        assert_eq!(curve.estimator(), Estimator::Exact);
        assert_eq!(curve.pairs_evaluated(), 3);
        assert_eq!(curve.meta().separation, 0.5);
        assert_eq!(curve.meta().diameter, 1.0);
        assert!(!curve.zero_distance_jump());
    }

    #[test]
    fn constant_values_give_zero_curve() {
        let ds = ds_1d(&[0.0, 0.3, 0.9, 2.0], &[7.0, 7.0, 7.0, 7.0]);
        let grid = Grid::exponential(16, 0.1, 4.0).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert!(curve.omega().iter().all(|&w| w == 0.0));
    }

    #[test]
    fn single_pair_example() {
        let ds = ds_1d(&[0.0, 1.0], &[0.0, 3.0]);
        let grid = Grid::explicit(vec![0.5, 1.0]).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(curve.omega(), &[0.0, 3.0]);
    }

    #[test]
    fn rejects_single_point() {
        let ds = ds_1d(&[0.0], &[0.0]);
        let grid = Grid::explicit(vec![1.0]).unwrap();
        assert!(matches!(
            compute_dmoc(&ds, &grid),
            Err(DmocError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn pairs_beyond_last_scale_are_ignored() {
        let ds = ds_1d(&[0.0, 0.5, 10.0], &[0.0, 1.0, 50.0]);
        let grid = Grid::explicit(vec![0.5, 1.0]).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(curve.omega(), &[1.0, 1.0]);
    }

    #[test]
    fn duplicate_sites_with_differing_values_flagged() {
        let ds = ds_1d(&[0.0, 0.0, 1.0], &[0.0, 2.0, 5.0]);
        let grid = Grid::explicit(vec![0.5, 1.0]).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert!(curve.zero_distance_jump());
        // the zero-distance pair is admitted at every positive scale
        assert_eq!(curve.omega()[0], 2.0);
        assert_eq!(curve.meta().separation, 0.0);
    }

    #[test]
    fn matches_naive_loop_on_random_data() {
        let mut state = 0x5eed_u64;
        let mut draw = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for trial in 0..10 {
            let n = 3 + (draw() * 30.0) as usize;
            let dx = 1 + trial % 4;
            let dy = 1 + trial % 3;
            let sites: Vec<f64> = (0..n * dx).map(|_| draw() * 4.0).collect();
            let values: Vec<f64> = (0..n * dy).map(|_| draw() * 2.0 - 1.0).collect();
            let ds = DataSet::euclidean(
                Array2::from_shape_vec((n, dx), sites).unwrap(),
                Array2::from_shape_vec((n, dy), values).unwrap(),
            )
            .unwrap();
            let grid = Grid::exponential(40, 0.05, 6.0).unwrap();
            let curve = compute_dmoc(&ds, &grid).unwrap();
            assert_eq!(curve.omega(), naive_curve(&ds, grid.scales()).as_slice());
        }
    }

    #[test]
    fn pair_distance_curve_example() {
        let ds = ds_1d(&[0.0, 0.5, 1.0], &[0.0, 0.25, 1.0]);
        let curve = dmoc_at_pair_distances(&ds).unwrap();
        assert_eq!(curve, vec![(0.5, 0.75), (1.0, 1.0)]);
    }

    #[test]
    fn pair_distance_curve_two_points() {
        let ds = ds_1d(&[0.0, 1.0], &[0.0, 3.0]);
        assert_eq!(dmoc_at_pair_distances(&ds).unwrap(), vec![(1.0, 3.0)]);
    }

    #[test]
    fn pair_distance_curve_constant_values() {
        let ds = ds_1d(&[0.0, 0.5, 1.0], &[2.0, 2.0, 2.0]);
        let curve = dmoc_at_pair_distances(&ds).unwrap();
        assert!(curve.iter().all(|&(_, w)| w == 0.0));
    }

    #[test]
    fn pair_distance_curve_rejects_all_identical_sites() {
        let ds = ds_1d(&[1.0, 1.0, 1.0], &[0.0, 1.0, 2.0]);
        assert!(matches!(
            dmoc_at_pair_distances(&ds),
            Err(DmocError::NoPositiveDistance)
        ));
    }

    #[test]
    fn pair_distance_curve_is_nondecreasing() {
        let mut state = 0xace_u64;
        let mut draw = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let sites: Vec<f64> = (0..40).map(|_| draw()).collect();
        let values: Vec<f64> = (0..40).map(|_| draw() * 3.0).collect();
        let ds = ds_1d(&sites, &values);
        let curve = dmoc_at_pair_distances(&ds).unwrap();
        for w in curve.windows(2) {
            assert!(w[0].0 < w[1].0);
            assert!(w[0].1 <= w[1].1);
        }
    }
}
