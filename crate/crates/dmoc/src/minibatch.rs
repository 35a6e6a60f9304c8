//! Minibatch curve estimation: only pairs inside equally sized batches are
//! visited, for cost O(BC^2) = O(NC) instead of O(N^2). The result
//! underestimates the exact curve pointwise, since within-batch pairs are a
//! subset of all pairs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dmoc::{compute_dmoc, scan_pairs, DmocCurve, Estimator, PairScan, Rows};
use crate::error::{DmocError, Result};
use crate::grid::Grid;
use crate::metric::DataSet;

/// Partition of the first `B*C` rows into `B` batches of size `C`. The tail
/// of `N mod C` rows is dropped so all batches are evenly sized. Shuffling
/// is opt-in and always seeded, so a plan reproduces its curve exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatchPlan {
    pub batch_size: usize,
    pub n_batches: usize,
    pub shuffle_seed: Option<u64>,
    pub dropped_tail: usize,
}

impl BatchPlan {
    pub fn new(batch_size: usize, n_points: usize, shuffle_seed: Option<u64>) -> Result<Self> {
        if batch_size < 2 || batch_size > n_points {
            return Err(DmocError::InvalidBatchSize {
                c: batch_size,
                n: n_points,
            });
        }
        let n_batches = n_points / batch_size;
        Ok(BatchPlan {
            batch_size,
            n_batches,
            shuffle_seed,
            dropped_tail: n_points - n_batches * batch_size,
        })
    }

    /// Rows that participate in some batch.
    pub fn retained(&self) -> usize {
        self.n_batches * self.batch_size
    }

    /// Within-batch pairs the estimator will visit: `B * C(C-1)/2`.
    pub fn pair_budget(&self) -> u64 {
        let c = self.batch_size as u64;
        self.n_batches as u64 * c * (c - 1) / 2
    }

    fn n_points(&self) -> usize {
        self.retained() + self.dropped_tail
    }
}

/// Algorithm: per batch, the same bucket-and-prefix-max scan as the exact
/// estimator; batch results merge by pointwise max. With `shuffle_seed` set,
/// rows are permuted by a seeded pseudo-random shuffle before batching.
///
/// The returned curve has `estimator = Minibatch` and its metadata covers
/// exactly the within-batch pairs.
pub fn compute_dmoc_minibatch(ds: &DataSet, grid: &Grid, plan: &BatchPlan) -> Result<DmocCurve> {
    let n = ds.n_points();
    if plan.n_points() != n {
        return Err(DmocError::InvalidParameter(format!(
            "batch plan was built for {} points, dataset has {}",
            plan.n_points(),
            n
        )));
    }
    let order: Option<Vec<usize>> = plan.shuffle_seed.map(|seed| {
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
        order
    });

    let c = plan.batch_size;
    let scan = (0..plan.n_batches)
        .into_par_iter()
        .map(|b| {
            let rows = match &order {
                Some(o) => Rows::Mapped(&o[b * c..(b + 1) * c]),
                None => Rows::Span { start: b * c, len: c },
            };
            scan_pairs(ds, grid, rows)
        })
        .reduce(|| PairScan::new(grid.len()), PairScan::merge);

    Ok(DmocCurve::from_scan(
        grid.clone(),
        scan,
        Estimator::Minibatch,
        plan.retained(),
    ))
}

/// One minibatch run of a convergence study.
#[derive(Debug, Clone)]
pub struct MinibatchRun {
    pub batch_size: usize,
    pub curve: DmocCurve,
    /// Per-scale gap `exact - minibatch`; nonnegative by the subset property.
    pub gaps: Vec<f64>,
}

/// Exact curve plus one minibatch curve per requested batch size, with
/// per-scale gaps.
#[derive(Debug, Clone)]
pub struct ConvergenceStudy {
    pub exact: DmocCurve,
    pub runs: Vec<MinibatchRun>,
}

/// Run the minibatch estimator across a list of batch sizes and report each
/// curve's gap to the exact one.
pub fn convergence_study(
    ds: &DataSet,
    grid: &Grid,
    batch_sizes: &[usize],
    shuffle_seed: Option<u64>,
) -> Result<ConvergenceStudy> {
    let exact = compute_dmoc(ds, grid)?;
    let mut runs = Vec::with_capacity(batch_sizes.len());
    for &c in batch_sizes {
        let plan = BatchPlan::new(c, ds.n_points(), shuffle_seed)?;
        let curve = compute_dmoc_minibatch(ds, grid, &plan)?;
        let gaps = exact
            .omega()
            .iter()
            .zip(curve.omega())
            .map(|(e, m)| e - m)
            .collect();
        runs.push(MinibatchRun {
            batch_size: c,
            curve,
            gaps,
        });
    }
    Ok(ConvergenceStudy { exact, runs })
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

    fn random_ds(seed: u64, n: usize, dx: usize, dy: usize) -> DataSet {
        let mut state = seed;
        let mut draw = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        DataSet::euclidean(
            Array2::from_shape_vec((n, dx), (0..n * dx).map(|_| draw() * 3.0).collect()).unwrap(),
            Array2::from_shape_vec((n, dy), (0..n * dy).map(|_| draw()).collect()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn full_batch_equals_exact() {
        let ds = random_ds(11, 23, 2, 2);
        let grid = Grid::exponential(32, 0.05, 5.0).unwrap();
        let plan = BatchPlan::new(23, 23, None).unwrap();
        let mb = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        let exact = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(mb.omega(), exact.omega());
        assert_eq!(mb.estimator(), Estimator::Minibatch);
        assert_eq!(mb.pairs_evaluated(), exact.pairs_evaluated());
    }

    #[test]
    fn cross_batch_pairs_are_invisible() {
        // only cross-batch pairs carry nonzero value distance
        let ds = ds_1d(&[0.0, 0.5, 1.0, 1.5], &[0.0, 0.0, 10.0, 10.0]);
        let grid = Grid::explicit(vec![0.5, 1.5]).unwrap();
        let plan = BatchPlan::new(2, 4, None).unwrap();
        let mb = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        assert_eq!(mb.omega(), &[0.0, 0.0]);
        let exact = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(exact.omega(), &[10.0, 10.0]);
    }

    #[test]
    fn constant_values_stay_zero() {
        let ds = ds_1d(&[0.0, 1.0, 2.0, 3.0, 4.0], &[1.0; 5]);
        let grid = Grid::linear(8, 0.5, 4.0).unwrap();
        let plan = BatchPlan::new(2, 5, Some(3)).unwrap();
        let mb = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        assert!(mb.omega().iter().all(|&w| w == 0.0));
    }

    #[test]
    fn rejects_bad_batch_sizes() {
        assert!(matches!(
            BatchPlan::new(1, 10, None),
            Err(DmocError::InvalidBatchSize { .. })
        ));
        assert!(matches!(
            BatchPlan::new(11, 10, None),
            Err(DmocError::InvalidBatchSize { .. })
        ));
    }

    #[test]
    fn tail_is_dropped_and_pair_budget_matches() {
        let plan = BatchPlan::new(2, 5, None).unwrap();
        assert_eq!(plan.n_batches, 2);
        assert_eq!(plan.dropped_tail, 1);
        assert_eq!(plan.pair_budget(), 2);

        let ds = ds_1d(&[0.0, 1.0, 2.0, 3.0, 100.0], &[0.0, 1.0, 2.0, 3.0, 4.0]);
        let grid = Grid::linear(4, 1.0, 4.0).unwrap();
        let mb = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        assert_eq!(mb.pairs_evaluated(), plan.pair_budget());
        // the tail row at 100.0 never participates
        assert!(mb.meta().diameter <= 3.0);
    }

    #[test]
    fn seeded_shuffle_is_deterministic() {
        let ds = random_ds(77, 31, 3, 1);
        let grid = Grid::exponential(25, 0.02, 6.0).unwrap();
        let plan = BatchPlan::new(7, 31, Some(42)).unwrap();
        let a = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        let b = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
        assert_eq!(a.omega(), b.omega());
        assert_eq!(a.meta(), b.meta());
        // a different seed generally visits different pairs
        let plan2 = BatchPlan::new(7, 31, Some(43)).unwrap();
        let c = compute_dmoc_minibatch(&ds, &grid, &plan2).unwrap();
        assert_eq!(c.pairs_evaluated(), a.pairs_evaluated());
    }

    #[test]
    fn underestimates_exact_pointwise() {
        for seed in 0..8 {
            let ds = random_ds(seed, 26, 2, 2);
            let grid = Grid::exponential(30, 0.05, 6.0).unwrap();
            let exact = compute_dmoc(&ds, &grid).unwrap();
            for c in [2, 3, 5, 13, 26] {
                let plan = BatchPlan::new(c, 26, Some(seed)).unwrap();
                let mb = compute_dmoc_minibatch(&ds, &grid, &plan).unwrap();
                for (m, e) in mb.omega().iter().zip(exact.omega()) {
                    assert!(m <= e);
                }
            }
        }
    }

    #[test]
    fn convergence_study_gaps() {
        let ds = ds_1d(&[0.0, 0.5, 1.0, 1.5], &[0.0, 0.0, 10.0, 10.0]);
        let grid = Grid::explicit(vec![0.5, 1.5]).unwrap();
        let study = convergence_study(&ds, &grid, &[2, 4], None).unwrap();
        assert_eq!(study.runs[0].gaps, vec![10.0, 10.0]);
        assert_eq!(study.runs[1].gaps, vec![0.0, 0.0]);
    }
}
