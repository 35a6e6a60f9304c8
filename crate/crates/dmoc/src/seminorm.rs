//! Weight-normalized curves, the grid-free discrete seminorm over exact pair
//! distances, and Lipschitz estimation as its identity-weight special case.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dmoc::DmocCurve;
use crate::error::{DmocError, Result};
use crate::metric::DataSet;
use crate::minibatch::BatchPlan;

/// Nondecreasing positive weight for seminorm normalization.
#[derive(Debug, Clone, PartialEq)]
pub enum RhoFunction {
    Identity,
    Power { beta: f64 },
    /// Piecewise-linear interpolation between monotone knots, constant
    /// beyond the first and last knot.
    Table { knots: Vec<(f64, f64)> },
}

impl RhoFunction {
    pub fn identity() -> Self {
        RhoFunction::Identity
    }

    pub fn power(beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta > 0.0) {
            return Err(DmocError::InvalidRho(format!(
                "power exponent must be positive and finite, got {beta}"
            )));
        }
        Ok(RhoFunction::Power { beta })
    }

    /// Knots must have strictly increasing positive abscissae and
    /// nondecreasing positive values.
    pub fn table(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(DmocError::InvalidRho("table needs at least one knot".into()));
        }
        for (i, &(x, y)) in knots.iter().enumerate() {
            if !(x.is_finite() && x > 0.0) {
                return Err(DmocError::InvalidRho(format!(
                    "knot {i} abscissa must be positive and finite, got {x}"
                )));
            }
            if !(y.is_finite() && y > 0.0) {
                return Err(DmocError::InvalidRho(format!(
                    "knot {i} value must be positive and finite, got {y}"
                )));
            }
            if i > 0 {
                let (px, py) = knots[i - 1];
                if x <= px {
                    return Err(DmocError::InvalidRho(format!(
                        "knot abscissae must be strictly increasing, got {px} then {x}"
                    )));
                }
                if y < py {
                    return Err(DmocError::InvalidRho(format!(
                        "knot values must be nondecreasing, got {py} then {y}"
                    )));
                }
            }
        }
        Ok(RhoFunction::Table { knots })
    }

    /// Weight at scale `t > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            RhoFunction::Identity => t,
            RhoFunction::Power { beta } => t.powf(*beta),
            RhoFunction::Table { knots } => {
                let first = knots[0];
                let last = knots[knots.len() - 1];
                if t <= first.0 {
                    return first.1;
                }
                if t >= last.0 {
                    return last.1;
                }
                let hi = knots.partition_point(|&(x, _)| x < t);
                let (x0, y0) = knots[hi - 1];
                let (x1, y1) = knots[hi];
                y0 + (t - x0) / (x1 - x0) * (y1 - y0)
            }
        }
    }

    /// Short human-readable descriptor for reports.
    pub fn describe(&self) -> String {
        match self {
            RhoFunction::Identity => "identity".into(),
            RhoFunction::Power { beta } => format!("power({beta})"),
            RhoFunction::Table { knots } => format!("table({} knots)", knots.len()),
        }
    }
}

/// Result of a seminorm maximization. When `unbounded` is set (duplicate
/// sites carrying different values) `value` is positive infinity and
/// `argmax_pair` names an offending pair; otherwise `value` equals
/// `s(i,j) / rho(r(i,j))` at the reported pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeminormResult {
    pub value: f64,
    pub argmax_scale: f64,
    pub argmax_pair: Option<(usize, usize)>,
    pub unbounded: bool,
}

/// Weight-normalized curve: `omega[k] / rho(t_k)` along the grid.
pub fn normalized_curve(curve: &DmocCurve, rho: &RhoFunction) -> Result<Vec<f64>> {
    curve
        .grid()
        .scales()
        .iter()
        .zip(curve.omega())
        .map(|(&t, &w)| {
            let denom = rho.eval(t);
            if denom <= 0.0 || !denom.is_finite() {
                return Err(DmocError::InvalidRho(format!(
                    "weight evaluates to {denom} at scale {t}"
                )));
            }
            Ok(w / denom)
        })
        .collect()
}

struct RatioScan {
    best: f64,
    best_pair: Option<(usize, usize)>,
    best_scale: f64,
    zero_jump_pair: Option<(usize, usize)>,
    has_positive: bool,
}

impl RatioScan {
    fn new() -> Self {
        RatioScan {
            best: f64::NEG_INFINITY,
            best_pair: None,
            best_scale: 0.0,
            zero_jump_pair: None,
            has_positive: false,
        }
    }

    #[inline]
    fn record(&mut self, rho: &RhoFunction, i: usize, j: usize, r: f64, s: f64) {
        if r > 0.0 {
            self.has_positive = true;
            let ratio = s / rho.eval(r);
            // strict > keeps the canonically first argmax within a worker
            if ratio > self.best {
                self.best = ratio;
                self.best_pair = Some((i, j));
                self.best_scale = r;
            }
        } else if s > 0.0 {
            self.zero_jump_pair = merge_pair(self.zero_jump_pair, Some((i, j)));
        }
    }

    // ties resolve to the canonically smallest pair, so the result does not
    // depend on how the pair set was partitioned
    fn merge(mut self, other: RatioScan) -> Self {
        if other.best > self.best
            || (other.best == self.best && pair_key(other.best_pair) < pair_key(self.best_pair))
        {
            self.best = other.best;
            self.best_pair = other.best_pair;
            self.best_scale = other.best_scale;
        }
        self.zero_jump_pair = merge_pair(self.zero_jump_pair, other.zero_jump_pair);
        self.has_positive |= other.has_positive;
        self
    }
}

fn pair_key(p: Option<(usize, usize)>) -> (usize, usize) {
    p.unwrap_or((usize::MAX, usize::MAX))
}

fn merge_pair(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Option<(usize, usize)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn scan_ratios(ds: &DataSet, rho: &RhoFunction, row_sets: &[(usize, Option<&[usize]>)], span: usize) -> RatioScan {
    let dx = ds.site_dim();
    let dy = ds.value_dim();
    let xs = ds.site_slice();
    let ys = ds.value_slice();
    let mx = ds.metric_x();
    let my = ds.metric_y();
    row_sets
        .par_iter()
        .map(|&(start, mapped)| {
            (0..span.saturating_sub(1))
                .into_par_iter()
                .fold(RatioScan::new, |mut acc, p| {
                    let i = mapped.map_or(start + p, |m| m[p]);
                    let xi = &xs[i * dx..(i + 1) * dx];
                    let yi = &ys[i * dy..(i + 1) * dy];
                    for q in p + 1..span {
                        let j = mapped.map_or(start + q, |m| m[q]);
                        let r = mx.eval(xi, &xs[j * dx..(j + 1) * dx]);
                        let s = my.eval(yi, &ys[j * dy..(j + 1) * dy]);
                        acc.record(rho, i, j, r, s);
                    }
                    acc
                })
                .reduce(RatioScan::new, RatioScan::merge)
        })
        .reduce(RatioScan::new, RatioScan::merge)
}

fn finish(scan: RatioScan) -> Result<SeminormResult> {
    if !scan.has_positive {
        return Err(DmocError::NoPositiveDistance);
    }
    if let Some(pair) = scan.zero_jump_pair {
        return Ok(SeminormResult {
            value: f64::INFINITY,
            argmax_scale: 0.0,
            argmax_pair: Some(pair),
            unbounded: true,
        });
    }
    Ok(SeminormResult {
        value: scan.best,
        argmax_scale: scan.best_scale,
        argmax_pair: scan.best_pair,
        unbounded: false,
    })
}

/// Grid-free discrete seminorm: the maximum of `s / rho(r)` over all pairs
/// at positive site distance. Equals the maximum of the normalized curve
/// over the exact pair-distance set, without grid-discretization error.
pub fn discrete_seminorm(ds: &DataSet, rho: &RhoFunction) -> Result<SeminormResult> {
    let n = ds.n_points();
    if n < 2 {
        return Err(DmocError::TooFewPoints { n, required: 2 });
    }
    finish(scan_ratios(ds, rho, &[(0, None)], n))
}

/// Discrete seminorm restricted to within-batch pairs, mirroring the
/// minibatch curve estimator. Uses the same seeded shuffle as the plan.
pub fn discrete_seminorm_batched(
    ds: &DataSet,
    rho: &RhoFunction,
    plan: &BatchPlan,
) -> Result<SeminormResult> {
    let n = ds.n_points();
    if plan.retained() + plan.dropped_tail != n {
        return Err(DmocError::InvalidParameter(format!(
            "batch plan was built for {} points, dataset has {}",
            plan.retained() + plan.dropped_tail,
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
    let row_sets: Vec<(usize, Option<&[usize]>)> = (0..plan.n_batches)
        .map(|b| match &order {
            Some(o) => (0, Some(&o[b * c..(b + 1) * c])),
            None => (b * c, None),
        })
        .collect();
    finish(scan_ratios(ds, rho, &row_sets, c))
}

/// Lipschitz constant of the sampled map: the discrete seminorm with the
/// identity weight, i.e. the slope of the least homogeneous linear majorant
/// of the curve. Exact for the site-to-value map.
pub fn lipschitz_from_dmoc(ds: &DataSet) -> Result<SeminormResult> {
    discrete_seminorm(ds, &RhoFunction::Identity)
}
