//! Analytic test functions with known regularity, seeded dataset
//! generators, and a dense-grid reference evaluator for the continuous
//! modulus: the verification backbone for the convergence and structure
//! checks.

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::spectral_norm_with_vector;
use crate::error::{DmocError, Result};
use crate::metric::DataSet;

/// Offset of the injected singular-direction pair relative to the sampling
/// box diameter. For a linear map the ratio is offset-independent in exact
/// arithmetic; a small offset documents the local-pair reading.
const SINGULAR_PAIR_SCALE: f64 = 1e-3;

/// Test functions. `Power`, `Sqrt` and `LogModulus` live on `[0, 1]` and
/// carry a closed-form modulus; `Tanh` and `LinearMap` do not (only what
/// the theory states is claimed).
#[derive(Debug, Clone)]
pub enum OracleFunction {
    /// `x^alpha` on `[0, 1]`, `alpha` in `(0, 1]`. Modulus: `t^alpha`.
    Power { alpha: f64 },
    /// `sqrt(x)` on `[0, 1]`: continuous but not Lipschitz.
    Sqrt,
    /// `tanh(x)` on `[a, b]`. Lipschitz constant 1, attained only near 0.
    Tanh { a: f64, b: f64 },
    /// `f(0) = 0`, `f(x) = |ln x - 2|^{-1}` on `(0, 1]`: continuous but
    /// neither Lipschitz nor Hoelder. Modulus: `f(t)` itself.
    LogModulus,
    /// `x -> Wx + b` on all of `R^n`.
    LinearMap {
        weight: Array2<f64>,
        offset: Array1<f64>,
    },
}

impl OracleFunction {
    pub fn power(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0 && alpha <= 1.0) {
            return Err(DmocError::InvalidParameter(format!(
                "power exponent must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(OracleFunction::Power { alpha })
    }

    pub fn tanh_on_interval(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(DmocError::InvalidParameter(format!(
                "need a finite interval a < b, got [{a}, {b}]"
            )));
        }
        Ok(OracleFunction::Tanh { a, b })
    }

    pub fn linear_map(weight: Array2<f64>, offset: Array1<f64>) -> Result<Self> {
        if weight.nrows() == 0 || weight.ncols() == 0 {
            return Err(DmocError::InvalidParameter("weight matrix is empty".into()));
        }
        if offset.len() != weight.nrows() {
            return Err(DmocError::DimensionMismatch {
                context: "offset vs weight rows",
                left: offset.len(),
                right: weight.nrows(),
            });
        }
        if weight.iter().chain(offset.iter()).any(|v| !v.is_finite()) {
            return Err(DmocError::InvalidParameter(
                "linear map entries must be finite".into(),
            ));
        }
        Ok(OracleFunction::LinearMap { weight, offset })
    }

    pub fn input_dim(&self) -> usize {
        match self {
            OracleFunction::LinearMap { weight, .. } => weight.ncols(),
            _ => 1,
        }
    }

    pub fn output_dim(&self) -> usize {
        match self {
            OracleFunction::LinearMap { weight, .. } => weight.nrows(),
            _ => 1,
        }
    }

    /// One-dimensional domain, where one exists.
    pub fn domain(&self) -> Option<(f64, f64)> {
        match self {
            OracleFunction::Power { .. } | OracleFunction::Sqrt | OracleFunction::LogModulus => {
                Some((0.0, 1.0))
            }
            OracleFunction::Tanh { a, b } => Some((*a, *b)),
            OracleFunction::LinearMap { .. } => None,
        }
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.input_dim() {
            return Err(DmocError::DimensionMismatch {
                context: "input vs function dimension",
                left: x.len(),
                right: self.input_dim(),
            });
        }
        if let Some((lo, hi)) = self.domain() {
            if !(x[0] >= lo && x[0] <= hi) {
                return Err(DmocError::OutOfDomain(format!(
                    "{} outside [{lo}, {hi}]",
                    x[0]
                )));
            }
        }
        Ok(match self {
            OracleFunction::Power { alpha } => vec![x[0].powf(*alpha)],
            OracleFunction::Sqrt => vec![x[0].sqrt()],
            OracleFunction::Tanh { .. } => vec![x[0].tanh()],
            OracleFunction::LogModulus => vec![log_modulus(x[0])],
            OracleFunction::LinearMap { weight, offset } => {
                (weight.dot(&Array1::from(x.to_vec())) + offset).to_vec()
            }
        })
    }

    /// Whether a closed-form modulus is claimed for this kind.
    pub fn has_closed_form_moc(&self) -> bool {
        matches!(
            self,
            OracleFunction::Power { .. } | OracleFunction::Sqrt | OracleFunction::LogModulus
        )
    }

    /// Closed-form modulus at scale `t`, for the kinds that state one.
    /// Beyond the domain diameter the modulus saturates.
    pub fn true_moc(&self, t: f64) -> Result<f64> {
        if !(t.is_finite() && t >= 0.0) {
            return Err(DmocError::InvalidParameter(format!(
                "scale must be nonnegative and finite, got {t}"
            )));
        }
        match self {
            OracleFunction::Power { alpha } => Ok(t.min(1.0).powf(*alpha)),
            OracleFunction::Sqrt => Ok(t.min(1.0).sqrt()),
            OracleFunction::LogModulus => Ok(log_modulus(t.min(1.0))),
            _ => Err(DmocError::InvalidParameter(format!(
                "no closed-form modulus for {self:?}"
            ))),
        }
    }

    /// Dense-grid lower estimate of the modulus at scale `t`: the largest
    /// value gap over grid pairs within `t`, on a uniform grid of the given
    /// step over the function's one-dimensional domain. Converges to the
    /// modulus from below as the step shrinks. Cost is quadratic in the
    /// number of grid points.
    pub fn brute_force_moc(&self, step: f64, t: f64) -> Result<f64> {
        let (lo, hi) = self.domain().ok_or_else(|| {
            DmocError::InvalidParameter(
                "dense-grid modulus needs a one-dimensional domain".into(),
            )
        })?;
        let this = self.clone();
        brute_force_moc_fn(move |x| this.evaluate(&[x]).expect("in domain")[0], lo, hi, step, t)
    }
}

fn log_modulus(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        (x.ln() - 2.0).abs().recip()
    }
}

/// Dense-grid modulus estimate for an arbitrary scalar function on
/// `[lo, hi]`: max of `|f(x) - f(x')|` over grid pairs with
/// `|x - x'| <= t`.
pub fn brute_force_moc_fn(
    f: impl Fn(f64) -> f64 + Sync,
    lo: f64,
    hi: f64,
    step: f64,
    t: f64,
) -> Result<f64> {
    if !(step.is_finite() && step > 0.0) {
        return Err(DmocError::InvalidParameter(format!(
            "grid step must be positive, got {step}"
        )));
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(DmocError::InvalidParameter(format!(
            "scale must be nonnegative, got {t}"
        )));
    }
    let segments = ((hi - lo) / step).floor() as usize;
    let xs: Vec<f64> = (0..=segments).map(|i| lo + i as f64 * step).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let sup = (0..ys.len())
        .into_par_iter()
        .map(|i| {
            let mut best = 0.0_f64;
            for j in i + 1..ys.len() {
                if xs[j] - xs[i] > t {
                    break;
                }
                best = best.max((ys[j] - ys[i]).abs());
            }
            best
        })
        .reduce(|| 0.0, f64::max);
    Ok(sup)
}

/// Uniform lattice on `[0, 1]^dim` whose per-axis gap does not exceed
/// `spacing`; points fall within `spacing * sqrt(dim) / 2` of every domain
/// point. For power-of-two spacings the coordinates are exact.
pub fn generate_net(dim: usize, spacing: f64) -> Result<Array2<f64>> {
    if dim == 0 {
        return Err(DmocError::InvalidParameter("dimension must be positive".into()));
    }
    if !(spacing.is_finite() && spacing > 0.0 && spacing <= 1.0) {
        return Err(DmocError::InvalidParameter(format!(
            "spacing must lie in (0, 1], got {spacing}"
        )));
    }
    let segs_f = 1.0 / spacing;
    let segments = if (segs_f - segs_f.round()).abs() < 1e-9 {
        segs_f.round() as usize
    } else {
        segs_f.ceil() as usize
    };
    let per_axis = segments + 1;
    let total = per_axis.checked_pow(dim as u32).filter(|&n| n <= 2_000_000);
    let Some(total) = total else {
        return Err(DmocError::InvalidParameter(format!(
            "lattice of {per_axis}^{dim} points is too large"
        )));
    };
    let axis: Vec<f64> = (0..per_axis).map(|i| i as f64 / segments as f64).collect();
    let mut sites = Array2::zeros((total, dim));
    for (row, mut site) in sites.rows_mut().into_iter().enumerate() {
        let mut idx = row;
        for d in (0..dim).rev() {
            site[d] = axis[idx % per_axis];
            idx /= per_axis;
        }
    }
    Ok(sites)
}

/// Sample a one-dimensional oracle function on explicit sites.
pub fn sample_function(f: &OracleFunction, sites: &Array2<f64>) -> Result<DataSet> {
    let n = sites.nrows();
    let mut values = Array2::zeros((n, f.output_dim()));
    for (i, site) in sites.rows().into_iter().enumerate() {
        let y = f.evaluate(site.as_slice().expect("standard layout"))?;
        for (j, v) in y.into_iter().enumerate() {
            values[[i, j]] = v;
        }
    }
    DataSet::euclidean(sites.clone(), values)
}

/// One-hot labeled dataset on the line whose smallest cross-class site
/// distance equals `min_cross_distance` exactly: class clusters sit at
/// controlled separations, with the tightest boundary anchored at zero so
/// no rounding can disturb it. Within-class label distances are zero, so
/// the curve of the resulting map takes only the values 0 and sqrt(2).
pub fn generate_classifier_dataset(
    n_classes: usize,
    points_per_class: usize,
    min_cross_distance: f64,
    seed: u64,
) -> Result<DataSet> {
    if n_classes < 2 {
        return Err(DmocError::InvalidParameter(format!(
            "need at least 2 classes, got {n_classes}"
        )));
    }
    if points_per_class == 0 {
        return Err(DmocError::InvalidParameter(
            "need at least one point per class".into(),
        ));
    }
    if !(min_cross_distance.is_finite() && min_cross_distance > 0.0) {
        return Err(DmocError::InvalidParameter(format!(
            "cross-class distance must be positive, got {min_cross_distance}"
        )));
    }
    let g = min_cross_distance;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n_classes * points_per_class;
    let mut sites = Array2::zeros((n, 1));
    let mut values = Array2::zeros((n, n_classes));

    // class 0 descends from 0, class 1 starts at exactly g; later classes
    // keep gaps strictly above g so the anchored boundary stays minimal
    let mut row = 0;
    let mut cursor = 0.0_f64;
    for class in 0..n_classes {
        let step = g * (0.3 + 0.6 * rng.gen::<f64>());
        for k in 0..points_per_class {
            let position = if class == 0 {
                if k == 0 {
                    0.0
                } else {
                    -(k as f64) * step
                }
            } else {
                cursor + k as f64 * step
            };
            sites[[row, 0]] = position;
            values[[row, class]] = 1.0;
            row += 1;
        }
        let span = (points_per_class - 1) as f64 * step;
        cursor = if class == 0 {
            g
        } else {
            cursor + span + g * (1.25 + rng.gen::<f64>())
        };
    }
    DataSet::euclidean(sites, values)
}

/// Linear-map dataset: `n_samples` sites uniform in `[0, 1]^n`, values
/// `Wx`. With `include_singular_pair` two extra sites separated along the
/// top right-singular direction are added, so the sampled Lipschitz
/// estimate attains the operator norm up to floating point.
pub fn generate_linear_dataset(
    weight: &Array2<f64>,
    n_samples: usize,
    seed: u64,
    include_singular_pair: bool,
) -> Result<DataSet> {
    if weight.nrows() == 0 || weight.ncols() == 0 {
        return Err(DmocError::InvalidParameter("weight matrix is empty".into()));
    }
    if weight.iter().any(|v| !v.is_finite()) {
        return Err(DmocError::InvalidParameter(
            "weight entries must be finite".into(),
        ));
    }
    let dim = weight.ncols();
    let extra = if include_singular_pair { 2 } else { 0 };
    let n = n_samples + extra;
    if n == 0 {
        return Err(DmocError::TooFewPoints { n: 0, required: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sites = Array2::zeros((n, dim));
    for i in 0..n_samples {
        for d in 0..dim {
            sites[[i, d]] = rng.gen::<f64>();
        }
    }
    if include_singular_pair {
        let (_, v1) = spectral_norm_with_vector(weight.view(), 1e-12, 100_000)?;
        let eps = SINGULAR_PAIR_SCALE * (dim as f64).sqrt();
        for d in 0..dim {
            let base = 0.5 - 0.5 * eps * v1[d];
            sites[[n_samples, d]] = base;
            sites[[n_samples + 1, d]] = base + eps * v1[d];
        }
    }
    let mut values = Array2::zeros((n, weight.nrows()));
    for i in 0..n {
        let y = weight.dot(&sites.row(i));
        for (j, v) in y.into_iter().enumerate() {
            values[[i, j]] = v;
        }
    }
    DataSet::euclidean(sites, values)
}

/// Uniform sample of a box, seeded; reference sets for fill-distance
/// estimation.
pub fn uniform_box_sample(lo: &[f64], hi: &[f64], n: usize, seed: u64) -> Result<Array2<f64>> {
    if lo.len() != hi.len() {
        return Err(DmocError::DimensionMismatch {
            context: "box corners",
            left: lo.len(),
            right: hi.len(),
        });
    }
    if lo.is_empty() || n == 0 {
        return Err(DmocError::InvalidParameter(
            "box sample needs a dimension and a positive count".into(),
        ));
    }
    for (d, (&a, &b)) in lo.iter().zip(hi).enumerate() {
        if !(a.is_finite() && b.is_finite() && a <= b) {
            return Err(DmocError::InvalidParameter(format!(
                "box axis {d} is invalid: [{a}, {b}]"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = lo.len();
    let mut out = Array2::zeros((n, dim));
    for i in 0..n {
        for d in 0..dim {
            out[[i, d]] = lo[d] + rng.gen::<f64>() * (hi[d] - lo[d]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmoc::compute_dmoc;
    use crate::grid::Grid;
    use crate::metric::fill_distance;
    use crate::seminorm::lipschitz_from_dmoc;
    use ndarray::arr2;

    #[test]
    fn evaluate_examples() {
        let p = OracleFunction::power(0.5).unwrap();
        assert_eq!(p.evaluate(&[0.25]).unwrap(), vec![0.5]);
        assert_eq!(OracleFunction::LogModulus.evaluate(&[0.0]).unwrap(), vec![0.0]);
        let x = (-2.0_f64).exp();
        let got = OracleFunction::LogModulus.evaluate(&[x]).unwrap()[0];
        assert!((got - 0.25).abs() < 1e-15);
    }

    #[test]
    fn evaluate_rejects_out_of_domain() {
        let p = OracleFunction::power(0.5).unwrap();
        assert!(matches!(p.evaluate(&[1.5]), Err(DmocError::OutOfDomain(_))));
        assert!(matches!(p.evaluate(&[-0.1]), Err(DmocError::OutOfDomain(_))));
        let t = OracleFunction::tanh_on_interval(-100.0, 100.0).unwrap();
        assert!(t.evaluate(&[101.0]).is_err());
    }

    #[test]
    fn power_exponent_validation() {
        assert!(OracleFunction::power(0.0).is_err());
        assert!(OracleFunction::power(1.5).is_err());
        assert!(OracleFunction::power(1.0).is_ok());
    }

    #[test]
    fn true_moc_examples() {
        let p = OracleFunction::power(0.5).unwrap();
        assert_eq!(p.true_moc(0.25).unwrap(), 0.5);
        let lm = OracleFunction::LogModulus;
        assert!((lm.true_moc((-2.0_f64).exp()).unwrap() - 0.25).abs() < 1e-15);
        let identity = OracleFunction::power(1.0).unwrap();
        assert_eq!(identity.true_moc(0.3).unwrap(), 0.3);
        // saturation beyond the domain diameter
        assert_eq!(p.true_moc(4.0).unwrap(), 1.0);
    }

    #[test]
    fn true_moc_unavailable_without_closed_form() {
        let t = OracleFunction::tanh_on_interval(-100.0, 100.0).unwrap();
        assert!(!t.has_closed_form_moc());
        assert!(t.true_moc(0.5).is_err());
    }

    #[test]
    fn brute_force_constant_function_is_zero() {
        let sup = brute_force_moc_fn(|_| 3.5, 0.0, 1.0, 1e-2, 0.5).unwrap();
        assert_eq!(sup, 0.0);
    }

    #[test]
    fn brute_force_identity() {
        let identity = OracleFunction::power(1.0).unwrap();
        let sup = identity.brute_force_moc(1e-3, 0.5).unwrap();
        assert!((sup - 0.5).abs() <= 1e-3);
    }

    #[test]
    fn brute_force_quadratic() {
        // sup over [0,1] pairs within 0.5 of x^2 - x'^2 is 0.75 at (0.5, 1)
        let step = 1e-3;
        let sup = brute_force_moc_fn(|x| x * x, 0.0, 1.0, step, 0.5).unwrap();
        assert!((sup - 0.75).abs() <= 2.0 * step);
    }

    #[test]
    fn brute_force_is_monotone_and_subadditive_up_to_grid_slack() {
        let step = 2e-3;
        for f in [OracleFunction::power(0.5).unwrap(), OracleFunction::LogModulus] {
            let at = |t: f64| f.brute_force_moc(step, t).unwrap();
            let mut prev = 0.0;
            for i in 1..=20 {
                let w = at(i as f64 * 0.05);
                assert!(w >= prev, "{f:?} not monotone at t = {}", i as f64 * 0.05);
                prev = w;
            }
            let slack = f.true_moc(2.0 * step).unwrap();
            for (t1, t2) in [(0.1, 0.2), (0.05, 0.6), (0.3, 0.3), (0.25, 0.7)] {
                assert!(
                    at(t1 + t2) <= at(t1) + at(t2) + slack,
                    "{f:?} fails subadditivity at ({t1}, {t2})"
                );
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_power_closed_form() {
        let step = 1e-3;
        for alpha in [0.3, 0.5, 1.0] {
            let f = OracleFunction::power(alpha).unwrap();
            for t in [0.1, 0.25, 0.7] {
                let bf = f.brute_force_moc(step, t).unwrap();
                let cf = f.true_moc(t).unwrap();
                assert!(bf <= cf + 1e-12, "alpha {alpha} t {t}");
                assert!(cf - bf <= 2.0 * step.powf(alpha), "alpha {alpha} t {t}");
            }
        }
    }

    #[test]
    fn net_examples() {
        let net = generate_net(1, 0.5).unwrap();
        assert_eq!(net.column(0).to_vec(), vec![0.0, 0.5, 1.0]);
        assert_eq!(generate_net(1, 0.25).unwrap().nrows(), 5);
        assert_eq!(generate_net(2, 0.5).unwrap().nrows(), 9);
        assert!(generate_net(1, 0.0).is_err());
        assert!(generate_net(1, 1.5).is_err());
    }

    #[test]
    fn net_fill_distance_bound_2d() {
        let net = generate_net(2, 0.5).unwrap();
        let ds = DataSet::euclidean(net, Array2::zeros((9, 1))).unwrap();
        let reference = generate_net(2, 0.02).unwrap();
        let fill = fill_distance(&ds, reference.view()).unwrap();
        assert!(fill <= 0.5 * 2.0_f64.sqrt() / 2.0 + 1e-12);
    }

    #[test]
    fn classifier_two_singletons() {
        let d = 0.7;
        let ds = generate_classifier_dataset(2, 1, d, 9).unwrap();
        assert_eq!(ds.n_points(), 2);
        let grid = Grid::explicit(vec![d / 2.0, d, 2.0 * d]).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        assert_eq!(curve.omega()[0], 0.0);
        assert_eq!(curve.omega()[1], 2.0_f64.sqrt());
        assert_eq!(curve.omega()[2], 2.0_f64.sqrt());
    }

    #[test]
    fn classifier_min_cross_distance_is_exact() {
        for (classes, per_class, g, seed) in
            [(2, 5, 0.31, 1_u64), (3, 4, 1.7, 2), (5, 1, 0.05, 3), (4, 7, 2.0, 4)]
        {
            let ds = generate_classifier_dataset(classes, per_class, g, seed).unwrap();
            // recover classes from the one-hot rows, then brute-force scan
            let class_of = |i: usize| {
                (0..classes)
                    .find(|&c| ds.value(i)[c] == 1.0)
                    .expect("one-hot row")
            };
            let mut min_cross = f64::INFINITY;
            for p in ds.all_pairs() {
                if class_of(p.i) != class_of(p.j) {
                    min_cross = min_cross.min(p.r);
                }
            }
            assert_eq!(min_cross, g, "classes {classes} per {per_class}");
        }
    }

    #[test]
    fn classifier_curve_takes_only_two_values() {
        let ds = generate_classifier_dataset(3, 6, 0.4, 11).unwrap();
        let grid = Grid::exponential(64, 1e-3, 50.0).unwrap();
        let curve = compute_dmoc(&ds, &grid).unwrap();
        let root2 = 2.0_f64.sqrt();
        for &w in curve.omega() {
            assert!(w == 0.0 || w == root2);
        }
    }

    #[test]
    fn classifier_rejects_bad_parameters() {
        assert!(generate_classifier_dataset(1, 3, 0.5, 0).is_err());
        assert!(generate_classifier_dataset(2, 0, 0.5, 0).is_err());
        assert!(generate_classifier_dataset(2, 3, 0.0, 0).is_err());
    }

    #[test]
    fn linear_dataset_scalar_weight() {
        let w = arr2(&[[2.0]]);
        let ds = generate_linear_dataset(&w, 20, 5, false).unwrap();
        assert_eq!(lipschitz_from_dmoc(&ds).unwrap().value, 2.0);
    }

    #[test]
    fn linear_dataset_diagonal_with_pair() {
        let w = arr2(&[[3.0, 0.0], [0.0, 1.0]]);
        let ds = generate_linear_dataset(&w, 40, 5, true).unwrap();
        let lip = lipschitz_from_dmoc(&ds).unwrap().value;
        assert!((lip - 3.0).abs() / 3.0 <= 1e-9, "lip {lip}");
    }

    #[test]
    fn tanh_lipschitz_is_bounded_by_one_and_attained_near_zero() {
        let f = OracleFunction::tanh_on_interval(-100.0, 100.0).unwrap();
        // random sites, minimum pair distance 1e-6 by construction
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut sites: Vec<f64> = (0..120).map(|_| rng.gen::<f64>() * 200.0 - 100.0).collect();
        sites.push(-0.004);
        sites.push(0.004);
        sites.sort_by(f64::total_cmp);
        sites.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
        let n = sites.len();
        let ds = sample_function(&f, &Array2::from_shape_vec((n, 1), sites).unwrap()).unwrap();
        let lip = lipschitz_from_dmoc(&ds).unwrap().value;
        assert!(lip <= 1.0, "lip {lip}");
        assert!(lip >= 0.99, "lip {lip}");
    }

    #[test]
    fn box_sample_stays_in_box() {
        let pts = uniform_box_sample(&[0.0, -1.0], &[2.0, 1.0], 200, 3).unwrap();
        for row in pts.rows() {
            assert!(row[0] >= 0.0 && row[0] <= 2.0);
            assert!(row[1] >= -1.0 && row[1] <= 1.0);
        }
        // determinism
        let again = uniform_box_sample(&[0.0, -1.0], &[2.0, 1.0], 200, 3).unwrap();
        assert_eq!(pts, again);
    }
}
