//! Metrics, datasets, pair-distance streaming, and the geometric quantities
//! (separation distance, diameter, fill distance) every other module builds on.

use std::fmt;
use std::sync::Arc;

use ndarray::{Array2, ArrayView2};
use rayon::prelude::*;

use crate::error::{DmocError, Result};

/// Callable backing a custom metric.
pub type MetricFn = Arc<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;

/// Distance function on row vectors. `Custom` is the extension point for
/// metrics beyond the built-in ones; it must satisfy the metric axioms
/// (symmetry, identity, nonnegativity).
#[derive(Clone)]
pub enum Metric {
    Euclidean,
    Manhattan,
    Custom { name: &'static str, f: MetricFn },
}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Manhattan => "manhattan",
            Metric::Custom { name, .. } => name,
        }
    }

    /// Distance between two equal-length vectors. The length check happens
    /// here; kernels that already validated shapes use the unchecked path.
    pub fn distance(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        if a.len() != b.len() {
            return Err(DmocError::DimensionMismatch {
                context: "metric arguments",
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(self.eval(a, b))
    }

    /// Unchecked distance; `a` and `b` must have equal length.
    #[inline]
    pub(crate) fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Metric::Euclidean => {
                // |a - b| in one dimension: identical value, and exempt from
                // the 1-ulp wobble of sqrt(x*x).
                if a.len() == 1 {
                    return (a[0] - b[0]).abs();
                }
                let mut acc = 0.0;
                for (x, y) in a.iter().zip(b) {
                    let d = x - y;
                    acc += d * d;
                }
                acc.sqrt()
            }
            Metric::Manhattan => {
                let mut acc = 0.0;
                for (x, y) in a.iter().zip(b) {
                    acc += (x - y).abs();
                }
                acc
            }
            Metric::Custom { f, .. } => f(a, b),
        }
    }
}

/// Paired sites and values with their metrics: the sampled site-to-value map.
///
/// Row counts must agree and every entry must be finite; both are enforced at
/// construction so downstream maxima and minima cannot be poisoned silently.
/// Duplicate sites are permitted; consumers define their own handling.
#[derive(Debug, Clone)]
pub struct DataSet {
    sites: Array2<f64>,
    values: Array2<f64>,
    metric_x: Metric,
    metric_y: Metric,
}

impl DataSet {
    pub fn new(
        sites: Array2<f64>,
        values: Array2<f64>,
        metric_x: Metric,
        metric_y: Metric,
    ) -> Result<Self> {
        if sites.nrows() != values.nrows() {
            return Err(DmocError::DimensionMismatch {
                context: "site and value row counts",
                left: sites.nrows(),
                right: values.nrows(),
            });
        }
        if sites.nrows() == 0 {
            return Err(DmocError::TooFewPoints { n: 0, required: 1 });
        }
        check_finite(&sites, "sites")?;
        check_finite(&values, "values")?;
        let sites = to_standard_layout(sites);
        let values = to_standard_layout(values);
        Ok(Self {
            sites,
            values,
            metric_x,
            metric_y,
        })
    }

    /// Dataset with the Euclidean metric on both sides.
    pub fn euclidean(sites: Array2<f64>, values: Array2<f64>) -> Result<Self> {
        Self::new(sites, values, Metric::Euclidean, Metric::Euclidean)
    }

    pub fn n_points(&self) -> usize {
        self.sites.nrows()
    }

    pub fn site_dim(&self) -> usize {
        self.sites.ncols()
    }

    pub fn value_dim(&self) -> usize {
        self.values.ncols()
    }

    pub fn sites(&self) -> ArrayView2<'_, f64> {
        self.sites.view()
    }

    pub fn values(&self) -> ArrayView2<'_, f64> {
        self.values.view()
    }

    pub fn metric_x(&self) -> &Metric {
        &self.metric_x
    }

    pub fn metric_y(&self) -> &Metric {
        &self.metric_y
    }

    #[inline]
    pub fn site(&self, i: usize) -> &[f64] {
        let d = self.sites.ncols();
        &self.site_slice()[i * d..(i + 1) * d]
    }

    #[inline]
    pub fn value(&self, i: usize) -> &[f64] {
        let d = self.values.ncols();
        &self.value_slice()[i * d..(i + 1) * d]
    }

    #[inline]
    pub(crate) fn site_slice(&self) -> &[f64] {
        self.sites.as_slice().expect("sites are standard layout")
    }

    #[inline]
    pub(crate) fn value_slice(&self) -> &[f64] {
        self.values.as_slice().expect("values are standard layout")
    }

    /// Number of unordered site pairs, `N(N-1)/2`.
    pub fn pair_count(&self) -> u64 {
        let n = self.n_points() as u64;
        n * (n - 1) / 2
    }

    /// Stream of [`PairRecord`]s over a sub-range of the canonical pair
    /// enumeration `(0,1), (0,2), ..., (0,N-1), (1,2), ...`.
    pub fn pairs(&self, range: std::ops::Range<u64>) -> Result<PairStream<'_>> {
        if range.start > range.end || range.end > self.pair_count() {
            return Err(DmocError::InvalidParameter(format!(
                "pair range {}..{} exceeds pair count {}",
                range.start,
                range.end,
                self.pair_count()
            )));
        }
        Ok(PairStream::new(self, range))
    }

    /// Stream over every pair.
    pub fn all_pairs(&self) -> PairStream<'_> {
        PairStream::new(self, 0..self.pair_count())
    }
}

fn check_finite(m: &Array2<f64>, which: &'static str) -> Result<()> {
    for ((row, col), v) in m.indexed_iter() {
        if !v.is_finite() {
            return Err(DmocError::NonFinite { which, row, col });
        }
    }
    Ok(())
}

fn to_standard_layout(m: Array2<f64>) -> Array2<f64> {
    if m.is_standard_layout() {
        m
    } else {
        m.as_standard_layout().to_owned()
    }
}

/// One site pair: `r` is the site distance, `s` the value distance, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub r: f64,
    pub s: f64,
}

/// Iterator over pair records in canonical order. Ranges of the enumeration
/// may be handed to independent workers; the enumeration is a bijection onto
/// `{(i, j) : i < j}` regardless of how it is partitioned.
pub struct PairStream<'a> {
    ds: &'a DataSet,
    i: usize,
    j: usize,
    remaining: u64,
}

impl<'a> PairStream<'a> {
    fn new(ds: &'a DataSet, range: std::ops::Range<u64>) -> Self {
        let (i, j) = pair_at(ds.n_points(), range.start);
        Self {
            ds,
            i,
            j,
            remaining: range.end - range.start,
        }
    }
}

impl Iterator for PairStream<'_> {
    type Item = PairRecord;

    fn next(&mut self) -> Option<PairRecord> {
        if self.remaining == 0 {
            return None;
        }
        let (i, j) = (self.i, self.j);
        let r = self.ds.metric_x.eval(self.ds.site(i), self.ds.site(j));
        let s = self.ds.metric_y.eval(self.ds.value(i), self.ds.value(j));
        self.remaining -= 1;
        self.j += 1;
        if self.j == self.ds.n_points() {
            self.i += 1;
            self.j = self.i + 1;
        }
        Some(PairRecord { i, j, r, s })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// Linear pair index -> (i, j) in the canonical enumeration. `p` may equal
/// the pair count, giving the one-past-the-end position.
pub(crate) fn pair_at(n: usize, p: u64) -> (usize, usize) {
    let total = n as u64 * (n as u64 - 1) / 2;
    if p >= total {
        return (n, n);
    }
    // start(i) = i*(2n - i - 1)/2 is the linear index of pair (i, i+1).
    let start = |i: u64| i * (2 * n as u64 - i - 1) / 2;
    let mut lo = 0u64;
    let mut hi = n as u64 - 1;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if start(mid) <= p {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let i = lo;
    let j = i + 1 + (p - start(i));
    (i as usize, j as usize)
}

/// Geometric summary of a site set: separation distance, discrete diameter,
/// optional fill distance against a reference sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometrySummary {
    pub separation: f64,
    pub diameter: f64,
    pub fill: Option<f64>,
    pub n_points: usize,
}

/// Minimum site distance over distinct index pairs. Zero iff duplicate sites
/// exist. Requires N >= 2.
pub fn separation_distance(ds: &DataSet) -> Result<f64> {
    Ok(site_distance_extremes(ds)?.0)
}

/// Maximum pairwise site distance, the discrete stand-in for the domain
/// diameter. Requires N >= 2.
pub fn diameter(ds: &DataSet) -> Result<f64> {
    Ok(site_distance_extremes(ds)?.1)
}

/// (min, max) pairwise site distance in one sweep.
pub fn site_distance_extremes(ds: &DataSet) -> Result<(f64, f64)> {
    let n = ds.n_points();
    if n < 2 {
        return Err(DmocError::TooFewPoints { n, required: 2 });
    }
    let d = ds.site_dim();
    let xs = ds.site_slice();
    let metric = ds.metric_x();
    let (min, max) = (0..n - 1)
        .into_par_iter()
        .fold(
            || (f64::INFINITY, f64::NEG_INFINITY),
            |(mut lo, mut hi), i| {
                let a = &xs[i * d..(i + 1) * d];
                for j in i + 1..n {
                    let r = metric.eval(a, &xs[j * d..(j + 1) * d]);
                    lo = lo.min(r);
                    hi = hi.max(r);
                }
                (lo, hi)
            },
        )
        .reduce(
            || (f64::INFINITY, f64::NEG_INFINITY),
            |(alo, ahi), (blo, bhi)| (alo.min(blo), ahi.max(bhi)),
        );
    Ok((min, max))
}

/// Separation, diameter and point count in one pass; fill left unset.
pub fn geometry_summary(ds: &DataSet) -> Result<GeometrySummary> {
    let (separation, diameter) = site_distance_extremes(ds)?;
    Ok(GeometrySummary {
        separation,
        diameter,
        fill: None,
        n_points: ds.n_points(),
    })
}

/// Fill distance of the data sites relative to an explicit reference
/// sampling: the largest distance from a reference point to its nearest
/// site. An approximation of the sup over the (unknown) domain, as good as
/// the reference set is dense.
pub fn fill_distance(ds: &DataSet, reference: ArrayView2<'_, f64>) -> Result<f64> {
    if reference.nrows() == 0 {
        return Err(DmocError::InvalidParameter(
            "reference site set is empty".into(),
        ));
    }
    if reference.ncols() != ds.site_dim() {
        return Err(DmocError::DimensionMismatch {
            context: "reference dimension vs site dimension",
            left: reference.ncols(),
            right: ds.site_dim(),
        });
    }
    let n = ds.n_points();
    let d = ds.site_dim();
    let xs = ds.site_slice();
    let metric = ds.metric_x();
    let reference = reference.as_standard_layout();
    let refs = reference.as_slice().expect("standard layout");
    let m = reference.nrows();
    let fill = (0..m)
        .into_par_iter()
        .map(|q| {
            let p = &refs[q * d..(q + 1) * d];
            let mut nearest = f64::INFINITY;
            for i in 0..n {
                nearest = nearest.min(metric.eval(p, &xs[i * d..(i + 1) * d]));
            }
            nearest
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);
    Ok(fill)
}
