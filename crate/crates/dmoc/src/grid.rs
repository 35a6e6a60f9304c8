//! Evaluation grids and the constant-time bucket lookup that makes the
//! curve estimator O(N^2 + K) instead of O(N^2 K).

use crate::error::{DmocError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Exponential,
    Linear,
    Explicit,
}

impl GridKind {
    pub fn name(&self) -> &'static str {
        match self {
            GridKind::Exponential => "exponential",
            GridKind::Linear => "linear",
            GridKind::Explicit => "explicit",
        }
    }
}

/// Strictly increasing positive evaluation scales `t_1 < ... < t_K`.
///
/// Exponential and linear grids remember their spacing law so bucket lookup
/// is closed-form index arithmetic; explicit grids fall back to binary
/// search.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    scales: Vec<f64>,
    kind: GridKind,
    lookup: Lookup,
}

/// Precomputed bucket-lookup parameters; `bucket` runs in the pair loop.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Lookup {
    Exponential { ln_t_min: f64, inv_ln_step: f64 },
    Linear { t_min: f64, inv_step: f64 },
    Explicit,
}

impl Grid {
    /// Geometric spacing from `t_min` to `t_max` inclusive, endpoints exact.
    pub fn exponential(k: usize, t_min: f64, t_max: f64) -> Result<Self> {
        let scales = spaced(k, t_min, t_max, |a, b, frac| {
            (a.ln() + frac * (b.ln() - a.ln())).exp()
        })?;
        Self::with_kind(scales, GridKind::Exponential)
    }

    /// Arithmetic spacing from `t_min` to `t_max` inclusive, endpoints exact.
    pub fn linear(k: usize, t_min: f64, t_max: f64) -> Result<Self> {
        let scales = spaced(k, t_min, t_max, |a, b, frac| a + frac * (b - a))?;
        Self::with_kind(scales, GridKind::Linear)
    }

    /// Arbitrary strictly increasing positive scales.
    pub fn explicit(scales: Vec<f64>) -> Result<Self> {
        Self::with_kind(scales, GridKind::Explicit)
    }

    fn with_kind(scales: Vec<f64>, kind: GridKind) -> Result<Self> {
        if scales.is_empty() {
            return Err(DmocError::InvalidGrid("grid must be nonempty".into()));
        }
        if !scales[0].is_finite() || scales[0] <= 0.0 {
            return Err(DmocError::InvalidGrid(format!(
                "scales must be positive and finite, got t_1 = {}",
                scales[0]
            )));
        }
        for w in scales.windows(2) {
            if !w[1].is_finite() || w[1] <= w[0] {
                return Err(DmocError::InvalidGrid(format!(
                    "scales must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        let last = scales.len() - 1;
        let lookup = match kind {
            _ if last == 0 => Lookup::Explicit,
            GridKind::Exponential => Lookup::Exponential {
                ln_t_min: scales[0].ln(),
                inv_ln_step: last as f64 / (scales[last].ln() - scales[0].ln()),
            },
            GridKind::Linear => Lookup::Linear {
                t_min: scales[0],
                inv_step: last as f64 / (scales[last] - scales[0]),
            },
            GridKind::Explicit => Lookup::Explicit,
        };
        Ok(Self {
            scales,
            kind,
            lookup,
        })
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn t_min(&self) -> f64 {
        self.scales[0]
    }

    pub fn t_max(&self) -> f64 {
        *self.scales.last().unwrap()
    }

    /// Smallest index `k` with `r <= t_k`, or `None` if `r` lies beyond the
    /// last scale. Closed-form index arithmetic for exponential/linear
    /// grids, corrected by a neighbor step against floating-point boundary
    /// error, so the result always equals the linear-scan answer.
    pub fn bucket(&self, r: f64) -> Option<usize> {
        let t = &self.scales;
        let last = t.len() - 1;
        if r <= t[0] {
            return Some(0);
        }
        if r > t[last] {
            return None;
        }
        let guess = match self.lookup {
            Lookup::Exponential {
                ln_t_min,
                inv_ln_step,
            } => (r.ln() - ln_t_min) * inv_ln_step,
            Lookup::Linear { t_min, inv_step } => (r - t_min) * inv_step,
            Lookup::Explicit => {
                // partition_point gives the smallest k with t_k >= r.
                return Some(t.partition_point(|&s| s < r));
            }
        };
        let mut k = (guess.ceil() as usize).min(last);
        while k > 0 && r <= t[k - 1] {
            k -= 1;
        }
        while r > t[k] {
            k += 1; // r <= t[last] guarantees this stays in bounds
        }
        Some(k)
    }
}

fn spaced(
    k: usize,
    t_min: f64,
    t_max: f64,
    interp: impl Fn(f64, f64, f64) -> f64,
) -> Result<Vec<f64>> {
    if !(t_min.is_finite() && t_max.is_finite()) || t_min <= 0.0 {
        return Err(DmocError::InvalidGrid(format!(
            "need 0 < t_min <= t_max, got [{t_min}, {t_max}]"
        )));
    }
    if t_min > t_max {
        return Err(DmocError::InvalidGrid(format!(
            "t_min {t_min} exceeds t_max {t_max}"
        )));
    }
    if k == 0 {
        return Err(DmocError::InvalidGrid("K must be at least 1".into()));
    }
    if t_min == t_max {
        if k != 1 {
            return Err(DmocError::InvalidGrid(format!(
                "degenerate span [{t_min}, {t_max}] requires K = 1, got {k}"
            )));
        }
        return Ok(vec![t_min]);
    }
    if k == 1 {
        return Err(DmocError::InvalidGrid(
            "K = 1 requires t_min = t_max".into(),
        ));
    }
    let mut scales = Vec::with_capacity(k);
    scales.push(t_min);
    for idx in 1..k - 1 {
        scales.push(interp(t_min, t_max, idx as f64 / (k - 1) as f64));
    }
    scales.push(t_max);
    Ok(scales)
}
