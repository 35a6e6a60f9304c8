//! Layer-product Lipschitz upper bound from explicit weight matrices, with
//! spectral norms via deterministic power iteration. Often loose, but an
//! upper bound no sampled estimate can exceed.

use ndarray::{Array1, ArrayView2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DmocError, Result};

/// Default relative stopping tolerance for power iteration.
pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-10;
/// Default iteration cap for power iteration.
pub const DEFAULT_SPECTRAL_MAX_ITER: usize = 10_000;

const POWER_ITERATION_SEED: u64 = 0x5eed_1e57;

/// Ordered weight matrices of a feedforward map, first layer first, plus a
/// Lipschitz constant per activation (all 1 by default). Biases do not
/// affect the bound and are omitted.
#[derive(Debug, Clone)]
pub struct WeightStack {
    matrices: Vec<ndarray::Array2<f64>>,
    activation_lipschitz: Vec<f64>,
}

impl WeightStack {
    pub fn new(matrices: Vec<ndarray::Array2<f64>>) -> Result<Self> {
        let acts = vec![1.0; matrices.len()];
        Self::with_activations(matrices, acts)
    }

    pub fn with_activations(
        matrices: Vec<ndarray::Array2<f64>>,
        activation_lipschitz: Vec<f64>,
    ) -> Result<Self> {
        if matrices.is_empty() {
            return Err(DmocError::InvalidParameter(
                "weight stack needs at least one matrix".into(),
            ));
        }
        if activation_lipschitz.len() != matrices.len() {
            return Err(DmocError::DimensionMismatch {
                context: "activation constants vs layers",
                left: activation_lipschitz.len(),
                right: matrices.len(),
            });
        }
        for (idx, m) in matrices.iter().enumerate() {
            if m.nrows() == 0 || m.ncols() == 0 {
                return Err(DmocError::InvalidParameter(format!(
                    "layer {idx} matrix is empty"
                )));
            }
            if let Some(((row, col), _)) = m.indexed_iter().find(|(_, v)| !v.is_finite()) {
                return Err(DmocError::NonFinite {
                    which: "weight matrix",
                    row,
                    col,
                });
            }
        }
        for idx in 1..matrices.len() {
            if matrices[idx].ncols() != matrices[idx - 1].nrows() {
                return Err(DmocError::InvalidParameter(format!(
                    "layer shapes do not chain: layer {} outputs {} but layer {} takes {}",
                    idx - 1,
                    matrices[idx - 1].nrows(),
                    idx,
                    matrices[idx].ncols()
                )));
            }
        }
        for (idx, &a) in activation_lipschitz.iter().enumerate() {
            if !(a.is_finite() && a > 0.0) {
                return Err(DmocError::InvalidParameter(format!(
                    "activation constant {idx} must be positive, got {a}"
                )));
            }
        }
        Ok(Self {
            matrices,
            activation_lipschitz,
        })
    }

    pub fn matrices(&self) -> &[ndarray::Array2<f64>] {
        &self.matrices
    }

    pub fn activation_lipschitz(&self) -> &[f64] {
        &self.activation_lipschitz
    }

    pub fn n_layers(&self) -> usize {
        self.matrices.len()
    }

    pub fn input_dim(&self) -> usize {
        self.matrices[0].ncols()
    }

    pub fn output_dim(&self) -> usize {
        self.matrices[self.matrices.len() - 1].nrows()
    }

    /// Apply the stack with componentwise `max(., 0)` between layers (none
    /// after the last). The induced map is 1-Lipschitz per activation, so
    /// its Lipschitz constant is bounded by the layer-norm product.
    pub fn forward_relu(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.input_dim() {
            return Err(DmocError::DimensionMismatch {
                context: "input vs first layer",
                left: x.len(),
                right: self.input_dim(),
            });
        }
        let mut v = Array1::from(x.to_vec());
        for (idx, m) in self.matrices.iter().enumerate() {
            v = m.dot(&v);
            if idx + 1 < self.matrices.len() {
                v.mapv_inplace(|e| e.max(0.0));
            }
        }
        Ok(v.to_vec())
    }
}

/// Spectral-norm estimate with convergence diagnostics. `converged` is
/// false when the iteration cap was hit before successive Rayleigh
/// estimates settled; `value` then carries the last iterate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEstimate {
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Largest singular value via power iteration on `M^T M`, started from a
/// fixed-seed random vector. Stops when successive estimates differ by less
/// than `tol` relatively.
pub fn spectral_norm(m: ArrayView2<'_, f64>, tol: f64, max_iter: usize) -> Result<SpectralEstimate> {
    spectral_norm_with_vector(m, tol, max_iter).map(|(est, _)| est)
}

/// As [`spectral_norm`], also returning the right-singular direction of the
/// final iterate.
pub fn spectral_norm_with_vector(
    m: ArrayView2<'_, f64>,
    tol: f64,
    max_iter: usize,
) -> Result<(SpectralEstimate, Vec<f64>)> {
    let (rows, cols) = m.dim();
    if rows == 0 || cols == 0 {
        return Err(DmocError::InvalidParameter("matrix is empty".into()));
    }
    if let Some(((row, col), _)) = m.indexed_iter().find(|(_, v)| !v.is_finite()) {
        return Err(DmocError::NonFinite {
            which: "matrix",
            row,
            col,
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(DmocError::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(DmocError::InvalidParameter("max_iter must be positive".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(POWER_ITERATION_SEED);
    let mut v = Array1::from_iter((0..cols).map(|_| rng.gen::<f64>() * 2.0 - 1.0));
    let norm = v.dot(&v).sqrt();
    if norm == 0.0 {
        v[0] = 1.0;
    } else {
        v.mapv_inplace(|e| e / norm);
    }

    let mut prev = f64::NAN;
    let mut sigma = 0.0;
    for it in 1..=max_iter {
        let u = m.dot(&v);
        sigma = u.dot(&u).sqrt();
        if sigma == 0.0 {
            // v sits in the null space; with a random start this means M = 0
            return Ok((
                SpectralEstimate {
                    value: 0.0,
                    iterations: it,
                    converged: true,
                },
                v.to_vec(),
            ));
        }
        if prev.is_finite() && (sigma - prev).abs() <= tol * sigma {
            return Ok((
                SpectralEstimate {
                    value: sigma,
                    iterations: it,
                    converged: true,
                },
                v.to_vec(),
            ));
        }
        prev = sigma;
        let w = m.t().dot(&u);
        let wn = w.dot(&w).sqrt();
        v = w / wn;
    }
    Ok((
        SpectralEstimate {
            value: sigma,
            iterations: max_iter,
            converged: false,
        },
        v.to_vec(),
    ))
}

/// Per-layer norms and their product.
#[derive(Debug, Clone)]
pub struct TrivialBound {
    pub value: f64,
    pub layer_norms: Vec<SpectralEstimate>,
    pub converged: bool,
}

/// Product over layers of spectral norm times activation constant: the
/// layer-product upper bound on the Lipschitz constant of the induced map.
pub fn trivial_bound(stack: &WeightStack) -> Result<TrivialBound> {
    trivial_bound_with(stack, DEFAULT_SPECTRAL_TOL, DEFAULT_SPECTRAL_MAX_ITER)
}

pub fn trivial_bound_with(stack: &WeightStack, tol: f64, max_iter: usize) -> Result<TrivialBound> {
    let mut layer_norms = Vec::with_capacity(stack.n_layers());
    let mut value = 1.0;
    let mut converged = true;
    for (m, &act) in stack.matrices().iter().zip(stack.activation_lipschitz()) {
        let est = spectral_norm(m.view(), tol, max_iter)?;
        converged &= est.converged;
        value *= est.value * act;
        layer_norms.push(est);
    }
    Ok(TrivialBound {
        value,
        layer_norms,
        converged,
    })
}
