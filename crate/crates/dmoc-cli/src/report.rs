//! JSON report shapes. Field order is fixed by the struct definitions and
//! floats serialize in shortest round-trip form, so identical analyses
//! produce byte-identical reports.

use serde::Serialize;

#[derive(Serialize)]
pub struct GridInfo {
    pub kind: String,
    pub k: usize,
    pub t_min: f64,
    pub t_max: f64,
}

/// A seminorm value; `value` is absent when the maximization is unbounded
/// (duplicate sites carrying different values).
#[derive(Serialize)]
pub struct SeminormInfo {
    pub rho: String,
    pub value: Option<f64>,
    pub unbounded: bool,
    pub argmax_scale: Option<f64>,
    pub argmax_pair: Option<(usize, usize)>,
}

impl SeminormInfo {
    pub fn from_result(rho: String, res: &dmoc::SeminormResult) -> Self {
        SeminormInfo {
            rho,
            value: (!res.unbounded).then_some(res.value),
            unbounded: res.unbounded,
            argmax_scale: (!res.unbounded).then_some(res.argmax_scale),
            argmax_pair: res.argmax_pair,
        }
    }
}

#[derive(Serialize)]
pub struct ComputeSummary {
    pub n: usize,
    pub n_used: usize,
    pub site_dim: usize,
    pub value_dim: usize,
    pub metric_x: String,
    pub metric_y: String,
    pub separation: f64,
    pub diameter: f64,
    pub fill: Option<f64>,
    pub estimator: String,
    pub batch_size: Option<usize>,
    pub n_batches: Option<usize>,
    pub dropped_tail: Option<usize>,
    pub shuffle_seed: Option<u64>,
    pub grid: GridInfo,
    pub pairs_evaluated: u64,
    pub zero_distance_jump: bool,
    pub lipschitz: SeminormInfo,
    pub seminorm: SeminormInfo,
}

#[derive(Serialize)]
pub struct AlignReport {
    pub relative_alignment: f64,
    pub score: f64,
    pub pearson: serde_json::Value,
    pub k: usize,
}

impl AlignReport {
    pub fn from_report(r: &dmoc::AlignmentReport) -> Self {
        AlignReport {
            relative_alignment: r.relative_alignment,
            score: r.score,
            pearson: match r.pearson {
                Some(v) => serde_json::json!(v),
                None => serde_json::json!("undefined"),
            },
            k: r.k,
        }
    }
}

#[derive(Serialize)]
pub struct LayerNorm {
    pub rows: usize,
    pub cols: usize,
    pub spectral_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Serialize)]
pub struct TrivialBoundReport {
    pub layers: Vec<LayerNorm>,
    pub activation_lipschitz: Vec<f64>,
    pub product: f64,
    pub converged: bool,
}

#[derive(Serialize)]
pub struct StudyRun {
    pub batch_size: usize,
    pub n_batches: usize,
    pub dropped_tail: usize,
    pub pairs_evaluated: u64,
    pub max_gap: f64,
    pub lipschitz: SeminormInfo,
}

#[derive(Serialize)]
pub struct StudySummary {
    pub n: usize,
    pub grid: GridInfo,
    pub shuffle_seed: Option<u64>,
    pub exact_lipschitz: SeminormInfo,
    pub runs: Vec<StudyRun>,
}

pub fn to_json_bytes<T: Serialize>(value: &T) -> anyhow::Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}
