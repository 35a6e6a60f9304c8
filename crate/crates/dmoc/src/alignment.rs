//! Alignment metrics between two curves sampled on a common grid: relative
//! alignment (an l1 discrepancy ratio), the alignment score (one minus it),
//! and a Pearson correlation with l1-based centering.

use crate::dmoc::DmocCurve;
use crate::error::{DmocError, Result};

/// Comparison of two equally sampled curves. `score = 1 - relative_alignment`
/// identically; `pearson` is `None` when either centered sequence has zero
/// length (e.g. a constant curve).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentReport {
    pub relative_alignment: f64,
    pub score: f64,
    pub pearson: Option<f64>,
    pub k: usize,
}

fn check_same_len(w: &[f64], w2: &[f64]) -> Result<()> {
    if w.len() != w2.len() {
        return Err(DmocError::DimensionMismatch {
            context: "sequence lengths",
            left: w.len(),
            right: w2.len(),
        });
    }
    if w.is_empty() {
        return Err(DmocError::InvalidParameter("sequences are empty".into()));
    }
    Ok(())
}

fn l1(w: &[f64]) -> f64 {
    w.iter().map(|v| v.abs()).sum()
}

/// `||w - w'||_1 / ||w||_1`, the discrepancy of `w'` relative to the
/// reference `w`. Not symmetric.
pub fn relative_alignment(w: &[f64], w2: &[f64]) -> Result<f64> {
    check_same_len(w, w2)?;
    let denom = l1(w);
    if denom == 0.0 {
        return Err(DmocError::ZeroReference);
    }
    let diff: f64 = w.iter().zip(w2).map(|(a, b)| (a - b).abs()).sum();
    Ok(diff / denom)
}

/// `1 - relative_alignment`; 1 means identical curves, values turn negative
/// once the discrepancy exceeds the reference mass.
pub fn alignment_score(w: &[f64], w2: &[f64]) -> Result<f64> {
    Ok(1.0 - relative_alignment(w, w2)?)
}

/// Pearson correlation with each sequence centered by its own l1 mean
/// `||w||_1 / K` (the arithmetic mean for nonnegative entries, which curve
/// values are). `None` when either centered sequence vanishes.
pub fn pearson(w: &[f64], w2: &[f64]) -> Result<Option<f64>> {
    check_same_len(w, w2)?;
    if w.len() < 2 {
        return Err(DmocError::InvalidParameter(
            "pearson needs at least two samples".into(),
        ));
    }
    let k = w.len() as f64;
    let mean_a = l1(w) / k;
    let mean_b = l1(w2) / k;
    let mut dot = 0.0;
    let mut na = 0.0;
    let mut nb = 0.0;
    for (a, b) in w.iter().zip(w2) {
        let ca = a - mean_a;
        let cb = b - mean_b;
        dot += ca * cb;
        na += ca * ca;
        nb += cb * cb;
    }
    if na == 0.0 || nb == 0.0 {
        return Ok(None);
    }
    // sqrt of the product keeps r(w, w) exactly 1
    Ok(Some(dot / (na * nb).sqrt()))
}

/// Alignment report for two curves sampled on bitwise-identical scales.
pub fn compare_sampled(
    scales_a: &[f64],
    omega_a: &[f64],
    scales_b: &[f64],
    omega_b: &[f64],
) -> Result<AlignmentReport> {
    if scales_a.len() != scales_b.len() {
        return Err(DmocError::DimensionMismatch {
            context: "grid lengths",
            left: scales_a.len(),
            right: scales_b.len(),
        });
    }
    for (index, (&a, &b)) in scales_a.iter().zip(scales_b).enumerate() {
        if a.to_bits() != b.to_bits() {
            return Err(DmocError::GridMismatch {
                index,
                left: a,
                right: b,
            });
        }
    }
    let relative = relative_alignment(omega_a, omega_b)?;
    let pearson = if omega_a.len() >= 2 {
        pearson(omega_a, omega_b)?
    } else {
        None
    };
    Ok(AlignmentReport {
        relative_alignment: relative,
        score: 1.0 - relative,
        pearson,
        k: omega_a.len(),
    })
}

/// Alignment report between a reference curve and a candidate on the same
/// grid. Curves on different grids are rejected; no resampling happens
/// implicitly.
pub fn compare_curves(reference: &DmocCurve, candidate: &DmocCurve) -> Result<AlignmentReport> {
    compare_sampled(
        reference.grid().scales(),
        reference.omega(),
        candidate.grid().scales(),
        candidate.omega(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmoc::compute_dmoc;
    use crate::grid::Grid;
    use crate::metric::DataSet;
    use ndarray::Array2;

    #[test]
    fn relative_alignment_examples() {
        assert_eq!(relative_alignment(&[1.0, 1.0], &[1.0, 1.0]).unwrap(), 0.0);
        assert_eq!(relative_alignment(&[2.0, 2.0], &[1.0, 1.0]).unwrap(), 0.5);
        assert_eq!(
            relative_alignment(&[1.0, 2.0, 3.0], &[1.0, 2.0, 6.0]).unwrap(),
            0.5
        );
    }

    #[test]
    fn relative_alignment_rejects_zero_reference() {
        assert!(matches!(
            relative_alignment(&[0.0, 0.0], &[1.0, 1.0]),
            Err(DmocError::ZeroReference)
        ));
    }

    #[test]
    fn alignment_is_not_symmetric() {
        let a = relative_alignment(&[2.0, 2.0], &[1.0, 1.0]).unwrap();
        let b = relative_alignment(&[1.0, 1.0], &[2.0, 2.0]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a, 0.5);
        assert_eq!(b, 1.0);
    }

    #[test]
    fn score_examples() {
        assert_eq!(alignment_score(&[3.0, 4.0], &[3.0, 4.0]).unwrap(), 1.0);
        assert_eq!(alignment_score(&[1.0, 1.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(alignment_score(&[1.0, 1.0], &[4.0, 4.0]).unwrap(), -2.0);
    }

    #[test]
    fn pearson_examples() {
        assert_eq!(
            pearson(&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]).unwrap(),
            Some(1.0)
        );
        assert_eq!(
            pearson(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap(),
            Some(-1.0)
        );
        assert_eq!(pearson(&[1.0, 1.0, 1.0], &[1.0, 5.0, 9.0]).unwrap(), None);
        assert_eq!(pearson(&[1.0, 5.0, 9.0], &[2.0, 2.0, 2.0]).unwrap(), None);
    }

    #[test]
    fn pearson_rejects_mismatched_lengths() {
        assert!(pearson(&[1.0, 2.0], &[1.0, 2.0, 3.0]).is_err());
        assert!(pearson(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn self_comparison_is_perfect() {
        let w = [0.0, 0.5, 0.9, 1.7, 1.7];
        let scales = [0.1, 0.2, 0.4, 0.8, 1.6];
        let report = compare_sampled(&scales, &w, &scales, &w).unwrap();
        assert_eq!(report.score, 1.0);
        assert_eq!(report.pearson, Some(1.0));
        assert_eq!(report.relative_alignment, 0.0);
        assert_eq!(report.k, 5);
    }

    #[test]
    fn zero_candidate_scores_zero_with_undefined_pearson() {
        let w = [1.0, 2.0, 3.0];
        let z = [0.0, 0.0, 0.0];
        let scales = [0.5, 1.0, 2.0];
        let report = compare_sampled(&scales, &w, &scales, &z).unwrap();
        assert_eq!(report.score, 0.0);
        assert_eq!(report.pearson, None);
    }

    #[test]
    fn grid_mismatch_reports_first_differing_scale() {
        let w = [1.0, 2.0];
        let err = compare_sampled(&[0.5, 1.0], &w, &[0.5, 1.5], &w);
        match err {
            Err(DmocError::GridMismatch { index, left, right }) => {
                assert_eq!(index, 1);
                assert_eq!(left, 1.0);
                assert_eq!(right, 1.5);
            }
            other => panic!("expected grid mismatch, got {other:?}"),
        }
    }

    #[test]
    fn curve_comparison_matches_scalar_reference() {
        // independent re-implementation with plain scalar loops
        fn reference(w: &[f64], w2: &[f64]) -> (f64, f64, f64) {
            let k = w.len();
            let mut l1w = 0.0;
            let mut l1d = 0.0;
            for i in 0..k {
                l1w += w[i].abs();
                l1d += (w[i] - w2[i]).abs();
            }
            let a = l1d / l1w;
            let mw: f64 = w.iter().map(|v| v.abs()).sum::<f64>() / k as f64;
            let mw2: f64 = w2.iter().map(|v| v.abs()).sum::<f64>() / k as f64;
            let mut num = 0.0;
            let mut da = 0.0;
            let mut db = 0.0;
            for i in 0..k {
                num += (w[i] - mw) * (w2[i] - mw2);
                da += (w[i] - mw) * (w[i] - mw);
                db += (w2[i] - mw2) * (w2[i] - mw2);
            }
            (a, 1.0 - a, num / (da * db).sqrt())
        }

        let mut state = 0xa11ce_u64;
        let mut draw = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for n in [2usize, 5, 17, 40] {
            let sites: Vec<f64> = (0..n).map(|_| draw() * 3.0).collect();
            let va: Vec<f64> = (0..n).map(|_| draw()).collect();
            let vb: Vec<f64> = (0..n).map(|_| draw() * 2.0).collect();
            let grid = Grid::exponential(24, 0.01, 4.0).unwrap();
            let mk = |vals: &[f64]| {
                DataSet::euclidean(
                    Array2::from_shape_vec((n, 1), sites.clone()).unwrap(),
                    Array2::from_shape_vec((n, 1), vals.to_vec()).unwrap(),
                )
                .unwrap()
            };
            let ca = compute_dmoc(&mk(&va), &grid).unwrap();
            let cb = compute_dmoc(&mk(&vb), &grid).unwrap();
            if ca.omega().iter().all(|&w| w == 0.0) {
                continue;
            }
            let report = compare_curves(&ca, &cb).unwrap();
            let (a, s, r) = reference(ca.omega(), cb.omega());
            assert!((report.relative_alignment - a).abs() <= 1e-12);
            assert!((report.score - s).abs() <= 1e-12);
            if let Some(p) = report.pearson {
                assert!((p - r).abs() <= 1e-10);
            }
        }
    }
}
