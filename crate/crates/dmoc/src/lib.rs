//! Black-box regularity analysis of sampled maps.
//!
//! Given input-output pairs of an otherwise unknown map, this crate
//! estimates its discrete modulus of continuity (the largest output
//! variation over input pairs within each scale of a grid) together with
//! weight-normalized seminorms, Lipschitz estimates, curve alignment
//! metrics, and the layer-product spectral bound for maps given by explicit
//! weight matrices. A minibatch estimator covers datasets where the exact
//! quadratic pair scan is too expensive, and a suite of analytic oracle
//! functions with known regularity backs the convergence checks.
//!
//! The estimators only ever look at pairwise distances, so they apply to
//! any sampled map between metric spaces, neural networks included.

pub mod alignment;
pub mod bounds;
pub mod dmoc;
pub mod error;
pub mod grid;
pub mod metric;
pub mod minibatch;
pub mod oracle;
pub mod seminorm;

pub use alignment::{
    alignment_score, compare_curves, compare_sampled, pearson, relative_alignment, AlignmentReport,
};
pub use bounds::{
    spectral_norm, trivial_bound, trivial_bound_with, SpectralEstimate, TrivialBound, WeightStack,
    DEFAULT_SPECTRAL_MAX_ITER, DEFAULT_SPECTRAL_TOL,
};
pub use dmoc::{compute_dmoc, dmoc_at_pair_distances, DmocCurve, Estimator};
pub use error::{DmocError, Result};
pub use grid::{Grid, GridKind};
pub use metric::{
    diameter, fill_distance, geometry_summary, separation_distance, site_distance_extremes,
    DataSet, GeometrySummary, Metric, MetricFn, PairRecord, PairStream,
};
pub use minibatch::{
    compute_dmoc_minibatch, convergence_study, BatchPlan, ConvergenceStudy, MinibatchRun,
};
pub use oracle::{
    brute_force_moc_fn, generate_classifier_dataset, generate_linear_dataset, generate_net,
    sample_function, uniform_box_sample, OracleFunction,
};
pub use seminorm::{
    discrete_seminorm, discrete_seminorm_batched, lipschitz_from_dmoc, normalized_curve,
    RhoFunction, SeminormResult,
};
