//! Numerical tolerances used across the crate.
//!
//! Every threshold that decides validity, rank, or a verdict lives here, so
//! the test suite and the CLI verification sweeps pin the same numbers.

/// Hermiticity and tracelessness of matrices with entries of unit scale.
/// Checks scale with `max(1, max|entry|)` so large observables are not
/// rejected for ordinary rounding.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Orthonormality of the generator basis, `Tr[λ_μ λ_ν] = 2δ_{μν}`.
pub const GENERATOR_ORTHO_TOL: f64 = 1e-12;

/// Permutation symmetry of the symmetric structure constants.
pub const D_SYMMETRY_TOL: f64 = 1e-12;

/// The contraction `Σ_μ d_{μμk}` must vanish for every k.
pub const D_TRACE_SUM_TOL: f64 = 1e-10;

/// Structure constants below this magnitude are stored as exact zeros in the
/// sparse representation; true nonzero entries are O(0.1) for all N in scope.
pub const D_SPARSE_CUTOFF: f64 = 1e-13;

/// Allowed deviation of a density-matrix trace from one.
pub const TRACE_ONE_TOL: f64 = 1e-10;

/// Floor on the smallest eigenvalue of a valid density matrix. Balances the
/// numerical noise of Ginibre-sampled states against genuinely invalid input.
pub const PSD_EIG_FLOOR: f64 = -1e-10;

/// Slack on the state Bloch-norm cap `|r|² ≤ 2(N−1)/N`.
pub const STATE_NORM_SLACK: f64 = 1e-10;

/// Relative singular-value cutoff for the rank of the observable Gram matrix;
/// the pseudo-inverse truncates anything below `RANK_TRUNCATION_REL · σ₁`.
pub const RANK_TRUNCATION_REL: f64 = 1e-10;

/// `gram · pinv = projector` must hold to this accuracy on the span.
pub const PROJECTOR_IDENTITY_TOL: f64 = 1e-8;

/// Bloch vectors with `|a·b| > (1 − PROPORTIONALITY_TOL)·|a||b|` count as
/// proportional and are rejected by the joint-gap check.
pub const PROPORTIONALITY_TOL: f64 = 1e-9;

/// Convergence tolerance in θ for the one-dimensional bound optimization.
pub const THETA_TOL: f64 = 1e-12;

/// Grid resolution preceding golden-section refinement.
pub const THETA_GRID_POINTS: usize = 1025;

/// Entanglement verdicts require the criterion to be violated by more than
/// this; below SVD noise for N ≤ 5, so separable states are never flagged.
pub const VERDICT_TOL: f64 = 1e-10;

/// Orthonormality tolerance for user-supplied local observable sets.
pub const ORTHONORMAL_SET_TOL: f64 = 1e-8;

/// Attempt cap for fixed-norm rejection sampling; near the maximal norm for
/// N ≥ 3 the positive fraction of the sphere is tiny, so failures surface
/// as errors instead of hanging.
pub const MAX_REJECTION_ATTEMPTS: usize = 1_000_000;

/// Minimal objective improvement that keeps a refinement step.
pub const REFINE_IMPROVEMENT_TOL: f64 = 1e-12;

/// Residual Bloch-norm drift allowed after positivity projection.
pub const NORM_DRIFT_TOL: f64 = 1e-9;
