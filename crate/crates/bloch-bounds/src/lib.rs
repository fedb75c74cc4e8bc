//! Variance bounds for sets of quantum observables, computed from Bloch vectors.
//!
//! States and observables of an `N`-level system are represented by their
//! coordinates in the generalized Gell-Mann basis (the `N²−1` traceless
//! Hermitian generators of SU(N) with `Tr[λ_μ λ_ν] = 2δ_{μν}`). In that
//! representation the variance of an observable is a quadratic function of the
//! state's Bloch vector, and the sum of variances over a set of observables
//! admits upper and lower bounds that depend on the state only through the
//! Bloch-vector norm `|r|`. The same machinery yields a sufficient
//! entanglement criterion for `N×N` bipartite states from the Ky Fan norm of
//! the correlation matrix.
//!
//! Modules:
//! - [`su`] — generator basis, symmetric structure constants, star product
//! - [`bloch`] — matrix ↔ Bloch-vector codecs for states and observables
//! - [`uncertainty`] — the variance bounds (general and qubit closed form),
//!   the strict joint-lower-bound gap for observable pairs, and the exact
//!   identity for complete orthogonal sets
//! - [`witness`] — correlation-matrix extraction, Ky Fan and local
//!   uncertainty-sum entanglement criteria, optimal local observables
//! - [`oracle`] — trace-formula variances, seeded state samplers, and
//!   brute-force extremization used to certify every analytic bound
//! - [`verify`] — batch certification sweeps shared by the CLI and the
//!   acceptance tests

pub mod bloch;
pub mod cmatrix;
pub mod error;
pub mod oracle;
pub mod su;
pub mod tolerances;
pub mod uncertainty;
pub mod verify;
pub mod witness;

pub use bloch::{BlochVector, DecodedState, DensityMatrix, Observable};
pub use cmatrix::{CMatrix, HermitianMatrix, RMatrix, RVector};
pub use error::{Error, Result};
pub use su::SuBasis;
pub use uncertainty::{BoundsReport, ObservableSet, SubspaceSplit};
pub use witness::{BipartiteState, WitnessReport};
