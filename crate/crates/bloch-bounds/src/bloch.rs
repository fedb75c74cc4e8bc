//! Conversion between matrix representations and Bloch vectors.
//!
//! A density matrix decomposes as `ρ = 𝟙/N + ½ r·λ` with `r_μ = Tr[ρ λ_μ]`;
//! an observable is treated through its traceless part `A − (TrA/N)𝟙 = a·λ`
//! with `a_μ = ½ Tr[A λ_μ]`, since shifting an observable by a constant does
//! not change its variance. Decoding a Bloch vector back to a matrix is total:
//! vectors outside the state body decode fine and carry an explicit validity
//! flag, which the samplers use to probe near the boundary.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::{
    is_hermitian, min_hermitian_eigenvalue, trace_product, CMatrix, HermitianMatrix, RVector,
};
use crate::error::{Error, Result};
use crate::su::SuBasis;
use crate::tolerances::{HERMITICITY_TOL, PSD_EIG_FLOOR, STATE_NORM_SLACK, TRACE_ONE_TOL};

/// A real `(N²−1)`-vector tagged with the Hilbert-space dimension `N` it
/// refers to. Carries state vectors `r`, observable vectors `a`, and the star
/// products built from them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BlochVectorRepr", into = "BlochVectorRepr")]
pub struct BlochVector {
    dim: usize,
    components: RVector,
}

#[derive(Serialize, Deserialize)]
struct BlochVectorRepr {
    dim: usize,
    components: Vec<f64>,
}

impl From<BlochVector> for BlochVectorRepr {
    fn from(v: BlochVector) -> Self {
        Self {
            dim: v.dim,
            components: v.components.iter().copied().collect(),
        }
    }
}

impl TryFrom<BlochVectorRepr> for BlochVector {
    type Error = Error;
    fn try_from(repr: BlochVectorRepr) -> Result<Self> {
        BlochVector::from_vec(repr.dim, repr.components)
    }
}

impl BlochVector {
    pub fn new(dim: usize, components: RVector) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if components.len() != dim * dim - 1 {
            return Err(Error::ShapeMismatch(format!(
                "bloch vector for N={} must have {} components, got {}",
                dim,
                dim * dim - 1,
                components.len()
            )));
        }
        Ok(Self { dim, components })
    }

    pub fn from_vec(dim: usize, components: Vec<f64>) -> Result<Self> {
        Self::new(dim, DVector::from_vec(components))
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            components: DVector::zeros(dim * dim - 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the Bloch space, `N²−1`.
    pub fn space_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &RVector {
        &self.components
    }

    pub fn norm(&self) -> f64 {
        self.components.norm()
    }

    pub fn norm_squared(&self) -> f64 {
        self.components.norm_squared()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.components.dot(&other.components)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            components: &self.components * factor,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            components: &self.components + &other.components,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            components: &self.components - &other.components,
        }
    }

    /// Largest norm a state Bloch vector can have: `sqrt(2(N−1)/N)`.
    pub fn max_state_norm(dim: usize) -> f64 {
        (2.0 * (dim as f64 - 1.0) / dim as f64).sqrt()
    }

    /// `|r|² ≤ 2(N−1)/N` within tolerance — necessary (not sufficient for
    /// N ≥ 3) for `r` to belong to a state.
    pub fn state_norm_ok(&self) -> bool {
        self.norm_squared() <= 2.0 * (self.dim as f64 - 1.0) / self.dim as f64 + STATE_NORM_SLACK
    }
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite
/// within tolerance.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::ShapeMismatch(format!(
                "density matrix must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        if !is_hermitian(&matrix, HERMITICITY_TOL) {
            return Err(Error::InvalidState("matrix is not Hermitian".into()));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_ONE_TOL || tr.im.abs() > TRACE_ONE_TOL {
            return Err(Error::InvalidState(format!(
                "trace must be one, got {} + {}i",
                tr.re, tr.im
            )));
        }
        let min_eig = min_hermitian_eigenvalue(&matrix);
        if min_eig < PSD_EIG_FLOOR {
            return Err(Error::InvalidState(format!(
                "smallest eigenvalue {min_eig} below tolerance"
            )));
        }
        Ok(Self {
            matrix: HermitianMatrix::trusted(matrix),
        })
    }

    /// For matrices valid by construction (Ginibre, pure projectors, decoded
    /// vectors that already passed the positivity check).
    pub(crate) fn trusted(matrix: CMatrix) -> Self {
        debug_assert!((matrix.trace().re - 1.0).abs() <= 1e-8);
        Self {
            matrix: HermitianMatrix::trusted(matrix),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        self.matrix.data()
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.matrix
    }

    /// `Tr[ρ²]`.
    pub fn purity(&self) -> f64 {
        trace_product(self.matrix.data(), self.matrix.data()).re
    }

    pub fn min_eigenvalue(&self) -> f64 {
        min_hermitian_eigenvalue(self.matrix.data())
    }
}

/// Result of decoding a Bloch vector: always a matrix, plus the data needed
/// to decide whether it is a valid state.
#[derive(Debug, Clone)]
pub struct DecodedState {
    pub matrix: CMatrix,
    pub dim: usize,
    pub min_eigenvalue: f64,
}

impl DecodedState {
    pub fn is_positive(&self) -> bool {
        self.min_eigenvalue >= PSD_EIG_FLOOR
    }

    pub fn into_density(self) -> Result<DensityMatrix> {
        if !self.is_positive() {
            return Err(Error::InvalidState(format!(
                "decoded matrix has eigenvalue {} below tolerance",
                self.min_eigenvalue
            )));
        }
        Ok(DensityMatrix::trusted(self.matrix))
    }
}

/// An observable together with the Bloch vector of its traceless part.
#[derive(Debug, Clone)]
pub struct Observable {
    matrix: HermitianMatrix,
    bloch: BlochVector,
    /// `Tr[A]/N`, the constant removed before encoding.
    mean_shift: f64,
}

impl Observable {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &CMatrix {
        self.matrix.data()
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn bloch(&self) -> &BlochVector {
        &self.bloch
    }

    pub fn mean_shift(&self) -> f64 {
        self.mean_shift
    }

    /// `A − (TrA/N)𝟙`.
    pub fn traceless(&self) -> CMatrix {
        let mut m = self.matrix.data().clone();
        for i in 0..self.dim() {
            m[(i, i)] -= Complex64::new(self.mean_shift, 0.0);
        }
        m
    }

    /// Builds the (traceless) observable `a·λ`.
    pub fn from_bloch(bloch: BlochVector, basis: &SuBasis) -> Result<Self> {
        let matrix = basis.matrix_from_bloch(&bloch)?;
        Ok(Self {
            matrix: HermitianMatrix::trusted(matrix),
            bloch,
            mean_shift: 0.0,
        })
    }
}

/// `r_μ = Tr[ρ λ_μ]`.
pub fn encode_state(rho: &DensityMatrix, basis: &SuBasis) -> Result<BlochVector> {
    if rho.dim() != basis.dim() {
        return Err(Error::ShapeMismatch(format!(
            "state of dimension {} encoded with basis for N={}",
            rho.dim(),
            basis.dim()
        )));
    }
    let comps: Vec<f64> = basis
        .generators()
        .iter()
        .map(|lam| trace_product(rho.matrix(), lam).re)
        .collect();
    BlochVector::from_vec(basis.dim(), comps)
}

/// `𝟙/N + ½ r·λ`, total on any `r` of the right length; validity is reported,
/// not enforced.
pub fn decode_state(r: &BlochVector, basis: &SuBasis) -> Result<DecodedState> {
    if r.dim() != basis.dim() {
        return Err(Error::ShapeMismatch(format!(
            "bloch vector for N={} decoded with basis for N={}",
            r.dim(),
            basis.dim()
        )));
    }
    let n = basis.dim();
    let mut m = basis.matrix_from_bloch(r)?.map(|z| z * 0.5);
    let inv_n = Complex64::new(1.0 / n as f64, 0.0);
    for i in 0..n {
        m[(i, i)] += inv_n;
    }
    let min_eigenvalue = min_hermitian_eigenvalue(&m);
    Ok(DecodedState {
        matrix: m,
        dim: n,
        min_eigenvalue,
    })
}

/// Splits `A` into trace part and traceless part and encodes the latter:
/// `a_μ = ½ Tr[A λ_μ]`.
pub fn encode_observable(matrix: &CMatrix, basis: &SuBasis) -> Result<Observable> {
    if matrix.nrows() != basis.dim() || matrix.ncols() != basis.dim() {
        return Err(Error::ShapeMismatch(format!(
            "observable of shape {}x{} encoded with basis for N={}",
            matrix.nrows(),
            matrix.ncols(),
            basis.dim()
        )));
    }
    if !is_hermitian(matrix, HERMITICITY_TOL) {
        return Err(Error::InvalidObservable(
            "matrix is not Hermitian within tolerance".into(),
        ));
    }
    let mean_shift = matrix.trace().re / basis.dim() as f64;
    let comps: Vec<f64> = basis
        .generators()
        .iter()
        .map(|lam| 0.5 * trace_product(matrix, lam).re)
        .collect();
    let bloch = BlochVector::from_vec(basis.dim(), comps)?;
    Ok(Observable {
        matrix: HermitianMatrix::trusted(matrix.clone()),
        bloch,
        mean_shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmatrix::max_abs;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn maximally_mixed_has_zero_bloch_vector() {
        for dim in 2..=4 {
            let basis = SuBasis::new(dim).unwrap();
            let rho = DensityMatrix::new(CMatrix::identity(dim, dim).map(|z| z / dim as f64))
                .unwrap();
            let r = encode_state(&rho, &basis).unwrap();
            assert!(r.norm() <= 1e-14);
        }
    }

    #[test]
    fn ground_state_encodes_to_z_axis() {
        let basis = SuBasis::new(2).unwrap();
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.0, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        let r = encode_state(&rho, &basis).unwrap();
        // Direct traces: Tr[ρσ_x] = 0, Tr[ρσ_y] = 0, Tr[ρσ_z] = 1.
        assert!((r.components()[0]).abs() <= 1e-15);
        assert!((r.components()[1]).abs() <= 1e-15);
        assert!((r.components()[2] - 1.0).abs() <= 1e-15);
        assert!((r.norm() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn decode_zero_gives_maximally_mixed() {
        let basis = SuBasis::new(3).unwrap();
        let dec = decode_state(&BlochVector::zeros(3), &basis).unwrap();
        let expect = CMatrix::identity(3, 3).map(|z| z / 3.0);
        assert!(max_abs(&(dec.matrix.clone() - expect)) <= 1e-15);
        assert!(dec.is_positive());
    }

    #[test]
    fn decode_flags_non_positive_vectors() {
        let basis = SuBasis::new(2).unwrap();
        let r = BlochVector::from_vec(2, vec![0.0, 0.0, 2.0]).unwrap();
        let dec = decode_state(&r, &basis).unwrap();
        // diag(1/2 + 1, 1/2 - 1) = diag(3/2, -1/2)
        assert!((dec.matrix[(0, 0)].re - 1.5).abs() <= 1e-15);
        assert!((dec.matrix[(1, 1)].re + 0.5).abs() <= 1e-15);
        assert!(!dec.is_positive());
        assert!(dec.into_density().is_err());
    }

    #[test]
    fn decode_rejects_wrong_length() {
        let basis = SuBasis::new(3).unwrap();
        let r = BlochVector::zeros(2);
        assert!(matches!(
            decode_state(&r, &basis),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn identity_observable_has_zero_bloch_vector() {
        let basis = SuBasis::new(3).unwrap();
        let obs = encode_observable(&CMatrix::identity(3, 3), &basis).unwrap();
        assert!(obs.bloch().norm() <= 1e-14);
        assert!((obs.mean_shift() - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn sigma_x_encodes_to_first_axis() {
        let basis = SuBasis::new(2).unwrap();
        let sx = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let obs = encode_observable(&sx, &basis).unwrap();
        assert!((obs.bloch().components()[0] - 1.0).abs() <= 1e-15);
        assert!(obs.bloch().components()[1].abs() <= 1e-15);
        assert!(obs.bloch().components()[2].abs() <= 1e-15);
    }

    #[test]
    fn constant_shift_leaves_bloch_vector_unchanged() {
        let basis = SuBasis::new(3).unwrap();
        let a = BlochVector::from_vec(3, (0..8).map(|i| (i as f64).cos()).collect()).unwrap();
        let m = basis.matrix_from_bloch(&a).unwrap();
        let shifted = &m + CMatrix::identity(3, 3).map(|z| z * 2.75);
        let obs = encode_observable(&m, &basis).unwrap();
        let obs_shifted = encode_observable(&shifted, &basis).unwrap();
        for k in 0..8 {
            assert!(
                (obs.bloch().components()[k] - obs_shifted.bloch().components()[k]).abs() <= 1e-12
            );
        }
        assert!(max_abs(&(obs_shifted.traceless() - obs.traceless())) <= 1e-12);
    }

    #[test]
    fn non_hermitian_observable_rejected() {
        let basis = SuBasis::new(2).unwrap();
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(
            encode_observable(&m, &basis),
            Err(Error::InvalidObservable(_))
        ));
    }

    #[test]
    fn invalid_states_rejected() {
        // Wrong trace.
        let m = CMatrix::identity(2, 2);
        assert!(matches!(DensityMatrix::new(m), Err(Error::InvalidState(_))));
        // Negative eigenvalue.
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.5, 0.0);
        m[(1, 1)] = c(-0.5, 0.0);
        assert!(matches!(DensityMatrix::new(m), Err(Error::InvalidState(_))));
    }

    #[test]
    fn encode_decode_roundtrip() {
        let basis = SuBasis::new(3).unwrap();
        // A fixed valid mixed state.
        let psi = [c(0.8, 0.1), c(0.2, -0.3), c(0.4, 0.2)];
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let mut pure = CMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                pure[(i, j)] = psi[i] * psi[j].conj() / norm2;
            }
        }
        let mixed = pure.map(|z| z * 0.6) + CMatrix::identity(3, 3).map(|z| z * (0.4 / 3.0));
        let rho = DensityMatrix::new(mixed.clone()).unwrap();
        let r = encode_state(&rho, &basis).unwrap();
        let dec = decode_state(&r, &basis).unwrap();
        assert!(max_abs(&(dec.matrix - mixed)) <= 1e-12);
        // Purity correspondence: Tr[ρ²] = 1/N + ½|r|².
        assert!((rho.purity() - (1.0 / 3.0 + 0.5 * r.norm_squared())).abs() <= 1e-12);
    }
}
