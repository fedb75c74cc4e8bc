//! Dense complex-matrix helpers and the validated Hermitian carrier type.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances::HERMITICITY_TOL;

pub type CMatrix = DMatrix<Complex64>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

pub fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// `Tr[a b]` without forming the product.
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> Complex64 {
    debug_assert_eq!(a.nrows(), b.nrows());
    debug_assert_eq!(a.ncols(), b.ncols());
    let n = a.nrows();
    let mut acc = czero();
    for i in 0..n {
        for j in 0..n {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Hermiticity within `tol`, scaled by `max(1, max|entry|)`.
pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    let scale = max_abs(m).max(1.0);
    let n = m.nrows();
    for i in 0..n {
        for j in i..n {
            if (m[(i, j)] - m[(j, i)].conj()).norm() > tol * scale {
                return false;
            }
        }
    }
    true
}

pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).map(|z| z * 0.5)
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues_desc(m: &CMatrix) -> Vec<f64> {
    let mut vals: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    vals
}

/// Full eigendecomposition of a Hermitian matrix with eigenvalues descending;
/// returns `(values, eigenvector columns)`.
pub fn hermitian_eigen_desc(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = nalgebra::SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[j]
            .partial_cmp(&eig.eigenvalues[i])
            .expect("finite eigenvalues")
    });
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let n = m.nrows();
    let mut vecs = CMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &eig.eigenvectors.column(i));
    }
    (vals, vecs)
}

pub fn min_hermitian_eigenvalue(m: &CMatrix) -> f64 {
    m.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Trace out the second factor of an `n·n × n·n` matrix on `C^n ⊗ C^n`.
pub fn partial_trace_b(rho: &CMatrix, n: usize) -> CMatrix {
    debug_assert_eq!(rho.nrows(), n * n);
    CMatrix::from_fn(n, n, |i, j| {
        let mut acc = czero();
        for k in 0..n {
            acc += rho[(i * n + k, j * n + k)];
        }
        acc
    })
}

/// Trace out the first factor of an `n·n × n·n` matrix on `C^n ⊗ C^n`.
pub fn partial_trace_a(rho: &CMatrix, n: usize) -> CMatrix {
    debug_assert_eq!(rho.nrows(), n * n);
    CMatrix::from_fn(n, n, |k, l| {
        let mut acc = czero();
        for i in 0..n {
            acc += rho[(i * n + k, i * n + l)];
        }
        acc
    })
}

/// A square complex matrix asserted Hermitian within [`HERMITICITY_TOL`].
///
/// Carrier for observables and density matrices; constructing one validates
/// the assertion once so downstream code can take real traces and real
/// eigenvalues without re-checking.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: CMatrix,
}

impl HermitianMatrix {
    pub fn new(data: CMatrix) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        if !is_hermitian(&data, HERMITICITY_TOL) {
            return Err(Error::InvalidArgument(
                "matrix is not Hermitian within tolerance".into(),
            ));
        }
        Ok(Self {
            dim: data.nrows(),
            data,
        })
    }

    /// Construction for matrices Hermitian by construction (sums of Hermitian
    /// terms with real coefficients); validated only in debug builds.
    pub(crate) fn trusted(data: CMatrix) -> Self {
        debug_assert!(is_hermitian(&data, HERMITICITY_TOL));
        Self {
            dim: data.nrows(),
            data,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &CMatrix {
        &self.data
    }

    pub fn into_inner(self) -> CMatrix {
        self.data
    }

    pub fn trace_re(&self) -> f64 {
        self.data.trace().re
    }

    pub fn eigenvalues_desc(&self) -> Vec<f64> {
        hermitian_eigenvalues_desc(&self.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hermitian_check_accepts_and_rejects() {
        let h = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(-1.0, 0.0)]);
        assert!(is_hermitian(&h, 1e-12));
        let mut bad = h.clone();
        bad[(0, 1)] += c(1e-6, 0.0);
        assert!(!is_hermitian(&bad, 1e-12));
        assert!(HermitianMatrix::new(bad).is_err());
    }

    #[test]
    fn partial_traces_of_kron_recover_factors() {
        let a = CMatrix::from_row_slice(2, 2, &[c(0.7, 0.0), c(0.1, 0.2), c(0.1, -0.2), c(0.3, 0.0)]);
        let b = CMatrix::from_row_slice(2, 2, &[c(0.4, 0.0), c(0.0, 0.1), c(0.0, -0.1), c(0.6, 0.0)]);
        let k = kron(&a, &b);
        let ta = partial_trace_b(&k, 2);
        let tb = partial_trace_a(&k, 2);
        // Tr[b] = 1, Tr[a] = 1, so the partial traces equal the factors.
        assert!(max_abs(&(ta - a)) < 1e-14);
        assert!(max_abs(&(tb - b)) < 1e-14);
    }

    #[test]
    fn eigen_desc_is_sorted_and_reconstructs() {
        let h = CMatrix::from_row_slice(
            3,
            3,
            &[
                c(2.0, 0.0), c(0.5, 0.3), c(0.0, -0.2),
                c(0.5, -0.3), c(-1.0, 0.0), c(0.1, 0.0),
                c(0.0, 0.2), c(0.1, 0.0), c(0.5, 0.0),
            ],
        );
        let (vals, vecs) = hermitian_eigen_desc(&h);
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let mut rebuilt = CMatrix::zeros(3, 3);
        for (i, &v) in vals.iter().enumerate() {
            let col = vecs.column(i);
            rebuilt += (col * col.adjoint()).map(|z| z * v);
        }
        assert!(max_abs(&(rebuilt - h)) < 1e-10);
    }

    #[test]
    fn trace_product_matches_full_product() {
        let a = CMatrix::from_row_slice(2, 2, &[c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(3.0, 0.5)]);
        let b = CMatrix::from_row_slice(2, 2, &[c(0.5, 0.0), c(1.0, -1.0), c(2.0, 2.0), c(0.0, 1.0)]);
        let direct = (&a * &b).trace();
        let fast = trace_product(&a, &b);
        assert!((direct - fast).norm() < 1e-12);
    }
}
