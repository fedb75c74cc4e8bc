//! The SU(N) generator basis and its symmetric structure constants.
//!
//! [`SuBasis`] holds the `N²−1` generalized Gell-Mann matrices `λ_μ`,
//! traceless Hermitian and orthonormalized to `Tr[λ_μ λ_ν] = 2δ_{μν}`, plus
//! the totally symmetric tensor `d_{μνk} = ¼ Tr[{λ_μ, λ_ν} λ_k]` that defines
//! the star product `(a ∗ b)_k = Σ_{μν} a_μ b_ν d_{μνk}` on Bloch space.
//!
//! Ordering convention (part of the wire format — every Bloch vector in this
//! crate refers to it): symmetric off-diagonal generators first, lexicographic
//! in `(j, k)` with `j < k`; then the antisymmetric off-diagonal ones in the
//! same order; then the diagonal generators in increasing rank. For `N = 2`
//! this is exactly `(σ_x, σ_y, σ_z)`.

use num_complex::Complex64;

use crate::bloch::BlochVector;
use crate::cmatrix::{trace_product, CMatrix};
use crate::error::{Error, Result};
use crate::tolerances::D_SPARSE_CUTOFF;

/// Storage for `d_{μνk}`. Dense up to N = 4; above that most entries vanish
/// and sorted triplets win.
#[derive(Debug, Clone)]
enum DTensor {
    Dense { n: usize, values: Vec<f64> },
    Sparse { n: usize, entries: Vec<(u32, u32, u32, f64)> },
}

impl DTensor {
    fn get(&self, mu: usize, nu: usize, k: usize) -> f64 {
        match self {
            DTensor::Dense { n, values } => values[(mu * n + nu) * n + k],
            DTensor::Sparse { entries, .. } => {
                let key = (mu as u32, nu as u32, k as u32);
                entries
                    .binary_search_by(|e| (e.0, e.1, e.2).cmp(&key))
                    .map(|i| entries[i].3)
                    .unwrap_or(0.0)
            }
        }
    }

    fn star_into(&self, a: &[f64], b: &[f64], out: &mut [f64]) {
        out.fill(0.0);
        match self {
            DTensor::Dense { n, values } => {
                for mu in 0..*n {
                    let amu = a[mu];
                    if amu == 0.0 {
                        continue;
                    }
                    for nu in 0..*n {
                        let w = amu * b[nu];
                        if w == 0.0 {
                            continue;
                        }
                        let base = (mu * n + nu) * n;
                        for k in 0..*n {
                            out[k] += w * values[base + k];
                        }
                    }
                }
            }
            DTensor::Sparse { entries, .. } => {
                for &(mu, nu, k, d) in entries {
                    out[k as usize] += a[mu as usize] * b[nu as usize] * d;
                }
            }
        }
    }

    fn nonzero_entries(&self) -> Vec<(usize, usize, usize, f64)> {
        match self {
            DTensor::Dense { n, values } => {
                let mut out = Vec::new();
                for mu in 0..*n {
                    for nu in 0..*n {
                        for k in 0..*n {
                            let v = values[(mu * n + nu) * n + k];
                            if v.abs() > D_SPARSE_CUTOFF {
                                out.push((mu, nu, k, v));
                            }
                        }
                    }
                }
                out
            }
            DTensor::Sparse { entries, .. } => entries
                .iter()
                .map(|&(m, n, k, v)| (m as usize, n as usize, k as usize, v))
                .collect(),
        }
    }
}

/// The generator basis for one Hilbert-space dimension, immutable after
/// construction and safe to share across threads.
#[derive(Debug, Clone)]
pub struct SuBasis {
    dim: usize,
    generators: Vec<CMatrix>,
    d: DTensor,
}

impl SuBasis {
    /// Builds the basis and the `d` tensor for dimension `dim ≥ 2`.
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let generators = build_generators(dim);
        let d = build_d_tensor(dim, &generators);
        Ok(Self {
            dim,
            generators,
            d,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators, `N²−1`.
    pub fn space_dim(&self) -> usize {
        self.dim * self.dim - 1
    }

    pub fn generator(&self, mu: usize) -> &CMatrix {
        &self.generators[mu]
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn d(&self, mu: usize, nu: usize, k: usize) -> f64 {
        self.d.get(mu, nu, k)
    }

    /// All entries of `d` above the sparse cutoff, sorted by `(μ, ν, k)`.
    pub fn d_entries(&self) -> Vec<(usize, usize, usize, f64)> {
        self.d.nonzero_entries()
    }

    /// Star product `(a ∗ b)_k = Σ_{μν} a_μ b_ν d_{μνk}`; symmetric in its
    /// arguments because `d` is.
    pub fn star(&self, a: &BlochVector, b: &BlochVector) -> Result<BlochVector> {
        if a.dim() != self.dim || b.dim() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "star product needs matching dimensions, got vectors for N={} and N={} with basis N={}",
                a.dim(),
                b.dim(),
                self.dim
            )));
        }
        let mut out = vec![0.0; self.space_dim()];
        self.d
            .star_into(a.components().as_slice(), b.components().as_slice(), &mut out);
        BlochVector::from_vec(self.dim, out)
    }

    /// `Σ a_μ λ_μ` — the traceless Hermitian matrix with Bloch vector `a`.
    pub fn matrix_from_bloch(&self, a: &BlochVector) -> Result<CMatrix> {
        if a.dim() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "bloch vector for N={} used with basis N={}",
                a.dim(),
                self.dim
            )));
        }
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for (mu, lambda) in self.generators.iter().enumerate() {
            let coeff = a.components()[mu];
            if coeff != 0.0 {
                m += lambda.map(|z| z * coeff);
            }
        }
        Ok(m)
    }
}

fn build_generators(dim: usize) -> Vec<CMatrix> {
    let mut gens = Vec::with_capacity(dim * dim - 1);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);

    // Symmetric off-diagonal: E_jk + E_kj.
    for j in 0..dim {
        for k in j + 1..dim {
            let mut m = CMatrix::zeros(dim, dim);
            m[(j, k)] = one;
            m[(k, j)] = one;
            gens.push(m);
        }
    }
    // Antisymmetric off-diagonal: -i(E_jk − E_kj).
    for j in 0..dim {
        for k in j + 1..dim {
            let mut m = CMatrix::zeros(dim, dim);
            m[(j, k)] = -i;
            m[(k, j)] = i;
            gens.push(m);
        }
    }
    // Diagonal, increasing rank: sqrt(2/(l(l+1))) · diag(1,...,1,−l,0,...).
    for l in 1..dim {
        let c = (2.0 / (l as f64 * (l as f64 + 1.0))).sqrt();
        let mut m = CMatrix::zeros(dim, dim);
        for mm in 0..l {
            m[(mm, mm)] = Complex64::new(c, 0.0);
        }
        m[(l, l)] = Complex64::new(-(l as f64) * c, 0.0);
        gens.push(m);
    }
    gens
}

/// `d_{μνk} = ¼ Tr[{λ_μ, λ_ν} λ_k] = ½ Re Tr[λ_μ λ_ν λ_k]`, computed from the
/// trace formula rather than tabulated constants; the invariant suite
/// certifies total symmetry and `Σ_μ d_{μμk} = 0`.
fn build_d_tensor(dim: usize, gens: &[CMatrix]) -> DTensor {
    let n = dim * dim - 1;
    let dense = dim <= 4;
    let mut values = if dense { vec![0.0; n * n * n] } else { Vec::new() };
    let mut entries: Vec<(u32, u32, u32, f64)> = Vec::new();

    for mu in 0..n {
        for nu in mu..n {
            let prod = &gens[mu] * &gens[nu];
            for (k, lam_k) in gens.iter().enumerate() {
                let d = 0.5 * trace_product(&prod, lam_k).re;
                if dense {
                    values[(mu * n + nu) * n + k] = d;
                    values[(nu * n + mu) * n + k] = d;
                } else if d.abs() > D_SPARSE_CUTOFF {
                    entries.push((mu as u32, nu as u32, k as u32, d));
                    if nu != mu {
                        entries.push((nu as u32, mu as u32, k as u32, d));
                    }
                }
            }
        }
    }

    if dense {
        DTensor::Dense { n, values }
    } else {
        entries.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        DTensor::Sparse { n, entries }
    }
}
