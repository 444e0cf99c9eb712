//! Coefficient matrices and reduced density matrices of bipartite states.
//!
//! A two-qudit state Σ aᵢⱼ |ij⟩ reshapes into the d×d matrix A with
//! Aᵢⱼ = aᵢⱼ; the singular values of A are the Schmidt coefficients, their
//! squares are the eigenvalues of either reduced density matrix
//! ρ₁ = A·A† and ρ₂ = Aᵀ·A*, and the largest squared singular value is the
//! best product-state overlap. Spectra come from the crate's cyclic Jacobi
//! routine; d here is 3 in practice, so no general factorization stack is
//! pulled in.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::jacobi;
use crate::state::PureState;
use crate::tol;

/// Which party survives a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Party {
    First,
    Second,
}

/// The d×d coefficient matrix of a bipartite pure state, unit Frobenius norm.
#[derive(Clone, Debug)]
pub struct CoeffMatrix {
    d: usize,
    entries: Vec<C64>,
}

impl CoeffMatrix {
    /// Reshape a bipartite state: entry (i, j) is the amplitude at flat index
    /// i·d + j.
    pub fn from_state(state: &PureState) -> Result<Self> {
        if state.n() != 2 {
            return Err(Error::NotBipartite { n: state.n() });
        }
        Ok(Self {
            d: state.d(),
            entries: state.amps().to_vec(),
        })
    }

    /// Build from raw row-major entries. The Frobenius norm must be within
    /// [`tol::STRICT_NORM`] of 1; entries are rescaled so the stored norm is
    /// exact.
    pub fn try_new(d: usize, entries: Vec<C64>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimensions { n: 2, d });
        }
        if entries.len() != d * d {
            return Err(Error::EntryCount {
                expected: d,
                got: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|e| !e.re.is_finite() || !e.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm = entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt();
        if norm <= tol::ZERO_NORM {
            return Err(Error::ZeroNorm { norm });
        }
        if (norm - 1.0).abs() > tol::STRICT_NORM {
            return Err(Error::NotNormalized { norm });
        }
        let scale = 1.0 / norm;
        Ok(Self {
            d,
            entries: entries.into_iter().map(|e| e * scale).collect(),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.d + j]
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// A·A†, Hermitian by construction (upper triangle mirrored).
    pub(crate) fn gram(&self) -> Vec<C64> {
        let d = self.d;
        let mut g = vec![C64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in i..d {
                let mut acc = C64::new(0.0, 0.0);
                for j in 0..d {
                    acc += self.get(i, j) * self.get(k, j).conj();
                }
                if i == k {
                    g[i * d + i] = C64::new(acc.re, 0.0);
                } else {
                    g[i * d + k] = acc;
                    g[k * d + i] = acc.conj();
                }
            }
        }
        g
    }

    /// Singular values in descending order.
    ///
    /// Computed as the square roots of the eigenvalues of A·A†, with negative
    /// rounding noise clamped to zero. Σσ² equals the squared Frobenius norm.
    pub fn singular_values(&self) -> Vec<f64> {
        jacobi::eigh(self.d, &self.gram())
            .values
            .into_iter()
            .map(|lambda| lambda.max(0.0).sqrt())
            .collect()
    }
}

/// A d×d Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    d: usize,
    entries: Vec<C64>,
}

impl DensityMatrix {
    /// Validate raw row-major entries: Hermitian and unit trace within
    /// [`tol::DENSITY`], eigenvalues above [`tol::PSD_FLOOR`].
    pub fn try_new(d: usize, entries: Vec<C64>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimensions { n: 1, d });
        }
        if entries.len() != d * d {
            return Err(Error::EntryCount {
                expected: d,
                got: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|e| !e.re.is_finite() || !e.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let dev = hermiticity_deviation(d, &entries);
        if dev > tol::DENSITY {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let trace: f64 = (0..d).map(|i| entries[i * d + i].re).sum();
        if (trace - 1.0).abs() > tol::DENSITY {
            return Err(Error::BadTrace { trace });
        }
        let m = Self { d, entries };
        let smallest = *jacobi::eigh(d, &m.entries).values.last().expect("d >= 2");
        if smallest < tol::PSD_FLOOR {
            return Err(Error::NotPositive {
                eigenvalue: smallest,
            });
        }
        Ok(m)
    }

    /// Trace out one party of a bipartite pure state.
    ///
    /// Keeping the first party gives A·A†; keeping the second gives Aᵀ·A*,
    /// where A is the coefficient matrix.
    pub fn reduced(state: &PureState, keep: Party) -> Result<Self> {
        let a = CoeffMatrix::from_state(state)?;
        let d = a.d();
        let mut entries = vec![C64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in i..d {
                let mut acc = C64::new(0.0, 0.0);
                for j in 0..d {
                    match keep {
                        Party::First => acc += a.get(i, j) * a.get(k, j).conj(),
                        Party::Second => acc += a.get(j, i) * a.get(j, k).conj(),
                    }
                }
                if i == k {
                    entries[i * d + i] = C64::new(acc.re, 0.0);
                } else {
                    entries[i * d + k] = acc;
                    entries[k * d + i] = acc.conj();
                }
            }
        }
        Ok(Self { d, entries })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.d + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.d).map(|i| self.entries[i * self.d + i].re).sum()
    }

    /// Real eigenvalues in descending order via cyclic Jacobi rotations.
    ///
    /// Rejects matrices whose hermiticity deviation exceeds
    /// [`tol::HERMITIAN`].
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let dev = hermiticity_deviation(self.d, &self.entries);
        if dev > tol::HERMITIAN {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(jacobi::eigh(self.d, &self.entries).values)
    }
}

fn hermiticity_deviation(d: usize, entries: &[C64]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..d {
        worst = worst.max(entries[i * d + i].im.abs());
        for j in (i + 1)..d {
            worst = worst.max((entries[i * d + j] - entries[j * d + i].conj()).norm());
        }
    }
    worst
}
