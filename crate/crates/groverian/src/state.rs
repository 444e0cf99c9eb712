//! Pure states of an n-qudit register.
//!
//! A register of `n` parties, each a d-level system, is stored as a dense
//! complex amplitude vector of length dⁿ. Flat indices are read with party 0
//! as the most significant digit, so for two qutrits the basis label |ij⟩
//! (i, j ∈ {1, 2, 3}) sits at flat index (i−1)·d + (j−1). Every constructor
//! returns a unit-norm vector; all operations are pure functions, so states
//! can be shared freely across threads.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::tol;

/// How `PureState::new` treats input that is not normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormPolicy {
    /// Reject amplitudes whose norm deviates from 1 by more than
    /// [`tol::STRICT_NORM`]. Silent rescaling hides caller bugs, so this is
    /// the default everywhere.
    Strict,
    /// Rescale any non-zero vector to unit norm.
    Normalize,
}

/// A normalized pure state of `n` qudits with local dimension `d`.
#[derive(Clone, Debug)]
pub struct PureState {
    n: usize,
    d: usize,
    amps: Vec<C64>,
}

fn register_len(n: usize, d: usize) -> Result<usize> {
    if n < 1 || d < 2 {
        return Err(Error::InvalidDimensions { n, d });
    }
    d.checked_pow(n as u32)
        .ok_or(Error::InvalidDimensions { n, d })
}

impl PureState {
    /// Build a state from raw amplitudes.
    ///
    /// The amplitude count must equal dⁿ and every component must be finite.
    /// Under [`NormPolicy::Strict`] the input norm must already be within
    /// [`tol::STRICT_NORM`] of 1; under [`NormPolicy::Normalize`] any vector
    /// with norm above [`tol::ZERO_NORM`] is accepted. In both modes the
    /// stored vector is rescaled by 1/‖amps‖ so the unit-norm invariant holds
    /// to machine precision.
    pub fn new(n: usize, d: usize, amps: Vec<C64>, policy: NormPolicy) -> Result<Self> {
        let len = register_len(n, d)?;
        if amps.len() != len {
            return Err(Error::AmplitudeCount {
                expected: len,
                got: amps.len(),
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm <= tol::ZERO_NORM {
            return Err(Error::ZeroNorm { norm });
        }
        if policy == NormPolicy::Strict && (norm - 1.0).abs() > tol::STRICT_NORM {
            return Err(Error::NotNormalized { norm });
        }
        let scale = 1.0 / norm;
        let amps = amps.into_iter().map(|a| a * scale).collect();
        Ok(Self { n, d, amps })
    }

    /// The uniform superposition: all dⁿ amplitudes equal d^(−n/2).
    pub fn uniform(n: usize, d: usize) -> Result<Self> {
        let len = register_len(n, d)?;
        let amp = C64::new(1.0 / (len as f64).sqrt(), 0.0);
        Ok(Self {
            n,
            d,
            amps: vec![amp; len],
        })
    }

    /// The computational basis state at flat index `index`.
    pub fn basis(n: usize, d: usize, index: usize) -> Result<Self> {
        let len = register_len(n, d)?;
        if index >= len {
            return Err(Error::IndexOutOfRange { index, dim: len });
        }
        let mut amps = vec![C64::new(0.0, 0.0); len];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self { n, d, amps })
    }

    /// Internal constructor for vectors already known to be unit norm
    /// (reflections, tensor products of unit vectors).
    pub(crate) fn from_normalized(n: usize, d: usize, amps: Vec<C64>) -> Self {
        debug_assert_eq!(amps.len(), d.pow(n as u32));
        debug_assert!(
            (amps.iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs() <= tol::STATE_NORM
        );
        Self { n, d, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Total Hilbert-space dimension dⁿ.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d
    }

    /// ⟨self|other⟩, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch);
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Apply a d×d unitary (row-major) to one party, leaving the rest alone.
    ///
    /// Party 0 is the most significant digit of the flat index. The matrix is
    /// rejected if ‖U†U − I‖max exceeds [`tol::UNITARY`].
    pub fn apply_local_unitary(&self, party: usize, u: &[C64]) -> Result<Self> {
        if party >= self.n {
            return Err(Error::PartyOutOfRange { party, n: self.n });
        }
        let d = self.d;
        if u.len() != d * d {
            return Err(Error::EntryCount {
                expected: d,
                got: u.len(),
            });
        }
        check_unitary(d, u)?;

        let stride = d.pow((self.n - 1 - party) as u32);
        let block = stride * d;
        let mut out = vec![C64::new(0.0, 0.0); self.amps.len()];
        let mut scratch = vec![C64::new(0.0, 0.0); d];
        for base in (0..self.amps.len()).step_by(block) {
            for offset in 0..stride {
                for (k, slot) in scratch.iter_mut().enumerate() {
                    *slot = self.amps[base + offset + k * stride];
                }
                for i in 0..d {
                    let mut acc = C64::new(0.0, 0.0);
                    for (j, amp) in scratch.iter().enumerate() {
                        acc += u[i * d + j] * amp;
                    }
                    out[base + offset + i * stride] = acc;
                }
            }
        }
        Ok(Self {
            n: self.n,
            d,
            amps: out,
        })
    }
}

fn check_unitary(d: usize, u: &[C64]) -> Result<()> {
    if u.iter().any(|e| !e.re.is_finite() || !e.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut max_dev = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            // (U†U)ij = Σ_k conj(U[k][i]) U[k][j]
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..d {
                acc += u[k * d + i].conj() * u[k * d + j];
            }
            let target = if i == j { 1.0 } else { 0.0 };
            max_dev = max_dev.max((acc - target).norm());
        }
    }
    // written so a NaN deviation also lands in the error branch
    if max_dev <= tol::UNITARY {
        Ok(())
    } else {
        Err(Error::NotUnitary { deviation: max_dev })
    }
}
