//! Product states and the qutrit angle parametrization.
//!
//! A candidate nearest product state is a list of per-party unit vectors
//! whose tensor product is compared against the register state. For a single
//! qutrit the angle form
//!
//! ```text
//! |e⟩ = e^{iχ} sinθ cosγ |1⟩ + e^{iχ'} sinθ sinγ |2⟩ + cosθ |3⟩
//! ```
//!
//! with θ, γ ∈ [0, π/2] and χ, χ' ∈ [0, 2π) covers every unit vector up to a
//! global phase. Optimization happens in plain vector space; the angles are a
//! reporting format extracted after the fact.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::state::PureState;
use crate::tol;

/// Per-party unit vectors whose tensor product is a product state.
#[derive(Clone, Debug)]
pub struct ProductVector {
    parts: Vec<Vec<C64>>,
}

impl ProductVector {
    /// Validate and store per-party vectors. Each part must have the same
    /// length d ≥ 2 and norm within [`tol::STRICT_NORM`] of 1; parts are
    /// rescaled to exact unit norm.
    pub fn try_new(parts: Vec<Vec<C64>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDimensions { n: 0, d: 0 });
        }
        let d = parts[0].len();
        if d < 2 {
            return Err(Error::InvalidDimensions { n: parts.len(), d });
        }
        let mut stored = Vec::with_capacity(parts.len());
        for part in parts {
            if part.len() != d {
                return Err(Error::EntryCount {
                    expected: d,
                    got: part.len(),
                });
            }
            if part.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
                return Err(Error::NonFinite);
            }
            let norm = part.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if norm <= tol::ZERO_NORM {
                return Err(Error::ZeroNorm { norm });
            }
            if (norm - 1.0).abs() > tol::STRICT_NORM {
                return Err(Error::NotNormalized { norm });
            }
            let scale = 1.0 / norm;
            stored.push(part.into_iter().map(|a| a * scale).collect());
        }
        Ok(Self { parts: stored })
    }

    /// Assumes each part is unit norm already (solver output).
    pub(crate) fn from_normalized(parts: Vec<Vec<C64>>) -> Self {
        Self { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn d(&self) -> usize {
        self.parts[0].len()
    }

    pub fn parts(&self) -> &[Vec<C64>] {
        &self.parts
    }

    /// Expand the tensor product into a register state.
    pub fn to_state(&self) -> PureState {
        let d = self.d();
        let mut amps = vec![C64::new(1.0, 0.0)];
        for part in &self.parts {
            let mut next = Vec::with_capacity(amps.len() * d);
            for a in &amps {
                for x in part {
                    next.push(a * x);
                }
            }
            amps = next;
        }
        // unit norm up to rounding: renormalize to keep the state invariant
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let scale = 1.0 / norm;
        for a in amps.iter_mut() {
            *a *= scale;
        }
        PureState::from_normalized(self.n(), d, amps)
    }

    /// ⟨e|ψ⟩ where e is this product state.
    pub fn overlap(&self, state: &PureState) -> Result<C64> {
        if state.n() != self.n() || state.d() != self.d() {
            return Err(Error::ShapeMismatch);
        }
        let d = self.d();
        let mut total = C64::new(0.0, 0.0);
        for (x, amp) in state.amps().iter().enumerate() {
            let mut weight = C64::new(1.0, 0.0);
            let mut rest = x;
            for part in self.parts.iter().rev() {
                weight *= part[rest % d].conj();
                rest /= d;
            }
            total += weight * amp;
        }
        Ok(total)
    }
}

/// Angle form of a single qutrit, global phase removed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QutritAngles {
    /// θ ∈ [0, π/2]
    pub theta: f64,
    /// γ ∈ [0, π/2]
    pub gamma: f64,
    /// χ ∈ [0, 2π)
    pub chi: f64,
    /// χ' ∈ [0, 2π)
    pub chi_prime: f64,
}

impl QutritAngles {
    /// Rebuild the unit vector this parametrization encodes.
    pub fn to_vector(&self) -> [C64; 3] {
        let st = self.theta.sin();
        [
            C64::from_polar(st * self.gamma.cos(), self.chi),
            C64::from_polar(st * self.gamma.sin(), self.chi_prime),
            C64::new(self.theta.cos(), 0.0),
        ]
    }
}

fn wrap_angle(x: f64) -> f64 {
    let mut w = x.rem_euclid(TAU);
    if w >= TAU {
        w = 0.0;
    }
    w
}

/// Extract angles from a unit qutrit vector.
///
/// θ = arccos |v₃|, γ comes from the moduli of the first two components, and
/// χ, χ' are phases relative to the third component. When sinθ falls below
/// [`tol::ANGLE_DEGENERATE`] the remaining angles are unidentifiable and come
/// back as zero; the same happens per-component for vanishing moduli. The
/// rebuilt vector matches the input up to one global phase.
pub fn angles_from_product_vector(v: &[C64]) -> Result<QutritAngles> {
    if v.len() != 3 {
        return Err(Error::QutritLength { got: v.len() });
    }
    if v.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm <= tol::ZERO_NORM {
        return Err(Error::ZeroNorm { norm });
    }
    let m1 = v[0].norm() / norm;
    let m2 = v[1].norm() / norm;
    let m3 = v[2].norm() / norm;

    let theta = m3.min(1.0).acos();
    if theta.sin() < tol::ANGLE_DEGENERATE {
        return Ok(QutritAngles {
            theta,
            gamma: 0.0,
            chi: 0.0,
            chi_prime: 0.0,
        });
    }
    let gamma = m2.atan2(m1);
    let reference = if m3 < tol::ANGLE_DEGENERATE {
        0.0
    } else {
        v[2].arg()
    };
    let chi = if m1 < tol::ANGLE_DEGENERATE {
        0.0
    } else {
        wrap_angle(v[0].arg() - reference)
    };
    let chi_prime = if m2 < tol::ANGLE_DEGENERATE {
        0.0
    } else {
        wrap_angle(v[1].arg() - reference)
    };
    Ok(QutritAngles {
        theta,
        gamma,
        chi,
        chi_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn third_basis_vector_has_theta_zero() {
        let a = angles_from_product_vector(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(a.theta, 0.0);
        assert_eq!(a.gamma, 0.0);
        assert_eq!(a.chi, 0.0);
        assert_eq!(a.chi_prime, 0.0);
    }

    #[test]
    fn first_basis_vector_has_theta_half_pi() {
        let a = angles_from_product_vector(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((a.theta - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(a.gamma, 0.0);
    }

    #[test]
    fn random_vectors_round_trip_up_to_global_phase() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let mut v: Vec<C64> = (0..3)
                .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            for a in v.iter_mut() {
                *a /= norm;
            }
            let angles = angles_from_product_vector(&v).unwrap();
            assert!((0.0..=FRAC_PI_2 + 1e-12).contains(&angles.theta));
            assert!((0.0..=FRAC_PI_2 + 1e-12).contains(&angles.gamma));
            assert!((0.0..TAU).contains(&angles.chi));
            assert!((0.0..TAU).contains(&angles.chi_prime));

            let rebuilt = angles.to_vector();
            // best global phase aligning the rebuild with the input
            let ov: C64 = rebuilt.iter().zip(&v).map(|(r, x)| r.conj() * x).sum();
            let phase = C64::from_polar(1.0, ov.arg());
            let err = rebuilt
                .iter()
                .zip(&v)
                .map(|(r, x)| (x - r * phase).norm())
                .fold(0.0f64, f64::max);
            assert!(err <= 1e-10, "round-trip error {err}");
        }
    }

    #[test]
    fn product_vector_overlap_matches_inner_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..20 {
            let parts: Vec<Vec<C64>> = (0..2)
                .map(|_| {
                    let mut v: Vec<C64> = (0..3)
                        .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                        .collect();
                    let n = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
                    v.iter_mut().for_each(|a| *a /= n);
                    v
                })
                .collect();
            let pv = ProductVector::try_new(parts).unwrap();
            let amps = (0..9)
                .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let s = crate::state::PureState::new(2, 3, amps, crate::state::NormPolicy::Normalize)
                .unwrap();
            let direct = pv.overlap(&s).unwrap();
            let via_state = pv.to_state().inner(&s).unwrap();
            assert!((direct - via_state).norm() <= 1e-12);
        }
    }

    #[test]
    fn try_new_rejects_non_unit_parts() {
        let parts = vec![vec![c(0.9, 0.0), c(0.0, 0.0), c(0.0, 0.0)]];
        assert!(matches!(
            ProductVector::try_new(parts),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn wrong_length_is_reported() {
        assert!(matches!(
            angles_from_product_vector(&[c(1.0, 0.0)]),
            Err(Error::QutritLength { got: 1 })
        ));
    }
}
