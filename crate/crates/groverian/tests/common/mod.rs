//! Shared fixtures for the integration suites. Each test binary compiles its
//! own copy, so not every helper is used everywhere.
#![allow(dead_code)]

use groverian::{Complex64 as C64, NormPolicy, PureState};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// (|11⟩ + |22⟩ + |33⟩)/√3
pub fn max_entangled() -> PureState {
    let mut amps = vec![c(0.0, 0.0); 9];
    amps[0] = c(1.0, 0.0);
    amps[4] = c(1.0, 0.0);
    amps[8] = c(1.0, 0.0);
    PureState::new(2, 3, amps, NormPolicy::Normalize).unwrap()
}

/// (|11⟩ + |22⟩)/√2
pub fn bell_pair() -> PureState {
    let mut amps = vec![c(0.0, 0.0); 9];
    amps[0] = c(1.0, 0.0);
    amps[4] = c(1.0, 0.0);
    PureState::new(2, 3, amps, NormPolicy::Normalize).unwrap()
}

pub fn random_state(n: usize, d: usize, complex: bool, rng: &mut ChaCha8Rng) -> PureState {
    let amps = (0..d.pow(n as u32))
        .map(|_| {
            if complex {
                c(rng.sample(StandardNormal), rng.sample(StandardNormal))
            } else {
                c(rng.sample(StandardNormal), 0.0)
            }
        })
        .collect();
    PureState::new(n, d, amps, NormPolicy::Normalize).unwrap()
}

pub fn random_unit_vector(d: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    let mut v: Vec<C64> = (0..d)
        .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
    v
}

/// Tensor product of two random unit qutrit vectors.
pub fn random_product_state(rng: &mut ChaCha8Rng) -> PureState {
    let a = random_unit_vector(3, rng);
    let b = random_unit_vector(3, rng);
    let mut amps = Vec::with_capacity(9);
    for x in &a {
        for y in &b {
            amps.push(x * y);
        }
    }
    PureState::new(2, 3, amps, NormPolicy::Normalize).unwrap()
}

/// Gram-Schmidt orthonormalization of a random complex matrix; unitary to
/// well below the library's 1e-10 acceptance bound.
pub fn random_unitary(d: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(d);
    for _ in 0..d {
        let mut v: Vec<C64> = (0..d)
            .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        for prev in &cols {
            let ov: C64 = prev.iter().zip(&v).map(|(p, x)| p.conj() * x).sum();
            for (x, p) in v.iter_mut().zip(prev) {
                *x -= ov * p;
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        cols.push(v);
    }
    let mut u = vec![c(0.0, 0.0); d * d];
    for (j, col) in cols.iter().enumerate() {
        for (i, entry) in col.iter().enumerate() {
            u[i * d + j] = *entry;
        }
    }
    u
}
