//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.
//!
//! Each pivot (p, q) is annihilated by a unitary similarity built from the
//! phase of the pivot entry and a real rotation angle chosen the classical
//! way: with β = m[p][q] = |β|e^{iφ}, τ = (m[p][p] − m[q][q]) / (2|β|) and
//! t = sign(τ)/(|τ| + √(1+τ²)), the transformed (p, q) entry
//! e^{iφ}(|β|(c²−s²) − (α−γ)cs) vanishes. Sweeps repeat until every
//! off-diagonal magnitude drops below [`tol::JACOBI_OFF`] or the sweep cap is
//! reached; the matrices here are at most a handful of rows, so convergence
//! is a few sweeps.

use num_complex::Complex64 as C64;

use crate::tol;

/// Eigenvalues (descending) and matching eigenvectors of a Hermitian matrix.
///
/// `vectors` is row-major d×d; column j is the unit eigenvector for
/// `values[j]`.
pub(crate) struct Eigh {
    pub values: Vec<f64>,
    pub vectors: Vec<C64>,
}

impl Eigh {
    pub fn column(&self, j: usize) -> Vec<C64> {
        let d = self.values.len();
        (0..d).map(|i| self.vectors[i * d + j]).collect()
    }
}

fn max_off_diagonal(d: usize, m: &[C64]) -> f64 {
    let mut worst = 0.0f64;
    for p in 0..d {
        for q in (p + 1)..d {
            worst = worst.max(m[p * d + q].norm());
        }
    }
    worst
}

/// Diagonalize a Hermitian matrix given row-major. The caller is responsible
/// for hermiticity; only the rotation arithmetic assumes it.
pub(crate) fn eigh(d: usize, matrix: &[C64]) -> Eigh {
    debug_assert_eq!(matrix.len(), d * d);
    let mut m = matrix.to_vec();
    let mut v = vec![C64::new(0.0, 0.0); d * d];
    for i in 0..d {
        v[i * d + i] = C64::new(1.0, 0.0);
    }

    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if max_off_diagonal(d, &m) < tol::JACOBI_OFF {
            break;
        }
        for p in 0..d.saturating_sub(1) {
            for q in (p + 1)..d {
                let beta = m[p * d + q];
                let babs = beta.norm();
                if babs == 0.0 {
                    continue;
                }
                let phase = beta / babs; // e^{iφ}
                let alpha = m[p * d + p].re;
                let gamma = m[q * d + q].re;
                let tau = (alpha - gamma) / (2.0 * babs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let cphase = phase.conj();
                // columns: col_p ← c·col_p + s·conj(φ)·col_q, col_q ← −s·φ·col_p + c·col_q
                for k in 0..d {
                    let mp = m[k * d + p];
                    let mq = m[k * d + q];
                    m[k * d + p] = c * mp + s * cphase * mq;
                    m[k * d + q] = -s * phase * mp + c * mq;
                }
                // rows: row_p ← c·row_p + s·φ·row_q, row_q ← −s·conj(φ)·row_p + c·row_q
                for k in 0..d {
                    let mp = m[p * d + k];
                    let mq = m[q * d + k];
                    m[p * d + k] = c * mp + s * phase * mq;
                    m[q * d + k] = -s * cphase * mp + c * mq;
                }
                // accumulate V·U with the same column rule
                for k in 0..d {
                    let vp = v[k * d + p];
                    let vq = v[k * d + q];
                    v[k * d + p] = c * vp + s * cphase * vq;
                    v[k * d + q] = -s * phase * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        m[b * d + b]
            .re
            .partial_cmp(&m[a * d + a].re)
            .expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&j| m[j * d + j].re).collect();
    let mut vectors = vec![C64::new(0.0, 0.0); d * d];
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..d {
            vectors[i * d + new_j] = v[i * d + old_j];
        }
    }
    Eigh { values, vectors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_returned_sorted() {
        let m = vec![
            c(0.2, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.5, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.3, 0.0),
        ];
        let e = eigh(3, &m);
        assert_eq!(e.values, vec![0.5, 0.3, 0.2]);
    }

    #[test]
    fn complex_two_by_two() {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1
        let m = vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)];
        let e = eigh(2, &m);
        assert!((e.values[0] - 3.0).abs() < 1e-12);
        assert!((e.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reconstructs_random_hermitian_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let d = 3;
            let mut m = vec![c(0.0, 0.0); d * d];
            for i in 0..d {
                m[i * d + i] = c(rng.sample(StandardNormal), 0.0);
                for j in (i + 1)..d {
                    let z = c(rng.sample(StandardNormal), rng.sample(StandardNormal));
                    m[i * d + j] = z;
                    m[j * d + i] = z.conj();
                }
            }
            let e = eigh(d, &m);
            // V D V† == M
            let mut err = 0.0f64;
            for i in 0..d {
                for j in 0..d {
                    let mut acc = c(0.0, 0.0);
                    for k in 0..d {
                        acc += e.vectors[i * d + k] * e.values[k] * e.vectors[j * d + k].conj();
                    }
                    err = err.max((acc - m[i * d + j]).norm());
                }
            }
            assert!(err < 1e-12, "reconstruction error {err}");
            // eigenvalue sum equals the trace
            let trace: f64 = (0..d).map(|i| m[i * d + i].re).sum();
            assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-12);
            assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn eigenvectors_are_orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let d = 3;
        let mut m = vec![c(0.0, 0.0); d * d];
        for i in 0..d {
            m[i * d + i] = c(rng.sample(StandardNormal), 0.0);
            for j in (i + 1)..d {
                let z = c(rng.sample(StandardNormal), rng.sample(StandardNormal));
                m[i * d + j] = z;
                m[j * d + i] = z.conj();
            }
        }
        let e = eigh(d, &m);
        for a in 0..d {
            let ca = e.column(a);
            for b in 0..d {
                let cb = e.column(b);
                let ov: C64 = ca.iter().zip(&cb).map(|(x, y)| x.conj() * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                assert!((ov - target).norm() < 1e-12);
            }
        }
    }
}
