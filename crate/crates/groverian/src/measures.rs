//! Three independent routes to the maximal product-state overlap P_max and
//! the Groverian measure G = √(1 − P_max), plus the Von Neumann entropy used
//! as a comparison measure.
//!
//! * **SVD oracle** — for bipartite pure states P_max is the largest squared
//!   singular value of the coefficient matrix. This route is exact up to
//!   rounding and is what trajectories and the default CLI path report.
//! * **Variational** — alternating maximization over product vectors for any
//!   register shape; each party update is the normalized contraction of the
//!   state with the other parties' conjugated vectors, which for two parties
//!   is power iteration toward the top singular pair.
//! * **Closed form** — a literal transcription of the published
//!   real-amplitude expression for two qutrits, kept verbatim so its domain
//!   of validity can be audited. It provably exceeds the true maximum on some
//!   inputs (e.g. 0.6|11⟩ + 0.8|23⟩ evaluates to 1.0 against a true 0.64), so
//!   it is never used as ground truth.
//!
//! G is reported from the Frobenius residual of the best rank-1
//! approximation, ‖A − σ·u v†‖_F, which equals √(1 − σ²) algebraically but
//! does not cancel catastrophically when the state is close to a product
//! state; the naive √(1 − pmax) would bottom out near 1e-8 there.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bipartite::{CoeffMatrix, DensityMatrix, Party};
use crate::error::{Error, Result};
use crate::jacobi;
use crate::product::ProductVector;
use crate::state::PureState;
use crate::tol;

/// Which route produced a measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Variational,
    SvdOracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Variational => "variational",
            Method::SvdOracle => "oracle",
        }
    }
}

/// A P_max / G measurement with the maximizing product state when the route
/// produces one.
#[derive(Clone, Debug)]
pub struct MeasureResult {
    pub method: Method,
    /// Maximal squared overlap with a product state, in [0, 1].
    pub pmax: f64,
    /// Groverian measure √(1 − pmax), in [0, 1].
    pub g: f64,
    /// The maximizing product state (oracle and variational routes).
    pub witness: Option<ProductVector>,
    /// False when the variational loop hit its iteration cap before the
    /// improvement dropped below tolerance; the result is then best-so-far.
    pub converged: bool,
}

/// Default restart count for the variational route.
pub const DEFAULT_RESTARTS: usize = 32;
/// Default sweep cap per restart.
pub const DEFAULT_MAX_ITER: usize = 500;
/// Default improvement threshold ending a restart.
pub const DEFAULT_TOL: f64 = 1e-12;

// Restart streams are derived from this fixed seed by counter, making the
// variational route a pure function of its arguments.
const RESTART_SEED: u64 = 0x4752_4f56_4552_0001;

/// G(ψ) = √(1 − P_max). Accepts pmax within [`tol::PMAX_SLACK`] of [0, 1]
/// and clamps before the root.
pub fn groverian_from_pmax(pmax: f64) -> Result<f64> {
    if !pmax.is_finite() || !(-tol::PMAX_SLACK..=1.0 + tol::PMAX_SLACK).contains(&pmax) {
        return Err(Error::PmaxOutOfRange { pmax });
    }
    Ok((1.0 - pmax.clamp(0.0, 1.0)).sqrt())
}

/// Exact bipartite measurement from the top singular pair of the coefficient
/// matrix.
///
/// The witness is (u, v̄): the top left singular vector and the conjugated
/// top right singular vector, so that |⟨e|ψ⟩|² = σ_max². G comes from the
/// rank-1 residual (see module docs); pmax is reported as 1 − g².
pub fn pmax_svd_oracle(state: &PureState) -> Result<MeasureResult> {
    let a = CoeffMatrix::from_state(state)?;
    let d = a.d();
    let gram_eigen = jacobi::eigh(d, &a.gram());
    let u = gram_eigen.column(0);

    // right singular vector: v = A†u / σ (σ² ≥ 1/d > 0 for unit-norm states)
    let mut v: Vec<C64> = (0..d)
        .map(|j| {
            u.iter()
                .enumerate()
                .map(|(i, ui)| a.get(i, j).conj() * ui)
                .sum()
        })
        .collect();
    let sigma = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= sigma;
    }

    let mut residual_sqr = 0.0;
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            residual_sqr += (a.get(i, j) - sigma * ui * vj.conj()).norm_sqr();
        }
    }
    let g = residual_sqr.sqrt().min(1.0);
    let pmax = (1.0 - residual_sqr).clamp(0.0, 1.0);
    let witness = ProductVector::from_normalized(vec![u, v.iter().map(|x| x.conj()).collect()]);
    Ok(MeasureResult {
        method: Method::SvdOracle,
        pmax,
        g,
        witness: Some(witness),
        converged: true,
    })
}

/// One restart of the alternating maximization; records the squared overlap
/// after every sweep so monotonicity is testable.
pub(crate) fn variational_run(
    state: &PureState,
    mut parts: Vec<Vec<C64>>,
    max_iter: usize,
    improve_tol: f64,
) -> (f64, Vec<Vec<C64>>, bool, Vec<f64>) {
    let n = state.n();
    let d = state.d();
    let mut history = Vec::new();
    let mut previous = f64::NEG_INFINITY;
    let mut converged = false;

    for _ in 0..max_iter {
        let mut sweep_value = 0.0;
        for party in 0..n {
            // cᵢ = Σ_{x : x_party = i} ψ_x Π_{k≠party} conj(e_k[x_k])
            let mut contraction = vec![C64::new(0.0, 0.0); d];
            let stride = d.pow((n - 1 - party) as u32);
            for (x, amp) in state.amps().iter().enumerate() {
                let digit = (x / stride) % d;
                let mut weight = *amp;
                let mut rest = x;
                for k in (0..n).rev() {
                    let xk = rest % d;
                    rest /= d;
                    if k != party {
                        weight *= parts[k][xk].conj();
                    }
                }
                contraction[digit] += weight;
            }
            let norm = contraction.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if norm <= tol::ZERO_NORM {
                // state is orthogonal to everything built from the other
                // parties; keep the current vector and let a restart move on
                sweep_value = 0.0;
                continue;
            }
            for (slot, x) in parts[party].iter_mut().zip(&contraction) {
                *slot = x / norm;
            }
            // after the update the overlap against the fixed parties is ‖c‖
            sweep_value = norm * norm;
        }
        history.push(sweep_value);
        if sweep_value - previous < improve_tol && previous.is_finite() {
            converged = true;
            previous = previous.max(sweep_value);
            break;
        }
        previous = sweep_value;
    }
    (previous.max(0.0), parts, converged, history)
}

fn random_parts(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<C64>> {
    (0..n)
        .map(|_| {
            let mut v: Vec<C64> = (0..d)
                .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            for x in v.iter_mut() {
                *x /= norm;
            }
            v
        })
        .collect()
}

/// Alternating maximization of |⟨e|ψ⟩|² over product states, best of
/// `restarts` runs.
///
/// Restart vectors are per-part complex normal samples, drawn from streams
/// derived by counter from a fixed seed, so the result is a deterministic
/// function of the arguments. Each restart sweeps the parties in turn until
/// the squared overlap improves by less than `improve_tol` or `max_iter`
/// sweeps have run; the sweep value never decreases. The returned pmax is
/// the best recorded value, with `converged` reporting whether that restart
/// stopped on tolerance rather than the cap.
pub fn pmax_variational(
    state: &PureState,
    restarts: usize,
    max_iter: usize,
    improve_tol: f64,
) -> MeasureResult {
    let restarts = restarts.max(1);
    let mut best_value = f64::NEG_INFINITY;
    let mut best_parts = None;
    let mut best_converged = false;

    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED);
        rng.set_stream(restart as u64);
        let init = random_parts(state.n(), state.d(), &mut rng);
        let (value, parts, converged, _) = variational_run(state, init, max_iter, improve_tol);
        if value > best_value {
            best_value = value;
            best_parts = Some(parts);
            best_converged = converged;
        }
    }

    let pmax = best_value.clamp(0.0, 1.0);
    MeasureResult {
        method: Method::Variational,
        pmax,
        g: (1.0 - pmax).sqrt(),
        witness: best_parts.map(ProductVector::from_normalized),
        converged: best_converged,
    }
}

/// Variational route with the default restart/iteration/tolerance settings.
pub fn pmax_variational_default(state: &PureState) -> MeasureResult {
    pmax_variational(state, DEFAULT_RESTARTS, DEFAULT_MAX_ITER, DEFAULT_TOL)
}

/// The published real-amplitude closed form for two qutrits, evaluated
/// literally.
///
/// With S∓ = √((a₁₁∓a₂₂)² + (a₂₁±a₁₂)²), R₁ = √(a₁₃²+a₂₃²),
/// R₂ = √(a₃₁²+a₃₂²) and h = (S₋+S₊)/2:
///
/// ```text
/// P = ¼ · (√((a₃₃−h)² + (R₁+R₂)²) + √((a₃₃+h)² + (R₁−R₂)²))²
/// ```
///
/// Inputs must be 3×3 with imaginary parts below [`tol::REAL_INPUT`]. The
/// value is not clamped: on some states it exceeds both 1 and the true
/// maximum, which is exactly what the audit quantifies.
pub fn pmax_closed_form_real(matrix: &CoeffMatrix) -> Result<f64> {
    if matrix.d() != 3 {
        return Err(Error::NotQutritPair { d: matrix.d() });
    }
    let max_imag = matrix
        .entries()
        .iter()
        .map(|e| e.im.abs())
        .fold(0.0f64, f64::max);
    if max_imag > tol::REAL_INPUT {
        return Err(Error::ComplexAmplitudes { max_imag });
    }
    let a = |i: usize, j: usize| matrix.get(i, j).re;
    let s_minus = (a(0, 0) - a(1, 1)).hypot(a(1, 0) + a(0, 1));
    let s_plus = (a(0, 0) + a(1, 1)).hypot(a(1, 0) - a(0, 1));
    let r1 = a(0, 2).hypot(a(1, 2));
    let r2 = a(2, 0).hypot(a(2, 1));
    let h = (s_minus + s_plus) / 2.0;
    let term1 = (a(2, 2) - h).hypot(r1 + r2);
    let term2 = (a(2, 2) + h).hypot(r1 - r2);
    Ok(0.25 * (term1 + term2).powi(2))
}

/// Closed form evaluated on a state's coefficient matrix.
pub fn pmax_closed_form_for_state(state: &PureState) -> Result<f64> {
    pmax_closed_form_real(&CoeffMatrix::from_state(state)?)
}

/// Von Neumann entropy of either reduction, −Σ λ log_d λ, in [0, 1].
///
/// The logarithm base is the local dimension (base 3 for qutrits), so a
/// maximally entangled pair measures exactly 1. Eigenvalue rounding noise is
/// clamped: λ ≤ 0 contributes nothing and the total is clipped into [0, 1].
pub fn entropy_of_entanglement(state: &PureState) -> Result<f64> {
    let rho = DensityMatrix::reduced(state, Party::First)?;
    let ln_d = (state.d() as f64).ln();
    let mut total = 0.0;
    for lambda in rho.eigenvalues()? {
        if lambda > 0.0 {
            let l = lambda.min(1.0);
            total -= l * l.ln() / ln_d;
        }
    }
    Ok(total.clamp(0.0, 1.0))
}
