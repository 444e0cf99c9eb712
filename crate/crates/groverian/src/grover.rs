//! Grover reflections and iteration trajectories on qudit registers.
//!
//! The oracle Pw = 1 − 2|W⟩⟨W| negates the marked amplitude; the diffusion
//! Pψ = 2|ψ⟩⟨ψ| − 1 reflects about the initial uniform state. One iteration
//! is diffusion after oracle. Both reflections are applied as rank-1 updates
//! in O(dⁿ); no operator matrix is ever materialized. For a single marked
//! state out of N the success probability after m iterations follows the
//! rotation identity sin²((2m+1)·asin(1/√N)).

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::state::PureState;

/// Position of a snapshot within a trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepLabel {
    Init,
    /// After the k-th oracle reflection (k starts at 1).
    Oracle(usize),
    /// After the k-th diffusion reflection.
    Diffusion(usize),
}

impl std::fmt::Display for StepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StepLabel::Init => write!(f, "init"),
            StepLabel::Oracle(k) => write!(f, "oracle-{k}"),
            StepLabel::Diffusion(k) => write!(f, "diffusion-{k}"),
        }
    }
}

/// One recorded step: the state after the labelled operation and its success
/// probability |⟨W|state⟩|².
#[derive(Clone, Debug)]
pub struct GroverStep {
    pub label: StepLabel,
    pub state: PureState,
    pub success: f64,
}

/// An ordered record of a Grover run, starting with the initial state.
#[derive(Clone, Debug)]
pub struct GroverTrace {
    pub marked: usize,
    pub steps: Vec<GroverStep>,
}

/// |⟨W|state⟩|² for the marked basis state.
pub fn success_probability(state: &PureState, marked: usize) -> Result<f64> {
    if marked >= state.dim() {
        return Err(Error::IndexOutOfRange {
            index: marked,
            dim: state.dim(),
        });
    }
    Ok(state.amp(marked).norm_sqr())
}

/// Oracle reflection: negate the marked amplitude, leave the rest unchanged.
pub fn oracle_reflect(state: &PureState, marked: usize) -> Result<PureState> {
    oracle_reflect_set(state, &[marked])
}

/// Oracle reflection over a set of marked states. Indices are treated as a
/// set: duplicates collapse to one sign flip.
pub fn oracle_reflect_set(state: &PureState, marked: &[usize]) -> Result<PureState> {
    let mut indices = marked.to_vec();
    indices.sort_unstable();
    indices.dedup();
    let mut amps = state.amps().to_vec();
    for &idx in &indices {
        if idx >= amps.len() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                dim: amps.len(),
            });
        }
        amps[idx] = -amps[idx];
    }
    Ok(PureState::from_normalized(state.n(), state.d(), amps))
}

/// Diffusion reflection about `reference`: returns 2⟨ref|s⟩·ref − s.
pub fn diffusion_reflect(state: &PureState, reference: &PureState) -> Result<PureState> {
    if !state.same_shape(reference) {
        return Err(Error::ShapeMismatch);
    }
    let overlap = reference.inner(state)?;
    let two_overlap = C64::new(2.0, 0.0) * overlap;
    let amps = reference
        .amps()
        .iter()
        .zip(state.amps())
        .map(|(r, s)| two_overlap * r - s)
        .collect();
    Ok(PureState::from_normalized(state.n(), state.d(), amps))
}

/// One Grover iteration: diffusion about `reference` after the oracle.
pub fn grover_iteration(
    state: &PureState,
    marked: usize,
    reference: &PureState,
) -> Result<PureState> {
    diffusion_reflect(&oracle_reflect(state, marked)?, reference)
}

/// Iteration count maximizing the success probability for r marked states in
/// a space of N: round((π / (2·asin(√(r/N))) − 1) / 2), at least 1.
pub fn optimal_iterations(space: u64, marked_count: u64) -> Result<u64> {
    if marked_count < 1 || marked_count >= space {
        return Err(Error::BadMarkedCount {
            marked: marked_count,
            space,
        });
    }
    let theta = (marked_count as f64 / space as f64).sqrt().asin();
    let m = ((std::f64::consts::PI / (2.0 * theta) - 1.0) / 2.0).round();
    Ok((m as u64).max(1))
}

/// Run `iterations` Grover iterations from the uniform state, recording the
/// state and success probability after the initial step and after every
/// reflection. The diffusion reference is always the initial uniform state.
pub fn run_trajectory(n: usize, d: usize, marked: usize, iterations: usize) -> Result<GroverTrace> {
    if iterations < 1 {
        return Err(Error::NoIterations);
    }
    let reference = PureState::uniform(n, d)?;
    if marked >= reference.dim() {
        return Err(Error::IndexOutOfRange {
            index: marked,
            dim: reference.dim(),
        });
    }
    let mut steps = Vec::with_capacity(1 + 2 * iterations);
    let mut current = reference.clone();
    steps.push(GroverStep {
        label: StepLabel::Init,
        success: success_probability(&current, marked)?,
        state: current.clone(),
    });
    for k in 1..=iterations {
        current = oracle_reflect(&current, marked)?;
        steps.push(GroverStep {
            label: StepLabel::Oracle(k),
            success: success_probability(&current, marked)?,
            state: current.clone(),
        });
        current = diffusion_reflect(&current, &reference)?;
        steps.push(GroverStep {
            label: StepLabel::Diffusion(k),
            success: success_probability(&current, marked)?,
            state: current.clone(),
        });
    }
    Ok(GroverTrace { marked, steps })
}
