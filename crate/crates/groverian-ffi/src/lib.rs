//! C ABI over the groverian library.
//!
//! States are opaque handles created and freed here; every function returns a
//! [`GvStatus`] and writes results through out-pointers. The header in
//! `include/groverian.h` is generated from this file by cbindgen at build
//! time. Handles are immutable: reflections return new states instead of
//! mutating, so a handle can be shared across threads and freed exactly once.

use std::ptr;

use groverian::grover;
use groverian::measures;
use groverian::{Complex64, Error, NormPolicy, PureState};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GvStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Register shape, amplitude count, or iteration parameters are invalid.
    InvalidArgument = 2,
    /// An input component is NaN or infinite.
    NonFinite = 3,
    /// The amplitude vector is numerically zero.
    ZeroNorm = 4,
    /// Strict construction rejected an off-norm vector.
    NotNormalized = 5,
    /// Operands have different register shapes.
    ShapeMismatch = 6,
    /// A basis index is out of range.
    IndexOutOfRange = 7,
    /// The operation needs a two-party state.
    NotBipartite = 8,
    /// The supplied matrix is not unitary.
    NotUnitary = 9,
    /// The closed form was requested for a complex or non-qutrit state.
    NotApplicable = 10,
}

fn status_of(err: &Error) -> GvStatus {
    match err {
        Error::NonFinite => GvStatus::NonFinite,
        Error::ZeroNorm { .. } => GvStatus::ZeroNorm,
        Error::NotNormalized { .. } => GvStatus::NotNormalized,
        Error::ShapeMismatch => GvStatus::ShapeMismatch,
        Error::IndexOutOfRange { .. } | Error::PartyOutOfRange { .. } => GvStatus::IndexOutOfRange,
        Error::NotBipartite { .. } => GvStatus::NotBipartite,
        Error::NotUnitary { .. } => GvStatus::NotUnitary,
        Error::NotQutritPair { .. } | Error::ComplexAmplitudes { .. } => GvStatus::NotApplicable,
        _ => GvStatus::InvalidArgument,
    }
}

/// Opaque handle to a normalized pure state.
pub struct GvState(PureState);

/// Which route computes a measurement.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GvMethod {
    /// Exact bipartite route from the top singular pair.
    Oracle = 0,
    /// Alternating maximization over product vectors, any register shape.
    Variational = 1,
    /// The published two-qutrit real-amplitude expression, evaluated
    /// literally (it may exceed the true maximum; g clips the excess).
    ClosedForm = 2,
}

/// A P_max / G measurement.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct GvMeasurement {
    pub pmax: f64,
    pub g: f64,
    /// False when the variational route stopped on its iteration cap.
    pub converged: bool,
}

unsafe fn give(out: *mut *mut GvState, state: PureState) -> GvStatus {
    *out = Box::into_raw(Box::new(GvState(state)));
    GvStatus::Ok
}

/// Build a state from split real/imaginary amplitude arrays of length `len`.
///
/// `len` must equal d^n. With `normalize` false the vector must already be
/// unit norm to 1e-9; with it true any non-zero vector is rescaled.
///
/// # Safety
/// `re`, `im`, and `out` must be valid for reads/writes of the stated
/// lengths. On success `*out` owns the state and must be released with
/// [`gv_state_free`].
#[no_mangle]
pub unsafe extern "C" fn gv_state_new(
    n: usize,
    d: usize,
    re: *const f64,
    im: *const f64,
    len: usize,
    normalize: bool,
    out: *mut *mut GvState,
) -> GvStatus {
    if re.is_null() || im.is_null() || out.is_null() {
        return GvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let re = std::slice::from_raw_parts(re, len);
    let im = std::slice::from_raw_parts(im, len);
    let amps = re
        .iter()
        .zip(im)
        .map(|(&r, &i)| Complex64::new(r, i))
        .collect();
    let policy = if normalize {
        NormPolicy::Normalize
    } else {
        NormPolicy::Strict
    };
    match PureState::new(n, d, amps, policy) {
        Ok(state) => give(out, state),
        Err(e) => status_of(&e),
    }
}

/// The uniform superposition over n qudits of dimension d.
///
/// # Safety
/// `out` must be valid for a write; the result must be freed.
#[no_mangle]
pub unsafe extern "C" fn gv_state_uniform(n: usize, d: usize, out: *mut *mut GvState) -> GvStatus {
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    match PureState::uniform(n, d) {
        Ok(state) => give(out, state),
        Err(e) => status_of(&e),
    }
}

/// Release a state handle. Null is a no-op.
///
/// # Safety
/// `state` must be a pointer returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gv_state_free(state: *mut GvState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Party count of a state, 0 on null.
///
/// # Safety
/// `state` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gv_state_num_parties(state: *const GvState) -> usize {
    state.as_ref().map_or(0, |s| s.0.n())
}

/// Local dimension of a state, 0 on null.
///
/// # Safety
/// `state` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gv_state_local_dim(state: *const GvState) -> usize {
    state.as_ref().map_or(0, |s| s.0.d())
}

/// Total amplitude count d^n, 0 on null.
///
/// # Safety
/// `state` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gv_state_len(state: *const GvState) -> usize {
    state.as_ref().map_or(0, |s| s.0.dim())
}

/// Copy the amplitudes into split real/imaginary arrays of length `len`
/// (which must equal `gv_state_len`).
///
/// # Safety
/// `re_out` and `im_out` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn gv_state_amplitudes(
    state: *const GvState,
    re_out: *mut f64,
    im_out: *mut f64,
    len: usize,
) -> GvStatus {
    let Some(state) = state.as_ref() else {
        return GvStatus::NullArgument;
    };
    if re_out.is_null() || im_out.is_null() {
        return GvStatus::NullArgument;
    }
    if len != state.0.dim() {
        return GvStatus::InvalidArgument;
    }
    let re = std::slice::from_raw_parts_mut(re_out, len);
    let im = std::slice::from_raw_parts_mut(im_out, len);
    for (k, amp) in state.0.amps().iter().enumerate() {
        re[k] = amp.re;
        im[k] = amp.im;
    }
    GvStatus::Ok
}

/// |⟨marked|state⟩|².
///
/// # Safety
/// `state` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn gv_success_probability(
    state: *const GvState,
    marked: usize,
    out: *mut f64,
) -> GvStatus {
    let Some(state) = state.as_ref() else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    match grover::success_probability(&state.0, marked) {
        Ok(p) => {
            *out = p;
            GvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Oracle reflection: a new state with the marked amplitude negated.
///
/// # Safety
/// `state` must be a live handle; `out` valid for a write; the result must
/// be freed.
#[no_mangle]
pub unsafe extern "C" fn gv_oracle_reflect(
    state: *const GvState,
    marked: usize,
    out: *mut *mut GvState,
) -> GvStatus {
    let Some(state) = state.as_ref() else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    match grover::oracle_reflect(&state.0, marked) {
        Ok(next) => give(out, next),
        Err(e) => status_of(&e),
    }
}

/// Diffusion reflection 2|ref⟩⟨ref| − 1 applied to `state`.
///
/// # Safety
/// Both handles must be live; `out` valid for a write; the result must be
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gv_diffusion_reflect(
    state: *const GvState,
    reference: *const GvState,
    out: *mut *mut GvState,
) -> GvStatus {
    let (Some(state), Some(reference)) = (state.as_ref(), reference.as_ref()) else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    match grover::diffusion_reflect(&state.0, &reference.0) {
        Ok(next) => give(out, next),
        Err(e) => status_of(&e),
    }
}

/// One Grover iteration: diffusion about `reference` after the oracle.
///
/// # Safety
/// Both handles must be live; `out` valid for a write; the result must be
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gv_grover_iteration(
    state: *const GvState,
    marked: usize,
    reference: *const GvState,
    out: *mut *mut GvState,
) -> GvStatus {
    let (Some(state), Some(reference)) = (state.as_ref(), reference.as_ref()) else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    *out = ptr::null_mut();
    match grover::grover_iteration(&state.0, marked, &reference.0) {
        Ok(next) => give(out, next),
        Err(e) => status_of(&e),
    }
}

/// Iteration count maximizing success for `marked_count` marked states out
/// of `space`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn gv_optimal_iterations(
    space: u64,
    marked_count: u64,
    out: *mut u64,
) -> GvStatus {
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    match grover::optimal_iterations(space, marked_count) {
        Ok(m) => {
            *out = m;
            GvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Compute P_max and G by the chosen route. The variational route runs with
/// its default restarts, sweep cap, and tolerance.
///
/// # Safety
/// `state` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn gv_measure(
    state: *const GvState,
    method: GvMethod,
    out: *mut GvMeasurement,
) -> GvStatus {
    let Some(state) = state.as_ref() else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    let result = match method {
        GvMethod::Oracle => match measures::pmax_svd_oracle(&state.0) {
            Ok(m) => GvMeasurement {
                pmax: m.pmax,
                g: m.g,
                converged: m.converged,
            },
            Err(e) => return status_of(&e),
        },
        GvMethod::Variational => {
            let m = measures::pmax_variational_default(&state.0);
            GvMeasurement {
                pmax: m.pmax,
                g: m.g,
                converged: m.converged,
            }
        }
        GvMethod::ClosedForm => match measures::pmax_closed_form_for_state(&state.0) {
            Ok(pmax) => GvMeasurement {
                pmax,
                g: (1.0 - pmax.clamp(0.0, 1.0)).sqrt(),
                converged: true,
            },
            Err(e) => return status_of(&e),
        },
    };
    *out = result;
    GvStatus::Ok
}

/// Von Neumann entropy of either reduction (base = local dimension).
///
/// # Safety
/// `state` must be a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn gv_entropy_of_entanglement(
    state: *const GvState,
    out: *mut f64,
) -> GvStatus {
    let Some(state) = state.as_ref() else {
        return GvStatus::NullArgument;
    };
    if out.is_null() {
        return GvStatus::NullArgument;
    }
    match measures::entropy_of_entanglement(&state.0) {
        Ok(entropy) => {
            *out = entropy;
            GvStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
