//! Centralized numeric tolerances.
//!
//! Every bound the library enforces lives here so that operations and tests
//! reference the same constants instead of scattering magic numbers.

/// Max deviation of Σ|aₓ|² from 1 for a stored state vector.
pub const STATE_NORM: f64 = 1e-12;

/// Strict-mode acceptance band for the norm of caller-supplied amplitudes.
pub const STRICT_NORM: f64 = 1e-9;

/// Vectors with norm at or below this are rejected as zero.
pub const ZERO_NORM: f64 = 1e-14;

/// Unitarity bound for local unitaries: ‖U†U − I‖max must stay below this.
pub const UNITARY: f64 = 1e-10;

/// Hermiticity deviation accepted by the eigenvalue routine.
pub const HERMITIAN: f64 = 1e-9;

/// Hermiticity and trace bound enforced when a density matrix is built
/// from raw entries.
pub const DENSITY: f64 = 1e-12;

/// Eigenvalue floor for positive-semidefinite validation.
pub const PSD_FLOOR: f64 = -1e-10;

/// A Jacobi pass terminates once every off-diagonal magnitude is below this.
pub const JACOBI_OFF: f64 = 1e-14;

/// Hard cap on Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Below this sin θ the remaining qutrit angles are unidentifiable and are
/// reported as zero.
pub const ANGLE_DEGENERATE: f64 = 1e-12;

/// Slack accepted around [0, 1] for probabilities fed to the Groverian map.
pub const PMAX_SLACK: f64 = 1e-12;

/// Largest imaginary part tolerated by the real-amplitude closed form.
pub const REAL_INPUT: f64 = 1e-12;

/// |deviation| above which an audit row counts as a closed-form mismatch.
pub const AUDIT_FLAG: f64 = 1e-6;
