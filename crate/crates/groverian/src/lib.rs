//! Qudit state vectors, Grover iteration on qutrit registers, and the
//! Groverian entanglement measure G(ψ) = √(1 − P_max) computed three
//! independent ways.
//!
//! P_max is the best squared overlap of a state with any product state. The
//! library computes it
//!
//! 1. exactly for bipartite states from the top singular value of the
//!    coefficient matrix ([`measures::pmax_svd_oracle`]),
//! 2. for any register shape by alternating maximization over product
//!    vectors ([`measures::pmax_variational`]), and
//! 3. through the published two-qutrit real-amplitude closed form
//!    ([`measures::pmax_closed_form_real`]), kept verbatim so its
//!    disagreement with the true maximum can be audited
//!    ([`audit::formula_audit`]).
//!
//! The [`grover`] module applies oracle and diffusion reflections as rank-1
//! updates and records entanglement along a search trajectory; the binary
//! exposes `measure`, `trajectory`, and `audit` subcommands over flat JSON
//! and CSV files.
//!
//! Everything is a pure function of its inputs: states are immutable after
//! construction, random ensembles and restarts derive their streams from
//! explicit seeds by counter, and repeated runs are byte-identical.

pub mod audit;
pub mod bipartite;
mod error;
pub mod grover;
pub mod io;
mod jacobi;
pub mod measures;
pub mod product;
pub mod report;
pub mod state;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use audit::{formula_audit, AuditRow, AuditSummary, Ensemble};
pub use bipartite::{CoeffMatrix, DensityMatrix, Party};
pub use grover::{GroverStep, GroverTrace, StepLabel};
pub use measures::{MeasureResult, Method};
pub use product::{angles_from_product_vector, ProductVector, QutritAngles};
pub use state::{NormPolicy, PureState};
