//! Quantum discord and entanglement of Werner and quasi-Werner two-qubit
//! states built from bipartite entangled coherent states.
//!
//! Every state handled here lives in a 4-dimensional two-qubit space spanned
//! by the even/odd cat basis `{|++>, |+->, |-+>, |-->}` (subsystem X first),
//! so all linear algebra is done on fixed-size 2x2 and 4x4 buffers and the
//! crate needs neither `std` nor `alloc`.
//!
//! Quantities are computed along two independent routes:
//!
//! * closed forms in terms of the coherent amplitude and the mixing weight
//!   ([`werner`], [`discord::discord_quasi_closed`],
//!   [`discord::werner_discord_closed`], [`discord::zurek_discord`]);
//! * a generic density-matrix pipeline (partial traces, Jacobi
//!   eigendecomposition, projective measurement on Y, spin flip) that knows
//!   nothing about the closed forms ([`discord::discord_at`],
//!   [`entanglement::concurrence_mixed`]).
//!
//! All entropies are in bits.
#![cfg_attr(not(test), no_std)]

pub mod catstates;
pub mod discord;
pub mod entanglement;
mod error;
pub mod math;
pub mod minimize;
pub mod qmatrix;
pub mod werner;

pub use catstates::{CatParams, PureStateVector, StateFamily, MIN_MEAN_PHOTON};
pub use discord::{DiscordEvaluator, DiscordResult, MeasurementBasis};
pub use entanglement::EntanglementResult;
pub use error::{Error, Result};
pub use qmatrix::{ComplexMatrix, Spectrum, Subsystem, C64};
pub use werner::{Mixing, WernerSpec, WernerSpectra};
