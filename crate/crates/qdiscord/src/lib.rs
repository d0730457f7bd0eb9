//! Parameter sweeps, CSV/JSON output, config files and the `qdiscord`
//! command line on top of `qdiscord-core`.

pub mod cli;
pub mod config;
mod error;
pub mod format;
pub mod sweep;
pub mod verify;

pub use error::CliError;
pub use format::Format;
pub use sweep::SweepConfig;
