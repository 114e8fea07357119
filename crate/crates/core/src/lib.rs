pub mod bits;
pub mod error;
pub mod hamiltonian;
pub mod optimizer;
pub mod sampler;
pub mod scan;
pub mod trial_state;
pub mod units;

pub use error::{Error, Result};
