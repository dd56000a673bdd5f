pub mod diagram;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod orbit;
pub mod picard;
pub mod pipeline;
pub mod spectral;

pub use error::{Error, Result};
