pub mod bazaikin;
pub mod cohomology;
pub mod error;
pub mod groups;
pub mod pipeline;
pub mod primes;
pub mod serre;

pub use error::{Error, Result};
