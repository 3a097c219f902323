pub mod algebra;
pub mod bundle;
pub mod chow;
pub mod error;
pub mod plucker;
pub mod verify;

pub use error::{Error, Result};
