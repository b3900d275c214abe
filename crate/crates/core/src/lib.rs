pub mod error;
pub mod complexes;
pub mod duality;
pub mod groebner;
pub mod oracle;
pub mod ring;

pub use error::{Error, Result};
