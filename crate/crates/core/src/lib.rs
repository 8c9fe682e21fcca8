pub mod coeffs;
pub mod error;
pub mod families;
pub mod phi;
pub mod poly;
pub mod sampling;
pub mod oracle;
pub mod scalar;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{parse_scalar, GaussScalar, QContext};
pub use vector::{CoefficientVector, Kind};
