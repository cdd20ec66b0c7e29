pub mod error;
pub mod gf;
pub mod linalg;

pub use error::{Error, Result};
pub use gf::{Field, Scalar};
pub use linalg::{Matrix, SubspaceBasis, Vector};
pub mod code;
pub mod families;
pub mod minimality;
pub mod witness;
