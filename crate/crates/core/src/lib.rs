//! Exact computations on Hom-Lie algebras of Heisenberg type over Q(i).

pub mod cohomology;
pub mod derivations;
pub mod error;
pub mod exactla;
pub mod heisenberg;
pub mod homlie;
pub mod json;
pub mod representations;
pub mod symplectic;

pub use error::{Error, Result};
pub use exactla::{Matrix, Scalar, SubspaceBasis};
pub use heisenberg::HeisenbergAlgebra;
pub use homlie::HomLieAlgebra;
pub use representations::Representation;
