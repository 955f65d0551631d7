//! Symmetric-polynomial and Sidon-difference colourings of pairs.

mod field;
mod sidon;
mod sympoly;

pub use field::{is_prime_u64, Field, FieldElem};
pub use sidon::{is_b2_sequence, sidon_colouring, IntegerInstance, SidonColouring};
pub use sympoly::{poly_colouring, poly_prepare, PolyColouring, Prepared, SymPoly};
