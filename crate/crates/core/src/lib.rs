//! Rainbow subsets of edge-coloured complete k-hypergraphs.
//!
//! A colouring of the k-subsets of a ground set in which no `h`-subset lies
//! in more than `lambda` edges of one colour always leaves a large set whose
//! edges all get distinct colours. This crate finds such sets:
//!
//! - [`hypergraph`]: colour classes, sunflower audits, the conflict hypergraph;
//! - [`engine`]: greedy, sample-and-delete and exact search, plus diagnostics
//!   and the benchmark harness;
//! - [`geometry`]: circumradius, volume and similarity-type colourings of
//!   point sets with exact rationals;
//! - [`algebra`]: symmetric polynomial and Sidon difference colourings;
//! - [`io`]: JSON instance/result formats.

pub mod algebra;
pub mod colour;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod hypergraph;
pub mod io;
pub mod subsets;

pub use colour::{ColorKey, Colouring, ColouringSpec, ConstantColouring, FnColouring, InjectiveColouring};
pub use error::{Error, Result};
pub use subsets::{Budget, GroundSet};
