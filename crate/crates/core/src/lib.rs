//! Exact independent-set and homomorphism counting for small graphs, with
//! executable checks of the regular-graph bounds on the hard-core partition
//! function.
//!
//! Every comparison is carried out in exact integer or rational arithmetic;
//! fractional exponents are removed by raising both sides to a common power.

pub mod bijection;
pub mod bounds;
pub mod claims;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hom;
pub mod indset;
pub mod poly;
pub mod rational;
pub mod scan;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexSet, MAX_VERTICES};
pub use poly::{BivariatePolynomial, IntPolynomial, Termwise};
pub use rational::Rational;
