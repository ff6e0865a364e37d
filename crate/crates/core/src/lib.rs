//! Combinatorial Schubert calculus.
//!
//! Permutations and reduced words, tableaux, pipe dreams, the Schubert,
//! Grothendieck, Schur, quasisymmetric, slide and glide polynomials, the Monk
//! and Pieri shuffle bijections on reduced words, and subword and tableau
//! complexes with ball/sphere classification.

pub mod complexes;
pub mod error;
pub mod golden;
pub mod perm;
pub mod pipedreams;
pub mod poly;
pub mod shapes;
pub mod shuffle;

pub use error::{Error, Result};
pub use perm::{Letter, Permutation, Word};
