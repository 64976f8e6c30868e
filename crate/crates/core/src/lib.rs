//! Constructive discrete Morse theory for simplicial complexes.
//!
//! The crate covers exact Z2 homology, acyclic Morse matchings, tightness of
//! geometric realizations, the height-sweep construction of perfect Morse
//! matchings on tight complexes in 3-space, and decision procedures for
//! collapsibility and non-evasiveness.

pub mod algorithms;
pub mod complex;
pub mod constructions;
pub mod geometry;
mod hasse;
pub mod homology;
pub mod io;
pub mod morse;
pub mod par;
pub mod rational;

pub use complex::{ComplexError, FVector, Face, SimplicialComplex, Vertex};
pub use homology::{betti, BettiVector, BitMatrix};
pub use morse::{MorseMatching, MorseVector};
pub use par::Execution;
