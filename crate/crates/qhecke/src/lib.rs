//! Exact computer algebra for finite groups acting on quantum polynomial
//! rings.
//!
//! The crate decides when a deformation of a skew group algebra over a
//! quantum polynomial ring admits a Poincare-Birkhoff-Witt basis, by two
//! independent routes: a noncommutative Groebner basis engine
//! ([`groebner`]) and closed-form conditions on the deformation
//! parameters ([`qdha`]). The space of admissible parameters can also be
//! solved for and classified directly ([`classify`]).
//!
//! All arithmetic is exact, over cyclotomic fields ([`scalar`]).

pub mod classify;
pub mod cli;
pub mod freealg;
pub mod groebner;
pub mod group;
pub mod linalg;
pub mod qdha;
pub mod scalar;
