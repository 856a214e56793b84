//! Exact-arithmetic analysis of rational pointed fans and their toric face
//! rings.
//!
//! A rational pointed fan in Z^d determines a toric face ring: the vector
//! space on the lattice points of the fan's support, with x^a * x^b = x^(a+b)
//! when a and b share a cone and 0 otherwise. This crate builds such fans
//! from exact integer data and decides, with explicit witnesses:
//!
//! - Cohen-Macaulayness over Q or any prime field (star cohomology),
//! - the Euler property and Gorensteinness (with the degree shift sigma),
//! - whether the canonical module embeds as a graded ideal, and the
//!   boundary subfan realizing it,
//! - shellability, semishellability and cleanness of the fan, with
//!   certificates and lattice witnesses.
//!
//! All arithmetic is arbitrary-precision integer/rational; conditions that
//! quantify over infinitely many lattice points are verified on a window
//! [-R, R]^d and reported with that qualifier.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `toric-fan` binary for the command-line front end.

pub mod cli;
pub mod document;
pub mod error;
pub mod fan;
pub mod field;
pub mod geometry;
pub mod homology;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod shelling;

pub use error::{Error, Result};
pub use fan::{join_fan, ConeId, Fan, Star, Subfan};
pub use field::Field;
pub use geometry::{Cone, LatticeBox, LatticeVector};
