//! Exact machinery for geometric vertex decompositions and their Schubert
//! calculus applications.
//!
//! The crate is `no_std` and only needs `alloc`. Layers, bottom up:
//!
//! - [`roots`]: finite root systems and Weyl group arithmetic on the root lattice.
//! - [`bruhat`]: Bruhat order, reduced words, Demazure products.
//! - [`simplicial`]: simplicial complexes, rational homology, Reisner's
//!   criterion, shellings, vertex decompositions, Stanley–Reisner ideals.
//! - [`polyalg`]: exact polynomials over ℚ, reduced Gröbner bases, ideal
//!   operations, dimension, K-polynomials and multidegrees.
//! - [`classes`]: restriction classes in equivariant cohomology and K-theory.
//! - [`subword`]: subword complexes and localization formulas.
//! - [`gvd`]: initial y-ideals, the I′/C/P split, one-parameter families,
//!   gluing checks, limit certificates and the normality probe.
//! - [`schubert`]: type A Schubert patch ideals and their degeneration chains.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bruhat;
pub mod classes;
mod error;
pub mod gvd;
pub mod polyalg;
pub mod roots;
pub mod schubert;
pub mod simplicial;
pub mod subword;

pub use error::{Error, Result};
