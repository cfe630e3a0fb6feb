//! Detection of hidden automatic sequences in fixed points of word morphisms.
//!
//! The crate works on finite-alphabet morphisms and their iterative fixed points. It certifies
//! `q`-automaticity through the left-eigenvector criterion on the incidence matrix, anagram
//! decompositions of the images and non-overlapping block morphisms, and produces explicit
//! uniform-morphism-plus-coding certificates for every positive answer. Negative answers come
//! from exact spectral arguments (a primitive non-uniform morphism with an irrational dominant
//! eigenvalue); everything else is reported as unknown together with factor-complexity evidence.
//!
//! All arithmetic that feeds a verdict is exact (arbitrary precision integers and rationals).
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod constructions;
pub mod criteria;
mod error;
pub mod linalg;
pub mod sequence;
pub mod word;

pub use error::{Error, Result};
