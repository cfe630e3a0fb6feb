//! Exact integer and rational matrix computations on incidence matrices.
//!
//! Convention: entry `[i][j]` of an incidence matrix counts the occurrences of letter `i` in the
//! image of letter `j`, so columns are indexed by source letters and column sums are the image
//! lengths.

mod matrix;
mod poly;
mod spectral;

pub use matrix::{nullspace, IntMatrix};
pub use poly::{char_poly, integer_roots, IntPolynomial};
pub use spectral::{
    is_primitive, left_eigencheck, perron_frequencies, radius_bracket, spectral_report,
    strongly_connected_components, RadiusBracket, SpectralReport, DEFAULT_MAX_ITERATIONS,
};

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::word::Morphism;

/// Incidence matrix and length vector of a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceData {
    pub matrix: IntMatrix,
    pub length_vector: Vec<BigInt>,
}

impl IncidenceData {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

pub fn incidence(m: &Morphism) -> IncidenceData {
    let r = m.alphabet().len();
    let mut matrix = IntMatrix::zeros(r, r);
    for (j, image) in m.images().iter().enumerate() {
        for &i in image.iter() {
            matrix.add_one(i, j);
        }
    }
    let length_vector = m.images().iter().map(|w| BigInt::from(w.len())).collect();
    IncidenceData {
        matrix,
        length_vector,
    }
}
