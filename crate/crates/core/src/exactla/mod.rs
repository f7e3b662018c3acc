//! Exact linear algebra over the rationals and prime fields.

mod echelon;
mod matrix;
mod poly;
mod rational;
mod scalar;

pub use echelon::{complement_indices, Echelon, Subspace};
pub use matrix::{
    add_vec, axpy, dot, in_span, is_zero_vec, scale_vec, solve_space, sub_vec, unit_vec, zero_vec,
    AffineSpace, Matrix, Rref, Vector,
};
pub use poly::{eval, field_roots};
pub use rational::Rational;
pub use scalar::{Field, Scalar};
