//! Square matrices over finite fields as group elements: products, inverses,
//! characteristic polynomials, element and projective orders, similarity
//! invariants.

pub mod linalg;
mod matrix;
mod order;
mod smith;

pub use matrix::Matrix;
pub use order::{element_order, element_order_brute, element_order_capped, projective_order};
pub use smith::{invariant_factors, is_conjugate, smith_diagonal, InvariantFactors};
