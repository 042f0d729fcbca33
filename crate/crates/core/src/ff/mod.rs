//! Finite fields `GF(p^m)` in polynomial basis, embeddings between them and
//! the integer number theory they rely on.

mod embed;
mod field;
pub mod numtheory;

pub use embed::Embedding;
pub use field::{subfield_generated, Elem, Field, SubfieldDescriptor};
pub use numtheory::{check_phi_bounds, euler_phi};

#[cfg(test)]
mod tests;
