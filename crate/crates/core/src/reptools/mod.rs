//! Module-theoretic tests for matrix groups given by generators: commutants,
//! irreducibility via the MeatAxe, exhaustive submodule search in dimension 3,
//! and invariant bilinear or hermitian forms.

mod brute;
mod commutant;
mod forms;
mod meataxe;

#[cfg(test)]
mod tests;

pub use brute::brute_submodules_dim3;
pub use commutant::{commutant_basis, commutant_dimension};
pub use forms::{form_space, hermitian_rescaling, invariant_forms, FormSolution, FormSpace, Twist};
pub use meataxe::{meataxe_irreducible, spin, ModuleVerdict};

use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::linalg::EchelonSpace;
use crate::matgrp::Matrix;

/// Checks that `gens` is nonempty and shares one field and dimension.
pub(crate) fn common_space(gens: &[Matrix]) -> Result<(Field, usize)> {
    let first = gens.first().ok_or_else(|| Error::Precondition("empty generator list".into()))?;
    for g in &gens[1..] {
        if g.n() != first.n() {
            return Err(Error::DimensionMismatch(format!("{} vs {}", first.n(), g.n())));
        }
        if g.field() != first.field() {
            return Err(Error::FieldMismatch(format!("{} vs {}", first.field(), g.field())));
        }
    }
    Ok((first.field().clone(), first.n()))
}

/// Whether the span of `basis` is mapped into itself by every generator.
pub fn is_invariant(gens: &[Matrix], basis: &[Vec<Elem>]) -> bool {
    let Some(g0) = gens.first() else {
        return true;
    };
    let mut space = EchelonSpace::new(g0.field(), g0.n());
    for v in basis {
        space.insert(v);
    }
    gens.iter().all(|g| basis.iter().all(|v| space.contains(&g.apply(v))))
}
