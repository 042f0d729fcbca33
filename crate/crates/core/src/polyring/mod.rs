//! Polynomials over `Z` and over finite fields: arithmetic, gcd, resultants,
//! factorization.

mod bivar;
mod fieldpoly;
mod intpoly;
pub mod ring;
mod text;

pub use bivar::{BivarPoly, Var};
pub use fieldpoly::{gcd_coprime, FieldPoly};
pub use intpoly::IntPoly;
pub use ring::{bareiss_det, resultant, sylvester_matrix, FieldPolys, Integers, IntPolys, Ring};

use num_integer::Integer;
use serde_json::json;

use crate::error::{Error, Result};
use crate::ff::Field;
use crate::report::ClaimReport;

/// Degree of the splitting field of `f mod p` over `GF(p)`, with the
/// degrees of the irreducible factors of `f mod p`.
pub fn splitting_degree(f: &IntPoly, p: u64) -> Result<(u32, Vec<usize>)> {
    let fp = Field::prime(p)?;
    let red = f.reduce(&fp);
    if red.is_zero() {
        return Err(Error::VanishesModP(p));
    }
    let degrees: Vec<usize> =
        red.factor()?.iter().map(|(g, _)| g.degree().expect("nonzero factor")).collect();
    let d = degrees.iter().fold(1usize, |acc, &d| acc.lcm(&d));
    Ok((d as u32, degrees))
}

/// Reduces `f` mod `p`, finds the smallest `GF(p^d)` over which it splits
/// into linear factors, and checks that this field contains an element of
/// order `k / (p-part of k)`.
pub fn splitting_order_check(f: &IntPoly, p: u64, k: u64) -> Result<ClaimReport> {
    let (d, degrees) = splitting_degree(f, p)?;
    let mut need = k;
    while need.is_multiple_of(p) {
        need /= p;
    }
    let size = (p as u128).pow(d);
    let contains = (size - 1) % need as u128 == 0;
    let mut report = ClaimReport::new(format!("splitting field of {f} mod {p}"));
    report.check(
        format!("GF({p}^{d}) contains an element of order {need}"),
        contains,
        format!("factor degrees {degrees:?}"),
    );
    report.data = json!({ "p": p, "splitting_degree": d, "factor_degrees": degrees, "required_order": need });
    Ok(report)
}

#[cfg(test)]
mod tests;
