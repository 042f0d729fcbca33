use serde::Serialize;

use super::conditions::{dim3_irreducibility_conditions, dim5_irreducibility_conditions, OmegaField};
use super::pairs::build_dim5;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::projective_order;
use crate::polyring::FieldPoly;
use crate::report::ClaimReport;

/// Coefficients of the degree-15 polynomial `R`, constant term first.
pub const R15: [i64; 16] = [8, 0, 0, -37, 0, 0, -67, 0, 0, 59, 0, 0, -16, 0, 0, 1];

/// Predicted scalar powers of `z = xy` among `z^1, ..., z^7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dim3PowerClass {
    pub z5_scalar: bool,
    pub z7_scalar: bool,
    /// `a` and `b` are both nonzero roots of `R`.
    pub r_roots: bool,
}

impl Dim3PowerClass {
    /// Exponents `k <= 7` with `z^k` predicted scalar.
    pub fn scalar_exponents(&self) -> Vec<u32> {
        let mut out = Vec::new();
        if self.z5_scalar {
            out.push(5);
        }
        if self.z7_scalar {
            out.push(7);
        }
        out
    }
}

/// Coefficients of `e1` and `e2` in `z^7 e3`.
pub fn z7_e3_coefficients(f: &Field, a: Elem, b: Elem) -> (Elem, Elem) {
    let k = |v: i64| f.from_int(v);
    let p = |x: Elem, e: u64| f.pow(x, e);
    let sum = |terms: &[Elem]| terms.iter().fold(f.zero(), |acc, &t| f.add(acc, t));
    let f1 = sum(&[
        p(a, 3),
        f.mul(k(-3), f.mul(p(a, 2), p(b, 2))),
        f.mul(a, p(b, 4)),
        f.mul(k(4), f.mul(a, b)),
        f.neg(p(b, 3)),
        k(-1),
    ]);
    let f2 = sum(&[
        f.mul(k(3), f.mul(p(a, 2), b)),
        f.mul(k(-4), f.mul(a, p(b, 3))),
        f.mul(k(-2), a),
        p(b, 5),
        f.mul(k(3), p(b, 2)),
    ]);
    (f1, f2)
}

fn is_r_root(f: &Field, v: Elem) -> bool {
    !v.is_zero() && FieldPoly::from_ints(f, &R15).eval(v).is_zero()
}

fn z5_pattern(field: &Field, a: Elem, b: Elem) -> Result<bool> {
    if field.p() == 2 {
        let om = OmegaField::new(field)?;
        let (a, b, one) = (om.lift(a), om.lift(b), om.int(1));
        return Ok((1..3).any(|j| {
            let w = om.w(j);
            (a, b) == (w, one) || (a, b) == (one, w) || (a, b) == (w, w)
        }));
    }
    let emb = field.extension(if field.m().is_multiple_of(2) { 1 } else { 2 })?;
    let e = emb.big();
    let (a, b) = (emb.map(a), emb.map(b));
    let w = e.omega().expect("degree-2 extension contains omega");
    let golden = FieldPoly::from_ints(e, &[-1, -1, 1]).roots();
    Ok(golden.iter().any(|&t| {
        (0..3).any(|j| {
            let bj = e.mul(t, e.pow(w, j));
            b == bj && a == e.mul(bj, e.pow(w, j))
        })
    }))
}

fn z7_pattern(field: &Field, a: Elem, b: Elem) -> Result<(bool, bool)> {
    let r_roots = is_r_root(field, a) && is_r_root(field, b);
    if field.p() == 2 && (a.is_zero() || b.is_zero()) {
        let om = OmegaField::new(field)?;
        let (a, b) = (om.lift(a), om.lift(b));
        let hit = (0..3).any(|j| (a, b) == (om.w(j), Elem::ZERO) || (a, b) == (Elem::ZERO, om.w(j)));
        return Ok((hit, r_roots));
    }
    let (f1, f2) = z7_e3_coefficients(field, a, b);
    Ok((r_roots && f1.is_zero() && f2.is_zero(), r_roots))
}

/// Predicts which of `z^5`, `z^7` are scalar from the parameter conditions.
/// Requires `(a, b) != (0, 0)`, `ab != 1` and absolute irreducibility.
pub fn scalar_power_classify_dim3(field: &Field, a: Elem, b: Elem) -> Result<Dim3PowerClass> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Precondition("(a, b) = (0, 0)".into()));
    }
    if field.mul(a, b) == field.one() {
        return Err(Error::Precondition("ab = 1".into()));
    }
    if !dim3_irreducibility_conditions(field, a, b)?.overall {
        return Err(Error::Precondition("pair is not absolutely irreducible".into()));
    }
    let (z7_scalar, r_roots) = z7_pattern(field, a, b)?;
    Ok(Dim3PowerClass { z5_scalar: z5_pattern(field, a, b)?, z7_scalar, r_roots })
}

/// Checks the lower bounds 10 and 5 on the projective orders of `xy` and
/// `[x, y]` for an absolutely irreducible 5-dimensional pair.
pub fn scalar_power_bounds_dim5(field: &Field, b: Elem, c: Elem) -> Result<ClaimReport> {
    if !dim5_irreducibility_conditions(field, b, c).overall {
        return Err(Error::Precondition("pair is not absolutely irreducible".into()));
    }
    let pair = build_dim5(field, b, c)?;
    let mut report = ClaimReport::new("Lemma 4.4");
    let pz = projective_order(&pair.z())?;
    let pc = projective_order(&pair.commutator())?;
    report.check("Lemma 4.4 (i)", pz >= 10, format!("projective order of xy = {pz}"));
    report.check("Lemma 4.4 (ii)", pc >= 5, format!("projective order of [x,y] = {pc}"));
    report.set_data("projective_order_xy", pz as u64);
    report.set_data("projective_order_commutator", pc as u64);
    Ok(report)
}
