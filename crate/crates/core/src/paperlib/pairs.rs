use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::Matrix;

/// Parameters `(a, b)` of the 3-dimensional pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dim3Params {
    pub a: Elem,
    pub b: Elem,
}

/// Parameters `(b, c)` of the 5-dimensional pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dim5Params {
    pub b: Elem,
    pub c: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Params {
    Dim3(Dim3Params),
    Dim5(Dim5Params),
}

impl Params {
    pub fn dimension(&self) -> usize {
        match self {
            Params::Dim3(_) => 3,
            Params::Dim5(_) => 5,
        }
    }

    pub fn to_json(&self, field: &Field) -> Value {
        let s = |e: Elem| field.format_elem(e);
        match self {
            Params::Dim3(p) => json!({ "a": s(p.a), "b": s(p.b) }),
            Params::Dim5(p) => json!({ "b": s(p.b), "c": s(p.c) }),
        }
    }
}

/// An involution `x` and an element `y` of order 3 in `SL_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    pub x: Matrix,
    pub y: Matrix,
    pub params: Params,
}

impl GeneratorPair {
    pub fn field(&self) -> &Field {
        self.x.field()
    }

    pub fn dimension(&self) -> usize {
        self.x.n()
    }

    pub fn gens(&self) -> [Matrix; 2] {
        [self.x.clone(), self.y.clone()]
    }

    /// `z = xy`.
    pub fn z(&self) -> Matrix {
        &self.x * &self.y
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self) -> Matrix {
        self.x.commutator(&self.y).expect("generators are invertible")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.dimension(),
            "params": self.params.to_json(self.field()),
            "x": self.x.to_json(),
            "y": self.y.to_json(),
        })
    }

    fn checked(self) -> Result<GeneratorPair> {
        let n = self.dimension();
        let f = self.field();
        let id = Matrix::identity(f, n);
        if self.x == id || &self.x * &self.x != id {
            return Err(Error::Precondition("x is not an involution".into()));
        }
        if self.y.pow(3) != id {
            return Err(Error::Precondition("y does not have order 3".into()));
        }
        if self.x.det() != f.one() || self.y.det() != f.one() {
            return Err(Error::Precondition("generators must have determinant 1".into()));
        }
        Ok(self)
    }
}

/// `x = [[-1,0,a],[0,-1,b],[0,0,1]]` with `y` the cyclic permutation matrix.
/// `(a, b) = (0, 0)` is rejected unless `allow_excluded` is set, and is
/// always rejected in characteristic 2.
pub fn build_dim3(field: &Field, a: Elem, b: Elem, allow_excluded: bool) -> Result<GeneratorPair> {
    for v in [a, b] {
        field.elem(v.index())?;
    }
    if a.is_zero() && b.is_zero() && (!allow_excluded || field.p() == 2) {
        return Err(Error::Precondition("(a, b) = (0, 0) is excluded".into()));
    }
    let (m1, z, o) = (field.neg(field.one()), field.zero(), field.one());
    let x = Matrix::from_rows(field, vec![vec![m1, z, a], vec![z, m1, b], vec![z, z, o]])?;
    let y = Matrix::from_ints(field, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])?;
    GeneratorPair { x, y, params: Params::Dim3(Dim3Params { a, b }) }.checked()
}

/// The 5-dimensional pair with parameters `b` and `c != 0`.
pub fn build_dim5(field: &Field, b: Elem, c: Elem) -> Result<GeneratorPair> {
    for v in [b, c] {
        field.elem(v.index())?;
    }
    if c.is_zero() {
        return Err(Error::Precondition("c must be nonzero".into()));
    }
    let mut x = Matrix::from_ints(
        field,
        &[&[0, 1, 0, 0, 0], &[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]],
    )?;
    x.set(0, 4, c);
    x.set(1, 4, field.neg(c));
    let mut y = Matrix::from_ints(
        field,
        &[&[1, 0, -1, 0, 0], &[0, 0, -1, 0, 0], &[0, 1, -1, 0, 0], &[0, 0, 0, 0, -1], &[0, 0, 0, 1, -1]],
    )?;
    y.set(0, 4, b);
    GeneratorPair { x, y, params: Params::Dim5(Dim5Params { b, c }) }.checked()
}

/// Builds the pair for `params` over `field`.
pub fn build(field: &Field, params: Params) -> Result<GeneratorPair> {
    match params {
        Params::Dim3(p) => build_dim3(field, p.a, p.b, false),
        Params::Dim5(p) => build_dim5(field, p.b, p.c),
    }
}
