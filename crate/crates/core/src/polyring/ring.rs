//! Minimal commutative-ring abstraction so the Sylvester resultant and the
//! fraction-free determinant run unchanged over `Z`, `GF(q)`, `Z[t]` and
//! `GF(q)[t]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FieldPoly, IntPoly};
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};

pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a / b` where `b` is known to divide `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// The integers, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let (q, r) = a.div_rem(b);
        debug_assert!(r.is_zero(), "inexact integer division");
        q
    }
}

impl Ring for Field {
    type Elem = Elem;

    fn zero(&self) -> Elem {
        Elem::ZERO
    }
    fn one(&self) -> Elem {
        Elem::ONE
    }
    fn is_zero(&self, a: &Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Field::add(self, *a, *b)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        Field::sub(self, *a, *b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        Field::mul(self, *a, *b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        Field::neg(self, *a)
    }
    fn div_exact(&self, a: &Elem, b: &Elem) -> Elem {
        Field::div(self, *a, *b)
    }
}

/// `Z[t]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntPolys;

impl Ring for IntPolys {
    type Elem = IntPoly;

    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }
    fn one(&self) -> IntPoly {
        IntPoly::one()
    }
    fn is_zero(&self, a: &IntPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a + b
    }
    fn sub(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a - b
    }
    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a * b
    }
    fn neg(&self, a: &IntPoly) -> IntPoly {
        -a
    }
    fn div_exact(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.div_exact(b).expect("inexact polynomial division")
    }
}

/// `GF(q)[t]`.
#[derive(Clone, Debug)]
pub struct FieldPolys(pub Field);

impl Ring for FieldPolys {
    type Elem = FieldPoly;

    fn zero(&self) -> FieldPoly {
        FieldPoly::zero(&self.0)
    }
    fn one(&self) -> FieldPoly {
        FieldPoly::one(&self.0)
    }
    fn is_zero(&self, a: &FieldPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a + b
    }
    fn sub(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a - b
    }
    fn mul(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        a * b
    }
    fn neg(&self, a: &FieldPoly) -> FieldPoly {
        -a
    }
    fn div_exact(&self, a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
        let (q, r) = a.divrem(b);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_det<R: Ring>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&m[i][k])) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.div_exact(&t, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        ring.neg(&det)
    } else {
        det
    }
}

fn degree_of<R: Ring>(ring: &R, f: &[R::Elem]) -> Option<usize> {
    f.iter().rposition(|c| !ring.is_zero(c))
}

/// Sylvester matrix of `f` and `g` (coefficients constant term first).
pub fn sylvester_matrix<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Vec<Vec<R::Elem>> {
    let m = degree_of(ring, f).unwrap_or(0);
    let n = degree_of(ring, g).unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![ring.zero(); size];
        for i in 0..=m {
            row[shift + i] = f[m - i].clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![ring.zero(); size];
        for i in 0..=n {
            row[shift + i] = g[n - i].clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn resultant<R: Ring>(ring: &R, f: &[R::Elem], g: &[R::Elem]) -> Result<R::Elem> {
    let (df, dg) = (degree_of(ring, f), degree_of(ring, g));
    match (df, dg) {
        (None, _) | (_, None) => Ok(ring.zero()),
        (Some(0), Some(0)) => Err(Error::ConstantResultantInputs),
        _ => Ok(bareiss_det(ring, sylvester_matrix(ring, f, g))),
    }
}
