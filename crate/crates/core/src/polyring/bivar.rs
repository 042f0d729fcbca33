use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::{resultant, FieldPolys, IntPolys};
use super::{FieldPoly, IntPoly};
use crate::error::{Error, Result};
use crate::ff::Field;

/// Which of the two variables of a [`BivarPoly`] to eliminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// Integer polynomial in two variables, kept as a collected map from
/// exponent pairs `(i, j)` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BivarPoly {
    names: [String; 2],
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivarPoly {
    pub fn zero(first: &str, second: &str) -> BivarPoly {
        BivarPoly { names: [first.to_string(), second.to_string()], terms: BTreeMap::new() }
    }

    /// Sum of `c * first^i * second^j` over `(c, i, j)`; like terms are collected.
    pub fn from_terms(first: &str, second: &str, terms: &[(i64, usize, usize)]) -> BivarPoly {
        let mut f = BivarPoly::zero(first, second);
        for &(c, i, j) in terms {
            f.add_term(BigInt::from(c), i, j);
        }
        f
    }

    pub fn add_term(&mut self, c: BigInt, i: usize, j: usize) {
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficients in `var`, constant term first, each a polynomial in the
    /// other variable.
    pub fn coefficients_in(&self, var: Var) -> Vec<IntPoly> {
        let deg = self.terms.keys().map(|&(i, j)| if var == Var::First { i } else { j }).max().unwrap_or(0);
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let (outer, inner) = if var == Var::First { (i, j) } else { (j, i) };
            let row = &mut rows[outer];
            if row.len() <= inner {
                row.resize(inner + 1, BigInt::zero());
            }
            row[inner] += c;
        }
        rows.into_iter().map(IntPoly::new).collect()
    }

    /// `Res(self, other)` with respect to `eliminate`, as a polynomial in the
    /// surviving variable.
    pub fn resultant(&self, other: &BivarPoly, eliminate: Var) -> Result<IntPoly> {
        let (f, g) = (self.coefficients_in(eliminate), other.coefficients_in(eliminate));
        resultant(&IntPolys, &f, &g)
    }

    /// The same resultant computed after reducing coefficients into `field`.
    pub fn resultant_over(&self, other: &BivarPoly, eliminate: Var, field: &Field) -> Result<FieldPoly> {
        let red = |v: Vec<IntPoly>| v.iter().map(|c| c.reduce(field)).collect::<Vec<_>>();
        let (f, g) = (red(self.coefficients_in(eliminate)), red(other.coefficients_in(eliminate)));
        if f.iter().all(|c| c.is_zero()) || g.iter().all(|c| c.is_zero()) {
            return Err(Error::VanishesModP(field.p()));
        }
        resultant(&FieldPolys(field.clone()), &f, &g)
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mono = |name: &str, e: usize| match e {
            0 => String::new(),
            1 => name.to_string(),
            _ => format!("{name}^{e}"),
        };
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let sign = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let vars: Vec<String> =
                [mono(&self.names[0], i), mono(&self.names[1], j)].into_iter().filter(|s| !s.is_empty()).collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{mag}*{}", vars.join("*")),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}
