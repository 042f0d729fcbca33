use std::fmt;
use std::ops::Mul;

use serde_json::{json, Value};

use super::linalg;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::polyring::{bareiss_det, FieldPoly, FieldPolys};

/// A dense `n x n` matrix over a finite field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    n: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix rows must form a square".into()));
        }
        if rows.iter().flatten().any(|e| e.index() >= field.q()) {
            return Err(Error::FieldMismatch("entry outside the field".into()));
        }
        Ok(Matrix { field: field.clone(), n, data: rows.into_iter().flatten().collect() })
    }

    /// Integer entries mapped into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect())
    }

    pub fn from_fn(field: &Field, n: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Matrix {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Matrix { field: field.clone(), n, data }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, Elem::ONE)
    }

    pub fn zero(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, Elem::ZERO)
    }

    pub fn scalar(field: &Field, n: usize, c: Elem) -> Matrix {
        Matrix::from_fn(field, n, |i, j| if i == j { c } else { Elem::ZERO })
    }

    /// Companion matrix of a monic polynomial (last column holds `-c_i`).
    pub fn companion(f: &FieldPoly) -> Matrix {
        let field = f.field();
        let n = f.degree().expect("nonzero polynomial");
        let f = f.monic();
        Matrix::from_fn(field, n, |i, j| {
            if j == n - 1 {
                field.neg(f.coeff(i))
            } else if i == j + 1 {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    fn same_space(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, other.n)));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_space(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let (f, n) = (&self.field, self.n);
        let mut data = vec![Elem::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if !b.is_zero() {
                        data[i * n + j] = f.add(data[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        Matrix { field: f.clone(), n, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), n: self.n, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), n: self.n, data }
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        self.map(|a| self.field.mul(a, c))
    }

    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix { field: self.field.clone(), n: self.n, data: self.data.iter().map(|&a| f(a)).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.n, |i, j| self.get(j, i))
    }

    /// Entrywise `a -> a^sqrt(q)`.
    pub fn sigma(&self) -> Result<Matrix> {
        self.field.sigma(Elem::ZERO)?;
        Ok(self.map(|a| self.field.sigma(a).expect("square field")))
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.n)
            .map(|i| (0..self.n).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn pow(&self, mut e: u128) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn det(&self) -> Elem {
        bareiss_det(&self.field, self.rows())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let (f, n) = (&self.field, self.n);
        let mut aug: Vec<Vec<Elem>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
                r
            })
            .collect();
        let pivots = linalg::rref(f, &mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(f, n, |i, j| aug[i][n + j]))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.field, &self.rows())
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value() == Some(Elem::ONE)
    }

    /// `Some(c)` if the matrix equals `c I`.
    pub fn scalar_value(&self) -> Option<Elem> {
        let c = self.data[0];
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .all(|(k, &v)| if k / n == k % n { v == c } else { v.is_zero() })
            .then_some(c)
    }

    pub fn is_scalar(&self) -> bool {
        self.scalar_value().is_some()
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        let xi = self.inverse()?;
        let yi = other.inverse()?;
        Ok(&(&(&xi * &yi) * self) * other)
    }

    /// Monic `det(tI - M)`.
    pub fn charpoly(&self) -> FieldPoly {
        let f = &self.field;
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let c = f.neg(self.get(i, j));
                        if i == j {
                            FieldPoly::new(f, vec![c, Elem::ONE])
                        } else {
                            FieldPoly::constant(f, c)
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(&FieldPolys(f.clone()), rows)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &FieldPoly) -> Matrix {
        let id = Matrix::identity(&self.field, self.n);
        p.coeffs()
            .iter()
            .rev()
            .fold(Matrix::zero(&self.field, self.n), |acc, &c| acc.mul_unchecked(self).add(&id.scale(c)))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> =
            self.rows().iter().map(|r| r.iter().map(|&e| self.field.format_elem(e)).collect()).collect();
        json!({ "n": self.n, "field": self.field.to_string(), "rows": rows })
    }

    pub fn from_json(v: &Value) -> Result<Matrix> {
        let bad = |m: &str| Error::Parse(format!("matrix JSON: {m}"));
        let field = Field::parse(v["field"].as_str().ok_or_else(|| bad("missing field"))?)?;
        Matrix::from_json_in(&field, v)
    }

    /// Parses the JSON form, requiring its field to equal `field`.
    pub fn from_json_in(field: &Field, v: &Value) -> Result<Matrix> {
        let bad = |m: &str| Error::Parse(format!("matrix JSON: {m}"));
        if let Some(s) = v["field"].as_str() {
            if &Field::parse(s)? != field {
                return Err(Error::FieldMismatch(format!("matrix over {s}, expected {field}")));
            }
        }
        let rows = v["rows"].as_array().ok_or_else(|| bad("missing rows"))?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("row is not an array"))?
                    .iter()
                    .map(|e| match e {
                        Value::String(s) => field.parse_elem(s),
                        Value::Number(n) => n.as_i64().map(|x| field.from_int(x)).ok_or_else(|| bad("bad entry")),
                        _ => Err(bad("bad entry")),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(field, parsed)?;
        if let Some(n) = v["n"].as_u64() {
            if n as usize != m.n {
                return Err(bad("n does not match rows"));
            }
        }
        Ok(m)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// # Panics
    /// On dimension or field mismatch; see [`Matrix::try_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product over mismatched spaces")
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        &self * &rhs
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix over {} ", self.field)?;
        f.debug_list().entries(self.rows().iter().map(|r| r.iter().map(|e| e.index()).collect::<Vec<_>>())).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|&e| self.field.format_elem(e)).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
