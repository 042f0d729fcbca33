//! Gaussian elimination on rectangular arrays of field elements.

use crate::ff::{Elem, Field};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(field: &Field, rows: &mut [Vec<Elem>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = field.sub(*v, field.mul(f, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{v : A v = 0}` for `A` with the given rows and `ncols` columns.
pub fn nullspace(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Elem::ZERO; ncols];
            v[f] = Elem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m[r][f]);
            }
            v
        })
        .collect()
}

/// An echelon basis of the span of `vectors`.
pub fn span_basis(field: &Field, vectors: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut m = vectors.to_vec();
    let k = rref(field, &mut m).len();
    m.truncate(k);
    m
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(field: &Field, basis: &[Vec<Elem>], v: &[Elem]) -> bool {
    let r = rank(field, basis);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(field, &ext) == r
}

/// A subspace kept in echelon form for incremental membership tests.
#[derive(Clone, Debug)]
pub struct EchelonSpace {
    field: Field,
    ncols: usize,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl EchelonSpace {
    pub fn new(field: &Field, ncols: usize) -> EchelonSpace {
        EchelonSpace { field: field.clone(), ncols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let f = &self.field;
        let inv = f.inv(r[p]);
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &y) in row.iter_mut().zip(&r) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((p, r));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    /// Reduced echelon basis, ordered by pivot column.
    pub fn basis(&self) -> Vec<Vec<Elem>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}
