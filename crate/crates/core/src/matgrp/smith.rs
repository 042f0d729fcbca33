use serde::Serialize;

use super::Matrix;
use crate::error::{Error, Result};
use crate::ff::Elem;
use crate::polyring::FieldPoly;

/// Similarity invariants `d_1 | d_2 | ... | d_k` of a matrix: the monic
/// nonconstant diagonal entries of the Smith form of `tI - M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactors(pub Vec<FieldPoly>);

impl InvariantFactors {
    pub fn factors(&self) -> &[FieldPoly] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The matrix is cyclic (similar to a single companion matrix).
    pub fn is_cyclic(&self) -> bool {
        self.0.len() == 1
    }

    pub fn product(&self) -> Option<FieldPoly> {
        let first = self.0.first()?;
        Some(self.0.iter().skip(1).fold(first.clone(), |acc, d| &acc * d))
    }
}

impl Serialize for InvariantFactors {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        text.serialize(s)
    }
}

fn min_degree_pivot(m: &[Vec<FieldPoly>], k: usize) -> Option<(usize, usize)> {
    let n = m.len();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..n {
        for j in k..n {
            if let Some(d) = m[i][j].degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form of a square polynomial matrix; returns the diagonal.
/// Pivots are the lowest-degree nonzero entries, ties broken row-major.
pub fn smith_diagonal(mut m: Vec<Vec<FieldPoly>>) -> Vec<FieldPoly> {
    let n = m.len();
    for k in 0..n {
        let Some((pi, pj)) = min_degree_pivot(&m, k) else {
            break;
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut improved = false;
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = m[i][k].divrem(&m[k][k]);
                for j in k..n {
                    let t = &m[k][j] * &q;
                    m[i][j] = &m[i][j] - &t;
                }
                debug_assert_eq!(m[i][k], r);
                if !r.is_zero() {
                    improved = true;
                }
            }
            for j in k + 1..n {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = m[k][j].divrem(&m[k][k]);
                for i in k..n {
                    let t = &m[i][k] * &q;
                    m[i][j] = &m[i][j] - &t;
                }
                if !r.is_zero() {
                    improved = true;
                }
            }
            if improved {
                let (pi, pj) = min_degree_pivot_in_cross(&m, k);
                m.swap(k, pi);
                for row in m.iter_mut() {
                    row.swap(k, pj);
                }
                continue;
            }
            // row and column k are clear; enforce divisibility of the rest
            let offender = (k + 1..n).flat_map(|i| (k + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
                !m[i][j].is_zero() && !m[i][j].rem(&m[k][k]).is_zero()
            });
            match offender {
                Some((i, _)) => {
                    for j in k..n {
                        let t = m[i][j].clone();
                        m[k][j] = &m[k][j] + &t;
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|i| m[i][i].monic()).collect()
}

/// Lowest-degree nonzero entry of row `k` or column `k` (from index `k`).
fn min_degree_pivot_in_cross(m: &[Vec<FieldPoly>], k: usize) -> (usize, usize) {
    let n = m.len();
    let mut best = (usize::MAX, k, k);
    for i in k..n {
        if let Some(d) = m[i][k].degree() {
            if d < best.0 {
                best = (d, i, k);
            }
        }
    }
    for j in k..n {
        if let Some(d) = m[k][j].degree() {
            if d < best.0 {
                best = (d, k, j);
            }
        }
    }
    (best.1, best.2)
}

/// Invariant factors of `M`, via the Smith form of `tI - M`.
pub fn invariant_factors(m: &Matrix) -> InvariantFactors {
    let f = m.field();
    let n = m.n();
    let char_matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = f.neg(m.get(i, j));
                    if i == j {
                        FieldPoly::new(f, vec![c, Elem::ONE])
                    } else {
                        FieldPoly::constant(f, c)
                    }
                })
                .collect()
        })
        .collect();
    let mut diag: Vec<FieldPoly> = smith_diagonal(char_matrix).into_iter().filter(|d| !d.is_constant()).collect();
    diag.sort_by_key(|d| d.degree());
    InvariantFactors(diag)
}

/// Similarity test by comparing invariant factors.
pub fn is_conjugate(a: &Matrix, b: &Matrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", a.n(), b.n())));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(format!("{} vs {}", a.field(), b.field())));
    }
    Ok(invariant_factors(a) == invariant_factors(b))
}
