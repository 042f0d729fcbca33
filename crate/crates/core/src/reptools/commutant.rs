use super::common_space;
use crate::error::Result;
use crate::ff::Elem;
use crate::matgrp::linalg::nullspace;
use crate::matgrp::Matrix;

/// Basis of `{A : A g = g A for every generator}`.
pub fn commutant_basis(gens: &[Matrix]) -> Result<Vec<Matrix>> {
    let (field, n) = common_space(gens)?;
    let mut rows = Vec::with_capacity(gens.len() * n * n);
    for g in gens {
        for i in 0..n {
            for j in 0..n {
                // (A g - g A)_{ij} = sum_k A_{ik} g_{kj} - g_{ik} A_{kj}
                let mut row = vec![Elem::ZERO; n * n];
                for k in 0..n {
                    row[i * n + k] = field.add(row[i * n + k], g.get(k, j));
                    row[k * n + j] = field.sub(row[k * n + j], g.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    Ok(nullspace(&field, &rows, n * n).into_iter().map(|v| Matrix::from_fn(&field, n, |i, j| v[i * n + j])).collect())
}

pub fn commutant_dimension(gens: &[Matrix]) -> Result<usize> {
    commutant_basis(gens).map(|b| b.len())
}
