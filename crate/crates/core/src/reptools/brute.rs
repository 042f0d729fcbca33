use super::common_space;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::linalg::nullspace;
use crate::matgrp::Matrix;

const MAX_Q: u64 = 121;

/// Vectors of `F^3` with first nonzero coordinate 1, one per line.
fn projective_points(field: &Field) -> Vec<Vec<Elem>> {
    let q = field.q();
    let mut pts = Vec::new();
    for lead in 0..3 {
        let free = 2 - lead;
        for k in 0..q.pow(free as u32) {
            let mut v = vec![Elem::ZERO; 3];
            v[lead] = Elem::ONE;
            let mut r = k;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = Elem(r % q);
                r /= q;
            }
            pts.push(v);
        }
    }
    pts
}

fn fixes_line(field: &Field, g: &Matrix, v: &[Elem]) -> bool {
    let w = g.apply(v);
    let lead = v.iter().position(|e| !e.is_zero()).expect("nonzero vector");
    let c = w[lead];
    w.iter().zip(v).all(|(&wi, &vi)| wi == field.mul(c, vi))
}

/// Every invariant line and plane of a 3-dimensional module, lines first.
/// Planes are found as annihilators of lines fixed by the transposes.
pub fn brute_submodules_dim3(gens: &[Matrix]) -> Result<Vec<Vec<Vec<Elem>>>> {
    let (field, n) = common_space(gens)?;
    if n != 3 {
        return Err(Error::DimensionMismatch(format!("expected dimension 3, got {n}")));
    }
    if field.q() > MAX_Q {
        return Err(Error::TooLarge(format!("q = {} exceeds {MAX_Q}", field.q())));
    }
    let transposes: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let points = projective_points(&field);
    let mut out: Vec<Vec<Vec<Elem>>> = points
        .iter()
        .filter(|v| gens.iter().all(|g| fixes_line(&field, g, v)))
        .map(|v| vec![v.clone()])
        .collect();
    out.extend(
        points
            .iter()
            .filter(|v| transposes.iter().all(|g| fixes_line(&field, g, v)))
            .map(|v| nullspace(&field, std::slice::from_ref(v), 3)),
    );
    Ok(out)
}
