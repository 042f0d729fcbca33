use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::common_space;
use crate::error::Result;
use crate::ff::{Elem, Field};
use crate::matgrp::linalg::nullspace;
use crate::matgrp::{element_order, Matrix};

const EXHAUSTIVE_LIMIT: u64 = 4096;
const RANDOM_SAMPLES: usize = 4096;

/// The twist `tau` in `g^T J g^tau = lambda_g J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Identity,
    Sigma,
}

impl Twist {
    pub fn as_str(self) -> &'static str {
        match self {
            Twist::Identity => "id",
            Twist::Sigma => "sigma",
        }
    }

    fn apply(self, m: &Matrix) -> Result<Matrix> {
        match self {
            Twist::Identity => Ok(m.clone()),
            Twist::Sigma => m.sigma(),
        }
    }
}

/// Forms for one scalar character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    /// `lambda_g`, one per generator.
    pub character: Vec<Elem>,
    pub basis: Vec<Matrix>,
    pub nondegenerate_witness: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSolution {
    pub twist: Twist,
    pub spaces: Vec<FormSpace>,
}

impl FormSolution {
    pub fn has_nondegenerate(&self) -> bool {
        self.spaces.iter().any(|s| s.nondegenerate_witness.is_some())
    }

    pub fn nondegenerate_witness(&self) -> Option<&Matrix> {
        self.spaces.iter().find_map(|s| s.nondegenerate_witness.as_ref())
    }

    pub fn to_json(&self, field: &Field) -> Value {
        let spaces: Vec<Value> = self
            .spaces
            .iter()
            .map(|s| {
                json!({
                    "character": s.character.iter().map(|&e| field.format_elem(e)).collect::<Vec<_>>(),
                    "dimension": s.basis.len(),
                    "basis": s.basis.iter().map(Matrix::to_json).collect::<Vec<_>>(),
                    "nondegenerate_witness": s.nondegenerate_witness.as_ref().map(Matrix::to_json),
                })
            })
            .collect();
        json!({ "twist": self.twist.as_str(), "spaces": spaces })
    }
}

/// Basis of `{J : g^T J g^tau = lambda_g J for each generator}`.
pub fn form_space(gens: &[Matrix], twist: Twist, character: &[Elem]) -> Result<Vec<Matrix>> {
    let (field, n) = common_space(gens)?;
    let mut rows = Vec::new();
    for (g, &lambda) in gens.iter().zip(character) {
        let h = twist.apply(g)?;
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Elem::ZERO; n * n];
                for k in 0..n {
                    let gki = g.get(k, i);
                    if gki.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        row[k * n + l] = field.add(row[k * n + l], field.mul(gki, h.get(l, j)));
                    }
                }
                row[i * n + j] = field.sub(row[i * n + j], lambda);
                rows.push(row);
            }
        }
    }
    Ok(nullspace(&field, &rows, n * n).into_iter().map(|v| Matrix::from_fn(&field, n, |i, j| v[i * n + j])).collect())
}

fn combine(field: &Field, basis: &[Matrix], coeffs: &[Elem]) -> Matrix {
    let n = basis[0].n();
    basis.iter().zip(coeffs).fold(Matrix::zero(field, n), |acc, (b, &c)| acc.add(&b.scale(c)))
}

/// An invertible member of the span, searched exhaustively for small spans
/// and by seeded sampling otherwise.
fn find_nondegenerate(field: &Field, basis: &[Matrix]) -> Option<Matrix> {
    let d = basis.len() as u32;
    if d == 0 {
        return None;
    }
    let q = field.q();
    match q.checked_pow(d).filter(|&t| t <= EXHAUSTIVE_LIMIT) {
        Some(total) => (1..total).find_map(|mut k| {
            let coeffs: Vec<Elem> = (0..d)
                .map(|_| {
                    let c = Elem(k % q);
                    k /= q;
                    c
                })
                .collect();
            let j = combine(field, basis, &coeffs);
            (!j.det().is_zero()).then_some(j)
        }),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(q ^ u64::from(d));
            (0..RANDOM_SAMPLES).find_map(|_| {
                let coeffs: Vec<Elem> = (0..d).map(|_| Elem(rng.gen_range(0..q))).collect();
                let j = combine(field, basis, &coeffs);
                (!j.det().is_zero()).then_some(j)
            })
        }
    }
}

/// Scalars `lambda` with `lambda^{ord g} = 1` and `lambda^n = det(g) det(g^tau)`,
/// the multipliers compatible with a nondegenerate form.
fn admissible_multipliers(g: &Matrix, twist: Twist) -> Result<Vec<Elem>> {
    let field = g.field();
    let ord = element_order(g)?;
    let target = field.mul(g.det(), twist.apply(g)?.det());
    let n = g.n() as u64;
    let e = (ord % u128::from(field.q() - 1)) as u64;
    Ok(field
        .nonzero_elements()
        .filter(|&l| field.pow(l, e) == field.one() && field.pow(l, n) == target)
        .collect())
}

/// Invariant forms of `<gens>` for the given twist. With `up_to_scalars`,
/// every admissible scalar character is tried and the nonzero solution
/// spaces are returned; otherwise only the trivial character.
pub fn invariant_forms(gens: &[Matrix], twist: Twist, up_to_scalars: bool) -> Result<FormSolution> {
    let (field, _) = common_space(gens)?;
    if twist == Twist::Sigma {
        field.sqrt_order()?;
    }
    let characters: Vec<Vec<Elem>> = if up_to_scalars {
        let per_gen = gens.iter().map(|g| admissible_multipliers(g, twist)).collect::<Result<Vec<_>>>()?;
        per_gen.iter().fold(vec![Vec::new()], |acc, options| {
            acc.iter()
                .flat_map(|prefix| {
                    options.iter().map(move |&l| {
                        let mut c = prefix.clone();
                        c.push(l);
                        c
                    })
                })
                .collect()
        })
    } else {
        vec![vec![field.one(); gens.len()]]
    };
    let mut spaces = Vec::new();
    for character in characters {
        let basis = form_space(gens, twist, &character)?;
        if up_to_scalars && basis.is_empty() {
            continue;
        }
        let nondegenerate_witness = find_nondegenerate(&field, &basis);
        spaces.push(FormSpace { character, basis, nondegenerate_witness });
    }
    Ok(FormSolution { twist, spaces })
}

/// A nonzero multiple `cJ` with `(cJ)^T = (cJ)^sigma`, if one exists.
pub fn hermitian_rescaling(j: &Matrix) -> Result<Option<Matrix>> {
    j.field().sqrt_order()?;
    Ok(j.field().nonzero_elements().map(|c| j.scale(c)).find(|cj| Ok(cj.transpose()) == cj.sigma()))
}
