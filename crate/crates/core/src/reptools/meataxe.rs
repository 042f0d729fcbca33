use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHasher;
use serde_json::{json, Value};

use super::{commutant_dimension, common_space};
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::linalg::{nullspace, EchelonSpace};
use crate::matgrp::Matrix;

const WORD_POOL: usize = 30;
const MAX_ATTEMPTS: usize = 500;

/// Outcome of an irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVerdict {
    pub irreducible: bool,
    pub absolutely_irreducible: bool,
    /// Basis of a proper nonzero invariant subspace when reducible.
    pub witness: Option<Vec<Vec<Elem>>>,
}

impl ModuleVerdict {
    pub fn to_json(&self, field: &Field) -> Value {
        let witness = self.witness.as_ref().map(|w| {
            w.iter().map(|v| v.iter().map(|&e| field.format_elem(e)).collect::<Vec<_>>()).collect::<Vec<_>>()
        });
        json!({
            "irreducible": self.irreducible,
            "absolutely_irreducible": self.absolutely_irreducible,
            "witness": witness,
        })
    }
}

/// Basis of the smallest invariant subspace containing `v`.
pub fn spin(v: &[Elem], gens: &[Matrix]) -> Vec<Vec<Elem>> {
    let Some(g0) = gens.first() else {
        return vec![v.to_vec()];
    };
    let mut space = EchelonSpace::new(g0.field(), g0.n());
    let mut queue = Vec::new();
    if space.insert(v) {
        queue.push(v.to_vec());
    }
    while let Some(u) = queue.pop() {
        for g in gens {
            let w = g.apply(&u);
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    space.basis()
}

fn seed_of(gens: &[Matrix]) -> u64 {
    let mut h = FxHasher::default();
    for g in gens {
        g.n().hash(&mut h);
        g.field().q().hash(&mut h);
        for e in g.entries() {
            e.index().hash(&mut h);
        }
    }
    h.finish()
}

/// Words in the generators of lengths 1, 2, ... in lexicographic order.
fn word_pool(gens: &[Matrix]) -> Vec<Matrix> {
    let mut pool: Vec<Matrix> = gens.to_vec();
    let mut layer: Vec<Matrix> = gens.to_vec();
    while pool.len() < WORD_POOL {
        let mut next = Vec::new();
        for w in &layer {
            for g in gens {
                next.push(w * g);
            }
        }
        pool.extend(next.iter().cloned());
        layer = next;
    }
    pool.truncate(WORD_POOL);
    pool
}

/// Orthogonal complement of a subspace under the standard pairing.
fn annihilator(field: &Field, basis: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    nullspace(field, basis, n)
}

/// Irreducibility of the natural module of `<gens>`, by the MeatAxe with
/// Norton's criterion. Deterministic for a given input.
pub fn meataxe_irreducible(gens: &[Matrix]) -> Result<ModuleVerdict> {
    let (field, n) = common_space(gens)?;
    if n == 1 {
        return Ok(ModuleVerdict { irreducible: true, absolutely_irreducible: true, witness: None });
    }
    let transposes: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let pool = word_pool(gens);
    let mut rng = ChaCha8Rng::seed_from_u64(seed_of(gens));
    let q = field.q();
    for _ in 0..MAX_ATTEMPTS {
        let mut theta = Matrix::zero(&field, n);
        for w in &pool {
            let c = Elem(rng.gen_range(0..q));
            theta = theta.add(&w.scale(c));
        }
        let mut factors = theta.charpoly().factor()?;
        factors.sort_by_key(|(f, _)| f.degree());
        for (f, _) in factors {
            let a = theta.eval_poly(&f);
            let kernel = nullspace(&field, &a.rows(), n);
            let sub = spin(&kernel[0], gens);
            if sub.len() < n {
                return Ok(reducible(sub));
            }
            let deg = f.degree().expect("nonconstant factor");
            if kernel.len() != deg {
                continue;
            }
            let dual_kernel = nullspace(&field, &a.transpose().rows(), n);
            let dual = spin(&dual_kernel[0], &transposes);
            if dual.len() < n {
                return Ok(reducible(annihilator(&field, &dual, n)));
            }
            let absolutely_irreducible = commutant_dimension(gens)? == 1;
            return Ok(ModuleVerdict { irreducible: true, absolutely_irreducible, witness: None });
        }
    }
    Err(Error::SearchExhausted(format!("no conclusive algebra element in {MAX_ATTEMPTS} attempts")))
}

fn reducible(witness: Vec<Vec<Elem>>) -> ModuleVerdict {
    ModuleVerdict { irreducible: false, absolutely_irreducible: false, witness: Some(witness) }
}
