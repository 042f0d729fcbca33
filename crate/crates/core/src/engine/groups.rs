use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::closure::{closure_with, ClosureOptions};
use crate::error::{Error, Result};
use crate::ff::numtheory::factorize;
use crate::ff::{Elem, Field};
use crate::matgrp::Matrix;
use crate::paperlib::{Family, Target};

/// A classical group `SL_n(q)` or `SU_n(q^2)` with its order and center.
/// For SU, `q` is the square root of the field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TargetGroup {
    pub family: Family,
    pub n: usize,
    pub q: u64,
    pub expected_order: u128,
    pub center_order: u64,
}

/// `|SL_n(q)| = q^(n(n-1)/2) prod_{i=2..n} (q^i - 1)` and
/// `|SU_n(q^2)| = q^(n(n-1)/2) prod_{i=2..n} (q^i - (-1)^i)`.
pub fn target_order(family: Family, n: usize, q: u64) -> Result<TargetGroup> {
    if !(n == 3 || n == 5) {
        return Err(Error::Precondition(format!("dimension {n} is not 3 or 5")));
    }
    let f = factorize(q);
    if q < 2 || f.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let big = || Error::TooLarge(format!("order of {family:?}{n}({q})"));
    let qq = u128::from(q);
    let mut order = qq.checked_pow((n * (n - 1) / 2) as u32).ok_or_else(big)?;
    for i in 2..=n as u32 {
        let qi = qq.checked_pow(i).ok_or_else(big)?;
        let factor = match family {
            Family::SL => qi - 1,
            Family::SU if i % 2 == 0 => qi - 1,
            Family::SU => qi + 1,
        };
        order = order.checked_mul(factor).ok_or_else(big)?;
    }
    let center_order = match family {
        Family::SL => (n as u64).gcd(&(q - 1)),
        Family::SU => (n as u64).gcd(&(q + 1)),
    };
    Ok(TargetGroup { family, n, q, expected_order: order, center_order })
}

impl TargetGroup {
    pub fn for_target(target: Target, q: u64) -> Result<TargetGroup> {
        target_order(target.family(), target.n(), q)
    }

    pub fn target(&self) -> Target {
        match (self.family, self.n) {
            (Family::SL, 3) => Target::Sl3,
            (Family::SU, 3) => Target::Su3,
            (Family::SL, _) => Target::Sl5,
            (Family::SU, _) => Target::Su5,
        }
    }

    pub fn projective_order(&self) -> u128 {
        self.expected_order / u128::from(self.center_order)
    }

    /// Order of the field the matrices live over.
    pub fn field_order(&self) -> u64 {
        match self.family {
            Family::SL => self.q,
            Family::SU => self.q * self.q,
        }
    }

    pub fn field(&self) -> Result<Field> {
        Field::of_order(self.field_order())
    }

    pub fn name(&self) -> String {
        format!("{:?}{}({})", self.family, self.n, self.field_order())
    }

    pub fn projective_name(&self) -> String {
        format!("P{}", self.name())
    }

    /// Generators of the group as matrices over `field`.
    /// SL uses elementary transvections; SU uses a greedy subset of the
    /// unitary upper unitriangular and monomial matrices for the
    /// antidiagonal hermitian form.
    pub fn generators(&self, field: &Field) -> Result<Vec<Matrix>> {
        if field.q() != self.field_order() {
            return Err(Error::FieldMismatch(format!("{} is not defined over {field}", self.name())));
        }
        match self.family {
            Family::SL => Ok(sl_generators(field, self.n)),
            Family::SU => su_generators(field, self.n, self.expected_order),
        }
    }
}

impl fmt::Display for TargetGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn sl_generators(field: &Field, n: usize) -> Vec<Matrix> {
    let z = field.primitive_element();
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        for (r, c) in [(i, i + 1), (i + 1, i)] {
            for k in 0..field.m() {
                let mut t = Matrix::identity(field, n);
                t.set(r, c, field.pow(z, u64::from(k)));
                gens.push(t);
            }
        }
    }
    gens
}

const MAX_CANDIDATES: u64 = 1 << 22;

fn is_special_unitary(g: &Matrix, j: &Matrix) -> bool {
    g.det() == g.field().one() && &(&g.transpose() * j) * &g.sigma().expect("square field") == *j
}

fn su_generators(field: &Field, n: usize, expected: u128) -> Result<Vec<Matrix>> {
    let f = field;
    let q2 = f.q();
    let slots = n * (n - 1) / 2;
    let tri = q2.checked_pow(slots as u32).filter(|&c| c <= MAX_CANDIDATES);
    let mono = (1..=n as u64).product::<u64>().checked_mul((q2 - 1).pow(n as u32)).filter(|&c| c <= MAX_CANDIDATES);
    let (Some(tri), Some(_)) = (tri, mono) else {
        return Err(Error::TooLarge(format!("SU{n} generators over {field}")));
    };
    let j = Matrix::from_fn(f, n, |r, c| if r + c == n - 1 { f.one() } else { Elem::ZERO });
    let mut candidates = Vec::new();
    for code in 1..tri {
        let mut g = Matrix::identity(f, n);
        let mut rest = code;
        for r in 0..n {
            for c in r + 1..n {
                g.set(r, c, Elem(rest % q2));
                rest /= q2;
            }
        }
        if is_special_unitary(&g, &j) {
            candidates.push(g);
        }
    }
    for perm in permutations(n) {
        for_each_tuple(q2 - 1, n, |d| {
            let g = Matrix::from_fn(f, n, |r, c| if perm[r] == c { f.pow(f.primitive_element(), d[r]) } else { Elem::ZERO });
            if is_special_unitary(&g, &j) {
                candidates.push(g);
            }
        });
    }
    let opts = ClosureOptions { cap: usize::MAX, parallel: true, keep_elements: true };
    let mut gens: Vec<Matrix> = Vec::new();
    let mut store = None;
    for g in candidates {
        let known = store.as_ref().is_some_and(|s: &super::closure::ElementStore| s.contains(&g));
        if known || g.is_identity() {
            continue;
        }
        gens.push(g);
        let res = closure_with(&gens, opts)?;
        let done = u128::from(res.order) == expected;
        store = res.element_store;
        if done {
            return Ok(gens);
        }
    }
    Err(Error::Falsified(format!("unitary candidates do not generate a group of order {expected}")))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

fn for_each_tuple(base: u64, len: usize, mut f: impl FnMut(&[u64])) {
    let mut t = vec![0u64; len];
    loop {
        f(&t);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}
