use std::collections::BTreeMap;

use super::Matrix;
use crate::error::{Error, Result};
use crate::ff::numtheory::factorize;

/// Exponent in factored form, prime -> multiplicity.
type Factored = BTreeMap<u64, u32>;

fn merge_lcm(acc: &mut Factored, n: u64) {
    for (r, e) in factorize(n) {
        let slot = acc.entry(r).or_insert(0);
        *slot = (*slot).max(e);
    }
}

/// A multiple of the order of an invertible matrix: the lcm of
/// `q^deg(g) - 1` over irreducible factors `g` of the characteristic
/// polynomial, times the least power of `p` bounding the multiplicities.
fn order_multiple(m: &Matrix) -> Result<Factored> {
    let field = m.field();
    let (p, q) = (field.p(), field.q());
    let mut acc = Factored::new();
    let mut max_mult = 1;
    for (g, e) in m.charpoly().factor()? {
        let d = g.degree().expect("nonconstant factor") as u32;
        let qd = q.checked_pow(d).ok_or_else(|| Error::TooLarge(format!("q^{d} overflows 64 bits")))?;
        merge_lcm(&mut acc, qd - 1);
        max_mult = max_mult.max(e);
    }
    let mut pk = 1u64;
    let mut k = 0;
    while pk < max_mult as u64 {
        pk *= p;
        k += 1;
    }
    if k > 0 {
        *acc.entry(p).or_insert(0) += k;
    }
    acc.retain(|_, e| *e > 0);
    Ok(acc)
}

fn pow_factored(m: &Matrix, exp: &Factored) -> Matrix {
    exp.iter().fold(m.clone(), |a, (&r, &e)| (0..e).fold(a, |b, _| b.pow(r as u128)))
}

fn to_u128(f: &Factored) -> Result<u128> {
    f.iter().try_fold(1u128, |acc, (&r, &e)| {
        (r as u128).checked_pow(e).and_then(|v| acc.checked_mul(v)).ok_or_else(|| Error::TooLarge("order exceeds 128 bits".into()))
    })
}

/// Exact order of an invertible matrix, without brute iteration.
pub fn element_order(m: &Matrix) -> Result<u128> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    let bound = order_multiple(m)?;
    let mut order = Factored::new();
    for (&r, &e) in &bound {
        let mut rest = bound.clone();
        rest.remove(&r);
        let mut b = pow_factored(m, &rest);
        let mut j = 0;
        while !b.is_identity() {
            b = b.pow(r as u128);
            j += 1;
            debug_assert!(j <= e, "order bound violated");
        }
        if j > 0 {
            order.insert(r, j);
        }
    }
    to_u128(&order)
}

/// Order by repeated multiplication, giving up after `cap` steps.
pub fn element_order_brute(m: &Matrix, cap: u64) -> Result<u64> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    let mut x = m.clone();
    for k in 1..=cap {
        if x.is_identity() {
            return Ok(k);
        }
        x = &x * m;
    }
    Err(Error::CapExceeded(cap))
}

/// Order, using the factored fast path and falling back to brute
/// multiplication up to `cap` when the exponent bound is unavailable.
pub fn element_order_capped(m: &Matrix, cap: u64) -> Result<u128> {
    match element_order(m) {
        Err(Error::TooLarge(_)) => element_order_brute(m, cap).map(u128::from),
        other => other,
    }
}

/// Smallest `k >= 1` with `M^k` scalar.
pub fn projective_order(m: &Matrix) -> Result<u128> {
    let ord = element_order(m)?;
    let mut k = ord;
    let small = u64::try_from(ord).map_err(|_| Error::TooLarge("order exceeds 64 bits".into()))?;
    let primes: Vec<u64> = factorize(small).into_iter().map(|(r, _)| r).collect();
    for r in primes {
        let r = r as u128;
        while k % r == 0 && m.pow(k / r).is_scalar() {
            k /= r;
        }
    }
    Ok(k)
}
