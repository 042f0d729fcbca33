//! Integer helpers: primality, factorization of 64-bit integers, Euler's
//! totient and the totient lower bounds used when counting primitive
//! elements.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::report::ClaimReport;

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
///
/// Small factors come out by trial division; any cofactor left above the
/// trial bound is split with Pollard's rho.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p <= 1000 && p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut large = Vec::new();
        while let Some(k) = stack.pop() {
            if k == 1 {
                continue;
            }
            if is_prime(k) {
                large.push(k);
            } else {
                let d = pollard_rho(k);
                stack.push(d);
                stack.push(k / d);
            }
        }
        large.sort_unstable();
        for prime in large {
            match out.last_mut() {
                Some((q, e)) if *q == prime => *e += 1,
                _ => out.push((prime, 1)),
            }
        }
    }
    out
}

pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Returns `(p, m)` with `q = p^m`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

/// Multiplicative order of `a` modulo `n`; `None` when `gcd(a, n) != 1`.
pub fn multiplicative_order(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if a.gcd(&n) != 1 {
        return None;
    }
    let phi = euler_phi(n).ok()?;
    let mut ord = phi;
    for p in distinct_prime_factors(phi) {
        while ord % p == 0 && pow_mod(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Precondition("euler_phi is undefined at 0".into()));
    }
    let mut phi = n;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// Totients of `0..=n` by a linear sieve (index 0 holds 0).
pub fn phi_table(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// `phi(n) > n^(2/3)`, decided exactly as `phi(n)^3 > n^2`.
pub fn phi_exceeds_two_thirds_power(n: u64, phi: u64) -> bool {
    (phi as u128).pow(3) > (n as u128).pow(2)
}

/// The finite set on which `phi(n) > n^(2/3)` fails.
pub const PHI_TWO_THIRDS_EXCEPTIONS: [u64; 12] = [1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30, 42];

/// The values where `phi(n) = n^(2/3)` holds with equality.
pub const PHI_TWO_THIRDS_EQUALITY: [u64; 2] = [1, 8];

/// Smallest `n` for which the quadratic totient bound is asserted.
pub const QUADRATIC_BOUND_START: u64 = 14;

/// `phi(n^2 - 1)` for `2 <= n <= table.len() - 2`, using
/// `phi(ab) = phi(a) phi(b) d / phi(d)` with `a = n - 1`, `b = n + 1`,
/// `d = gcd(a, b)` in `{1, 2}`.
fn phi_of_n_squared_minus_one(n: u64, table: &[u64]) -> u64 {
    let a = n - 1;
    let b = n + 1;
    let prod = table[a as usize] * table[b as usize];
    if n % 2 == 1 {
        prod * 2
    } else {
        prod
    }
}

/// Checks over `lo..=hi` that `phi(n) > n^(2/3)` fails exactly on the
/// known exception set, that equality happens only at 1 and 8, and that
/// `phi(n^2 - 1) > max(3n + 21, 4n - 1)` for every `n >= 14` in range.
pub fn check_phi_bounds(lo: u64, hi: u64, quadratic_hi: u64) -> ClaimReport {
    ClaimReport::timed("Lemma 2.1 / Corollary 2.2", |report| {
        let lo = lo.max(1);
        let table = phi_table(hi.max(quadratic_hi + 1) as usize + 1);
        let mut exceptions = BTreeSet::new();
        let mut equality = BTreeSet::new();
        for n in lo..=hi {
            let phi = table[n as usize];
            if !phi_exceeds_two_thirds_power(n, phi) {
                exceptions.insert(n);
            }
            if (phi as u128).pow(3) == (n as u128).pow(2) {
                equality.insert(n);
            }
        }
        let expected: BTreeSet<u64> =
            PHI_TWO_THIRDS_EXCEPTIONS.iter().copied().filter(|n| (lo..=hi).contains(n)).collect();
        let expected_eq: BTreeSet<u64> =
            PHI_TWO_THIRDS_EQUALITY.iter().copied().filter(|n| (lo..=hi).contains(n)).collect();
        report.check(
            "phi(n) > n^(2/3) exception set",
            exceptions == expected,
            format!("range [{lo}, {hi}], found {exceptions:?}"),
        );
        report.check(
            "phi(n) = n^(2/3) equality set",
            equality == expected_eq,
            format!("found {equality:?}"),
        );
        report.set_data("exceptions", &exceptions);

        let mut violations = Vec::new();
        let start = QUADRATIC_BOUND_START.max(lo);
        for n in start..=quadratic_hi {
            let phi = phi_of_n_squared_minus_one(n, &table);
            let bound = (3 * n + 21).max(4 * n - 1);
            if phi <= bound {
                violations.push(n);
            }
        }
        report.check(
            "phi(n^2-1) > max(3n+21, 4n-1) for n >= 14",
            violations.is_empty(),
            format!("range [{start}, {quadratic_hi}], violations {violations:?}"),
        );
    })
}

/// `phi(n^2 - 1)` computed directly from the trial-division totient.
pub fn phi_n_squared_minus_one(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition("n^2 - 1 must be positive".into()));
    }
    euler_phi(n * n - 1)
}
