use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::numtheory::{distinct_prime_factors, is_prime, mul_mod};
use crate::error::{Error, Result};
use crate::polyring::FieldPoly;

/// An element of a [`Field`], stored as the integer `sum c_i p^i` of its
/// polynomial-basis coordinates. The prime subfield occupies `0..p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(pub(crate) u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Largest field order that gets log/exp tables.
const TABLE_LIMIT: u64 = 1 << 16;
/// Largest field order that also gets a full addition table (odd p, m > 1).
const ADD_TABLE_LIMIT: u64 = 1 << 10;

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
    add: Option<Vec<u16>>,
}

struct Inner {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    order_primes: Vec<u64>,
    primitive: Elem,
    tables: Option<Tables>,
}

/// A finite field `GF(p^m)` in polynomial basis over an explicit monic
/// irreducible modulus of degree `m`.
///
/// Cloning is cheap; all clones share the same arithmetic tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "{}^{}/{}", self.inner.p, self.inner.m, coeffs.join(","))
    }
}

impl Field {
    /// Builds `GF(p^m)`. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree `m` is used, comparing
    /// coefficient vectors from the constant term upward.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadModulus("extension degree must be positive".into()));
        }
        let q = p.checked_pow(m).ok_or(Error::FieldTooLarge { p, m })?;
        let modulus = match modulus {
            Some(given) => {
                validate_modulus(p, m, given)?;
                given.to_vec()
            }
            None if m == 1 => vec![0, 1],
            None => smallest_irreducible(p, m)?,
        };
        Ok(Self::build(p, m, q, modulus))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// `GF(q)` with the default modulus.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, m) = super::numtheory::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, m, None)
    }

    fn build(p: u64, m: u32, q: u64, modulus: Vec<u64>) -> Field {
        let order_primes = distinct_prime_factors(q - 1);
        let mut field = Field {
            inner: Arc::new(Inner { p, m, q, modulus, order_primes, primitive: Elem::ONE, tables: None }),
        };
        let primitive = field.find_primitive();
        let tables = (q <= TABLE_LIMIT).then(|| field.build_tables(primitive));
        let inner = Arc::get_mut(&mut field.inner).expect("unshared during construction");
        inner.primitive = primitive;
        inner.tables = tables;
        field
    }

    fn find_primitive(&self) -> Elem {
        if self.q() == 2 {
            return Elem::ONE;
        }
        (1..self.q())
            .map(Elem)
            .find(|&g| self.inner.order_primes.iter().all(|&r| self.pow_slow(g, (self.q() - 1) / r) != Elem::ONE))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self, g: Elem) -> Tables {
        let q = self.q() as usize;
        let mut log = vec![0u32; q];
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut x = Elem::ONE;
        for k in 0..q - 1 {
            exp[k] = x.0 as u32;
            exp[k + q - 1] = x.0 as u32;
            log[x.0 as usize] = k as u32;
            x = self.mul_slow(x, g);
        }
        let add = (self.p() != 2 && self.m() > 1 && self.q() <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u16; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = self.add_slow(Elem(a as u64), Elem(b as u64)).0 as u16;
                }
            }
            t
        });
        Tables { log, exp, add }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// The modulus as a polynomial over the prime field.
    pub fn modulus_poly(&self) -> FieldPoly {
        let fp = Field::prime(self.p()).expect("p is prime");
        FieldPoly::from_indices(&fp, &self.inner.modulus)
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.m == 1
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The polynomial-basis generator `t mod modulus`.
    pub fn generator(&self) -> Elem {
        if self.m() == 1 {
            Elem((self.p() - self.inner.modulus[0]) % self.p())
        } else {
            Elem(self.p())
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        self.inner.primitive
    }

    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.q() {
            Ok(Elem(index))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q() })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p() as i64) as u64)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() > self.m() as usize {
            return Err(Error::Parse(format!("{} coefficients for a degree-{} field", coeffs.len(), self.m())));
        }
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p() {
                return Err(Error::Parse(format!("coefficient {c} not reduced mod {}", self.p())));
            }
            idx = idx * self.p() + c;
        }
        Ok(Elem(idx))
    }

    /// Polynomial-basis coordinates, constant term first, length `m`.
    pub fn coeffs(&self, a: Elem) -> Vec<u64> {
        let p = self.p();
        let mut v = a.0;
        (0..self.m())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q()).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q()).map(Elem)
    }

    pub fn is_in_prime_field(&self, a: Elem) -> bool {
        a.0 < self.p()
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p();
        if self.m() == 1 {
            return Elem(((a.0 as u128 + b.0 as u128) % p as u128) as u64);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..self.m() {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            if i + 1 < self.m() {
                place *= p;
            }
        }
        Elem(out)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p() == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(t) = self.inner.tables.as_ref().and_then(|t| t.add.as_ref()) {
            return Elem(t[(a.0 * self.q() + b.0) as usize] as u64);
        }
        self.add_slow(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.p();
        if p == 2 {
            return a;
        }
        if self.m() == 1 {
            return Elem((p - a.0) % p);
        }
        let mut v = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..self.m() {
            out += ((p - v % p) % p) * place;
            v /= p;
            if i + 1 < self.m() {
                place *= p;
            }
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p();
        if self.m() == 1 {
            return Elem(mul_mod(a.0, b.0, p));
        }
        let m = self.m() as usize;
        let (da, db) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        let modulus = &self.inner.modulus;
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &r) in modulus[..m].iter().enumerate() {
                let t = mul_mod(c, r, p);
                prod[k - m + i] = (prod[k - m + i] + p - t) % p;
            }
        }
        let mut idx = 0u64;
        for &c in prod[..m].iter().rev() {
            idx = idx * p + c;
        }
        Elem(idx)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize] as u64),
            None => self.mul_slow(a, b),
        }
    }

    pub fn try_inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        Some(match &self.inner.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as u64;
                Elem(t.exp[((self.q() - 1 - l) % (self.q() - 1)) as usize] as u64)
            }
            None => self.pow_slow(a, self.q() - 2),
        })
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// On zero input; use [`Field::try_inv`] where zero is possible.
    pub fn inv(&self, a: Elem) -> Elem {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    fn pow_slow(&self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc = Elem::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let n = self.q() - 1;
                let l = (t.log[a.0 as usize] as u128 * (exp % n) as u128 % n as u128) as usize;
                Elem(t.exp[l] as u64)
            }
            None => self.pow_slow(a, exp),
        }
    }

    /// Power with a signed exponent; negative exponents invert first.
    pub fn pow_i(&self, a: Elem, exp: i64) -> Elem {
        if exp >= 0 {
            self.pow(a, exp as u64)
        } else {
            self.pow(self.inv(a), exp.unsigned_abs())
        }
    }

    /// `a^(p^d)`.
    pub fn frobenius(&self, a: Elem, d: u32) -> Elem {
        let d = d % self.m();
        let mut x = a;
        for _ in 0..d {
            x = self.pow(x, self.p());
        }
        x
    }

    /// `sqrt(q)` for a quadratic-extension field `GF(q^2)` viewed over `GF(q)`.
    pub fn sqrt_order(&self) -> Result<u64> {
        if !self.m().is_multiple_of(2) {
            return Err(Error::NotSquareField { q: self.q() });
        }
        Ok(self.p().pow(self.m() / 2))
    }

    /// The involutory automorphism `a -> a^sqrt(q)` of `GF(q)` over its
    /// index-two subfield.
    pub fn sigma(&self, a: Elem) -> Result<Elem> {
        if !self.m().is_multiple_of(2) {
            return Err(Error::NotSquareField { q: self.q() });
        }
        Ok(self.frobenius(a, self.m() / 2))
    }

    /// Multiplicative order, found by descending from `q - 1` through its
    /// prime divisors.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let n = self.q() - 1;
        if let Some(t) = &self.inner.tables {
            return Ok(n / (t.log[a.0 as usize] as u64).gcd(&n));
        }
        let mut ord = n;
        for &r in &self.inner.order_primes {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Degree over `GF(p)` of the smallest subfield containing `a`.
    pub fn subfield_degree(&self, a: Elem) -> u32 {
        let m = self.m();
        let mut x = a;
        for d in 1..=m {
            x = self.pow(x, self.p());
            if m.is_multiple_of(d) && x == a {
                return d;
            }
        }
        m
    }

    /// Root of unity of order `k / (p-part of k)`, as in a table of roots
    /// `omega` (k = 3), `eta` (k = 5). `None` if the field does not contain it.
    pub fn root_of_unity(&self, k: u64) -> Option<Elem> {
        let mut k = k;
        while k.is_multiple_of(self.p()) {
            k /= self.p();
        }
        if !(self.q() - 1).is_multiple_of(k) {
            return None;
        }
        Some(self.pow(self.primitive_element(), (self.q() - 1) / k))
    }

    /// A fixed cube root of unity of order `3/(3,p)`; `None` when absent.
    pub fn omega(&self) -> Option<Elem> {
        self.root_of_unity(3)
    }

    /// A fixed fifth root of unity of order `5/(5,p)`; `None` when absent.
    pub fn eta(&self) -> Option<Elem> {
        self.root_of_unity(5)
    }

    /// A square root of `a`, if one exists in the field.
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return Some(a);
        }
        let t2_minus_a = FieldPoly::new(self, vec![self.neg(a), Elem::ZERO, Elem::ONE]);
        t2_minus_a.roots().into_iter().next()
    }

    pub fn format_elem(&self, a: Elem) -> String {
        let c: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
        c.join(",")
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| Error::Parse(format!("element '{s}': {e}"))))
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }

    /// Parses `p`, `p^m` or `p^m/c0,...,cm`.
    pub fn parse(s: &str) -> Result<Field> {
        let (head, modulus) = match s.split_once('/') {
            Some((h, m)) => (h, Some(m)),
            None => (s, None),
        };
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| Error::Parse(format!("field '{s}': {e}")));
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (num(p)?, num(m)? as u32),
            None => {
                let q = num(head)?;
                super::numtheory::prime_power(q).ok_or(Error::NotPrimePower(q))?
            }
        };
        match modulus {
            Some(text) => {
                let coeffs = text.split(',').map(num).collect::<Result<Vec<_>>>()?;
                Field::new(p, m, Some(&coeffs))
            }
            None => Field::new(p, m, None),
        }
    }
}

fn validate_modulus(p: u64, m: u32, given: &[u64]) -> Result<()> {
    if given.len() != m as usize + 1 {
        return Err(Error::BadModulus(format!("expected degree {m}, got {} coefficients", given.len())));
    }
    if given[m as usize] != 1 {
        return Err(Error::BadModulus("modulus must be monic".into()));
    }
    if given.iter().any(|&c| c >= p) {
        return Err(Error::BadModulus(format!("coefficients must lie in [0, {p})")));
    }
    if m > 1 {
        let fp = Field::prime(p)?;
        if !FieldPoly::from_indices(&fp, given).is_irreducible() {
            return Err(Error::BadModulus(format!("{} is reducible over GF({p})", FieldPoly::from_indices(&fp, given))));
        }
    }
    Ok(())
}

/// Lexicographically smallest monic irreducible of degree `m` over GF(p),
/// comparing `(c0, c1, ..., c_{m-1})` with `c0` most significant.
fn smallest_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    let fp = Field::prime(p)?;
    let count = p.checked_pow(m).ok_or(Error::FieldTooLarge { p, m })?;
    for k in 0..count {
        let mut coeffs = vec![0u64; m as usize + 1];
        let mut v = k;
        for i in (0..m as usize).rev() {
            coeffs[i] = v % p;
            v /= p;
        }
        coeffs[m as usize] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        if FieldPoly::from_indices(&fp, &coeffs).is_irreducible() {
            return Ok(coeffs);
        }
    }
    Err(Error::BadModulus(format!("no irreducible of degree {m} over GF({p})")))
}

/// Size of a subfield `GF(p^d)` of a field `GF(p^m)`, `d | m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfieldDescriptor {
    pub p: u64,
    pub degree: u32,
    pub size: u64,
}

/// The smallest subfield `GF(p)[a]` containing `a`.
pub fn subfield_generated(field: &Field, a: Elem) -> SubfieldDescriptor {
    let degree = field.subfield_degree(a);
    SubfieldDescriptor { p: field.p(), degree, size: field.p().pow(degree) }
}
