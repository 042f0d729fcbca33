use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ff::numtheory::distinct_prime_factors;
use crate::ff::{Elem, Field};

/// A univariate polynomial over a finite field, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl FieldPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> FieldPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { field: field.clone(), coeffs }
    }

    /// Coefficients given as element indices (prime-field residues when `m = 1`).
    ///
    /// # Panics
    /// If an index is not below `q`.
    pub fn from_indices(field: &Field, idx: &[u64]) -> FieldPoly {
        let coeffs = idx.iter().map(|&i| field.elem(i).expect("coefficient index out of range")).collect();
        FieldPoly::new(field, coeffs)
    }

    /// Integer coefficients mapped into the prime subfield.
    pub fn from_ints(field: &Field, ints: &[i64]) -> FieldPoly {
        FieldPoly::new(field, ints.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn zero(field: &Field) -> FieldPoly {
        FieldPoly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> FieldPoly {
        FieldPoly::constant(field, Elem::ONE)
    }

    /// The indeterminate `t`.
    pub fn t(field: &Field) -> FieldPoly {
        FieldPoly::monomial(field, Elem::ONE, 1)
    }

    pub fn constant(field: &Field, c: Elem) -> FieldPoly {
        FieldPoly::new(field, vec![c])
    }

    pub fn monomial(field: &Field, c: Elem, deg: usize) -> FieldPoly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        FieldPoly::new(field, coeffs)
    }

    /// `t - r`.
    pub fn linear(field: &Field, r: Elem) -> FieldPoly {
        FieldPoly::new(field, vec![field.neg(r), Elem::ONE])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> FieldPoly {
        roots.iter().fold(FieldPoly::one(field), |acc, &r| &acc * &FieldPoly::linear(field, r))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    pub fn monic(&self) -> FieldPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()))
    }

    pub fn scale(&self, c: Elem) -> FieldPoly {
        let f = &self.field;
        FieldPoly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> FieldPoly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int((i as u64 % f.p()) as i64), c)).collect();
        FieldPoly::new(f, coeffs)
    }

    /// Coefficientwise image under a map of fields (embedding, Frobenius).
    pub fn map_coeffs(&self, target: &Field, map: impl Fn(Elem) -> Elem) -> FieldPoly {
        FieldPoly::new(target, self.coeffs.iter().map(|&c| map(c)).collect())
    }

    /// Long division.
    ///
    /// # Panics
    /// On division by the zero polynomial.
    pub fn divrem(&self, d: &FieldPoly) -> (FieldPoly, FieldPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let dd = d.deg();
        if self.coeffs.len() <= dd {
            return (FieldPoly::zero(f), self.clone());
        }
        let inv_lead = f.inv(d.lead());
        let mut r = self.coeffs.clone();
        let mut q = vec![Elem::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv_lead);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &dc) in d.coeffs.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, dc));
            }
        }
        r.truncate(dd);
        (FieldPoly::new(f, q), FieldPoly::new(f, r))
    }

    pub fn rem(&self, d: &FieldPoly) -> FieldPoly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &FieldPoly) -> FieldPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mulmod(&self, other: &FieldPoly, m: &FieldPoly) -> FieldPoly {
        (self * other).rem(m)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &FieldPoly) -> FieldPoly {
        let mut base = self.rem(m);
        let mut acc = FieldPoly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m);
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> FieldPoly {
        (0..e).fold(FieldPoly::one(&self.field), |acc, _| &acc * self)
    }

    /// `t^(q^k) mod self`, by `k` successive `q`-th powers.
    fn frobenius_power_of_t(&self, k: usize) -> FieldPoly {
        let q = self.field.q();
        let mut h = FieldPoly::t(&self.field).rem(self);
        for _ in 0..k {
            h = h.powmod(q, self);
        }
        h
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let t = FieldPoly::t(&self.field);
        if f.frobenius_power_of_t(n) != t.rem(&f) {
            return false;
        }
        distinct_prime_factors(n as u64).into_iter().all(|r| {
            let h = f.frobenius_power_of_t(n / r as usize);
            (&h - &t).gcd(&f).is_one()
        })
    }

    /// Factorization into monic irreducibles with multiplicities, sorted by
    /// degree and then coefficients. The leading coefficient is dropped.
    pub fn factor(&self) -> Result<Vec<(FieldPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("cannot factor zero".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d ^ self.field.q());
        let mut out: Vec<(FieldPoly, u32)> = Vec::new();
        for (sqf, mult) in self.monic().squarefree_decomposition() {
            for (block, d) in sqf.distinct_degree() {
                for g in block.equal_degree(d, &mut rng) {
                    out.push((g, mult));
                }
            }
        }
        out.sort_by_key(|a| a.0.sort_key());
        Ok(out)
    }

    fn sort_key(&self) -> (usize, Vec<u64>) {
        (self.coeffs.len(), self.coeffs.iter().map(|c| c.index()).collect())
    }

    /// Distinct roots in the coefficient field, ascending by element index.
    pub fn roots(&self) -> Vec<Elem> {
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.monic();
        let t = FieldPoly::t(&self.field);
        let split = (&f.frobenius_power_of_t(1) - &t).gcd(&f);
        if split.is_constant() {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0007_2007 ^ self.field.q());
        let mut roots: Vec<Elem> =
            split.equal_degree(1, &mut rng).into_iter().map(|l| self.field.neg(l.coeff(0))).collect();
        roots.sort();
        roots
    }

    /// Square-free decomposition of a monic polynomial: `self = prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(FieldPoly, u32)> {
        let field = &self.field;
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let mut c = self.gcd(&self.derivative());
        let mut w = self.divrem(&c).0;
        let mut i = 1u32;
        while !w.is_constant() {
            let y = w.gcd(&c);
            let fac = w.divrem(&y).0;
            if !fac.is_constant() {
                out.push((fac, i));
            }
            w = y;
            c = c.divrem(&w).0;
            i += 1;
        }
        if !c.is_constant() {
            let p = field.p() as usize;
            let root_coeffs = (0..=c.deg() / p).map(|k| field.frobenius(c.coeff(k * p), field.m() - 1)).collect();
            let root = FieldPoly::new(field, root_coeffs);
            for (g, j) in root.squarefree_decomposition() {
                out.push((g, j * p as u32));
            }
        }
        out
    }

    /// Splits a monic square-free polynomial into blocks whose irreducible
    /// factors all share one degree.
    pub fn distinct_degree(&self) -> Vec<(FieldPoly, usize)> {
        let t = FieldPoly::t(&self.field);
        let q = self.field.q();
        let mut rest = self.monic();
        let mut h = t.rem(&rest);
        let mut out = Vec::new();
        let mut d = 1;
        while rest.deg() >= 2 * d {
            h = h.powmod(q, &rest);
            let g = (&h - &t).gcd(&rest);
            if !g.is_one() {
                rest = rest.divrem(&g).0;
                h = h.rem(&rest);
                out.push((g, d));
            }
            d += 1;
        }
        if !rest.is_constant() {
            let n = rest.deg();
            out.push((rest, n));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic square-free polynomial whose
    /// irreducible factors all have degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut impl Rng) -> Vec<FieldPoly> {
        let n = self.deg();
        if n == d {
            return vec![self.monic()];
        }
        let field = &self.field;
        loop {
            let a = FieldPoly::new(field, (0..n).map(|_| Elem(rng.gen_range(0..field.q()))).collect());
            if a.is_constant() {
                continue;
            }
            let g = a.gcd(self);
            let g = if !g.is_one() {
                g
            } else {
                let b = self.splitting_map(&a, d);
                b.gcd(self)
            };
            if !g.is_constant() && g.deg() < n {
                let h = self.divrem(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// `a^((q^d - 1)/2) - 1` for odd `q`, the trace `sum a^(2^i)` over
    /// `GF(q^d)/GF(2)` for even `q`, reduced mod `self`.
    fn splitting_map(&self, a: &FieldPoly, d: usize) -> FieldPoly {
        let field = &self.field;
        let q = field.q();
        if q % 2 == 1 {
            let mut norm_part = a.rem(self);
            let mut power = norm_part.clone();
            for _ in 1..d {
                power = power.powmod(q, self);
                norm_part = norm_part.mulmod(&power, self);
            }
            // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2)
            &norm_part.powmod((q - 1) / 2, self) - &FieldPoly::one(field)
        } else {
            let steps = d * field.m() as usize;
            let mut term = a.rem(self);
            let mut acc = term.clone();
            for _ in 1..steps {
                term = term.mulmod(&term, self);
                acc = &acc + &term;
            }
            acc
        }
    }
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPoly[{}]({self})", self.field)
    }
}

/// Human-readable form `c0 + c1*t + c2*t^2`, zero terms omitted. Prime-field
/// coefficients print as residues, extension-field ones as `[c0,c1,...]`.
impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if self.field.is_prime_field() {
                c.index().to_string()
            } else {
                format!("[{}]", self.field.format_elem(c))
            };
            match (i, c == Elem::ONE) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coef}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coef}*t^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&FieldPoly> for &FieldPoly {
            type Output = FieldPoly;
            fn $method(self, rhs: &FieldPoly) -> FieldPoly {
                assert!(self.field == rhs.field, "field mismatch in polynomial arithmetic");
                $body(self, rhs)
            }
        }
        impl $tr<FieldPoly> for FieldPoly {
            type Output = FieldPoly;
            fn $method(self, rhs: FieldPoly) -> FieldPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

fn add_impl(a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
    let f = &a.field;
    let n = a.coeffs.len().max(b.coeffs.len());
    FieldPoly::new(f, (0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
}

fn sub_impl(a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
    let f = &a.field;
    let n = a.coeffs.len().max(b.coeffs.len());
    FieldPoly::new(f, (0..n).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
}

fn mul_impl(a: &FieldPoly, b: &FieldPoly) -> FieldPoly {
    let f = &a.field;
    if a.is_zero() || b.is_zero() {
        return FieldPoly::zero(f);
    }
    let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    FieldPoly::new(f, out)
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &FieldPoly {
    type Output = FieldPoly;
    fn neg(self) -> FieldPoly {
        let f = &self.field;
        FieldPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Neg for FieldPoly {
    type Output = FieldPoly;
    fn neg(self) -> FieldPoly {
        -&self
    }
}

/// Monic gcd together with a coprimality flag.
pub fn gcd_coprime(f: &FieldPoly, g: &FieldPoly) -> Result<(FieldPoly, bool)> {
    if f.field != g.field {
        return Err(Error::FieldMismatch("gcd of polynomials over different fields".into()));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial("gcd(0, 0) is undefined".into()));
    }
    let d = f.gcd(g);
    let coprime = d.is_constant();
    Ok((d, coprime))
}
