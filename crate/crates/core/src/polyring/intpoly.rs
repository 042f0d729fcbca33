use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldPoly;
use crate::error::{Error, Result};
use crate::ff::numtheory::is_prime;
use crate::ff::Field;

/// A polynomial with arbitrary-precision integer coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly::default()
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn t() -> IntPoly {
        IntPoly::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: i64, deg: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); deg + 1];
        v[deg] = BigInt::from(c);
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Substitutes `t -> t^k`.
    pub fn inflate(&self, k: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        IntPoly::new(v)
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, sign-normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact quotient, or `None` if `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.deg();
        if self.deg() < dd {
            return None;
        }
        let lead = d.lead();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(&lead);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r[..dd].iter().all(|c| c.is_zero()).then(|| IntPoly::new(q))
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-division by zero polynomial");
        let dd = d.deg();
        let lead = d.lead();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let c = r.lead();
            let mut mono = vec![BigInt::zero(); shift + 1];
            mono[shift] = c;
            r = &r.scale(&lead) - &(d * &IntPoly::new(mono));
        }
        r
    }

    /// Primitive gcd with positive leading coefficient, times the gcd of contents.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    /// Reduction into `GF(p^m)[t]` via the prime subfield.
    pub fn reduce(&self, field: &Field) -> FieldPoly {
        let p = BigInt::from(field.p());
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| field.from_int(c.mod_floor(&p).to_i64().expect("residue fits i64")))
            .collect();
        FieldPoly::new(field, coeffs)
    }

    /// Factorization over `Z` into primitive irreducibles with positive
    /// leading coefficient, plus the signed content as a unit/constant
    /// factor. Factors are sorted by degree, then coefficients.
    pub fn factor(&self) -> Result<(BigInt, Vec<(IntPoly, u32)>)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("cannot factor zero".into()));
        }
        let prim = self.primitive_part();
        let unit = self.content() * if self.lead().is_negative() { -1 } else { 1 };
        if prim.is_constant() {
            return Ok((unit, Vec::new()));
        }
        let sqf = prim.div_exact(&prim.gcd(&prim.derivative())).expect("gcd divides").primitive_part();
        let mut out = Vec::new();
        for g in factor_squarefree(&sqf)? {
            let mut rest = prim.clone();
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&g) {
                rest = q;
                mult += 1;
            }
            out.push((g, mult));
        }
        out.sort_by_key(|a| sort_key(&a.0));
        Ok((unit, out))
    }
}

fn sort_key(f: &IntPoly) -> (usize, Vec<BigInt>) {
    (f.coeffs.len(), f.coeffs.clone())
}

fn coefficient_norm(f: &IntPoly) -> f64 {
    f.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY).powi(2)).sum::<f64>().sqrt()
}

/// Zassenhaus with a single large prime: factor mod `p` where `p` exceeds
/// twice the Mignotte bound, then recombine subsets of modular factors and
/// keep those whose symmetric lift divides exactly.
fn factor_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let n = f.deg();
    if n == 1 {
        return Ok(vec![f.clone()]);
    }
    let lead = f.lead();
    let bound = (2f64).powi(n as i32) * coefficient_norm(f) * lead.abs().to_f64().unwrap_or(f64::INFINITY);
    if !bound.is_finite() || bound > 1e17 {
        return Err(Error::TooLarge(format!("coefficients of {f} too large for single-prime lifting")));
    }
    let mut p = (2.0 * bound) as u64 + 1;
    let fp = loop {
        p += 1;
        if !is_prime(p) || (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let field = Field::prime(p)?;
        let red = f.reduce(&field);
        if red.gcd(&red.derivative()).is_one() {
            break field;
        }
    };
    let mut modular: Vec<FieldPoly> =
        f.reduce(&fp).factor()?.into_iter().map(|(g, _)| g).collect();
    let modulus = BigInt::from(p);
    let half = &modulus / 2;
    let lift = |g: &FieldPoly, lc: &BigInt| -> IntPoly {
        let scaled = g.scale(fp.from_int(lc.mod_floor(&modulus).to_i64().expect("fits")));
        IntPoly::new(
            scaled
                .coeffs()
                .iter()
                .map(|c| {
                    let v = BigInt::from(c.index());
                    if v > half {
                        v - &modulus
                    } else {
                        v
                    }
                })
                .collect(),
        )
    };

    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= modular.len() {
        let mut hit = None;
        for subset in combinations(modular.len(), size) {
            let prod = subset.iter().fold(FieldPoly::one(&fp), |acc, &i| &acc * &modular[i]);
            let cand = lift(&prod, &rest.lead()).primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q.primitive_part();
                for &i in subset.iter().rev() {
                    modular.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if !rest.is_constant() {
        found.push(rest.primitive_part());
    }
    Ok(found)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// `c0 + c1*t + ... `, ascending, zero terms omitted, signs folded in.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
