//! Text and JSON forms of polynomials.
//!
//! Text: `c0 + c1*t + c2*t^2`, terms in any order, `-` allowed between
//! terms, coefficient `1` optional. Extension-field coefficients are written
//! `[c0,c1,...]` in polynomial-basis coordinates.
//!
//! JSON: a coefficient array, constant term first. Integer coefficients are
//! numbers (strings when they exceed 64 bits); field coefficients are element
//! strings `"c0,c1,..."`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{FieldPoly, IntPoly};
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};

struct Term<'a> {
    negative: bool,
    coeff: Option<&'a str>,
    degree: usize,
}

fn split_terms(s: &str) -> Result<Vec<Term<'_>>> {
    let err = |m: &str| Error::Parse(format!("polynomial '{s}': {m}"));
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut depth = 0;
    let mut start = 0;
    let mut negative = false;
    let mut boundaries = Vec::new();
    while i < bytes.len() {
        match bytes[i] {
            b'[' => depth += 1,
            b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = s[..i].trim_end();
                let after_caret = prev.ends_with('^');
                if !after_caret {
                    boundaries.push((start, i, negative));
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    boundaries.push((start, s.len(), negative));
    for (k, (a, b, neg)) in boundaries.into_iter().enumerate() {
        let body = s[a..b].trim();
        if body.is_empty() {
            if k == 0 {
                continue;
            }
            return Err(err("empty term"));
        }
        let (coeff, mono) = match body.find(|c: char| c.is_ascii_alphabetic()) {
            None => (Some(body), None),
            Some(pos) => {
                let c = body[..pos].trim().trim_end_matches('*').trim();
                (if c.is_empty() { None } else { Some(c) }, Some(body[pos..].trim()))
            }
        };
        let degree = match mono {
            None => 0,
            Some(m) => {
                let m = m.trim_start_matches(|c: char| c.is_ascii_alphabetic());
                let m = m.trim();
                if m.is_empty() {
                    1
                } else {
                    let e = m.strip_prefix('^').ok_or_else(|| err("expected '^' after variable"))?;
                    e.trim().parse::<usize>().map_err(|_| err("bad exponent"))?
                }
            }
        };
        terms.push(Term { negative: neg, coeff, degree });
    }
    if terms.is_empty() {
        return Err(err("no terms"));
    }
    Ok(terms)
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<IntPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in split_terms(s)? {
            let mut c = match term.coeff {
                None => BigInt::from(1),
                Some(text) => {
                    BigInt::from_str(text).map_err(|_| Error::Parse(format!("bad integer coefficient '{text}'")))?
                }
            };
            if term.negative {
                c = -c;
            }
            if coeffs.len() <= term.degree {
                coeffs.resize(term.degree + 1, BigInt::zero());
            }
            coeffs[term.degree] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl FieldPoly {
    /// Parses the text form over `field`. Bare integers map into the prime
    /// subfield; `[c0,c1,...]` gives extension coordinates.
    pub fn parse(field: &Field, s: &str) -> Result<FieldPoly> {
        let mut coeffs: Vec<Elem> = Vec::new();
        for term in split_terms(s)? {
            let mut c = match term.coeff {
                None => Elem::ONE,
                Some(text) => match text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    Some(inner) => field.parse_elem(inner)?,
                    None => {
                        let v = BigInt::from_str(text)
                            .map_err(|_| Error::Parse(format!("bad coefficient '{text}'")))?;
                        let r = (v % BigInt::from(field.p())).to_i64().expect("residue fits");
                        field.from_int(r)
                    }
                },
            };
            if term.negative {
                c = field.neg(c);
            }
            if coeffs.len() <= term.degree {
                coeffs.resize(term.degree + 1, Elem::ZERO);
            }
            coeffs[term.degree] = field.add(coeffs[term.degree], c);
        }
        Ok(FieldPoly::new(field, coeffs))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(|&c| Value::String(self.field().format_elem(c))).collect())
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<FieldPoly> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| match c {
                Value::String(s) => field.parse_elem(s),
                Value::Number(n) => n
                    .as_i64()
                    .map(|v| field.from_int(v))
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}"))),
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldPoly::new(field, coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<Value> = self
            .coeffs()
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => Value::from(v),
                None => Value::String(c.to_string()),
            })
            .collect();
        values.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<IntPoly, D::Error> {
        let values = Vec::<Value>::deserialize(d)?;
        let coeffs = values
            .into_iter()
            .map(|v| match v {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| de::Error::custom("non-integer")),
                Value::String(s) => BigInt::from_str(&s).map_err(de::Error::custom),
                other => Err(de::Error::custom(format!("bad coefficient {other}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}
