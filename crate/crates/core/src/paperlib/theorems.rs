use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::conditions::{dim3_irreducibility_conditions, dim5_irreducibility_conditions, ConditionReport, OmegaField};
use super::pairs::{build, build_dim3, Dim3Params, Dim5Params, Params};
use super::powers::R15;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::{element_order, Matrix};
use crate::polyring::FieldPoly;

/// The four generation statements, by group family and dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    Sl3,
    Su3,
    Sl5,
    Su5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    SL,
    SU,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Sl3, Target::Su3, Target::Sl5, Target::Su5];

    pub fn family(self) -> Family {
        match self {
            Target::Sl3 | Target::Sl5 => Family::SL,
            Target::Su3 | Target::Su5 => Family::SU,
        }
    }

    pub fn n(self) -> usize {
        match self {
            Target::Sl3 | Target::Su3 => 3,
            Target::Sl5 | Target::Su5 => 5,
        }
    }

    pub fn theorem(self) -> &'static str {
        match self {
            Target::Sl3 => "Thm 3.5",
            Target::Su3 => "Thm 3.7",
            Target::Sl5 => "Thm 4.6",
            Target::Su5 => "Thm 4.8",
        }
    }

    /// The field holding the parameter: `GF(q)` for SL, `GF(q^2)` for SU.
    pub fn parameter_field(self, q: u64) -> Result<Field> {
        match self.family() {
            Family::SL => Field::of_order(q),
            Family::SU => {
                let q2 = q.checked_mul(q).ok_or_else(|| Error::TooLarge(format!("q = {q}")))?;
                Field::of_order(q2)
            }
        }
    }

    fn check_field(self, field: &Field) -> Result<()> {
        if self.family() == Family::SU {
            field.sqrt_order()?;
        }
        Ok(())
    }

    /// The pair the theorem attaches to its single free parameter.
    pub fn params_for(self, field: &Field, v: Elem) -> Result<Params> {
        self.check_field(field)?;
        let f = field;
        Ok(match self {
            Target::Sl3 => Params::Dim3(Dim3Params { a: Elem::ZERO, b: v }),
            Target::Su3 => Params::Dim3(Dim3Params { a: v, b: f.sigma(v)? }),
            Target::Sl5 => Params::Dim5(Dim5Params { b: Elem::ZERO, c: v }),
            Target::Su5 => Params::Dim5(Dim5Params { b: f.sub(f.sub(f.sigma(v)?, v), f.one()), c: v }),
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Sl3 => "sl3",
            Target::Su3 => "su3",
            Target::Sl5 => "sl5",
            Target::Su5 => "su5",
        })
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Target> {
        match s.to_ascii_lowercase().as_str() {
            "sl3" => Ok(Target::Sl3),
            "su3" => Ok(Target::Su3),
            "sl5" => Ok(Target::Sl5),
            "su5" => Ok(Target::Su5),
            _ => Err(Error::Parse(format!("unknown target {s:?}"))),
        }
    }
}

fn sum(f: &Field, terms: &[Elem]) -> Elem {
    terms.iter().fold(f.zero(), |acc, &t| f.add(acc, t))
}

fn generates_field(f: &Field, v: Elem) -> bool {
    f.subfield_degree(v) == f.m()
}

/// Evaluates the numbered hypotheses of the generation theorem for `target`
/// at the parameter `v`.
pub fn theorem_conditions(target: Target, v: Elem, field: &Field) -> Result<ConditionReport> {
    target.check_field(field)?;
    field.elem(v.index())?;
    let f = field;
    let k = |x: i64| f.from_int(x);
    let thm = target.theorem();
    let mut r = ConditionReport::new(thm);
    let label = |s: &str| format!("{thm} ({s})");
    match target {
        Target::Sl3 => {
            let om = OmegaField::new(f)?;
            let e = om.big();
            let b = om.lift(v);
            r.push(label("b != 0"), !v.is_zero(), "");
            let hit = (0..3).find(|&j| b == e.mul(om.int(-2), om.w(j)));
            r.push(label("i"), hit.is_none(), hit.map(|j| format!("b = -2w^{j}")).unwrap_or_default());
            r.push(label("ii"), generates_field(f, f.pow(v, 3)), "F_p[b^3] = F_q");
            let hit = (f.p() == 2).then(|| (0..3).find(|&j| b == om.w(j))).flatten();
            r.push(label("iii"), hit.is_none(), hit.map(|j| format!("b = w^{j}")).unwrap_or_default());
        }
        Target::Su3 => {
            let q = f.sqrt_order()?;
            let om = OmegaField::new(f)?;
            let e = om.big();
            let a = om.lift(v);
            let aq = om.lift(f.sigma(v)?);
            r.push(label("q^2 not in {4, 9, 25}"), ![2, 3, 5].contains(&q), "");
            r.push(label("a != 0"), !v.is_zero(), "");
            let hit = (0..3).find(|&j| sum(e, &[aq, e.mul(a, om.w(j)), e.mul(om.int(2), om.w(2 * j))]).is_zero());
            r.push(label("i"), hit.is_none(), hit.map(|j| format!("vanishes at j={j}")).unwrap_or_default());
            r.push(label("ii"), f.pow(v, q + 1) != f.one(), "a^(q+1) != 1");
            r.push(label("iii"), generates_field(f, f.pow(v, 3)), "F_(q^2) = F_p[a^3]");
            let sextic = FieldPoly::from_ints(f, &[-1, 0, 0, -4, 0, 0, 1]).eval(v);
            r.push(label("iv"), f.p() == 2 || !sextic.is_zero(), "a^6 - 4a^3 - 1 != 0");
            r.push(label("v"), !FieldPoly::from_ints(f, &R15).eval(v).is_zero(), "R(a) != 0");
        }
        Target::Sl5 => {
            let c = v;
            r.push(label("c != 0"), !c.is_zero(), "");
            let i1 = sum(f, &[f.mul(k(3), f.mul(c, c)), f.mul(k(-3), c), f.one()]);
            let i2 = sum(f, &[f.mul(k(16), c), k(9)]);
            r.push(label("i"), !i1.is_zero() && !i2.is_zero(), "3c^2-3c+1 != 0 and 16c+9 != 0");
            r.push(label("ii"), generates_field(f, f.pow(c, 5)), "F_p[c^5] = F_q");
            let iii = match f.sqrt_order() {
                Ok(s) if f.p() == 2 => !sum(f, &[f.pow(c, s), c, f.one()]).is_zero(),
                _ => true,
            };
            r.push(label("iii"), iii, "c^sqrt(q) + c + 1 != 0");
        }
        Target::Su5 => {
            let q = f.sqrt_order()?;
            let c = v;
            r.push(label("c != 0"), !c.is_zero(), "");
            if c.is_zero() {
                return Ok(r);
            }
            let cq = f.sigma(c)?;
            let i = sum(f, &[f.mul(cq, cq), f.mul(cq, c), f.mul(k(-3), cq), f.mul(c, c), f.mul(k(-3), c), k(3)]);
            r.push(label("i"), !i.is_zero(), "c^2q + c^(q+1) - 3c^q + c^2 - 3c + 3 != 0");
            let ii = sum(f, &[f.pow(c, 2 * q - 1), f.mul(k(-2), cq), f.mul(k(8), f.pow(c, q - 1)), c, k(8)]);
            r.push(label("ii"), !ii.is_zero(), "c^(2q-1) - 2c^q + 8c^(q-1) + c + 8 != 0");
            r.push(label("iii"), generates_field(f, f.pow(c, 5)), "F_(q^2) = F_p[c^5]");
        }
    }
    Ok(r)
}

/// A parameter choice together with the conditions it was checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub params: Params,
    /// The free parameter of the theorem, when the hit is generic.
    pub parameter: Option<Elem>,
    pub report: ConditionReport,
}

/// Nonzero elements of order `ord` first, then the remaining nonzero
/// elements; each group in increasing index order.
pub fn candidate_order(field: &Field, ord: u64) -> Vec<Elem> {
    let (mut first, mut rest): (Vec<Elem>, Vec<Elem>) =
        field.nonzero_elements().partition(|&a| field.element_order(a).ok() == Some(ord));
    first.append(&mut rest);
    first
}

/// Searches for a parameter satisfying the theorem for `target`. The
/// explicit witnesses take precedence where they exist; otherwise elements
/// of maximal order come first (or only those of order `order_hint` when
/// given). `None` when nothing applies.
pub fn search_params(target: Target, field: &Field, order_hint: Option<u64>) -> Result<Option<SearchHit>> {
    target.check_field(field)?;
    if let Some(hit) = special_witness(target, field)? {
        return Ok(Some(hit));
    }
    let candidates = match order_hint {
        Some(k) => field.nonzero_elements().filter(|&a| field.element_order(a).ok() == Some(k)).collect(),
        None => candidate_order(field, field.q() - 1),
    };
    for v in candidates {
        let report = theorem_conditions(target, v, field)?;
        if report.overall {
            return Ok(Some(SearchHit { params: target.params_for(field, v)?, parameter: Some(v), report }));
        }
    }
    Ok(None)
}

/// The explicit witnesses used where the generic hypotheses fail:
/// `(a, b) = (1, 2)` for `SL_3(2)`, `SL_3(3)`; `b = c = omega` for `SL_5(4)`;
/// a root of `t^4 + t^3 + 1` for `SL_5(16)`; a root of `t^4 + t + 1` for
/// `SU_5(16)`.
pub fn special_witness(target: Target, field: &Field) -> Result<Option<SearchHit>> {
    let f = field;
    match (target, f.q()) {
        (Target::Sl3, 2 | 3) => {
            let (a, b) = (f.one(), f.from_int(2));
            let mut report = dim3_irreducibility_conditions(f, a, b)?;
            report.subject = "Thm 3.5 (q = 2, 3)".into();
            report.push("Thm 3.5 (q = 2, 3): (a,b) = (1,2)", true, "");
            Ok(Some(SearchHit { params: Params::Dim3(Dim3Params { a, b }), parameter: None, report }))
        }
        (Target::Sl5, 4) => {
            let w = f.omega().expect("GF(4) contains omega");
            let mut report = dim5_irreducibility_conditions(f, w, w);
            report.subject = "Thm 4.6 (q = 4)".into();
            report.push("Thm 4.6 (q = 4): F_4 = F_2(c)", generates_field(f, w), "b = c = w");
            Ok(Some(SearchHit { params: Params::Dim5(Dim5Params { b: w, c: w }), parameter: None, report }))
        }
        (Target::Sl5, 16) | (Target::Su5, 16) => {
            let thm = target.theorem();
            let (minpoly, dropped, prime, scope) = match target {
                Target::Sl5 => ([1, 0, 0, 1, 1], "ii", 41, "q = 16"),
                _ => ([1, 1, 0, 0, 1], "iii", 17, "q^2 = 16"),
            };
            let c = *FieldPoly::from_indices(f, &minpoly).roots().first().expect("polynomial splits in GF(16)");
            let full = theorem_conditions(target, c, f)?;
            let mut report = ConditionReport::new(format!("{thm} ({scope})"));
            for cond in full.conditions.into_iter().filter(|cond| cond.label != format!("{thm} ({dropped})")) {
                report.push(cond.label, cond.passed, cond.detail);
            }
            let params = target.params_for(f, c)?;
            let ord = element_order(&build(f, params)?.z())?;
            report.push(
                format!("{thm} ({scope}): order of xy divisible by {prime}"),
                ord % prime == 0,
                format!("order of xy = {ord}"),
            );
            Ok(Some(SearchHit { params, parameter: Some(c), report }))
        }
        _ => Ok(None),
    }
}

/// The permuted basis `{v, yv, y^2 v}`, `v = (b, 1, 0)`, on which `x` and `y`
/// act monomially when `ab = 1`; `None` when `ab != 1`.
pub fn dim3_monomial_basis(field: &Field, a: Elem, b: Elem) -> Result<Option<Vec<Vec<Elem>>>> {
    if !dim3_irreducibility_conditions(field, a, b)?.overall {
        return Err(Error::Precondition("pair is reducible".into()));
    }
    if field.mul(a, b) != field.one() {
        return Ok(None);
    }
    let pair = build_dim3(field, a, b, false)?;
    let v1 = vec![b, field.one(), field.zero()];
    let v2 = pair.y.apply(&v1);
    let v3 = pair.y.apply(&v2);
    let basis = vec![v1, v2, v3];
    let p = Matrix::from_fn(field, 3, |i, j| basis[j][i]);
    let pinv = p.inverse()?;
    let monomial = |g: &Matrix| {
        let m = &(&pinv * g) * &p;
        m.rows().iter().all(|r| r.iter().filter(|e| !e.is_zero()).count() == 1)
    };
    if !(monomial(&pair.x) && monomial(&pair.y)) {
        return Err(Error::Falsified("generators are not monomial on the constructed basis".into()));
    }
    Ok(Some(basis))
}
