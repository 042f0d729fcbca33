use serde::Serialize;

use super::conditions::OmegaField;
use super::powers::R15;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::polyring::{gcd_coprime, FieldPoly};
use crate::report::ClaimReport;

/// Minimal polynomials over `F_p` of the witnesses for `SU_3(q^2)` and
/// `SU_5(q^2)`, keyed by `q`; coefficients constant term first.
pub const TABLE_B: [(u64, &[i64]); 6] = [
    (4, &[1, 1, 0, 0, 1]),
    (7, &[3, 6, 1]),
    (8, &[1, 1, 0, 1, 1, 0, 1]),
    (9, &[2, 2, 1, 1, 1]),
    (11, &[2, 7, 1]),
    (13, &[2, -1, 1]),
];

/// Minimal polynomials of the `SU_5(q^2)` witnesses for `q = 3, 5`.
pub const SU5_SMALL_WITNESSES: [(u64, &[i64]); 2] = [(3, &[-1, -1, 1]), (5, &[2, -1, 1])];

pub fn table_b_poly(q: u64) -> Option<&'static [i64]> {
    TABLE_B.iter().chain(SU5_SMALL_WITNESSES.iter()).find(|(k, _)| *k == q).map(|(_, c)| *c)
}

/// Polynomials whose roots violate a hypothesis of the `SU_3` theorem,
/// over `GF(q^2)`: `t^q + w^j t + 2w^(2j)`, `t^6 - 4t^3 - 1` and `R`.
pub fn su3_condition_polys(field: &Field) -> Result<Vec<(String, FieldPoly)>> {
    let q = field.sqrt_order()? as usize;
    let om = OmegaField::new(field)?;
    if om.big() != field {
        return Err(Error::FieldMismatch(format!("omega not in {field}")));
    }
    let mut out = Vec::new();
    for j in 0..3 {
        let mut c = vec![Elem::ZERO; q + 1];
        c[q] = field.one();
        c[1] = field.add(c[1], om.w(j));
        c[0] = field.mul(field.from_int(2), om.w(2 * j));
        out.push((format!("t^q + w^{j} t + 2w^{}", 2 * j), FieldPoly::new(field, c)));
    }
    out.push(("t^6 - 4t^3 - 1".into(), FieldPoly::from_ints(field, &[-1, 0, 0, -4, 0, 0, 1])));
    out.push(("R".into(), FieldPoly::from_ints(field, &R15)));
    Ok(out)
}

/// `p1 = t^2q + t^(q+1) - 3t^q + t^2 - 3t + 3` and
/// `p2 = t^(2q-1) - 2t^q + 8t^(q-1) + t + 8` over `GF(q^2)`.
pub fn su5_condition_polys(field: &Field) -> Result<Vec<(String, FieldPoly)>> {
    let q = field.sqrt_order()? as usize;
    let mut p1 = vec![0i64; 2 * q + 1];
    for (d, c) in [(2 * q, 1), (q + 1, 1), (q, -3), (2, 1), (1, -3), (0, 3)] {
        p1[d] += c;
    }
    let mut p2 = vec![0i64; 2 * q];
    for (d, c) in [(2 * q - 1, 1), (q, -2), (q - 1, 8), (1, 1), (0, 8)] {
        p2[d] += c;
    }
    Ok(vec![("p1".into(), FieldPoly::from_ints(field, &p1)), ("p2".into(), FieldPoly::from_ints(field, &p2))])
}

/// Irreducibility, root order `q^2 - 1` and coprimality with the
/// condition polynomials, for the witness polynomial attached to `q`.
pub fn table_b_check(q: u64) -> Result<ClaimReport> {
    let coeffs = table_b_poly(q).ok_or_else(|| Error::Precondition(format!("no table entry for q = {q}")))?;
    let field = Field::of_order(q * q)?;
    let prime = Field::prime(field.p())?;
    let mut report = ClaimReport::new(format!("Table B q={q}"));
    let m = FieldPoly::from_ints(&prime, coeffs);
    report.set_data("polynomial", m.to_string());
    report.check("irreducible over F_p", m.is_irreducible(), m.to_string());
    report.check("degree = [F_(q^2) : F_p]", m.degree() == Some(field.m() as usize), "");
    let lifted = FieldPoly::from_ints(&field, coeffs);
    let roots = lifted.roots();
    let orders: Vec<u64> = roots.iter().map(|&r| field.element_order(r)).collect::<Result<_>>()?;
    report.check(
        "roots have order q^2 - 1",
        !roots.is_empty() && orders.iter().all(|&o| o == q * q - 1),
        format!("root orders {orders:?}"),
    );
    let mut polys = Vec::new();
    if TABLE_B.iter().any(|(k, _)| *k == q) {
        polys.extend(su3_condition_polys(&field)?.into_iter().map(|(n, p)| (format!("Thm 3.7: {n}"), p)));
    }
    polys.extend(su5_condition_polys(&field)?.into_iter().map(|(n, p)| (format!("Thm 4.8: {n}"), p)));
    for (name, p) in polys {
        let (g, coprime) = gcd_coprime(&lifted, &p)?;
        report.check(format!("coprime to {name}"), coprime, if coprime { String::new() } else { format!("gcd = {g}") });
    }
    Ok(report)
}

/// Outcome classes for the pairs of a proper subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseLabel {
    #[serde(rename = "reducible")]
    Reducible,
    #[serde(rename = "monomial")]
    Monomial,
    #[serde(rename = "Alt(5)-factor")]
    Alt5Factor,
    #[serde(rename = "PSL2(7)")]
    Psl27,
    #[serde(rename = "other-proper")]
    OtherProper,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Reducible => "reducible",
            CaseLabel::Monomial => "monomial",
            CaseLabel::Alt5Factor => "Alt(5)-factor",
            CaseLabel::Psl27 => "PSL2(7)",
            CaseLabel::OtherProper => "other-proper",
        }
    }
}

type Cases = &'static [(CaseLabel, &'static [(i64, i64)])];

use CaseLabel::*;

const PSU3_4: Cases = &[(Reducible, &[(0, 1), (1, 1)])];

const PSU3_9: Cases = &[(Reducible, &[(0, 1), (1, 2)]), (Monomial, &[(1, 1), (2, 2)]), (Psl27, &[(0, -1), (-1, -2)])];

const PSU3_25: Cases = &[
    (Monomial, &[(0, 1), (-1, -1)]),
    (Reducible, &[(0, 2), (-2, -2)]),
    (Alt5Factor, &[(0, 3), (-3, -3)]),
    (Psl27, &[(3, 1), (-3, -1), (3, 2), (-3, -2), (1, 3), (-1, -3)]),
    (Reducible, &[(0, -1), (1, 1), (1, 2), (1, -1), (2, 1), (3, -1), (-1, 1), (-1, 3)]),
];

/// Expected outcome of each parameter `a` outside `F_q` of the unitary
/// pair (`b = a^q`) over `GF(q^2)`, for `q = 2, 3, 5`. Values are
/// `h + k*theta` with `theta` a root of `t^2 - t - 1` for `q = 3` and of
/// `t^2 + t + 1` otherwise.
pub fn psu3_case_table(field: &Field) -> Result<Vec<(Elem, CaseLabel)>> {
    let q = field.sqrt_order()?;
    let (cases, theta_poly): (Cases, [i64; 3]) = match q {
        2 => (PSU3_4, [1, 1, 1]),
        3 => (PSU3_9, [-1, -1, 1]),
        5 => (PSU3_25, [1, 1, 1]),
        _ => return Err(Error::Precondition(format!("no case table for q = {q}"))),
    };
    let theta = *FieldPoly::from_ints(field, &theta_poly).roots().first().expect("root exists in GF(q^2)");
    let mut out: Vec<(Elem, CaseLabel)> = cases
        .iter()
        .flat_map(|(label, vals)| {
            vals.iter().map(move |&(h, k)| (field.add(field.from_int(h), field.mul(field.from_int(k), theta)), *label))
        })
        .collect();
    out.sort_by_key(|(a, _)| a.index());
    Ok(out)
}
