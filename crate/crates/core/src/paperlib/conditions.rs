use serde::Serialize;

use crate::error::Result;
use crate::ff::{Elem, Embedding, Field};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Labelled parameter conditions; `overall` is their conjunction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub subject: String,
    pub conditions: Vec<Condition>,
    pub overall: bool,
}

impl ConditionReport {
    pub fn new(subject: impl Into<String>) -> ConditionReport {
        ConditionReport { subject: subject.into(), conditions: Vec::new(), overall: true }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.overall &= passed;
        self.conditions.push(Condition { label: label.into(), passed, detail: detail.into() });
    }

    pub fn get(&self, label: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.label == label).map(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.passed)
    }
}

/// A field together with an extension containing `omega`, a root of
/// `t^2 + t + 1`.
pub(crate) struct OmegaField {
    pub emb: Embedding,
    pub omega: Elem,
}

impl OmegaField {
    pub fn new(field: &Field) -> Result<OmegaField> {
        let emb = field.omega_extension()?;
        let omega = emb.big().omega().expect("extension contains omega");
        Ok(OmegaField { emb, omega })
    }

    pub fn big(&self) -> &Field {
        self.emb.big()
    }

    pub fn lift(&self, a: Elem) -> Elem {
        self.emb.map(a)
    }

    /// `omega^j`.
    pub fn w(&self, j: u64) -> Elem {
        self.big().pow(self.omega, j)
    }

    /// `k` as an element of the extension.
    pub fn int(&self, k: i64) -> Elem {
        self.big().from_int(k)
    }
}

/// Absolute irreducibility conditions for the 3-dimensional pair, for
/// `j = 0, 1, 2`, with `omega` taken in the smallest extension containing it.
pub fn dim3_irreducibility_conditions(field: &Field, a: Elem, b: Elem) -> Result<ConditionReport> {
    let om = OmegaField::new(field)?;
    let e = om.big();
    let (a, b) = (om.lift(a), om.lift(b));
    let two = om.int(2);
    let mut report = ConditionReport::new("Lemma 3.1");
    for j in 0..3 {
        let hit = field.p() != 2 && a == e.mul(two, om.w(j)) && b == e.mul(two, om.w(2 * j));
        report.push(format!("Lemma 3.1 (i), j={j}"), !hit, if hit { "(a,b) = (2w^j, 2w^2j)" } else { "" });
    }
    for j in 0..3 {
        let rhs = e.sub(e.neg(e.mul(a, om.w(j))), e.mul(two, om.w(2 * j)));
        let hit = b == rhs;
        report.push(format!("Lemma 3.1 (ii), j={j}"), !hit, if hit { "b = -a w^j - 2 w^2j" } else { "" });
    }
    Ok(report)
}

/// `b^2 + 3bc - b + 3c^2 - 3c + 1`.
pub fn dim5_condition_i(field: &Field, b: Elem, c: Elem) -> Elem {
    let f = field;
    let k = |v: i64| f.from_int(v);
    let terms = [
        f.mul(b, b),
        f.mul(k(3), f.mul(b, c)),
        f.neg(b),
        f.mul(k(3), f.mul(c, c)),
        f.mul(k(-3), c),
        f.one(),
    ];
    terms.into_iter().fold(f.zero(), |acc, t| f.add(acc, t))
}

/// `b^2 + 10b + 16c + 9`.
pub fn dim5_condition_ii(field: &Field, b: Elem, c: Elem) -> Elem {
    let f = field;
    let k = |v: i64| f.from_int(v);
    let terms = [f.mul(b, b), f.mul(k(10), b), f.mul(k(16), c), k(9)];
    terms.into_iter().fold(f.zero(), |acc, t| f.add(acc, t))
}

/// Absolute irreducibility conditions for the 5-dimensional pair.
pub fn dim5_irreducibility_conditions(field: &Field, b: Elem, c: Elem) -> ConditionReport {
    let mut report = ConditionReport::new("Lemma 4.1");
    let v1 = dim5_condition_i(field, b, c);
    let v2 = dim5_condition_ii(field, b, c);
    report.push("Lemma 4.1 (i)", !v1.is_zero(), format!("b^2+3bc-b+3c^2-3c+1 = {}", field.format_elem(v1)));
    report.push("Lemma 4.1 (ii)", !v2.is_zero(), format!("b^2+10b+16c+9 = {}", field.format_elem(v2)));
    report
}
