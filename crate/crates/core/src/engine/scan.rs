use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::closure::{closure_with, ClosureOptions};
use super::groups::TargetGroup;
use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::{projective_order, Matrix};
use crate::paperlib::{build_dim3, psu3_case_table, CaseLabel, Family};
use crate::reptools::{invariant_forms, meataxe_irreducible, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanMode {
    #[serde(rename = "all-pairs")]
    AllPairs,
    #[serde(rename = "canonical-scan")]
    CanonicalScan,
}

/// One pair examined by a scan. `closure_order` is the order of the
/// generated subgroup modulo scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanCase {
    pub id: String,
    pub label: CaseLabel,
    pub closure_order: u64,
    /// Whether the pair lies in the target group; reducible unitary-shaped
    /// pairs need not preserve the hermitian form.
    pub in_group: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<CaseLabel>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NonGenerationCertificate {
    pub group: TargetGroup,
    pub mode: ScanMode,
    pub cases: Vec<ScanCase>,
    /// Involution classes fixed for `x` (all-pairs only).
    pub involution_classes: usize,
    pub verdict: bool,
}

impl NonGenerationCertificate {
    pub fn label_mismatches(&self) -> impl Iterator<Item = &ScanCase> {
        self.cases.iter().filter(|c| c.expected.is_some_and(|e| e != c.label))
    }

    pub fn all_proper(&self) -> bool {
        let n = self.group.projective_order();
        self.cases.iter().all(|c| {
            let o = u128::from(c.closure_order);
            if c.in_group {
                o < n && n.is_multiple_of(o)
            } else {
                o != n
            }
        })
    }
}

/// Proves that no (involution, order-3) pair generates the projective
/// group of `target`. Errors with [`Error::Falsified`] if one does.
pub fn nongeneration_scan(target: &TargetGroup, mode: ScanMode, cap: usize) -> Result<NonGenerationCertificate> {
    let (cases, classes) = match mode {
        ScanMode::AllPairs => all_pairs(target, cap)?,
        ScanMode::CanonicalScan => (canonical(target, cap)?, 0),
    };
    let pord = target.projective_order();
    let generating: Vec<&str> =
        cases.iter().filter(|c| c.in_group && u128::from(c.closure_order) == pord).map(|c| c.id.as_str()).collect();
    if !generating.is_empty() {
        return Err(Error::Falsified(format!(
            "{} is generated by the pairs {}",
            target.projective_name(),
            generating.join(", ")
        )));
    }
    let mut cert = NonGenerationCertificate { group: *target, mode, cases, involution_classes: classes, verdict: false };
    cert.verdict = cert.all_proper() && cert.label_mismatches().next().is_none();
    Ok(cert)
}

/// Outcome label of a pair generating a proper subgroup with projective
/// order `proj`.
pub fn classify_pair(x: &Matrix, y: &Matrix, proj: u64) -> Result<CaseLabel> {
    let gens = [x.clone(), y.clone()];
    if !meataxe_irreducible(&gens)?.irreducible {
        return Ok(CaseLabel::Reducible);
    }
    if x.n() == 3 && has_point_orbit(&gens, 3) {
        return Ok(CaseLabel::Monomial);
    }
    let pz = projective_order(&(x * y))?;
    Ok(match (pz, proj) {
        (5, _) => CaseLabel::Alt5Factor,
        (7, 168) => CaseLabel::Psl27,
        _ => CaseLabel::OtherProper,
    })
}

fn normalize(f: &Field, v: &mut [Elem]) {
    if let Some(&lead) = v.iter().find(|e| !e.is_zero()) {
        let inv = f.inv(lead);
        for e in v.iter_mut() {
            *e = f.mul(*e, inv);
        }
    }
}

/// Whether the group generated by `gens` has an orbit of exactly `size`
/// lines.
fn has_point_orbit(gens: &[Matrix], size: usize) -> bool {
    let f = gens[0].field();
    let n = gens[0].n();
    let q = f.q();
    let code = |v: &[Elem]| v.iter().rev().fold(0u64, |acc, e| acc * q + e.index());
    let mut points: Vec<u64> = (1..q.pow(n as u32))
        .filter(|&c| {
            let mut c = c;
            let lead = (0..n).map(|_| {
                let d = c % q;
                c /= q;
                d
            });
            lead.into_iter().find(|&d| d != 0) == Some(1)
        })
        .collect();
    points.sort_unstable();
    let index: HashMap<u64, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let decode = |mut c: u64| {
        (0..n)
            .map(|_| {
                let d = Elem(c % q);
                c /= q;
                d
            })
            .collect::<Vec<_>>()
    };
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (i, &p) in points.iter().enumerate() {
        let v = decode(p);
        for g in gens {
            let mut w = g.apply(&v);
            normalize(f, &mut w);
            let j = index[&code(&w)];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for i in 0..points.len() {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    sizes.values().any(|&s| s == size)
}

fn pair_case(id: String, x: &Matrix, y: &Matrix, cap: usize, in_group: bool, expected: Option<CaseLabel>) -> Result<ScanCase> {
    let opts = ClosureOptions { cap, parallel: false, keep_elements: false };
    let res = closure_with(&[x.clone(), y.clone()], opts)?.certified(cap)?;
    let proj = res.projective_order();
    Ok(ScanCase { id, label: classify_pair(x, y, proj)?, closure_order: proj, in_group, expected })
}

fn canonical(target: &TargetGroup, cap: usize) -> Result<Vec<ScanCase>> {
    if target.family != Family::SU || target.n != 3 {
        return Err(Error::Precondition("canonical scan covers the unitary 3-dimensional pairs".into()));
    }
    let f = target.field()?;
    let expected: HashMap<Elem, CaseLabel> = psu3_case_table(&f).map(|t| t.into_iter().collect()).unwrap_or_default();
    let values: Vec<Elem> = f.nonzero_elements().collect();
    values
        .par_iter()
        .map(|&a| {
            let pair = build_dim3(&f, a, f.sigma(a)?, false)?;
            let unitary = invariant_forms(&pair.gens(), Twist::Sigma, false)?.has_nondegenerate();
            let id = format!("a = {}", f.format_elem(a));
            pair_case(id, &pair.x, &pair.y, cap, unitary, expected.get(&a).copied())
        })
        .collect()
}

fn all_pairs(target: &TargetGroup, cap: usize) -> Result<(Vec<ScanCase>, usize)> {
    if target.expected_order > cap as u128 {
        return Err(Error::ClosureCapExceeded { cap });
    }
    let f = target.field()?;
    let n = target.n;
    let gens = target.generators(&f)?;
    let opts = ClosureOptions { cap, parallel: true, keep_elements: true };
    let group = closure_with(&gens, opts)?.certified(cap)?;
    if u128::from(group.order) != target.expected_order {
        return Err(Error::Falsified(format!("standard generators give order {}", group.order)));
    }
    let store = group.element_store.expect("elements kept");
    let enc = store.encoder().clone();
    let scalars: Vec<Elem> =
        f.nonzero_elements().filter(|&c| store.contains(&Matrix::scalar(&f, n, c))).collect();
    let canon = |m: &Matrix| scalars.iter().map(|&c| enc.encode::<u128>(&m.scale(c))).min().expect("1 is a scalar");
    let elements: Vec<Matrix> = store.matrices();
    let projective: Vec<(u128, Matrix)> = elements
        .into_par_iter()
        .filter_map(|m| {
            let k = enc.encode::<u128>(&m);
            (k == canon(&m) && !m.is_scalar()).then_some((k, m))
        })
        .collect();
    let involutions: Vec<&(u128, Matrix)> = projective.iter().filter(|(_, m)| (m * m).is_scalar()).collect();
    let order3: Vec<&(u128, Matrix)> = projective.iter().filter(|(_, m)| m.pow(3).is_scalar()).collect();

    let inverses: Vec<Matrix> = gens.iter().map(|g| g.inverse()).collect::<Result<_>>()?;
    let mut class_of: HashMap<u128, usize> = HashMap::new();
    let mut reps: Vec<Matrix> = Vec::new();
    for (k, x) in &involutions {
        if class_of.contains_key(k) {
            continue;
        }
        let id = reps.len();
        reps.push(x.clone());
        class_of.insert(*k, id);
        let mut stack = vec![x.clone()];
        while let Some(m) = stack.pop() {
            for (g, gi) in gens.iter().zip(&inverses) {
                let c = &(gi * &m) * g;
                let ck = canon(&c);
                if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(ck) {
                    e.insert(id);
                    stack.push(enc.decode(ck));
                }
            }
        }
    }
    let mut cases = Vec::new();
    for (ci, x) in reps.iter().enumerate() {
        let part: Vec<ScanCase> = order3
            .par_iter()
            .enumerate()
            .map(|(yi, (_, y))| pair_case(format!("x{ci}-y{yi}"), x, y, cap, true, None))
            .collect::<Result<_>>()?;
        cases.extend(part);
    }
    Ok((cases, reps.len()))
}
