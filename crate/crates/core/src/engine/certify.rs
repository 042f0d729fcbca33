use serde_json::json;

use super::closure::{closure, DEFAULT_CAP};
use super::groups::TargetGroup;
use crate::error::Result;
use crate::ff::Field;
use crate::matgrp::{element_order, projective_order};
use crate::paperlib::{
    dim3_irreducibility_conditions, dim5_irreducibility_conditions, scalar_power_bounds_dim5, special_witness,
    theorem_conditions, ConditionReport, Family, GeneratorPair, Params, Target,
};
use crate::report::ClaimReport;
use crate::reptools::{meataxe_irreducible, invariant_forms, Twist};

/// The hypotheses a pair is checked against: the explicit witness report
/// when the pair is one, the theorem's conditions when the pair has the
/// theorem's shape, and the irreducibility conditions otherwise.
pub fn conditions_for_pair(target: Target, pair: &GeneratorPair) -> Result<ConditionReport> {
    let f = pair.field();
    if let Some(hit) = special_witness(target, f)? {
        if hit.params == pair.params {
            return Ok(hit.report);
        }
    }
    let generic = match (target, pair.params) {
        (Target::Sl3, Params::Dim3(p)) if p.a.is_zero() => Some(p.b),
        (Target::Su3, Params::Dim3(p)) if f.sqrt_order().is_ok() && f.sigma(p.a)? == p.b => Some(p.a),
        (Target::Sl5, Params::Dim5(p)) if p.b.is_zero() => Some(p.c),
        (Target::Su5, Params::Dim5(p)) if f.sqrt_order().is_ok() && f.sub(f.sub(f.sigma(p.c)?, p.c), f.one()) == p.b => {
            Some(p.c)
        }
        _ => None,
    };
    if let Some(v) = generic {
        return theorem_conditions(target, v, f);
    }
    match pair.params {
        Params::Dim3(p) => dim3_irreducibility_conditions(f, p.a, p.b),
        Params::Dim5(p) => Ok(dim5_irreducibility_conditions(f, p.b, p.c)),
    }
}

/// Certifies `<x, y> = target`: by exact closure when the target order is
/// at most `cap`, otherwise by the property checks that the generation
/// argument rests on.
pub fn verify_generation(pair: &GeneratorPair, target: &TargetGroup) -> ClaimReport {
    verify_generation_capped(pair, target, DEFAULT_CAP)
}

pub fn verify_generation_capped(pair: &GeneratorPair, target: &TargetGroup, cap: usize) -> ClaimReport {
    ClaimReport::timed(format!("{} = <x, y>", target.name()), |r| {
        r.set_data("params", pair.params.to_json(pair.field()));
        r.set_data("expected_order", target.expected_order.to_string());
        let fits = pair.dimension() == target.n && pair.field().q() == target.field_order();
        if !r.check("pair lives in the target's matrix space", fits, format!("{} over {}", pair.dimension(), pair.field())) {
            return;
        }
        if let Err(e) = certify(pair, target, cap, r) {
            r.check("computation completed", false, e.to_string());
        }
    })
}

fn certify(pair: &GeneratorPair, target: &TargetGroup, cap: usize, r: &mut ClaimReport) -> Result<()> {
    let z = pair.z();
    let z6 = z.pow(6);
    r.check("Lemma 2.3 hypothesis: (xy)^6 not scalar", !z6.is_scalar(), "");
    if target.expected_order <= cap as u128 {
        r.set_data("mode", "full");
        let res = closure(&pair.gens(), cap)?;
        r.set_data("closure_order", res.order);
        r.set_data("scalar_subgroup_order", res.scalar_subgroup_order);
        r.check("closure completed below cap", !res.truncated, format!("cap {cap}"));
        r.check(
            "closure order equals target order",
            u128::from(res.order) == target.expected_order,
            format!("{} vs {}", res.order, target.expected_order),
        );
        return Ok(());
    }
    r.set_data("mode", "partial");
    r.set_data("reason", format!("target order exceeds cap {cap}"));
    let t = target.target();
    let conds = conditions_for_pair(t, pair)?;
    for c in &conds.conditions {
        r.check(c.label.clone(), c.passed, c.detail.clone());
    }
    let gens = pair.gens();
    let verdict = meataxe_irreducible(&gens)?;
    r.check("absolutely irreducible", verdict.absolutely_irreducible, "");
    let f = pair.field();
    let square = f.sqrt_order().is_ok();
    let bilinear = invariant_forms(&gens, Twist::Identity, true)?.has_nondegenerate();
    match target.family {
        Family::SL => {
            r.check("no invariant bilinear form", !bilinear, "");
            if square {
                let herm = invariant_forms(&gens, Twist::Sigma, true)?.has_nondegenerate();
                r.check("no invariant hermitian form", !herm, "");
            }
        }
        Family::SU => {
            let herm = invariant_forms(&gens, Twist::Sigma, false)?;
            r.check("invariant nondegenerate hermitian form", herm.has_nondegenerate(), "");
            if let Some(j) = herm.nondegenerate_witness() {
                r.set_data("hermitian_form", j.to_json());
            }
            r.check("no invariant bilinear form", !bilinear, "");
        }
    }
    projective_bounds(pair, f, r)?;
    r.set_data("order_xy", element_order(&z)?.to_string());
    Ok(())
}

fn projective_bounds(pair: &GeneratorPair, f: &Field, r: &mut ClaimReport) -> Result<()> {
    match pair.params {
        Params::Dim3(_) => {
            let pz = projective_order(&pair.z())?;
            r.check("projective order of xy >= 8", pz >= 8, format!("{pz}"));
            r.set_data("projective_order_xy", json!(pz as u64));
        }
        Params::Dim5(p) => {
            let bounds = scalar_power_bounds_dim5(f, p.b, p.c)?;
            for c in bounds.checks {
                r.check(c.name, c.passed, c.detail);
            }
        }
    }
    Ok(())
}
