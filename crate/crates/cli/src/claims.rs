//! Registry of verifiable statements, each mapped to a runnable check.

use serde::Serialize;
use twothree_core::engine::{
    nongeneration_scan, target_order, verify_generation_capped, ScanMode, TargetGroup,
};
use twothree_core::ff::numtheory::{check_phi_bounds, is_prime};
use twothree_core::paperlib::{
    build, search_params, special_witness, table_b_check, Family, SearchHit, Target, R15, TABLE_B,
};
use twothree_core::polyring::{splitting_order_check, BivarPoly, Var};
use twothree_core::{ClaimReport, Error, Field, FieldPoly, IntPoly, Result};

use crate::suites;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    Exact,
    ExhaustiveScan,
    PartialCertificate,
}

/// Settings that reach every claim.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RunOptions {
    pub cap: usize,
    pub seed: u64,
    pub threads: usize,
    pub slow: bool,
}

type Runner = Box<dyn Fn(&RunOptions, &mut ClaimReport) -> Result<()> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub description: String,
    pub modules: &'static [&'static str],
    pub feasibility: Feasibility,
    pub slow: bool,
    runner: Runner,
}

impl Claim {
    fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        modules: &'static [&'static str],
        feasibility: Feasibility,
        runner: impl Fn(&RunOptions, &mut ClaimReport) -> Result<()> + Send + Sync + 'static,
    ) -> Claim {
        Claim {
            id: id.into(),
            description: description.into(),
            modules,
            feasibility,
            slow: false,
            runner: Box::new(runner),
        }
    }

    fn slow(mut self) -> Claim {
        self.slow = true;
        self
    }

    /// Runs the check. Errors become a failed check; a closure cap hit is
    /// marked with `cap_exceeded` in the report data.
    pub fn run(&self, opts: &RunOptions) -> ClaimReport {
        ClaimReport::timed(self.id.clone(), |r| {
            if let Err(e) = (self.runner)(opts, r) {
                if matches!(e, Error::ClosureCapExceeded { .. }) {
                    r.set_data("cap_exceeded", true);
                }
                r.check("computation completed", false, e.to_string());
            }
        })
    }
}

pub fn is_cap_failure(r: &ClaimReport) -> bool {
    r.data.get("cap_exceeded").and_then(|v| v.as_bool()).unwrap_or(false)
}

const NT: &[&str] = &["ff"];
const POLY: &[&str] = &["polyring"];
const LEMMA: &[&str] = &["ff", "matgrp", "reptools", "paperlib"];
const GEN: &[&str] = &["paperlib", "engine"];

fn ip(s: &str) -> IntPoly {
    s.parse().expect("literal polynomial")
}

fn searched(target: Target, q: u64) -> Result<(Field, SearchHit)> {
    let f = target.parameter_field(q)?;
    let hit = search_params(target, &f, None)?
        .ok_or_else(|| Error::SearchExhausted(format!("{target:?} over {f}")))?;
    Ok((f, hit))
}

fn record_hit(r: &mut ClaimReport, f: &Field, hit: &SearchHit) {
    r.set_data("field", f.to_string());
    r.set_data("params", hit.params.to_json(f));
    r.set_data("conditions", &hit.report);
}

/// Exact generation: closure of the searched pair reaches the group order.
fn full_generation(target: Target, q: u64, opts: &RunOptions, r: &mut ClaimReport) -> Result<()> {
    let t = TargetGroup::for_target(target, q)?;
    if t.expected_order > opts.cap as u128 {
        return Err(Error::ClosureCapExceeded { cap: opts.cap });
    }
    let (f, hit) = searched(target, q)?;
    record_hit(r, &f, &hit);
    absorb(r, verify_generation_capped(&build(&f, hit.params)?, &t, opts.cap));
    Ok(())
}

fn partial_generation(target: Target, q: u64, opts: &RunOptions, r: &mut ClaimReport) -> Result<()> {
    let t = TargetGroup::for_target(target, q)?;
    let (f, hit) = searched(target, q)?;
    record_hit(r, &f, &hit);
    absorb(r, verify_generation_capped(&build(&f, hit.params)?, &t, opts.cap));
    Ok(())
}

fn absorb(r: &mut ClaimReport, cert: ClaimReport) {
    for c in cert.checks {
        r.check(c.name, c.passed, c.detail);
    }
    if let serde_json::Value::Object(data) = cert.data {
        for (k, v) in data {
            r.set_data(&k, v);
        }
    }
}

fn no_witness(target: Target, qs: &[u64], r: &mut ClaimReport) -> Result<()> {
    for &q in qs {
        let f = target.parameter_field(q)?;
        let hit = search_params(target, &f, None)?;
        r.check(format!("{target:?} over GF({}) has no parameter", f.q()), hit.is_none(), "");
    }
    Ok(())
}

fn scan(family: Family, q: u64, mode: ScanMode, opts: &RunOptions, r: &mut ClaimReport) -> Result<()> {
    let t = target_order(family, 3, q)?;
    let cert = nongeneration_scan(&t, mode, opts.cap)?;
    r.check(
        format!("{} not generated by any scanned pair", t.projective_name()),
        cert.all_proper(),
        format!("{} cases, projective order {}", cert.cases.len(), t.projective_order()),
    );
    if mode == ScanMode::CanonicalScan {
        let mismatches: Vec<String> = cert.label_mismatches().map(|c| c.id.clone()).collect();
        r.check("outcome labels match the case table", mismatches.is_empty(), format!("{mismatches:?}"));
    }
    r.set_data("certificate", &cert);
    Ok(())
}

fn res_z5(r: &mut ClaimReport) -> Result<()> {
    let f1 = BivarPoly::from_terms("a", "b", &[(-1, 2, 0), (1, 1, 2), (-1, 0, 1)]);
    let f2 = BivarPoly::from_terms("a", "b", &[(-2, 1, 1), (1, 0, 3), (1, 0, 0)]);
    let res = f1.resultant(&f2, Var::First)?;
    r.set_data("resultant", res.to_string());
    r.check("Res_a(f1, f2) = b^2(b^6 - 4b^3 - 1)", res == ip("-t^2 - 4*t^5 + t^8"), format!("computed {res}"));
    r.check("nonzero common b are roots of t^6 - 4t^3 - 1", res == ip("-1 - 4*t^3 + t^6"), "");
    Ok(())
}

fn res_z7(r: &mut ClaimReport) -> Result<()> {
    let f1 = BivarPoly::from_terms("a", "b", &[(1, 3, 0), (-3, 2, 2), (1, 1, 4), (4, 1, 1), (-1, 0, 3), (-1, 0, 0)]);
    let f2 = BivarPoly::from_terms("a", "b", &[(3, 2, 1), (-4, 1, 3), (-2, 1, 0), (1, 0, 5), (3, 0, 2)]);
    let big_r = IntPoly::from_i64s(&R15);
    let rb = f1.resultant(&f2, Var::Second)?;
    let ra = f1.resultant(&f2, Var::First)?;
    r.check("resultant with respect to b is R", rb == big_r, rb.to_string());
    r.check("resultant with respect to a is R up to sign", ra == big_r || ra == -big_r.clone(), ra.to_string());
    let (unit, factors) = big_r.factor()?;
    let got: Vec<String> = factors.iter().map(|(g, _)| g.to_string()).collect();
    let stated = ["2 + t + t^2", "1 - t - 2*t^2 + t^3", "4 - 2*t - t^2 - t^3 + t^4", "1 + t + 3*t^2 + 5*t^4 + 2*t^5 + t^6"];
    let exact = unit == 1.into() && got == stated && factors.iter().all(|(_, m)| *m == 1);
    r.check("R factors over Z into the four stated factors", exact, format!("{got:?}"));
    let mut bad = Vec::new();
    for p in (2..200).filter(|&p| is_prime(p)) {
        match splitting_order_check(&big_r, p, 21) {
            Ok(rep) if rep.passed => {}
            Ok(_) => bad.push(p),
            Err(Error::VanishesModP(_)) => {}
            Err(e) => return Err(e),
        }
    }
    r.check("R splits over a field with an element of order 21/(p,21), p < 200", bad.is_empty(), format!("{bad:?}"));
    Ok(())
}

fn sextic(r: &mut ClaimReport) -> Result<()> {
    for q in suites::prime_powers(64) {
        let f = Field::of_order(q)?;
        let Some(w) = f.omega().filter(|&w| w != f.one()) else { continue };
        let w2 = f.mul(w, w);
        let quad = |c, d| FieldPoly::new(&f, vec![f.neg(d), f.neg(c), f.one()]);
        let prod = &(&quad(f.one(), f.one()) * &quad(w, w2)) * &quad(w2, w);
        let target = FieldPoly::from_ints(&f, &[-1, 0, 0, -4, 0, 0, 1]);
        r.check(format!("t^6 - 4t^3 - 1 = (t^2-t-1)(t^2-wt-w^2)(t^2-w^2t-w) over GF({q})"), prod == target, "");
    }
    Ok(())
}

fn partial_witness(target: Target, q: u64, opts: &RunOptions, r: &mut ClaimReport) -> Result<()> {
    let f = target.parameter_field(q)?;
    let hit = special_witness(target, &f)?.ok_or_else(|| Error::SearchExhausted("no explicit witness".into()))?;
    record_hit(r, &f, &hit);
    let t = TargetGroup::for_target(target, q)?;
    absorb(r, verify_generation_capped(&build(&f, hit.params)?, &t, opts.cap));
    Ok(())
}

pub fn registry() -> Vec<Claim> {
    use Feasibility::*;
    let mut v = vec![
        Claim::new("lemma-2.1", "phi(n) > n^(2/3) except for the listed n, n <= 10^6", NT, ExhaustiveScan, |_, r| {
            absorb(r, check_phi_bounds(1, 1_000_000, 13));
            Ok(())
        }),
        Claim::new("cor-2.2", "phi(n^2-1) > max(3n+21, 4n-1) for 14 <= n <= 10^5", NT, ExhaustiveScan, |_, r| {
            let rep = check_phi_bounds(1, 1, 100_000);
            for c in rep.checks.into_iter().filter(|c| c.name.starts_with("phi(n^2-1)")) {
                r.check(c.name, c.passed, c.detail);
            }
            Ok(())
        }),
        Claim::new("lemma-2.4", "F_p[a^s] = F_q for primitive a, s = 3, 5, q <= 4096", NT, ExhaustiveScan, |_, r| {
            suites::power_field_generation(r, 4096)
        }),
        Claim::new("lemma-3.1", "dimension 3 irreducibility conditions, q <= 25", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim3_irreducibility(r, 25)
        }),
        Claim::new("lemma-3.3", "scalar powers of xy in dimension 3, q <= 13", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim3_scalar_powers(r, 13)
        }),
        Claim::new("lemma-3.3-res-z5", "resultant of the z^5 coefficients", POLY, Exact, |_, r| res_z5(r)),
        Claim::new("lemma-3.3-res-z7", "degree-15 resultant R and its factorization", POLY, Exact, |_, r| res_z7(r)),
        Claim::new("lemma-3.3-sextic", "t^6 - 4t^3 - 1 over fields containing w", POLY, Exact, |_, r| sextic(r)),
        Claim::new("lemma-3.4", "invariant forms in dimension 3, q <= 49", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim3_forms(r, 49)
        }),
        Claim::new("lemma-4.1", "dimension 5 irreducibility conditions, q <= 7", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim5_irreducibility(r, 7)
        }),
        Claim::new("lemma-4.3", "invariant forms in dimension 5, q <= 25", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim5_forms(r, 25)
        }),
        Claim::new("lemma-4.4", "projective order bounds in dimension 5, q <= 7", LEMMA, ExhaustiveScan, |_, r| {
            suites::dim5_power_bounds(r, 7)
        }),
    ];
    for (q, _) in TABLE_B {
        v.push(Claim::new(format!("table-b-q{q}"), format!("Table B polynomial for q = {q}"), POLY, Exact, move |_, r| {
            absorb(r, table_b_check(q)?);
            Ok(())
        }));
    }
    for q in [2u64, 3, 5, 7, 8, 9] {
        let c = Claim::new(format!("thm-3.5-sl3-{q}"), format!("SL3({q}) = <x, y> by exact closure"), GEN, Exact, move |o, r| {
            full_generation(Target::Sl3, q, o, r)
        });
        v.push(if q == 9 { c.slow() } else { c });
    }
    v.push(Claim::new("thm-3.5-sl3-4", "no parameter for SL3(4)", GEN, Exact, |_, r| no_witness(Target::Sl3, &[4], r)));
    v.push(Claim::new("thm-3.5-psl3-4", "PSL3(4) is not (2,3)-generated", GEN, ExhaustiveScan, |o, r| {
        scan(Family::SL, 4, ScanMode::AllPairs, o, r)
    }));
    for q in [2u64, 3] {
        v.push(Claim::new(
            format!("thm-3.6-psu3-{}", q * q),
            format!("PSU3({}) is not (2,3)-generated", q * q),
            GEN,
            ExhaustiveScan,
            move |o, r| {
                scan(Family::SU, q, ScanMode::AllPairs, o, r)?;
                let mut canon = ClaimReport::new("canonical");
                scan(Family::SU, q, ScanMode::CanonicalScan, o, &mut canon)?;
                for c in canon.checks {
                    r.check(format!("canonical scan: {}", c.name), c.passed, c.detail);
                }
                Ok(())
            },
        ));
    }
    v.push(
        Claim::new("thm-3.6-psu3-25", "PSU3(25) canonical scan with case labels", GEN, ExhaustiveScan, |o, r| {
            scan(Family::SU, 5, ScanMode::CanonicalScan, o, r)
        })
        .slow(),
    );
    for q in [4u64, 7] {
        v.push(Claim::new(
            format!("thm-3.7-su3-{}", q * q),
            format!("SU3({}) = <x, y> by exact closure", q * q),
            GEN,
            Exact,
            move |o, r| full_generation(Target::Su3, q, o, r),
        ));
    }
    v.push(Claim::new("thm-3.7-excluded", "no parameter for SU3(q^2), q^2 in {4, 9, 25}", GEN, Exact, |_, r| {
        no_witness(Target::Su3, &[2, 3, 5], r)
    }));
    v.push(Claim::new("thm-4.6-sl5-2", "SL5(2) = <x, y> by exact closure", GEN, Exact, |o, r| {
        full_generation(Target::Sl5, 2, o, r)
    }));
    v.push(Claim::new("thm-4.6-sl5-3", "SL5(3): c from the search", GEN, PartialCertificate, |o, r| {
        partial_generation(Target::Sl5, 3, o, r)
    }));
    v.push(Claim::new("thm-4.6-sl5-4", "SL5(4) with b = c = w", GEN, PartialCertificate, |o, r| {
        partial_witness(Target::Sl5, 4, o, r)
    }));
    v.push(Claim::new("thm-4.6-sl5-16", "SL5(16) witness, order of xy divisible by 41", GEN, PartialCertificate, |o, r| {
        partial_witness(Target::Sl5, 16, o, r)
    }));
    v.push(Claim::new("thm-4.8-su5-9", "SU5(9): c from the search", GEN, PartialCertificate, |o, r| {
        partial_generation(Target::Su5, 3, o, r)
    }));
    v.push(Claim::new("thm-4.8-su5-16", "SU5(16) witness, order of xy divisible by 17", GEN, PartialCertificate, |o, r| {
        partial_witness(Target::Su5, 4, o, r)
    }));
    v
}

/// Claims selected by `ids`; `all` selects every claim, skipping slow ones
/// unless `slow` is set.
pub fn select<'a>(registry: &'a [Claim], ids: &[String], slow: bool) -> std::result::Result<Vec<&'a Claim>, String> {
    if ids.iter().any(|i| i == "all") {
        return Ok(registry.iter().filter(|c| slow || !c.slow).collect());
    }
    ids.iter()
        .map(|id| registry.iter().find(|c| &c.id == id).ok_or_else(|| format!("unknown claim id {id:?}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn opts() -> RunOptions {
        RunOptions { cap: 1 << 20, seed: 0, threads: 1, slow: false }
    }

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        let ids: HashSet<&str> = reg.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), reg.len());
        assert!(reg.iter().all(|c| !c.modules.is_empty() && !c.description.is_empty()));
    }

    #[test]
    fn selection() {
        let reg = registry();
        let default = select(&reg, &["all".into()], false).unwrap();
        let slow = select(&reg, &["all".into()], true).unwrap();
        assert_eq!(slow.len(), reg.len());
        let skipped: Vec<&str> = reg.iter().filter(|c| c.slow).map(|c| c.id.as_str()).collect();
        assert_eq!(skipped, ["thm-3.5-sl3-9", "thm-3.6-psu3-25"]);
        assert_eq!(default.len() + 2, reg.len());
        let picked = select(&reg, &["table-b-q4".into(), "lemma-2.1".into()], false).unwrap();
        assert_eq!(picked[0].id, "table-b-q4");
        assert!(select(&reg, &["table-b-q5".into()], false).is_err());
    }

    #[test]
    fn cap_failure_is_marked() {
        let reg = registry();
        let claim = reg.iter().find(|c| c.id == "thm-4.6-sl5-2").unwrap();
        let r = claim.run(&RunOptions { cap: 10_000, ..opts() });
        assert!(!r.passed);
        assert!(is_cap_failure(&r));
        let ok = reg.iter().find(|c| c.id == "thm-3.5-sl3-2").unwrap().run(&opts());
        assert!(ok.passed && !is_cap_failure(&ok));
        assert_eq!(ok.data["closure_order"], 168);
    }

    #[test]
    fn excluded_groups_have_no_witness() {
        let reg = registry();
        for id in ["thm-3.5-sl3-4", "thm-3.7-excluded"] {
            let r = reg.iter().find(|c| c.id == id).unwrap().run(&opts());
            assert!(r.passed, "{id}: {:?}", r.checks);
        }
    }
}
