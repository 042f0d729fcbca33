//! Exhaustive checks behind the scan-type claims.

use rayon::prelude::*;
use twothree_core::ff::numtheory::prime_power;
use twothree_core::ff::subfield_generated;
use twothree_core::matgrp::{invariant_factors, Matrix};
use twothree_core::paperlib::{
    build_dim3, build_dim5, dim3_irreducibility_conditions, dim5_irreducibility_conditions,
    scalar_power_bounds_dim5, scalar_power_classify_dim3,
};
use twothree_core::reptools::{invariant_forms, meataxe_irreducible, Twist};
use twothree_core::{ClaimReport, Elem, Field, Result};

pub fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

fn abs_irreducible(gens: &[Matrix]) -> Result<bool> {
    Ok(meataxe_irreducible(gens)?.absolutely_irreducible)
}

fn pairs(f: &Field) -> Vec<(Elem, Elem)> {
    f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).collect()
}

fn summarize(r: &mut ClaimReport, name: &str, tested: usize, bad: &[String]) {
    let shown: Vec<&String> = bad.iter().take(8).collect();
    r.check(name, bad.is_empty(), format!("{tested} cases, {} failures {shown:?}", bad.len()));
}

/// Dimension 3 irreducibility conditions against the MeatAxe verdict, every `(a, b)`.
pub fn dim3_irreducibility(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let per_q: Vec<(usize, Vec<String>)> = prime_powers(max_q)
        .par_iter()
        .map(|&q| -> Result<(usize, Vec<String>)> {
            let f = Field::of_order(q)?;
            let mut bad = Vec::new();
            let mut n = 0;
            for (a, b) in pairs(&f) {
                let Ok(pair) = build_dim3(&f, a, b, false) else { continue };
                n += 1;
                if dim3_irreducibility_conditions(&f, a, b)?.overall != abs_irreducible(&pair.gens())? {
                    bad.push(format!("q={q} a={} b={}", f.format_elem(a), f.format_elem(b)));
                }
            }
            Ok((n, bad))
        })
        .collect::<Result<_>>()?;
    let tested = per_q.iter().map(|(n, _)| n).sum();
    let bad: Vec<String> = per_q.into_iter().flat_map(|(_, b)| b).collect();
    summarize(r, &format!("Lemma 3.1 conditions agree with MeatAxe, q <= {max_q}"), tested, &bad);
    Ok(())
}

pub fn dim5_irreducibility(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let (mut tested, mut bad) = (0, Vec::new());
    for q in prime_powers(max_q) {
        let f = Field::of_order(q)?;
        for b in f.elements() {
            for c in f.nonzero_elements() {
                tested += 1;
                let pair = build_dim5(&f, b, c)?;
                if dim5_irreducibility_conditions(&f, b, c).overall != abs_irreducible(&pair.gens())? {
                    bad.push(format!("q={q} b={} c={}", f.format_elem(b), f.format_elem(c)));
                }
            }
        }
    }
    summarize(r, &format!("Lemma 4.1 conditions agree with MeatAxe, q <= {max_q}"), tested, &bad);
    Ok(())
}

pub fn dim3_scalar_powers(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let (mut tested, mut wrong, mut forbidden) = (0, Vec::new(), Vec::new());
    for q in prime_powers(max_q) {
        let f = Field::of_order(q)?;
        for (a, b) in pairs(&f) {
            let Ok(class) = scalar_power_classify_dim3(&f, a, b) else { continue };
            tested += 1;
            let z = build_dim3(&f, a, b, false)?.z();
            let actual: Vec<u32> = (1..=7).filter(|&k| z.pow(u128::from(k)).is_scalar()).collect();
            let id = format!("q={q} a={} b={} scalar at {actual:?}", f.format_elem(a), f.format_elem(b));
            if actual.iter().any(|k| [1, 2, 3, 4, 6].contains(k)) {
                forbidden.push(id.clone());
            }
            if actual != class.scalar_exponents() {
                wrong.push(id);
            }
        }
    }
    summarize(r, "Lemma 3.3 (i): z^j not scalar for j <= 4 and j = 6", tested, &forbidden);
    summarize(r, &format!("Lemma 3.3 (ii), (iii): scalar powers as classified, q <= {max_q}"), tested, &wrong);
    Ok(())
}

pub fn dim5_power_bounds(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let (mut tested, mut bad) = (0, Vec::new());
    for q in prime_powers(max_q) {
        let f = Field::of_order(q)?;
        for b in f.elements() {
            for c in f.nonzero_elements() {
                let Ok(rep) = scalar_power_bounds_dim5(&f, b, c) else { continue };
                tested += 1;
                if !rep.passed {
                    bad.push(format!("q={q} b={} c={}", f.format_elem(b), f.format_elem(c)));
                }
            }
        }
    }
    summarize(r, &format!("Lemma 4.4 bounds on irreducible pairs, q <= {max_q}"), tested, &bad);
    Ok(())
}

fn has_form(gens: &[Matrix], twist: Twist) -> Result<bool> {
    Ok(invariant_forms(gens, twist, false)?.has_nondegenerate())
}

fn single_factor(z: &Matrix) -> bool {
    invariant_factors(z).factors().iter().filter(|d| !d.is_constant()).count() == 1
}

#[derive(Default)]
struct Tally {
    tested: usize,
    herm: Vec<String>,
    orth: Vec<String>,
    multi: Vec<String>,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.tested += o.tested;
        self.herm.extend(o.herm);
        self.orth.extend(o.orth);
        self.multi.extend(o.multi);
        self
    }
}

/// Hermitian form iff the unitary relation, orthogonal form iff the
/// orthogonal relation, on absolutely irreducible pairs over `f`.
fn form_cases(f: &Field, items: Vec<(Vec<Matrix>, Matrix, bool, bool, String)>) -> Result<Tally> {
    let square = f.sqrt_order().is_ok();
    let odd = f.p() != 2;
    let mut t = Tally::default();
    for (gens, z, herm_pred, orth_pred, id) in items {
        if !abs_irreducible(&gens)? {
            continue;
        }
        t.tested += 1;
        if square && has_form(&gens, Twist::Sigma)? != herm_pred {
            t.herm.push(id.clone());
        }
        if odd && has_form(&gens, Twist::Identity)? != orth_pred {
            t.orth.push(id.clone());
        }
        if !single_factor(&z) {
            t.multi.push(id);
        }
    }
    Ok(t)
}

pub fn dim3_forms(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let tallies: Vec<Tally> = prime_powers(max_q)
        .par_iter()
        .map(|&q| {
            let f = Field::of_order(q)?;
            let mut items = Vec::new();
            for (a, b) in pairs(&f) {
                let Ok(pair) = build_dim3(&f, a, b, false) else { continue };
                let herm = f.sqrt_order().is_ok() && f.sigma(a)? == b;
                let id = format!("q={q} a={} b={}", f.format_elem(a), f.format_elem(b));
                items.push((pair.gens().to_vec(), pair.z(), herm, a == b, id));
            }
            form_cases(&f, items)
        })
        .collect::<Result<_>>()?;
    let t = tallies.into_iter().fold(Tally::default(), Tally::merge);
    summarize(r, &format!("Lemma 3.4 (i): hermitian form iff b = a^q, q^2 <= {max_q}"), t.tested, &t.herm);
    summarize(r, &format!("Lemma 3.4 (ii): orthogonal form iff b = a, odd q <= {max_q}"), t.tested, &t.orth);
    summarize(r, "z has a single nonconstant invariant factor", t.tested, &t.multi);

    let mut bad = Vec::new();
    let mut tested = 0;
    for q in prime_powers(max_q) {
        let f = Field::of_order(q)?;
        for b in f.nonzero_elements() {
            let pair = build_dim3(&f, Elem::ZERO, b, false)?;
            let gens = pair.gens();
            if !abs_irreducible(&gens)? {
                continue;
            }
            tested += 1;
            let orth = invariant_forms(&gens, Twist::Identity, true)?.has_nondegenerate();
            let herm = f.sqrt_order().is_ok() && invariant_forms(&gens, Twist::Sigma, true)?.has_nondegenerate();
            if orth || herm {
                bad.push(format!("q={q} b={}", f.format_elem(b)));
            }
        }
    }
    summarize(r, "Lemma 3.4 (iii): a = 0 fixes no form up to scalars", tested, &bad);
    Ok(())
}

pub fn dim5_forms(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let tallies: Vec<Tally> = prime_powers(max_q)
        .par_iter()
        .map(|&q| {
            let f = Field::of_order(q)?;
            let mut items = Vec::new();
            for b in f.elements() {
                for c in f.nonzero_elements() {
                    let pair = build_dim5(&f, b, c)?;
                    let herm = f.sqrt_order().is_ok() && f.sub(f.sub(f.sigma(c)?, c), f.one()) == b;
                    let orth = b == f.neg(f.one());
                    let id = format!("q={q} b={} c={}", f.format_elem(b), f.format_elem(c));
                    items.push((pair.gens().to_vec(), pair.z(), herm, orth, id));
                }
            }
            form_cases(&f, items)
        })
        .collect::<Result<_>>()?;
    let t = tallies.into_iter().fold(Tally::default(), Tally::merge);
    summarize(r, &format!("Lemma 4.3 (i): orthogonal form iff b = -1, odd q <= {max_q}"), t.tested, &t.orth);
    summarize(r, &format!("Lemma 4.3 (ii): hermitian form iff b = c^q - c - 1, q^2 <= {max_q}"), t.tested, &t.herm);
    summarize(r, "z has a single nonconstant invariant factor", t.tested, &t.multi);
    Ok(())
}

/// `F_p[a^s] = F_q` for primitive `a`, except `s = 3, q = 4` and
/// `s = 5, q = 16`.
pub fn power_field_generation(r: &mut ClaimReport, max_q: u64) -> Result<()> {
    let found: Vec<Vec<(u64, u64, u64)>> = prime_powers(max_q)
        .par_iter()
        .map(|&q| {
            let f = Field::of_order(q)?;
            let mut out = Vec::new();
            for a in f.nonzero_elements() {
                if f.element_order(a)? != q - 1 {
                    continue;
                }
                for s in [3u64, 5] {
                    let size = subfield_generated(&f, f.pow(a, s)).size;
                    if size != q && !out.contains(&(q, s, size)) {
                        out.push((q, s, size));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let found: Vec<(u64, u64, u64)> = found.into_iter().flatten().collect();
    r.set_data("exceptions", &found);
    r.check(
        format!("exceptions for q <= {max_q} are exactly (q, s) = (4, 3), (16, 5)"),
        found == [(4, 3, 2), (16, 5, 4)],
        format!("(q, s, |F_p[a^s]|) = {found:?}"),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_list() {
        assert_eq!(prime_powers(16), [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }

    #[test]
    fn suites_pass_on_small_fields() {
        type Suite = fn(&mut ClaimReport, u64) -> Result<()>;
        let suites: [(&str, Suite, u64); 7] = [
            ("dim3_irreducibility", dim3_irreducibility, 9),
            ("dim5_irreducibility", dim5_irreducibility, 4),
            ("dim3_scalar_powers", dim3_scalar_powers, 8),
            ("dim5_power_bounds", dim5_power_bounds, 4),
            ("dim3_forms", dim3_forms, 16),
            ("dim5_forms", dim5_forms, 9),
            ("power_field_generation", power_field_generation, 256),
        ];
        for (name, suite, max_q) in suites {
            let mut r = ClaimReport::new(name);
            suite(&mut r, max_q).unwrap();
            assert!(r.passed && !r.checks.is_empty(), "{name}: {:?}", r.failed_checks().collect::<Vec<_>>());
        }
    }
}
