use super::*;
use crate::ff::numtheory::prime_power;
use crate::ff::{Elem, Field};
use crate::matgrp::{element_order, invariant_factors, projective_order, Matrix};
use crate::polyring::FieldPoly;
use crate::reptools::{commutant_dimension, invariant_forms, meataxe_irreducible, Twist};

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

fn abs_irreducible(gens: &[Matrix]) -> bool {
    meataxe_irreducible(gens).unwrap().absolutely_irreducible && commutant_dimension(gens).unwrap() == 1
}

#[test]
fn build_dim3_examples() {
    let f3 = Field::prime(3).unwrap();
    let pair = build_dim3(&f3, f3.one(), f3.from_int(2), false).unwrap();
    assert_eq!(pair.dimension(), 3);
    assert!((&pair.x * &pair.x).is_identity());
    assert!(pair.y.pow(3).is_identity());
    let f2 = Field::prime(2).unwrap();
    assert!(build_dim3(&f2, f2.zero(), f2.zero(), false).is_err());
    assert!(build_dim3(&f2, f2.zero(), f2.zero(), true).is_err());
    assert!(build_dim3(&f3, f3.zero(), f3.zero(), false).is_err());
    assert!(build_dim3(&f3, f3.zero(), f3.zero(), true).is_ok());
    assert!(build_dim3(&f3, Elem(5), f3.one(), false).is_err());
}

#[test]
fn build_dim5_examples() {
    let f4 = Field::of_order(4).unwrap();
    let w = f4.omega().unwrap();
    let pair = build_dim5(&f4, w, w).unwrap();
    assert_eq!(pair.dimension(), 5);
    assert!(build_dim5(&f4, w, f4.zero()).is_err());
    let json = pair.to_json();
    assert_eq!(json["dimension"], 5);
    assert_eq!(Matrix::from_json(&json["x"]).unwrap(), pair.x);
}

#[test]
fn charpoly_closed_forms() {
    for q in [3u64, 4, 5] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.nonzero_elements() {
                let z = build_dim3(&f, a, b, false).unwrap().z();
                assert_eq!(z.charpoly(), FieldPoly::new(&f, vec![f.neg(f.one()), a, f.neg(b), f.one()]));
                let z5 = build_dim5(&f, a, b).unwrap().z();
                let (m1, c) = (f.neg(f.one()), b);
                let t2 = f.sub(f.sub(f.neg(a), c), f.one());
                assert_eq!(z5.charpoly(), FieldPoly::new(&f, vec![m1, m1, t2, c, f.one(), f.one()]));
            }
        }
    }
}

#[test]
fn dim3_condition_examples() {
    let f5 = Field::prime(5).unwrap();
    let r = dim3_irreducibility_conditions(&f5, f5.from_int(2), f5.from_int(2)).unwrap();
    assert_eq!(r.get("Lemma 3.1 (i), j=0"), Some(false));
    assert!(!r.overall);
    let f7 = Field::prime(7).unwrap();
    let r = dim3_irreducibility_conditions(&f7, f7.zero(), f7.from_int(-2)).unwrap();
    assert_eq!(r.get("Lemma 3.1 (ii), j=0"), Some(false));
    assert!(dim3_irreducibility_conditions(&f7, f7.zero(), f7.one()).unwrap().overall);
}

#[test]
fn dim5_condition_examples() {
    let f7 = Field::prime(7).unwrap();
    let g = f7.one();
    let b = f7.sub(f7.mul(f7.from_int(4), g), f7.one());
    let c = f7.sub(f7.neg(f7.mul(g, g)), f7.mul(f7.from_int(2), g));
    let r = dim5_irreducibility_conditions(&f7, b, c);
    assert_eq!(r.get("Lemma 4.1 (ii)"), Some(false));
    for c in f7.nonzero_elements() {
        let three = f7.from_int(3);
        let i = f7.add(f7.sub(f7.mul(three, f7.mul(c, c)), f7.mul(three, c)), f7.one());
        assert_eq!(dim5_condition_i(&f7, f7.zero(), c), i);
        assert_eq!(dim5_condition_ii(&f7, f7.zero(), c), f7.add(f7.mul(f7.from_int(16), c), f7.from_int(9)));
    }
    let f2 = Field::prime(2).unwrap();
    assert_eq!(dim5_condition_i(&f2, f2.zero(), f2.one()), f2.one());
    assert_eq!(dim5_condition_ii(&f2, f2.zero(), f2.one()), f2.one());
    assert!(dim5_irreducibility_conditions(&f2, f2.zero(), f2.one()).overall);
}

#[test]
fn dim3_conditions_match_module_verdict() {
    for q in prime_powers(11) {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let Ok(pair) = build_dim3(&f, a, b, false) else { continue };
                let cond = dim3_irreducibility_conditions(&f, a, b).unwrap().overall;
                assert_eq!(cond, abs_irreducible(&pair.gens()), "q={q} a={a:?} b={b:?}");
            }
        }
    }
}

#[test]
fn dim5_conditions_match_module_verdict() {
    for q in prime_powers(5) {
        let f = Field::of_order(q).unwrap();
        for b in f.elements() {
            for c in f.nonzero_elements() {
                let pair = build_dim5(&f, b, c).unwrap();
                let cond = dim5_irreducibility_conditions(&f, b, c).overall;
                assert_eq!(cond, abs_irreducible(&pair.gens()), "q={q} b={b:?} c={c:?}");
            }
        }
    }
}

#[test]
fn scalar_power_examples() {
    let f4 = Field::of_order(4).unwrap();
    let w = f4.omega().unwrap();
    // every characteristic-2 pattern for z^5 fails the irreducibility hypothesis
    assert!(build_dim3(&f4, w, w, false).unwrap().z().pow(5).is_scalar());
    assert!(!dim3_irreducibility_conditions(&f4, w, w).unwrap().overall);
    assert!(scalar_power_classify_dim3(&f4, w, w).is_err());
    let c = scalar_power_classify_dim3(&f4, w, f4.zero()).unwrap();
    assert!(c.z7_scalar && !c.z5_scalar);
    let f7 = Field::prime(7).unwrap();
    let c = scalar_power_classify_dim3(&f7, f7.zero(), f7.one()).unwrap();
    assert!(c.scalar_exponents().is_empty());
    let z = build_dim3(&f7, f7.zero(), f7.one(), false).unwrap().z();
    assert!((1..=7).all(|k| !z.pow(k).is_scalar()));
    assert!(scalar_power_classify_dim3(&f7, f7.one(), f7.one()).is_err());
    let f5 = Field::prime(5).unwrap();
    assert!(scalar_power_classify_dim3(&f5, f5.from_int(2), f5.from_int(2)).is_err());
}

#[test]
fn dim3_power_classification_is_exact() {
    for q in prime_powers(9) {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let Ok(class) = scalar_power_classify_dim3(&f, a, b) else { continue };
                let z = build_dim3(&f, a, b, false).unwrap().z();
                let actual: Vec<u32> = (1..=7).filter(|&k| z.pow(u128::from(k)).is_scalar()).collect();
                assert_eq!(actual, class.scalar_exponents(), "q={q} a={a:?} b={b:?}");
                if actual.contains(&7) && f.p() != 2 {
                    assert!(class.r_roots);
                }
            }
        }
    }
}

#[test]
fn z7_coefficients_match_matrix_power() {
    for q in [5u64, 7, 8] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.nonzero_elements() {
                let z7 = build_dim3(&f, a, b, false).unwrap().z().pow(7);
                let (f1, f2) = z7_e3_coefficients(&f, a, b);
                assert_eq!((z7.get(0, 2), z7.get(1, 2)), (f1, f2));
            }
        }
    }
}

#[test]
fn dim5_power_bounds() {
    let f2 = Field::prime(2).unwrap();
    let r = scalar_power_bounds_dim5(&f2, f2.zero(), f2.one()).unwrap();
    assert!(r.passed);
    let f4 = Field::of_order(4).unwrap();
    let w = f4.omega().unwrap();
    assert!(scalar_power_bounds_dim5(&f4, w, w).unwrap().passed);
    let f7 = Field::prime(7).unwrap();
    let (b, c) = (f7.from_int(3), f7.from_int(4));
    assert!(!dim5_irreducibility_conditions(&f7, b, c).overall);
    assert!(scalar_power_bounds_dim5(&f7, b, c).is_err());
    for q in [3u64, 4, 5] {
        let f = Field::of_order(q).unwrap();
        for b in f.elements() {
            for c in f.nonzero_elements() {
                if let Ok(r) = scalar_power_bounds_dim5(&f, b, c) {
                    assert!(r.passed, "q={q} b={b:?} c={c:?}");
                }
            }
        }
    }
}

#[test]
fn theorem_condition_examples() {
    let f49 = Field::of_order(49).unwrap();
    let a = FieldPoly::from_ints(&f49, &[3, 6, 1]).roots()[0];
    let r = theorem_conditions(Target::Su3, a, &f49).unwrap();
    assert!(r.overall, "{r:?}");
    for l in ["i", "ii", "iii", "iv", "v"] {
        assert_eq!(r.get(&format!("Thm 3.7 ({l})")), Some(true));
    }
    let f5 = Field::prime(5).unwrap();
    let r = theorem_conditions(Target::Sl3, f5.from_int(3), &f5).unwrap();
    assert_eq!(r.get("Thm 3.5 (i)"), Some(false));
    let f2 = Field::prime(2).unwrap();
    let r = theorem_conditions(Target::Sl5, f2.one(), &f2).unwrap();
    assert!(r.overall);
    assert!(theorem_conditions(Target::Su3, f5.one(), &f5).is_err());
}

#[test]
fn search_examples() {
    let f121 = Field::of_order(121).unwrap();
    let hit = search_params(Target::Su3, &f121, None).unwrap().unwrap();
    assert!(hit.report.overall);
    let f16 = Field::of_order(16).unwrap();
    let hit = search_params(Target::Sl5, &f16, Some(15)).unwrap().unwrap();
    let c = hit.parameter.unwrap();
    assert_eq!(f16.element_order(c).unwrap(), 15);
    assert!(FieldPoly::from_ints(&f16, &[1, 0, 0, 1, 1]).eval(c).is_zero());
    assert!(hit.report.overall, "{:?}", hit.report);
    for q in [2u64, 3, 5] {
        let f = Target::Su3.parameter_field(q).unwrap();
        assert!(search_params(Target::Su3, &f, None).unwrap().is_none(), "q={q}");
    }
    let f4 = Field::of_order(4).unwrap();
    assert!(search_params(Target::Sl3, &f4, None).unwrap().is_none());
    let f3 = Field::prime(3).unwrap();
    let hit = search_params(Target::Sl5, &f3, None).unwrap().unwrap();
    assert!(hit.report.overall);
    let hit = search_params(Target::Sl3, &f3, None).unwrap().unwrap();
    assert_eq!(hit.params, Params::Dim3(Dim3Params { a: f3.one(), b: f3.from_int(2) }));
}

#[test]
fn search_results_satisfy_their_theorems() {
    for target in Target::ALL {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = target.parameter_field(q).unwrap();
            let Some(hit) = search_params(target, &f, None).unwrap() else {
                let excluded = matches!((target, q), (Target::Sl3, 4) | (Target::Su3, 2 | 3 | 5) | (Target::Su5, 2));
                assert!(excluded, "{target} q={q} found nothing");
                continue;
            };
            assert!(hit.report.overall, "{target} q={q}: {:?}", hit.report);
            let pair = build(&f, hit.params).unwrap();
            assert!(abs_irreducible(&pair.gens()), "{target} q={q}");
            if target.family() == Family::SU {
                assert!(invariant_forms(&pair.gens(), Twist::Sigma, false).unwrap().has_nondegenerate());
            }
            assert!(!pair.z().pow(6).is_scalar());
        }
    }
}

#[test]
fn monomial_basis_examples() {
    let f25 = Field::of_order(25).unwrap();
    let w = f25.omega().unwrap();
    let basis = dim3_monomial_basis(&f25, w, f25.sigma(w).unwrap()).unwrap();
    assert_eq!(basis.unwrap().len(), 3);
    let f7 = Field::prime(7).unwrap();
    assert!(dim3_monomial_basis(&f7, f7.zero(), f7.one()).unwrap().is_none());
    let f9 = Field::new(3, 2, Some(&[2, 2, 1])).unwrap();
    let a = f9.add(f9.generator(), f9.one());
    assert_eq!(f9.pow(a, 4), f9.one());
    assert!(dim3_monomial_basis(&f9, a, f9.sigma(a).unwrap()).unwrap().is_some());
    let f5 = Field::prime(5).unwrap();
    assert!(dim3_monomial_basis(&f5, f5.from_int(2), f5.from_int(2)).is_err());
}

#[test]
fn witness_table_entries_hold() {
    for (q, _) in TABLE_B.iter().chain(SU5_SMALL_WITNESSES.iter()) {
        let r = table_b_check(*q).unwrap();
        assert!(r.passed, "q={q}: {:?}", r.failed_checks().collect::<Vec<_>>());
    }
    assert!(table_b_check(17).is_err());
}

#[test]
fn psu3_case_tables_match_computation() {
    for q in [2u64, 3, 5] {
        let f = Field::of_order(q * q).unwrap();
        let table = psu3_case_table(&f).unwrap();
        let outside: Vec<Elem> = f.nonzero_elements().filter(|&a| f.sigma(a).unwrap() != a).collect();
        assert_eq!(table.len(), outside.len());
        for (a, label) in table {
            let b = f.sigma(a).unwrap();
            let pair = build_dim3(&f, a, b, false).unwrap();
            let z = pair.z();
            match label {
                CaseLabel::Reducible => assert!(!meataxe_irreducible(&pair.gens()).unwrap().irreducible),
                CaseLabel::Monomial => assert_eq!(f.mul(a, b), f.one()),
                CaseLabel::Alt5Factor => assert!(z.pow(5).is_scalar()),
                CaseLabel::Psl27 => {
                    assert!(z.pow(7).is_scalar());
                    assert!(pair.commutator().pow(4).is_scalar());
                }
                CaseLabel::OtherProper => unreachable!(),
            }
        }
    }
}

#[test]
fn psl27_values_over_f9() {
    let f9 = Field::new(3, 2, Some(&[2, 2, 1])).unwrap();
    let alpha = f9.generator();
    for a in [f9.neg(alpha), f9.neg(f9.pow(alpha, 3))] {
        let pair = build_dim3(&f9, a, f9.sigma(a).unwrap(), false).unwrap();
        assert_eq!(element_order(&pair.z()).unwrap(), 7);
        assert_eq!(element_order(&pair.commutator()).unwrap(), 4);
        assert_eq!(projective_order(&pair.z()).unwrap(), 7);
    }
}

#[test]
fn unitary_form_iff_b_is_a_to_the_q() {
    for q in [2u64, 3] {
        let f = Field::of_order(q * q).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let Ok(pair) = build_dim3(&f, a, b, false) else { continue };
                let gens = pair.gens();
                if !abs_irreducible(&gens) {
                    continue;
                }
                let has = invariant_forms(&gens, Twist::Sigma, false).unwrap().has_nondegenerate();
                assert_eq!(has, b == f.sigma(a).unwrap(), "q={q} a={a:?} b={b:?}");
                assert!(invariant_factors(&pair.z()).is_cyclic());
            }
        }
    }
}

#[test]
fn target_parsing() {
    for t in Target::ALL {
        assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
    }
    assert!("sl4".parse::<Target>().is_err());
    assert_eq!(Target::Su5.parameter_field(3).unwrap().q(), 9);
}
