use proptest::prelude::*;

use super::*;
use crate::ff::{Elem, Field};
use crate::matgrp::linalg::EchelonSpace;
use crate::matgrp::{invariant_factors, Matrix};
use crate::paperlib::{build_dim3, build_dim5};

fn same_span(field: &Field, u: &[Vec<Elem>], v: &[Vec<Elem>]) -> bool {
    let n = u.first().or(v.first()).map_or(0, |r| r.len());
    let mut a = EchelonSpace::new(field, n);
    let mut b = EchelonSpace::new(field, n);
    u.iter().for_each(|r| {
        a.insert(r);
    });
    v.iter().for_each(|r| {
        b.insert(r);
    });
    a.dim() == b.dim() && v.iter().all(|r| a.contains(r))
}

fn pair3(f: &Field, a: Elem, b: Elem) -> Vec<Matrix> {
    build_dim3(f, a, b, true).unwrap().gens().to_vec()
}

#[test]
fn commutant_examples() {
    let f = Field::prime(7).unwrap();
    assert_eq!(commutant_dimension(&[Matrix::identity(&f, 3)]).unwrap(), 9);
    assert_eq!(
        commutant_dimension(&pair3(&f, f.zero(), f.one())).unwrap(),
        1
    );
    assert!(commutant_dimension(&[]).is_err());
    let f5 = Field::prime(5).unwrap();
    let gens = pair3(&f5, f5.from_int(2), f5.from_int(2));
    let v = meataxe_irreducible(&gens).unwrap();
    assert!(commutant_dimension(&gens).unwrap() >= 2 || !v.irreducible);
    assert!(!v.irreducible);
}

#[test]
fn commutant_basis_commutes() {
    let f = Field::of_order(9).unwrap();
    let gens = pair3(&f, f.generator(), f.zero());
    for a in commutant_basis(&gens).unwrap() {
        for g in &gens {
            assert_eq!(&a * g, g * &a);
        }
    }
}

#[test]
fn reducible_dim3_witness_is_plane_orthogonal_to_ones() {
    let f = Field::prime(7).unwrap();
    let a = f.from_int(3);
    let b = f.sub(f.neg(a), f.from_int(2));
    let gens = pair3(&f, a, b);
    let v = meataxe_irreducible(&gens).unwrap();
    assert!(!v.irreducible && !v.absolutely_irreducible);
    let w = v.witness.unwrap();
    assert!(is_invariant(&gens, &w));
    let ones = vec![f.one(); 3];
    let plane = crate::matgrp::linalg::nullspace(&f, std::slice::from_ref(&ones), 3);
    assert!(same_span(&f, &w, &plane));
}

#[test]
fn reducible_dim5_witness() {
    for p in [7u64, 11] {
        let f = Field::prime(p).unwrap();
        let g = f.one();
        let b = f.sub(f.mul(f.from_int(4), g), f.one());
        let c = f.sub(f.neg(f.mul(g, g)), f.mul(f.from_int(2), g));
        let pair = build_dim5(&f, b, c).unwrap();
        let gens = pair.gens();
        let w = vec![g, f.neg(g), f.one(), f.neg(f.one()), f.zero()];
        let span = vec![w.clone(), pair.y.apply(&w)];
        assert!(is_invariant(&gens, &span));
        let v = meataxe_irreducible(&gens).unwrap();
        assert!(!v.irreducible);
        let wit = v.witness.unwrap();
        assert!(!wit.is_empty() && wit.len() < 5);
        assert!(is_invariant(&gens, &wit));
    }
}

#[test]
fn sl3_3_pair_is_absolutely_irreducible() {
    let f = Field::prime(3).unwrap();
    let v = meataxe_irreducible(&pair3(&f, f.one(), f.from_int(2))).unwrap();
    assert!(v.irreducible && v.absolutely_irreducible && v.witness.is_none());
}

#[test]
fn irreducible_but_not_absolutely() {
    // a companion matrix of an irreducible cubic acts irreducibly; its
    // commutant is the cubic extension field
    let f = Field::prime(2).unwrap();
    let c = Matrix::companion(&crate::polyring::FieldPoly::from_ints(&f, &[1, 1, 0, 1]));
    let v = meataxe_irreducible(std::slice::from_ref(&c)).unwrap();
    assert!(v.irreducible);
    assert!(!v.absolutely_irreducible);
    assert_eq!(commutant_dimension(&[c]).unwrap(), 3);
}

#[test]
fn meataxe_is_deterministic() {
    let f = Field::of_order(25).unwrap();
    let gens = pair3(&f, f.generator(), f.from_int(3));
    assert_eq!(
        meataxe_irreducible(&gens).unwrap(),
        meataxe_irreducible(&gens).unwrap()
    );
}

#[test]
fn brute_examples() {
    let f = Field::prime(5).unwrap();
    assert!(brute_submodules_dim3(&pair3(&f, f.zero(), f.one()))
        .unwrap()
        .is_empty());
    let id = Matrix::identity(&f, 3);
    let all = brute_submodules_dim3(&[id.clone(), id]).unwrap();
    assert_eq!(all.len(), 2 * 31);
    assert_eq!(all.iter().filter(|s| s.len() == 1).count(), 31);
    assert!(brute_submodules_dim3(&[Matrix::identity(&f, 2)]).is_err());
    assert!(brute_submodules_dim3(&[Matrix::identity(&Field::prime(127).unwrap(), 3)]).is_err());
}

#[test]
fn brute_contains_meataxe_witness_in_characteristic_two() {
    let f = Field::of_order(4).unwrap();
    let w = f.omega().unwrap();
    let b = f.sub(f.neg(f.mul(w, w)), f.mul(f.from_int(2), f.mul(w, w)));
    assert_eq!(b, f.mul(w, w));
    let gens = pair3(&f, w, b);
    let subs = brute_submodules_dim3(&gens).unwrap();
    assert!(!subs.is_empty());
    let v = meataxe_irreducible(&gens).unwrap();
    let wit = v.witness.unwrap();
    assert!(subs.iter().any(|s| same_span(&f, s, &wit)));
    assert!(subs.iter().all(|s| is_invariant(&gens, s)));
}

#[test]
fn meataxe_agrees_with_brute_force_exhaustively() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                if a.is_zero() && b.is_zero() && q % 2 == 0 {
                    continue;
                }
                let gens = pair3(&f, a, b);
                let v = meataxe_irreducible(&gens).unwrap();
                let subs = brute_submodules_dim3(&gens).unwrap();
                assert_eq!(v.irreducible, subs.is_empty(), "q={q} a={a:?} b={b:?}");
                if let Some(w) = &v.witness {
                    assert!(is_invariant(&gens, w));
                }
            }
        }
    }
}

fn form_relations_hold(gens: &[Matrix], sol: &FormSolution) -> bool {
    sol.spaces.iter().all(|s| {
        s.basis
            .iter()
            .chain(s.nondegenerate_witness.iter())
            .all(|j| {
                gens.iter().zip(&s.character).all(|(g, &l)| {
                    let h = match sol.twist {
                        Twist::Identity => g.clone(),
                        Twist::Sigma => g.sigma().unwrap(),
                    };
                    &(&g.transpose() * j) * &h == j.scale(l)
                })
            })
    })
}

#[test]
fn unitary_pair_preserves_hermitian_form() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = Field::of_order(q * q).unwrap();
        for a in f.nonzero_elements() {
            let gens = pair3(&f, a, f.sigma(a).unwrap());
            if !meataxe_irreducible(&gens).unwrap().absolutely_irreducible {
                continue;
            }
            let sol = invariant_forms(&gens, Twist::Sigma, false).unwrap();
            assert!(form_relations_hold(&gens, &sol));
            let j = sol.nondegenerate_witness().expect("hermitian form");
            let h = hermitian_rescaling(j)
                .unwrap()
                .expect("rescalable to hermitian");
            assert_eq!(h.transpose(), h.sigma().unwrap());
        }
    }
}

#[test]
fn orthogonal_pair_preserves_symmetric_form() {
    let f = Field::prime(7).unwrap();
    let a = f.from_int(3);
    let gens = pair3(&f, a, a);
    let sol = invariant_forms(&gens, Twist::Identity, false).unwrap();
    let j = sol
        .nondegenerate_witness()
        .expect("orthogonal form")
        .clone();
    assert_eq!(j.transpose(), j);
    assert!(form_relations_hold(&gens, &sol));
}

#[test]
fn a_zero_admits_no_form_even_up_to_scalars() {
    for q in [2u64, 3, 4, 5] {
        let f = Field::of_order(q * q).unwrap();
        for b in f.nonzero_elements() {
            let gens = pair3(&f, f.zero(), b);
            if !meataxe_irreducible(&gens).unwrap().absolutely_irreducible {
                continue;
            }
            for twist in [Twist::Identity, Twist::Sigma] {
                let sol = invariant_forms(&gens, twist, true).unwrap();
                assert!(form_relations_hold(&gens, &sol));
                assert!(!sol.has_nondegenerate(), "q^2={} b={b:?} {twist:?}", q * q);
                assert!(sol.spaces.iter().all(|s| s.basis.len() <= 1));
            }
        }
    }
}

#[test]
fn dim5_unitary_form() {
    for q in [3u64, 4, 5] {
        let f = Field::of_order(q * q).unwrap();
        for c in f.nonzero_elements() {
            let b = f.sub(f.sub(f.sigma(c).unwrap(), c), f.one());
            let gens = build_dim5(&f, b, c).unwrap().gens().to_vec();
            if !meataxe_irreducible(&gens).unwrap().absolutely_irreducible {
                continue;
            }
            let sol = invariant_forms(&gens, Twist::Sigma, true).unwrap();
            assert!(form_relations_hold(&gens, &sol));
            assert!(sol.has_nondegenerate());
            for s in &sol.spaces {
                assert!(s.basis.len() <= 1);
                if s.nondegenerate_witness.is_some() {
                    assert!(s.character.iter().all(|&l| l == f.one()));
                }
            }
        }
    }
}

#[test]
fn identity_generators_are_legal() {
    let f = Field::prime(3).unwrap();
    let id = Matrix::identity(&f, 3);
    let sol = invariant_forms(std::slice::from_ref(&id), Twist::Identity, true).unwrap();
    assert_eq!(sol.spaces.len(), 1);
    assert_eq!(sol.spaces[0].basis.len(), 9);
    assert!(sol.has_nondegenerate());
    let v = meataxe_irreducible(std::slice::from_ref(&id)).unwrap();
    assert!(!v.irreducible);
    assert_eq!(v.witness.unwrap().len(), 1);
    assert!(invariant_forms(&[id], Twist::Sigma, false).is_err());
}

#[test]
fn single_invariant_factor_for_absolutely_irreducible_pairs() {
    for q in [4u64, 5, 7] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            for b in f.nonzero_elements() {
                let gens = pair3(&f, a, b);
                if meataxe_irreducible(&gens).unwrap().absolutely_irreducible {
                    assert!(invariant_factors(&(&gens[0] * &gens[1])).is_cyclic());
                }
            }
        }
    }
}

#[test]
fn verdict_and_forms_serialize() {
    let f = Field::of_order(4).unwrap();
    let w = f.omega().unwrap();
    let gens = pair3(&f, w, f.mul(w, w));
    let v = meataxe_irreducible(&gens).unwrap();
    let j = v.to_json(&f);
    assert_eq!(j["irreducible"], false);
    assert!(j["witness"].is_array());
    let sol = invariant_forms(&gens, Twist::Sigma, true).unwrap();
    let js = sol.to_json(&f);
    assert_eq!(js["twist"], "sigma");
    assert!(js["spaces"].is_array());
}

fn random_gens(n: usize) -> impl Strategy<Value = Vec<Matrix>> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7]).prop_flat_map(move |q| {
        prop::collection::vec(prop::collection::vec(0..q, n * n), 1..3).prop_map(move |ms| {
            let f = Field::of_order(q).unwrap();
            ms.iter()
                .map(|v| Matrix::from_fn(&f, n, |i, j| f.elem(v[i * n + j]).unwrap()))
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_are_invariant(gens in (2usize..5).prop_flat_map(random_gens)) {
        let v = meataxe_irreducible(&gens).unwrap();
        prop_assert!(!v.absolutely_irreducible || v.irreducible);
        if let Some(w) = &v.witness {
            prop_assert!(!v.irreducible);
            prop_assert!(!w.is_empty() && w.len() < gens[0].n());
            prop_assert!(is_invariant(&gens, w));
        } else {
            prop_assert!(v.irreducible);
        }
        if v.irreducible {
            prop_assert_eq!(v.absolutely_irreducible, commutant_dimension(&gens).unwrap() == 1);
        }
    }

    #[test]
    fn meataxe_matches_brute_on_random_dim3(gens in random_gens(3)) {
        let v = meataxe_irreducible(&gens).unwrap();
        prop_assert_eq!(v.irreducible, brute_submodules_dim3(&gens).unwrap().is_empty());
    }

    #[test]
    fn commutant_contains_identity(gens in (1usize..5).prop_flat_map(random_gens)) {
        let basis = commutant_basis(&gens).unwrap();
        prop_assert!(!basis.is_empty());
        let f = gens[0].field().clone();
        let n = gens[0].n();
        let id: Vec<Elem> = Matrix::identity(&f, n).entries().to_vec();
        let rows: Vec<Vec<Elem>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        prop_assert!(crate::matgrp::linalg::in_span(&f, &rows, &id));
    }

    #[test]
    fn spin_is_invariant(gens in (2usize..5).prop_flat_map(random_gens), seed in any::<u64>()) {
        let f = gens[0].field().clone();
        let n = gens[0].n();
        let v: Vec<Elem> = (0..n).map(|i| Elem((seed >> (4 * i)) % f.q())).collect();
        prop_assume!(v.iter().any(|e| !e.is_zero()));
        let s = spin(&v, &gens);
        prop_assert!(is_invariant(&gens, &s));
        prop_assert!(crate::matgrp::linalg::in_span(&f, &s, &v));
    }
}
