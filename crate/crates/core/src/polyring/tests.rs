use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::ff::{Elem, Field};

fn r15() -> IntPoly {
    "t^15 - 16*t^12 + 59*t^9 - 67*t^6 - 37*t^3 + 8".parse().unwrap()
}

fn ip(s: &str) -> IntPoly {
    s.parse().unwrap()
}

#[test]
fn parse_and_display_round_trip() {
    let r = r15();
    assert_eq!(r.to_string(), "8 - 37*t^3 - 67*t^6 + 59*t^9 - 16*t^12 + t^15");
    assert_eq!(ip(&r.to_string()), r);
    assert_eq!(ip("-t^2 + 3"), IntPoly::from_i64s(&[3, 0, -1]));
    assert_eq!(ip("2*t + t + 1"), IntPoly::from_i64s(&[1, 3]));
    assert_eq!(ip("0"), IntPoly::zero());
    assert!("t^".parse::<IntPoly>().is_err());

    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(json, "[8,0,0,-37,0,0,-67,0,0,59,0,0,-16,0,0,1]");
    assert_eq!(serde_json::from_str::<IntPoly>(&json).unwrap(), r);
    let huge = IntPoly::constant(BigInt::from(u64::MAX) * 7);
    let s = serde_json::to_string(&huge).unwrap();
    assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), huge);
}

#[test]
fn field_poly_text_round_trip() {
    let f = Field::of_order(9).unwrap();
    let g = f.generator();
    let poly = FieldPoly::new(&f, vec![g, Elem::ZERO, f.one(), f.from_int(2)]);
    let text = poly.to_string();
    assert_eq!(FieldPoly::parse(&f, &text).unwrap(), poly);
    assert_eq!(FieldPoly::from_json(&f, &poly.to_json()).unwrap(), poly);
    let f7 = Field::prime(7).unwrap();
    assert_eq!(FieldPoly::parse(&f7, "t^2 + 6*t + 3").unwrap(), FieldPoly::from_indices(&f7, &[3, 6, 1]));
    assert_eq!(FieldPoly::parse(&f7, "t^2 - t - 1").unwrap(), FieldPoly::from_indices(&f7, &[6, 6, 1]));
}

#[test]
fn first_resultant_identity() {
    // f1 = -a^2 + a b^2 - b, f2 = -2ab + b^3 + 1
    let f1 = BivarPoly::from_terms("a", "b", &[(-1, 2, 0), (1, 1, 2), (-1, 0, 1)]);
    let f2 = BivarPoly::from_terms("a", "b", &[(-2, 1, 1), (1, 0, 3), (1, 0, 0)]);
    let res = f1.resultant(&f2, Var::First).unwrap();
    // f2 is linear in a with root a0 = (b^3+1)/(2b), so Res = (-2b)^2 f1(a0) = b^6 - 4b^3 - 1;
    // there is no extra factor b^2
    assert_eq!(res, ip("t^6 - 4*t^3 - 1"));
}

#[test]
fn second_resultant_identity() {
    let f1 = BivarPoly::from_terms(
        "a",
        "b",
        &[(1, 3, 0), (-3, 2, 2), (1, 1, 4), (4, 1, 1), (-1, 0, 3), (-1, 0, 0)],
    );
    let f2 = BivarPoly::from_terms("a", "b", &[(3, 2, 1), (-4, 1, 3), (-2, 1, 0), (1, 0, 5), (3, 0, 2)]);
    assert_eq!(f1.resultant(&f2, Var::Second).unwrap(), r15());
    assert_eq!(f1.resultant(&f2, Var::First).unwrap(), -r15());
}

#[test]
fn resultant_of_linear_factor_is_evaluation() {
    let g = ip("3*t^4 - t + 7");
    for c in -5i64..=5 {
        let lin = IntPoly::from_i64s(&[-c, 1]);
        let r = resultant(&Integers, lin.coeffs(), g.coeffs()).unwrap();
        assert_eq!(r, g.eval(&BigInt::from(c)));
    }
    let one = IntPoly::one();
    assert_eq!(
        resultant(&Integers, one.coeffs(), IntPoly::from_i64s(&[5]).coeffs()),
        Err(crate::Error::ConstantResultantInputs)
    );
}

#[test]
fn resultant_over_field_agrees_with_reduction() {
    let f1 = BivarPoly::from_terms("a", "b", &[(-1, 2, 0), (1, 1, 2), (-1, 0, 1)]);
    let f2 = BivarPoly::from_terms("a", "b", &[(-2, 1, 1), (1, 0, 3), (1, 0, 0)]);
    let over_z = f1.resultant(&f2, Var::First).unwrap();
    for p in [3u64, 5, 7, 11] {
        let f = Field::prime(p).unwrap();
        assert_eq!(f1.resultant_over(&f2, Var::First, &f).unwrap(), over_z.reduce(&f));
    }
}

#[test]
fn r_factors_over_z() {
    let (unit, factors) = r15().factor().unwrap();
    assert_eq!(unit, BigInt::from(1));
    let got: Vec<(String, u32)> = factors.iter().map(|(g, m)| (g.to_string(), *m)).collect();
    assert_eq!(
        got,
        vec![
            ("2 + t + t^2".to_string(), 1),
            ("1 - t - 2*t^2 + t^3".to_string(), 1),
            ("4 - 2*t - t^2 - t^3 + t^4".to_string(), 1),
            ("1 + t + 3*t^2 + 5*t^4 + 2*t^5 + t^6".to_string(), 1),
        ]
    );
}

#[test]
fn z_factorization_with_multiplicity_and_content() {
    let f = &(&ip("t - 1") * &ip("t - 1")) * &ip("6*t^2 + 6");
    let (unit, factors) = f.factor().unwrap();
    assert_eq!(unit, BigInt::from(6));
    assert_eq!(factors, vec![(ip("t - 1"), 2), (ip("t^2 + 1"), 1)]);
    let (unit, factors) = ip("-2*t^4 + 2").factor().unwrap();
    assert_eq!(unit, BigInt::from(-2));
    assert_eq!(factors, vec![(ip("t - 1"), 1), (ip("t + 1"), 1), (ip("t^2 + 1"), 1)]);
    // Swinnerton-Dyer style: irreducible over Z, splits mod every prime
    let (_, factors) = ip("t^4 - 10*t^2 + 1").factor().unwrap();
    assert_eq!(factors.len(), 1);
}

#[test]
fn sextic_splits_over_omega_field() {
    // over GF(7), omega = 2
    let f = Field::prime(7).unwrap();
    let w = f.omega().unwrap();
    let w2 = f.mul(w, w);
    let sextic = ip("t^6 - 4*t^3 - 1").reduce(&f);
    let quad = |c1: Elem, c0: Elem| FieldPoly::new(&f, vec![f.neg(c0), f.neg(c1), f.one()]);
    let expected = &(&quad(f.one(), f.one()) * &quad(w, w2)) * &quad(w2, w);
    assert_eq!(expected, sextic);
    let factors = sextic.factor().unwrap();
    let product = factors.iter().fold(FieldPoly::one(&f), |acc, (g, m)| &acc * &g.pow(*m));
    assert_eq!(product, sextic);
}

#[test]
fn factor_repeated_root() {
    let f3 = Field::prime(3).unwrap();
    let t2 = FieldPoly::from_indices(&f3, &[0, 0, 1]);
    assert_eq!(t2.factor().unwrap(), vec![(FieldPoly::t(&f3), 2)]);
    // (t^3 + 2t + 1)^3 * t^9 style p-th powers
    let base = FieldPoly::from_indices(&f3, &[1, 2, 0, 1]);
    let f = &base.pow(3) * &FieldPoly::t(&f3).pow(4);
    let got = f.factor().unwrap();
    assert_eq!(got, vec![(FieldPoly::t(&f3), 4), (base, 3)]);
    assert!(FieldPoly::zero(&f3).factor().is_err());
}

#[test]
fn gcd_coprime_examples() {
    let f7 = Field::prime(7).unwrap();
    let m = FieldPoly::from_indices(&f7, &[3, 6, 1]);
    let sextic = ip("t^6 - 4*t^3 - 1").reduce(&f7);
    assert!(gcd_coprime(&m, &sextic).unwrap().1);
    let (g, coprime) = gcd_coprime(&sextic, &sextic).unwrap();
    assert!(!coprime);
    assert_eq!(g, sextic.monic());

    let f2 = Field::prime(2).unwrap();
    let m = FieldPoly::from_indices(&f2, &[1, 0, 0, 1, 1]);
    assert!(gcd_coprime(&m, &r15().reduce(&f2)).unwrap().1);
    assert!(gcd_coprime(&FieldPoly::zero(&f2), &FieldPoly::zero(&f2)).is_err());
}

#[test]
fn splitting_order_of_r() {
    let r = r15();
    let rep5 = splitting_order_check(&r, 5, 21).unwrap();
    assert!(rep5.passed);
    assert_eq!(rep5.data["required_order"], 21);
    let rep3 = splitting_order_check(&r, 3, 21).unwrap();
    assert_eq!(rep3.data["required_order"], 7);
    assert!(rep3.passed);
    let rep7 = splitting_order_check(&r, 7, 21).unwrap();
    assert_eq!(rep7.data["required_order"], 3);
    assert!(rep7.passed);
    assert_eq!(splitting_order_check(&IntPoly::from_i64s(&[5, 10]), 5, 21).unwrap_err(), crate::Error::VanishesModP(5));
}

#[test]
fn irreducibility_counts_match_necklace_formula() {
    // number of monic irreducibles of degree n over GF(q)
    fn count(q: u64, n: u32) -> u64 {
        let mut total: i64 = 0;
        for d in 1..=n {
            if n.is_multiple_of(d) {
                total += mobius(d) * (q.pow(n / d) as i64);
            }
        }
        (total / n as i64) as u64
    }
    fn mobius(n: u32) -> i64 {
        let f = crate::ff::numtheory::factorize(n as u64);
        if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
    for (q, n) in [(2u64, 5u32), (3, 4), (4, 3), (5, 3), (2, 8)] {
        let f = Field::of_order(q).unwrap();
        let total = q.pow(n);
        let mut irr = 0;
        for k in 0..total {
            let mut c: Vec<u64> = (0..n).map(|i| (k / q.pow(i)) % q).collect();
            c.push(1);
            if FieldPoly::from_indices(&f, &c).is_irreducible() {
                irr += 1;
            }
        }
        assert_eq!(irr, count(q, n), "q={q} n={n}");
    }
}

fn small_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]).prop_map(|q| Field::of_order(q).unwrap())
}

fn poly_over(f: Field, max_deg: usize) -> impl Strategy<Value = FieldPoly> {
    let q = f.q();
    prop::collection::vec(0..q, 0..=max_deg + 1).prop_map(move |c| FieldPoly::from_indices(&f, &c))
}

fn field_and_polys(max_deg: usize) -> impl Strategy<Value = (FieldPoly, FieldPoly)> {
    small_field().prop_flat_map(move |f| (poly_over(f.clone(), max_deg), poly_over(f, max_deg)))
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn resultant_vanishes_iff_common_factor((f, g) in field_and_polys(5)) {
        prop_assume!(!f.is_constant() || !g.is_constant());
        prop_assume!(!f.is_zero() && !g.is_zero());
        let r = resultant(f.field(), f.coeffs(), g.coeffs()).unwrap();
        let common = !f.gcd(&g).is_constant();
        prop_assert_eq!(r.is_zero(), common);
    }

    #[test]
    fn factor_product_reconstructs_input(f in small_field().prop_flat_map(|f| poly_over(f, 10))) {
        prop_assume!(!f.is_zero());
        let factors = f.factor().unwrap();
        let product = factors.iter().fold(FieldPoly::one(f.field()), |acc, (g, m)| &acc * &g.pow(*m));
        prop_assert_eq!(product, f.monic());
        for (g, _) in &factors {
            prop_assert!(g.is_irreducible());
            prop_assert!(g.is_monic());
        }
    }

    #[test]
    fn irreducible_factors_have_no_roots_in_small_extensions(f in prop::sample::select(vec![2u64, 3, 4, 5]).prop_flat_map(|q| poly_over(Field::of_order(q).unwrap(), 6))) {
        prop_assume!(!f.is_zero());
        for (g, _) in f.factor().unwrap() {
            let deg = g.degree().unwrap();
            for d in 1..deg as u32 {
                let emb = g.field().extension(d).unwrap();
                let lifted = g.map_coeffs(emb.big(), |c| emb.map(c));
                prop_assert!(emb.big().elements().all(|x| !lifted.eval(x).is_zero()), "{} has a root in degree {}", g, d);
            }
        }
    }

    #[test]
    fn z_factor_product_reconstructs_input(f in int_poly(8), g in int_poly(4)) {
        let h = &f * &g;
        prop_assume!(!h.is_zero());
        let (unit, factors) = h.factor().unwrap();
        let product = factors.iter().fold(IntPoly::constant(unit), |acc, (p, m)| {
            (0..*m).fold(acc, |a, _| &a * p)
        });
        prop_assert_eq!(product, h);
    }

    #[test]
    fn int_resultant_reduces_mod_p(f in int_poly(5), g in int_poly(5), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0);
        let field = Field::prime(p).unwrap();
        let (fr, gr) = (f.reduce(&field), g.reduce(&field));
        prop_assume!(fr.degree() == f.degree() && gr.degree() == g.degree());
        let rz = resultant(&Integers, f.coeffs(), g.coeffs()).unwrap();
        let rp = resultant(&field, fr.coeffs(), gr.coeffs()).unwrap();
        prop_assert_eq!(IntPoly::constant(rz).reduce(&field).coeff(0), rp);
    }

    #[test]
    fn int_poly_text_round_trip(f in int_poly(12)) {
        prop_assert_eq!(f.to_string().parse::<IntPoly>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntPoly>(&json).unwrap(), f);
    }

    #[test]
    fn field_poly_text_round_trip_prop(f in small_field().prop_flat_map(|f| poly_over(f, 8))) {
        prop_assert_eq!(FieldPoly::parse(f.field(), &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(FieldPoly::from_json(f.field(), &f.to_json()).unwrap(), f);
    }
}
