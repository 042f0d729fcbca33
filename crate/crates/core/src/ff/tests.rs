use proptest::prelude::*;

use super::*;
use crate::ff::numtheory::{distinct_prime_factors, divisors, prime_power};

fn f9_alpha() -> Field {
    // alpha^2 = alpha + 1
    Field::new(3, 2, Some(&[2, 2, 1])).unwrap()
}

#[test]
fn make_field_examples() {
    let f9 = f9_alpha();
    assert_eq!(f9.q(), 9);
    let alpha = f9.generator();
    assert_eq!(f9.mul(alpha, alpha), f9.add(alpha, f9.one()));

    let f2 = Field::new(2, 1, None).unwrap();
    assert_eq!(f2.modulus(), &[0, 1]);

    let f16 = Field::new(2, 4, Some(&[1, 1, 0, 0, 1])).unwrap();
    assert_eq!(f16.q(), 16);
    assert_eq!(f16.to_string(), "2^4/1,1,0,0,1");
}

#[test]
fn make_field_errors() {
    assert_eq!(Field::new(4, 1, None).unwrap_err(), crate::Error::NotPrime(4));
    // t^2 + 1 = (t + 1)^2 over GF(2)
    assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(crate::Error::BadModulus(_))));
    assert!(matches!(Field::new(2, 3, Some(&[1, 1, 1])), Err(crate::Error::BadModulus(_))));
    assert!(matches!(Field::new(3, 2, Some(&[2, 2, 2])), Err(crate::Error::BadModulus(_))));
}

#[test]
fn default_modulus_is_lexicographically_smallest() {
    // over GF(2): t^2+t+1 is the only irreducible quadratic
    assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
    // over GF(3): t^2+1 has the smallest constant term among irreducibles
    assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
    // over GF(2): (1,0,0,1) for t^4+t^3+1 precedes (1,1,0,0) for t^4+t+1
    assert_eq!(Field::new(2, 4, None).unwrap().modulus(), &[1, 0, 0, 1, 1]);
}

#[test]
fn field_text_round_trip() {
    for s in ["2^4/1,1,0,0,1", "3^2/2,2,1", "7^1/0,1"] {
        assert_eq!(Field::parse(s).unwrap().to_string(), s);
    }
    assert_eq!(Field::parse("25").unwrap().q(), 25);
    assert_eq!(Field::parse("5^2").unwrap(), Field::new(5, 2, None).unwrap());
    assert!(Field::parse("6").is_err());
    let f = f9_alpha();
    for a in f.elements() {
        assert_eq!(f.parse_elem(&f.format_elem(a)).unwrap(), a);
    }
}

#[test]
fn element_order_examples() {
    let f4 = Field::of_order(4).unwrap();
    let w = f4.omega().unwrap();
    assert_eq!(f4.element_order(w).unwrap(), 3);
    assert_eq!(f4.element_order(f4.one()).unwrap(), 1);
    assert!(f4.element_order(f4.zero()).is_err());

    let f9 = f9_alpha();
    let alpha = f9.generator();
    let mut x = alpha;
    let mut brute = 1;
    while x != f9.one() {
        x = f9.mul(x, alpha);
        brute += 1;
    }
    assert_eq!(brute, 8);
    assert_eq!(f9.element_order(alpha).unwrap(), 8);
}

#[test]
fn element_order_without_tables() {
    // 2^17 exceeds the table limit, so the descent path is exercised
    let f = Field::of_order(1 << 17).unwrap();
    let g = f.primitive_element();
    assert_eq!(f.element_order(g).unwrap(), (1 << 17) - 1);
    let h = f.pow(g, 7);
    // 2^17 - 1 is prime
    assert_eq!(f.element_order(h).unwrap(), (1 << 17) - 1);
    assert_eq!(f.element_order(f.one()).unwrap(), 1);
}

#[test]
fn frobenius_examples() {
    let f9 = f9_alpha();
    let alpha = f9.generator();
    assert_eq!(f9.sigma(alpha).unwrap(), f9.pow(alpha, 3));
    assert_eq!(f9.sigma(f9.from_int(2)).unwrap(), f9.from_int(2));

    let f4 = Field::of_order(4).unwrap();
    let w = f4.omega().unwrap();
    assert_eq!(f4.sigma(w).unwrap(), f4.mul(w, w));

    let f8 = Field::of_order(8).unwrap();
    assert!(f8.sigma(f8.generator()).is_err());
    assert_eq!(f8.frobenius(f8.generator(), 3), f8.generator());
}

#[test]
fn subfield_generated_examples() {
    let f4 = Field::of_order(4).unwrap();
    let a = f4.primitive_element();
    assert_eq!(subfield_generated(&f4, f4.pow(a, 3)).size, 2);

    let f16 = Field::of_order(16).unwrap();
    let a = f16.primitive_element();
    let s = subfield_generated(&f16, f16.pow(a, 5));
    assert_eq!((s.size, s.degree), (4, 2));

    let f8 = Field::of_order(8).unwrap();
    let a = f8.primitive_element();
    assert_eq!(subfield_generated(&f8, f8.pow(a, 3)).size, 8);
}

/// Degree of the minimal polynomial of `a` over GF(p), by brute search for the
/// smallest `d` with `a^(p^d) = a` using repeated multiplication only.
fn minimal_degree_oracle(f: &Field, a: Elem) -> u32 {
    let mut x = a;
    for d in 1..=f.m() {
        let mut y = f.one();
        for _ in 0..f.p() {
            y = f.mul(y, x);
        }
        x = y;
        if x == a {
            return d;
        }
    }
    unreachable!("a^(p^m) = a for every element")
}

#[test]
fn subfield_degree_matches_oracle() {
    for q in [4, 8, 9, 16, 25, 27, 32, 49, 64, 81] {
        let f = Field::of_order(q).unwrap();
        for a in f.elements() {
            assert_eq!(f.subfield_degree(a), minimal_degree_oracle(&f, a), "q={q} a={a:?}");
        }
    }
}

#[test]
fn power_subfields_exhaustive_to_4096() {
    for q in 2..=4096u64 {
        if prime_power(q).is_none() {
            continue;
        }
        let f = Field::of_order(q).unwrap();
        // subfield_generated(a^s) depends only on a^s, and as a ranges over
        // elements of order q-1 the power a^s ranges over g^(s k), gcd(k, q-1) = 1
        let g = f.primitive_element();
        for s in [3u64, 5] {
            let full: Vec<bool> = (1..q)
                .filter(|&k| num_integer::Integer::gcd(&k, &(q - 1)) == 1)
                .map(|k| subfield_generated(&f, f.pow(f.pow(g, k), s)).size == q)
                .collect();
            let exceptional = (s == 3 && q == 4) || (s == 5 && q == 16);
            if exceptional {
                assert!(full.iter().all(|&b| !b), "q={q} s={s} should fail");
            } else {
                assert!(full.iter().all(|&b| b), "q={q} s={s} should generate");
            }
        }
    }
}

#[test]
fn roots_of_unity() {
    let f7 = Field::prime(7).unwrap();
    let w = f7.omega().unwrap();
    assert_eq!(f7.element_order(w).unwrap(), 3);
    assert!(f7.eta().is_none());
    let f3 = Field::prime(3).unwrap();
    assert_eq!(f3.omega(), Some(f3.one()));
    let f5 = Field::prime(5).unwrap();
    assert_eq!(f5.eta(), Some(f5.one()));
    assert!(f5.omega().is_none());
    let emb = f5.omega_extension().unwrap();
    assert_eq!(emb.big().q(), 25);
}

#[test]
fn embedding_is_a_ring_homomorphism() {
    let small = Field::of_order(4).unwrap();
    let emb = small.extension(2).unwrap();
    let big = emb.big().clone();
    for a in small.elements() {
        for b in small.elements() {
            assert_eq!(emb.map(small.add(a, b)), big.add(emb.map(a), emb.map(b)));
            assert_eq!(emb.map(small.mul(a, b)), big.mul(emb.map(a), emb.map(b)));
        }
        assert_eq!(emb.preimage(emb.map(a)), Some(a));
    }
}

#[test]
fn sqrt_finds_square_roots() {
    let f = Field::of_order(49).unwrap();
    for a in f.elements() {
        let sq = f.mul(a, a);
        let r = f.sqrt(sq).unwrap();
        assert_eq!(f.mul(r, r), sq);
    }
    let f7 = Field::prime(7).unwrap();
    assert!(f7.sqrt(f7.from_int(3)).is_none());
}

#[test]
fn large_prime_field_arithmetic() {
    let p = 1_000_000_007;
    let f = Field::prime(p).unwrap();
    let a = f.from_int(123_456_789);
    assert_eq!(f.mul(a, f.inv(a)), f.one());
    assert_eq!(f.pow(a, p - 1), f.one());
    assert_eq!(f.from_int(-1), f.elem(p - 1).unwrap());
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![4u64, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 243, 256, 343, 1024, 2187, 3125])
        .prop_map(|q| Field::of_order(q).unwrap())
}

proptest! {
    #[test]
    fn element_order_is_exact(f in field_strategy(), idx in any::<u64>()) {
        let a = f.elem(1 + idx % (f.q() - 1)).unwrap();
        let ord = f.element_order(a).unwrap();
        prop_assert_eq!(f.pow(a, ord), f.one());
        for r in distinct_prime_factors(ord) {
            prop_assert_ne!(f.pow(a, ord / r), f.one());
        }
        prop_assert!(divisors(f.q() - 1).contains(&ord));
    }

    #[test]
    fn frobenius_is_an_automorphism(f in field_strategy(), i in any::<u64>(), j in any::<u64>(), d in 0u32..4) {
        let a = f.elem(i % f.q()).unwrap();
        let b = f.elem(j % f.q()).unwrap();
        prop_assert_eq!(f.frobenius(f.add(a, b), d), f.add(f.frobenius(a, d), f.frobenius(b, d)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), d), f.mul(f.frobenius(a, d), f.frobenius(b, d)));
        if f.m() % 2 == 0 {
            prop_assert_eq!(f.sigma(f.sigma(a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn field_axioms(f in field_strategy(), i in any::<u64>(), j in any::<u64>(), k in any::<u64>()) {
        let (a, b, c) = (f.elem(i % f.q()).unwrap(), f.elem(j % f.q()).unwrap(), f.elem(k % f.q()).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), f.one());
        }
    }

    #[test]
    fn subfield_is_full_iff_minimal_polynomial_has_degree_m(f in field_strategy(), i in any::<u64>()) {
        let a = f.elem(i % f.q()).unwrap();
        let s = subfield_generated(&f, a);
        prop_assert_eq!(s.size == f.q(), minimal_degree_oracle(&f, a) == f.m());
    }
}
