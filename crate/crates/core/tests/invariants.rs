use infchar_core::invariants::{
    characters_equal, charpoly_of_eigenvalues, charpoly_to_power_sums, inf_char_of_highest_weight,
    evaluate, match_algebraic, power_sums_to_charpoly, symmetrize, symmetrize_with, InvariantPolynomial, Poly,
};
use infchar_core::rootdata::{builtin_datum, BuiltinFamily};
use infchar_core::{InfinitesimalCharacter, Scalar, Strategy as Exec, Weight};
use num::{BigInt, BigRational};
use proptest::prelude::*;

fn rq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn point(v: &[(i64, i64)]) -> Vec<Scalar> {
    v.iter().map(|&(n, d)| Scalar::from_rational(rq(n, d))).collect()
}

fn rational_pair() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=5)
}

fn random_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, nvars), -5i64..=5), 1..5)
        .prop_map(move |terms| Poly::from_terms(nvars, terms.into_iter().map(|(m, c)| (m, rq(c, 1)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetrized_polys_are_invariant(
        p in random_poly(3),
        pts in prop::collection::vec(prop::collection::vec(rational_pair(), 3), 10),
    ) {
        let weyl = builtin_datum(BuiltinFamily::GL, 3).unwrap().weyl_group().unwrap();
        let inv = symmetrize(&p, &weyl);
        prop_assert!(InvariantPolynomial::certify(inv.poly().clone(), &weyl).is_ok());
        prop_assert_eq!(&symmetrize_with(&p, &weyl, Exec::Sequential), &inv);
        for x in &pts {
            let x = point(x);
            let base = evaluate(&inv, &x);
            for w in weyl.orbit(&x) {
                prop_assert_eq!(evaluate(&inv, &w), base.clone());
            }
        }
    }

    #[test]
    fn invariance_on_sp4(
        p in random_poly(2),
        pts in prop::collection::vec(prop::collection::vec(rational_pair(), 2), 10),
    ) {
        let weyl = builtin_datum(BuiltinFamily::Sp, 2).unwrap().weyl_group().unwrap();
        let inv = symmetrize(&p, &weyl);
        for x in &pts {
            let x = point(x);
            for w in weyl.orbit(&x) {
                prop_assert_eq!(evaluate(&inv, &w), evaluate(&inv, &x));
            }
        }
    }

    #[test]
    fn characters_equal_is_an_equivalence(
        a in prop::collection::vec(rational_pair(), 3),
        b in prop::collection::vec(rational_pair(), 3),
        i in 0usize..6,
        j in 0usize..6,
    ) {
        let weyl = builtin_datum(BuiltinFamily::GL, 3).unwrap().weyl_group().unwrap();
        let a = point(&a);
        let b = point(&b);
        let orbit = weyl.orbit(&a);
        let x = InfinitesimalCharacter::new(a.clone());
        let y = InfinitesimalCharacter::new(orbit[i % orbit.len()].clone());
        let z = InfinitesimalCharacter::new(orbit[j % orbit.len()].clone());
        let other = InfinitesimalCharacter::new(b.clone());
        prop_assert!(characters_equal(&x, &x, &weyl));
        prop_assert!(characters_equal(&x, &y, &weyl) && characters_equal(&y, &x, &weyl));
        prop_assert!(characters_equal(&y, &z, &weyl));
        let mut sa: Vec<_> = a.iter().map(|s| s.to_rational().unwrap()).collect();
        let mut sb: Vec<_> = b.iter().map(|s| s.to_rational().unwrap()).collect();
        sa.sort();
        sb.sort();
        prop_assert_eq!(characters_equal(&x, &other, &weyl), sa == sb);
        prop_assert_eq!(characters_equal(&y, &other, &weyl), characters_equal(&x, &other, &weyl));
    }

    #[test]
    fn match_inverts_highest_weight(raw in prop::collection::vec(-6i64..=6, 3), which in 0usize..3) {
        let (d, lambda) = match which {
            0 => {
                let d = builtin_datum(BuiltinFamily::GL, 2).unwrap();
                let mut v = raw[..2].to_vec();
                v.sort_by(|a, b| b.cmp(a));
                (d, v)
            }
            1 => {
                let d = builtin_datum(BuiltinFamily::GL, 3).unwrap();
                let mut v = raw.clone();
                v.sort_by(|a, b| b.cmp(a));
                (d, v)
            }
            _ => {
                // Sp₄ dominant weights are a ≥ b ≥ 0
                let d = builtin_datum(BuiltinFamily::Sp, 2).unwrap();
                let mut v: Vec<i64> = raw[..2].iter().map(|x| x.abs()).collect();
                v.sort_by(|a, b| b.cmp(a));
                (d, v)
            }
        };
        let w = Weight::from_ints(&lambda);
        prop_assert!(d.is_dominant(&w));
        let chi = inf_char_of_highest_weight(&w, &d).unwrap();
        prop_assert_eq!(match_algebraic(&chi, &d), Some(w));
    }

    #[test]
    fn power_sums_match_eigenvalues(roots in prop::collection::vec(-6i64..=6, 1..=5)) {
        let eig: Vec<Scalar> = roots.iter().map(|&r| Scalar::from_int(r)).collect();
        // monic char poly ∏(x − r), expanded by hand
        let mut c = vec![1i64];
        for &r in &roots {
            let mut next = c.clone();
            next.push(0);
            for (i, ci) in c.iter().enumerate() {
                next[i + 1] -= ci * r;
            }
            c = next;
        }
        let coeffs: Vec<Scalar> = c.iter().map(|&x| Scalar::from_int(x)).collect();
        prop_assert_eq!(&charpoly_of_eigenvalues(&eig), &coeffs);
        let p = charpoly_to_power_sums(&coeffs, roots.len() + 2);
        for (k, pk) in p.iter().enumerate() {
            let direct: i64 = roots.iter().map(|r| r.pow(k as u32 + 1)).sum();
            prop_assert_eq!(pk, &Scalar::from_int(direct));
        }
        prop_assert_eq!(power_sums_to_charpoly(&p[..roots.len()], roots.len()), coeffs);
    }

    #[test]
    fn equal_power_sums_iff_equal_charpolys(
        a in prop::collection::vec(-3i64..=3, 1..=4),
        b in prop::collection::vec(-3i64..=3, 1..=4),
    ) {
        let n = a.len();
        let b: Vec<i64> = b.into_iter().cycle().take(n).collect();
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
        let ca = charpoly_of_eigenvalues(&s(&a));
        let cb = charpoly_of_eigenvalues(&s(&b));
        let pa = charpoly_to_power_sums(&ca, n);
        let pb = charpoly_to_power_sums(&cb, n);
        let mut sa = a.clone();
        let mut sb = b.clone();
        sa.sort();
        sb.sort();
        prop_assert_eq!(pa == pb, ca == cb);
        prop_assert_eq!(ca == cb, sa == sb);
    }
}

#[test]
fn power_sum_polys_are_invariant() {
    let weyl = builtin_datum(BuiltinFamily::GL, 4).unwrap().weyl_group().unwrap();
    for k in 1..=4 {
        assert!(InvariantPolynomial::certify(Poly::power_sum(4, k), &weyl).is_ok());
    }
    assert!(InvariantPolynomial::certify(Poly::var(4, 0), &weyl).is_err());
}

#[test]
fn gl2_highest_weight_shift() {
    let d = builtin_datum(BuiltinFamily::GL, 2).unwrap();
    let chi = inf_char_of_highest_weight(&Weight::from_ints(&[2, 0]), &d).unwrap();
    assert_eq!(chi.point(), &point(&[(5, 2), (-1, 2)])[..]);
    assert!(inf_char_of_highest_weight(&Weight::from_ints(&[0, 2]), &d).is_err());
}
