use std::collections::BTreeMap;

use infchar_core::invariants::charpoly_to_power_sums;
use infchar_core::linalg::ScalarMatrix;
use infchar_core::rootdata::{builtin_datum, BuiltinFamily};
use infchar_core::sen::{
    is_hodge_tate, semisimple_class_of_matrix, sen_direct_sum, sen_from_ht_weights, sen_tensor, specialize,
};
use infchar_core::{CoefficientRing, Scalar, SenOperator};
use num::{BigInt, BigRational};
use proptest::prelude::*;

fn same_multiset(a: &[Scalar], b: &[Scalar]) -> bool {
    let mut rest = b.to_vec();
    a.len() == b.len()
        && a.iter().all(|x| match rest.iter().position(|y| y == x) {
            Some(i) => {
                rest.swap_remove(i);
                true
            }
            None => false,
        })
}

fn class(v: &[i64]) -> SenOperator {
    SenOperator::Class(v.iter().map(|&x| Scalar::from_int(x)).collect())
}

fn small_class() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..=3)
}

fn unipotent(n: usize, i: usize, j: usize, x: i64) -> ScalarMatrix {
    let mut m = ScalarMatrix::identity(n);
    m[(i, j)] = Scalar::from_int(x);
    m
}

/// Integer matrix power and trace, independent of the library's matrix code.
fn trace_of_power(m: &[Vec<i64>], k: u32) -> i64 {
    let n = m.len();
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..k {
        p = (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| p[i][l] * m[l][j]).sum()).collect()).collect();
    }
    (0..n).map(|i| p[i][i]).sum()
}

fn family_ring() -> CoefficientRing {
    CoefficientRing::family(CoefficientRing::Rationals, vec!["x".into(), "y".into()]).unwrap()
}

/// A random polynomial of degree ≤ 2 in `x, y`, as text.
fn poly_text() -> impl Strategy<Value = String> {
    (-3i64..=3, -3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, a, b, e)| format!("{c} + {a}*x + {b}*y^2 + {e}*x*y"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn tensor_distributes_over_sum(a in small_class(), b in small_class(), c in small_class()) {
        let (a, b, c) = (class(&a), class(&b), class(&c));
        let lhs = sen_tensor(&a, &sen_direct_sum(&b, &c).unwrap()).unwrap();
        let rhs = sen_direct_sum(&sen_tensor(&a, &b).unwrap(), &sen_tensor(&a, &c).unwrap()).unwrap();
        prop_assert!(same_multiset(lhs.as_class().unwrap(), rhs.as_class().unwrap()));
    }

    #[test]
    fn tensor_is_pairwise_sums(a in small_class(), b in small_class()) {
        let t = sen_tensor(&class(&a), &class(&b)).unwrap();
        let sums: Vec<Scalar> = a.iter().flat_map(|x| b.iter().map(move |y| Scalar::from_int(x + y))).collect();
        prop_assert!(same_multiset(t.as_class().unwrap(), &sums));
    }

    #[test]
    fn diagonalizable_power_sums(
        d in prop::collection::vec((-8i64..=8, 1i64..=3), 2..=3),
        a in -3i64..=3,
        b in -3i64..=3,
    ) {
        let n = d.len();
        let diag: Vec<Scalar> =
            d.iter().map(|&(p, q)| Scalar::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))).collect();
        let p = unipotent(n, n - 1, 0, a).mul(&unipotent(n, 0, 1, b));
        let p_inv = unipotent(n, 0, 1, -b).mul(&unipotent(n, n - 1, 0, -a));
        let m = p.mul(&ScalarMatrix::diagonal(&diag)).mul(&p_inv);
        let gl = builtin_datum(BuiltinFamily::GL, n).unwrap();
        let extracted = semisimple_class_of_matrix(&m, &gl).unwrap();
        prop_assert!(same_multiset(&extracted, &diag));
        let from_charpoly = charpoly_to_power_sums(&m.charpoly(), 4);
        for (k, pk) in from_charpoly.iter().enumerate() {
            let direct: Scalar = extracted.iter().map(|x| x.pow(k as u32 + 1)).sum();
            prop_assert_eq!(pk, &direct);
        }
    }

    #[test]
    fn integer_classes_are_hodge_tate(w in prop::collection::vec(-100i64..=100, 1..=6)) {
        prop_assert!(is_hodge_tate(&sen_from_ht_weights(&w)).hodge_tate);
    }

    #[test]
    fn specialize_commutes(
        a in prop::collection::vec(poly_text(), 1..=2),
        b in prop::collection::vec(poly_text(), 1..=2),
        x in -5i64..=5,
        y in -5i64..=5,
    ) {
        let ring = family_ring();
        let parse = |v: &[String]| SenOperator::Class(v.iter().map(|t| ring.parse(t).unwrap()).collect());
        let (a, b) = (parse(&a), parse(&b));
        let at = BTreeMap::from([("x".to_string(), Scalar::from_int(x)), ("y".to_string(), Scalar::from_int(y))]);
        let sa = specialize(&a, &at).unwrap();
        let sb = specialize(&b, &at).unwrap();
        let sum_then = specialize(&sen_direct_sum(&a, &b).unwrap(), &at).unwrap();
        prop_assert_eq!(sum_then, sen_direct_sum(&sa, &sb).unwrap());
        let tensor_then = specialize(&sen_tensor(&a, &b).unwrap(), &at).unwrap();
        prop_assert_eq!(tensor_then, sen_tensor(&sa, &sb).unwrap());
    }

    #[test]
    fn trace_identity_with_nilpotent_part(
        diag in prop::collection::vec(-4i64..=4, 2..=4),
        upper in prop::collection::vec(-3i64..=3, 6),
    ) {
        let n = diag.len();
        let mut rows = vec![vec![0i64; n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            rows[i][i] = diag[i];
            for j in i + 1..n {
                rows[i][j] = *it.next().unwrap();
            }
        }
        let m = ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .unwrap();
        let p = charpoly_to_power_sums(&m.charpoly(), 4);
        for k in 1..=4u32 {
            prop_assert_eq!(&p[k as usize - 1], &Scalar::from_int(trace_of_power(&rows, k)));
        }
    }
}

#[test]
fn worked_tensor_example() {
    let t = sen_tensor(&class(&[1, 2]), &class(&[0, 3])).unwrap();
    assert!(same_multiset(t.as_class().unwrap(), &[1, 4, 2, 5].map(Scalar::from_int)));
    let zeros = sen_tensor(&class(&[0, 0]), &class(&[7, -1])).unwrap();
    assert!(same_multiset(zeros.as_class().unwrap(), &[7, -1, 7, -1].map(Scalar::from_int)));
    let k = ScalarMatrix::kronecker_sum(
        &ScalarMatrix::diagonal(&[1, 2].map(Scalar::from_int)),
        &ScalarMatrix::diagonal(&[0, 3].map(Scalar::from_int)),
    );
    // (x−1)(x−4)(x−2)(x−5) = x⁴ − 12x³ + 49x² − 78x + 40
    assert_eq!(k.charpoly(), [1, -12, 49, -78, 40].map(Scalar::from_int).to_vec());
}

#[test]
fn mixed_kinds_are_rejected() {
    let m = SenOperator::Matrix(ScalarMatrix::identity(2));
    assert!(sen_tensor(&m, &class(&[1, 2])).is_err());
    assert!(sen_direct_sum(&class(&[1]), &m).is_err());
}

#[test]
fn hodge_tate_rejections() {
    let nil = SenOperator::Matrix(
        ScalarMatrix::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::from_int(1)],
            vec![Scalar::zero(), Scalar::from_int(2)],
        ])
        .unwrap(),
    );
    let v = is_hodge_tate(&nil);
    assert!(!v.hodge_tate);
    assert!(v.reason.unwrap().contains("squarefree"));
    assert!(!is_hodge_tate(&SenOperator::Class(vec![Scalar::ratio(1, 2)])).hodge_tate);
    let semisimple = SenOperator::Matrix(ScalarMatrix::diagonal(&[2, 2].map(Scalar::from_int)));
    assert!(is_hodge_tate(&semisimple).hodge_tate);
}

#[test]
fn splitting_uses_the_coefficient_field() {
    let ring = CoefficientRing::number_field("r", "r^2 - 2").unwrap();
    let m = ScalarMatrix::from_rows(vec![
        vec![Scalar::zero(), Scalar::from_int(2)],
        vec![Scalar::one(), Scalar::zero()],
    ])
    .unwrap();
    assert!(infchar_core::sen::eigenvalues(&m).is_err());
    let r = ring.parse("r").unwrap();
    let e = infchar_core::sen::eigenvalues_in(&m, ring.field()).unwrap();
    assert!(same_multiset(&e, &[r.clone(), -&r]));
    let v = infchar_core::sen::is_hodge_tate_in(&SenOperator::Matrix(m), ring.field());
    assert!(!v.hodge_tate && v.reason.unwrap().contains("not an integer"));
}
