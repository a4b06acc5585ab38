use std::collections::BTreeSet;

use infchar_core::linalg::{dot, IntMatrix};
use infchar_core::rootdata::{builtin_datum, BuiltinFamily, PinnedAutomorphism};
use infchar_core::{BasedRootDatum, Weight};
use num::{BigInt, BigRational};
use proptest::prelude::*;

use BuiltinFamily::*;

fn builtins() -> Vec<(BuiltinFamily, usize, BasedRootDatum)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for f in [GL, SL, PGL, Sp, SO] {
            if let Ok(d) = builtin_datum(f, n) {
                out.push((f, n, d));
            }
        }
    }
    out
}

fn weight(v: &[i64], den: i64) -> Weight {
    let w = Weight::from_ints(v);
    let d = BigRational::from_integer(BigInt::from(den));
    Weight::new(w.coords().iter().map(|x| x / &d).collect())
}

#[test]
fn dualize_is_an_involution() {
    for (f, n, d) in builtins() {
        let dd = d.dualize().dualize();
        let a: BTreeSet<_> = d.roots().iter().zip(d.coroots()).collect();
        let b: BTreeSet<_> = dd.roots().iter().zip(dd.coroots()).collect();
        assert_eq!(a, b, "{f}{n}");
        assert_eq!(dd, d, "{f}{n}");
    }
}

#[test]
fn reflections_permute_roots() {
    for (f, n, d) in builtins() {
        let roots: BTreeSet<Vec<i64>> = d.roots().iter().cloned().collect();
        for (a, c) in d.roots().iter().zip(d.coroots()) {
            let image: BTreeSet<Vec<i64>> = roots
                .iter()
                .map(|x| {
                    let p = dot(x, c);
                    x.iter().zip(a).map(|(xi, ai)| xi - p * ai).collect()
                })
                .collect();
            assert_eq!(image, roots, "{f}{n}, root {a:?}");
        }
    }
}

#[test]
fn weyl_orders() {
    for n in 1..=6 {
        let fact: usize = (1..=n).product();
        assert_eq!(builtin_datum(GL, n).unwrap().weyl_group().unwrap().order(), fact);
    }
    assert_eq!(builtin_datum(Sp, 2).unwrap().weyl_group().unwrap().order(), 8);
    for (f, n, d) in builtins() {
        assert_eq!(d.weyl_group().unwrap().order() as u64, f.weyl_order(n), "{f}{n}");
    }
}

#[test]
fn weyl_cap_is_enforced() {
    assert!(builtin_datum(GL, 5).unwrap().weyl_group_with_cap(100).is_err());
}

#[test]
fn half_sum_pairs_to_one() {
    for (f, n, d) in builtins() {
        let delta = d.half_sum_positive_roots();
        for c in d.simple_coroots() {
            assert_eq!(delta.pair(c), BigRational::from_integer(1.into()), "{f}{n}");
        }
    }
}

#[test]
fn twisting_elements() {
    for n in 1..=6 {
        let expected: Vec<i64> = (0..n as i64).map(|i| -i).collect();
        assert_eq!(builtin_datum(GL, n).unwrap().find_twisting_element(), Some(expected));
    }
    for (f, n, d) in builtins() {
        match d.find_twisting_element() {
            Some(t) => {
                for c in d.simple_coroots() {
                    assert_eq!(dot(&t, c), 1, "{f}{n}");
                }
            }
            None if d.rank() <= 2 => {
                for a in -12..=12 {
                    for b in -12..=12 {
                        let v: Vec<i64> = [a, b][..d.rank()].to_vec();
                        assert!(!d.is_twisting_element(&v), "{f}{n}: {v:?}");
                    }
                }
            }
            None => {}
        }
    }
    assert!(builtin_datum(PGL, 2).unwrap().find_twisting_element().is_none());
    assert!(builtin_datum(SL, 2).unwrap().find_twisting_element().is_some());
}

#[test]
fn pinned_flip_fixes_delta() {
    let d = builtin_datum(GL, 3).unwrap();
    let flip = IntMatrix::from_rows(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]).unwrap();
    let a = PinnedAutomorphism::new(flip, &d).unwrap();
    assert_eq!(a.order(), 2);
    let delta = d.half_sum_positive_roots();
    assert_eq!(a.apply(&delta), delta);
    // a Weyl element is not pinned
    let s = d.simple_reflection(0);
    assert!(PinnedAutomorphism::new(s, &d).is_err());
}

fn datum_and_weight() -> impl Strategy<Value = (BasedRootDatum, Weight)> {
    (0usize..5, 2usize..=3).prop_flat_map(|(f, n)| {
        let d = builtin_datum([GL, SL, PGL, Sp, SO][f], n).unwrap();
        let r = d.rank();
        (Just(d), prop::collection::vec(-6i64..=6, r), 1i64..=3).prop_map(|(d, v, den)| (d, weight(&v, den)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_representative_is_idempotent_and_invariant((d, w) in datum_and_weight()) {
        let (dom, word) = d.dominant_representative(&w);
        prop_assert!(d.is_dominant(&dom));
        prop_assert_eq!(d.apply_word(&word, &w), dom.clone());
        prop_assert_eq!(d.dominant_representative(&dom).0, dom.clone());
        let weyl = d.weyl_group().unwrap();
        for m in weyl.elements() {
            let moved = Weight::new(m.apply_rational(w.coords()));
            prop_assert_eq!(d.dominant_representative(&moved).0, dom.clone());
        }
    }
}
