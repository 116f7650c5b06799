use chernclass::{cartier_segre, Class, SmallClass};
use num_bigint::BigInt;
use proptest::prelude::*;

fn class_in(n: usize) -> impl Strategy<Value = Class> {
    prop::collection::vec(-40i64..=40, n + 1).prop_map(move |v| Class::from_i64s(n, &v).unwrap())
}

fn pair() -> impl Strategy<Value = (Class, Class)> {
    (0usize..=6).prop_flat_map(|n| (class_in(n), class_in(n)))
}

fn triple() -> impl Strategy<Value = (Class, Class, Class)> {
    (0usize..=6).prop_flat_map(|n| (class_in(n), class_in(n), class_in(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn intersection_is_a_commutative_ring((a, b, c) in triple()) {
        let n = a.ambient_dim();
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersect(&(b.clone() + c.clone())).unwrap(),
            a.intersect(&b).unwrap() + a.intersect(&c).unwrap()
        );
        prop_assert_eq!(a.intersect(&Class::fundamental(n)).unwrap(), a.clone());
        prop_assert!(a.intersect(&Class::zero(n)).unwrap().is_zero());
    }

    #[test]
    fn twist_laws((a, b) in pair(), d in -3i64..=3, e in -3i64..=3) {
        prop_assert_eq!(a.twist(d).twist(e), a.twist(d + e));
        prop_assert_eq!(a.twist(0), a.clone());
        prop_assert_eq!(a.intersect(&b).unwrap().twist(d), a.twist(d).intersect(&b.twist(d)).unwrap());
        prop_assert_eq!(a.twist(d).dual(), a.dual().twist(-d));
    }

    #[test]
    fn dual_and_series((a, _b) in pair(), d in -4i64..=4, k in 0i64..=5) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.line_series(d, k).line_series(d, -k), a.clone());
        prop_assert_eq!(a.line_series(d, -k).line_series(d, k), a.clone());
        prop_assert_eq!(a.line_series(d, 0), a.clone());
        let n = a.ambient_dim();
        prop_assert_eq!(a.cap_tangent(), a.line_series(1, n as i64 + 1));
    }

    #[test]
    fn cartier_segre_is_a_geometric_series(n in 1usize..=6, d in 1i64..=5) {
        let s: Class = cartier_segre(n, d).unwrap();
        let hyperplane = Class::linear(n, n - 1).scale(&BigInt::from(d));
        prop_assert_eq!(s, hyperplane.line_series(d, -1));
    }

    #[test]
    fn machine_word_scalars_agree(v in prop::collection::vec(-20i64..=20, 1..=7), w in prop::collection::vec(-20i64..=20, 7), d in -2i64..=2) {
        let n = v.len() - 1;
        let w = &w[..=n];
        let (a, b) = (Class::from_i64s(n, &v).unwrap(), Class::from_i64s(n, w).unwrap());
        let (sa, sb) = (SmallClass::from_i64s(n, &v).unwrap(), SmallClass::from_i64s(n, w).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap().twist(d).to_string(), sa.intersect(&sb).unwrap().twist(d).to_string());
        prop_assert_eq!(a.s_hat().cap_tangent().to_string(), sa.s_hat().cap_tangent().to_string());
    }
}

#[test]
fn rendering() {
    let c = Class::from_i64s(3, &[219, 87, 20, 2]).unwrap();
    assert_eq!(c.to_string(), "2[P^3] + 20[P^2] + 87[P^1] + 219[P^0]");
    assert_eq!(serde_json::to_string(&c.to_json()).unwrap(), r#"{"n":3,"coeffs":[219,87,20,2]}"#);
    assert_eq!(Class::zero(2).to_string(), "0");
    assert_eq!(Class::from_i64s(1, &[-6, 0]).unwrap().to_string(), "-6[P^0]");
}

#[test]
fn mismatched_dimensions_are_errors() {
    let a = Class::fundamental(2);
    let b = Class::fundamental(3);
    assert!(a.intersect(&b).is_err());
    assert!(a.checked_add(&b).is_err());
    assert!(Class::from_i64s(2, &[1, 2]).is_err());
    assert!(cartier_segre::<BigInt>(2, 0).is_err());
}
