use proptest::prelude::*;
use simpforge_core::salg::{compose, morphisms_equal, Presentation};
use simpforge_models::maps::{can_map, rho_action, zeta_automorphism, zeta_descent_check};
use simpforge_models::{DVector, Formulas, Layer, ModelId, Perm, Skip, VarRho};

fn perm() -> impl Strategy<Value = Perm> {
    (1u32..7).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|t| Perm::from_table(t).unwrap())
}

proptest! {
    #[test]
    fn permutations_form_a_group(p in perm(), e in -8i64..8) {
        let n = p.size();
        prop_assert!(p.then_after(&p.inverse()).is_identity());
        prop_assert!(p.inverse().then_after(&p).is_identity());
        prop_assert_eq!(p.pow(e).then_after(&p.pow(-e)), Perm::identity(n));
        prop_assert!(p.pow(i64::from(p.order())).is_identity());
    }

    #[test]
    fn rho_has_order_n(n in 1u32..9) {
        let r = Perm::rho(n);
        prop_assert_eq!(r.order(), n);
        prop_assert_eq!(r.apply(n), 1);
    }

    #[test]
    fn d_vectors_stay_in_range(start in 0u32..4, len in 0u32..3) {
        let all = DVector::all(start, len);
        let expected: u32 = (start..start + len).map(|s| s + 1).product();
        prop_assert_eq!(all.len() as u32, expected);
        for d in &all {
            for s in start..start + len {
                prop_assert!(d.get(s).unwrap() <= s);
            }
            prop_assert!(d.get(start + len).is_err());
            prop_assert_eq!(&DVector::new(start, d.values().to_vec()).unwrap(), d);
        }
    }
}

#[test]
fn model_ids_print_and_parse() {
    for id in ModelId::catalogue() {
        assert_eq!(id.to_string().parse::<ModelId>().unwrap(), id);
    }
    assert!("kA(0)".parse::<ModelId>().and_then(|id| id.build()).is_err());
    assert!("kA".parse::<ModelId>().is_err());
}

#[test]
fn presentations_survive_json() {
    for id in [ModelId::KA, ModelId::KaTensor { n: 2, m: 3 }, ModelId::PhiSource(2), ModelId::KaPiZero(1)] {
        let p = id.build().unwrap();
        let back = Presentation::from_json(&p.to_json()).unwrap();
        assert!(back.same_structure(&p), "{id}");
        assert_eq!(back.dump(2).unwrap(), p.dump(2).unwrap());
    }
}

#[test]
fn var_rho_values() {
    let r = VarRho::new(3).unwrap();
    let got: Vec<u32> = (0..=3).map(|i| r.apply(i).unwrap()).collect();
    assert_eq!(got, [1, 2, 3, 1]);
    assert!(r.apply(4).is_err());
    assert!(VarRho::new(0).is_err());
}

#[test]
fn can_maps_compose() {
    let fm = Formulas::default();
    for n in 1..=2 {
        let direct = can_map(3, 1, n, &fm).unwrap();
        let via = compose(&can_map(2, 1, n, &fm).unwrap(), &can_map(3, 2, n, &fm).unwrap()).unwrap();
        morphisms_equal(&direct, &via, 3).unwrap_or_else(|c| panic!("n={n}: {c}"));
    }
}

#[test]
fn rho_action_is_periodic() {
    let target = ModelId::KaTensor { n: 3, m: 1 };
    let one = rho_action(3, 1, target).unwrap();
    let two = rho_action(3, 2, target).unwrap();
    let identity = rho_action(3, 0, target).unwrap();
    two.certify(2).unwrap();
    morphisms_equal(&two, &compose(&one, &one).unwrap(), 2).unwrap();
    morphisms_equal(&identity, &compose(&one, &two).unwrap(), 2).unwrap();
    assert!(rho_action(3, 3, target).is_err());
}

#[test]
fn zeta_is_simplicial_and_descends() {
    let fm = Formulas::default();
    for n in 1..=4 {
        zeta_automorphism(n, &fm).unwrap().certify(3).unwrap();
        if n >= 2 {
            zeta_descent_check(n, 3, &fm).unwrap_or_else(|c| panic!("n={n}: {c}"));
        }
    }
}

#[test]
fn skip_maps_at_both_layers() {
    let fm = Formulas::default();
    for kind in [Skip::F, Skip::G] {
        for c in 1..=3 {
            for r in 0..=c {
                for layer in [Layer::Quotient, Layer::Direct] {
                    let f = kind.map(c, r, layer, &fm);
                    let f = f.unwrap_or_else(|e| panic!("{kind:?} c={c} r={r} {layer:?}: {e}"));
                    f.certify(2).unwrap_or_else(|x| panic!("{kind:?} c={c} r={r} {layer:?}: {x}"));
                }
            }
        }
    }
}

#[test]
fn out_of_range_skip_index_is_rejected() {
    let fm = Formulas::default();
    assert!(Skip::F.map(2, 3, Layer::Quotient, &fm).is_err());
}
