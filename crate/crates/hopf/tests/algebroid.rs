use simpforge_core::salg::{compose, morphisms_equal, Morphism};
use simpforge_hopf::{build_hopf, build_pure_char, check_hopf_axioms, equivalence, generic_pi_check, pure_char_check, CodomainBase};

#[test]
fn axioms_hold_at_every_level_bound() {
    let names: Vec<String> = check_hopf_axioms(1).unwrap().into_iter().map(|c| c.name).collect();
    for p in 1..=3 {
        let checks = check_hopf_axioms(p).unwrap();
        assert_eq!(checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>(), names);
        for c in checks {
            c.result.unwrap_or_else(|x| panic!("p={p} {}: {x}", c.name));
        }
    }
}

#[test]
fn identity_is_not_an_antipode() {
    let h = build_hopf().unwrap();
    let fake = Morphism::identity(h.antipode.domain().clone());
    let x = morphisms_equal(&compose(&fake, &h.sigma).unwrap(), &h.tau, 2).unwrap_err();
    assert_eq!(x.generator, "t[1,1]");
    morphisms_equal(&compose(&h.antipode, &h.sigma).unwrap(), &h.tau, 2).unwrap();
}

#[test]
fn source_and_target_differ() {
    let h = build_hopf().unwrap();
    assert!(morphisms_equal(&h.sigma, &h.tau, 1).is_err());
    morphisms_equal(&compose(&h.xi, &h.sigma).unwrap(), &compose(&h.xi, &h.tau).unwrap(), 2).unwrap();
}

#[test]
fn pure_char_passes_over_both_bases() {
    for c in pure_char_check(3, 3).unwrap() {
        c.result.unwrap_or_else(|x| panic!("{}: {x}", c.name));
    }
    generic_pi_check(3).unwrap();
}

#[test]
fn equivalence_detects_a_lost_class() {
    let pc = build_pure_char(CodomainBase::Generic, false).unwrap();
    equivalence(&pc.iota, 2, 3).unwrap();
    let x = equivalence(&pc.xi_bar_unit, 2, 3).unwrap_err();
    assert_eq!(x.level, 1);
    assert!(x.index.starts_with("w=1 "), "{}", x.index);
}
