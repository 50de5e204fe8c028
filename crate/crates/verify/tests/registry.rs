use simpforge_hopf::{check_hopf_axioms, pure_char_check};
use simpforge_verify::manifest::MANIFEST;
use simpforge_verify::registry::{HOPF_AXIOM_NAMES, PURE_CHAR_NAMES};
use simpforge_verify::{list_checks, registry, Bounds, DPolicy, RunOptions, Suite};
use std::collections::{BTreeMap, BTreeSet};

#[test]
fn every_family_has_exactly_one_manifest_entry() {
    let mut owner: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for e in MANIFEST {
        for f in e.families {
            owner.entry(f).or_default().push(e.op);
        }
    }
    let doubled: Vec<_> = owner.iter().filter(|(_, ops)| ops.len() > 1).collect();
    assert!(doubled.is_empty(), "families claimed twice: {doubled:?}");

    let registered: BTreeSet<String> = registry(&Suite::ORDER, &Bounds::default()).iter().map(|s| s.family()).collect();
    let orphans: Vec<_> = registered.iter().filter(|f| !owner.contains_key(f.as_str())).collect();
    assert!(orphans.is_empty(), "families without an operation: {orphans:?}");
    let unused: Vec<_> = owner.keys().filter(|f| !registered.contains(**f)).collect();
    assert!(unused.is_empty(), "manifest families never registered: {unused:?}");
}

#[test]
fn ids_are_unique_and_listed_with_anchors() {
    let listed = list_checks(&Suite::ORDER);
    let ids: BTreeSet<_> = listed.iter().map(|(id, _)| id.as_str()).collect();
    assert_eq!(ids.len(), listed.len());
    assert!(listed.iter().all(|(_, anchor)| !anchor.is_empty()));
    for id in ["h_tilde.simplicial.n=2", "hopf.purechar.comult", "simplex.relations.n=4", "models.aux.phi.c=1.literal"] {
        assert!(ids.contains(id), "{id} is not registered");
    }
    assert!(ids.iter().any(|id| id.starts_with("masterK.diagram.")));
}

#[test]
fn hopf_name_lists_match_the_crate() {
    let axioms: Vec<String> = check_hopf_axioms(2).unwrap().into_iter().map(|c| c.name).collect();
    assert_eq!(axioms, HOPF_AXIOM_NAMES);
    let pure: Vec<String> = pure_char_check(2, 1).unwrap().into_iter().map(|c| c.name).collect();
    assert_eq!(pure, PURE_CHAR_NAMES);
}

#[test]
fn registration_does_not_depend_on_bounds_below_the_defaults() {
    let small = Bounds { p_max: 2, n_max: 1, mk_max: 0, w_max: 0, d_policy: DPolicy::Exhaustive };
    let a: Vec<String> = registry(&Suite::ORDER, &small).into_iter().map(|s| s.id).collect();
    let b: Vec<String> = registry(&Suite::ORDER, &Bounds::default()).into_iter().map(|s| s.id).collect();
    assert_eq!(a, b);
}

#[test]
fn larger_bounds_register_more_instances() {
    let big = Bounds { n_max: 5, ..Bounds::default() };
    let n = registry(&[Suite::Simplex], &big).len();
    assert!(n > registry(&[Suite::Simplex], &Bounds::default()).len());
}

#[test]
fn suites_filter_and_keep_order() {
    let specs = registry(&[Suite::Hopf, Suite::Simplex], &Bounds::default());
    let first_hopf = specs.iter().position(|s| s.suite == Suite::Hopf).unwrap();
    assert!(specs[..first_hopf].iter().all(|s| s.suite == Suite::Simplex));
    assert!(specs[first_hopf..].iter().all(|s| s.suite == Suite::Hopf));
}

#[test]
fn pure_char_flag_restricts_the_hopf_suite() {
    let mut opts = RunOptions::new(vec![Suite::Hopf], Bounds::default());
    opts.pure_char = true;
    let ids: Vec<String> = opts.checks().into_iter().map(|s| s.id).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.starts_with("hopf.purechar") || id.starts_with("hopf.genericpi")));
}

#[test]
fn sampled_d_vectors_are_skipped_not_dropped() {
    let sampled = Bounds { d_policy: DPolicy::Sample { count: 1, seed: 3 }, ..Bounds::default() };
    let all = registry(&[Suite::Homotopy], &Bounds::default());
    let some = registry(&[Suite::Homotopy], &sampled);
    assert_eq!(all.len(), some.len());
    let unsampled = some.iter().filter(|s| !s.needs.within(&sampled)).count();
    assert!(unsampled > 0);
    assert!(all.iter().all(|s| s.needs.within(&Bounds::default())));
}
