use proptest::prelude::*;
use simpforge_core::simplex::MonotoneMap;
use simpforge_core::{Polynomial, VarId};
use simpforge_homotopy::{iota_map, HomotopyParams, Homotopies, Master};
use simpforge_models::{DVector, Formulas, Mutation};

/// `t_s` in the first factor of `k_A^{⊗c}(1)` at level `p`, with its boundary aliases.
fn t_var(s: u32, p: u32) -> Polynomial {
    match s {
        0 => Polynomial::pi(),
        s if s == p + 1 => Polynomial::zero(),
        s => Polynomial::var(VarId::t(s, 1)),
    }
}

fn cumulative(beta: &[u32], u: i64) -> u32 {
    beta.iter().filter(|&&b| i64::from(b) <= u).count() as u32
}

fn t_factor_oracle(n: u32, m: u32, k: u32, r: u32, beta: &[u32]) -> Polynomial {
    let p = beta.len() as u32 - 1;
    let mut acc = t_var(cumulative(beta, i64::from(r) - 1), p);
    for i in r..k {
        acc = acc * (Polynomial::pi() - t_var(cumulative(beta, i64::from(i)), p));
    }
    acc * Polynomial::pi_pow(n - m - k)
}

fn beta() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (0u32..4, 0u32..4).prop_flat_map(|(k, p)| {
        (Just(k), proptest::collection::vec(0..=k, p as usize + 1)).prop_map(|(k, mut v)| {
            v.sort_unstable();
            (k, v)
        })
    })
}

/// Apply `δ_{d_s}` for `s = a+1..=b` to every point of `[a]`, without the library.
fn iota_oracle(a: u32, b: u32, d: &[u32]) -> Vec<u32> {
    (0..=a)
        .map(|x| (a + 1..=b).fold(x, |y, s| if y < d[(s - a - 1) as usize] { y } else { y + 1 }))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn t_factor_matches_direct_expansion((k, b) in beta(), m in 0u32..3, extra in 0u32..2, r_seed in 0u32..8) {
        let r = r_seed % (k + 1);
        let n = m + k + extra;
        let alpha = MonotoneMap::new(b.clone(), k).unwrap();
        let hs = Homotopies::new(Formulas::default());
        let got = hs.t_factor(n, m, k, r, &alpha).unwrap();
        prop_assert_eq!(got, t_factor_oracle(n, m, k, r, &b));
    }

    #[test]
    fn iota_is_a_composite_of_cofaces(a in 0u32..3, len in 0u32..3, seed in any::<u64>()) {
        let all = DVector::all(a + 1, len);
        let d = &all[(seed % all.len() as u64) as usize];
        let map = iota_map(a, a + len, d).unwrap();
        prop_assert_eq!(map.values().to_vec(), iota_oracle(a, a + len, d.values()));
        prop_assert_eq!(map.target(), a + len);
    }
}

#[test]
fn t_factor_rejects_bad_parameters() {
    let hs = Homotopies::new(Formulas::default());
    let beta = MonotoneMap::identity(1);
    assert!(hs.t_factor(0, 1, 1, 0, &beta).is_err());
    assert!(hs.t_factor(3, 1, 1, 2, &beta).is_err());
    assert!(hs.t_factor(3, 1, 2, 0, &beta).is_err());
}

#[test]
fn params_validate_and_step_down() {
    let d = DVector::new(2, vec![1, 3]).unwrap();
    let q = HomotopyParams::new(4, 1, 2, d).unwrap();
    let prev = q.previous().unwrap();
    assert_eq!((prev.n, prev.m, prev.k), (3, 1, 1));
    assert_eq!(prev.d.values(), &[1]);
    assert_eq!(q.to_string(), "m=1.k=2.n=4.d=[1,3]");
    assert!(HomotopyParams::new(2, 1, 2, DVector::new(2, vec![0, 0]).unwrap()).is_err());
    assert!(HomotopyParams::new(4, 1, 2, DVector::new(1, vec![0, 0]).unwrap()).is_err());
    let q0 = HomotopyParams::new(2, 1, 0, DVector::new(2, vec![]).unwrap()).unwrap();
    assert!(q0.previous().is_err());
}

#[test]
fn small_homotopies_are_simplicial_with_correct_vertices() {
    let hs = Homotopies::new(Formulas::default());
    for n in 1..=3 {
        hs.h_small(n).unwrap().certify(3).unwrap();
        hs.k_small(n).unwrap().certify(3).unwrap();
        for i in 0..n {
            hs.h_small_vertex_check(n, i, 3).unwrap_or_else(|c| panic!("n={n} i={i}: {c}"));
        }
    }
}

#[test]
fn a_master_homotopy_end_to_end() {
    let hs = Homotopies::new(Formulas::default());
    let q = HomotopyParams::new(3, 1, 1, DVector::new(2, vec![2]).unwrap()).unwrap();
    for kind in [Master::H, Master::K] {
        hs.master(kind, &q).unwrap().certify(2).unwrap();
        for l in 0..=1 {
            hs.master_vertex_check(kind, &q, l, 2).unwrap_or_else(|c| panic!("{kind:?} l={l}: {c}"));
        }
        hs.master_diagram_check(kind, &q, 2).unwrap_or_else(|c| panic!("{kind:?}: {c}"));
    }
}

#[test]
fn mutations_break_the_matching_identity() {
    let rho = Homotopies::new(Formulas::mutated(Mutation::RhoSquared));
    let x = rho.h_tilde_vertex_check(3, 1, 1).unwrap_err();
    assert_eq!(x.level, 1);
    let dropped = Homotopies::new(Formulas::mutated(Mutation::DroppedSummand));
    assert!(dropped.h_tilde(2).unwrap().certify(2).is_err());
    let t = Homotopies::new(Formulas::mutated(Mutation::TExponent));
    let beta = MonotoneMap::new(vec![0], 0).unwrap();
    assert_eq!(t.t_factor(1, 0, 0, 0, &beta).unwrap(), Polynomial::pi_pow(3));
    let clean = Homotopies::new(Formulas::default());
    assert_eq!(clean.t_factor(1, 0, 0, 0, &beta).unwrap(), Polynomial::pi_pow(2));
}
