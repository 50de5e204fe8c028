use num_bigint::BigInt;
use proptest::prelude::*;
use simpforge_core::simplex::{compose, delta, enumerate_maps, s_alpha, s_alpha_transformation_check, sigma};
use simpforge_core::{Monomial, MonotoneMap, Polynomial, VarId};
use std::collections::{BTreeMap, BTreeSet};

fn pool() -> Vec<VarId> {
    let lab = MonotoneMap::new(vec![0, 1], 1).unwrap();
    vec![VarId::t(1, 1), VarId::t(2, 1), VarId::u(1, 2), VarId::t(1, 2).with_labels(vec![lab])]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..3, proptest::collection::vec(0u32..3, 4)).prop_map(|(pi, es)| {
        Monomial::from_parts(pi, pool().into_iter().zip(es))
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(), -5i64..=5), 0..5)
        .prop_map(|ts| Polynomial::from_terms(ts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn substitution() -> impl Strategy<Value = BTreeMap<VarId, Polynomial>> {
    proptest::collection::vec(proptest::option::of(poly()), 4).prop_map(|imgs| {
        pool().into_iter().zip(imgs).filter_map(|(v, p)| p.map(|p| (v, p))).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!((&p + &q) + r.clone(), &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q) * r.clone(), &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
    }

    #[test]
    fn substitution_is_a_ring_map(p in poly(), q in poly(), s in substitution()) {
        prop_assert_eq!((&p * &q).substitute(&s), &p.substitute(&s) * &q.substitute(&s));
        prop_assert_eq!((&p + &q).substitute(&s), &p.substitute(&s) + &q.substitute(&s));
    }

    #[test]
    fn substitution_composes(p in poly(), s in substitution(), t in substitution()) {
        let both: BTreeMap<VarId, Polynomial> = pool().into_iter().map(|v| {
            let img = s.get(&v).cloned().unwrap_or_else(|| Polynomial::var(v.clone()));
            (v, img.substitute(&t))
        }).collect();
        prop_assert_eq!(p.substitute(&s).substitute(&t), p.substitute(&both));
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let back: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn weight_is_homogeneous_for_monomials(m in monomial(), t in 1u32..4) {
        let p = Polynomial::from_term(m.clone(), BigInt::from(1));
        prop_assert_eq!(p.weight(t), Some(m.weight(t)));
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn enumeration_cardinality_against_brute_force() {
    for p in 0..=4u32 {
        for n in 0..=4u32 {
            let listed = enumerate_maps(p, n);
            let mut brute = BTreeSet::new();
            let total = (n as u64 + 1).pow(p + 1);
            for code in 0..total {
                let mut c = code;
                let vals: Vec<u32> = (0..=p).map(|_| { let v = (c % (n as u64 + 1)) as u32; c /= n as u64 + 1; v }).collect();
                if vals.windows(2).all(|w| w[0] <= w[1]) {
                    brute.insert(vals);
                }
            }
            assert_eq!(listed.len() as u64, binomial((n + p + 1) as u64, (p + 1) as u64));
            assert_eq!(listed.len(), brute.len());
            let as_set: BTreeSet<Vec<u32>> = listed.iter().map(|m| m.values().to_vec()).collect();
            assert_eq!(as_set, brute);
            assert!(listed.windows(2).all(|w| w[0].values() < w[1].values()));
        }
    }
}

/// A word of cofaces and codegeneracies, applied right to left.
#[derive(Debug)]
enum Letter {
    Delta(u32, u32),
    Sigma(u32, u32),
}

fn decompose(alpha: &MonotoneMap) -> Vec<Letter> {
    let mut word = Vec::new();
    let mut vals = alpha.values().to_vec();
    let mut sigmas = Vec::new();
    while let Some(j) = vals.windows(2).position(|w| w[0] == w[1]) {
        let p = vals.len() as u32 - 1;
        sigmas.push(Letter::Sigma(p - 1, j as u32));
        vals.remove(j + 1);
    }
    let mut n = alpha.target();
    let mut deltas = Vec::new();
    while let Some(i) = (0..=n).find(|i| !vals.contains(i)) {
        deltas.push(Letter::Delta(n, i));
        for v in &mut vals {
            if *v > i {
                *v -= 1;
            }
        }
        n -= 1;
    }
    word.extend(deltas);
    word.extend(sigmas.into_iter().rev());
    word
}

fn evaluate(word: &[Letter], p: u32) -> MonotoneMap {
    let mut acc = MonotoneMap::identity(p);
    for l in word.iter().rev() {
        let g = match *l {
            Letter::Delta(n, i) => delta(n, i).unwrap(),
            Letter::Sigma(n, i) => sigma(n, i).unwrap(),
        };
        acc = compose(&g, &acc).unwrap();
    }
    acc
}

#[test]
fn every_map_is_a_word_in_cofaces_and_codegeneracies() {
    for p in 0..=4 {
        for n in 0..=4 {
            for alpha in enumerate_maps(p, n) {
                let w = decompose(&alpha);
                assert_eq!(evaluate(&w, p), alpha, "{alpha} via {w:?}");
            }
        }
    }
}

#[test]
fn counting_function_case_formulas_exhaustive() {
    for p in 0..=4 {
        for n in 0..=4 {
            for alpha in enumerate_maps(p, n) {
                assert_eq!(s_alpha(&alpha, n as i64).unwrap(), p + 1);
                for i in 0..=p {
                    s_alpha_transformation_check(&alpha, i).unwrap();
                }
            }
        }
    }
}
