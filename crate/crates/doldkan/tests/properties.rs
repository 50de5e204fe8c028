use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use simpforge_core::salg::Morphism;
use simpforge_doldkan::{
    assemble, elementary_divisors, homology, homology_all, induced_map_on_homology, smith, AbelianGroup, DenseMatrix,
    SparseMatrix, Weights,
};
use simpforge_models::maps::{can_map, model};
use simpforge_models::{Formulas, ModelId};
use std::collections::BTreeMap;

fn sparse(rows: usize, cols: usize, entries: &[i64]) -> SparseMatrix {
    let columns = (0..cols)
        .map(|c| {
            (0..rows)
                .filter(|&r| entries[c * rows + r] != 0)
                .map(|r| (r, BigInt::from(entries[c * rows + r])))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    SparseMatrix::from_columns(rows, columns)
}

fn transpose(a: &SparseMatrix) -> SparseMatrix {
    let mut columns = vec![BTreeMap::new(); a.rows()];
    for c in 0..a.cols() {
        for (r, v) in a.column(c) {
            columns[*r].insert(c, v.clone());
        }
    }
    SparseMatrix::from_columns(a.cols(), columns)
}

fn matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -6i64..=6], r * c).prop_map(move |e| sparse(r, c, &e))
    })
}

fn with_perms() -> impl Strategy<Value = (SparseMatrix, Vec<usize>, Vec<usize>)> {
    matrix().prop_flat_map(|m| {
        let rows = Just((0..m.rows()).collect::<Vec<_>>()).prop_shuffle();
        let cols = Just((0..m.cols()).collect::<Vec<_>>()).prop_shuffle();
        (Just(m), rows, cols)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divisors_ignore_basis_order((m, rp, cp) in with_perms()) {
        prop_assert_eq!(elementary_divisors(&m.permuted(&rp, &cp)), elementary_divisors(&m));
        prop_assert_eq!(elementary_divisors(&transpose(&m)), elementary_divisors(&m));
    }

    #[test]
    fn smith_transforms_diagonalize(m in matrix()) {
        let a = m.to_dense();
        let s = smith(&a);
        let d = s.p.mul(&a).mul(&s.q);
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let want = if r == c && r < s.rank() { s.divisors[r].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(r, c), &want);
            }
        }
        prop_assert_eq!(s.p.mul(&s.p_inv), DenseMatrix::identity(a.rows()));
        prop_assert_eq!(s.q.mul(&s.q_inv), DenseMatrix::identity(a.cols()));
        for w in s.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(s.divisors, elementary_divisors(&m));
    }
}

#[test]
fn known_divisors() {
    let m = sparse(2, 2, &[2, 6, 4, 8]);
    assert_eq!(elementary_divisors(&m), vec![BigInt::from(2), BigInt::from(4)]);
    let m = sparse(3, 1, &[0, 0, 0]);
    assert!(elementary_divisors(&m).is_empty());
}

#[test]
fn boundaries_square_to_zero_on_the_catalogue() {
    for id in ModelId::catalogue().into_iter().filter(|id| id.factors() <= 2) {
        let p = id.build().unwrap();
        for w in 0..=3 {
            let cx = assemble(&p, &Weights::PerChain, w, 3).unwrap();
            cx.check_d_squared().unwrap_or_else(|c| panic!("{id} w={w}: {c}"));
        }
    }
}

#[test]
fn bar_construction_is_acyclic_above_degree_zero() {
    let p = ModelId::BarAtA.build().unwrap();
    for w in 0..=4 {
        let cx = assemble(&p, &Weights::PerChain, w, 4).unwrap();
        let hs = homology_all(&cx);
        assert_eq!(hs[0], AbelianGroup::free(1), "w={w}");
        assert!(hs[1..].iter().all(AbelianGroup::is_zero), "w={w}: {hs:?}");
    }
}

#[test]
fn identity_induces_identity() {
    let f = Morphism::identity(model(ModelId::KaTensor { n: 2, m: 1 }).unwrap());
    for w in 0..=2 {
        for q in 0..=1 {
            let h = induced_map_on_homology(&f, &Weights::PerChain, w, q).unwrap();
            assert!(h.is_iso());
            assert_eq!(h.matrix, DenseMatrix::identity(h.source.rank));
        }
    }
}

#[test]
fn can_is_the_quotient_on_pi0() {
    let fm = Formulas::default();
    let f = can_map(2, 1, 1, &fm).unwrap();
    let h0 = induced_map_on_homology(&f, &Weights::PerChain, 0, 0).unwrap();
    assert!(h0.is_iso());
    assert!(h0.matrix.get(0, 0).is_one());
    let h1 = induced_map_on_homology(&f, &Weights::PerChain, 1, 0).unwrap();
    assert_eq!((h1.source.rank, h1.target.rank), (1, 0));
    let p = ModelId::KaM(2).build().unwrap();
    let cx = assemble(&p, &Weights::PerChain, 1, 2).unwrap();
    assert_eq!(homology(&cx, 0).unwrap(), AbelianGroup::free(1));
}
