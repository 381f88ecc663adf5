//! Property tests over random exact inputs.

mod common;

use hhkit_core::algebra::{make_incidence, make_monogenic, Bimodule};
use hhkit_core::cochain::{differential_squares_to_zero, hh_dims, HochschildComplex};
use hhkit_core::combinat::{order_complex, simplicial_cohomology};
use hhkit_core::monogenic::{self, companion, periodic_complex_dims, presentation};
use hhkit_core::{FieldSpec, Poly, SparseMatrix};
use proptest::prelude::*;

const P: i64 = 7;

/// Rank over F_7 by plain row reduction on residues.
fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(P)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..P).find(|&x| x * m[rank][c] % P == 1).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let k = m[r][c] * inv % P;
                for j in 0..cols {
                    m[r][j] = (m[r][j] - k * m[rank][j]).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
}

fn monic(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..4, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rank_matches_residue_elimination(rows in matrix()) {
        let m = SparseMatrix::from_i64(FieldSpec::Prime(P as u32), &rows);
        prop_assert_eq!(m.rank(), rank_mod_p(&rows));
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rational_rank_bounds_modular_rank(rows in matrix()) {
        let q = SparseMatrix::from_i64(FieldSpec::Rationals, &rows).rank();
        prop_assert!(q >= rank_mod_p(&rows));
    }

    #[test]
    fn product_rank_is_bounded(a in matrix(), seed in prop::collection::vec(-2i64..3, 36)) {
        let field = FieldSpec::Rationals;
        let cols = a[0].len();
        let b: Vec<Vec<i64>> = (0..cols).map(|i| (0..4).map(|j| seed[(i * 4 + j) % seed.len()]).collect()).collect();
        let (ma, mb) = (SparseMatrix::from_i64(field, &a), SparseMatrix::from_i64(field, &b));
        prop_assert!(ma.mul(&mb).rank() <= ma.rank().min(mb.rank()));
    }

    #[test]
    fn division_with_remainder(a in prop::collection::vec(-5i64..6, 0..8), b in monic(4), p in prop::sample::select(vec![0u32, 2, 3, 5])) {
        let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
        let (a, b) = (Poly::from_i64s(field, &a), Poly::from_i64s(field, &b));
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = Poly::gcd_monic(&a, &b).unwrap();
        prop_assert!(a.rem(&g).unwrap().is_zero() && b.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn closed_form_matches_periodic_complex(c in monic(5), p in prop::sample::select(vec![0u32, 2, 3, 5, 7])) {
        let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
        let f = Poly::from_i64s(field, &c);
        let x = companion(&f);
        let closed = monogenic::hh_dims(&presentation(&f).unwrap(), 5);
        prop_assert_eq!(closed, periodic_complex_dims(&f, &x, &x, 5).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn monogenic_oracle_and_complex(c in monic(3), p in prop::sample::select(vec![0u32, 2, 3])) {
        let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
        let f = Poly::from_i64s(field, &c);
        let alg = make_monogenic(&f).unwrap();
        prop_assert!(differential_squares_to_zero(&HochschildComplex::new(&alg, &Bimodule::regular(&alg), 4).unwrap()));
        prop_assert_eq!(hh_dims(&alg, 4).unwrap(), monogenic::hh_dims(&presentation(&f).unwrap(), 4));
    }

    #[test]
    fn incidence_cohomology_is_simplicial(n in 1usize..7, bits in prop::collection::vec(any::<bool>(), 15)) {
        let rel: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .zip(bits)
            .filter_map(|(pair, b)| b.then_some(pair))
            .collect();
        let x = common::poset_of(n, &rel);
        let field = FieldSpec::Prime(3);
        let hh = hh_dims(&make_incidence(&x, field), 3).unwrap();
        prop_assert_eq!(hh, simplicial_cohomology(&order_complex(&x), None, 3, field).unwrap());
    }
}
