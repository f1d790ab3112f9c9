mod common;

use adelink::linalg::{cokernel, inertia, kernel_mod2, rank_mod2, smith_normal_form, IntMatrix};
use adelink::plumbing::{dynkin_graph, DynkinLabel};
use common::{big, check_smith, oracle_cokernel_factors, oracle_determinant, oracle_inertia};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(big).collect()).unwrap())
    })
}

fn square(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n)
            .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(big).collect()).unwrap())
    })
}

fn symmetric(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    m[(i, j)] = big(v[i * n + j]);
                    m[(j, i)] = big(v[i * n + j]);
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn smith_identities(a in matrix(5, 9)) {
        prop_assert_eq!(check_smith(&a), Ok(()));
    }

    #[test]
    fn smith_rank_matches_determinant(a in square(5, 6)) {
        let d = smith_normal_form(&a);
        let full = d.rank() == a.rows();
        prop_assert_eq!(full, oracle_determinant(&a) != big(0));
    }

    #[test]
    fn determinant_matches_oracle(a in square(6, 20)) {
        prop_assert_eq!(a.determinant().unwrap(), oracle_determinant(&a));
    }

    #[test]
    fn cokernel_matches_coset_enumeration(a in square(4, 3)) {
        let det = oracle_determinant(&a);
        let d = det.magnitude().to_u64().unwrap();
        prop_assume!(d > 0 && d <= 60);
        let g = cokernel(&a);
        let got: Vec<u64> = g.invariant_factors().iter().map(|x| x.to_u64().unwrap()).collect();
        prop_assert_eq!(g.free_rank(), 0);
        prop_assert_eq!(got, oracle_cokernel_factors(&a));
    }

    #[test]
    fn inertia_matches_descartes(a in symmetric(6, 5)) {
        let i = inertia(&a).unwrap();
        prop_assert_eq!((i.positive, i.negative, i.zero), oracle_inertia(&a));
    }

    #[test]
    fn mod2_rank_nullity(a in matrix(6, 3)) {
        let kernel = kernel_mod2(&a);
        prop_assert_eq!(kernel.len() + rank_mod2(&a), a.cols());
        for x in &kernel {
            for i in 0..a.rows() {
                let s: i64 = (0..a.cols()).filter(|&j| x[j]).map(|j| a[(i, j)].to_i64().unwrap()).sum();
                prop_assert_eq!(s.rem_euclid(2), 0);
            }
        }
    }
}

#[test]
fn dynkin_forms_are_negative_definite() {
    for label in DynkinLabel::all_up_to(20) {
        let a = dynkin_graph(label).intersection_matrix();
        let n = a.rows();
        assert_eq!(oracle_inertia(&a), (0, n, 0), "{label}");
        assert!(inertia(&a).unwrap().is_negative_definite(), "{label}");
    }
}

#[test]
fn dynkin_cokernels_match_oracle() {
    for label in DynkinLabel::all_up_to(12) {
        let a = dynkin_graph(label).intersection_matrix();
        let got: Vec<u64> = cokernel(&a).invariant_factors().iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(got, oracle_cokernel_factors(&a), "{label}");
    }
}
