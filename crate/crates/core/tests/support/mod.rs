//! Property checks shared by the proptest suites and the acceptance run.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use solcob_core::abelian::{smith_normal_form, CyclicProduct, GroupHom, Matrix};
use solcob_core::classify::signature;
use solcob_core::dinv::{d_dihedral, d_sol_profile};
use solcob_core::manifolds::{normalize_ab, SolManifold};
use solcob_core::spinc::{conjugation_respects_classes, extension_data, partition};

pub fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-30i64..=30, c), r))
}

pub fn square_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-12i64..=12, n), n))
}

/// Source orders, target orders and raw entries of a homomorphism.
pub fn hom_strategy() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<Vec<i64>>)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(s, t)| {
        (
            prop::collection::vec(1i64..=12, s),
            prop::collection::vec(1i64..=12, t),
            prop::collection::vec(prop::collection::vec(-20i64..=20, s), t),
        )
    })
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

pub fn ab_strategy() -> impl Strategy<Value = (i64, i64)> {
    (-40i64..=40, -40i64..=40)
}

fn big(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
}

pub fn snf_is_valid(rows: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let p = big(rows);
    let s = smith_normal_form(&p);
    prop_assert!(s.verify());
    Ok(())
}

/// For square input `|det P|` is the product of the invariant factors.
pub fn snf_determinant(rows: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let p = big(rows);
    let s = smith_normal_form(&p);
    let product: BigInt = s.d.diagonal_entries().iter().product();
    prop_assert_eq!(p.determinant().unwrap().abs(), product);
    Ok(())
}

/// Makes raw entries well defined: the `(i, j)` entry becomes a multiple of
/// `n_i / gcd(m_j, n_i)`.
pub fn well_defined_hom(source: &[i64], target: &[i64], raw: &[Vec<i64>]) -> GroupHom<i64> {
    use num_integer::Integer;
    let rows: Vec<Vec<i64>> = raw
        .iter()
        .zip(target)
        .map(|(row, &n)| row.iter().zip(source).map(|(&k, &m)| k * (n / m.gcd(&n))).collect())
        .collect();
    GroupHom::new(CyclicProduct::from_i64(source), CyclicProduct::from_i64(target), Matrix::from_rows(rows).unwrap())
        .unwrap()
}

pub fn ext_is_involution(source: Vec<i64>, target: Vec<i64>, raw: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let h = well_defined_hom(&source, &target, &raw);
    let dual = h.ext_dual().unwrap();
    prop_assert_eq!(dual.source(), h.target());
    prop_assert_eq!(dual.ext_dual().unwrap(), h);
    Ok(())
}

/// Ext reverses composition: `(g h)^ = h^ g^`.
pub fn ext_reverses_composition(orders: Vec<i64>, raw: Vec<Vec<i64>>) -> Result<(), TestCaseError> {
    let n = orders.len();
    let square: Vec<Vec<i64>> = raw.iter().take(n).map(|r| r.iter().cycle().take(n).copied().collect()).collect();
    if square.len() < n {
        return Ok(());
    }
    let h = well_defined_hom(&orders, &orders, &square);
    let g = h.compose(&h).unwrap();
    let lhs = g.ext_dual().unwrap();
    let rhs = h.ext_dual().unwrap().compose(&h.ext_dual().unwrap()).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// `D_{-n} = -D_n` reverses every d-invariant.
pub fn dihedral_conjugation_symmetry(n: i64) -> Result<(), TestCaseError> {
    let mut plus: Vec<Ratio<i64>> = d_dihedral(&n).iter().map(|x| -x).collect();
    let mut minus = d_dihedral(&-n).to_vec();
    plus.sort();
    minus.sort();
    prop_assert_eq!(plus, minus);
    Ok(())
}

/// Conjugation keeps every class and negates `c1`.
pub fn conjugation_preserves_classes(a: i64, b: i64) -> Result<(), TestCaseError> {
    let (a, b) = if a % 2 != 0 && b % 2 == 0 { (-b, -a) } else { (a, b) };
    let part = partition(&a, &b).unwrap();
    let ext = extension_data(&a, &b).unwrap();
    prop_assert!(conjugation_respects_classes(&part, &ext.c1_theta).unwrap());
    Ok(())
}

/// `(a, b) -> (-b, -a)` swaps the two known blocks, keeps the rest and the
/// signature.
pub fn profile_orbit_invariance(a: i64, b: i64) -> Result<(), TestCaseError> {
    let x = signature(&a, &b).unwrap();
    let y = signature(&-b, &-a).unwrap();
    prop_assert_eq!(&x.h1, &y.h1);
    prop_assert_eq!(&x.total_sum, &y.total_sum);
    prop_assert_eq!(&x.self_conjugate_d, &y.self_conjugate_d);
    prop_assert_eq!(&x.blocks, &y.blocks);
    prop_assert_eq!(normalize_ab(&a, &b), normalize_ab(&-b, &-a));
    if let (Ok(p), Ok(q)) = (d_sol_profile(&a, &b), d_sol_profile(&-b, &-a)) {
        prop_assert_eq!(&p.s_b, &q.s_a);
        prop_assert_eq!(&p.s_a, &q.s_b);
        prop_assert_eq!(&p.q_sum, &q.q_sum);
    }
    prop_assert_eq!(SolManifold::m_ab(a, b).h1(), SolManifold::m_ab(-b, -a).h1());
    Ok(())
}
