use num_rational::Ratio;
use solcob_core::dinv::*;
use solcob_core::manifolds::{DihedralManifold, SolManifold};

fn q(n: i64, d: i64) -> Ratio<i64> {
    Ratio::new(n, d)
}

fn sorted(mut v: Vec<Ratio<i64>>) -> Vec<Ratio<i64>> {
    v.sort();
    v
}

#[test]
fn dihedral_values() {
    assert_eq!(sorted(d_dihedral(&4i64).to_vec()), sorted(vec![q(0, 1), q(0, 1), q(3, 2), q(1, 2)]));
    assert_eq!(sorted(d_dihedral(&0i64).to_vec()), sorted(vec![q(0, 1), q(0, 1), q(1, 2), q(-1, 2)]));
    assert_eq!(sorted(d_dihedral(&2i64).to_vec()), sorted(vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)]));
}

#[test]
fn lescop_and_casson_walker() {
    let d8 = Manifold::Dihedral(DihedralManifold::d_n(8i64));
    let m25 = Manifold::Sol(SolManifold::m_ab(2i64, 5));
    let d0 = Manifold::Dihedral(DihedralManifold::d_n(0i64));
    assert_eq!(lescop(&d8).unwrap(), q(-2, 1));
    assert_eq!(lescop(&m25).unwrap(), q(3, 1));
    assert_eq!(lescop(&d0).unwrap(), q(0, 1));
    assert_eq!(casson_walker(&d8).unwrap(), q(-1, 2));
    assert_eq!(casson_walker(&m25).unwrap(), q(3, 16));
    assert_eq!(casson_walker(&d0).unwrap(), q(0, 1));
}

#[test]
fn sum_reports() {
    let r = d_sum_check(&2i64, &2).unwrap();
    assert!(r.passed);
    assert_eq!(r.total, q(0, 1));
    assert_eq!(d_sum_check(&2i64, &4).unwrap().total, q(-4, 1));
    let r = d_sum_check(&0i64, &1).unwrap();
    assert!(r.passed && r.degenerate);
}

#[test]
fn profile_json() {
    let j = d_sol_profile(&2i64, &3).unwrap().to_json();
    assert_eq!(j["q_sum"], "-1");
    assert_eq!(j["total"], "-2");
    assert_eq!(j["S_b"], serde_json::json!(["-5/4", "-5/4", "-1/4", "-1/4"]));
}
