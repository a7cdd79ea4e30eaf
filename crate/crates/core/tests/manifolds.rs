use num_rational::Ratio;
use solcob_core::manifolds::{h1_dihedral, h1_sol, normalize, normalize_ab, DihedralManifold, SolManifold};
use solcob_core::{Dihedral, Error, Sol};

#[test]
fn dihedral_h1() {
    for ((b, c), want) in [((2i64, 1i64), "Z/2 + Z/2"), ((3, 1), "Z/4"), ((4, 3), "Z/2 + Z/6")] {
        let h = h1_dihedral(&DihedralManifold::new(b, c).unwrap());
        assert!(h.agrees());
        assert_eq!(h.computed.to_string(), want);
    }
}

#[test]
fn sol_h1() {
    let h = h1_sol(&SolManifold::new(1i64, 1, 1, 2).unwrap());
    assert!(h.agrees());
    assert_eq!(h.computed.to_string(), "Z/2 + Z/2 + Z/4");
    assert_eq!(h1_sol(&SolManifold::new(2i64, 2, 1, 5).unwrap()).computed.to_string(), "Z/4 + Z/4");
}

#[test]
fn big_integer_aliases() {
    let m: Sol = SolManifold::m_ab(2.into(), 3.into());
    assert_eq!(m.h1().to_string(), "Z/4 + Z/4");
    let d: Dihedral = DihedralManifold::new(4.into(), 3.into()).unwrap();
    assert_eq!(d.h1().to_string(), "Z/2 + Z/6");
}

#[test]
fn normal_forms() {
    assert_eq!(normalize_ab(&2i64, &2), (-2, -2));
    assert_eq!(normalize_ab(&3i64, &5), normalize_ab(&-5, &-3));
    let m = SolManifold::new(2i64, 1, -1, -3).unwrap();
    let n = normalize(&m);
    assert!(*n.c() > 0);
    assert_eq!(n.h1(), m.h1());
}

#[test]
fn euler_numbers() {
    let e = |b: i64, c: i64| DihedralManifold::new(b, c).unwrap().euler_number().unwrap();
    assert_eq!(e(4, 1), Ratio::new(1, 4));
    assert_eq!(e(1, 1), Ratio::from(1));
    assert_eq!(e(6, 5), Ratio::new(5, 6));
    assert_eq!(DihedralManifold::new(0i64, 1).unwrap().euler_number(), Err(Error::ZeroFiber));
}

#[test]
fn splice_graphs() {
    let g = SolManifold::new(1i64, 2, 1, 3).unwrap().splice_presentation().unwrap();
    assert_eq!(&g.weights[..3], &[2, -2, 0]);
    assert_eq!(&g.weights[g.weights.len() - 3..], &[0, 2, -2]);
    assert!(g.to_dot().starts_with("graph plumbing {"));
    assert!(matches!(SolManifold::m_ab(0i64, 3).splice_presentation(), Err(Error::Degenerate(_))));
}
