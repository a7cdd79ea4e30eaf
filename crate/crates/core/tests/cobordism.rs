use solcob_core::abelian::{CyclicProduct, GroupHom, Matrix};
use solcob_core::cobordism::*;
use solcob_core::manifolds::SolManifold;
use solcob_core::Error;

#[test]
fn every_row_matches_jointly() {
    for p in extended_table_samples() {
        let m = SolManifold::new(p[0], p[1], p[2], p[3]).unwrap();
        let row = match_row(&m).unwrap();
        assert!(row.matched(), "{row}");
        assert!(row.to_json()["matched"].as_bool().unwrap());
    }
}

#[test]
fn stored_diagrams() {
    let d = h2_diagram::<i64>(0, 0).unwrap();
    let w = CyclicProduct::from_i64(&[4, 2]);
    assert_eq!(
        d.iota_w_minus_b,
        GroupHom::new(w.clone(), CyclicProduct::from_i64(&[4, 4]), Matrix::from_i64(&[[1, 0], [0, 2]])).unwrap()
    );
    assert_eq!(d.iota_d_minus_b, GroupHom::new(w, CyclicProduct::from_i64(&[2, 2]), Matrix::identity(2)).unwrap());
    let d = h2_diagram::<i64>(0, 1).unwrap();
    assert_eq!(d.iota_d_minus_b.matrix(), &Matrix::from_i64(&[[0, 1]]));
    assert_eq!(h2_diagram::<i64>(1, 0).unwrap_err(), Error::Parity { a: 1, b: 0 });
    for case in ParityCase::ALL {
        assert!(check_diagram(H2Constants::standard(case).build::<i64>(case).unwrap()).unwrap().passed());
    }
}

#[test]
fn rational_balls() {
    let r = rational_ball_chain(&SolManifold::m_ab(2i64, 3)).unwrap();
    assert!(r.bounds_rational_ball());
    assert!(r.to_string().contains("bounds a rational homology ball"));
    let r = rational_ball_chain(&SolManifold::new(2i64, 4, 3, 3).unwrap()).unwrap();
    assert!(r.is_rational_cobordism() && !r.bounds_rational_ball());
    assert_eq!(r.lens_order, 3);
    let r = rational_ball_chain(&SolManifold::m_ab(0i64, 2)).unwrap();
    assert!(r.degenerate && r.bounds_rational_ball());
}
