use num_bigint::BigInt;
use solcob_core::abelian::{cokernel, induced_map, smith_normal_form, CyclicProduct, FinAbGroup, GroupHom, Matrix};
use solcob_core::manifolds::{DihedralManifold, SolManifold};
use solcob_core::{Error, IntMatrix};

fn group(free: usize, torsion: &[i64]) -> FinAbGroup<i64> {
    FinAbGroup::new(free, torsion.to_vec()).unwrap()
}

#[test]
fn identity_smith_form() {
    let s = smith_normal_form(&Matrix::<i64>::identity(2));
    assert_eq!(s.d, Matrix::identity(2));
    assert_eq!(s.f, Matrix::identity(2));
    assert_eq!(s.c, Matrix::identity(2));
}

#[test]
fn sol_presentation_diagonals() {
    let s = smith_normal_form(&SolManifold::new(1i64, 1, 1, 2).unwrap().presentation());
    assert_eq!(s.d.diagonal_entries(), vec![1, 2, 2, 4]);
    let s = smith_normal_form(&SolManifold::new(1i64, 2, 1, 3).unwrap().presentation());
    assert_eq!(s.d.diagonal_entries(), vec![1, 1, 4, 4]);
    assert!(s.verify());
}

#[test]
fn cokernels() {
    assert_eq!(cokernel(&Matrix::<i64>::zeros(1, 1)), group(1, &[]));
    assert_eq!(cokernel(&Matrix::from_i64(&[[-2, 0], [0, 0]])), group(1, &[2]));
    let d = DihedralManifold::new(4i64, 3).unwrap();
    assert_eq!(cokernel(&d.presentation()).to_string(), "Z/2 + Z/6");
}

#[test]
fn big_integer_cokernel() {
    let p: IntMatrix =
        Matrix::from_rows(vec![vec![BigInt::from(6), BigInt::from(0)], vec![BigInt::from(0), BigInt::from(10)]])
            .unwrap();
    assert_eq!(cokernel(&p).to_string(), "Z/2 + Z/30");
}

#[test]
fn identity_induced_map() {
    let p = Matrix::<i64>::from_i64(&[[4]]);
    let h = induced_map(&p, &p, &Matrix::identity(1)).unwrap();
    assert_eq!(h, GroupHom::identity(CyclicProduct::from_i64(&[4])));
}

#[test]
fn ill_defined_map_is_rejected() {
    let err =
        induced_map(&Matrix::<i64>::from_i64(&[[2]]), &Matrix::from_i64(&[[4]]), &Matrix::identity(1)).unwrap_err();
    assert_eq!(err, Error::WellDefinedness { column: 0 });
}

#[test]
fn ext_duals() {
    let z2 = CyclicProduct::<i64>::from_i64(&[2]);
    let z4 = CyclicProduct::<i64>::from_i64(&[4]);
    let times_two = GroupHom::new(z2.clone(), z4.clone(), Matrix::from_i64(&[[2]])).unwrap();
    let quotient = GroupHom::new(z4, z2.clone(), Matrix::from_i64(&[[1]])).unwrap();
    assert_eq!(times_two.ext_dual().unwrap(), quotient);

    let z44 = CyclicProduct::<i64>::from_i64(&[4, 4]);
    assert_eq!(GroupHom::identity(z44.clone()).ext_dual().unwrap(), GroupHom::identity(z44));
    let zero = GroupHom::new(z2.clone(), z2.clone(), Matrix::from_i64(&[[0]])).unwrap();
    assert_eq!(zero.ext_dual().unwrap(), zero);
}

#[test]
fn enumeration() {
    assert_eq!(group(0, &[2]).enumerate_elements(1 << 16).unwrap(), vec![vec![0], vec![1]]);
    assert_eq!(group(0, &[4, 4]).enumerate_elements(1 << 16).unwrap().len(), 16);
    assert_eq!(group(0, &[2, 2, 4]).enumerate_elements(1 << 16).unwrap().len(), 16);
    assert!(matches!(group(1, &[]).enumerate_elements(1 << 16), Err(Error::InfiniteGroup { .. })));
    assert!(matches!(group(0, &[1000, 1000]).enumerate_elements(1 << 16), Err(Error::TooLarge { .. })));
}
