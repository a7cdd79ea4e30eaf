use num_integer::Integer;
use num_rational::Ratio;
use solcob_core::abelian::Matrix;
use solcob_core::contfrac::{cf_matrix, evaluate, expand, splice_chain};
use solcob_core::Error;

#[test]
fn expansions() {
    let e = expand(&-3i64, &1).unwrap();
    assert_eq!((e.head, e.tail.clone()), (-3, vec![]));
    let e = expand(&-7i64, &2).unwrap();
    assert_eq!((e.head, e.tail.clone()), (-3, vec![2]));
    assert_eq!(e.evaluate(), Ratio::new(-7, 2));
    let e = expand(&5i64, &3).unwrap();
    assert_eq!((e.head, e.tail.clone()), (2, vec![3]));
    assert_eq!(evaluate(&[2i64, 3]), Ratio::new(5, 3));
}

#[test]
fn expansion_round_trips() {
    for p in -40i64..=40 {
        for q in 1i64..=15 {
            if p.gcd(&q) != 1 {
                assert!(expand(&p, &q).is_err());
                continue;
            }
            let e = expand(&p, &q).unwrap();
            assert_eq!(e.evaluate(), Ratio::new(p, q));
            assert!(e.tail.iter().all(|&x| x >= 2));
        }
    }
}

#[test]
fn matrix_words() {
    assert_eq!(cf_matrix::<i64>(&[]).product, Matrix::identity(2));
    assert_eq!(cf_matrix(&[7i64]).product, Matrix::from_i64(&[[7, -1], [1, 0]]));
    assert_eq!(cf_matrix(&[2i64, 3]).product, Matrix::from_i64(&[[5, -2], [3, -1]]));
}

#[test]
fn splice_chains() {
    let chain = splice_chain(&1i64, &2, &1, &3).unwrap();
    assert!(chain.gluing_identity_holds(&1, &2, &1, &3));
    assert!(chain.closed_formula_agrees);
    assert!(matches!(splice_chain(&1i64, &2, &1, &2), Err(Error::Determinant { .. })));
    assert!(matches!(splice_chain(&0i64, &5, &1, &1), Err(Error::Degenerate(_))));
}
