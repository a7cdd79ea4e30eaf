use solcob_core::classify::*;

#[test]
fn homeomorphism() {
    assert!(homeomorphic(&3i64, &5, &-5, &-3));
    assert!(homeomorphic(&7i64, &-2, &7, &-2));
    assert!(!homeomorphic(&2i64, &4, &4, &2));
}

#[test]
fn cobordism_verdicts() {
    assert_eq!(cobordant(&2i64, &4, &4, &2).unwrap(), Verdict::Distinguished(Witness::TotalSum));
    assert_eq!(cobordant(&3i64, &5, &-5, &-3).unwrap(), Verdict::Homeomorphic);
    assert_eq!(cobordant(&2i64, &2, &6, &6).unwrap(), Verdict::Distinguished(Witness::BlockMatching));
}

#[test]
fn witnesses_are_valid() {
    for (a, b, c, d) in [(2i64, 4, 4, 2), (2, 2, 6, 6), (1, 1, 2, 2), (2, 1, 4, 3)] {
        let (x, y) = (signature(&a, &b).unwrap(), signature(&c, &d).unwrap());
        match cobordant(&a, &b, &c, &d).unwrap() {
            Verdict::Distinguished(Witness::H1) => assert_ne!(x.h1, y.h1),
            Verdict::Distinguished(Witness::TotalSum) => assert_ne!(x.total_sum, y.total_sum),
            Verdict::Distinguished(Witness::SelfConjugateD) => assert_ne!(x.self_conjugate_d, y.self_conjugate_d),
            Verdict::Distinguished(Witness::BlockMatching) => assert!(!x.blocks.matches(&y.blocks)),
            v => panic!("unexpected {v}"),
        }
    }
}

#[test]
fn census_ten() {
    let r = census(1, true).unwrap();
    assert_eq!(r.classes.len(), 6);
    let r = census(10, true).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.pairs.len(), 441 * 440 / 2);
    assert!(r.to_csv().starts_with("a,b,a2,b2,verdict,witness\n"));
    assert_eq!(r.to_json()["failures"].as_array().unwrap().len(), 0);
}
