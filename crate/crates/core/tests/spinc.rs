use solcob_core::spinc::*;

#[test]
fn partition_of_even_even() {
    let p = partition(&2i64, &2).unwrap();
    assert_eq!(p.image_w_minus_b.len(), 8);
    assert!(p.image_w_minus_b.iter().all(|x| x[1] % 2 == 0));
    assert!(p.image_w_a.iter().all(|x| x[0] % 2 == 0));
    assert!(p.class(ClassLabel::Sba).iter().all(|x| x[0] % 2 == 0 && x[1] % 2 == 0));
    assert_eq!(p.theta, vec![0, 0]);
}

#[test]
fn classes_depend_only_on_parity() {
    for a in -9i64..=9 {
        for b in -9i64..=9 {
            if a % 2 != 0 && b % 2 == 0 {
                assert!(partition(&a, &b).is_err());
                continue;
            }
            let (sa, sb) = (if a % 2 == 0 { 2 } else { 1 }, if b % 2 == 0 { 2 } else { 1 });
            assert_eq!(chern_classes(&a, &b).unwrap(), chern_classes(&sa, &sb).unwrap(), "({a}, {b})");
        }
    }
}

#[test]
fn self_conjugate_sets() {
    let s = |a: i64, b: i64| self_conjugate_classes(&a, &b).unwrap().into_iter().collect::<Vec<_>>();
    assert_eq!(s(0, 1), vec![ClassLabel::Sa]);
    assert_eq!(s(1, 1), vec![ClassLabel::Sb, ClassLabel::Sa]);
    assert_eq!(s(0, 0), vec![ClassLabel::Sba]);
}

#[test]
fn json_shapes() {
    let j = partition(&2i64, &1).unwrap().to_json();
    assert_eq!(j["classes"]["S_ba"].as_array().unwrap().len(), 4);
    let j = extension_data(&1i64, &1).unwrap().to_json();
    assert_eq!(j["c1_theta"], serde_json::json!([0, 0, 2]));
    assert_eq!(j["c1_u_a"], serde_json::json!([2]));
}
