mod common;

use std::sync::Arc;

use common::{q, qr, qv};
use phopf::actions::*;
use phopf::algebra::sweedler_h4;
use phopf::examples::*;
use phopf::{FieldSpec, GroupTable, Mat, Rational, Scalar, Tensor3, Zp};
use proptest::prelude::*;

const QF: FieldSpec = FieldSpec::Rationals;

fn h4_parts() -> (Arc<phopf::QHopf>, Arc<phopf::QAlgebra>) {
    (Arc::new(sweedler_h4(QF).unwrap()), Arc::new(field_algebra(QF).unwrap()))
}

#[test]
fn sweedler_left_action_on_k() {
    let (h, k) = h4_parts();
    let p = h4_left_on_k(h, k, &q(2)).unwrap();
    assert!(check_lpma(&p, true).unwrap().passed());
    assert!(!is_global(&p));
    assert_eq!(p.act(2, &[q(1)]), vec![q(2)]);
    assert_eq!(p.act(3, &[q(1)]), vec![q(-2)]);
}

#[test]
fn sweedler_right_action_on_k() {
    let (h, k) = h4_parts();
    let p = h4_right_on_k(h, k, &q(3)).unwrap();
    assert!(check_rpma(&p, true).unwrap().passed());
    assert!(!is_global(&p));
}

#[test]
fn right_table_with_negative_xg_fails_rpma2() {
    // 1↼x = s, 1↼xg = -s: (1↼g)↼xg = 0 but (1↼g·(xg)₁)(1↼(xg)₂) = -2s.
    let (h, k) = h4_parts();
    let p = h4_right_on_k_xg_minus(h, k, &q(5)).unwrap();
    let r = check_rpma(&p, false).unwrap();
    assert!(r.fails("RPMA-2"));
    let w = r.first("RPMA-2").unwrap();
    assert_eq!(w.indices, vec![3, 0, 1, 0]);
    assert_eq!(w.lhs, vec![q(0)]);
    assert_eq!(w.rhs, vec![q(-10)]);
}

#[test]
fn mutated_left_sign_fails_lpma2() {
    let (h, k) = h4_parts();
    let mut map = Tensor3::zeros(QF, [4, 1, 1]);
    for (i, v) in qv(&[1, 0, 2, 2]).into_iter().enumerate() {
        map.set(i, 0, 0, v);
    }
    let p = PartialActionData::new(h, k, Side::Left, map).unwrap();
    let r = check_lpma(&p, false).unwrap();
    assert!(r.fails("LPMA-2"));
    // h = x, g = g
    assert!(r.failures().iter().any(|f| f.law == "LPMA-2" && f.indices == [2, 0, 1, 0]));
}

#[test]
fn unit_must_act_trivially() {
    let (h, k) = h4_parts();
    let mut map = Tensor3::zeros(QF, [4, 1, 1]);
    map.set(0, 0, 0, q(2));
    assert!(PartialActionData::new(h.clone(), k.clone(), Side::Left, map.clone()).is_err());
    let p = PartialActionData::new_unchecked(h, k, Side::Left, map).unwrap();
    assert!(check_lpma(&p, false).unwrap().fails("LPMA-1"));
}

#[test]
fn counit_action_is_global_and_symmetric() {
    let (h, k) = h4_parts();
    for side in [Side::Left, Side::Right] {
        let p = PartialActionData::trivial(h.clone(), k.clone(), side).unwrap();
        assert!(check_action(&p, true).unwrap().passed());
        assert!(is_global(&p));
    }
}

#[test]
fn wrong_side_is_an_error() {
    let (h, k) = h4_parts();
    let p = h4_left_on_k(h, k, &q(1)).unwrap();
    assert!(check_rpma(&p, false).is_err());
}

#[test]
fn bimodule_pairing() {
    let b = h4_bimodule_k(QF, &q(2), &q(3)).unwrap();
    assert!(check_bimodule(&b).unwrap().passed());
    assert!(certify_bimodule(&b).unwrap().passed());
    let (h, k) = h4_parts();
    let l = h4_left_on_k(h.clone(), k.clone(), &q(1)).unwrap();
    assert!(PartialBimoduleData::new(l.clone(), l).is_err());
}

#[test]
fn en_kg_coefficients_on_z4() {
    let g = GroupTable::cyclic(4);
    let p = en_kg_example::<Rational>(&g, &[0, 2], QF).unwrap();
    assert!(check_lpma(&p, false).unwrap().passed());
    assert!(!is_global(&p));
    assert_eq!(p.alg.dim(), 2);
    let reps = [0usize, 1];
    let mut pairs = 0;
    for x in 0..4 {
        for (j, &h) in reps.iter().enumerate() {
            let expected = if (x + 4 - h) % 2 == 0 { qr(1, 2) } else { q(0) };
            let mut v = vec![q(0); 2];
            v[j] = expected;
            assert_eq!(p.act(x, &p.alg.e(j)), v, "p_{x} on e_N u_{h}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 8);
}

#[test]
fn en_kg_matches_induction_from_dual_action() {
    let g = GroupTable::cyclic(4);
    let p = en_kg_example::<Rational>(&g, &[0, 2], QF).unwrap();
    let global = dual_group_action::<Rational>(&g, QF).unwrap();
    assert!(is_global(&global));
    let e_n = vec![qr(1, 2), q(0), qr(1, 2), q(0)];
    let ind = induce_left(&global, &e_n).unwrap();
    assert_eq!(ind.map, p.map);
    assert_eq!(ind.alg.mul, p.alg.mul);
}

#[test]
fn en_kg_on_s3_with_its_normal_subgroup_of_order_three() {
    let g = GroupTable::builtin("s3").unwrap();
    let n: Vec<usize> = (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut s = vec![g.identity(), a, b];
            s.sort_unstable();
            s.dedup();
            s
        })
        .find(|s| s.len() == 3 && g.is_normal_subgroup(s))
        .unwrap();
    let p = en_kg_example::<Rational>(&g, &n, QF).unwrap();
    assert_eq!(p.alg.dim(), 2);
    assert!(check_lpma(&p, false).unwrap().passed());
    assert!(!is_global(&p));
    assert!(en_kg_example::<Rational>(&g, &[0, 1], QF).is_err() || g.is_normal_subgroup(&[0, 1]));
}

#[test]
fn en_kg_needs_invertible_order() {
    let g = GroupTable::cyclic(4);
    let f = FieldSpec::prime(2).unwrap();
    assert!(en_kg_example::<Zp>(&g, &[0, 2], f).is_err());
}

#[test]
fn partial_group_action_round_trip() {
    let gpa = z2_partial_group::<Rational>(QF).unwrap();
    assert!(check_group_partial_action(&gpa).unwrap().passed());
    let p = group_to_kg(&gpa).unwrap();
    assert!(check_lpma(&p, true).unwrap().passed());
    assert!(!is_global(&p));
    let back = kg_to_group(&p, &gpa.group).unwrap();
    assert_eq!(back, gpa);
}

#[test]
fn broken_partial_group_action_is_reported() {
    let mut gpa = z2_partial_group::<Rational>(QF).unwrap();
    gpa.alphas[1].set(0, 0, q(1));
    let r = check_group_partial_action(&gpa).unwrap();
    assert!(!r.passed());
    assert!(group_to_kg(&gpa).is_err());
}

#[test]
fn induce_left_rejects_non_idempotent() {
    let g = GroupTable::cyclic(2);
    let global = dual_group_action::<Rational>(&g, QF).unwrap();
    assert!(induce_left(&global, &qv(&[1, 1])).is_err());
    assert!(induce_left(&global, &qv(&[0, 0])).is_err());
}

#[test]
fn trivialized_right_side() {
    let g = GroupTable::cyclic(4);
    let p = en_kg_example::<Rational>(&g, &[0, 2], QF).unwrap();
    let b = trivialize_right(&p).unwrap();
    assert!(is_global(&b.right));
    let ops = action_ops(&b.right);
    assert_eq!(ops.len(), 4);
    for (i, m) in ops.iter().enumerate() {
        let eps = b.right.hopf.counit[i].clone();
        let mut expected = Mat::identity(QF, 2);
        for d in 0..2 {
            expected.set(d, d, eps.clone());
        }
        assert_eq!(*m, expected);
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| qr(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sweedler_bimodule_family(r in rational(), s in rational()) {
        let b = h4_bimodule_k(QF, &r, &s).unwrap();
        prop_assert!(check_lpma(&b.left, true).unwrap().passed());
        prop_assert!(check_rpma(&b.right, true).unwrap().passed());
        prop_assert!(check_bimodule(&b).unwrap().passed());
        prop_assert!(!is_global(&b.left) && !is_global(&b.right));
    }

    #[test]
    fn negative_xg_right_table_fails_exactly_when_s_nonzero(s in rational()) {
        let (h, k) = h4_parts();
        let p = h4_right_on_k_xg_minus(h, k, &s).unwrap();
        prop_assert_eq!(check_rpma(&p, false).unwrap().passed(), s == q(0));
    }

    #[test]
    fn sweedler_bimodule_over_gf_p(r in 0u64..7, s in 0u64..7) {
        let f = FieldSpec::prime(7).unwrap();
        let b = h4_bimodule_k(f, &Zp::new(r as i128, 7), &Zp::new(s as i128, 7)).unwrap();
        prop_assert!(certify_bimodule(&b).unwrap().passed());
        prop_assert!(b.left.act(1, &[Zp::one_in(f)])[0].is_zero());
    }
}
