mod common;

use common::{naive_rank, q, qv};
use phopf::algebra::{algebra_check, dual_hopf, group_algebra_default, hopf_check, hom_hh_a, sweedler_h4, tensor_mul};
use phopf::examples::field_algebra;
use phopf::{AlgebraData, FieldSpec, GroupTable, HopfData, Rational, Scalar, Subspace, Tensor3, Zp};
use proptest::prelude::*;
use std::sync::Arc;

const QF: FieldSpec = FieldSpec::Rationals;

fn h4() -> HopfData<Rational> {
    sweedler_h4(QF).unwrap()
}

#[test]
fn builtin_groups_and_duals_pass_over_q_and_gf5() {
    let f5 = FieldSpec::prime(5).unwrap();
    for name in GroupTable::builtin_names() {
        let g = GroupTable::builtin(name).unwrap();
        let kg: HopfData<Rational> = group_algebra_default(&g, QF).unwrap();
        assert!(hopf_check(&kg).unwrap().passed(), "k{name}");
        assert!(hopf_check(&dual_hopf(&kg).unwrap()).unwrap().passed(), "(k{name})*");
        let kg5: HopfData<Zp> = group_algebra_default(&g, f5).unwrap();
        assert!(hopf_check(&kg5).unwrap().passed(), "GF(5){name}");
        assert!(hopf_check(&dual_hopf(&kg5).unwrap()).unwrap().passed(), "GF(5)({name})*");
    }
}

#[test]
fn sweedler_relations() {
    let h = h4();
    assert!(hopf_check(&h).unwrap().passed());
    let (one, g, x, xg) = (h.e(0), h.e(1), h.e(2), h.e(3));
    assert_eq!(h.product(&g, &g), one);
    assert_eq!(h.product(&x, &x), vec![q(0); 4]);
    assert_eq!(h.product(&x, &g), xg);
    assert_eq!(h.product(&g, &x), qv(&[0, 0, 0, -1]));
    // Δ(x) = 1⊗x + x⊗g
    let mut dx = vec![q(0); 16];
    dx[2] = q(1);
    dx[2 * 4 + 1] = q(1);
    assert_eq!(h.coproduct(&x), dx);
    assert_eq!(h.counit, qv(&[1, 1, 0, 0]));
    let f5 = FieldSpec::prime(5).unwrap();
    assert!(hopf_check(&sweedler_h4::<Zp>(f5).unwrap()).unwrap().passed());
    assert!(sweedler_h4::<Zp>(FieldSpec::prime(2).unwrap()).is_err());
}

#[test]
fn antipode_of_sweedler_has_order_four() {
    let h = h4();
    let s = &h.antipode;
    let s2 = s.matmul(s);
    assert_ne!(s2, phopf::Mat::identity(QF, 4));
    assert_eq!(s2.matmul(&s2), phopf::Mat::identity(QF, 4));
}

#[test]
fn double_dual_of_group_algebra_has_the_same_tables() {
    let g = GroupTable::builtin("s3").unwrap();
    let kg: HopfData<Rational> = group_algebra_default(&g, QF).unwrap();
    let dd = dual_hopf(&dual_hopf(&kg).unwrap()).unwrap();
    assert_eq!(dd.alg.mul, kg.alg.mul);
    assert_eq!(dd.comul, kg.comul);
    assert_eq!(dd.counit, kg.counit);
    assert_eq!(dd.antipode, kg.antipode);
}

#[test]
fn mutated_coproduct_is_caught() {
    let mut h = h4();
    let c = h.comul.get(2, 0, 2).clone();
    h.comul.set(2, 0, 2, c + q(1));
    let r = hopf_check(&h).unwrap();
    assert!(!r.passed());
    assert!(r.fails("counit-right") || r.fails("counit-left"));
    let w = r.failures().iter().find(|f| f.law.starts_with("counit")).unwrap();
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn mutated_product_breaks_associativity() {
    let mut h = h4();
    h.alg.mul.set(2, 2, 0, q(1)); // x² = 1
    let r = algebra_check(&h.alg).unwrap();
    assert!(r.fails("assoc"));
}

#[test]
fn counit_kernel_is_a_hyperplane() {
    let h = h4();
    let k = h.counit_kernel();
    assert_eq!(k.len(), 3);
    assert_eq!(naive_rank(&k), 3);
    for v in &k {
        assert_eq!(h.counit_of(v), q(0));
    }
}

#[test]
fn find_unit_and_restrict() {
    // k[t]/(t³) with the unit forgotten
    let mut mul = Tensor3::zeros(QF, [3, 3, 3]);
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                mul.set(i, j, i + j, q(1));
            }
        }
    }
    let a = AlgebraData::new(QF, vec!["1".into(), "t".into(), "t2".into()], mul, None).unwrap();
    assert_eq!(a.find_unit(), Some(qv(&[1, 0, 0])));
    let sub = Subspace::span(QF, 3, vec![qv(&[0, 1, 0]), qv(&[0, 0, 1])]).unwrap();
    let r = a.restrict(&sub, vec!["t".into(), "t2".into()]).unwrap();
    assert!(algebra_check(&r).unwrap().passed());
    assert_eq!(r.find_unit(), None);
}

#[test]
fn hom_algebra_of_sweedler_on_k_is_a_bimodule_algebra() {
    let h = Arc::new(h4());
    let k = field_algebra(QF).unwrap();
    let hom = hom_hh_a(h, &k).unwrap();
    assert_eq!(hom.dim(), 16);
    assert!(hom.check().unwrap().passed());
    // (g ▷ f)(h⊗k) = f(hg⊗k)
    let f: Vec<Rational> = (0..16).map(|i| q(i as i64 + 1)).collect();
    let gf = hom.left(1, &f);
    for a in 0..4 {
        for b in 0..4 {
            let hg = hom.hopf.mul_basis(a, 1).to_vec();
            let expected = (0..4).fold(q(0), |acc, c| acc + hg[c].clone() * f[c * 4 + b].clone());
            assert_eq!(gf[a * 4 + b], expected);
        }
    }
}

fn h4_elem() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-4i64..=4, 4).prop_map(|v| qv(&v))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn antipode_is_an_antihomomorphism(x in h4_elem(), y in h4_elem()) {
        let h = h4();
        let s = |v: &[Rational]| h.antipode_of(v);
        prop_assert_eq!(s(&h.product(&x, &y)), h.product(&s(&y), &s(&x)));
    }

    #[test]
    fn coproduct_is_multiplicative_and_counital(x in h4_elem(), y in h4_elem()) {
        let h = h4();
        let hh = [&h.alg, &h.alg];
        prop_assert_eq!(h.coproduct(&h.product(&x, &y)), tensor_mul(&hh, &h.coproduct(&x), &h.coproduct(&y)));
        let d = h.coproduct(&x);
        let mut left = vec![q(0); 4];
        for i in 0..4 {
            for j in 0..4 {
                left[j] += &(h.counit[i].clone() * d[i * 4 + j].clone());
            }
        }
        prop_assert_eq!(left, x);
    }

    #[test]
    fn gf_p_group_algebras_pass(p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        let f = FieldSpec::prime(p).unwrap();
        let g = GroupTable::builtin("d4").unwrap();
        let kg: HopfData<Zp> = group_algebra_default(&g, f).unwrap();
        prop_assert!(hopf_check(&kg).unwrap().passed());
        prop_assert!(kg.counit.iter().all(|c| c.is_one()));
    }
}
