//! Runs the ten acceptance criteria and prints one line per criterion.
//!
//! Criterion 2 uses the right action table with `1↼xg = -s`, which fails RPMA-2
//! whenever `s ≠ 0`. That failure is expected; the run exits nonzero only if some
//! criterion turns out differently than recorded.

mod common;

use std::process::ExitCode;
use std::sync::Arc;

use common::{naive_closure_dim, naive_rank, q, qr, spanning_functionals};
use phopf::actions::*;
use phopf::algebra::{algebra_check, dual_hopf, group_algebra_default, hopf_check, sweedler_h4};
use phopf::coactions::*;
use phopf::examples::*;
use phopf::globalization::*;
use phopf::smash::*;
use phopf::{FieldSpec, GroupTable, HopfData, Mat, Rational, Subspace, Zp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QF: FieldSpec = FieldSpec::Rationals;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return fail(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_q(r: &mut ChaCha8Rng) -> Rational {
    qr(r.gen_range(-9..=9), r.gen_range(1..=5))
}

fn nonzero_q(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = random_q(r);
        if x != q(0) {
            return x;
        }
    }
}

fn show(v: &[Rational]) -> String {
    format!("[{}]", phopf::io::vec_to_json(v).join(", "))
}

fn h4() -> Arc<HopfData<Rational>> {
    Arc::new(sweedler_h4(QF).unwrap())
}

fn criterion1() -> Outcome {
    let f5 = FieldSpec::prime(5).unwrap();
    let mut checked = 0;
    for name in GroupTable::builtin_names() {
        let g = GroupTable::builtin(name).unwrap();
        let kg: HopfData<Rational> = group_algebra_default(&g, QF).unwrap();
        let kg5: HopfData<Zp> = group_algebra_default(&g, f5).unwrap();
        ensure!(hopf_check(&kg).unwrap().passed(), "k{name} over Q");
        ensure!(hopf_check(&dual_hopf(&kg).unwrap()).unwrap().passed(), "(k{name})* over Q");
        ensure!(hopf_check(&kg5).unwrap().passed(), "k{name} over GF(5)");
        ensure!(hopf_check(&dual_hopf(&kg5).unwrap()).unwrap().passed(), "(k{name})* over GF(5)");
        checked += 4;
    }
    ensure!(hopf_check(&*h4()).unwrap().passed(), "H4 over Q");
    ensure!(hopf_check(&sweedler_h4::<Zp>(f5).unwrap()).unwrap().passed(), "H4 over GF(5)");
    pass(format!("{} Hopf algebras pass (groups of order <= 8, duals, H4; over Q and GF(5))", checked + 2))
}

/// `(passed, as_recorded, detail)`.
fn criterion2() -> (Outcome, bool) {
    let h = h4();
    let k = Arc::new(field_algebra(QF).unwrap());
    let mut r = rng(2);
    let mut literal_failures = 0;
    let mut recorded = true;
    let mut witness = String::new();
    for _ in 0..20 {
        let (rv, sv) = (random_q(&mut r), random_q(&mut r));
        let left = h4_left_on_k(h.clone(), k.clone(), &rv).unwrap();
        let literal = h4_right_on_k_xg_minus(h.clone(), k.clone(), &sv).unwrap();
        let fixed = h4_right_on_k(h.clone(), k.clone(), &sv).unwrap();
        let l = check_lpma(&left, true).unwrap();
        let rl = check_rpma(&literal, true).unwrap();
        let rf = check_rpma(&fixed, true).unwrap();
        let bl = check_bimodule(&PartialBimoduleData::new(left.clone(), literal.clone()).unwrap()).unwrap();
        let bf = check_bimodule(&PartialBimoduleData::new(left.clone(), fixed.clone()).unwrap()).unwrap();
        let not_global = !is_global(&left) && !is_global(&literal) && !is_global(&fixed);
        recorded &= l.passed() && rf.passed() && bf.passed() && not_global;
        recorded &= rl.passed() == (sv == q(0));
        recorded &= rl.failures().iter().all(|f| f.law.starts_with("RPMA"));
        recorded &= rl.passed() || rl.fails("RPMA-2");
        if !(rl.passed() && bl.passed()) {
            literal_failures += 1;
            if witness.is_empty() {
                let w = rl.first("RPMA-2").or_else(|| rl.failures().first()).unwrap();
                witness = format!("s = {sv}: {} at {:?}, lhs {} vs rhs {}", w.law, w.indices, show(&w.lhs), show(&w.rhs));
            }
        }
    }
    let out = if literal_failures == 0 {
        pass("20 random (r,s): all checks pass, is_global false on both sides")
    } else {
        fail(format!(
            "{literal_failures}/20 random (r,s) fail with 1<xg = -s ({witness}); \
             with 1<xg = s every check passes and is_global is false on both sides"
        ))
    };
    (out, recorded)
}

fn criterion3() -> Outcome {
    let g = GroupTable::cyclic(4);
    let p = en_kg_example::<Rational>(&g, &[0, 2], QF).unwrap();
    ensure!(check_lpma(&p, false).unwrap().passed(), "check_lpma fails");
    ensure!(!is_global(&p), "reported global");
    let mut pairs = 0;
    for x in 0..4 {
        for (j, h) in [0usize, 1].into_iter().enumerate() {
            let mut want = vec![q(0); 2];
            if (x + 4 - h) % 2 == 0 {
                want[j] = qr(1, 2);
            }
            ensure!(p.act(x, &p.alg.e(j)) == want, "p_{x} on e_N u_{h}");
            pairs += 1;
        }
    }
    let global = dual_group_action::<Rational>(&g, QF).unwrap();
    let induced = induce_left(&global, &[qr(1, 2), q(0), qr(1, 2), q(0)]).unwrap();
    ensure!(induced.map == p.map, "induced table differs");
    pass(format!("{pairs} (g,h) coefficients match, not global, induced table identical"))
}

fn criterion4() -> Outcome {
    let p = h4_bimodule_k(QF, &q(2), &q(3)).unwrap();
    let g = standard_globalize_bimodule(&p).unwrap();
    let oracle = naive_rank(&spanning_functionals(&p));
    ensure!(g.dim() == 4 && oracle == 4, "dim B = {}, oracle {oracle}", g.dim());
    let cert = verify_globalization(&g.candidate(), &p).unwrap();
    ensure!(cert.all_true(), "certificate {:?}", cert.witnesses);
    ensure!(cert.lemaco_ok == (true, true, true, true), "lemma identities");
    ensure!(g.phi.rank() == p.alg().dim(), "phi not injective");
    pass("dim B = 4 (oracle rank 4 of 16 functionals), certificate all true, phi injective")
}

fn criterion5() -> Outcome {
    let p = h4_bimodule_k(QF, &q(2), &q(3)).unwrap();
    let g = standard_globalize_bimodule(&p).unwrap();
    let id = comparison_map(&g.candidate(), &g).unwrap();
    ensure!(id.injective && id.surjective && id.multiplicative && id.bimodule_map, "self comparison");
    for v in id.frame.vectors() {
        ensure!(g.b_basis.from_coordinates(&id.apply(v).unwrap()) == *v, "self comparison is not the identity");
    }
    let nd = g.ambient.dim();
    let d = degenerate_extension(&g, &[q(1), q(0), q(0), q(0)]).unwrap();
    let c = comparison_map(&d, &g).unwrap();
    ensure!(c.surjective && !c.injective, "Phi on the degenerate candidate");
    let second = Subspace::span(QF, 2 * nd, (nd..2 * nd).map(|i| {
        let mut v = vec![q(0); 2 * nd];
        v[i] = q(1);
        v
    }))
    .unwrap();
    let summand = d.b.intersection(&second);
    let m = maximal_degenerate_subbimodule(&d).unwrap();
    ensure!(c.kernel == summand && m == summand, "kernel {} / degenerate {} / summand {}", c.kernel.dim(), m.dim(), summand.dim());
    pass(format!("self comparison is the identity; degenerate candidate dim {}: kernel = degenerate part = added summand (dim {})", d.b.dim(), m.dim()))
}

fn criterion6() -> Outcome {
    let h = h4();
    let k = Arc::new(field_algebra(QF).unwrap());
    let lam = h4_lambda_k(h.clone(), k.clone(), &q(7)).unwrap();
    let rho = h4_rho_k(h.clone(), k, &q(3)).unwrap();
    let l = coaction_to_dual_action(&rho).unwrap();
    let r = left_coaction_to_dual_action(&lam).unwrap();
    ensure!(check_lpma(&l, false).unwrap().passed(), "left dual action");
    ensure!(check_rpma(&r, false).unwrap().passed(), "right dual action");
    ensure!(dual_action_to_coaction(&l).unwrap().map == rho.map, "right coaction round trip");
    ensure!(right_action_to_coaction(&r).unwrap().map == lam.map, "left coaction round trip");
    let b = PartialBicomoduleData::certified(lam, rho).unwrap();
    let bm = bicomodule_to_bimodule(&b).unwrap();
    ensure!(check_bimodule(&bm).unwrap().passed(), "dual bimodule");
    ensure!(bimodule_to_bicomodule(&bm).unwrap() == b, "bicomodule round trip");
    let reg = bicomodule_to_bimodule(&regular_bicomodule(h).unwrap()).unwrap();
    ensure!(is_global(&reg.left) && is_global(&reg.right), "regular instance not global");
    pass("dual actions pass, round trips identical, dual bimodule passes, regular instance global")
}

fn criterion7() -> Outcome {
    let b = h4_bicomodule_k(QF, &q(7), &q(3)).unwrap();
    let bg = standard_globalize_bicomodule(&b).unwrap();
    let (t1, t2) = theta_formulas(&b).unwrap();
    ensure!(t1 == t2 && bg.theta == t1, "theta formulas differ");
    ensure!(bg.theta.rank() == 1, "theta not injective");
    let (left, right) = dual_action_ops(&bg.ambient).unwrap();
    let ops: Vec<Mat<Rational>> = left.into_iter().chain(right).collect();
    let oracle = naive_closure_dim(&bg.theta.row_vecs(), &ops, Some(&bg.ambient.alg().mul));
    ensure!(oracle == bg.dim(), "closure dim {} vs oracle {oracle}", bg.dim());
    let n = 4;
    let dx = bg.ambient.alg().dim();
    for v in bg.b_basis.basis() {
        let rv = bg.ambient.rho.coact(v);
        let lv = bg.ambient.lambda.coact(v);
        for x in 0..n {
            let r_leg: Vec<Rational> = (0..dx).map(|y| rv[y * n + x].clone()).collect();
            let l_leg: Vec<Rational> = (0..dx).map(|y| lv[x * dx + y].clone()).collect();
            ensure!(bg.b_basis.has(&r_leg) && bg.b_basis.has(&l_leg), "B not closed under the coactions");
        }
    }
    let std = standard_globalize_bimodule(&bicomodule_to_bimodule(&b).unwrap()).unwrap();
    let psi = psi_map(&bg, &std).unwrap();
    ensure!(bg.theta.matmul(&psi.psi) == std.phi, "Psi theta != phi");
    ensure!(psi.all_true(), "Psi flags {:?}", (psi.injective, psi.multiplicative, psi.unital, psi.intertwines, psi.restricted_iso));
    ensure!(bg.dim() == std.dim(), "restricted dims {} vs {}", bg.dim(), std.dim());
    pass(format!("theta formulas agree, dim B = {} (naive closure agrees), Psi theta = phi, Psi restricts to a bijection", bg.dim()))
}

fn criterion8() -> Outcome {
    let mut r = rng(8);
    for _ in 0..20 {
        let p: Vec<Rational> = (0..4).map(|_| random_q(&mut r)).collect();
        let s = smash_product(&h4_bimodule_k(QF, &p[0], &p[1]).unwrap(), &h4_bicomodule_k(QF, &p[2], &p[3]).unwrap()).unwrap();
        ensure!(check_smash_associativity(&s).unwrap().passed(), "1-dim smash at {p:?}");
    }
    let s = smash_product(&h4_bimodule_k(QF, &q(2), &q(3)).unwrap(), &regular_bicomodule(h4()).unwrap()).unwrap();
    ensure!(s.dim() == 4 && check_smash_associativity(&s).unwrap().passed(), "4-dim smash");
    pass("20 one-dimensional instances and the 4-dim regular instance (64 triples) are associative")
}

/// `(1♮1)²` straight from the tables: `Σ ρ-coefficient·(1↼h)` times `Σ λ-coefficient·(h⇀1)`.
fn brute_square(a: &PartialBimoduleData<Rational>, b: &PartialBicomoduleData<Rational>) -> Rational {
    let right: Rational = (0..4).map(|k| b.rho.map.get(0, 0, k) * a.right.map.get(k, 0, 0)).sum();
    let left: Rational = (0..4).map(|h| b.lambda.map.get(0, h, 0) * a.left.map.get(h, 0, 0)).sum();
    right * left
}

fn criterion9() -> Outcome {
    let mut r = rng(9);
    let mut points: Vec<[Rational; 4]> = (0..20).map(|_| [0; 4].map(|_| random_q(&mut r))).collect();
    points.push([q(2), q(1), q(5), qr(-1, 2)]);
    points.push([qr(1, 4), q(3), q(2), q(1)]);
    points.push([q(2), q(3), q(5), q(7)]);
    let mut zeros = 0;
    for [rv, sv, tv, uv] in &points {
        let a = h4_bimodule_k(QF, rv, sv).unwrap();
        let b = h4_bicomodule_k(QF, tv, uv).unwrap();
        let s = smash_product(&a, &b).unwrap();
        let got = s.alg.mul.get(0, 0, 0).clone();
        let formula = (qr(1, 2) + uv * sv) * (qr(1, 2) - tv * rv);
        ensure!(got == formula && got == brute_square(&a, &b), "at {:?}", (rv, sv, tv, uv));
        let expect_zero = uv * sv == qr(-1, 2) || tv * rv == qr(1, 2);
        ensure!((got == q(0)) == expect_zero, "zero pattern at {:?}", (rv, sv, tv, uv));
        zeros += usize::from(expect_zero);
    }
    let s = smash_product(&h4_bimodule_k(QF, &q(2), &q(3)).unwrap(), &h4_bicomodule_k(QF, &q(5), &q(7)).unwrap()).unwrap();
    ensure!(s.alg.mul.get(0, 0, 0) == &qr(-817, 4), "(2,3,5,7)");
    pass(format!("{} points match (1/2+us)(1/2-tr) and the brute-force sum, {zeros} zero squares, (2,3,5,7) gives -817/4", points.len()))
}

fn criterion10() -> Outcome {
    let h = h4();
    let k = Arc::new(field_algebra(QF).unwrap());
    let mut r = rng(10);
    for i in 0..50 {
        let a = nonzero_q(&mut r);
        let p = match i % 3 {
            0 => h4_bimodule_k(QF, &random_q(&mut r), &random_q(&mut r)).unwrap(),
            1 => trivialize_right(&h4_left_on_k(h.clone(), k.clone(), &random_q(&mut r)).unwrap()).unwrap(),
            _ => PartialBimoduleData::certified(
                PartialActionData::trivial(h.clone(), k.clone(), Side::Left).unwrap(),
                PartialActionData::trivial(h.clone(), k.clone(), Side::Right).unwrap(),
            )
            .unwrap(),
        };
        let inv = check_ker_eps_invariance(&p, &[a]).unwrap();
        ensure!(inv.equivalences() == (true, true), "case {i}: {inv:?}");
    }
    let s = smash_product(&h4_bimodule_k(QF, &q(2), &q(3)).unwrap(), &regular_bicomodule(h.clone()).unwrap()).unwrap();
    let one = h.alg.e(0);
    let verdict = find_idempotent(&s, &[q(1)], &one).unwrap();
    ensure!(verdict == (true, Route::Conditions34), "route {verdict:?}");
    let e = s.element(&[q(1)], &one);
    let c = unital_corner(&s, &e).unwrap();
    ensure!(algebra_check(&c.alg).unwrap().passed(), "corner algebra");
    ensure!(c.basis.coordinates(&e) == c.alg.unit, "corner unit");
    pass(format!("50 invariance cases agree, 1#1 certified by (3)+(4), corner of dim {} is unital", c.basis.dim()))
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    let mut report = |n: usize, name: &str, o: Outcome, as_recorded: bool| {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {n} ({name}): {}", o.detail);
        if !as_recorded {
            unexpected += 1;
        }
    };
    let plain: [(usize, &str, fn() -> Outcome); 9] = [
        (1, "Hopf axioms", criterion1),
        (3, "e_N kG", criterion3),
        (4, "standard bimodule globalization", criterion4),
        (5, "comparison and minimality", criterion5),
        (6, "duality", criterion6),
        (7, "bicomodule globalization and Psi", criterion7),
        (8, "smash associativity", criterion8),
        (9, "square of 1#1", criterion9),
        (10, "idempotents and corner", criterion10),
    ];
    let mut outcomes: Vec<(usize, &str, Outcome, bool)> = plain
        .into_iter()
        .map(|(n, name, f)| {
            let o = f();
            let ok = o.passed;
            (n, name, o, ok)
        })
        .collect();
    let (o2, recorded2) = criterion2();
    outcomes.insert(1, (2, "H4 bimodule on k", o2, recorded2));
    for (n, name, o, as_recorded) in outcomes {
        report(n, name, o, as_recorded);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criterion outcome(s) differ from the recorded expectation");
        ExitCode::FAILURE
    }
}
