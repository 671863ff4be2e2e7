//! Partial actions of a Hopf algebra on a unital algebra.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{group_algebra_default, AlgebraData, BimoduleAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{axpy, is_zero_vec, scaled, zeros, Frame, Mat, Subspace, Tensor3};
use crate::report::{record, sweep, Failure, Report};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

pub(crate) fn same<T: PartialEq>(a: &Arc<T>, b: &Arc<T>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A linear map `H⊗A → A` (or `A⊗H → A`).
///
/// `map[i][j]` holds the coordinates of `b_i ⇀ a_j` (left) or `a_j ↼ b_i` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialActionData<F> {
    pub hopf: Arc<HopfData<F>>,
    pub alg: Arc<AlgebraData<F>>,
    pub side: Side,
    pub map: Tensor3<F>,
}

impl<F: Scalar> PartialActionData<F> {
    /// Checks shapes and that `1_H` acts as the identity.
    pub fn new(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side, map: Tensor3<F>) -> Result<Self> {
        let p = Self::new_unchecked(hopf, alg, side, map)?;
        let n = p.alg.dim();
        for j in 0..n {
            let v = p.act_elem(p.hopf.unit(), &p.alg.e(j));
            if v != p.alg.e(j) {
                return Err(Error::Precondition(format!(
                    "the unit of H does not act as the identity on basis element {j} ({})",
                    p.alg.basis[j]
                )));
            }
        }
        Ok(p)
    }

    /// Shape checks only; lets tests build deliberately broken actions.
    #[doc(hidden)]
    pub fn new_unchecked(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side, map: Tensor3<F>) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        if map.dims() != [nh, na, na] {
            return Err(Error::Shape(format!("action table has dims {:?}, expected [{nh}, {na}, {na}]", map.dims())));
        }
        if alg.field != hopf.field() || map.field() != hopf.field() {
            return Err(Error::Field("action data over different fields".into()));
        }
        alg.unit_vec()?;
        Ok(PartialActionData { hopf, alg, side, map })
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field
    }

    /// Action of the basis element `b_i` on `a`.
    pub fn act(&self, i: usize, a: &[F]) -> Vec<F> {
        let mut out = zeros(self.field(), self.alg.dim());
        for (j, c) in a.iter().enumerate() {
            axpy(&mut out, c, self.map.fiber(i, j));
        }
        out
    }

    /// Action of an arbitrary element `h`.
    pub fn act_elem(&self, h: &[F], a: &[F]) -> Vec<F> {
        let mut out = zeros(self.field(), self.alg.dim());
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.act(i, a));
            }
        }
        out
    }

    /// Operator of the basis element `b_i` as a matrix.
    pub fn op(&self, i: usize) -> Mat<F> {
        let rows = (0..self.alg.dim()).map(|j| self.map.fiber(i, j).to_vec()).collect();
        Mat::from_rows(self.field(), self.alg.dim(), rows).expect("square")
    }

    pub fn unit(&self) -> &[F] {
        self.alg.unit.as_deref().expect("checked at construction")
    }

    /// The ε-action `h·a = ε(h)a`.
    pub fn trivial(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        let mut map = Tensor3::zeros(alg.field, [nh, na, na]);
        for i in 0..nh {
            for j in 0..na {
                map.set(i, j, j, hopf.counit[i].clone());
            }
        }
        Self::new(hopf, alg, side, map)
    }
}

fn need_side<F: Scalar>(p: &PartialActionData<F>, side: Side) -> Result<()> {
    if p.side != side {
        return Err(Error::Precondition(format!("expected a {side} action, got a {} action", p.side)));
    }
    Ok(())
}

/// Left partial module algebra axioms over all basis tuples.
///
/// Laws: `LPMA-1`, `LPMA-2`, `LPMA-3` (only when `symmetric`), and the unital
/// form `LPMA2.1` (unit), `LPMA2.2` (multiplicativity), `LPMA2.3`
/// (`h⇀(g⇀b) = (h₁⇀1)(h₂g⇀b)`). A `remark-equivalence` failure is recorded
/// if the two forms disagree.
pub fn check_lpma<F: Scalar>(p: &PartialActionData<F>, symmetric: bool) -> Result<Report<F>> {
    need_side(p, Side::Left)?;
    let h = &*p.hopf;
    let a = &*p.alg;
    let (nh, na) = (h.dim(), a.dim());
    let f = p.field();
    let one = p.unit().to_vec();
    let terms: Vec<_> = (0..nh).map(|i| h.coproduct_terms(i)).collect();
    // hg[h2][g][b] = (b_h2 b_g) ⇀ a_b
    let hg: Vec<Vec<Vec<Vec<F>>>> = (0..nh)
        .map(|x| (0..nh).map(|g| (0..na).map(|b| p.act_elem(h.mul_basis(x, g), &a.e(b))).collect()).collect())
        .collect();
    let on_one: Vec<Vec<F>> = (0..nh).map(|i| p.act(i, &one)).collect();
    let mut failures = Vec::new();
    for j in 0..na {
        record(&mut failures, "LPMA-1", &[j], p.act_elem(h.unit(), &a.e(j)), a.e(j));
    }
    let unit_fail = !failures.is_empty();
    failures.extend(sweep(nh, |x, out| {
        for ai in 0..na {
            for bi in 0..na {
                let lhs = p.act(x, &a.product(&a.e(ai), &a.e(bi)));
                let mut rhs = zeros(f, na);
                for (i1, i2, c) in &terms[x] {
                    axpy(&mut rhs, c, &a.product(p.map.fiber(*i1, ai), p.map.fiber(*i2, bi)));
                }
                record(out, "LPMA2.2", &[x, ai, bi], lhs, rhs);
            }
        }
        for g in 0..nh {
            for bi in 0..na {
                let gb = p.map.fiber(g, bi);
                let lhs = p.act(x, gb);
                let mut rhs = zeros(f, na);
                for (i1, i2, c) in &terms[x] {
                    axpy(&mut rhs, c, &a.product(&on_one[*i1], &hg[*i2][g][bi]));
                }
                record(out, "LPMA2.3", &[x, g, bi], lhs, rhs);
                for ai in 0..na {
                    let lhs = p.act(x, &a.product(&a.e(ai), gb));
                    let mut rhs = zeros(f, na);
                    for (i1, i2, c) in &terms[x] {
                        axpy(&mut rhs, c, &a.product(p.map.fiber(*i1, ai), &hg[*i2][g][bi]));
                    }
                    record(out, "LPMA-2", &[x, ai, g, bi], lhs, rhs);
                    if symmetric {
                        let lhs = p.act(x, &a.product(gb, &a.e(ai)));
                        let mut rhs = zeros(f, na);
                        for (i1, i2, c) in &terms[x] {
                            axpy(&mut rhs, c, &a.product(&hg[*i1][g][bi], p.map.fiber(*i2, ai)));
                        }
                        record(out, "LPMA-3", &[x, ai, g, bi], lhs, rhs);
                    }
                }
            }
        }
    }));
    remark_equivalence(&mut failures, unit_fail, "LPMA-2", ["LPMA2.2", "LPMA2.3"]);
    Ok(Report::from_failures(failures))
}

fn remark_equivalence<F: Scalar>(failures: &mut Vec<Failure<F>>, unit_fail: bool, original: &str, unital: [&str; 2]) {
    let has = |law: &str| failures.iter().any(|f| f.law == law);
    let orig_ok = !unit_fail && !has(original);
    let unital_ok = !unit_fail && !has(unital[0]) && !has(unital[1]);
    if orig_ok != unital_ok {
        failures.push(Failure {
            law: "remark-equivalence".into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        });
    }
}

/// Right partial module algebra axioms; mirror of [`check_lpma`] with `RPMA` law names.
pub fn check_rpma<F: Scalar>(p: &PartialActionData<F>, symmetric: bool) -> Result<Report<F>> {
    need_side(p, Side::Right)?;
    let h = &*p.hopf;
    let a = &*p.alg;
    let (nh, na) = (h.dim(), a.dim());
    let f = p.field();
    let one = p.unit().to_vec();
    let terms: Vec<_> = (0..nh).map(|i| h.coproduct_terms(i)).collect();
    // gh[g][h1][b] = a_b ↼ (b_g b_h1)
    let gh: Vec<Vec<Vec<Vec<F>>>> = (0..nh)
        .map(|g| (0..nh).map(|x| (0..na).map(|b| p.act_elem(h.mul_basis(g, x), &a.e(b))).collect()).collect())
        .collect();
    let on_one: Vec<Vec<F>> = (0..nh).map(|i| p.act(i, &one)).collect();
    let mut failures = Vec::new();
    for j in 0..na {
        record(&mut failures, "RPMA-1", &[j], p.act_elem(h.unit(), &a.e(j)), a.e(j));
    }
    let unit_fail = !failures.is_empty();
    failures.extend(sweep(nh, |x, out| {
        for ai in 0..na {
            for bi in 0..na {
                let lhs = p.act(x, &a.product(&a.e(ai), &a.e(bi)));
                let mut rhs = zeros(f, na);
                for (i1, i2, c) in &terms[x] {
                    axpy(&mut rhs, c, &a.product(p.map.fiber(*i1, ai), p.map.fiber(*i2, bi)));
                }
                record(out, "RPMA2.2", &[x, ai, bi], lhs, rhs);
            }
        }
        for g in 0..nh {
            for bi in 0..na {
                let bg = p.map.fiber(g, bi);
                let lhs = p.act(x, bg);
                let mut rhs = zeros(f, na);
                for (i1, i2, c) in &terms[x] {
                    axpy(&mut rhs, c, &a.product(&gh[g][*i1][bi], &on_one[*i2]));
                }
                record(out, "RPMA2.3", &[x, g, bi], lhs, rhs);
                for ai in 0..na {
                    let lhs = p.act(x, &a.product(bg, &a.e(ai)));
                    let mut rhs = zeros(f, na);
                    for (i1, i2, c) in &terms[x] {
                        axpy(&mut rhs, c, &a.product(&gh[g][*i1][bi], p.map.fiber(*i2, ai)));
                    }
                    record(out, "RPMA-2", &[x, ai, g, bi], lhs, rhs);
                    if symmetric {
                        let lhs = p.act(x, &a.product(&a.e(ai), bg));
                        let mut rhs = zeros(f, na);
                        for (i1, i2, c) in &terms[x] {
                            axpy(&mut rhs, c, &a.product(p.map.fiber(*i1, ai), &gh[g][*i2][bi]));
                        }
                        record(out, "RPMA-3", &[x, ai, g, bi], lhs, rhs);
                    }
                }
            }
        }
    }));
    remark_equivalence(&mut failures, unit_fail, "RPMA-2", ["RPMA2.2", "RPMA2.3"]);
    Ok(Report::from_failures(failures))
}

/// Dispatches to [`check_lpma`] or [`check_rpma`].
pub fn check_action<F: Scalar>(p: &PartialActionData<F>, symmetric: bool) -> Result<Report<F>> {
    match p.side {
        Side::Left => check_lpma(p, symmetric),
        Side::Right => check_rpma(p, symmetric),
    }
}

/// `h·1_A = ε(h)1_A` for every basis element `h`.
pub fn is_global<F: Scalar>(p: &PartialActionData<F>) -> bool {
    let one = p.unit().to_vec();
    (0..p.hopf.dim()).all(|i| p.act(i, &one) == scaled(&p.hopf.counit[i], &one))
}

/// Left and right partial actions on the same algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialBimoduleData<F> {
    pub left: PartialActionData<F>,
    pub right: PartialActionData<F>,
}

impl<F: Scalar> PartialBimoduleData<F> {
    /// Pairs two actions after checking sides and shared data.
    pub fn new(left: PartialActionData<F>, right: PartialActionData<F>) -> Result<Self> {
        need_side(&left, Side::Left)?;
        need_side(&right, Side::Right)?;
        if !same(&left.hopf, &right.hopf) {
            return Err(Error::Precondition("left and right actions use different Hopf algebras".into()));
        }
        if !same(&left.alg, &right.alg) {
            return Err(Error::Precondition("left and right actions act on different algebras".into()));
        }
        Ok(PartialBimoduleData { left, right })
    }

    /// Pairs two actions and requires both axiom suites and the compatibility law.
    pub fn certified(left: PartialActionData<F>, right: PartialActionData<F>) -> Result<Self> {
        let b = Self::new(left, right)?;
        let r = certify_bimodule(&b)?;
        if !r.passed() {
            return Err(Error::Uncertified(format!("partial bimodule: {}", r.summary())));
        }
        Ok(b)
    }

    pub fn hopf(&self) -> &Arc<HopfData<F>> {
        &self.left.hopf
    }
    pub fn alg(&self) -> &Arc<AlgebraData<F>> {
        &self.left.alg
    }
}

/// `h⇀(a↼g) = (h⇀a)↼g` over all basis triples.
pub fn check_bimodule<F: Scalar>(b: &PartialBimoduleData<F>) -> Result<Report<F>> {
    if !same(&b.left.hopf, &b.right.hopf) || !same(&b.left.alg, &b.right.alg) {
        return Err(Error::Precondition("left and right actions do not share their Hopf algebra and algebra".into()));
    }
    let (nh, na) = (b.hopf().dim(), b.alg().dim());
    let failures = sweep(nh, |x, out| {
        for ai in 0..na {
            let ha = b.left.map.fiber(x, ai);
            for g in 0..nh {
                let lhs = b.left.act(x, b.right.map.fiber(g, ai));
                let rhs = b.right.act(g, ha);
                record(out, "compat", &[x, ai, g], lhs, rhs);
            }
        }
    });
    Ok(Report::from_failures(failures))
}

/// Both one-sided suites (non-symmetric) plus compatibility.
pub fn certify_bimodule<F: Scalar>(b: &PartialBimoduleData<F>) -> Result<Report<F>> {
    Ok(check_lpma(&b.left, false)?
        .merge(check_rpma(&b.right, false)?)
        .merge(check_bimodule(b)?))
}

fn certify_action<F: Scalar>(p: PartialActionData<F>, symmetric: bool) -> Result<PartialActionData<F>> {
    let r = check_action(&p, symmetric)?;
    if !r.passed() {
        return Err(Error::Internal(format!("constructed action fails its axioms: {}", r.summary())));
    }
    Ok(p)
}

/// The global action as an operator family on its algebra.
pub fn action_ops<F: Scalar>(p: &PartialActionData<F>) -> Vec<Mat<F>> {
    (0..p.hopf.dim()).map(|i| p.op(i)).collect()
}

/// The partial action `h⇀a = e(h▷a)` on the ideal `eB`, from a global left action on `B`.
///
/// The ideal gets the basis `e·b_j` for those `j` that enlarge the span, in order.
pub fn induce_left<F: Scalar>(global: &PartialActionData<F>, e: &[F]) -> Result<PartialActionData<F>> {
    need_side(global, Side::Left)?;
    if !is_global(global) {
        return Err(Error::Precondition("induce_left needs a global action".into()));
    }
    let r = check_lpma(global, false)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("global action: {}", r.summary())));
    }
    let b = &*global.alg;
    let f = b.field;
    if e.len() != b.dim() {
        return Err(Error::Shape(format!("idempotent has length {}, expected {}", e.len(), b.dim())));
    }
    if is_zero_vec(e) || b.product(e, e) != e {
        return Err(Error::Precondition("e is not a nonzero idempotent".into()));
    }
    let eb: Vec<Vec<F>> = (0..b.dim()).map(|j| b.product(e, &b.e(j))).collect();
    let (frame, kept) = Frame::greedy(f, b.dim(), &eb)?;
    for (t, v) in frame.vectors().iter().enumerate() {
        if b.product(e, v) != *v || b.product(v, e) != *v {
            return Err(Error::Precondition(format!("e is not an identity on eB (basis vector {t})")));
        }
    }
    let d = frame.dim();
    let coords = |v: &[F], what: &str| {
        frame
            .coordinates(v)
            .ok_or_else(|| Error::Precondition(format!("{what} leaves the ideal eB")))
    };
    let mut mul = Tensor3::zeros(f, [d, d, d]);
    for (i, u) in frame.vectors().iter().enumerate() {
        for (j, v) in frame.vectors().iter().enumerate() {
            mul.fiber_mut(i, j).clone_from_slice(&coords(&b.product(u, v), "a product")?);
        }
    }
    let labels = kept.iter().map(|&j| format!("e*{}", b.basis[j])).collect();
    let unit = coords(e, "e")?;
    let alg = Arc::new(AlgebraData::new(f, labels, mul, Some(unit))?);
    let nh = global.hopf.dim();
    let mut map = Tensor3::zeros(f, [nh, d, d]);
    for x in 0..nh {
        for (j, v) in frame.vectors().iter().enumerate() {
            let w = b.product(e, &global.act(x, v));
            map.fiber_mut(x, j).clone_from_slice(&coords(&w, "the induced action")?);
        }
    }
    let p = PartialActionData::new(global.hopf.clone(), alg, Side::Left, map)?;
    certify_action(p, false)
}

/// The partial bimodule induced on a unital subalgebra `A ⊆ B` of a global bimodule algebra:
/// `h⇀a = 1_A(h▷a)`, `a↼h = (a◁h)1_A`. Requires `(a◁h)(k▷b) = (a◁h)1_A(k▷b) ∈ A`.
pub fn induce_bimodule<F: Scalar>(b: &BimoduleAlgebra<F>, a_basis: &Subspace<F>, unit_a: &[F]) -> Result<PartialBimoduleData<F>> {
    let r = b.check()?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("ambient bimodule algebra: {}", r.summary())));
    }
    let alg = &b.alg;
    let f = alg.field;
    if a_basis.ambient_dim() != alg.dim() || unit_a.len() != alg.dim() {
        return Err(Error::Shape("subalgebra data does not match the ambient dimension".into()));
    }
    if !a_basis.has(unit_a) {
        return Err(Error::Precondition("the unit of A does not lie in A".into()));
    }
    let basis = a_basis.basis();
    for (i, u) in basis.iter().enumerate() {
        if alg.product(unit_a, u) != *u || alg.product(u, unit_a) != *u {
            return Err(Error::Precondition(format!("unit_A is not an identity for basis vector {i} of A")));
        }
        for (j, v) in basis.iter().enumerate() {
            if !a_basis.has(&alg.product(u, v)) {
                return Err(Error::Precondition(format!("A is not closed under multiplication at ({i}, {j})")));
            }
        }
    }
    let nh = b.hopf.dim();
    for (i, u) in basis.iter().enumerate() {
        for x in 0..nh {
            let ux = b.right(u, x);
            let ux1 = alg.product(&ux, unit_a);
            for k in 0..nh {
                for (j, v) in basis.iter().enumerate() {
                    let kv = b.left(k, v);
                    let lhs = alg.product(&ux, &kv);
                    let rhs = alg.product(&ux1, &kv);
                    if lhs != rhs || !a_basis.has(&lhs) {
                        return Err(Error::Precondition(format!(
                            "condition (a◁h)(k▷b) = (a◁h)1_A(k▷b) in A fails at (a, h, k, b) = ({i}, {x}, {k}, {j})"
                        )));
                    }
                }
            }
        }
    }
    let labels = (0..a_basis.dim()).map(|i| format!("a{i}")).collect();
    let mut sub_alg = alg.restrict(a_basis, labels)?;
    sub_alg.unit = a_basis.coordinates(unit_a);
    let sub_alg = Arc::new(sub_alg);
    let d = a_basis.dim();
    let mut lmap = Tensor3::zeros(f, [nh, d, d]);
    let mut rmap = Tensor3::zeros(f, [nh, d, d]);
    let coords = |v: &[F]| {
        a_basis
            .coordinates(v)
            .ok_or_else(|| Error::Precondition("an induced action leaves A".into()))
    };
    for x in 0..nh {
        for (j, v) in basis.iter().enumerate() {
            lmap.fiber_mut(x, j).clone_from_slice(&coords(&alg.product(unit_a, &b.left(x, v)))?);
            rmap.fiber_mut(x, j).clone_from_slice(&coords(&alg.product(&b.right(v, x), unit_a))?);
        }
    }
    let left = PartialActionData::new(b.hopf.clone(), sub_alg.clone(), Side::Left, lmap)?;
    let right = PartialActionData::new(b.hopf.clone(), sub_alg, Side::Right, rmap)?;
    let out = PartialBimoduleData::new(left, right)?;
    let r = certify_bimodule(&out)?;
    if !r.passed() {
        return Err(Error::Internal(format!("induced bimodule fails its axioms: {}", r.summary())));
    }
    Ok(out)
}

/// Pairs a left partial action with the ε-action on the right.
pub fn trivialize_right<F: Scalar>(left: &PartialActionData<F>) -> Result<PartialBimoduleData<F>> {
    need_side(left, Side::Left)?;
    let right = PartialActionData::trivial(left.hopf.clone(), left.alg.clone(), Side::Right)?;
    PartialBimoduleData::certified(left.clone(), right)
}

/// A unital partial action of a finite group: central idempotents `1_g` generating `D_g = A·1_g`,
/// and for each `g` the map `a ↦ α_g(a·1_{g⁻¹})` on all of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPartialActionData<F> {
    pub group: GroupTable,
    pub alg: Arc<AlgebraData<F>>,
    pub idempotents: Vec<Vec<F>>,
    pub alphas: Vec<Mat<F>>,
}

impl<F: Scalar> GroupPartialActionData<F> {
    pub fn new(group: GroupTable, alg: Arc<AlgebraData<F>>, idempotents: Vec<Vec<F>>, alphas: Vec<Mat<F>>) -> Result<Self> {
        let (n, d) = (group.order(), alg.dim());
        alg.unit_vec()?;
        if idempotents.len() != n || alphas.len() != n {
            return Err(Error::Shape(format!("need one idempotent and one map per group element ({n})")));
        }
        if idempotents.iter().any(|e| e.len() != d) || alphas.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Shape(format!("idempotents and maps must live on the {d}-dimensional algebra")));
        }
        Ok(GroupPartialActionData {
            group,
            alg,
            idempotents,
            alphas,
        })
    }
}

/// Conditions of a unital partial group action: central idempotents, `α_1 = id`,
/// `α_g` an algebra isomorphism `D_{g⁻¹} → D_g`, `α_g(D_{g⁻¹}∩D_h) = D_g∩D_{gh}`
/// and `α_g α_h = α_{gh}` on `D_{h⁻¹}∩D_{(gh)⁻¹}`.
pub fn check_group_partial_action<F: Scalar>(gpa: &GroupPartialActionData<F>) -> Result<Report<F>> {
    let a = &*gpa.alg;
    let g = &gpa.group;
    let one = a.unit_vec()?.to_vec();
    let (n, d) = (g.order(), a.dim());
    let e = g.identity();
    let id = &gpa.idempotents;
    let al = &gpa.alphas;
    let mut out = Vec::new();
    record(&mut out, "unit-domain", &[e], id[e].clone(), one.clone());
    for j in 0..d {
        record(&mut out, "unit-identity", &[e, j], al[e].apply(&a.e(j)), a.e(j));
    }
    for x in 0..n {
        let inv = g.inverse(x);
        record(&mut out, "idempotent", &[x], a.product(&id[x], &id[x]), id[x].clone());
        for j in 0..d {
            record(&mut out, "central", &[x, j], a.product(&id[x], &a.e(j)), a.product(&a.e(j), &id[x]));
            let bj = a.e(j);
            record(&mut out, "domain", &[x, j], al[x].apply(&bj), al[x].apply(&a.product(&bj, &id[inv])));
            let img = al[x].apply(&bj);
            record(&mut out, "range", &[x, j], a.product(&img, &id[x]), img);
            for k in 0..d {
                let lhs = al[x].apply(&a.product(&bj, &a.e(k)));
                let rhs = a.product(&al[x].apply(&bj), &al[x].apply(&a.e(k)));
                record(&mut out, "multiplicative", &[x, j, k], lhs, rhs);
            }
        }
        record(&mut out, "unital", &[x], al[x].apply(&id[inv]), id[x].clone());
        for y in 0..n {
            let xy = g.mul(x, y);
            let lhs = al[x].apply(&a.product(&id[inv], &id[y]));
            let rhs = a.product(&id[x], &id[xy]);
            record(&mut out, "(2)", &[x, y], lhs, rhs);
            let dom = a.product(&id[g.inverse(y)], &id[g.inverse(xy)]);
            for j in 0..d {
                let r = a.product(&a.e(j), &dom);
                record(&mut out, "(3)", &[x, y, j], al[x].apply(&al[y].apply(&r)), al[xy].apply(&r));
            }
        }
    }
    Ok(Report::from_failures(out))
}

/// `g⇀a = α_g(a·1_{g⁻¹})` as a symmetric partial action of `kG`.
pub fn group_to_kg<F: Scalar>(gpa: &GroupPartialActionData<F>) -> Result<PartialActionData<F>> {
    let r = check_group_partial_action(gpa)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("not a unital partial group action: {}", r.summary())));
    }
    let a = gpa.alg.clone();
    let hopf = Arc::new(group_algebra_default(&gpa.group, a.field)?);
    let (n, d) = (gpa.group.order(), a.dim());
    let mut map = Tensor3::zeros(a.field, [n, d, d]);
    for x in 0..n {
        for j in 0..d {
            map.fiber_mut(x, j).clone_from_slice(gpa.alphas[x].row(j));
        }
    }
    let p = PartialActionData::new(hopf, a, Side::Left, map)?;
    certify_action(p, true)
}

/// Recovers `1_g = g⇀1_A` and `α_g` from a symmetric partial action of the group algebra of `group`.
pub fn kg_to_group<F: Scalar>(p: &PartialActionData<F>, group: &GroupTable) -> Result<GroupPartialActionData<F>> {
    need_side(p, Side::Left)?;
    let kg: HopfData<F> = group_algebra_default(group, p.field())?;
    if kg.alg.mul != p.hopf.alg.mul || kg.comul != p.hopf.comul || kg.counit != p.hopf.counit {
        return Err(Error::Precondition("the Hopf algebra is not the group algebra of the given table".into()));
    }
    let r = check_lpma(p, true)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("not a symmetric partial action: {}", r.summary())));
    }
    let a = &*p.alg;
    let one = p.unit().to_vec();
    let mut idempotents = Vec::new();
    for x in 0..group.order() {
        let e = p.act(x, &one);
        if a.product(&e, &e) != e {
            return Err(Error::Precondition(format!("g⇀1 is not idempotent for g = {x}")));
        }
        if (0..a.dim()).any(|j| a.product(&e, &a.e(j)) != a.product(&a.e(j), &e)) {
            return Err(Error::Precondition(format!("g⇀1 is not central for g = {x}")));
        }
        idempotents.push(e);
    }
    let alphas = action_ops(p);
    let gpa = GroupPartialActionData::new(group.clone(), p.alg.clone(), idempotents, alphas)?;
    let r = check_group_partial_action(&gpa)?;
    if !r.passed() {
        return Err(Error::Internal(format!("recovered group action fails its axioms: {}", r.summary())));
    }
    Ok(gpa)
}

/// The dual action `p_g ▷ u_h = δ_{g,h} u_h` of `(kG)*` on `kG`.
pub fn dual_group_action<F: Scalar>(group: &GroupTable, field: FieldSpec) -> Result<PartialActionData<F>> {
    let kg: HopfData<F> = group_algebra_default(group, field)?;
    let dual = Arc::new(crate::algebra::dual_hopf(&kg)?);
    let n = group.order();
    let mut map = Tensor3::zeros(field, [n, n, n]);
    for x in 0..n {
        map.set(x, x, x, F::one_in(field));
    }
    let p = PartialActionData::new(dual, Arc::new(kg.alg.clone()), Side::Left, map)?;
    certify_action(p, true)
}

/// `A = e_N·kG` with the partial `(kG)*`-action `p_g⇀e_N u_h = (1/|N|) e_N u_h` if `g⁻¹h ∈ N`, else 0.
///
/// `A` has basis `e_N u_h` over coset representatives `h` (smallest index in each coset).
pub fn en_kg_example<F: Scalar>(group: &GroupTable, normal: &[usize], field: FieldSpec) -> Result<PartialActionData<F>> {
    if !group.is_normal_subgroup(normal) {
        return Err(Error::Precondition(format!("{normal:?} is not a normal subgroup")));
    }
    let size = normal.len() as i64;
    if !field.is_unit_integer(size) {
        return Err(Error::Precondition(format!("|N| = {size} vanishes in {field}")));
    }
    let n = group.order();
    let coset_rep = |h: usize| normal.iter().map(|&m| group.mul(h, m)).min().expect("nonempty");
    let mut reps: Vec<usize> = (0..n).map(coset_rep).collect();
    reps.sort_unstable();
    reps.dedup();
    let pos = |h: usize| reps.iter().position(|&r| r == coset_rep(h)).expect("rep");
    let d = reps.len();
    let one = F::one_in(field);
    let mut mul = Tensor3::zeros(field, [d, d, d]);
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            mul.set(i, j, pos(group.mul(x, y)), one.clone());
        }
    }
    let mut unit = zeros(field, d);
    unit[pos(group.identity())] = one;
    let labels = reps.iter().map(|r| format!("eN*u{r}")).collect();
    let alg = Arc::new(AlgebraData::new(field, labels, mul, Some(unit))?);
    let kg: HopfData<F> = group_algebra_default(group, field)?;
    let dual = Arc::new(crate::algebra::dual_hopf(&kg)?);
    let w = F::from_ratio(field, 1, size)?;
    let mut map = Tensor3::zeros(field, [n, d, d]);
    for g in 0..n {
        for (j, &h) in reps.iter().enumerate() {
            if normal.contains(&group.mul(group.inverse(g), h)) {
                map.set(g, j, j, w.clone());
            }
        }
    }
    let p = PartialActionData::new(dual, alg, Side::Left, map)?;
    certify_action(p, false)
}

