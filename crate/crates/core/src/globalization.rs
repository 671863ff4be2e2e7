//! Globalizations: the standard one inside `Hom(H⊗H, A)` for partial bimodule algebras,
//! the standard one inside `H⊗A⊗H` for partial bicomodule algebras, the comparison map
//! onto the standard globalization, minimality, and the map `Ψ` between the two.

use std::sync::Arc;

use crate::actions::{certify_bimodule, same, PartialBimoduleData};
use crate::algebra::{hom_hh_a, tensor_mul, AlgebraData, BimoduleAlgebra, HopfData};
use crate::coactions::{
    append_unit, certify_bicomodule, coaction_to_dual_action, left_coaction_to_dual_action, prepend_unit, sandwich,
    tensor_hah, PartialBicomoduleData,
};
use crate::error::{Error, Result};
use crate::linalg::{closure_fixpoint, is_zero_vec, zeros, Frame, Mat, Subspace, Tensor3};
use crate::report::{record, sweep, Report};
use crate::scalar::Scalar;

/// A global `H`-bimodule algebra `E`, a subspace `B ⊆ E` and a map `θ: A → E` (row `i` is `θ(a_i)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalizationCandidate<F> {
    pub ambient: BimoduleAlgebra<F>,
    pub b: Subspace<F>,
    pub theta: Mat<F>,
    /// Coordinates of `1_A`.
    pub a_unit: Vec<F>,
}

impl<F: Scalar> GlobalizationCandidate<F> {
    pub fn theta_of(&self, a: &[F]) -> Vec<F> {
        self.theta.apply(a)
    }

    pub fn theta_one(&self) -> Vec<F> {
        self.theta.apply(&self.a_unit)
    }

    /// `h▷θ(a)◁k` over basis `h, a, k` in lexicographic order.
    pub fn spanning_vectors(&self) -> Vec<Vec<F>> {
        spanning(&self.ambient, &self.theta)
    }
}

fn spanning<F: Scalar>(amb: &BimoduleAlgebra<F>, theta: &Mat<F>) -> Vec<Vec<F>> {
    let nh = amb.hopf.dim();
    let mut out = Vec::with_capacity(nh * nh * theta.rows());
    for h in 0..nh {
        for a in 0..theta.rows() {
            for k in 0..nh {
                out.push(amb.both(h, theta.row(a), k));
            }
        }
    }
    out
}

/// Outcome of [`verify_globalization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalizationCertificate {
    pub theta_multiplicative: bool,
    /// `B` is a subalgebra stable under both actions.
    pub b_closed: bool,
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    pub lemaco_ok: (bool, bool, bool, bool),
    /// First witness of each failed check.
    pub witnesses: Vec<String>,
}

impl GlobalizationCertificate {
    pub fn all_true(&self) -> bool {
        let (i, ii, iii, iv) = self.lemaco_ok;
        self.theta_multiplicative && self.b_closed && self.condition1_ok && self.condition2_ok && i && ii && iii && iv
    }

    /// The defining conditions hold but a consequence of them fails.
    pub fn inconsistent(&self) -> bool {
        let (i, ii, iii, iv) = self.lemaco_ok;
        self.theta_multiplicative && self.condition1_ok && self.condition2_ok && !(i && ii && iii && iv)
    }
}

/// Checks that `(B, θ)` globalizes the partial bimodule algebra `p`:
/// `(θ(a)◁h)(g▷θ(b)) = θ[(a↼h)(g⇀b)]`, `B = H▷θ(A)◁H`, and the derived identities
/// (i) `(h▷θ(a)◁k)(h'▷θ(b)◁k') = h₁▷θ[(a↼kS(k'₁))(S(h₂)h'⇀b)]◁k'₂`,
/// (ii) `θ(1)(h▷θ(a)) = θ(h⇀a)`, (iii) `(θ(a)◁h)θ(1) = θ(a↼h)`,
/// (iv) `θ(1)(h▷θ(a)◁k)θ(1) = θ(h⇀a↼k)`.
pub fn verify_globalization<F: Scalar>(c: &GlobalizationCandidate<F>, p: &PartialBimoduleData<F>) -> Result<GlobalizationCertificate> {
    let amb = &c.ambient;
    let h = &**p.hopf();
    let a = &**p.alg();
    let (nh, na, ne) = (h.dim(), a.dim(), amb.dim());
    if !same(&amb.hopf, p.hopf()) {
        return Err(Error::Precondition("candidate and partial structure use different Hopf algebras".into()));
    }
    if c.theta.rows() != na || c.theta.cols() != ne || c.b.ambient_dim() != ne || c.a_unit.len() != na {
        return Err(Error::Shape("candidate dimensions do not match".into()));
    }
    let r = amb.check()?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("candidate bimodule algebra: {}", r.summary())));
    }
    if c.theta.rank() != na {
        return Err(Error::Precondition("θ is not injective".into()));
    }
    let f = a.field;
    let th = |v: &[F]| c.theta.apply(v);
    let t1 = c.theta_one();
    let left = &p.left;
    let right = &p.right;

    let mut failures = Vec::new();
    for i in 0..na {
        for j in 0..na {
            let lhs = amb.alg.product(c.theta.row(i), c.theta.row(j));
            record(&mut failures, "theta-mult", &[i, j], lhs, th(&a.product(&a.e(i), &a.e(j))));
        }
    }
    let b = &c.b;
    for (i, u) in b.basis().iter().enumerate() {
        for (j, v) in b.basis().iter().enumerate() {
            let w = amb.alg.product(u, v);
            if !b.has(&w) {
                record(&mut failures, "b-closed", &[i, j], b.reduce(&w), zeros(f, ne));
            }
        }
        for x in 0..nh {
            for w in [amb.left(x, u), amb.right(u, x)] {
                if !b.has(&w) {
                    record(&mut failures, "b-closed", &[i, x], b.reduce(&w), zeros(f, ne));
                }
            }
        }
    }
    let cond1 = sweep(na, |ai, out| {
        let ea = a.e(ai);
        for x in 0..nh {
            let ta_h = amb.right(c.theta.row(ai), x);
            let a_h = right.act(x, &ea);
            for g in 0..nh {
                for bi in 0..na {
                    let lhs = amb.alg.product(&ta_h, &amb.left(g, c.theta.row(bi)));
                    let rhs = th(&a.product(&a_h, &left.act(g, &a.e(bi))));
                    record(out, "condition-1", &[ai, x, g, bi], lhs, rhs);
                }
            }
        }
    });
    failures.extend(cond1);
    let span = Subspace::span(f, ne, spanning(amb, &c.theta))?;
    if !(span.is_subspace_of(b) && b.is_subspace_of(&span)) {
        failures.push(crate::report::Failure {
            law: "condition-2".into(),
            indices: vec![span.dim(), b.dim()],
            lhs: vec![],
            rhs: vec![],
        });
    }

    let antipode = |i: usize| h.antipode_of(&h.e(i));
    let lem1 = sweep(nh, |hi, out| {
        for ai in 0..na {
            for k in 0..nh {
                let x = amb.both(hi, c.theta.row(ai), k);
                for h2 in 0..nh {
                    for bi in 0..na {
                        for k2 in 0..nh {
                            let y = amb.both(h2, c.theta.row(bi), k2);
                            let lhs = amb.alg.product(&x, &y);
                            let mut rhs = zeros(f, ne);
                            for (p1, p2, cp) in h.coproduct_terms(hi) {
                                let s_h = h.product(&antipode(p2), &h.e(h2));
                                let gb = left.act_elem(&s_h, &a.e(bi));
                                for (q1, q2, cq) in h.coproduct_terms(k2) {
                                    let k_s = h.product(&h.e(k), &antipode(q1));
                                    let ak = right.act_elem(&k_s, &a.e(ai));
                                    let inner = th(&a.product(&ak, &gb));
                                    let term = amb.both(p1, &inner, q2);
                                    crate::linalg::axpy(&mut rhs, &cp.mul_ref(&cq), &term);
                                }
                            }
                            record(out, "lemaco-i", &[hi, ai, k, h2, bi, k2], lhs, rhs);
                        }
                    }
                }
            }
        }
    });
    failures.extend(lem1);
    for x in 0..nh {
        for ai in 0..na {
            let ea = a.e(ai);
            let ta = c.theta.row(ai);
            let lhs = amb.alg.product(&t1, &amb.left(x, ta));
            record(&mut failures, "lemaco-ii", &[x, ai], lhs, th(&left.act(x, &ea)));
            let lhs = amb.alg.product(&amb.right(ta, x), &t1);
            record(&mut failures, "lemaco-iii", &[x, ai], lhs, th(&right.act(x, &ea)));
            for k in 0..nh {
                let mid = amb.alg.product(&t1, &amb.both(x, ta, k));
                let lhs = amb.alg.product(&mid, &t1);
                let rhs = th(&left.act(x, &right.act(k, &ea)));
                record(&mut failures, "lemaco-iv", &[x, ai, k], lhs, rhs);
            }
        }
    }
    let report = Report::from_failures(failures);
    let laws = [
        "theta-mult",
        "b-closed",
        "condition-1",
        "condition-2",
        "lemaco-i",
        "lemaco-ii",
        "lemaco-iii",
        "lemaco-iv",
    ];
    let witnesses = laws
        .iter()
        .filter_map(|l| report.first(l).map(|w| format!("{} at {:?}", w.law, w.indices)))
        .collect();
    let ok = |l: &str| !report.fails(l);
    Ok(GlobalizationCertificate {
        theta_multiplicative: ok("theta-mult"),
        b_closed: ok("b-closed"),
        condition1_ok: ok("condition-1"),
        condition2_ok: ok("condition-2"),
        lemaco_ok: (ok("lemaco-i"), ok("lemaco-ii"), ok("lemaco-iii"), ok("lemaco-iv")),
        witnesses,
    })
}

/// The standard globalization of a partial bimodule algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleGlobalization<F> {
    pub source: PartialBimoduleData<F>,
    /// `Hom(H⊗H, A)` with its bimodule structure.
    pub ambient: BimoduleAlgebra<F>,
    /// Row `i` is `φ(a_i): k⊗k' ↦ k⇀a_i↼k'`.
    pub phi: Mat<F>,
    pub b_basis: Subspace<F>,
    /// `B` in the coordinates of `b_basis`.
    pub b: BimoduleAlgebra<F>,
}

impl<F: Scalar> BimoduleGlobalization<F> {
    pub fn dim(&self) -> usize {
        self.b_basis.dim()
    }

    pub fn candidate(&self) -> GlobalizationCandidate<F> {
        GlobalizationCandidate {
            ambient: self.ambient.clone(),
            b: self.b_basis.clone(),
            theta: self.phi.clone(),
            a_unit: self.source.alg().unit_vec().expect("unital").to_vec(),
        }
    }

    /// Whether `φ(A)` is a left ideal and a right ideal of `B`.
    pub fn phi_ideal_flags(&self) -> Result<(bool, bool)> {
        let f = self.phi.field();
        let img = Subspace::span(f, self.ambient.dim(), self.phi.row_vecs())?;
        let mul = |x: &[F], y: &[F]| self.ambient.alg.product(x, y);
        let mut left = true;
        let mut right = true;
        for a in img.basis() {
            for b in self.b_basis.basis() {
                left &= img.has(&mul(b, a));
                right &= img.has(&mul(a, b));
            }
        }
        Ok((left, right))
    }
}

fn phi_matrix<F: Scalar>(p: &PartialBimoduleData<F>) -> Result<Mat<F>> {
    let a = &**p.alg();
    let (n, m) = (p.hopf().dim(), a.dim());
    let f = a.field;
    let mut rows = Vec::with_capacity(m);
    for ai in 0..m {
        let mut v = zeros(f, n * n * m);
        let ea = a.e(ai);
        for i in 0..n {
            for j in 0..n {
                let w = p.left.act(i, &p.right.act(j, &ea));
                for (l, c) in w.into_iter().enumerate() {
                    v[(i * n + j) * m + l] = c;
                }
            }
        }
        rows.push(v);
    }
    Mat::from_rows(f, n * n * m, rows)
}

/// Builds `B = span{h▷φ(a)◁k} ⊆ Hom(H⊗H, A)` and certifies it as a globalization.
pub fn standard_globalize_bimodule<F: Scalar>(p: &PartialBimoduleData<F>) -> Result<BimoduleGlobalization<F>> {
    let r = certify_bimodule(p)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("partial bimodule: {}", r.summary())));
    }
    let a = &**p.alg();
    let ambient = hom_hh_a(p.hopf().clone(), a)?;
    let phi = phi_matrix(p)?;
    if phi.rank() != a.dim() {
        return Err(Error::Internal("φ is not injective".into()));
    }
    let b_basis = Subspace::span(a.field, ambient.dim(), spanning(&ambient, &phi))?;
    let labels = (0..b_basis.dim()).map(|i| format!("b{i}")).collect();
    let b = ambient.restrict(&b_basis, labels)?;
    let g = BimoduleGlobalization {
        source: p.clone(),
        ambient,
        phi,
        b_basis,
        b,
    };
    let cert = verify_globalization(&g.candidate(), p)?;
    if !cert.all_true() {
        return Err(Error::Internal(format!("standard globalization fails: {:?}", cert.witnesses)));
    }
    Ok(g)
}

/// For a left partial action paired with the ε-action on the right, and a candidate whose
/// right action is also ε: returns the truth of `θ(h⇀a) = θ(1)(h▷θ(a))` and of
/// `(θ(a)◁h)(k▷θ(b)) = θ((a↼h)(k⇀b))`.
pub fn motivacao_equivalence<F: Scalar>(c: &GlobalizationCandidate<F>, p: &PartialBimoduleData<F>) -> Result<(bool, bool)> {
    let h = &**p.hopf();
    let a = &**p.alg();
    let amb = &c.ambient;
    let (nh, na, ne) = (h.dim(), a.dim(), amb.dim());
    if c.theta.rows() != na || c.theta.cols() != ne {
        return Err(Error::Shape("candidate dimensions do not match".into()));
    }
    for x in 0..nh {
        let eps = &h.counit[x];
        let want_a = Mat::identity(a.field, na);
        let want_e = Mat::identity(a.field, ne);
        let scale = |m: &Mat<F>| {
            let rows = m.row_vecs().into_iter().map(|r| crate::linalg::scaled(eps, &r)).collect();
            Mat::from_rows(a.field, m.cols(), rows).expect("square")
        };
        if p.right.op(x) != scale(&want_a) || amb.right_ops[x] != scale(&want_e) {
            return Err(Error::Precondition("both right actions must be the ε-action".into()));
        }
    }
    let t1 = c.theta_one();
    let th = |v: &[F]| c.theta.apply(v);
    let mut cond2 = true;
    for x in 0..nh {
        for ai in 0..na {
            let lhs = th(&p.left.act(x, &a.e(ai)));
            cond2 &= lhs == amb.alg.product(&t1, &amb.left(x, c.theta.row(ai)));
        }
    }
    let mut cond3 = true;
    for ai in 0..na {
        for x in 0..nh {
            for k in 0..nh {
                for bi in 0..na {
                    let lhs = amb.alg.product(&amb.right(c.theta.row(ai), x), &amb.left(k, c.theta.row(bi)));
                    let rhs = th(&a.product(&p.right.act(x, &a.e(ai)), &p.left.act(k, &a.e(bi))));
                    cond3 &= lhs == rhs;
                }
            }
        }
    }
    Ok((cond2, cond3))
}

/// The map `Φ: B' → B`, `h▷θ(a)◁k ↦ h▷φ(a)◁k`, onto the standard globalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<F> {
    /// A basis of `B'` chosen among the spanning vectors.
    pub frame: Frame<F>,
    /// Row `i` is `Φ(frame_i)` in the coordinates of the standard `b_basis`.
    pub matrix: Mat<F>,
    /// `ker Φ` in the candidate's ambient coordinates.
    pub kernel: Subspace<F>,
    pub surjective: bool,
    pub injective: bool,
    pub multiplicative: bool,
    pub bimodule_map: bool,
}

impl<F: Scalar> Comparison<F> {
    /// `Φ(x)` in standard `b_basis` coordinates, for `x ∈ B'`.
    pub fn apply(&self, x: &[F]) -> Option<Vec<F>> {
        self.frame.coordinates(x).map(|c| self.matrix.apply(&c))
    }
}

pub fn comparison_map<F: Scalar>(c: &GlobalizationCandidate<F>, std: &BimoduleGlobalization<F>) -> Result<Comparison<F>> {
    let cert = verify_globalization(c, &std.source)?;
    if !cert.all_true() {
        return Err(Error::Precondition(format!("candidate is not a globalization: {:?}", cert.witnesses)));
    }
    let f = std.phi.field();
    let ne = c.ambient.dim();
    let v = c.spanning_vectors();
    let w = std.candidate().spanning_vectors();
    let vm = Mat::from_rows(f, ne, v.clone())?;
    for rel in vm.kernel().basis() {
        let mut img = zeros(f, std.ambient.dim());
        for (x, wt) in rel.iter().zip(&w) {
            crate::linalg::axpy(&mut img, x, wt);
        }
        if !is_zero_vec(&img) {
            let support: Vec<usize> = (0..rel.len()).filter(|&t| !rel[t].is_zero()).collect();
            return Err(Error::Precondition(format!(
                "Φ is not well defined: a relation among spanning vectors {support:?} of B' does not hold in B"
            )));
        }
    }
    let (frame, kept) = Frame::greedy(f, ne, &v)?;
    let to_b = |x: &[F]| {
        std.b_basis
            .coordinates(x)
            .ok_or_else(|| Error::Internal("a spanning vector of the standard globalization is outside B".into()))
    };
    let rows = kept.iter().map(|&t| to_b(&w[t])).collect::<Result<Vec<_>>>()?;
    let matrix = Mat::from_rows(f, std.dim(), rows)?;
    let rank = matrix.rank();
    let kernel = Subspace::span(f, ne, matrix.kernel().basis().iter().map(|k| frame.from_coordinates(k)))?;
    let mut cmp = Comparison {
        frame,
        matrix,
        kernel,
        surjective: rank == std.dim(),
        injective: rank == kept.len(),
        multiplicative: true,
        bimodule_map: true,
    };
    let fv = cmp.frame.vectors().to_vec();
    for (i, x) in fv.iter().enumerate() {
        let px = cmp.matrix.row(i).to_vec();
        for (j, y) in fv.iter().enumerate() {
            let xy = c.ambient.alg.product(x, y);
            let lhs = cmp.apply(&xy).ok_or_else(|| Error::Internal("B' is not closed".into()))?;
            cmp.multiplicative &= lhs == std.b.alg.product(&px, cmp.matrix.row(j));
        }
        for h in 0..std.b.hopf.dim() {
            let l = cmp.apply(&c.ambient.left(h, x)).ok_or_else(|| Error::Internal("B' is not stable".into()))?;
            let r = cmp.apply(&c.ambient.right(x, h)).ok_or_else(|| Error::Internal("B' is not stable".into()))?;
            cmp.bimodule_map &= l == std.b.left(h, &px) && r == std.b.right(&px, h);
        }
    }
    Ok(cmp)
}

/// The largest sub-bimodule `M ⊆ B'` with `θ(1)Mθ(1) = 0`, in ambient coordinates.
pub fn maximal_degenerate_subbimodule<F: Scalar>(c: &GlobalizationCandidate<F>) -> Result<Subspace<F>> {
    let amb = &c.ambient;
    let t1 = c.theta_one();
    let sandwich = amb.alg.left_mult(&t1).matmul(&amb.alg.right_mult(&t1));
    let mut m = c.b.intersection(&sandwich.kernel());
    let nh = amb.hopf.dim();
    let ops: Vec<Mat<F>> = (0..nh)
        .flat_map(|h| (0..nh).map(move |k| (h, k)))
        .map(|(h, k)| amb.right_ops[k].matmul(&amb.left_ops[h]))
        .collect();
    loop {
        let mut next = m.clone();
        for op in &ops {
            next = next.intersection(&m.preimage(op));
        }
        if next.dim() == m.dim() {
            return Ok(m);
        }
        m = next;
    }
}

/// The quotient of a candidate by its maximal degenerate sub-bimodule, with the induced `θ`.
pub fn minimalize<F: Scalar>(c: &GlobalizationCandidate<F>) -> Result<GlobalizationCandidate<F>> {
    let m = maximal_degenerate_subbimodule(c)?;
    if m.is_zero() {
        return Ok(c.clone());
    }
    let amb = &c.ambient;
    let f = c.theta.field();
    let ne = amb.dim();
    for (i, x) in m.basis().iter().enumerate() {
        for (j, y) in c.b.basis().iter().enumerate() {
            if !m.has(&amb.alg.product(x, y)) || !m.has(&amb.alg.product(y, x)) {
                return Err(Error::Precondition(format!(
                    "the degenerate sub-bimodule is not an ideal of B' (basis pair ({i}, {j}))"
                )));
            }
        }
    }
    let mut cands = m.basis().to_vec();
    cands.extend(c.b.basis().iter().cloned());
    let (frame, _) = Frame::greedy(f, ne, &cands)?;
    let dm = m.dim();
    let q = frame.dim() - dm;
    let reps: Vec<Vec<F>> = frame.vectors()[dm..].to_vec();
    let pi = |x: &[F]| -> Result<Vec<F>> {
        let cs = frame
            .coordinates(x)
            .ok_or_else(|| Error::Internal("vector outside B'".into()))?;
        Ok(cs[dm..].to_vec())
    };
    let mut mul = Tensor3::zeros(f, [q, q, q]);
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            mul.fiber_mut(i, j).clone_from_slice(&pi(&amb.alg.product(x, y))?);
        }
    }
    let nh = amb.hopf.dim();
    let op_rows = |ops: &[Mat<F>], h: usize| -> Result<Mat<F>> {
        let rows = reps.iter().map(|x| pi(&ops[h].apply(x))).collect::<Result<Vec<_>>>()?;
        Mat::from_rows(f, q, rows)
    };
    let left_ops = (0..nh).map(|h| op_rows(&amb.left_ops, h)).collect::<Result<Vec<_>>>()?;
    let right_ops = (0..nh).map(|h| op_rows(&amb.right_ops, h)).collect::<Result<Vec<_>>>()?;
    let labels = (0..q).map(|i| format!("q{i}")).collect();
    let mut alg = AlgebraData::new(f, labels, mul, None)?;
    alg.unit = alg.find_unit();
    let quotient = BimoduleAlgebra::new(amb.hopf.clone(), alg, left_ops, right_ops)?;
    let theta_rows = c.theta.row_vecs().iter().map(|r| pi(r)).collect::<Result<Vec<_>>>()?;
    Ok(GlobalizationCandidate {
        ambient: quotient,
        b: Subspace::full(f, q),
        theta: Mat::from_rows(f, q, theta_rows)?,
        a_unit: c.a_unit.clone(),
    })
}

/// A non-minimal globalization: `E = Hom ⊕ Hom` with `(b, m)(b', m') = (bb', bm')`, componentwise
/// actions, and `θ(a) = (φ(a), φ(a)·m₀)` where `m₀(k⊗k') = ε(k)μ(k')1_A`.
/// The second components of `B' = H▷θ(A)◁H` form a sub-bimodule killed by `θ(1)·−·θ(1)`.
pub fn degenerate_extension<F: Scalar>(std: &BimoduleGlobalization<F>, mu: &[F]) -> Result<GlobalizationCandidate<F>> {
    let hom = &std.ambient;
    let h = &*hom.hopf;
    let a = &**std.source.alg();
    let (n, m, nd) = (h.dim(), a.dim(), hom.dim());
    let f = a.field;
    if mu.len() != n {
        return Err(Error::Shape(format!("μ has length {}, expected {n}", mu.len())));
    }
    let ne = 2 * nd;
    let mut mul = Tensor3::zeros(f, [ne, ne, ne]);
    for x in 0..nd {
        for y in 0..nd {
            let p = hom.alg.mul.fiber(x, y).to_vec();
            mul.fiber_mut(x, y)[..nd].clone_from_slice(&p);
            mul.fiber_mut(x, nd + y)[nd..].clone_from_slice(&p);
        }
    }
    let labels = (0..ne)
        .map(|i| if i < nd { format!("({},0)", hom.alg.basis[i]) } else { format!("(0,{})", hom.alg.basis[i - nd]) })
        .collect();
    let alg = AlgebraData::new(f, labels, mul, None)?;
    let block = |op: &Mat<F>| {
        let mut out = Mat::zeros(f, ne, ne);
        for r in 0..nd {
            for col in 0..nd {
                out.set(r, col, op.get(r, col).clone());
                out.set(nd + r, nd + col, op.get(r, col).clone());
            }
        }
        out
    };
    let left_ops = hom.left_ops.iter().map(block).collect();
    let right_ops = hom.right_ops.iter().map(block).collect();
    let ambient = BimoduleAlgebra::new(hom.hopf.clone(), alg, left_ops, right_ops)?;
    let ua = a.unit_vec()?;
    let mut m0 = zeros(f, nd);
    for i in 0..n {
        for j in 0..n {
            let c = h.counit[i].mul_ref(&mu[j]);
            for l in 0..m {
                m0[(i * n + j) * m + l] = c.mul_ref(&ua[l]);
            }
        }
    }
    let rows = std
        .phi
        .row_vecs()
        .into_iter()
        .map(|p| {
            let mut v = p.clone();
            v.extend(hom.alg.product(&p, &m0));
            v
        })
        .collect();
    let theta = Mat::from_rows(f, ne, rows)?;
    let b = Subspace::span(f, ne, spanning(&ambient, &theta))?;
    Ok(GlobalizationCandidate {
        ambient,
        b,
        theta,
        a_unit: ua.to_vec(),
    })
}

/// The standard globalization of a partial bicomodule algebra inside `X = H⊗A⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicomoduleGlobalization<F> {
    pub source: PartialBicomoduleData<F>,
    pub ambient: PartialBicomoduleData<F>,
    /// Row `i` is `θ(a_i) = (λ̄⊗I)ρ̄(a_i)`.
    pub theta: Mat<F>,
    /// The subalgebra generated by `H*▷θ(A)◁H*`.
    pub b_basis: Subspace<F>,
    /// `B` in the coordinates of `b_basis`; unital only when an identity exists.
    pub b_alg: AlgebraData<F>,
    /// `ρ` restricted to `B`: `ρ(b_i) = Σ rho[i][j][k] b_j⊗h_k`.
    pub rho: Tensor3<F>,
    /// `λ` restricted to `B`: `λ(b_i) = Σ lambda[i][j][k] h_j⊗b_k`.
    pub lambda: Tensor3<F>,
}

impl<F: Scalar> BicomoduleGlobalization<F> {
    pub fn dim(&self) -> usize {
        self.b_basis.dim()
    }
}

/// `(λ̄⊗I)ρ̄` and `(I⊗ρ̄)λ̄` as maps `A → H⊗A⊗H`, index `(p·m + l)·n + q`.
pub fn theta_formulas<F: Scalar>(b: &PartialBicomoduleData<F>) -> Result<(Mat<F>, Mat<F>)> {
    let (n, m) = (b.hopf().dim(), b.alg().dim());
    let f = b.alg().field;
    let dx = n * m * n;
    let mut t1: Mat<F> = Mat::zeros(f, m, dx);
    let mut t2: Mat<F> = Mat::zeros(f, m, dx);
    for i in 0..m {
        for j in 0..m {
            for k in 0..n {
                let c = b.rho.map.get(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for p in 0..n {
                    for l in 0..m {
                        let d = b.lambda.map.get(j, p, l);
                        let x = (p * m + l) * n + k;
                        let v = t1.get(i, x).clone() + c.mul_ref(d);
                        t1.set(i, x, v);
                    }
                }
            }
        }
        for p in 0..n {
            for j in 0..m {
                let c = b.lambda.map.get(i, p, j);
                if c.is_zero() {
                    continue;
                }
                for l in 0..m {
                    for q in 0..n {
                        let d = b.rho.map.get(j, l, q);
                        let x = (p * m + l) * n + q;
                        let v = t2.get(i, x).clone() + c.mul_ref(d);
                        t2.set(i, x, v);
                    }
                }
            }
        }
    }
    Ok((t1, t2))
}

/// Operators of the dual basis acting on `X`: `p_k▷x = x⁺⁰p_k(x⁺¹)` and `x◁p_k = p_k(x⁻¹)x⁻⁰`.
pub fn dual_action_ops<F: Scalar>(x: &PartialBicomoduleData<F>) -> Result<(Vec<Mat<F>>, Vec<Mat<F>>)> {
    let left = coaction_to_dual_action(&x.rho)?;
    let right = left_coaction_to_dual_action(&x.lambda)?;
    let n = x.hopf().dim();
    Ok(((0..n).map(|k| left.op(k)).collect(), (0..n).map(|k| right.op(k)).collect()))
}

/// Builds `θ: A → X` and the subbicomodule algebra it generates, and checks
/// `(λ(θ(a))⊗1)(1⊗ρ(θ(b))) = (I⊗θ⊗I)((λ̄(a)⊗1)(1⊗ρ̄(b)))`.
pub fn standard_globalize_bicomodule<F: Scalar>(b: &PartialBicomoduleData<F>) -> Result<BicomoduleGlobalization<F>> {
    let r = certify_bicomodule(b)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("partial bicomodule: {}", r.summary())));
    }
    let h: Arc<HopfData<F>> = b.hopf().clone();
    let a = &**b.alg();
    let (n, m) = (h.dim(), a.dim());
    let f = a.field;
    let x = tensor_hah(h.clone(), a)?;
    let xa = &**x.alg();
    let dx = xa.dim();
    let (theta, theta2) = theta_formulas(b)?;
    for i in 0..m {
        if theta.row(i) != theta2.row(i) {
            return Err(Error::Internal(format!("the two formulas for θ differ on basis element {i}")));
        }
    }
    if theta.rank() != m {
        return Err(Error::Internal("θ is not injective".into()));
    }
    for i in 0..m {
        for j in 0..m {
            if xa.product(theta.row(i), theta.row(j)) != theta.apply(&a.product(&a.e(i), &a.e(j))) {
                return Err(Error::Internal(format!("θ is not multiplicative at ({i}, {j})")));
            }
        }
    }
    let (lops, rops) = dual_action_ops(&x)?;
    let mut ops = lops;
    ops.extend(rops);
    let seed = Subspace::span(f, dx, theta.row_vecs())?;
    let b_basis = closure_fixpoint(&seed, &ops, std::slice::from_ref(&xa.mul))?;

    let coords = |v: &[F]| {
        b_basis
            .coordinates(v)
            .ok_or_else(|| Error::Internal("a coaction does not restrict to the generated subalgebra".into()))
    };
    let d = b_basis.dim();
    let mut rho = Tensor3::zeros(f, [d, d, n]);
    let mut lambda = Tensor3::zeros(f, [d, n, d]);
    for (i, v) in b_basis.basis().iter().enumerate() {
        let rv = x.rho.coact(v);
        let lv = x.lambda.coact(v);
        for k in 0..n {
            let s: Vec<F> = (0..dx).map(|j| rv[j * n + k].clone()).collect();
            for (j, c) in coords(&s)?.into_iter().enumerate() {
                rho.set(i, j, k, c);
            }
            for (j, c) in coords(&lv[k * dx..(k + 1) * dx])?.into_iter().enumerate() {
                lambda.set(i, k, j, c);
            }
        }
    }
    let labels = (0..d).map(|i| format!("b{i}")).collect();
    let mut b_alg = xa.restrict(&b_basis, labels)?;
    if b_alg.unit.is_none() {
        b_alg.unit = b_alg.find_unit();
    }

    let hxh = [&h.alg, xa, &h.alg];
    for i in 0..m {
        let ti = theta.row(i);
        let l = append_unit(&h, &x.lambda.coact(ti));
        for j in 0..m {
            let rr = prepend_unit(&h, &x.rho.coact(theta.row(j)));
            let lhs = tensor_mul(&hxh, &l, &rr);
            let s = sandwich(b, &a.e(i), None, &a.e(j));
            let mut rhs = zeros(f, n * dx * n);
            for p in 0..n {
                for q in 0..n {
                    let mid: Vec<F> = (0..m).map(|l| s[(p * m + l) * n + q].clone()).collect();
                    if is_zero_vec(&mid) {
                        continue;
                    }
                    for (y, c) in theta.apply(&mid).into_iter().enumerate() {
                        rhs[(p * dx + y) * n + q] = c;
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::Internal(format!("globalization condition (2) fails at ({i}, {j})")));
            }
        }
    }
    Ok(BicomoduleGlobalization {
        source: b.clone(),
        ambient: x,
        theta,
        b_basis,
        b_alg,
        rho,
        lambda,
    })
}

/// The generated subalgebra computed in two stages: `C = H*▷θ(A)◁H*`, then the algebra generated by `C`.
pub fn two_stage_closure<F: Scalar>(g: &BicomoduleGlobalization<F>) -> Result<(Subspace<F>, Subspace<F>)> {
    let f = g.theta.field();
    let xa = &**g.ambient.alg();
    let (lops, rops) = dual_action_ops(&g.ambient)?;
    let mut ops = lops;
    ops.extend(rops);
    let seed = Subspace::span(f, xa.dim(), g.theta.row_vecs())?;
    let c = closure_fixpoint(&seed, &ops, &[])?;
    let gen = closure_fixpoint(&c, &[], std::slice::from_ref(&xa.mul))?;
    Ok((c, gen))
}

/// Verdicts on `Ψ(h⊗a⊗k): f⊗g ↦ g(h)af(k)` from `H⊗A⊗H` into `Hom(H*⊗H*, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiReport<F> {
    pub psi: Mat<F>,
    pub injective: bool,
    pub multiplicative: bool,
    pub unital: bool,
    pub intertwines: bool,
    pub psi_theta_is_phi: bool,
    /// `Ψ` maps the bicomodule globalization onto the bimodule one.
    pub restricted_iso: bool,
}

impl<F: Scalar> PsiReport<F> {
    pub fn all_true(&self) -> bool {
        self.injective && self.multiplicative && self.unital && self.intertwines && self.psi_theta_is_phi && self.restricted_iso
    }
}

/// `std` must be the standard globalization of `bicomodule_to_bimodule(bg.source)`.
pub fn psi_map<F: Scalar>(bg: &BicomoduleGlobalization<F>, std: &BimoduleGlobalization<F>) -> Result<PsiReport<F>> {
    let (n, m) = (bg.source.hopf().dim(), bg.source.alg().dim());
    let f = bg.theta.field();
    let dx = n * m * n;
    if std.ambient.dim() != dx || std.source.alg().as_ref() != bg.source.alg().as_ref() || std.source.hopf().dim() != n {
        return Err(Error::Precondition("the bimodule globalization does not come from this bicomodule".into()));
    }
    let mut psi = Mat::zeros(f, dx, dx);
    for p in 0..n {
        for l in 0..m {
            for q in 0..n {
                psi.set((p * m + l) * n + q, (q * n + p) * m + l, F::one_in(f));
            }
        }
    }
    let xa = &**bg.ambient.alg();
    let hom = &std.ambient;
    let injective = psi.rank() == dx;
    let images: Vec<Vec<F>> = (0..dx).map(|x| psi.row(x).to_vec()).collect();
    let multiplicative = sweep(dx, |x, out| {
        for y in 0..dx {
            let lhs = psi.apply(xa.mul.fiber(x, y));
            record(out, "psi-mult", &[x, y], lhs, hom.alg.product(&images[x], &images[y]));
        }
    })
    .is_empty();
    let unital = match (&xa.unit, &hom.alg.unit) {
        (Some(u), Some(v)) => psi.apply(u) == *v,
        _ => false,
    };
    let (lops, rops) = dual_action_ops(&bg.ambient)?;
    let mut intertwines = true;
    for k in 0..n {
        for (x, img) in images.iter().enumerate() {
            intertwines &= psi.apply(lops[k].row(x)) == hom.left(k, img);
            intertwines &= psi.apply(rops[k].row(x)) == hom.right(img, k);
        }
    }
    let psi_theta_is_phi = (0..m).all(|i| psi.apply(bg.theta.row(i)) == std.phi.row(i));
    let image = Subspace::span(f, dx, bg.b_basis.basis().iter().map(|v| psi.apply(v)))?;
    let restricted_iso = injective
        && image.dim() == bg.dim()
        && image.is_subspace_of(&std.b_basis)
        && std.b_basis.is_subspace_of(&image);
    Ok(PsiReport {
        psi,
        injective,
        multiplicative,
        unital,
        intertwines,
        psi_theta_is_phi,
        restricted_iso,
    })
}
