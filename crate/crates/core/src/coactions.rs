//! Partial coactions of a Hopf algebra on a unital algebra, bicomodule algebras,
//! and the passage to partial actions of the dual.

use std::sync::Arc;

use crate::actions::{certify_bimodule, check_action, same, PartialActionData, PartialBimoduleData, Side};
use crate::algebra::{dual_hopf, require_hopf, tensor_mul, AlgebraData, HopfData};
use crate::error::{Error, Result};
use crate::linalg::{axpy, zeros, Frame, Subspace, Tensor3};
use crate::report::{record, sweep, Report};
use crate::scalar::{FieldSpec, Scalar};

/// A linear map `A → A⊗H` (right) or `A → H⊗A` (left, Hopf leg first).
///
/// Right: `ρ(a_i) = Σ map[i][j][k] a_j⊗h_k`. Left: `λ(a_i) = Σ map[i][j][k] h_j⊗a_k`.
/// Images are flattened row-major, so `a_j⊗h_k` sits at `j·dim H + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCoactionData<F> {
    pub hopf: Arc<HopfData<F>>,
    pub alg: Arc<AlgebraData<F>>,
    pub side: Side,
    pub map: Tensor3<F>,
}

impl<F: Scalar> PartialCoactionData<F> {
    /// Checks shapes and the counit law.
    pub fn new(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side, map: Tensor3<F>) -> Result<Self> {
        let p = Self::new_unchecked(hopf, alg, side, map)?;
        for i in 0..p.alg.dim() {
            if p.counit_image(i) != p.alg.e(i) {
                return Err(Error::Precondition(format!(
                    "counit law fails on basis element {i} ({})",
                    p.alg.basis[i]
                )));
            }
        }
        Ok(p)
    }

    /// Shape checks only; lets tests build deliberately broken coactions.
    #[doc(hidden)]
    pub fn new_unchecked(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side, map: Tensor3<F>) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        let want = match side {
            Side::Right => [na, na, nh],
            Side::Left => [na, nh, na],
        };
        if map.dims() != want {
            return Err(Error::Shape(format!("coaction table has dims {:?}, expected {want:?}", map.dims())));
        }
        if alg.field != hopf.field() || map.field() != hopf.field() {
            return Err(Error::Field("coaction data over different fields".into()));
        }
        alg.unit_vec()?;
        Ok(PartialCoactionData { hopf, alg, side, map })
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field
    }

    pub fn unit(&self) -> &[F] {
        self.alg.unit.as_deref().expect("checked at construction")
    }

    /// The coaction applied to `a`, flattened.
    pub fn coact(&self, a: &[F]) -> Vec<F> {
        let mut out: Vec<F> = zeros(self.field(), self.hopf.dim() * self.alg.dim());
        for (i, c) in a.iter().enumerate() {
            axpy(&mut out, c, self.map.slab(i));
        }
        out
    }

    /// `(I⊗ε)ρ(a_i)` or `(ε⊗I)λ(a_i)`.
    fn counit_image(&self, i: usize) -> Vec<F> {
        let (nh, na) = (self.hopf.dim(), self.alg.dim());
        let mut out: Vec<F> = zeros(self.field(), na);
        for j in 0..self.map.dims()[1] {
            for k in 0..self.map.dims()[2] {
                let c = self.map.get(i, j, k);
                match self.side {
                    Side::Right => out[j].add_mul(c, &self.hopf.counit[k]),
                    Side::Left => out[k].add_mul(c, &self.hopf.counit[j]),
                }
            }
        }
        let _ = nh;
        out
    }

    /// `ρ(a) = a⊗1_H` (resp. `λ(a) = 1_H⊗a`).
    pub fn trivial(hopf: Arc<HopfData<F>>, alg: Arc<AlgebraData<F>>, side: Side) -> Result<Self> {
        let (nh, na) = (hopf.dim(), alg.dim());
        let f = alg.field;
        let mut map = match side {
            Side::Right => Tensor3::zeros(f, [na, na, nh]),
            Side::Left => Tensor3::zeros(f, [na, nh, na]),
        };
        for i in 0..na {
            for k in 0..nh {
                let c = hopf.unit()[k].clone();
                match side {
                    Side::Right => map.set(i, i, k, c),
                    Side::Left => map.set(i, k, i, c),
                }
            }
        }
        Self::new(hopf, alg, side, map)
    }
}

fn need_side<F: Scalar>(p: &PartialCoactionData<F>, side: Side) -> Result<()> {
    if p.side != side {
        return Err(Error::Precondition(format!("expected a {side} coaction, got a {} coaction", p.side)));
    }
    Ok(())
}

/// `Σ c x_(j,k) ↦ Σ c x_j⊗Δ(h_k)` on `A⊗H`, giving `A⊗H⊗H`.
fn id_delta<F: Scalar>(h: &HopfData<F>, na: usize, v: &[F]) -> Vec<F> {
    let nh = h.dim();
    let mut out: Vec<F> = zeros(h.field(), na * nh * nh);
    for j in 0..na {
        for k in 0..nh {
            let c = &v[j * nh + k];
            if c.is_zero() {
                continue;
            }
            for (p, q, d) in h.coproduct_terms(k) {
                out[(j * nh + p) * nh + q].add_mul(c, &d);
            }
        }
    }
    out
}

/// `Σ c h_j⊗x_k ↦ Σ c Δ(h_j)⊗x_k` on `H⊗A`, giving `H⊗H⊗A`.
fn delta_id<F: Scalar>(h: &HopfData<F>, na: usize, v: &[F]) -> Vec<F> {
    let nh = h.dim();
    let mut out: Vec<F> = zeros(h.field(), nh * nh * na);
    for j in 0..nh {
        for k in 0..na {
            let c = &v[j * na + k];
            if c.is_zero() {
                continue;
            }
            for (p, q, d) in h.coproduct_terms(j) {
                out[(p * nh + q) * na + k].add_mul(c, &d);
            }
        }
    }
    out
}

/// `x⊗1_H` for `x` in a tensor space of dimension `n`.
pub(crate) fn append_unit<F: Scalar>(h: &HopfData<F>, x: &[F]) -> Vec<F> {
    let nh = h.dim();
    let mut out: Vec<F> = zeros(h.field(), x.len() * nh);
    for (i, c) in x.iter().enumerate() {
        for (k, u) in h.unit().iter().enumerate() {
            out[i * nh + k] = c.mul_ref(u);
        }
    }
    out
}

/// `1_H⊗x`.
pub(crate) fn prepend_unit<F: Scalar>(h: &HopfData<F>, x: &[F]) -> Vec<F> {
    let n = x.len();
    let mut out: Vec<F> = zeros(h.field(), h.dim() * n);
    for (k, u) in h.unit().iter().enumerate() {
        for (i, c) in x.iter().enumerate() {
            out[k * n + i] = u.mul_ref(c);
        }
    }
    out
}

/// Right partial comodule algebra axioms `RPCA-1` (multiplicativity), `RPCA-2` (counit),
/// `RPCA-3`, and `RPCA-4` when `symmetric`.
pub fn check_rpca<F: Scalar>(p: &PartialCoactionData<F>, symmetric: bool) -> Result<Report<F>> {
    need_side(p, Side::Right)?;
    let h = &*p.hopf;
    let a = &*p.alg;
    let (nh, na) = (h.dim(), a.dim());
    let f = p.field();
    let ah = [a, &h.alg];
    let ahh = [a, &h.alg, &h.alg];
    let rho1 = append_unit(h, &p.coact(p.unit()));
    let failures = sweep(na, |i, out| {
        let ri = p.map.slab(i);
        for j in 0..na {
            let lhs = p.coact(a.mul.fiber(i, j));
            let rhs = tensor_mul(&ah, ri, p.map.slab(j));
            record(out, "RPCA-1", &[i, j], lhs, rhs);
        }
        record(out, "RPCA-2", &[i], p.counit_image(i), a.e(i));
        let mut lhs: Vec<F> = zeros(f, na * nh * nh);
        for j in 0..na {
            for k in 0..nh {
                let c = &ri[j * nh + k];
                if c.is_zero() {
                    continue;
                }
                let rj = p.map.slab(j);
                for (jk, d) in rj.iter().enumerate() {
                    if !d.is_zero() {
                        lhs[jk * nh + k].add_mul(c, d);
                    }
                }
            }
        }
        let dr = id_delta(h, na, ri);
        record(out, "RPCA-3", &[i], lhs.clone(), tensor_mul(&ahh, &rho1, &dr));
        if symmetric {
            record(out, "RPCA-4", &[i], lhs, tensor_mul(&ahh, &dr, &rho1));
        }
    });
    Ok(Report::from_failures(failures))
}

/// Left partial comodule algebra axioms `LPCA-1` (counit), `LPCA-2` (multiplicativity),
/// `LPCA-3`, and `LPCA-4` when `symmetric`.
pub fn check_lpca<F: Scalar>(p: &PartialCoactionData<F>, symmetric: bool) -> Result<Report<F>> {
    need_side(p, Side::Left)?;
    let h = &*p.hopf;
    let a = &*p.alg;
    let (nh, na) = (h.dim(), a.dim());
    let f = p.field();
    let ha = [&h.alg, a];
    let hha = [&h.alg, &h.alg, a];
    let lam1 = prepend_unit(h, &p.coact(p.unit()));
    let failures = sweep(na, |i, out| {
        let li = p.map.slab(i);
        record(out, "LPCA-1", &[i], p.counit_image(i), a.e(i));
        for j in 0..na {
            let lhs = p.coact(a.mul.fiber(i, j));
            let rhs = tensor_mul(&ha, li, p.map.slab(j));
            record(out, "LPCA-2", &[i, j], lhs, rhs);
        }
        let mut lhs: Vec<F> = zeros(f, nh * nh * na);
        for j in 0..nh {
            for k in 0..na {
                let c = &li[j * na + k];
                if c.is_zero() {
                    continue;
                }
                for (pq, d) in p.map.slab(k).iter().enumerate() {
                    if !d.is_zero() {
                        lhs[j * nh * na + pq].add_mul(c, d);
                    }
                }
            }
        }
        let dl = delta_id(h, na, li);
        record(out, "LPCA-3", &[i], lhs.clone(), tensor_mul(&hha, &dl, &lam1));
        if symmetric {
            record(out, "LPCA-4", &[i], lhs, tensor_mul(&hha, &lam1, &dl));
        }
    });
    Ok(Report::from_failures(failures))
}

/// Dispatches to [`check_rpca`] or [`check_lpca`].
pub fn check_coaction<F: Scalar>(p: &PartialCoactionData<F>, symmetric: bool) -> Result<Report<F>> {
    match p.side {
        Side::Right => check_rpca(p, symmetric),
        Side::Left => check_lpca(p, symmetric),
    }
}

/// Global comodule algebra axioms: `RCA-1` counit, `RCA-2` multiplicativity,
/// `RCA-3` `(ρ⊗I)ρ = (I⊗Δ)ρ` (and the `LCA` mirror for left coactions).
pub fn check_global_coaction<F: Scalar>(p: &PartialCoactionData<F>) -> Result<Report<F>> {
    let h = &*p.hopf;
    let (nh, na) = (h.dim(), p.alg.dim());
    let partial = check_coaction(p, false)?;
    let (pre, mult, counit) = match p.side {
        Side::Right => ("RCA", "RPCA-1", "RPCA-2"),
        Side::Left => ("LCA", "LPCA-2", "LPCA-1"),
    };
    let mut failures = Vec::new();
    for fl in partial.failures() {
        let law = if fl.law == counit {
            format!("{pre}-1")
        } else if fl.law == mult {
            format!("{pre}-2")
        } else {
            continue;
        };
        failures.push(crate::report::Failure { law, ..fl.clone() });
    }
    let f = p.field();
    for i in 0..na {
        let s = p.map.slab(i);
        let (lhs, rhs) = match p.side {
            Side::Right => {
                let mut lhs: Vec<F> = zeros(f, na * nh * nh);
                for j in 0..na {
                    for k in 0..nh {
                        let c = &s[j * nh + k];
                        for (jk, d) in p.map.slab(j).iter().enumerate() {
                            lhs[jk * nh + k].add_mul(c, d);
                        }
                    }
                }
                (lhs, id_delta(h, na, s))
            }
            Side::Left => {
                let mut lhs: Vec<F> = zeros(f, nh * nh * na);
                for j in 0..nh {
                    for k in 0..na {
                        let c = &s[j * na + k];
                        for (pq, d) in p.map.slab(k).iter().enumerate() {
                            lhs[j * nh * na + pq].add_mul(c, d);
                        }
                    }
                }
                (lhs, delta_id(h, na, s))
            }
        };
        record(&mut failures, &format!("{pre}-3"), &[i], lhs, rhs);
    }
    Ok(Report::from_failures(failures))
}

/// `ρ(1_A) = 1_A⊗1_H` (resp. `λ(1_A) = 1_H⊗1_A`).
pub fn check_global_unit<F: Scalar>(p: &PartialCoactionData<F>) -> bool {
    let image = p.coact(p.unit());
    let want = match p.side {
        Side::Right => append_unit(&p.hopf, p.unit()),
        Side::Left => prepend_unit(&p.hopf, p.unit()),
    };
    image == want
}

/// A left and a right partial coaction on the same algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialBicomoduleData<F> {
    pub lambda: PartialCoactionData<F>,
    pub rho: PartialCoactionData<F>,
}

impl<F: Scalar> PartialBicomoduleData<F> {
    pub fn new(lambda: PartialCoactionData<F>, rho: PartialCoactionData<F>) -> Result<Self> {
        need_side(&lambda, Side::Left)?;
        need_side(&rho, Side::Right)?;
        if !same(&lambda.hopf, &rho.hopf) {
            return Err(Error::Precondition("left and right coactions use different Hopf algebras".into()));
        }
        if !same(&lambda.alg, &rho.alg) {
            return Err(Error::Precondition("left and right coactions live on different algebras".into()));
        }
        Ok(PartialBicomoduleData { lambda, rho })
    }

    /// Pairs two coactions and requires both axiom suites and compatibility.
    pub fn certified(lambda: PartialCoactionData<F>, rho: PartialCoactionData<F>) -> Result<Self> {
        let b = Self::new(lambda, rho)?;
        let r = certify_bicomodule(&b)?;
        if !r.passed() {
            return Err(Error::Uncertified(format!("partial bicomodule: {}", r.summary())));
        }
        Ok(b)
    }

    pub fn hopf(&self) -> &Arc<HopfData<F>> {
        &self.rho.hopf
    }
    pub fn alg(&self) -> &Arc<AlgebraData<F>> {
        &self.rho.alg
    }

    pub fn is_global(&self) -> bool {
        check_global_unit(&self.lambda) && check_global_unit(&self.rho)
    }
}

/// `(I⊗ρ)λ = (λ⊗I)ρ` on every basis element, compared in `H⊗A⊗H`.
pub fn check_bicomodule<F: Scalar>(b: &PartialBicomoduleData<F>) -> Result<Report<F>> {
    if !same(&b.lambda.hopf, &b.rho.hopf) || !same(&b.lambda.alg, &b.rho.alg) {
        return Err(Error::Precondition("coactions do not share their Hopf algebra and algebra".into()));
    }
    let (nh, na) = (b.hopf().dim(), b.alg().dim());
    let f = b.alg().field;
    let failures = sweep(na, |i, out| {
        let mut lhs: Vec<F> = zeros(f, nh * na * nh);
        let li = b.lambda.map.slab(i);
        for h in 0..nh {
            for k in 0..na {
                let c = &li[h * na + k];
                if c.is_zero() {
                    continue;
                }
                axpy(&mut lhs[h * na * nh..(h + 1) * na * nh], c, b.rho.map.slab(k));
            }
        }
        let mut rhs: Vec<F> = zeros(f, nh * na * nh);
        let ri = b.rho.map.slab(i);
        for j in 0..na {
            for k in 0..nh {
                let c = &ri[j * nh + k];
                if c.is_zero() {
                    continue;
                }
                let lj = b.lambda.map.slab(j);
                for h in 0..nh {
                    for l in 0..na {
                        let d = &lj[h * na + l];
                        if !d.is_zero() {
                            rhs[(h * na + l) * nh + k].add_mul(c, d);
                        }
                    }
                }
            }
        }
        record(out, "bicomodule-compat", &[i], lhs, rhs);
    });
    Ok(Report::from_failures(failures))
}

/// Both one-sided suites (non-symmetric) plus compatibility.
pub fn certify_bicomodule<F: Scalar>(b: &PartialBicomoduleData<F>) -> Result<Report<F>> {
    Ok(check_lpca(&b.lambda, false)?
        .merge(check_rpca(&b.rho, false)?)
        .merge(check_bicomodule(b)?))
}

fn certify_coaction<F: Scalar>(p: PartialCoactionData<F>) -> Result<PartialCoactionData<F>> {
    let r = check_coaction(&p, false)?;
    if !r.passed() {
        return Err(Error::Internal(format!("constructed coaction fails its axioms: {}", r.summary())));
    }
    Ok(p)
}

/// `f▷a = a⁺⁰ f(a⁺¹)`: a right coaction of `H` as a left action of `H*`.
pub fn coaction_to_dual_action<F: Scalar>(p: &PartialCoactionData<F>) -> Result<PartialActionData<F>> {
    need_side(p, Side::Right)?;
    let dual = Arc::new(dual_hopf(&p.hopf)?);
    let (nh, na) = (p.hopf.dim(), p.alg.dim());
    let mut act = Tensor3::zeros(p.field(), [nh, na, na]);
    for i in 0..na {
        for j in 0..na {
            for k in 0..nh {
                act.set(k, i, j, p.map.get(i, j, k).clone());
            }
        }
    }
    PartialActionData::new(dual, p.alg.clone(), Side::Left, act)
}

/// `a◁f = f(a⁻¹)a⁻⁰`: a left coaction of `H` as a right action of `H*`.
pub fn left_coaction_to_dual_action<F: Scalar>(p: &PartialCoactionData<F>) -> Result<PartialActionData<F>> {
    need_side(p, Side::Left)?;
    let dual = Arc::new(dual_hopf(&p.hopf)?);
    let (nh, na) = (p.hopf.dim(), p.alg.dim());
    let mut act = Tensor3::zeros(p.field(), [nh, na, na]);
    for i in 0..na {
        for k in 0..nh {
            for j in 0..na {
                act.set(k, i, j, p.map.get(i, k, j).clone());
            }
        }
    }
    PartialActionData::new(dual, p.alg.clone(), Side::Right, act)
}

/// `ρ(a) = Σ (h_i⇀a)⊗p_i`: a left action of `H` as a right coaction of `H*`.
pub fn dual_action_to_coaction<F: Scalar>(p: &PartialActionData<F>) -> Result<PartialCoactionData<F>> {
    if p.side != Side::Left {
        return Err(Error::Precondition("expected a left action".into()));
    }
    let dual = Arc::new(dual_hopf(&p.hopf)?);
    let (nh, na) = (p.hopf.dim(), p.alg.dim());
    let mut co = Tensor3::zeros(p.field(), [na, na, nh]);
    for i in 0..nh {
        for a in 0..na {
            for j in 0..na {
                co.set(a, j, i, p.map.get(i, a, j).clone());
            }
        }
    }
    PartialCoactionData::new(dual, p.alg.clone(), Side::Right, co)
}

/// `λ(a) = Σ p_i⊗(a↼h_i)`: a right action of `H` as a left coaction of `H*`.
pub fn right_action_to_coaction<F: Scalar>(p: &PartialActionData<F>) -> Result<PartialCoactionData<F>> {
    if p.side != Side::Right {
        return Err(Error::Precondition("expected a right action".into()));
    }
    let dual = Arc::new(dual_hopf(&p.hopf)?);
    let (nh, na) = (p.hopf.dim(), p.alg.dim());
    let mut co = Tensor3::zeros(p.field(), [na, nh, na]);
    for i in 0..nh {
        for a in 0..na {
            for j in 0..na {
                co.set(a, i, j, p.map.get(i, a, j).clone());
            }
        }
    }
    PartialCoactionData::new(dual, p.alg.clone(), Side::Left, co)
}

/// The partial `H*`-bimodule algebra of a partial `H`-bicomodule algebra.
pub fn bicomodule_to_bimodule<F: Scalar>(b: &PartialBicomoduleData<F>) -> Result<PartialBimoduleData<F>> {
    let left = coaction_to_dual_action(&b.rho)?;
    let mut right = left_coaction_to_dual_action(&b.lambda)?;
    right.hopf = left.hopf.clone();
    let out = PartialBimoduleData::new(left, right)?;
    let r = certify_bimodule(&out)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("dual bimodule: {}", r.summary())));
    }
    Ok(out)
}

/// The partial `H*`-bicomodule algebra of a partial `H`-bimodule algebra.
pub fn bimodule_to_bicomodule<F: Scalar>(b: &PartialBimoduleData<F>) -> Result<PartialBicomoduleData<F>> {
    let rho = dual_action_to_coaction(&b.left)?;
    let mut lambda = right_action_to_coaction(&b.right)?;
    lambda.hopf = rho.hopf.clone();
    let out = PartialBicomoduleData::new(lambda, rho)?;
    let r = certify_bicomodule(&out)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("dual bicomodule: {}", r.summary())));
    }
    Ok(out)
}

/// The global bicomodule algebra `X = H⊗A⊗H` with componentwise product,
/// `ρ = I⊗I⊗Δ` and `λ = Δ⊗I⊗I`. Basis `(p, l, q)` sits at `(p·m + l)·n + q`.
pub fn tensor_hah<F: Scalar>(h: Arc<HopfData<F>>, a: &AlgebraData<F>) -> Result<PartialBicomoduleData<F>> {
    require_hopf(&h)?;
    let ua = a.unit_vec()?.to_vec();
    let (n, m) = (h.dim(), a.dim());
    let f = h.field();
    let dim = n * m * n;
    let idx = |p: usize, l: usize, q: usize| (p * m + l) * n + q;
    let factors = [&h.alg, a, &h.alg];
    let mut mul: Tensor3<F> = Tensor3::zeros(f, [dim, dim, dim]);
    for x in 0..dim {
        let ex = crate::linalg::basis_vector(f, dim, x);
        for y in 0..dim {
            let ey = crate::linalg::basis_vector(f, dim, y);
            mul.fiber_mut(x, y).clone_from_slice(&tensor_mul(&factors, &ex, &ey));
        }
    }
    let mut unit = zeros(f, dim);
    for p in 0..n {
        for l in 0..m {
            for q in 0..n {
                unit[idx(p, l, q)] = h.unit()[p].mul_ref(&ua[l]).mul_ref(&h.unit()[q]);
            }
        }
    }
    let mut labels = Vec::with_capacity(dim);
    for p in 0..n {
        for l in 0..m {
            for q in 0..n {
                labels.push(format!("{}|{}|{}", h.alg.basis[p], a.basis[l], h.alg.basis[q]));
            }
        }
    }
    let x_alg = Arc::new(AlgebraData::new(f, labels, mul, Some(unit))?);
    let mut rho = Tensor3::zeros(f, [dim, dim, n]);
    let mut lam = Tensor3::zeros(f, [dim, n, dim]);
    for p in 0..n {
        for l in 0..m {
            for q in 0..n {
                for (q1, q2, c) in h.coproduct_terms(q) {
                    rho.set(idx(p, l, q), idx(p, l, q1), q2, c);
                }
                for (p1, p2, c) in h.coproduct_terms(p) {
                    lam.set(idx(p, l, q), p1, idx(p2, l, q), c);
                }
            }
        }
    }
    let rho = PartialCoactionData::new(h.clone(), x_alg.clone(), Side::Right, rho)?;
    let lambda = PartialCoactionData::new(h, x_alg, Side::Left, lam)?;
    let b = PartialBicomoduleData::new(lambda, rho)?;
    let r = check_global_coaction(&b.rho)?
        .merge(check_global_coaction(&b.lambda)?)
        .merge(check_bicomodule(&b)?);
    if !r.passed() {
        return Err(Error::Internal(format!("H⊗A⊗H fails the global bicomodule laws: {}", r.summary())));
    }
    Ok(b)
}

/// The regular bicomodule algebra: `A = H` with `λ = ρ = Δ`.
pub fn regular_bicomodule<F: Scalar>(h: Arc<HopfData<F>>) -> Result<PartialBicomoduleData<F>> {
    require_hopf(&h)?;
    let alg = Arc::new(h.alg.clone());
    let rho = PartialCoactionData::new(h.clone(), alg.clone(), Side::Right, h.comul.clone())?;
    let lambda = PartialCoactionData::new(h.clone(), alg, Side::Left, h.comul.clone())?;
    PartialBicomoduleData::certified(lambda, rho)
}

/// The partial coaction `ρ̄(a) = (e⊗1)ρ(a)` on the ideal `eB` of a global right comodule algebra.
///
/// The ideal gets the basis `e·b_j` for those `j` that enlarge the span, in order.
pub fn induce_right_coaction<F: Scalar>(b: &PartialCoactionData<F>, e: &[F]) -> Result<PartialCoactionData<F>> {
    need_side(b, Side::Right)?;
    let r = check_global_coaction(b)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("not a global comodule algebra: {}", r.summary())));
    }
    let alg = &*b.alg;
    let f = alg.field;
    let (nh, nb) = (b.hopf.dim(), alg.dim());
    if e.len() != nb {
        return Err(Error::Shape(format!("idempotent has length {}, expected {nb}", e.len())));
    }
    if crate::linalg::is_zero_vec(e) || alg.product(e, e) != e {
        return Err(Error::Precondition("e is not a nonzero idempotent".into()));
    }
    let eb: Vec<Vec<F>> = (0..nb).map(|j| alg.product(e, &alg.e(j))).collect();
    let (frame, kept) = Frame::greedy(f, nb, &eb)?;
    for (t, v) in frame.vectors().iter().enumerate() {
        if alg.product(e, v) != *v || alg.product(v, e) != *v {
            return Err(Error::Precondition(format!("e is not an identity on eB (basis vector {t})")));
        }
    }
    let d = frame.dim();
    let coords = |v: &[F]| {
        frame
            .coordinates(v)
            .ok_or_else(|| Error::Precondition("the induced coaction leaves eB".into()))
    };
    let mut mul = Tensor3::zeros(f, [d, d, d]);
    for (i, u) in frame.vectors().iter().enumerate() {
        for (j, v) in frame.vectors().iter().enumerate() {
            mul.fiber_mut(i, j).clone_from_slice(&coords(&alg.product(u, v))?);
        }
    }
    let labels = kept.iter().map(|&j| format!("e*{}", alg.basis[j])).collect();
    let a = Arc::new(AlgebraData::new(f, labels, mul, Some(coords(e)?))?);
    let mut map = Tensor3::zeros(f, [d, d, nh]);
    for (i, v) in frame.vectors().iter().enumerate() {
        let rv = b.coact(v);
        for k in 0..nh {
            let slice: Vec<F> = (0..nb).map(|j| rv[j * nh + k].clone()).collect();
            let c = coords(&alg.product(e, &slice))?;
            for (j, x) in c.into_iter().enumerate() {
                map.set(i, j, k, x);
            }
        }
    }
    certify_coaction(PartialCoactionData::new(b.hopf.clone(), a, Side::Right, map)?)
}

/// Slices `x_(h,k)` of an element of `H⊗B⊗H` (index `(h·nb + j)·nh + k`).
fn slices<F: Scalar>(v: &[F], nh: usize, nb: usize) -> Vec<((usize, usize), Vec<F>)> {
    let mut out = Vec::new();
    for h in 0..nh {
        for k in 0..nh {
            out.push(((h, k), (0..nb).map(|j| v[(h * nb + j) * nh + k].clone()).collect()));
        }
    }
    out
}

/// `(λ(a)⊗1)·m·(1⊗ρ(b))` in `H⊗B⊗H`, with `m` inserted between the middle legs.
pub(crate) fn sandwich<F: Scalar>(bb: &PartialBicomoduleData<F>, a: &[F], mid: Option<&[F]>, b: &[F]) -> Vec<F> {
    let alg = bb.alg();
    let (nh, nb) = (bb.hopf().dim(), alg.dim());
    let f = alg.field;
    let la = bb.lambda.coact(a);
    let rb = bb.rho.coact(b);
    let mut out: Vec<F> = zeros(f, nh * nb * nh);
    for h in 0..nh {
        let left: Vec<F> = la[h * nb..(h + 1) * nb].to_vec();
        if crate::linalg::is_zero_vec(&left) {
            continue;
        }
        let left = match mid {
            Some(m) => alg.product(&left, m),
            None => left,
        };
        for k in 0..nh {
            let right: Vec<F> = (0..nb).map(|j| rb[j * nh + k].clone()).collect();
            let prod = alg.product(&left, &right);
            for (j, c) in prod.into_iter().enumerate() {
                out[(h * nb + j) * nh + k] = c;
            }
        }
    }
    out
}

fn check_unital_subalgebra<F: Scalar>(alg: &AlgebraData<F>, a_basis: &Subspace<F>, unit_a: &[F]) -> Result<()> {
    if a_basis.ambient_dim() != alg.dim() || unit_a.len() != alg.dim() {
        return Err(Error::Shape("subalgebra data does not match the ambient dimension".into()));
    }
    if !a_basis.has(unit_a) {
        return Err(Error::Precondition("the unit of A does not lie in A".into()));
    }
    for (i, u) in a_basis.basis().iter().enumerate() {
        if alg.product(unit_a, u) != *u || alg.product(u, unit_a) != *u {
            return Err(Error::Precondition(format!("unit_A is not an identity for basis vector {i} of A")));
        }
        for (j, v) in a_basis.basis().iter().enumerate() {
            if !a_basis.has(&alg.product(u, v)) {
                return Err(Error::Precondition(format!("A is not closed under multiplication at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Condition (2) on all basis pairs of `A`; the first violating pair, if any.
fn condition2_witness<F: Scalar>(bb: &PartialBicomoduleData<F>, a_basis: &Subspace<F>, unit_a: &[F]) -> Option<(usize, usize)> {
    let (nh, nb) = (bb.hopf().dim(), bb.alg().dim());
    for (i, a) in a_basis.basis().iter().enumerate() {
        for (j, b) in a_basis.basis().iter().enumerate() {
            let lhs = sandwich(bb, a, None, b);
            let rhs = sandwich(bb, a, Some(unit_a), b);
            if lhs != rhs || slices(&lhs, nh, nb).iter().any(|(_, s)| !a_basis.has(s)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// The partial bicomodule induced on a unital subalgebra `A` of a global bicomodule algebra:
/// `ρ̄(a) = (1_A⊗1)ρ(a)`, `λ̄(a) = λ(a)(1⊗1_A)`.
pub fn induce_bicomodule<F: Scalar>(bb: &PartialBicomoduleData<F>, a_basis: &Subspace<F>, unit_a: &[F]) -> Result<PartialBicomoduleData<F>> {
    let r = check_global_coaction(&bb.rho)?
        .merge(check_global_coaction(&bb.lambda)?)
        .merge(check_bicomodule(bb)?);
    if !r.passed() {
        return Err(Error::Precondition(format!("ambient is not a global bicomodule algebra: {}", r.summary())));
    }
    let alg = &**bb.alg();
    check_unital_subalgebra(alg, a_basis, unit_a)?;
    if let Some((i, j)) = condition2_witness(bb, a_basis, unit_a) {
        return Err(Error::Precondition(format!(
            "condition (λ(a)⊗1)(1⊗ρ(b)) = (λ(a)⊗1)(1⊗1_A⊗1)(1⊗ρ(b)) in H⊗A⊗H fails at (a, b) = ({i}, {j})"
        )));
    }
    let f = alg.field;
    let (nh, nb, d) = (bb.hopf().dim(), alg.dim(), a_basis.dim());
    let labels = (0..d).map(|i| format!("a{i}")).collect();
    let mut sub = alg.restrict(a_basis, labels)?;
    sub.unit = a_basis.coordinates(unit_a);
    let sub = Arc::new(sub);
    let coords = |v: &[F]| {
        a_basis
            .coordinates(v)
            .ok_or_else(|| Error::Precondition("an induced coaction leaves A".into()))
    };
    let mut rho = Tensor3::zeros(f, [d, d, nh]);
    let mut lam = Tensor3::zeros(f, [d, nh, d]);
    for (i, v) in a_basis.basis().iter().enumerate() {
        let rv = bb.rho.coact(v);
        let lv = bb.lambda.coact(v);
        for k in 0..nh {
            let s: Vec<F> = (0..nb).map(|j| rv[j * nh + k].clone()).collect();
            for (j, x) in coords(&alg.product(unit_a, &s))?.into_iter().enumerate() {
                rho.set(i, j, k, x);
            }
            let s = &lv[k * nb..(k + 1) * nb];
            for (j, x) in coords(&alg.product(s, unit_a))?.into_iter().enumerate() {
                lam.set(i, k, j, x);
            }
        }
    }
    let rho = PartialCoactionData::new(bb.hopf().clone(), sub.clone(), Side::Right, rho)?;
    let lambda = PartialCoactionData::new(bb.hopf().clone(), sub, Side::Left, lam)?;
    let out = PartialBicomoduleData::new(lambda, rho)?;
    let r = certify_bicomodule(&out)?;
    if !r.passed() {
        return Err(Error::Internal(format!("induced bicomodule fails its axioms: {}", r.summary())));
    }
    Ok(out)
}

/// For a unital subalgebra `A` of a global bicomodule algebra `B`, returns the truth of
/// (i) `(a◁f)(g▷b) = (a◁f)1_A(g▷b) ∈ A` for the dual actions, and
/// (ii) `(λ(a)⊗1)(1⊗ρ(b)) = (λ(a)⊗1)(1⊗1_A⊗1)(1⊗ρ(b)) ∈ H⊗A⊗H`.
pub fn check_vesgo_equivalence<F: Scalar>(bb: &PartialBicomoduleData<F>, a_basis: &Subspace<F>, unit_a: &[F]) -> Result<(bool, bool)> {
    if !bb.is_global() {
        return Err(Error::Precondition("ambient bicomodule algebra is not global".into()));
    }
    let alg = &**bb.alg();
    check_unital_subalgebra(alg, a_basis, unit_a)?;
    let left = coaction_to_dual_action(&bb.rho)?;
    let right = left_coaction_to_dual_action(&bb.lambda)?;
    let r = check_action(&left, false)?.merge(check_action(&right, false)?);
    if !r.passed() {
        return Err(Error::Uncertified(format!("dual actions: {}", r.summary())));
    }
    let nh = bb.hopf().dim();
    let mut cond1 = true;
    'outer: for a in a_basis.basis() {
        for fi in 0..nh {
            let af = right.act(fi, a);
            let af1 = alg.product(&af, unit_a);
            for gi in 0..nh {
                for b in a_basis.basis() {
                    let gb = left.act(gi, b);
                    let lhs = alg.product(&af, &gb);
                    if lhs != alg.product(&af1, &gb) || !a_basis.has(&lhs) {
                        cond1 = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let cond2 = condition2_witness(bb, a_basis, unit_a).is_none();
    Ok((cond1, cond2))
}
