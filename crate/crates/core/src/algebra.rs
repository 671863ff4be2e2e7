//! Algebras and Hopf algebras given by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{axpy, basis_vector, solve, zeros, Mat, Subspace, Tensor3};
use crate::report::{record, sweep, Report};
use crate::scalar::{FieldSpec, Scalar};

/// A finite-dimensional, not necessarily associative or unital, algebra.
///
/// `mul[i][j][k]` is the coefficient of `basis[k]` in `basis[i]·basis[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData<F> {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub mul: Tensor3<F>,
    pub unit: Option<Vec<F>>,
}

impl<F: Scalar> AlgebraData<F> {
    pub fn new(field: FieldSpec, basis: Vec<String>, mul: Tensor3<F>, unit: Option<Vec<F>>) -> Result<Self> {
        let n = basis.len();
        if mul.dims() != [n, n, n] {
            return Err(Error::Shape(format!("mul has dims {:?} for {n} basis labels", mul.dims())));
        }
        if mul.field() != field || mul.entries().iter().any(|x| x.field() != field) {
            return Err(Error::Field(format!("structure constants not over {field}")));
        }
        if let Some(u) = &unit {
            if u.len() != n {
                return Err(Error::Shape(format!("unit has length {}, expected {n}", u.len())));
            }
        }
        Ok(AlgebraData { field, basis, mul, unit })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn product(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.mul.bilinear(x, y)
    }

    pub fn unit_vec(&self) -> Result<&[F]> {
        self.unit
            .as_deref()
            .ok_or_else(|| Error::MissingUnit("algebra has no unit".into()))
    }

    pub fn e(&self, i: usize) -> Vec<F> {
        basis_vector(self.field, self.dim(), i)
    }

    pub fn zero_vec(&self) -> Vec<F> {
        zeros(self.field, self.dim())
    }

    /// The map `y ↦ x·y`.
    pub fn left_mult(&self, x: &[F]) -> Mat<F> {
        let rows = (0..self.dim()).map(|j| self.product(x, &self.e(j))).collect();
        Mat::from_rows(self.field, self.dim(), rows).expect("square")
    }

    /// The map `y ↦ y·x`.
    pub fn right_mult(&self, x: &[F]) -> Mat<F> {
        let rows = (0..self.dim()).map(|j| self.product(&self.e(j), x)).collect();
        Mat::from_rows(self.field, self.dim(), rows).expect("square")
    }

    /// Some two-sided identity, found by solving the unit equations.
    pub fn find_unit(&self) -> Option<Vec<F>> {
        let n = self.dim();
        let mut eqs = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let target = if j == k { F::one_in(self.field) } else { F::zero_in(self.field) };
                eqs.push((0..n).map(|i| self.mul.get(i, j, k).clone()).collect::<Vec<_>>());
                rhs.push(target.clone());
                eqs.push((0..n).map(|i| self.mul.get(j, i, k).clone()).collect::<Vec<_>>());
                rhs.push(target);
            }
        }
        let a = Mat::from_rows(self.field, n, eqs).ok()?;
        solve(&a, &rhs)
    }

    /// Structure on a subspace closed under multiplication, in the subspace's coordinates.
    pub fn restrict(&self, sub: &Subspace<F>, labels: Vec<String>) -> Result<AlgebraData<F>> {
        let d = sub.dim();
        let mut mul = Tensor3::zeros(self.field, [d, d, d]);
        for (i, u) in sub.basis().iter().enumerate() {
            for (j, v) in sub.basis().iter().enumerate() {
                let w = self.product(u, v);
                let c = sub.coordinates(&w).ok_or_else(|| {
                    Error::Internal(format!("subspace not closed under multiplication at basis pair ({i}, {j})"))
                })?;
                mul.fiber_mut(i, j).clone_from_slice(&c);
            }
        }
        let unit = self.unit.as_ref().and_then(|u| sub.coordinates(u));
        AlgebraData::new(self.field, labels, mul, unit)
    }
}

/// Tensor-product multiplication `(a⊗b⊗…)(c⊗d⊗…) = ac⊗bd⊗…`, row-major flattening.
pub fn tensor_mul<F: Scalar>(factors: &[&AlgebraData<F>], x: &[F], y: &[F]) -> Vec<F> {
    let field = factors[0].field;
    let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(x.len(), total);
    assert_eq!(y.len(), total);
    let split = |mut idx: usize| {
        let mut out = vec![0; dims.len()];
        for f in (0..dims.len()).rev() {
            out[f] = idx % dims[f];
            idx /= dims[f];
        }
        out
    };
    let mut out = zeros(field, total);
    let nx: Vec<(usize, &F)> = x.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let ny: Vec<(usize, &F)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for &(ix, cx) in &nx {
        let mx = split(ix);
        for &(iy, cy) in &ny {
            let my = split(iy);
            let mut terms = vec![(0usize, cx.mul_ref(cy))];
            for (f, a) in factors.iter().enumerate() {
                let fib = a.mul.fiber(mx[f], my[f]);
                let mut next = Vec::new();
                for (idx, co) in &terms {
                    for (k, v) in fib.iter().enumerate() {
                        if !v.is_zero() {
                            next.push((idx * dims[f] + k, co.mul_ref(v)));
                        }
                    }
                }
                terms = next;
            }
            for (idx, co) in terms {
                out[idx] += &co;
            }
        }
    }
    out
}

/// Associativity on all basis triples, plus the unit law when a unit is present.
pub fn algebra_check<F: Scalar>(a: &AlgebraData<F>) -> Result<Report<F>> {
    let n = a.dim();
    if a.mul.dims() != [n, n, n] {
        return Err(Error::Shape(format!("mul has dims {:?} for dimension {n}", a.mul.dims())));
    }
    let mut failures = sweep(n, |i, out| {
        for j in 0..n {
            let ij = a.mul.fiber(i, j).to_vec();
            for k in 0..n {
                let lhs = a.product(&ij, &a.e(k));
                let rhs = a.product(&a.e(i), a.mul.fiber(j, k));
                record(out, "assoc", &[i, j, k], lhs, rhs);
            }
        }
    });
    if let Some(u) = &a.unit {
        if u.len() != n {
            return Err(Error::Shape(format!("unit has length {}, expected {n}", u.len())));
        }
        for i in 0..n {
            record(&mut failures, "unit-left", &[i], a.product(u, &a.e(i)), a.e(i));
            record(&mut failures, "unit-right", &[i], a.product(&a.e(i), u), a.e(i));
        }
    }
    Ok(Report::from_failures(failures))
}

/// A Hopf algebra: unital algebra plus `Δ(b_i) = Σ comul[i][j][k] b_j⊗b_k`,
/// counit, and antipode (row `i` holds the coordinates of `S(b_i)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData<F> {
    pub alg: AlgebraData<F>,
    pub comul: Tensor3<F>,
    pub counit: Vec<F>,
    pub antipode: Mat<F>,
}

impl<F: Scalar> HopfData<F> {
    pub fn new(alg: AlgebraData<F>, comul: Tensor3<F>, counit: Vec<F>, antipode: Mat<F>) -> Result<Self> {
        let n = alg.dim();
        if alg.unit.is_none() {
            return Err(Error::MissingUnit("Hopf algebra needs a unit".into()));
        }
        if comul.dims() != [n, n, n] {
            return Err(Error::Shape(format!("comul has dims {:?}, expected [{n}, {n}, {n}]", comul.dims())));
        }
        if counit.len() != n {
            return Err(Error::Shape(format!("counit has length {}, expected {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Shape(format!("antipode is {}x{}, expected {n}x{n}", antipode.rows(), antipode.cols())));
        }
        let f = alg.field;
        if comul.entries().iter().chain(&counit).any(|x| x.field() != f)
            || (0..n).any(|i| antipode.row(i).iter().any(|x| x.field() != f))
        {
            return Err(Error::Field(format!("coalgebra data not over {f}")));
        }
        Ok(HopfData {
            alg,
            comul,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn field(&self) -> FieldSpec {
        self.alg.field
    }
    pub fn unit(&self) -> &[F] {
        self.alg.unit.as_deref().expect("checked at construction")
    }
    pub fn e(&self, i: usize) -> Vec<F> {
        self.alg.e(i)
    }
    pub fn product(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.alg.product(x, y)
    }

    /// Nonzero terms `(j, k, c)` of `Δ(b_i)`.
    pub fn coproduct_terms(&self, i: usize) -> Vec<(usize, usize, F)> {
        let n = self.dim();
        let mut t = Vec::new();
        for j in 0..n {
            for (k, c) in self.comul.fiber(i, j).iter().enumerate() {
                if !c.is_zero() {
                    t.push((j, k, c.clone()));
                }
            }
        }
        t
    }

    /// `Δ(x)` flattened with index `j·n + k`.
    pub fn coproduct(&self, x: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = zeros(self.field(), n * n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                axpy(&mut out[j * n..(j + 1) * n], a, self.comul.fiber(i, j));
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        crate::linalg::dot(self.field(), &self.counit, x)
    }

    pub fn antipode_of(&self, x: &[F]) -> Vec<F> {
        self.antipode.apply(x)
    }

    /// Basis of `Ker ε`.
    pub fn counit_kernel(&self) -> Vec<Vec<F>> {
        let col = Mat::from_rows(self.field(), 1, self.counit.iter().map(|c| vec![c.clone()]).collect())
            .expect("column");
        col.kernel().basis().to_vec()
    }

    /// `b_h b_g` as a coordinate vector.
    pub fn mul_basis(&self, h: usize, g: usize) -> &[F] {
        self.alg.mul.fiber(h, g)
    }
}

/// All Hopf axioms on basis elements and pairs, together with the algebra axioms.
pub fn hopf_check<F: Scalar>(h: &HopfData<F>) -> Result<Report<F>> {
    let mut report = algebra_check(&h.alg)?;
    let n = h.dim();
    let f = h.field();
    let one = F::one_in(f);
    let unit = h.unit().to_vec();
    let hh = [&h.alg, &h.alg];
    let failures = sweep(n, |i, out| {
        let terms = h.coproduct_terms(i);
        let mut left = zeros(f, n * n * n);
        let mut right = zeros(f, n * n * n);
        let mut cl: Vec<F> = zeros(f, n);
        let mut cr: Vec<F> = zeros(f, n);
        let mut sl = zeros(f, n);
        let mut sr = zeros(f, n);
        for (j, k, c) in &terms {
            for (p, q, d) in h.coproduct_terms(*j) {
                left[(p * n + q) * n + k] += &c.mul_ref(&d);
            }
            for (p, q, d) in h.coproduct_terms(*k) {
                right[(j * n + p) * n + q] += &c.mul_ref(&d);
            }
            cl[*k].add_mul(c, &h.counit[*j]);
            cr[*j].add_mul(c, &h.counit[*k]);
            axpy(&mut sl, c, &h.product(&h.antipode_of(&h.e(*j)), &h.e(*k)));
            axpy(&mut sr, c, &h.product(&h.e(*j), &h.antipode_of(&h.e(*k))));
        }
        record(out, "coassoc", &[i], left, right);
        record(out, "counit-left", &[i], cl, h.e(i));
        record(out, "counit-right", &[i], cr, h.e(i));
        let eps1 = crate::linalg::scaled(&h.counit[i], &unit);
        record(out, "antipode-left", &[i], sl, eps1.clone());
        record(out, "antipode-right", &[i], sr, eps1);
        let di = h.coproduct(&h.e(i));
        for j in 0..n {
            let lhs = h.coproduct(h.mul_basis(i, j));
            let rhs = tensor_mul(&hh, &di, &h.coproduct(&h.e(j)));
            record(out, "comul-mult", &[i, j], lhs, rhs);
            let lhs = vec![h.counit_of(h.mul_basis(i, j))];
            let rhs = vec![h.counit[i].mul_ref(&h.counit[j])];
            record(out, "counit-mult", &[i, j], lhs, rhs);
        }
    });
    let mut extra = failures;
    let mut u2 = zeros(f, n * n);
    for (j, a) in unit.iter().enumerate() {
        for (k, b) in unit.iter().enumerate() {
            u2[j * n + k] = a.mul_ref(b);
        }
    }
    record(&mut extra, "comul-unit", &[], h.coproduct(&unit), u2);
    record(&mut extra, "counit-unit", &[], vec![h.counit_of(&unit)], vec![one]);
    report = report.merge(Report::from_failures(extra));
    Ok(report)
}

pub(crate) fn require_hopf<F: Scalar>(h: &HopfData<F>) -> Result<()> {
    let r = hopf_check(h)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("Hopf algebra: {}", r.summary())));
    }
    Ok(())
}

fn certified<F: Scalar>(h: HopfData<F>) -> Result<HopfData<F>> {
    let r = hopf_check(&h)?;
    if !r.passed() {
        return Err(Error::Internal(format!("constructed Hopf algebra fails its axioms: {}", r.summary())));
    }
    Ok(h)
}

/// The group algebra `kG` with group-like basis `u_g`.
pub fn group_algebra<F: Scalar>(table: &GroupTable, labels: Vec<String>, field: FieldSpec) -> Result<HopfData<F>> {
    let n = table.order();
    if labels.len() != n {
        return Err(Error::Shape(format!("{} labels for a group of order {n}", labels.len())));
    }
    let one = F::one_in(field);
    let mut mul = Tensor3::zeros(field, [n, n, n]);
    let mut comul = Tensor3::zeros(field, [n, n, n]);
    let mut antipode = Mat::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mul.set(a, b, table.mul(a, b), one.clone());
        }
        comul.set(a, a, a, one.clone());
        antipode.set(a, table.inverse(a), one.clone());
    }
    let unit = basis_vector(field, n, table.identity());
    let alg = AlgebraData::new(field, labels, mul, Some(unit))?;
    certified(HopfData::new(alg, comul, vec![one; n], antipode)?)
}

/// Group algebra with labels `u0, u1, …`.
pub fn group_algebra_default<F: Scalar>(table: &GroupTable, field: FieldSpec) -> Result<HopfData<F>> {
    let labels = (0..table.order()).map(|g| format!("u{g}")).collect();
    group_algebra(table, labels, field)
}

/// The dual Hopf algebra on the dual basis `p_i`.
pub fn dual_hopf<F: Scalar>(h: &HopfData<F>) -> Result<HopfData<F>> {
    require_hopf(h)?;
    let n = h.dim();
    let f = h.field();
    let mut mul = Tensor3::zeros(f, [n, n, n]);
    let mut comul = Tensor3::zeros(f, [n, n, n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mul.set(i, j, k, h.comul.get(k, i, j).clone());
                comul.set(k, i, j, h.alg.mul.get(i, j, k).clone());
            }
        }
    }
    let labels = h.alg.basis.iter().map(|l| dual_label(l)).collect();
    let alg = AlgebraData::new(f, labels, mul, Some(h.counit.clone()))?;
    certified(HopfData::new(alg, comul, h.unit().to_vec(), h.antipode.transpose())?)
}

/// `p[x]` for the functional dual to `x`; dualising twice restores the label.
fn dual_label(l: &str) -> String {
    match l.strip_prefix("p[").and_then(|r| r.strip_suffix(']')) {
        Some(inner) => inner.to_string(),
        None => format!("p[{l}]"),
    }
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, xg`.
///
/// Coalgebra: `Δ(g) = g⊗g`, `Δ(x) = 1⊗x + x⊗g`, `ε(x) = 0`, `S(x) = -xg`.
pub fn sweedler_h4<F: Scalar>(field: FieldSpec) -> Result<HopfData<F>> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("Sweedler's algebra needs characteristic different from 2".into()));
    }
    // basis index of x^b g^a
    let idx = |b: usize, a: usize| 2 * b + a;
    let one = F::one_in(field);
    let neg = -one.clone();
    let mut mul = Tensor3::zeros(field, [4, 4, 4]);
    for b1 in 0..2 {
        for a1 in 0..2 {
            for b2 in 0..2 {
                for a2 in 0..2 {
                    if b1 + b2 >= 2 {
                        continue;
                    }
                    let sign = if a1 * b2 == 1 { neg.clone() } else { one.clone() };
                    mul.set(idx(b1, a1), idx(b2, a2), idx(b1 + b2, (a1 + a2) % 2), sign);
                }
            }
        }
    }
    let (e, g, x, xg) = (0, 1, 2, 3);
    let mut comul = Tensor3::zeros(field, [4, 4, 4]);
    comul.set(e, e, e, one.clone());
    comul.set(g, g, g, one.clone());
    comul.set(x, e, x, one.clone());
    comul.set(x, x, g, one.clone());
    comul.set(xg, g, xg, one.clone());
    comul.set(xg, xg, e, one.clone());
    let mut antipode = Mat::zeros(field, 4, 4);
    antipode.set(e, e, one.clone());
    antipode.set(g, g, one.clone());
    antipode.set(x, xg, neg);
    antipode.set(xg, x, one.clone());
    let counit = vec![one.clone(), one.clone(), F::zero_in(field), F::zero_in(field)];
    let labels = ["1", "g", "x", "xg"].iter().map(|s| s.to_string()).collect();
    let alg = AlgebraData::new(field, labels, mul, Some(basis_vector(field, 4, 0)))?;
    certified(HopfData::new(alg, comul, counit, antipode)?)
}

/// An algebra with global left and right `H`-actions, one operator per basis element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAlgebra<F> {
    pub hopf: Arc<HopfData<F>>,
    pub alg: AlgebraData<F>,
    pub left_ops: Vec<Mat<F>>,
    pub right_ops: Vec<Mat<F>>,
}

impl<F: Scalar> BimoduleAlgebra<F> {
    pub fn new(hopf: Arc<HopfData<F>>, alg: AlgebraData<F>, left_ops: Vec<Mat<F>>, right_ops: Vec<Mat<F>>) -> Result<Self> {
        let (nh, n) = (hopf.dim(), alg.dim());
        if left_ops.len() != nh || right_ops.len() != nh {
            return Err(Error::Shape(format!("need {nh} operators on each side")));
        }
        if left_ops.iter().chain(&right_ops).any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Shape(format!("action operators must be {n}x{n}")));
        }
        Ok(BimoduleAlgebra {
            hopf,
            alg,
            left_ops,
            right_ops,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn combine(&self, ops: &[Mat<F>], h: &[F]) -> Mat<F> {
        let n = self.dim();
        let mut m = Mat::zeros(self.alg.field, n, n);
        for (c, op) in h.iter().zip(ops) {
            if c.is_zero() {
                continue;
            }
            for r in 0..n {
                axpy(m.row_mut(r), c, op.row(r));
            }
        }
        m
    }

    /// Operator of `h ▷ ·` for an arbitrary element `h`.
    pub fn left_op(&self, h: &[F]) -> Mat<F> {
        self.combine(&self.left_ops, h)
    }

    /// Operator of `· ◁ h`.
    pub fn right_op(&self, h: &[F]) -> Mat<F> {
        self.combine(&self.right_ops, h)
    }

    pub fn left(&self, h: usize, x: &[F]) -> Vec<F> {
        self.left_ops[h].apply(x)
    }

    pub fn right(&self, x: &[F], h: usize) -> Vec<F> {
        self.right_ops[h].apply(x)
    }

    /// `h ▷ x ◁ k`
    pub fn both(&self, h: usize, x: &[F], k: usize) -> Vec<F> {
        self.left(h, &self.right(x, k))
    }

    /// The structure on a sub-bimodule subalgebra, in its coordinates.
    pub fn restrict(&self, sub: &Subspace<F>, labels: Vec<String>) -> Result<BimoduleAlgebra<F>> {
        let alg = self.alg.restrict(sub, labels)?;
        let restrict_op = |op: &Mat<F>, side: &str, h: usize| -> Result<Mat<F>> {
            let rows = sub
                .basis()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    sub.coordinates(&op.apply(v)).ok_or_else(|| {
                        Error::Internal(format!("subspace not stable under the {side} action of basis {h} (vector {i})"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Mat::from_rows(self.alg.field, sub.dim(), rows)
        };
        let left_ops = (0..self.left_ops.len())
            .map(|h| restrict_op(&self.left_ops[h], "left", h))
            .collect::<Result<Vec<_>>>()?;
        let right_ops = (0..self.right_ops.len())
            .map(|h| restrict_op(&self.right_ops[h], "right", h))
            .collect::<Result<Vec<_>>>()?;
        BimoduleAlgebra::new(self.hopf.clone(), alg, left_ops, right_ops)
    }

    /// Associativity, both module-algebra axiom sets, and `(h▷x)◁g = h▷(x◁g)`.
    pub fn check(&self) -> Result<Report<F>> {
        let report = algebra_check(&self.alg)?;
        let h = &*self.hopf;
        let (nh, n) = (h.dim(), self.dim());
        let f = self.alg.field;
        let id = Mat::identity(f, n);
        let flat = |m: &Mat<F>| (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect::<Vec<_>>();
        let mut failures = Vec::new();
        record(&mut failures, "LMA-1", &[], flat(&self.left_op(h.unit())), flat(&id));
        record(&mut failures, "RMA-1", &[], flat(&self.right_op(h.unit())), flat(&id));
        failures.extend(sweep(nh, |a, out| {
            let terms = h.coproduct_terms(a);
            for x in 0..n {
                for y in 0..n {
                    let xy = self.alg.product(&self.alg.e(x), &self.alg.e(y));
                    let mut l = zeros(f, n);
                    let mut r = zeros(f, n);
                    for (j, k, c) in &terms {
                        let t = self.alg.product(&self.left_ops[*j].apply(&self.alg.e(x)), &self.left_ops[*k].apply(&self.alg.e(y)));
                        axpy(&mut l, c, &t);
                        let t = self.alg.product(&self.right_ops[*j].apply(&self.alg.e(x)), &self.right_ops[*k].apply(&self.alg.e(y)));
                        axpy(&mut r, c, &t);
                    }
                    record(out, "LMA-2", &[a, x, y], self.left_ops[a].apply(&xy), l);
                    record(out, "RMA-2", &[a, x, y], self.right_ops[a].apply(&xy), r);
                }
            }
            for b in 0..nh {
                // h ▷ (g ▷ x) = hg ▷ x, i.e. apply L_b then L_a
                let lhs = self.left_ops[b].matmul(&self.left_ops[a]);
                record(out, "LMA-3", &[a, b], flat(&lhs), flat(&self.left_op(h.mul_basis(a, b))));
                // (x ◁ a) ◁ b = x ◁ ab
                let lhs = self.right_ops[a].matmul(&self.right_ops[b]);
                record(out, "RMA-3", &[a, b], flat(&lhs), flat(&self.right_op(h.mul_basis(a, b))));
                let lhs = self.right_ops[b].matmul(&self.left_ops[a]);
                let rhs = self.left_ops[a].matmul(&self.right_ops[b]);
                record(out, "compat", &[a, b], flat(&lhs), flat(&rhs));
            }
        }));
        Ok(report.merge(Report::from_failures(failures)))
    }
}

/// `Hom(H⊗H, A)` with convolution product and the actions
/// `(g▷f)(h⊗k) = f(hg⊗k)`, `(f◁g)(h⊗k) = f(h⊗gk)`.
///
/// Basis element `(i, j, l)` is `b_i⊗b_j ↦ a_l` (zero on other basis pairs), index `(i·n + j)·m + l`.
pub fn hom_hh_a<F: Scalar>(h: Arc<HopfData<F>>, a: &AlgebraData<F>) -> Result<BimoduleAlgebra<F>> {
    require_hopf(&h)?;
    let ua = a.unit_vec()?.to_vec();
    let ra = algebra_check(a)?;
    if !ra.passed() {
        return Err(Error::Uncertified(format!("coefficient algebra: {}", ra.summary())));
    }
    if a.field != h.field() {
        return Err(Error::Field("Hopf algebra and coefficient algebra over different fields".into()));
    }
    let (n, m) = (h.dim(), a.dim());
    let f = h.field();
    let idx = |i: usize, j: usize, l: usize| (i * n + j) * m + l;
    let dim = n * n * m;
    let mut mul: Tensor3<F> = Tensor3::zeros(f, [dim, dim, dim]);
    let terms: Vec<_> = (0..n).map(|p| h.coproduct_terms(p)).collect();
    for p in 0..n {
        for (i, i2, c) in &terms[p] {
            for q in 0..n {
                for (j, j2, d) in &terms[q] {
                    let cd = c.mul_ref(d);
                    for k in 0..m {
                        for k2 in 0..m {
                            for (l, e) in a.mul.fiber(k, k2).iter().enumerate() {
                                if !e.is_zero() {
                                    let t = mul.get(idx(*i, *j, k), idx(*i2, *j2, k2), idx(p, q, l)).clone();
                                    let mut t = t;
                                    t.add_mul(&cd, e);
                                    mul.set(idx(*i, *j, k), idx(*i2, *j2, k2), idx(p, q, l), t);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = zeros(f, dim);
    for p in 0..n {
        for q in 0..n {
            for l in 0..m {
                unit[idx(p, q, l)] = h.counit[p].mul_ref(&h.counit[q]).mul_ref(&ua[l]);
            }
        }
    }
    let mut labels = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            for l in 0..m {
                labels.push(format!("d({},{}){}", h.alg.basis[i], h.alg.basis[j], a.basis[l]));
            }
        }
    }
    let alg = AlgebraData::new(f, labels, mul, Some(unit))?;
    let mut left_ops = Vec::with_capacity(n);
    let mut right_ops = Vec::with_capacity(n);
    for g in 0..n {
        let mut lo = Mat::zeros(f, dim, dim);
        let mut ro = Mat::zeros(f, dim, dim);
        for i in 0..n {
            for j in 0..n {
                for l in 0..m {
                    for p in 0..n {
                        let c = h.alg.mul.get(p, g, i);
                        if !c.is_zero() {
                            lo.set(idx(i, j, l), idx(p, j, l), c.clone());
                        }
                        let c = h.alg.mul.get(g, p, j);
                        if !c.is_zero() {
                            ro.set(idx(i, j, l), idx(i, p, l), c.clone());
                        }
                    }
                }
            }
        }
        left_ops.push(lo);
        right_ops.push(ro);
    }
    BimoduleAlgebra::new(h, alg, left_ops, right_ops)
}

/// Evaluates `f ∈ Hom(H⊗H, A)` (coordinates as in [`hom_hh_a`]) at `b_i⊗b_j`.
pub fn hom_eval<F: Scalar>(f: &[F], n: usize, m: usize, i: usize, j: usize) -> Vec<F> {
    f[(i * n + j) * m..(i * n + j + 1) * m].to_vec()
}
