//! The partial (L,R)-smash product `A♮Ā` of a partial bimodule algebra and a partial
//! bicomodule algebra, its idempotents and unital corners.

use std::fmt;

use crate::actions::{certify_bimodule, same, PartialBimoduleData};
use crate::algebra::{algebra_check, AlgebraData};
use crate::coactions::{append_unit, certify_bicomodule, prepend_unit, PartialBicomoduleData};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, scaled, Subspace, Tensor3};
use crate::report::Report;
use crate::scalar::Scalar;

/// `A♮Ā` on the basis `a_i♮u_j` (index `i·dim Ā + j`), with
/// `(a♮u)(b♮v) = (a↼v⁺¹)(u⁻¹⇀b) ♮ u⁻⁰v⁺⁰`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra<F> {
    pub left_factor: PartialBimoduleData<F>,
    pub right_factor: PartialBicomoduleData<F>,
    pub alg: AlgebraData<F>,
}

impl<F: Scalar> SmashAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// The element `a♮u`.
    pub fn element(&self, a: &[F], u: &[F]) -> Vec<F> {
        let mut out = Vec::with_capacity(a.len() * u.len());
        for x in a {
            for y in u {
                out.push(x.mul_ref(y));
            }
        }
        out
    }
}

/// Builds `A♮Ā` after certifying both factors, and rejects it unless associative.
pub fn smash_product<F: Scalar>(a: &PartialBimoduleData<F>, abar: &PartialBicomoduleData<F>) -> Result<SmashAlgebra<F>> {
    if !same(a.hopf(), abar.hopf()) {
        return Err(Error::Precondition("the two factors use different Hopf algebras".into()));
    }
    let r = certify_bimodule(a)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("partial bimodule: {}", r.summary())));
    }
    let r = certify_bicomodule(abar)?;
    if !r.passed() {
        return Err(Error::Uncertified(format!("partial bicomodule: {}", r.summary())));
    }
    let s = smash_product_unchecked(a, abar)?;
    let r = check_smash_associativity(&s)?;
    if !r.passed() {
        return Err(Error::Internal(format!("smash product is not associative: {}", r.summary())));
    }
    Ok(s)
}

/// Builds the multiplication table without certifying anything.
#[doc(hidden)]
pub fn smash_product_unchecked<F: Scalar>(a: &PartialBimoduleData<F>, abar: &PartialBicomoduleData<F>) -> Result<SmashAlgebra<F>> {
    let ha = a.hopf();
    let hb = abar.hopf();
    if ha.dim() != hb.dim() {
        return Err(Error::Precondition("the two factors use different Hopf algebras".into()));
    }
    let aa = &**a.alg();
    let ab = &**abar.alg();
    let (m, d, n) = (aa.dim(), ab.dim(), ha.dim());
    let f = aa.field;
    if ab.field != f {
        return Err(Error::Field("factors over different fields".into()));
    }
    let dim = m * d;
    let mut mul: Tensor3<F> = Tensor3::zeros(f, [dim, dim, dim]);
    let rho = &abar.rho.map;
    let lam = &abar.lambda.map;
    for i in 0..m {
        for j in 0..d {
            for i2 in 0..m {
                for j2 in 0..d {
                    let out = mul.fiber_mut(i * d + j, i2 * d + j2);
                    for y in 0..d {
                        for k in 0..n {
                            let cr = rho.get(j2, y, k);
                            if cr.is_zero() {
                                continue;
                            }
                            let left = a.right.act(k, &aa.e(i));
                            for hh in 0..n {
                                for x in 0..d {
                                    let cl = lam.get(j, hh, x);
                                    if cl.is_zero() {
                                        continue;
                                    }
                                    let ab_part = aa.product(&left, &a.left.act(hh, &aa.e(i2)));
                                    let uv = ab.product(&ab.e(x), &ab.e(y));
                                    let c = cr.mul_ref(cl);
                                    for (p, cp) in ab_part.iter().enumerate() {
                                        if cp.is_zero() {
                                            continue;
                                        }
                                        let w = c.mul_ref(cp);
                                        for (q, cq) in uv.iter().enumerate() {
                                            if !cq.is_zero() {
                                                out[p * d + q].add_mul(&w, cq);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = (0..m)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}♮{}", aa.basis[i], ab.basis[j]))
        .collect();
    let alg = AlgebraData::new(f, labels, mul, None)?;
    Ok(SmashAlgebra {
        left_factor: a.clone(),
        right_factor: abar.clone(),
        alg,
    })
}

/// Associativity on every basis triple.
pub fn check_smash_associativity<F: Scalar>(s: &SmashAlgebra<F>) -> Result<Report<F>> {
    algebra_check(&s.alg)
}

/// Both sides of `Ker(ε)⇀a = 0 ⇔ h⇀a = ε(h)a` and of its right-hand mirror.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KerEpsInvariance {
    pub left_kernel: bool,
    pub left_counit: bool,
    pub right_kernel: bool,
    pub right_counit: bool,
}

impl KerEpsInvariance {
    /// `(left_kernel == left_counit, right_kernel == right_counit)`.
    pub fn equivalences(&self) -> (bool, bool) {
        (self.left_kernel == self.left_counit, self.right_kernel == self.right_counit)
    }
}

pub fn check_ker_eps_invariance<F: Scalar>(p: &PartialBimoduleData<F>, a: &[F]) -> Result<KerEpsInvariance> {
    let h = &**p.hopf();
    let alg = &**p.alg();
    if a.len() != alg.dim() {
        return Err(Error::Shape(format!("element has length {}, expected {}", a.len(), alg.dim())));
    }
    if is_zero_vec(a) {
        return Err(Error::Precondition("a must be nonzero".into()));
    }
    let kernel = h.counit_kernel();
    let on_kernel = |act: &dyn Fn(&[F]) -> Vec<F>| kernel.iter().all(|k| is_zero_vec(&act(k)));
    let on_basis = |act: &dyn Fn(&[F]) -> Vec<F>| (0..h.dim()).all(|i| act(&h.e(i)) == scaled(&h.counit[i], a));
    let left = |x: &[F]| p.left.act_elem(x, a);
    let right = |x: &[F]| p.right.act_elem(x, a);
    Ok(KerEpsInvariance {
        left_kernel: on_kernel(&left),
        left_counit: on_basis(&left),
        right_kernel: on_kernel(&right),
        right_counit: on_basis(&right),
    })
}

/// Which hypothesis certifies `(a♮u)² = a♮u`. The numbered conditions are
/// (1) `h⇀a = ε(h)a`, (2) `a↼h = ε(h)a`, (3) `ρ(u) = u⊗1`, (4) `λ(u) = 1⊗u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `Ker(ε)⇀a = 0 = a↼Ker(ε)`.
    Prop5,
    Conditions12,
    Conditions13,
    Conditions24,
    Conditions34,
    None,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Prop5 => "prop5",
            Route::Conditions12 => "(1)+(2)",
            Route::Conditions13 => "(1)+(3)",
            Route::Conditions24 => "(2)+(4)",
            Route::Conditions34 => "(3)+(4)",
            Route::None => "none",
        })
    }
}

/// Tries the routes in the order prop5, (1)+(2), (1)+(3), (2)+(4), (3)+(4) and returns the
/// first that applies, together with the verdict of squaring `a♮u` directly.
pub fn find_idempotent<F: Scalar>(s: &SmashAlgebra<F>, a: &[F], u: &[F]) -> Result<(bool, Route)> {
    let aa = &**s.left_factor.alg();
    let ab = &**s.right_factor.alg();
    let h = &**s.left_factor.hopf();
    if a.len() != aa.dim() || u.len() != ab.dim() {
        return Err(Error::Shape("element lengths do not match the factors".into()));
    }
    if is_zero_vec(a) || aa.product(a, a) != a {
        return Err(Error::Precondition("a is not a nonzero idempotent".into()));
    }
    if is_zero_vec(u) || ab.product(u, u) != u {
        return Err(Error::Precondition("u is not a nonzero idempotent".into()));
    }
    let inv = check_ker_eps_invariance(&s.left_factor, a)?;
    let c1 = inv.left_counit;
    let c2 = inv.right_counit;
    let c3 = s.right_factor.rho.coact(u) == append_unit(h, u);
    let c4 = s.right_factor.lambda.coact(u) == prepend_unit(h, u);
    let route = if inv.left_kernel && inv.right_kernel {
        Route::Prop5
    } else if c1 && c2 {
        Route::Conditions12
    } else if c1 && c3 {
        Route::Conditions13
    } else if c2 && c4 {
        Route::Conditions24
    } else if c3 && c4 {
        Route::Conditions34
    } else {
        Route::None
    };
    let x = s.element(a, u);
    let direct = s.alg.product(&x, &x) == x;
    if route != Route::None && !direct {
        return Err(Error::Internal(format!("route {route} applies but (a♮u)² ≠ a♮u")));
    }
    Ok((direct, route))
}

/// `e·S·e` with identity `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerAlgebra<F> {
    pub idempotent: Vec<F>,
    /// `e·S·e` inside `S`.
    pub basis: Subspace<F>,
    /// The corner in the coordinates of `basis`, with unit `e`.
    pub alg: AlgebraData<F>,
}

pub fn unital_corner<F: Scalar>(s: &SmashAlgebra<F>, e: &[F]) -> Result<CornerAlgebra<F>> {
    let alg = &s.alg;
    let f = alg.field;
    if e.len() != alg.dim() {
        return Err(Error::Shape(format!("element has length {}, expected {}", e.len(), alg.dim())));
    }
    if is_zero_vec(e) || alg.product(e, e) != e {
        let sq = alg.product(e, e);
        let what = if is_zero_vec(&sq) && !is_zero_vec(e) { " (its square is 0)" } else { "" };
        return Err(Error::Precondition(format!("e is not a nonzero idempotent{what}")));
    }
    let gens = (0..alg.dim()).map(|i| alg.product(&alg.product(e, &alg.e(i)), e));
    let basis = Subspace::span(f, alg.dim(), gens)?;
    let labels = (0..basis.dim()).map(|i| format!("c{i}")).collect();
    let mut corner = alg.restrict(&basis, labels)?;
    corner.unit = Some(
        basis
            .coordinates(e)
            .ok_or_else(|| Error::Internal("e lies outside its corner".into()))?,
    );
    let r = algebra_check(&corner)?;
    if !r.passed() {
        return Err(Error::Internal(format!("corner algebra fails: {}", r.summary())));
    }
    Ok(CornerAlgebra {
        idempotent: e.to_vec(),
        basis,
        alg: corner,
    })
}
