//! Ready-made structures: the Sweedler algebra acting and coacting on the ground field,
//! and small partial group actions.

use std::sync::Arc;

use crate::actions::{GroupPartialActionData, PartialActionData, PartialBimoduleData, Side};
use crate::algebra::{sweedler_h4, AlgebraData, HopfData};
use crate::coactions::{PartialBicomoduleData, PartialCoactionData};
use crate::error::Result;
use crate::group::GroupTable;
use crate::linalg::{Mat, Tensor3};
use crate::scalar::{FieldSpec, Scalar};

/// The one-dimensional algebra `k` with basis `1`.
pub fn field_algebra<F: Scalar>(field: FieldSpec) -> Result<AlgebraData<F>> {
    let mut mul = Tensor3::zeros(field, [1, 1, 1]);
    mul.set(0, 0, 0, F::one_in(field));
    AlgebraData::new(field, vec!["1".into()], mul, Some(vec![F::one_in(field)]))
}

fn k_table<F: Scalar>(field: FieldSpec, dims: [usize; 3], values: [F; 4]) -> Tensor3<F> {
    let mut t = Tensor3::zeros(field, dims);
    for (h, v) in values.into_iter().enumerate() {
        match dims {
            [4, 1, 1] => t.set(h, 0, 0, v),
            [1, 4, 1] => t.set(0, h, 0, v),
            _ => t.set(0, 0, h, v),
        }
    }
    t
}

fn h4_values<F: Scalar>(field: FieldSpec, r: &F) -> [F; 4] {
    [F::one_in(field), F::zero_in(field), r.clone(), -r.clone()]
}

/// `1⇀1 = 1`, `g⇀1 = 0`, `x⇀1 = r`, `xg⇀1 = -r`.
pub fn h4_left_on_k<F: Scalar>(h4: Arc<HopfData<F>>, k: Arc<AlgebraData<F>>, r: &F) -> Result<PartialActionData<F>> {
    let f = k.field;
    PartialActionData::new(h4, k, Side::Left, k_table(f, [4, 1, 1], h4_values(f, r)))
}

/// `1↼1 = 1`, `1↼g = 0`, `1↼x = s`, `1↼gx = -s` (so `1↼xg = s`).
///
/// With `1↼xg = -s` instead, `(1↼g)↼xg = (1↼g(xg)₁)(1↼(xg)₂)` fails for `s ≠ 0`.
pub fn h4_right_on_k<F: Scalar>(h4: Arc<HopfData<F>>, k: Arc<AlgebraData<F>>, s: &F) -> Result<PartialActionData<F>> {
    let f = k.field;
    let values = [F::one_in(f), F::zero_in(f), s.clone(), s.clone()];
    PartialActionData::new(h4, k, Side::Right, k_table(f, [4, 1, 1], values))
}

/// The right action table with `1↼xg = -s`, unchecked beyond the unit law.
#[doc(hidden)]
pub fn h4_right_on_k_xg_minus<F: Scalar>(h4: Arc<HopfData<F>>, k: Arc<AlgebraData<F>>, s: &F) -> Result<PartialActionData<F>> {
    let f = k.field;
    PartialActionData::new(h4, k, Side::Right, k_table(f, [4, 1, 1], h4_values(f, s)))
}

/// The partial `H₄`-bimodule algebra `k` with parameters `(r, s)`, certified.
pub fn h4_bimodule_k<F: Scalar>(field: FieldSpec, r: &F, s: &F) -> Result<PartialBimoduleData<F>> {
    let h4 = Arc::new(sweedler_h4(field)?);
    let k = Arc::new(field_algebra(field)?);
    PartialBimoduleData::certified(h4_left_on_k(h4.clone(), k.clone(), r)?, h4_right_on_k(h4, k, s)?)
}

fn half<F: Scalar>(field: FieldSpec) -> Result<F> {
    F::from_ratio(field, 1, 2)
}

/// `ρ(1) = 1⊗(½ + ½g + u·x)`.
pub fn h4_rho_k<F: Scalar>(h4: Arc<HopfData<F>>, k: Arc<AlgebraData<F>>, u: &F) -> Result<PartialCoactionData<F>> {
    let f = k.field;
    let values = [half(f)?, half(f)?, u.clone(), F::zero_in(f)];
    PartialCoactionData::new(h4, k, Side::Right, k_table(f, [1, 1, 4], values))
}

/// `λ(1) = (½ + ½g + t·xg)⊗1`.
pub fn h4_lambda_k<F: Scalar>(h4: Arc<HopfData<F>>, k: Arc<AlgebraData<F>>, t: &F) -> Result<PartialCoactionData<F>> {
    let f = k.field;
    let values = [half(f)?, half(f)?, F::zero_in(f), t.clone()];
    PartialCoactionData::new(h4, k, Side::Left, k_table(f, [1, 4, 1], values))
}

/// The partial `H₄`-bicomodule algebra `k` with parameters `(t, u)`, certified.
pub fn h4_bicomodule_k<F: Scalar>(field: FieldSpec, t: &F, u: &F) -> Result<PartialBicomoduleData<F>> {
    let h4 = Arc::new(sweedler_h4(field)?);
    let k = Arc::new(field_algebra(field)?);
    PartialBicomoduleData::certified(h4_lambda_k(h4.clone(), k.clone(), t)?, h4_rho_k(h4, k, u)?)
}

/// `ℤ/2` acting partially on `k³ = ke₁⊕ke₂⊕ke₃`: `D₁ = ke₁⊕ke₂` with `α₁` swapping `e₁, e₂`.
pub fn z2_partial_group<F: Scalar>(field: FieldSpec) -> Result<GroupPartialActionData<F>> {
    let (o, z) = (F::one_in(field), F::zero_in(field));
    let mut mul = Tensor3::zeros(field, [3, 3, 3]);
    for i in 0..3 {
        mul.set(i, i, i, o.clone());
    }
    let labels = (1..=3).map(|i| format!("e{i}")).collect();
    let alg = Arc::new(AlgebraData::new(field, labels, mul, Some(vec![o.clone(); 3]))?);
    let d1 = vec![o.clone(), o.clone(), z.clone()];
    let swap = Mat::from_rows(
        field,
        3,
        vec![
            vec![z.clone(), o.clone(), z.clone()],
            vec![o.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
        ],
    )?;
    GroupPartialActionData::new(
        GroupTable::cyclic(2),
        alg,
        vec![vec![o; 3], d1],
        vec![Mat::identity(field, 3), swap],
    )
}
