//! JSON interchange. Scalars are strings (`"n"`, `"n/d"`, residues mod p) and tensors
//! are sparse lists `[i, j, k, "c"]` with zero entries omitted.
//!
//! Structures refer to their Hopf algebra and algebra either inline or by a path
//! relative to the referring file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::{GroupPartialActionData, PartialActionData, PartialBimoduleData, Side};
use crate::algebra::{AlgebraData, HopfData};
use crate::coactions::{PartialBicomoduleData, PartialCoactionData};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{Mat, Tensor3};
use crate::report::Report;
use crate::scalar::{format_scalar, FieldSpec, Scalar};

pub type Entry3 = (usize, usize, usize, String);
pub type Entry2 = (usize, usize, String);

/// A nested structure given inline or as a path.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(Box<T>),
}

impl<T> Ref<T> {
    pub fn inline(t: T) -> Self {
        Ref::Inline(Box::new(t))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub mul: Vec<Entry3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfFile {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub mul: Vec<Entry3>,
    pub unit: Vec<String>,
    pub comul: Vec<Entry3>,
    pub counit: Vec<String>,
    pub antipode: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionFile {
    pub hopf: Ref<HopfFile>,
    pub algebra: Ref<AlgebraFile>,
    pub side: Side,
    pub map: Vec<Entry3>,
    #[serde(default)]
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoactionFile {
    pub hopf: Ref<HopfFile>,
    pub algebra: Ref<AlgebraFile>,
    pub side: Side,
    pub map: Vec<Entry3>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimoduleFile {
    pub left: Ref<ActionFile>,
    pub right: Ref<ActionFile>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BicomoduleFile {
    pub lambda: Ref<CoactionFile>,
    pub rho: Ref<CoactionFile>,
}

/// `alphas[g]` is the matrix of `a ↦ α_g(a·1_{g⁻¹})` in row convention.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupActionFile {
    pub group: Vec<Vec<usize>>,
    pub algebra: Ref<AlgebraFile>,
    pub idempotents: Vec<Vec<String>>,
    pub alphas: Vec<Vec<Entry2>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureFile {
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub passed: bool,
    pub failures: Vec<FailureFile>,
}

/// Output of `globalize`: the embedding, the globalization subalgebra and its checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlobalizationResult {
    pub kind: String,
    pub ambient_dim: usize,
    /// Row `i` is the image of the `i`-th basis element of `A`.
    pub phi: Vec<Vec<String>>,
    pub b_basis: Vec<Vec<String>>,
    /// Multiplication of `B` in the coordinates of `b_basis`.
    pub mul: Vec<Entry3>,
    pub certificate: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<BTreeMap<String, bool>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn scalar<F: Scalar>(field: FieldSpec, s: &str) -> Result<F> {
    F::parse_in(field, s).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(m),
        other => parse_err(other.to_string()),
    })
}

pub fn vec_to_json<F: Scalar>(v: &[F]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn vec_from_json<F: Scalar>(field: FieldSpec, v: &[String], len: usize) -> Result<Vec<F>> {
    if v.len() != len {
        return Err(parse_err(format!("vector has length {}, expected {len}", v.len())));
    }
    v.iter().map(|s| scalar(field, s)).collect()
}

pub fn tensor_to_json<F: Scalar>(t: &Tensor3<F>) -> Vec<Entry3> {
    let [a, b, c] = t.dims();
    let mut out = Vec::new();
    for i in 0..a {
        for j in 0..b {
            for (k, x) in t.fiber(i, j).iter().enumerate().take(c) {
                if !x.is_zero() {
                    out.push((i, j, k, format_scalar(x)));
                }
            }
        }
    }
    out
}

/// Repeated indices are rejected rather than summed.
pub fn tensor_from_json<F: Scalar>(field: FieldSpec, dims: [usize; 3], entries: &[Entry3]) -> Result<Tensor3<F>> {
    let mut t = Tensor3::zeros(field, dims);
    let mut seen = std::collections::HashSet::new();
    for (i, j, k, c) in entries {
        if *i >= dims[0] || *j >= dims[1] || *k >= dims[2] {
            return Err(parse_err(format!("entry [{i}, {j}, {k}] outside dims {dims:?}")));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(parse_err(format!("entry [{i}, {j}, {k}] given twice")));
        }
        t.set(*i, *j, *k, scalar(field, c)?);
    }
    Ok(t)
}

pub fn mat_to_json<F: Scalar>(m: &Mat<F>) -> Vec<Entry2> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for (j, x) in m.row(i).iter().enumerate() {
            if !x.is_zero() {
                out.push((i, j, format_scalar(x)));
            }
        }
    }
    out
}

pub fn mat_from_json<F: Scalar>(field: FieldSpec, rows: usize, cols: usize, entries: &[Entry2]) -> Result<Mat<F>> {
    let mut m = Mat::zeros(field, rows, cols);
    let mut seen = std::collections::HashSet::new();
    for (i, j, c) in entries {
        if *i >= rows || *j >= cols {
            return Err(parse_err(format!("entry [{i}, {j}] outside {rows}x{cols}")));
        }
        if !seen.insert((*i, *j)) {
            return Err(parse_err(format!("entry [{i}, {j}] given twice")));
        }
        m.set(*i, *j, scalar(field, c)?);
    }
    Ok(m)
}

fn check_field<F: Scalar>(field: FieldSpec) -> Result<()> {
    field.validate()?;
    if F::supports(field) {
        Ok(())
    } else {
        Err(Error::Field(format!("this scalar type cannot represent {field}")))
    }
}

impl AlgebraFile {
    pub fn from_data<F: Scalar>(a: &AlgebraData<F>) -> Self {
        AlgebraFile {
            field: a.field,
            basis: a.basis.clone(),
            mul: tensor_to_json(&a.mul),
            unit: a.unit.as_deref().map(vec_to_json),
        }
    }

    pub fn to_data<F: Scalar>(&self) -> Result<AlgebraData<F>> {
        check_field::<F>(self.field)?;
        let n = self.basis.len();
        let mul = tensor_from_json(self.field, [n, n, n], &self.mul)?;
        let unit = self.unit.as_ref().map(|u| vec_from_json(self.field, u, n)).transpose()?;
        AlgebraData::new(self.field, self.basis.clone(), mul, unit)
    }
}

impl HopfFile {
    pub fn from_data<F: Scalar>(h: &HopfData<F>) -> Self {
        HopfFile {
            field: h.field(),
            basis: h.alg.basis.clone(),
            mul: tensor_to_json(&h.alg.mul),
            unit: vec_to_json(h.unit()),
            comul: tensor_to_json(&h.comul),
            counit: vec_to_json(&h.counit),
            antipode: mat_to_json(&h.antipode),
        }
    }

    pub fn to_data<F: Scalar>(&self) -> Result<HopfData<F>> {
        check_field::<F>(self.field)?;
        let f = self.field;
        let n = self.basis.len();
        let alg = AlgebraData::new(
            f,
            self.basis.clone(),
            tensor_from_json(f, [n, n, n], &self.mul)?,
            Some(vec_from_json(f, &self.unit, n)?),
        )?;
        HopfData::new(
            alg,
            tensor_from_json(f, [n, n, n], &self.comul)?,
            vec_from_json(f, &self.counit, n)?,
            mat_from_json(f, n, n, &self.antipode)?,
        )
    }
}

impl ActionFile {
    /// Algebra inline, Hopf algebra as given.
    pub fn from_data<F: Scalar>(p: &PartialActionData<F>, hopf: Ref<HopfFile>, symmetric: bool) -> Self {
        ActionFile {
            hopf,
            algebra: Ref::inline(AlgebraFile::from_data(&p.alg)),
            side: p.side,
            map: tensor_to_json(&p.map),
            symmetric,
        }
    }
}

impl CoactionFile {
    pub fn from_data<F: Scalar>(p: &PartialCoactionData<F>, hopf: Ref<HopfFile>) -> Self {
        CoactionFile {
            hopf,
            algebra: Ref::inline(AlgebraFile::from_data(&p.alg)),
            side: p.side,
            map: tensor_to_json(&p.map),
        }
    }
}

impl GroupActionFile {
    pub fn from_data<F: Scalar>(g: &GroupPartialActionData<F>) -> Self {
        GroupActionFile {
            group: g.group.table().to_vec(),
            algebra: Ref::inline(AlgebraFile::from_data(&g.alg)),
            idempotents: g.idempotents.iter().map(|e| vec_to_json(e)).collect(),
            alphas: g.alphas.iter().map(mat_to_json).collect(),
        }
    }
}

impl ReportFile {
    pub fn from_report<F: Scalar>(r: &Report<F>) -> Self {
        ReportFile {
            passed: r.passed(),
            failures: r
                .failures()
                .iter()
                .map(|f| FailureFile {
                    law: f.law.clone(),
                    indices: f.indices.clone(),
                    lhs: vec_to_json(&f.lhs),
                    rhs: vec_to_json(&f.rhs),
                })
                .collect(),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

/// Resolves a reference; returns the value and the directory its own references are relative to.
fn resolve<T: DeserializeOwned + Clone>(r: &Ref<T>, base: &Path) -> Result<(T, PathBuf)> {
    match r {
        Ref::Inline(t) => Ok(((**t).clone(), base.to_path_buf())),
        Ref::Path(p) => {
            let path = base.join(p);
            Ok((read_json(&path)?, dir_of(&path)))
        }
    }
}

/// Finds the field a structure file is written over, following references.
pub fn detect_field(path: &Path) -> Result<FieldSpec> {
    let v: Value = read_json(path)?;
    detect_in(&v, &dir_of(path), 0)
}

fn detect_in(v: &Value, base: &Path, depth: usize) -> Result<FieldSpec> {
    if depth > 8 {
        return Err(parse_err("references nested too deeply"));
    }
    if let Some(f) = v.get("field") {
        return serde_json::from_value(f.clone()).map_err(|e| parse_err(format!("field: {e}")));
    }
    for key in ["hopf", "algebra", "left", "lambda"] {
        match v.get(key) {
            Some(Value::String(p)) => {
                let path = base.join(p);
                let inner: Value = read_json(&path)?;
                return detect_in(&inner, &dir_of(&path), depth + 1);
            }
            Some(inner @ Value::Object(_)) => return detect_in(inner, base, depth + 1),
            _ => {}
        }
    }
    Err(parse_err("cannot determine the field of this file"))
}

pub fn load_algebra<F: Scalar>(path: &Path) -> Result<AlgebraData<F>> {
    read_json::<AlgebraFile>(path)?.to_data()
}

pub fn load_hopf<F: Scalar>(path: &Path) -> Result<HopfData<F>> {
    read_json::<HopfFile>(path)?.to_data()
}

fn load_parts<F: Scalar>(
    hopf: &Ref<HopfFile>,
    algebra: &Ref<AlgebraFile>,
    base: &Path,
) -> Result<(Arc<HopfData<F>>, Arc<AlgebraData<F>>)> {
    let h: HopfData<F> = resolve(hopf, base)?.0.to_data()?;
    let a: AlgebraData<F> = resolve(algebra, base)?.0.to_data()?;
    if a.field != h.field() {
        return Err(Error::Field("Hopf algebra and algebra over different fields".into()));
    }
    Ok((Arc::new(h), Arc::new(a)))
}

fn action_from<F: Scalar>(file: &ActionFile, base: &Path) -> Result<(PartialActionData<F>, bool)> {
    let (h, a) = load_parts(&file.hopf, &file.algebra, base)?;
    let map = tensor_from_json(h.field(), [h.dim(), a.dim(), a.dim()], &file.map)?;
    Ok((PartialActionData::new(h, a, file.side, map)?, file.symmetric))
}

fn coaction_from<F: Scalar>(file: &CoactionFile, base: &Path) -> Result<PartialCoactionData<F>> {
    let (h, a) = load_parts(&file.hopf, &file.algebra, base)?;
    let (n, m) = (h.dim(), a.dim());
    let dims = match file.side {
        Side::Right => [m, m, n],
        Side::Left => [m, n, m],
    };
    let map = tensor_from_json(h.field(), dims, &file.map)?;
    PartialCoactionData::new(h, a, file.side, map)
}

/// Loads an action and its `symmetric` flag.
pub fn load_action<F: Scalar>(path: &Path) -> Result<(PartialActionData<F>, bool)> {
    action_from(&read_json(path)?, &dir_of(path))
}

pub fn load_coaction<F: Scalar>(path: &Path) -> Result<PartialCoactionData<F>> {
    coaction_from(&read_json(path)?, &dir_of(path))
}

pub fn load_bimodule<F: Scalar>(path: &Path) -> Result<PartialBimoduleData<F>> {
    let file: BimoduleFile = read_json(path)?;
    let base = dir_of(path);
    let (l, lb) = resolve(&file.left, &base)?;
    let (r, rb) = resolve(&file.right, &base)?;
    PartialBimoduleData::new(action_from(&l, &lb)?.0, action_from(&r, &rb)?.0)
}

pub fn load_bicomodule<F: Scalar>(path: &Path) -> Result<PartialBicomoduleData<F>> {
    let file: BicomoduleFile = read_json(path)?;
    let base = dir_of(path);
    let (l, lb) = resolve(&file.lambda, &base)?;
    let (r, rb) = resolve(&file.rho, &base)?;
    PartialBicomoduleData::new(coaction_from(&l, &lb)?, coaction_from(&r, &rb)?)
}

pub fn load_group_action<F: Scalar>(path: &Path) -> Result<GroupPartialActionData<F>> {
    let file: GroupActionFile = read_json(path)?;
    let (af, _) = resolve(&file.algebra, &dir_of(path))?;
    let alg: AlgebraData<F> = af.to_data()?;
    let f = alg.field;
    let d = alg.dim();
    let group = GroupTable::new(file.group.clone())?;
    let idempotents = file.idempotents.iter().map(|e| vec_from_json(f, e, d)).collect::<Result<_>>()?;
    let alphas = file.alphas.iter().map(|m| mat_from_json(f, d, d, m)).collect::<Result<_>>()?;
    GroupPartialActionData::new(group, Arc::new(alg), idempotents, alphas)
}
