//! Dense exact linear algebra: matrices, 3-tensors, subspaces in RREF and closures.
//!
//! A matrix used as a linear map stores the image of basis vector `i` in row `i`,
//! so `apply(x)` computes `xᵀM` and the image of the map is the row space.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

pub fn zeros<F: Scalar>(field: FieldSpec, n: usize) -> Vec<F> {
    vec![F::zero_in(field); n]
}

pub fn basis_vector<F: Scalar>(field: FieldSpec, n: usize, i: usize) -> Vec<F> {
    let mut v = zeros(field, n);
    v[i] = F::one_in(field);
    v
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `acc += c * v`
pub fn axpy<F: Scalar>(acc: &mut [F], c: &F, v: &[F]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn scaled<F: Scalar>(c: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| c.mul_ref(x)).collect()
}

pub fn sub_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn add_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn dot<F: Scalar>(field: FieldSpec, a: &[F], b: &[F]) -> F {
    let mut s = F::zero_in(field);
    for (x, y) in a.iter().zip(b) {
        s.add_mul(x, y);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<F> {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: zeros(field, rows * cols),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, F::one_in(field));
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        let m = Mat {
            field,
            rows: n,
            cols,
            data,
        };
        m.check_field()?;
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `xᵀM`: the image of the coordinate vector `x` under the map.
    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.rows, "apply: dimension mismatch");
        let mut out = zeros(self.field, self.cols);
        for (i, c) in x.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    /// Matrix product `self · other`; as maps, `self` first, then `other`.
    pub fn matmul(&self, other: &Mat<F>) -> Self {
        assert_eq!(self.cols, other.rows, "matmul: dimension mismatch");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let r = other.apply(self.row(i));
            out.row_mut(i).clone_from_slice(&r);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    /// Row space, i.e. the image of the map.
    pub fn image(&self) -> Subspace<F> {
        let mut s = Subspace::zero(self.field, self.cols);
        for i in 0..self.rows {
            s.insert(self.row(i).to_vec());
        }
        s
    }

    /// `{x : xᵀM = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let ns = column_nullspace(&self.transpose());
        let mut s = Subspace::zero(self.field, self.rows);
        for v in ns {
            s.insert(v);
        }
        s
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(basis_vector(self.field, n, i));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Mat::from_rows(self.field, n, inv).ok()
    }

    fn check_field(&self) -> Result<()> {
        match self.data.iter().position(|x| x.field() != self.field) {
            Some(p) => Err(Error::Field(format!(
                "entry ({}, {}) lies in {}, matrix is over {}",
                p / self.cols.max(1),
                p % self.cols.max(1),
                self.data[p].field(),
                self.field
            ))),
            None => Ok(()),
        }
    }
}

/// In-place RREF of a row-major block; returns pivot columns.
fn rref_in_place<F: Scalar>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].try_inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = inv.mul_ref(x);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// `{y : A y = 0}` for the matrix `A` acting on column vectors.
fn column_nullspace<F: Scalar>(a: &Mat<F>) -> Vec<Vec<F>> {
    let field = a.field;
    let mut rows = a.row_vecs();
    let pivots = rref_in_place(&mut rows, a.cols);
    let mut out = Vec::new();
    for free in (0..a.cols).filter(|c| !pivots.contains(c)) {
        let mut v = zeros(field, a.cols);
        v[free] = F::one_in(field);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// One solution of `A y = b` (`A` acting on column vectors), if any.
pub fn solve<F: Scalar>(a: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(a.rows, b.len(), "solve: dimension mismatch");
    let field = a.field;
    let mut rows: Vec<Vec<F>> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_in_place(&mut rows, a.cols + 1);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut y = zeros(field, a.cols);
    for (r, &p) in pivots.iter().enumerate() {
        y[p] = rows[r][a.cols].clone();
    }
    Some(y)
}

/// Reduced row-echelon form and rank.
pub fn rref<F: Scalar>(m: &Mat<F>) -> Result<(usize, Mat<F>)> {
    m.check_field()?;
    let mut rows = m.row_vecs();
    let pivots = rref_in_place(&mut rows, m.cols);
    let rank = pivots.len();
    Ok((rank, Mat::from_rows(m.field, m.cols, rows)?))
}

/// Dense 3-index tensor, last index fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3<F> {
    field: FieldSpec,
    dims: [usize; 3],
    data: Vec<F>,
}

impl<F: Scalar> Tensor3<F> {
    pub fn zeros(field: FieldSpec, dims: [usize; 3]) -> Self {
        Tensor3 {
            field,
            dims,
            data: zeros(field, dims[0] * dims[1] * dims[2]),
        }
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }
    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        &self.data[self.idx(i, j, k)]
    }
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F) {
        let p = self.idx(i, j, k);
        self.data[p] = v;
    }
    /// The vector `t[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[F] {
        let p = self.idx(i, j, 0);
        &self.data[p..p + self.dims[2]]
    }
    pub fn fiber_mut(&mut self, i: usize, j: usize) -> &mut [F] {
        let p = self.idx(i, j, 0);
        let n = self.dims[2];
        &mut self.data[p..p + n]
    }
    /// The block `t[i][·][·]`, flattened with the last index fastest.
    pub fn slab(&self, i: usize) -> &[F] {
        let w = self.dims[1] * self.dims[2];
        &self.data[i * w..(i + 1) * w]
    }
    pub fn slab_mut(&mut self, i: usize) -> &mut [F] {
        let w = self.dims[1] * self.dims[2];
        &mut self.data[i * w..(i + 1) * w]
    }
    pub fn entries(&self) -> &[F] {
        &self.data
    }

    /// `Σ x_i y_j t[i][j][·]`
    pub fn bilinear(&self, x: &[F], y: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.dims[0], "bilinear: left dimension mismatch");
        assert_eq!(y.len(), self.dims[1], "bilinear: right dimension mismatch");
        let mut out = zeros(self.field, self.dims[2]);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a.mul_ref(b);
                axpy(&mut out, &c, self.fiber(i, j));
            }
        }
        out
    }

    /// `Σ x_i t[i][·][·]` as a matrix (dims[1] × dims[2]).
    pub fn contract_first(&self, x: &[F]) -> Mat<F> {
        let mut m = Mat::zeros(self.field, self.dims[1], self.dims[2]);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dims[1] {
                axpy(m.row_mut(j), a, self.fiber(i, j));
            }
        }
        m
    }
}

/// A subspace of `F^n`, stored as the rows of its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            s.insert(basis_vector(field, ambient, i));
        }
        s
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::Shape("empty ambient dimension".into()));
        }
        let mut s = Self::zero(field, ambient);
        for (i, v) in vectors.into_iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::Shape(format!("vector {i} has length {}, expected {ambient}", v.len())));
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(Error::Field(format!("vector {i} has an entry over {}", x.field())));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::Shape(format!("vector of length {} tested against {}-dim ambient", v.len(), self.ambient)));
        }
        Ok(is_zero_vec(&self.reduce(v)))
    }

    /// Membership for vectors already known to have the right length.
    pub fn has(&self, v: &[F]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates with respect to `basis()`, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if v.len() != self.ambient || !self.has(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Inverse of `coordinates`.
    pub fn from_coordinates(&self, c: &[F]) -> Vec<F> {
        let mut v = zeros(self.field, self.ambient);
        for (x, row) in c.iter().zip(&self.rows) {
            axpy(&mut v, x, row);
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.reduce(&v);
        let Some(c) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[c].try_inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = inv.mul_ref(x);
        }
        for row in self.rows.iter_mut() {
            if !row[c].is_zero() {
                let f = -row[c].clone();
                axpy(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.rows.insert(at, r);
        self.pivots.insert(at, c);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.has(r))
    }

    /// Basis as the rows of a matrix (`dim × ambient`).
    pub fn as_mat(&self) -> Mat<F> {
        Mat::from_rows(self.field, self.ambient, self.rows.clone()).expect("rows have ambient length")
    }

    /// `{w : w·v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace<F> {
        let ns = column_nullspace(&self.as_mat());
        let mut s = Subspace::zero(self.field, self.ambient);
        for v in ns {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient, "intersection: ambient mismatch");
        let mut ann = self.annihilator();
        for w in other.annihilator().basis() {
            ann.insert(w.clone());
        }
        ann.annihilator()
    }

    /// `{x : map.apply(x) ∈ self}` for a map into this ambient space.
    pub fn preimage(&self, map: &Mat<F>) -> Subspace<F> {
        assert_eq!(map.cols(), self.ambient, "preimage: codomain mismatch");
        let ann = self.annihilator();
        let mut cons = Subspace::zero(self.field, map.rows());
        let mt = map.transpose();
        for w in ann.basis() {
            cons.insert(mt.apply(w));
        }
        cons.annihilator()
    }
}

/// A basis of a subspace that need not be in echelon form, with coordinates relative to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame<F> {
    vectors: Vec<Vec<F>>,
    span: Subspace<F>,
    to_frame: Mat<F>,
}

impl<F: Scalar> Frame<F> {
    /// Keeps each candidate that is independent of the ones kept before it.
    /// Returns the frame and the indices of the kept candidates.
    pub fn greedy(field: FieldSpec, ambient: usize, candidates: &[Vec<F>]) -> Result<(Frame<F>, Vec<usize>)> {
        let mut span = Subspace::zero(field, ambient);
        let mut vectors = Vec::new();
        let mut kept = Vec::new();
        for (i, v) in candidates.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::Shape(format!("candidate {i} has length {}, expected {ambient}", v.len())));
            }
            if span.insert(v.clone()) {
                vectors.push(v.clone());
                kept.push(i);
            }
        }
        let rows = vectors
            .iter()
            .map(|v| span.coordinates(v).expect("member"))
            .collect();
        let c = Mat::from_rows(field, span.dim(), rows)?;
        let to_frame = c.inverse().ok_or_else(|| Error::Internal("frame change of basis is singular".into()))?;
        Ok((Frame { vectors, span, to_frame }, kept))
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.vectors
    }
    pub fn span(&self) -> &Subspace<F> {
        &self.span
    }
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.span.coordinates(v).map(|c| self.to_frame.apply(&c))
    }
    pub fn from_coordinates(&self, c: &[F]) -> Vec<F> {
        let mut v = zeros(self.span.field(), self.span.ambient_dim());
        for (x, u) in c.iter().zip(&self.vectors) {
            axpy(&mut v, x, u);
        }
        v
    }
}

/// Smallest subspace containing `seed`, stable under every map in `linear_ops`
/// and closed under every bilinear map in `bilinear_ops`.
pub fn closure_fixpoint<F: Scalar>(
    seed: &Subspace<F>,
    linear_ops: &[Mat<F>],
    bilinear_ops: &[Tensor3<F>],
) -> Result<Subspace<F>> {
    let n = seed.ambient_dim();
    for (i, m) in linear_ops.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Shape(format!("linear op {i} is {}x{}, ambient is {n}", m.rows(), m.cols())));
        }
    }
    for (i, t) in bilinear_ops.iter().enumerate() {
        if t.dims() != [n, n, n] {
            return Err(Error::Shape(format!("bilinear op {i} has dims {:?}, ambient is {n}", t.dims())));
        }
    }
    let mut space = seed.clone();
    let mut generators: Vec<Vec<F>> = Vec::new();
    let mut frontier: Vec<Vec<F>> = seed.basis().to_vec();
    for _round in 0..=n + 1 {
        if frontier.is_empty() {
            return Ok(space);
        }
        let mut images = Vec::new();
        for v in &frontier {
            for m in linear_ops {
                images.push(m.apply(v));
            }
        }
        generators.extend(frontier.iter().cloned());
        for t in bilinear_ops {
            for f in &frontier {
                for g in &generators {
                    images.push(t.bilinear(g, f));
                    images.push(t.bilinear(f, g));
                }
            }
        }
        let mut next = Vec::new();
        for w in images {
            let r = space.reduce(&w);
            if !is_zero_vec(&r) {
                space.insert(r.clone());
                next.push(r);
            }
        }
        frontier = next;
    }
    Err(Error::Internal(format!("closure did not stabilise within {} rounds", n + 1)))
}
