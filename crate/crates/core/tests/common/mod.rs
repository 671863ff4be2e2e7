//! Independent oracles for the integration tests. Nothing here calls the crate's
//! own elimination or closure routines.
#![allow(dead_code)]

use num_traits::Zero;
use phopf::actions::PartialBimoduleData;
use phopf::{Mat, Rational, Tensor3};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn qv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

/// Textbook Gaussian elimination over ℚ on a copy of `rows`.
pub fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone() / piv.clone();
                for k in 0..cols {
                    let t = m[rank][k].clone() * factor.clone();
                    m[r][k] = m[r][k].clone() - t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Gaussian elimination over GF(p) on plain residues.
pub fn naive_rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let factor = m[r][c] * inv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p - factor * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rows_of(m: &Mat<Rational>) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// `xᵀM` by explicit sums.
pub fn naive_apply(m: &Mat<Rational>, x: &[Rational]) -> Vec<Rational> {
    (0..m.cols())
        .map(|j| (0..m.rows()).fold(Rational::zero(), |acc, i| acc + x[i].clone() * m.get(i, j).clone()))
        .collect()
}

pub fn naive_bilinear(t: &Tensor3<Rational>, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let [a, b, c] = t.dims();
    let mut out = vec![Rational::zero(); c];
    for i in 0..a {
        for j in 0..b {
            let w = x[i].clone() * y[j].clone();
            if w.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.clone() + w.clone() * t.get(i, j, k).clone();
            }
        }
    }
    out
}

/// Dimension of the smallest subspace containing `seed`, stable under `ops` and
/// closed under `mul`, by repeatedly adding every image and product until the
/// naive rank stops growing.
pub fn naive_closure_dim(seed: &[Vec<Rational>], ops: &[Mat<Rational>], mul: Option<&Tensor3<Rational>>) -> usize {
    let mut vecs: Vec<Vec<Rational>> = Vec::new();
    let mut rank = 0;
    for v in seed {
        vecs.push(v.clone());
        let r = naive_rank(&vecs);
        if r == rank {
            vecs.pop();
        }
        rank = r;
    }
    loop {
        let mut candidates = Vec::new();
        for v in &vecs {
            for m in ops {
                candidates.push(naive_apply(m, v));
            }
            if let Some(t) = mul {
                for w in &vecs {
                    candidates.push(naive_bilinear(t, v, w));
                }
            }
        }
        let before = rank;
        for c in candidates {
            vecs.push(c);
            let r = naive_rank(&vecs);
            if r == rank {
                vecs.pop();
            }
            rank = r;
        }
        if rank == before {
            return rank;
        }
    }
}

/// For a partial bimodule algebra on `k`: `[h▷φ(1)◁k](h'⊗k') = h'h ⇀ 1 ↼ kk'`, read straight off
/// the action tables.
pub fn spanning_functionals(p: &PartialBimoduleData<Rational>) -> Vec<Vec<Rational>> {
    let h = &**p.hopf();
    let n = h.dim();
    let left = |v: &[Rational]| (0..n).fold(q(0), |acc, i| acc + v[i].clone() * p.left.map.get(i, 0, 0).clone());
    let right = |v: &[Rational]| (0..n).fold(q(0), |acc, i| acc + v[i].clone() * p.right.map.get(i, 0, 0).clone());
    let mut out = Vec::new();
    for x in 0..n {
        for k in 0..n {
            let mut f = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let hx = h.mul_basis(i, x).to_vec();
                    let kk = h.mul_basis(k, j).to_vec();
                    f.push(left(&hx) * right(&kk));
                }
            }
            out.push(f);
        }
    }
    out
}
