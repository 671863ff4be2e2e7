//! Finite groups by multiplication table, and a small built-in catalogue.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let fail = |law: &str, w: String| Err(Error::Precondition(format!("not a group: {law} fails at {w}")));
        if n == 0 {
            return fail("non-emptiness", "empty table".into());
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {a} has length {}, expected {n}", row.len())));
            }
            if let Some(b) = row.iter().position(|&c| c >= n) {
                return fail("closure", format!("({a}, {b})"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return fail("associativity", format!("({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return fail("identity", "no two-sided identity".into());
        };
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == e && table[b][a] == e) {
                Some(b) => inverse.push(b),
                None => return fail("inverses", format!("element {a}")),
            }
        }
        Ok(GroupTable {
            table,
            identity: e,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn cyclic(n: usize) -> Self {
        let t = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(t).expect("cyclic group")
    }

    /// Direct product, element `(a, b)` at index `a·|H| + b`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> Self {
        let (n, m) = (g.order(), h.order());
        let t = (0..n * m)
            .map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        GroupTable::new(t).expect("direct product")
    }

    /// The permutation group generated by `gens`, identity first, in breadth-first order.
    /// Composition is `(pq)(i) = p(q(i))`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Self {
        let deg = gens[0].len();
        let compose = |p: &[usize], q: &[usize]| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        let mut elems: Vec<Vec<usize>> = vec![(0..deg).collect()];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let c = compose(&elems[i], g);
                if !elems.contains(&c) {
                    elems.push(c);
                }
            }
            i += 1;
        }
        let pos = |p: &Vec<usize>| elems.iter().position(|e| e == p).expect("closed");
        let t = elems
            .iter()
            .map(|a| elems.iter().map(|b| pos(&compose(a, b))).collect())
            .collect();
        GroupTable::new(t).expect("permutation group")
    }

    /// Quaternion group, `±1, ±i, ±j, ±k` with index `4·sign + unit`.
    pub fn quaternion() -> Self {
        // unit products (sign, unit) for 1, i, j, k
        let u = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (0, x),
                (x, y) if x == y => (1, 0),
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let t = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, w) = u(x % 4, y % 4);
                        ((x / 4 + y / 4 + s) % 2) * 4 + w
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(t).expect("quaternion group")
    }

    /// Built-in groups of order at most 8, by name.
    pub fn builtin(name: &str) -> Option<Self> {
        let z = GroupTable::cyclic;
        Some(match name {
            "trivial" | "z1" => z(1),
            "z2" => z(2),
            "z3" => z(3),
            "z4" => z(4),
            "z2xz2" | "klein" => GroupTable::product(&z(2), &z(2)),
            "z5" => z(5),
            "z6" => z(6),
            "s3" => GroupTable::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]),
            "z7" => z(7),
            "z8" => z(8),
            "z4xz2" => GroupTable::product(&z(4), &z(2)),
            "z2xz2xz2" => GroupTable::product(&GroupTable::product(&z(2), &z(2)), &z(2)),
            "d4" => GroupTable::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),
            "q8" => GroupTable::quaternion(),
            _ => return None,
        })
    }

    /// Names accepted by [`GroupTable::builtin`], one per isomorphism class of order ≤ 8.
    pub fn builtin_names() -> &'static [&'static str] {
        &[
            "trivial", "z2", "z3", "z4", "z2xz2", "z5", "z6", "s3", "z7", "z8", "z4xz2", "z2xz2xz2", "d4", "q8",
        ]
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        !s.is_empty()
            && s.iter().all(|&a| a < self.order())
            && s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, self.inverse(b)))))
    }

    pub fn is_normal_subgroup(&self, s: &[usize]) -> bool {
        self.is_subgroup(s)
            && (0..self.order()).all(|g| s.iter().all(|&n| s.contains(&self.mul(self.mul(g, n), self.inverse(g)))))
    }
}
