//! Finite groups given by multiplication tables.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("no inverse for {0}")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group on the elements `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FinGroup {
    /// Validates a multiplication table, `table[g][h] = g·h`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), order: n });
            }
            if let Some(col) = r.iter().position(|&v| v >= n) {
                return Err(GroupError::OutOfRange { row, col, value: r[col] });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or(GroupError::NoInverse(g))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FinGroup { table, identity, inverse })
    }

    pub fn trivial() -> Self {
        FinGroup { table: vec![vec![0]], identity: 0, inverse: vec![0] }
    }

    /// `ℤ/n` with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let inverse = (0..n).map(|i| (n - i) % n).collect();
        Ok(FinGroup { table, identity: 0, inverse })
    }

    /// The symmetric group on `n` letters; permutations are listed in
    /// lexicographic order, so element 0 is the identity, and `σ·τ = σ∘τ`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        FinGroup::from_table(table)
    }

    /// Direct product; `(g, h)` is element `g * |H| + h`.
    pub fn product(&self, other: &FinGroup) -> FinGroup {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| (0..n).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect())
            .collect();
        let inverse = (0..n).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        FinGroup { table, identity: self.identity * m + other.identity, inverse }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `h g h⁻¹`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.elements().all(|h| self.mul(h, x) == self.mul(x, h))
    }

    /// A generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        for g in self.elements() {
            if inside[g] {
                continue;
            }
            gens.push(g);
            // close up under right multiplication by all generators
            let mut frontier: Vec<usize> = self.elements().filter(|&x| inside[x]).collect();
            while let Some(x) = frontier.pop() {
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !inside[y] {
                        inside[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }
}

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinGroup(order {})", self.order())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
