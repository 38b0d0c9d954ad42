//! Sparse exact elimination: rank, reduced row echelon form, kernels.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::sparse::Accumulator;
use super::{Matrix, Scalar, SparseVec};

#[derive(Clone, Copy)]
enum PivotRule {
    /// smallest index; rows are processed in pivot-index order
    Leading,
    /// index occurring in the fewest input vectors; rows are processed in insertion order
    Sparsest,
}

/// Incremental semi-echelon basis: each stored row is 1 at its pivot and
/// zero at the pivots of all rows stored before it.
struct Eliminator {
    rule: PivotRule,
    slot_of: Vec<Option<usize>>,
    rows: Vec<(usize, SparseVec)>,
    weight: Vec<usize>,
    acc: Accumulator,
    queued: Vec<bool>,
}

impl Eliminator {
    fn new(len: usize, rule: PivotRule, weight: Vec<usize>) -> Self {
        Eliminator {
            rule,
            slot_of: vec![None; len],
            rows: Vec::new(),
            weight,
            acc: Accumulator::new(len),
            queued: Vec::new(),
        }
    }

    fn key(&self, slot: usize) -> usize {
        match self.rule {
            PivotRule::Leading => self.rows[slot].0,
            PivotRule::Sparsest => slot,
        }
    }

    fn reduce(&mut self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        self.queued.resize(self.rows.len(), false);
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
        let mut pushed = Vec::new();
        for (i, x) in v.iter() {
            self.acc.add(i, x);
            if let Some(s) = self.slot_of[i] {
                self.queued[s] = true;
                pushed.push(s);
                heap.push(Reverse((self.key(s), s)));
            }
        }
        while let Some(Reverse((_, s))) = heap.pop() {
            let p = self.rows[s].0;
            let c = self.acc.get(p).clone();
            if c.is_zero() {
                continue;
            }
            let c = -c;
            let row = &self.rows[s].1;
            for (i, x) in row.iter() {
                self.acc.add(i, &(&c * x));
                if let Some(t) = self.slot_of[i] {
                    if !self.queued[t] {
                        self.queued[t] = true;
                        pushed.push(t);
                        heap.push(Reverse((self.key(t), t)));
                    }
                }
            }
        }
        for s in pushed {
            self.queued[s] = false;
        }
        self.acc.take()
    }

    fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let p = match self.rule {
            PivotRule::Leading => r.first().map(|(i, _)| i),
            PivotRule::Sparsest => r.indices().min_by_key(|&i| (self.weight[i], i)),
        }
        .expect("nonzero vector");
        let inv = r.get(p).recip();
        let r = if inv.is_one() { r } else { r.scale(&inv) };
        self.slot_of[p] = Some(self.rows.len());
        self.rows.push((p, r));
        true
    }
}

/// Rank of a matrix, eliminating along the shorter side.
pub fn rank(m: &Matrix) -> usize {
    let t;
    let (vectors, len) = if m.cols() <= m.rows() {
        (m.columns(), m.rows())
    } else {
        t = m.transpose();
        (t.columns(), t.rows())
    };
    rank_of_vectors(vectors, len)
}

pub fn rank_of_vectors(vectors: &[SparseVec], len: usize) -> usize {
    let mut weight = vec![0usize; len];
    for v in vectors {
        for i in v.indices() {
            weight[i] += 1;
        }
    }
    let mut e = Eliminator::new(len, PivotRule::Sparsest, weight);
    let mut r = 0;
    for v in vectors {
        if e.insert(v) {
            r += 1;
            if r == len {
                break;
            }
        }
    }
    r
}

/// Fully reduced row echelon form of the span of `vectors`: rows sorted by
/// leading index, each 1 at its leading index and zero at every other pivot.
pub fn rref(vectors: &[SparseVec], len: usize) -> Vec<SparseVec> {
    let mut e = Eliminator::new(len, PivotRule::Leading, Vec::new());
    for v in vectors {
        e.insert(v);
        if e.rows.len() == len {
            break;
        }
    }
    let mut rows = e.rows;
    rows.sort_by_key(|(p, _)| Reverse(*p));
    let mut done: Vec<(usize, SparseVec)> = Vec::with_capacity(rows.len());
    let mut done_at: Vec<Option<usize>> = vec![None; len];
    let mut acc = Accumulator::new(len);
    for (p, r) in rows {
        for (i, x) in r.iter() {
            acc.add(i, x);
        }
        for (i, x) in r.iter() {
            if let Some(k) = done_at[i] {
                acc.add_scaled(&-x, &done[k].1);
            }
        }
        done_at[p] = Some(done.len());
        done.push((p, acc.take()));
    }
    done.reverse();
    done.into_iter().map(|(_, r)| r).collect()
}

/// Kernel basis of `m` in canonical form: vector `k` is 1 at the `k`-th free
/// column, zero at the other free columns, and has that column as its last
/// nonzero index.
pub fn kernel_basis(m: &Matrix) -> Vec<SparseVec> {
    let n = m.cols();
    let rows = rref(m.transpose().columns(), n);
    let mut is_pivot = vec![false; n];
    for r in &rows {
        is_pivot[r.first().expect("nonzero row").0] = true;
    }
    let mut parts: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for r in &rows {
        let p = r.first().expect("nonzero row").0;
        for (f, x) in r.iter().skip(1) {
            parts[f].push((p, -x));
        }
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut entries = std::mem::take(&mut parts[f]);
            entries.push((f, Scalar::ONE));
            SparseVec::from_pairs(entries)
        })
        .collect()
}

/// Canonical basis of a span: each vector is 1 at its last nonzero index,
/// every other basis vector vanishes there, and vectors are sorted by that index.
pub fn span_basis(vectors: &[SparseVec], len: usize) -> Vec<SparseVec> {
    let flip = |i: usize| len - 1 - i;
    let reversed: Vec<SparseVec> = vectors.iter().map(|v| v.remap(flip)).collect();
    let mut rows: Vec<SparseVec> = rref(&reversed, len).iter().map(|r| r.remap(flip)).collect();
    rows.reverse();
    rows
}
