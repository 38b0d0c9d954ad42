//! Naive dense Hochschild and cyclic cohomology of a finite-dimensional
//! algebra over ℚ with coefficients in its dual. Shares nothing with the
//! engine: cochains are dense vectors of `BigRational` indexed by basis
//! tuples, ranks come from textbook Gaussian elimination.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Structure constants: `product[i][j][k]` is the coefficient of `e_k` in `e_i e_j`.
pub struct DenseAlgebra {
    pub dim: usize,
    pub product: Vec<Vec<Vec<Q>>>,
}

impl DenseAlgebra {
    pub fn new(dim: usize, product: impl Fn(usize, usize) -> Vec<(usize, i64)>) -> Self {
        let product = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut v = vec![Q::zero(); dim];
                        for (k, c) in product(i, j) {
                            v[k] += q(c);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        DenseAlgebra { dim, product }
    }

    pub fn unit() -> Self {
        DenseAlgebra::new(1, |_, _| vec![(0, 1)])
    }

    /// `k[x]/(x^n − 1)` on the basis `1, x, …, x^{n−1}`.
    pub fn cyclic_group(n: usize) -> Self {
        DenseAlgebra::new(n, move |i, j| vec![((i + j) % n, 1)])
    }

    pub fn dual_numbers() -> Self {
        DenseAlgebra::new(2, |i, j| if i + j < 2 { vec![(i + j, 1)] } else { vec![] })
    }

    /// `n × n` matrices on the matrix units `E_{ab}` at `a n + b`.
    pub fn matrices(n: usize) -> Self {
        DenseAlgebra::new(n * n, move |x, y| {
            let (a, b, c, d) = (x / n, x % n, y / n, y % n);
            if b == c {
                vec![(a * n + d, 1)]
            } else {
                vec![]
            }
        })
    }
}

fn tuple(mut idx: usize, len: usize, d: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    t
}

fn index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

/// Value of `phi` on a tensor whose one slot is a linear combination.
fn eval_with(phi: &[Q], prefix: &[usize], combo: &[Q], suffix: &[usize], d: usize) -> Q {
    let mut total = Q::zero();
    for (k, c) in combo.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = prefix.to_vec();
        t.push(k);
        t.extend_from_slice(suffix);
        total += c * &phi[index(&t, d)];
    }
    total
}

/// `b: C^n → C^{n+1}` as a dense `d^{n+2} × d^{n+1}` matrix.
pub fn hochschild_b(a: &DenseAlgebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let (src, dst) = (d.pow(n as u32 + 1), d.pow(n as u32 + 2));
    let mut m = vec![vec![Q::zero(); src]; dst];
    for col in 0..src {
        let mut phi = vec![Q::zero(); src];
        phi[col] = Q::one();
        for (row, out) in m.iter_mut().enumerate() {
            let x = tuple(row, n + 2, d);
            let mut value = Q::zero();
            for i in 0..=n {
                let term = eval_with(&phi, &x[..i], &a.product[x[i]][x[i + 1]], &x[i + 2..], d);
                if i % 2 == 0 {
                    value += term;
                } else {
                    value -= term;
                }
            }
            let last = eval_with(&phi, &[], &a.product[x[n + 1]][x[0]], &x[1..=n], d);
            if n.is_multiple_of(2) {
                value -= last;
            } else {
                value += last;
            }
            out[col] = value;
        }
    }
    m
}

/// `λ φ(a_0, …, a_n) = (−1)^n φ(a_n, a_0, …, a_{n−1})`.
pub fn lambda(a: &DenseAlgebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let size = d.pow(n as u32 + 1);
    let sign = if n.is_multiple_of(2) { q(1) } else { q(-1) };
    let mut m = vec![vec![Q::zero(); size]; size];
    for (row, out) in m.iter_mut().enumerate() {
        let x = tuple(row, n + 1, d);
        let mut rotated = vec![x[n]];
        rotated.extend_from_slice(&x[..n]);
        out[index(&rotated, d)] = sign.clone();
    }
    m
}

/// Row-reduces in place; returns the pivot columns.
fn eliminate(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut m = m.to_vec();
    eliminate(&mut m).len()
}

/// Kernel basis as columns.
pub fn kernel(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut r = m.to_vec();
    let pivots = eliminate(&mut r);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); cols];
            v[free] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][free].clone();
            }
            v
        })
        .collect()
}

fn apply(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Rank of `m` restricted to the span of `basis`.
fn restricted_rank(m: &[Vec<Q>], basis: &[Vec<Q>]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let images: Vec<Vec<Q>> = basis.iter().map(|v| apply(m, v)).collect();
    rank(&images)
}

/// `(HH^0..HH^{n_max−1}, HC^0..HC^{n_max−1})`.
pub fn cohomology(a: &DenseAlgebra, n_max: usize) -> (Vec<usize>, Vec<usize>) {
    let d = a.dim;
    let b: Vec<Vec<Vec<Q>>> = (0..n_max).map(|n| hochschild_b(a, n)).collect();
    for n in 1..n_max {
        let composite: Vec<Vec<Q>> = b[n].iter().map(|row| {
            (0..d.pow(n as u32)).map(|c| row.iter().zip(&b[n - 1]).map(|(x, r)| x * &r[c]).sum()).collect()
        }).collect();
        assert!(composite.iter().flatten().all(Zero::is_zero), "oracle b² ≠ 0 at degree {n}");
    }
    let ranks: Vec<usize> = b.iter().map(|m| rank(m)).collect();
    let hh = (0..n_max)
        .map(|n| d.pow(n as u32 + 1) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect();

    let invariants: Vec<Vec<Vec<Q>>> = (0..n_max)
        .map(|n| {
            let size = d.pow(n as u32 + 1);
            let mut fix = lambda(a, n);
            for (i, row) in fix.iter_mut().enumerate() {
                row[i] -= Q::one();
            }
            kernel(&fix, size)
        })
        .collect();
    let lranks: Vec<usize> = (0..n_max).map(|n| restricted_rank(&b[n], &invariants[n])).collect();
    let hc = (0..n_max)
        .map(|n| invariants[n].len() - lranks[n] - if n > 0 { lranks[n - 1] } else { 0 })
        .collect();
    (hh, hc)
}
