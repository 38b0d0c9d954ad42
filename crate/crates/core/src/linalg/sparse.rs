//! Sparse vectors over ℚ, kept sorted by index with no stored zeros.

use std::fmt;

use super::Scalar;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::ONE)] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    /// Caller guarantees strictly increasing indices and nonzero values.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn first(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn last(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            if y == b.len() || (x < a.len() && a[x].0 < b[y].0) {
                out.push(a[x].clone());
                x += 1;
            } else if x == a.len() || b[y].0 < a[x].0 {
                out.push((b[y].0, c * &b[y].1));
                y += 1;
            } else {
                let s = &a[x].1 + &(c * &b[y].1);
                if !s.is_zero() {
                    out.push((a[x].0, s));
                }
                x += 1;
                y += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::ONE, other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Scalar::ONE, other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let (a, b) = (&self.entries, &other.entries);
        let (mut x, mut y) = (0, 0);
        let mut acc = Scalar::ZERO;
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&a[x].1 * &b[y].1);
                    x += 1;
                    y += 1;
                }
            }
        }
        acc
    }

    /// Reindexes every entry through `f`, which must be injective.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec { entries }
    }

    /// Keeps the entries `f` maps to `Some`, at their new indices.
    pub fn filter_map_index(&self, f: impl Fn(usize) -> Option<usize>) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> = self
            .entries
            .iter()
            .filter_map(|(i, v)| f(*i).map(|j| (j, v.clone())))
            .collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec { entries }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, v)| (i, v))).finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter.into_iter().collect())
    }
}

/// Dense scratch buffer for accumulating sparse combinations.
pub(crate) struct Accumulator {
    values: Vec<Scalar>,
    occupied: Vec<bool>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub fn new(len: usize) -> Self {
        Accumulator {
            values: vec![Scalar::ZERO; len],
            occupied: vec![false; len],
            touched: Vec::new(),
        }
    }

    pub fn add(&mut self, i: usize, v: &Scalar) {
        if !self.occupied[i] {
            self.occupied[i] = true;
            self.touched.push(i);
            self.values[i] = v.clone();
        } else {
            self.values[i] += v;
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        for (i, x) in v.iter() {
            self.add(i, &(c * x));
        }
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    /// Drains into a sparse vector and resets the buffer.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.occupied[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SparseVec::from_sorted_unchecked(entries)
    }
}
