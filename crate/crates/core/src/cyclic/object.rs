//! Precocyclic objects as explicit matrices, with an exhaustive relation check.

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;

/// Spaces `C^0..=C^N` (by dimension), cofaces `δ_i: C^n → C^{n+1}` for
/// `i = 0..=n+1` and `n < N`, cyclic operators `τ_n` for `n ≤ N`, and
/// optional codegeneracies `σ_j: C^{n+1} → C^n` for `j = 0..=n`, `n < N`.
#[derive(Clone, Debug)]
pub struct PrecocyclicObject {
    pub max_degree: usize,
    pub dims: Vec<usize>,
    pub cofaces: Vec<Vec<Matrix>>,
    pub cyclic: Vec<Matrix>,
    pub codegeneracies: Option<Vec<Vec<Matrix>>>,
}

/// One failed identity, named by its shape and indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: String,
    pub degree: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, relation: &str, degree: usize, i: usize, j: usize) {
        self.checked += 1;
        if !ok {
            self.failures.push(RelationFailure { relation: relation.to_string(), degree, i, j });
        }
    }

    pub fn merge(&mut self, other: RelationReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

impl PrecocyclicObject {
    fn delta(&self, n: usize, i: usize) -> &Matrix {
        &self.cofaces[n][i]
    }

    /// `τ_n` raised to the `n + 1`.
    fn tau_power(&self, n: usize) -> Matrix {
        let t = &self.cyclic[n];
        let mut p = t.clone();
        for _ in 0..n {
            p = t.mul(&p);
        }
        p
    }

    pub fn check(&self) -> RelationReport {
        let mut r = RelationReport::default();
        let n_max = self.max_degree;
        for n in 0..=n_max {
            r.record(self.tau_power(n).is_identity(), "tau^(n+1) = id", n, 0, 0);
        }
        for n in 0..n_max {
            for i in 1..=n + 1 {
                let ok = self.cyclic[n + 1].mul(self.delta(n, i)) == self.delta(n, i - 1).mul(&self.cyclic[n]);
                r.record(ok, "tau delta_i = delta_(i-1) tau", n, i, 0);
            }
            let ok = self.cyclic[n + 1].mul(self.delta(n, 0)) == *self.delta(n, n + 1);
            r.record(ok, "tau delta_0 = delta_(n+1)", n, 0, n + 1);
        }
        for n in 0..n_max.saturating_sub(1) {
            for j in 1..=n + 2 {
                for i in 0..j {
                    let ok = self.delta(n + 1, j).mul(self.delta(n, i)) == self.delta(n + 1, i).mul(self.delta(n, j - 1));
                    r.record(ok, "delta_j delta_i = delta_i delta_(j-1)", n, i, j);
                }
            }
        }
        if let Some(sigma) = &self.codegeneracies {
            self.check_codegeneracies(sigma, &mut r);
        }
        r
    }

    fn check_codegeneracies(&self, sigma: &[Vec<Matrix>], r: &mut RelationReport) {
        let n_max = self.max_degree;
        // σ_j δ_i on C^n, with σ_j: C^{n+1} → C^n
        for n in 0..n_max {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = sigma[n][j].mul(self.delta(n, i));
                    let ok = if i < j {
                        lhs == self.delta(n - 1, i).mul(&sigma[n - 1][j - 1])
                    } else if i == j || i == j + 1 {
                        lhs.is_identity()
                    } else {
                        lhs == self.delta(n - 1, i - 1).mul(&sigma[n - 1][j])
                    };
                    r.record(ok, "sigma_j delta_i", n, i, j);
                }
            }
        }
        // σ_j σ_i = σ_i σ_(j+1) for i ≤ j, on C^{n+2}
        for n in 0..n_max.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let ok = sigma[n][j].mul(&sigma[n + 1][i]) == sigma[n][i].mul(&sigma[n + 1][j + 1]);
                    r.record(ok, "sigma_j sigma_i = sigma_i sigma_(j+1)", n, i, j);
                }
            }
        }
        // τ_n σ_i = σ_(i-1) τ_(n+1) and τ_n σ_0 = σ_n τ_(n+1)^2
        for (n, sig) in sigma.iter().enumerate().take(n_max) {
            for i in 1..=n {
                let ok = self.cyclic[n].mul(&sig[i]) == sig[i - 1].mul(&self.cyclic[n + 1]);
                r.record(ok, "tau sigma_i = sigma_(i-1) tau", n, i, 0);
            }
            let t = &self.cyclic[n + 1];
            let ok = self.cyclic[n].mul(&sig[0]) == sig[n].mul(&t.mul(t));
            r.record(ok, "tau sigma_0 = sigma_n tau^2", n, 0, n);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `C^n = k`, all structure maps the identity.
    fn trivial_tower(n_max: usize) -> PrecocyclicObject {
        let id = Matrix::identity(1);
        PrecocyclicObject {
            max_degree: n_max,
            dims: vec![1; n_max + 1],
            cofaces: (0..n_max).map(|n| vec![id.clone(); n + 2]).collect(),
            cyclic: vec![id.clone(); n_max + 1],
            codegeneracies: Some((0..n_max).map(|n| vec![id.clone(); n + 1]).collect()),
        }
    }

    #[test]
    fn trivial_tower_passes() {
        let r = trivial_tower(4).check();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checked > 30);
    }

    #[test]
    fn zeroed_coface_is_reported() {
        let mut t = trivial_tower(3);
        t.cofaces[1][1] = Matrix::zeros(1, 1);
        let r = t.check();
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.relation == "tau delta_i = delta_(i-1) tau" && f.degree == 1));
        assert!(r.failures.iter().any(|f| f.relation.starts_with("delta_j delta_i")));
    }
}
