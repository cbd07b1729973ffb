//! Linear Gaussian Bayesian networks with exact rational parameters.
//!
//! Each vertex is `X_v = sum_p beta_{v,p} X_p + noise_v` with zero-mean noise
//! of variance `sigma_v^2 > 0`. Conditional independence is read off the
//! conditional covariance (Schur complement), which vanishes exactly when the
//! Gaussian CI holds.

use rand::Rng;

use crate::discrete::{FaithfulnessReport, StatementDefect};
use crate::graph::{enumerate_statements, Dag, SeparationGraph, VertexSet};
use crate::rng::seeded;
use crate::{Error, Result, Scalar};

/// Linear Gaussian network; `coefficients[v]` maps each parent of `v` to its weight.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianNetwork<T> {
    graph: Dag,
    coefficients: Vec<Vec<(usize, T)>>,
    variances: Vec<T>,
}

impl<T: Scalar> GaussianNetwork<T> {
    pub fn new(graph: Dag, coefficients: Vec<Vec<(usize, T)>>, variances: Vec<T>) -> Result<Self> {
        let n = graph.vertex_count();
        if coefficients.len() != n || variances.len() != n {
            return Err(Error::InvalidModel("one coefficient map and one variance per vertex is required".into()));
        }
        let mut coefficients = coefficients;
        for (v, coef) in coefficients.iter_mut().enumerate() {
            coef.sort_by_key(|(p, _)| *p);
            let keys: VertexSet = coef.iter().map(|(p, _)| *p).collect();
            if keys != graph.parents(v) || keys.len() != coef.len() {
                return Err(Error::InvalidModel(format!(
                    "coefficients of `{}` must be keyed by exactly its parents",
                    graph.label(v)
                )));
            }
            if !variances[v].is_positive() {
                return Err(Error::InvalidModel(format!("variance of `{}` is not positive", graph.label(v))));
            }
        }
        Ok(GaussianNetwork { graph, coefficients, variances })
    }

    pub fn graph(&self) -> &Dag {
        &self.graph
    }

    pub fn coefficients(&self, v: usize) -> &[(usize, T)] {
        &self.coefficients[v]
    }

    pub fn coefficient(&self, child: usize, parent: usize) -> Option<&T> {
        self.coefficients[child].iter().find(|(p, _)| *p == parent).map(|(_, b)| b)
    }

    pub fn variances(&self) -> &[T] {
        &self.variances
    }

    /// Same structure with new weights and variances; re-validated.
    pub fn with_parameters(&self, coefficients: Vec<Vec<(usize, T)>>, variances: Vec<T>) -> Result<Self> {
        GaussianNetwork::new(self.graph.clone(), coefficients, variances)
    }

    /// Covariance by the structural-equation recursion along a topological
    /// order: `S[v][u] = sum_p beta_vp S[p][u]` for earlier `u`, and
    /// `S[v][v] = sigma_v^2 + sum_p beta_vp S[p][v]`.
    pub fn covariance(&self) -> Covariance<T> {
        let n = self.graph.vertex_count();
        let mut s = vec![vec![T::zero(); n]; n];
        let order = self.graph.topological_order();
        for (k, &v) in order.iter().enumerate() {
            for &u in &order[..k] {
                let value = self.coefficients[v]
                    .iter()
                    .fold(T::zero(), |acc, (p, beta)| acc + beta.clone() * s[*p][u].clone());
                s[v][u] = value.clone();
                s[u][v] = value;
            }
            s[v][v] = self.coefficients[v]
                .iter()
                .fold(self.variances[v].clone(), |acc, (p, beta)| acc + beta.clone() * s[*p][v].clone());
        }
        Covariance {
            scope: (0..n).collect(),
            names: self.graph.labels().to_vec(),
            entries: s,
        }
    }

    /// Largest absolute entry of the conditional covariance of `a` and `b` given `c`.
    pub fn ci_defect(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<T> {
        self.covariance().ci_defect(a, b, c)
    }

    /// Faithfulness report of the network against its own graph.
    pub fn check_faithful(&self) -> Result<FaithfulnessReport<T>> {
        self.covariance().report_against(&self.graph)
    }
}

/// Symmetric covariance matrix over `scope` (vertex indices of a graph).
#[derive(Debug, Clone, PartialEq)]
pub struct Covariance<T> {
    scope: Vec<usize>,
    names: Vec<String>,
    entries: Vec<Vec<T>>,
}

impl<T: Scalar> Covariance<T> {
    pub fn scope(&self) -> &[usize] {
        &self.scope
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    fn position(&self, v: usize) -> Result<usize> {
        self.scope
            .iter()
            .position(|&w| w == v)
            .ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is not in the covariance scope")))
    }

    fn positions(&self, s: VertexSet) -> Result<Vec<usize>> {
        s.iter().map(|v| self.position(v)).collect()
    }

    /// Entry for two vertices (by graph index).
    pub fn get(&self, u: usize, v: usize) -> Result<T> {
        Ok(self.entries[self.position(u)?][self.position(v)?].clone())
    }

    pub fn block(&self, rows: VertexSet, cols: VertexSet) -> Result<Vec<Vec<T>>> {
        let (r, c) = (self.positions(rows)?, self.positions(cols)?);
        Ok(r.iter().map(|&i| c.iter().map(|&j| self.entries[i][j].clone()).collect()).collect())
    }

    /// Restriction to `keep`, optionally relabelled with new scope indices.
    pub fn restrict(&self, keep: VertexSet) -> Result<Covariance<T>> {
        let pos = self.positions(keep)?;
        Ok(Covariance {
            scope: pos.iter().map(|&i| self.scope[i]).collect(),
            names: pos.iter().map(|&i| self.names[i].clone()).collect(),
            entries: pos.iter().map(|&i| pos.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        })
    }

    pub fn with_scope(mut self, scope: Vec<usize>) -> Result<Self> {
        if scope.len() != self.scope.len() {
            return Err(Error::InvalidArgument("new scope has the wrong length".into()));
        }
        self.scope = scope;
        Ok(self)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Sylvester's criterion, evaluated through elimination pivots: every
    /// leading principal minor is positive iff every pivot is.
    pub fn is_positive_definite(&self) -> bool {
        let mut m = self.entries.clone();
        let n = m.len();
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in k + 1..n {
                let factor = m[i][k].clone() / m[k][k].clone();
                for j in k..n {
                    let delta = factor.clone() * m[k][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        true
    }

    /// Schur complement `S_ab - S_ac S_cc^{-1} S_cb`.
    pub fn conditional_covariance(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Vec<Vec<T>>> {
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::InvalidArgument("conditional covariance sets must be disjoint".into()));
        }
        let s_ab = self.block(a, b)?;
        if c.is_empty() {
            return Ok(s_ab);
        }
        let s_ac = self.block(a, c)?;
        let x = solve(self.block(c, c)?, self.block(c, b)?)?;
        Ok(s_ab
            .into_iter()
            .zip(&s_ac)
            .map(|(row, ac)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let correction = ac
                            .iter()
                            .zip(&x)
                            .fold(T::zero(), |acc, (l, xr)| acc + l.clone() * xr[j].clone());
                        v - correction
                    })
                    .collect()
            })
            .collect())
    }

    pub fn ci_defect(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<T> {
        Ok(self
            .conditional_covariance(a, b, c)?
            .into_iter()
            .flatten()
            .fold(T::zero(), |acc, v| acc.max_of(v.abs())))
    }

    /// Evaluates every enumerated statement of `graph`; the scope must use
    /// `graph`'s vertex indices.
    pub fn report_against<G: SeparationGraph + ?Sized>(&self, graph: &G) -> Result<FaithfulnessReport<T>> {
        let statements = enumerate_statements(graph)?
            .into_iter()
            .map(|s| {
                let defect = self.ci_defect(VertexSet::singleton(s.a), VertexSet::singleton(s.b), s.c)?;
                Ok(StatementDefect { statement: s, defect })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FaithfulnessReport::from_defects(statements))
    }
}

/// Solves `m x = rhs` by Gaussian elimination, choosing the largest
/// remaining pivot in each column (exact over rationals).
pub fn solve<T: Scalar>(mut m: Vec<Vec<T>>, mut rhs: Vec<Vec<T>>) -> Result<Vec<Vec<T>>> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("linear system has mismatched dimensions".into()));
    }
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .max_by(|&i, &j| m[i][k].abs().partial_cmp(&m[j][k].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .ok_or_else(|| Error::Singular(format!("no pivot in column {k}")))?;
        m.swap(k, pivot);
        rhs.swap(k, pivot);
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone() / m[k][k].clone();
            for j in k..n {
                let delta = factor.clone() * m[k][j].clone();
                m[i][j] = m[i][j].clone() - delta;
            }
            for j in 0..rhs[i].len() {
                let delta = factor.clone() * rhs[k][j].clone();
                rhs[i][j] = rhs[i][j].clone() - delta;
            }
        }
    }
    for (row, diag) in rhs.iter_mut().zip(m.iter().enumerate().map(|(k, r)| r[k].clone())) {
        for x in row.iter_mut() {
            *x = x.clone() / diag.clone();
        }
    }
    Ok(rhs)
}

/// `A -> B -> C`, `A -> C` with `beta_AC = -beta_AB * beta_BC`, so the two
/// directed paths from `A` to `C` cancel and `Cov(A, C) = 0`.
pub fn cancelling_paths_bn<T: Scalar>(beta_ab: T, beta_bc: T, variances: [T; 3]) -> Result<GaussianNetwork<T>> {
    let graph = Dag::new(&["A", "B", "C"], &[("A", "B"), ("B", "C"), ("A", "C")])?;
    let beta_ac = -(beta_ab.clone() * beta_bc.clone());
    GaussianNetwork::new(
        graph,
        vec![vec![], vec![(0, beta_ab)], vec![(0, beta_ac), (1, beta_bc)]],
        variances.to_vec(),
    )
}

/// Draws weights `k/M` with `k` uniform in `-2M..=2M` minus zero and variances
/// `k/M` with `k` uniform in `M/2..=2M`.
pub fn sample_parameters_gaussian<T: Scalar>(graph: &Dag, seed: u64, resolution: u64) -> Result<GaussianNetwork<T>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument("resolution must be at least 2".into()));
    }
    let m = resolution as i64;
    let mut rng = seeded(seed);
    let mut coefficients = Vec::with_capacity(graph.vertex_count());
    let mut variances = Vec::with_capacity(graph.vertex_count());
    for v in 0..graph.vertex_count() {
        let coef = graph
            .parents(v)
            .iter()
            .map(|p| {
                let mut k = rng.gen_range(-2 * m..2 * m);
                if k >= 0 {
                    k += 1;
                }
                (p, T::from_ratio(k, m))
            })
            .collect();
        coefficients.push(coef);
        variances.push(T::from_ratio(rng.gen_range(m / 2..=2 * m), m));
    }
    GaussianNetwork::new(graph.clone(), coefficients, variances)
}
