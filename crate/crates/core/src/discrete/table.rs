//! Probability tables over finite product state spaces.

use crate::graph::VertexSet;
use crate::{Error, Result, Scalar};

/// Probability table over the product of the state spaces of `scope`.
///
/// Cells are stored row-major: the last scope variable varies fastest.
/// Scope entries are vertex indices of the network the table came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Table<T> {
    scope: Vec<usize>,
    names: Vec<String>,
    cards: Vec<usize>,
    probs: Vec<T>,
}

/// Iterates all multi-indices of a product space, last coordinate fastest.
pub(crate) struct Odometer {
    cards: Vec<usize>,
    state: Vec<usize>,
    started: bool,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(cards: &[usize]) -> Self {
        Odometer {
            cards: cards.to_vec(),
            state: vec![0; cards.len()],
            started: false,
            done: cards.contains(&0),
        }
    }

    /// Advances and returns the next multi-index.
    pub(crate) fn next_state(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.state);
        }
        for i in (0..self.cards.len()).rev() {
            self.state[i] += 1;
            if self.state[i] < self.cards[i] {
                return Some(&self.state);
            }
            self.state[i] = 0;
        }
        self.done = true;
        None
    }
}

fn strides(cards: &[usize]) -> Vec<usize> {
    let mut s = vec![1; cards.len()];
    for i in (0..cards.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * cards[i + 1];
    }
    s
}

impl<T: Scalar> Table<T> {
    /// Builds a table, checking shape and non-negativity. Normalization is
    /// not enforced here; see [`Table::is_normalized`].
    pub fn new(scope: Vec<usize>, names: Vec<String>, cards: Vec<usize>, probs: Vec<T>) -> Result<Self> {
        if scope.len() != cards.len() || scope.len() != names.len() {
            return Err(Error::InvalidArgument("scope, names and cardinalities differ in length".into()));
        }
        let size: usize = cards.iter().product();
        if probs.len() != size {
            return Err(Error::InvalidArgument(format!(
                "table has {} cells, state space has {size}",
                probs.len()
            )));
        }
        if probs.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidArgument("negative probability".into()));
        }
        Ok(Table { scope, names, cards, probs })
    }

    pub fn scope(&self) -> &[usize] {
        &self.scope
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cards(&self) -> &[usize] {
        &self.cards
    }

    pub fn probabilities(&self) -> &[T] {
        &self.probs
    }

    pub fn scope_set(&self) -> VertexSet {
        self.scope.iter().copied().collect()
    }

    pub fn total(&self) -> T {
        crate::scalar::sum(&self.probs)
    }

    pub fn is_normalized(&self) -> bool {
        self.total().approx_eq(&T::one())
    }

    /// Probability of one cell, given the states of the scope variables in order.
    pub fn get(&self, states: &[usize]) -> T {
        let idx: usize = states.iter().zip(strides(&self.cards)).map(|(s, st)| s * st).sum();
        self.probs[idx].clone()
    }

    /// Same cells with the scope indices renamed (e.g. into a projected graph).
    pub fn with_scope(mut self, scope: Vec<usize>) -> Result<Self> {
        if scope.len() != self.scope.len() {
            return Err(Error::InvalidArgument("new scope has the wrong length".into()));
        }
        self.scope = scope;
        Ok(self)
    }

    /// For each scope position, the stride of that variable inside `sub`
    /// (zero when `sub` does not contain it).
    fn strides_into(&self, sub: &Table<T>) -> Vec<usize> {
        let sub_strides = strides(&sub.cards);
        self.scope
            .iter()
            .map(|v| sub.scope.iter().position(|w| w == v).map_or(0, |i| sub_strides[i]))
            .collect()
    }

    /// Sums out every scope variable not in `keep`.
    pub fn marginal(&self, keep: VertexSet) -> Result<Table<T>> {
        if !keep.is_subset(self.scope_set()) {
            return Err(Error::InvalidArgument("marginal set is not contained in the table scope".into()));
        }
        let positions: Vec<usize> = (0..self.scope.len()).filter(|&i| keep.contains(self.scope[i])).collect();
        let mut out = Table {
            scope: positions.iter().map(|&i| self.scope[i]).collect(),
            names: positions.iter().map(|&i| self.names[i].clone()).collect(),
            cards: positions.iter().map(|&i| self.cards[i]).collect(),
            probs: Vec::new(),
        };
        out.probs = vec![T::zero(); out.cards.iter().product()];
        let map = self.strides_into(&out);
        let mut odo = Odometer::new(&self.cards);
        let mut cell = 0;
        while let Some(state) = odo.next_state() {
            let j: usize = state.iter().zip(&map).map(|(s, m)| s * m).sum();
            out.probs[j] = out.probs[j].clone() + self.probs[cell].clone();
            cell += 1;
        }
        Ok(out)
    }

    /// Exact conditional-independence defect
    /// `max |p(a,b,c) p(c) - p(a,c) p(b,c)|` over all cells; zero exactly
    /// when `X_a ⊥ X_b | X_c`.
    pub fn ci_defect(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<T> {
        self.defect_cells(a, b, c).map(|cells| {
            cells
                .into_iter()
                .fold(T::zero(), |acc, (_, value)| acc.max_of(value.abs()))
        })
    }

    /// Signed defect per cell of the `a ∪ b ∪ c` marginal, in that marginal's
    /// cell order.
    pub fn defect_cells(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Vec<(Vec<usize>, T)>> {
        if !a.is_disjoint(b) || !a.is_disjoint(c) || !b.is_disjoint(c) {
            return Err(Error::InvalidArgument("conditional-independence sets must be disjoint".into()));
        }
        let abc = self.marginal(a.union(b).union(c))?;
        let ac = abc.marginal(a.union(c))?;
        let bc = abc.marginal(b.union(c))?;
        let only_c = ac.marginal(c)?;
        let (to_ac, to_bc, to_c) = (abc.strides_into(&ac), abc.strides_into(&bc), abc.strides_into(&only_c));
        let index = |state: &[usize], map: &[usize]| -> usize { state.iter().zip(map).map(|(s, m)| s * m).sum() };
        let mut out = Vec::with_capacity(abc.probs.len());
        let mut odo = Odometer::new(&abc.cards);
        let mut cell = 0;
        while let Some(state) = odo.next_state() {
            let value = abc.probs[cell].clone() * only_c.probs[index(state, &to_c)].clone()
                - ac.probs[index(state, &to_ac)].clone() * bc.probs[index(state, &to_bc)].clone();
            out.push((state.to_vec(), value));
            cell += 1;
        }
        Ok(out)
    }

    pub fn is_ci(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<bool> {
        Ok(self.ci_defect(a, b, c)?.is_zero())
    }

    /// Dependence of a variable on itself given `c`:
    /// `max |p(x,x',c) p(c) - p(x,c) p(x',c)|`; zero iff `X_a` is a function of `X_c`.
    pub fn self_defect(&self, a: usize, c: VertexSet) -> Result<T> {
        if c.contains(a) {
            return Err(Error::InvalidArgument("conditioning set contains the query vertex".into()));
        }
        let ac = self.marginal(c.with(a))?;
        let only_c = ac.marginal(c)?;
        let pos = ac.scope.iter().position(|&v| v == a).expect("a in scope");
        let to_c = ac.strides_into(&only_c);
        let ac_strides = strides(&ac.cards);
        let mut worst = T::zero();
        let mut odo = Odometer::new(&ac.cards);
        let mut cell = 0;
        while let Some(state) = odo.next_state() {
            let pc = only_c.probs[state.iter().zip(&to_c).map(|(s, m)| s * m).sum::<usize>()].clone();
            let base = cell - state[pos] * ac_strides[pos];
            for other in 0..ac.cards[pos] {
                let joint = if other == state[pos] { ac.probs[cell].clone() } else { T::zero() };
                let value = joint * pc.clone() - ac.probs[cell].clone() * ac.probs[base + other * ac_strides[pos]].clone();
                worst = worst.max_of(value.abs());
            }
            cell += 1;
        }
        Ok(worst)
    }

    /// Total-variation distance: half the L1 distance between the cells.
    pub fn tv_distance(&self, other: &Table<T>) -> Result<T> {
        self.check_same_space(other)?;
        let l1 = self
            .probs
            .iter()
            .zip(&other.probs)
            .fold(T::zero(), |acc, (p, q)| acc + (p.clone() - q.clone()).abs());
        Ok(l1 / T::from_ratio(2, 1))
    }

    /// Cell-wise `(1 - lambda) * self + lambda * other`.
    pub fn mixture(&self, other: &Table<T>, lambda: &T) -> Result<Table<T>> {
        self.check_same_space(other)?;
        let keep = T::one() - lambda.clone();
        let probs = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| keep.clone() * p.clone() + lambda.clone() * q.clone())
            .collect();
        Ok(Table { probs, ..self.clone() })
    }

    fn check_same_space(&self, other: &Table<T>) -> Result<()> {
        if self.scope != other.scope || self.cards != other.cards {
            return Err(Error::InvalidArgument("tables have different scopes or cardinalities".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn pair(probs: [Rational; 4]) -> Table<Rational> {
        Table::new(vec![0, 1], vec!["A".into(), "B".into()], vec![2, 2], probs.to_vec()).unwrap()
    }

    fn a() -> VertexSet {
        VertexSet::singleton(0)
    }

    fn b() -> VertexSet {
        VertexSet::singleton(1)
    }

    #[test]
    fn marginals() {
        let t = pair([r(1, 2), r(0, 1), r(0, 1), r(1, 2)]);
        assert_eq!(t.marginal(t.scope_set()).unwrap(), t);
        let m = t.marginal(a()).unwrap();
        assert_eq!(m.probabilities(), &[r(1, 2), r(1, 2)]);
        let empty = t.marginal(VertexSet::EMPTY).unwrap();
        assert_eq!(empty.probabilities(), &[r(1, 1)]);
        assert!(t.marginal(VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn defects() {
        let uniform = pair([r(1, 4), r(1, 4), r(1, 4), r(1, 4)]);
        assert_eq!(uniform.ci_defect(a(), b(), VertexSet::EMPTY).unwrap(), r(0, 1));
        assert!(uniform.is_ci(a(), b(), VertexSet::EMPTY).unwrap());
        let correlated = pair([r(1, 2), r(0, 1), r(0, 1), r(1, 2)]);
        assert_eq!(correlated.ci_defect(a(), b(), VertexSet::EMPTY).unwrap(), r(1, 4));
        assert!(!correlated.is_ci(a(), b(), VertexSet::EMPTY).unwrap());
        assert!(correlated.ci_defect(a(), a(), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn self_defect_detects_randomness() {
        let correlated = pair([r(1, 2), r(0, 1), r(0, 1), r(1, 2)]);
        // A given B is deterministic; A alone is a fair coin.
        assert_eq!(correlated.self_defect(0, b()).unwrap(), r(0, 1));
        assert_eq!(correlated.self_defect(0, VertexSet::EMPTY).unwrap(), r(1, 4));
    }

    #[test]
    fn total_variation() {
        let p0 = pair([r(1, 2), r(0, 1), r(0, 1), r(1, 2)]);
        let p1 = pair([r(0, 1), r(1, 2), r(1, 2), r(0, 1)]);
        let half = pair([r(1, 4), r(1, 4), r(1, 4), r(1, 4)]);
        assert_eq!(p0.tv_distance(&p0).unwrap(), r(0, 1));
        assert_eq!(p0.tv_distance(&p1).unwrap(), r(1, 1));
        assert_eq!(p0.tv_distance(&half).unwrap(), r(1, 2));
        assert_eq!(p0.mixture(&p1, &r(1, 2)).unwrap(), half);
    }

    #[test]
    fn float_tables_work_too() {
        let t: Table<f64> = Table::new(vec![0, 1], vec!["A".into(), "B".into()], vec![2, 2], vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        assert!((t.ci_defect(a(), b(), VertexSet::EMPTY).unwrap() - 0.25).abs() < 1e-12);
        assert!(t.is_normalized());
    }
}
