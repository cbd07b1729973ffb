//! Discrete Bayesian networks with conditional probability tables, their
//! exact joint distributions and faithfulness classification.

mod constructions;
mod report;
mod table;

use rand::Rng;

use crate::graph::{Dag, SeparationGraph, VertexSet};
use crate::rng::seeded;
use crate::{Error, Result, Scalar};

pub use constructions::{
    dependent_binary_bn, dependent_binary_bn_traced, deterministic_relation_bn, deterministic_variable_bn,
    DEFAULT_SEARCH_BUDGET,
};
pub use report::{FaithfulnessReport, StatementDefect};
pub use table::Table;
pub(crate) use table::Odometer;

/// Default grid resolution for simplex sampling.
pub const DEFAULT_RESOLUTION: u64 = 1 << 20;

/// Conditional probability table of one vertex. Row `r` holds the
/// distribution of the vertex for the `r`-th parent configuration, counted
/// row-major over `parents` (first parent most significant).
#[derive(Debug, Clone, PartialEq)]
pub struct Cpt<T> {
    pub parents: Vec<usize>,
    pub rows: Vec<Vec<T>>,
}

/// Bayesian network over a DAG with finite state spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteNetwork<T> {
    graph: Dag,
    cards: Vec<usize>,
    cpts: Vec<Cpt<T>>,
}

impl<T: Scalar> DiscreteNetwork<T> {
    /// Validates cardinalities, table shapes, non-negativity and exact row sums.
    pub fn new(graph: Dag, cards: Vec<usize>, cpts: Vec<Cpt<T>>) -> Result<Self> {
        let n = graph.vertex_count();
        if cards.len() != n || cpts.len() != n {
            return Err(Error::InvalidModel("one cardinality and one table per vertex is required".into()));
        }
        for (v, &k) in cards.iter().enumerate() {
            if k < 2 {
                return Err(Error::InvalidModel(format!("vertex `{}` has cardinality {k} < 2", graph.label(v))));
            }
        }
        for (v, cpt) in cpts.iter().enumerate() {
            let name = graph.label(v);
            let declared: VertexSet = cpt.parents.iter().copied().collect();
            if declared != graph.parents(v) || declared.len() != cpt.parents.len() {
                return Err(Error::InvalidModel(format!("table of `{name}` lists parents that differ from the graph")));
            }
            let configs: usize = cpt.parents.iter().map(|&p| cards[p]).product();
            if cpt.rows.len() != configs {
                return Err(Error::InvalidModel(format!(
                    "table of `{name}` has {} rows, expected {configs}",
                    cpt.rows.len()
                )));
            }
            for (r, row) in cpt.rows.iter().enumerate() {
                if row.len() != cards[v] {
                    return Err(Error::InvalidModel(format!(
                        "row {r} of `{name}` has {} entries, expected {}",
                        row.len(),
                        cards[v]
                    )));
                }
                if row.iter().any(|p| p.is_negative()) {
                    return Err(Error::InvalidModel(format!("row {r} of `{name}` has a negative entry")));
                }
                if !crate::scalar::sum(row).approx_eq(&T::one()) {
                    return Err(Error::InvalidModel(format!("row {r} of `{name}` does not sum to 1")));
                }
            }
        }
        Ok(DiscreteNetwork { graph, cards, cpts })
    }

    pub fn graph(&self) -> &Dag {
        &self.graph
    }

    pub fn cards(&self) -> &[usize] {
        &self.cards
    }

    pub fn cpts(&self) -> &[Cpt<T>] {
        &self.cpts
    }

    pub fn cpt(&self, v: usize) -> &Cpt<T> {
        &self.cpts[v]
    }

    /// Row index of `v`'s table for a full configuration of the network.
    fn row_index(&self, v: usize, states: &[usize]) -> usize {
        self.cpts[v]
            .parents
            .iter()
            .fold(0, |acc, &p| acc * self.cards[p] + states[p])
    }

    /// Probability of one full configuration (states in declaration order).
    pub fn probability(&self, states: &[usize]) -> T {
        (0..self.cards.len()).fold(T::one(), |acc, v| {
            acc * self.cpts[v].rows[self.row_index(v, states)][states[v]].clone()
        })
    }

    /// Joint distribution over all vertices in declaration order: the
    /// product of the conditional tables.
    pub fn joint(&self) -> Table<T> {
        let mut probs = Vec::with_capacity(self.cards.iter().product());
        let mut odo = Odometer::new(&self.cards);
        while let Some(states) = odo.next_state() {
            probs.push(self.probability(states));
        }
        Table::new(
            (0..self.cards.len()).collect(),
            self.graph.labels().to_vec(),
            self.cards.clone(),
            probs,
        )
        .expect("joint has the shape of the state space")
    }

    /// Re-expresses the network over a DAG on the same vertices whose parent
    /// sets contain the current ones; tables ignore the added parents.
    pub fn embed(&self, supergraph: &Dag) -> Result<Self> {
        if supergraph.labels() != self.graph.labels() {
            return Err(Error::InvalidArgument("graphs have different vertices".into()));
        }
        let mut cpts = Vec::with_capacity(self.cpts.len());
        for v in 0..self.cards.len() {
            let parents: Vec<usize> = supergraph.parents(v).iter().collect();
            if !self.graph.parents(v).is_subset(supergraph.parents(v)) {
                return Err(Error::InvalidArgument(format!(
                    "parents of `{}` are not a subset of the new parents",
                    self.graph.label(v)
                )));
            }
            let parent_cards: Vec<usize> = parents.iter().map(|&p| self.cards[p]).collect();
            let mut rows = Vec::new();
            let mut odo = Odometer::new(&parent_cards);
            let mut states = vec![0; self.cards.len()];
            while let Some(config) = odo.next_state() {
                for (&p, &s) in parents.iter().zip(config) {
                    states[p] = s;
                }
                rows.push(self.cpts[v].rows[self.row_index(v, &states)].clone());
            }
            cpts.push(Cpt { parents, rows });
        }
        DiscreteNetwork::new(supergraph.clone(), self.cards.clone(), cpts)
    }

    /// Same graph and cardinalities with every table row replaced by `f(vertex, row index, row)`.
    pub fn map_rows(&self, mut f: impl FnMut(usize, usize, &[T]) -> Vec<T>) -> Result<Self> {
        let cpts = self
            .cpts
            .iter()
            .enumerate()
            .map(|(v, cpt)| Cpt {
                parents: cpt.parents.clone(),
                rows: cpt.rows.iter().enumerate().map(|(r, row)| f(v, r, row)).collect(),
            })
            .collect();
        DiscreteNetwork::new(self.graph.clone(), self.cards.clone(), cpts)
    }

    /// Checks every singleton statement of the graph against the exact joint.
    pub fn check_faithful(&self) -> Result<FaithfulnessReport<T>> {
        FaithfulnessReport::for_table(&self.graph, &self.joint())
    }
}

/// Draws a network with every table row sampled as integer weights uniform
/// in `1..=resolution`, normalized. Entries are strictly positive.
pub fn sample_parameters<T: Scalar>(graph: &Dag, cards: &[usize], seed: u64, resolution: u64) -> Result<DiscreteNetwork<T>> {
    if resolution < 2 {
        return Err(Error::InvalidArgument("resolution must be at least 2".into()));
    }
    if cards.len() != graph.vertex_count() {
        return Err(Error::InvalidArgument("one cardinality per vertex is required".into()));
    }
    let mut rng = seeded(seed);
    let mut cpts = Vec::with_capacity(cards.len());
    for v in 0..cards.len() {
        let parents: Vec<usize> = graph.parents(v).iter().collect();
        let configs: usize = parents.iter().map(|&p| cards[p]).product();
        let rows = (0..configs)
            .map(|_| {
                let weights: Vec<i64> = (0..cards[v]).map(|_| rng.gen_range(1..=resolution as i64)).collect();
                let total: i64 = weights.iter().sum();
                weights.into_iter().map(|w| T::from_ratio(w, total)).collect()
            })
            .collect();
        cpts.push(Cpt { parents, rows });
    }
    DiscreteNetwork::new(graph.clone(), cards.to_vec(), cpts)
}
