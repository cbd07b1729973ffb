//! Hand-built unfaithful networks and the dependent-network search.

use crate::graph::{Dag, SeparationGraph, VertexSet};
use crate::rng::sub_seed;
use crate::{Error, Result, Scalar};

use super::{sample_parameters, Cpt, DiscreteNetwork, DEFAULT_RESOLUTION};

/// Retry budget of [`dependent_binary_bn`].
pub const DEFAULT_SEARCH_BUDGET: usize = 1000;

fn unit_row<T: Scalar>(len: usize, hot: usize) -> Vec<T> {
    (0..len).map(|i| if i == hot { T::one() } else { T::zero() }).collect()
}

fn row_len<T>(rows: &[Vec<T>], what: &str) -> Result<usize> {
    rows.first()
        .map(|r| r.len())
        .ok_or_else(|| Error::InvalidArgument(format!("{what} has no rows")))
}

/// `A <- B -> C` with `B` a point mass at `atom`: every statement involving
/// `B`, and `A ⊥ C`, hold even though the graph connects them.
///
/// `a_given_b` and `c_given_b` have one row per state of `B`.
pub fn deterministic_variable_bn<T: Scalar>(
    a_given_b: Vec<Vec<T>>,
    c_given_b: Vec<Vec<T>>,
    atom: usize,
) -> Result<DiscreteNetwork<T>> {
    let card_b = a_given_b.len();
    if c_given_b.len() != card_b {
        return Err(Error::InvalidArgument("tables of A and C disagree on the states of B".into()));
    }
    if atom >= card_b {
        return Err(Error::InvalidArgument(format!("atom {atom} is not a state of B ({card_b} states)")));
    }
    let cards = vec![row_len(&a_given_b, "table of A")?, card_b, row_len(&c_given_b, "table of C")?];
    let graph = Dag::new(&["A", "B", "C"], &[("B", "A"), ("B", "C")])?;
    let cpts = vec![
        Cpt { parents: vec![1], rows: a_given_b },
        Cpt { parents: vec![], rows: vec![unit_row(card_b, atom)] },
        Cpt { parents: vec![1], rows: c_given_b },
    ];
    DiscreteNetwork::new(graph, cards, cpts)
}

/// `A <- D -> C`, `D -> B` with `B` an exact copy of `D`, so that
/// `A ⊥ C | B` holds although `B` does not block the path through `D`.
pub fn deterministic_relation_bn<T: Scalar>(
    card_b: usize,
    a_given_d: Vec<Vec<T>>,
    c_given_d: Vec<Vec<T>>,
    prior_d: Vec<T>,
) -> Result<DiscreteNetwork<T>> {
    let card_d = prior_d.len();
    if card_b != card_d {
        return Err(Error::InvalidArgument(format!(
            "B has {card_b} states but D has {card_d}; the copy relation needs equal state spaces"
        )));
    }
    if a_given_d.len() != card_d || c_given_d.len() != card_d {
        return Err(Error::InvalidArgument("tables of A and C need one row per state of D".into()));
    }
    let cards = vec![row_len(&a_given_d, "table of A")?, card_b, row_len(&c_given_d, "table of C")?, card_d];
    let graph = Dag::new(&["A", "B", "C", "D"], &[("D", "A"), ("D", "C"), ("D", "B")])?;
    let cpts = vec![
        Cpt { parents: vec![3], rows: a_given_d },
        Cpt { parents: vec![3], rows: (0..card_d).map(|d| unit_row(card_b, d)).collect() },
        Cpt { parents: vec![3], rows: c_given_d },
        Cpt { parents: vec![], rows: vec![prior_d] },
    ];
    DiscreteNetwork::new(graph, cards, cpts)
}

/// Binary network over `g` in which `X_a` and `X_b` are dependent given
/// `X_c`, found by seeded re-sampling.
pub fn dependent_binary_bn<T: Scalar>(g: &Dag, a: &str, b: &str, c: &[&str], seed: u64) -> Result<DiscreteNetwork<T>> {
    dependent_binary_bn_traced(g, a, b, c, seed, DEFAULT_SEARCH_BUDGET).map(|(bn, _)| bn)
}

/// As [`dependent_binary_bn`], also returning the number of samples drawn.
///
/// When `a == b` the result is the product of independent fair coins, in
/// which every variable depends on itself given any other variables.
pub fn dependent_binary_bn_traced<T: Scalar>(
    g: &Dag,
    a: &str,
    b: &str,
    c: &[&str],
    seed: u64,
    budget: usize,
) -> Result<(DiscreteNetwork<T>, usize)> {
    let (ai, bi, cs) = (g.index_of(a)?, g.index_of(b)?, g.set_of(c)?);
    if cs.contains(ai) || cs.contains(bi) {
        return Err(Error::InvalidArgument("conditioning set contains a query vertex".into()));
    }
    let n = g.vertex_count();
    if ai == bi {
        let half = T::from_ratio(1, 2);
        let cpts = (0..n)
            .map(|v| {
                let parents: Vec<usize> = g.parents(v).iter().collect();
                let rows = vec![vec![half.clone(), half.clone()]; 1 << parents.len()];
                Cpt { parents, rows }
            })
            .collect();
        return Ok((DiscreteNetwork::new(g.clone(), vec![2; n], cpts)?, 1));
    }
    if g.separated(ai, bi, cs) {
        return Err(Error::Precondition(format!(
            "`{a}` and `{b}` are d-separated given {{{}}}; no Markov network can make them dependent",
            c.join(",")
        )));
    }
    let (sa, sb) = (VertexSet::singleton(ai), VertexSet::singleton(bi));
    for attempt in 0..budget {
        let bn = sample_parameters::<T>(g, &vec![2; n], sub_seed(seed, attempt as u64), DEFAULT_RESOLUTION)?;
        if !bn.joint().ci_defect(sa, sb, cs)?.is_zero() {
            return Ok((bn, attempt + 1));
        }
    }
    Err(Error::SearchExhausted(budget))
}
