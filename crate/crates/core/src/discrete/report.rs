use crate::graph::{enumerate_statements, SeparationGraph, SeparationStatement};
use crate::{Result, Scalar};

use super::Table;

#[derive(Debug, Clone, PartialEq)]
pub struct StatementDefect<T> {
    pub statement: SeparationStatement,
    pub defect: T,
}

/// Markov/faithfulness classification of a distribution against a graph.
///
/// A statement is a Markov violation when the graph separates it but the
/// defect is nonzero, and unfaithful when the graph connects it but the
/// defect is exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct FaithfulnessReport<T> {
    pub statements: Vec<StatementDefect<T>>,
    pub markov_violations: Vec<StatementDefect<T>>,
    pub unfaithful_statements: Vec<StatementDefect<T>>,
    pub is_faithful: bool,
}

impl<T: Scalar> FaithfulnessReport<T> {
    pub fn from_defects(statements: Vec<StatementDefect<T>>) -> Self {
        let markov_violations: Vec<_> = statements
            .iter()
            .filter(|s| s.statement.separated && !s.defect.is_zero())
            .cloned()
            .collect();
        let unfaithful_statements: Vec<_> = statements
            .iter()
            .filter(|s| !s.statement.separated && s.defect.is_zero())
            .cloned()
            .collect();
        let is_faithful = markov_violations.is_empty() && unfaithful_statements.is_empty();
        FaithfulnessReport { statements, markov_violations, unfaithful_statements, is_faithful }
    }

    /// Evaluates every enumerated statement of `graph` on `table`, whose
    /// scope indices must refer to `graph`'s vertices.
    pub fn for_table<G: SeparationGraph + ?Sized>(graph: &G, table: &Table<T>) -> Result<Self> {
        let statements = enumerate_statements(graph)?
            .into_iter()
            .map(|s| {
                let defect = table.ci_defect(
                    crate::VertexSet::singleton(s.a),
                    crate::VertexSet::singleton(s.b),
                    s.c,
                )?;
                Ok(StatementDefect { statement: s, defect })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_defects(statements))
    }

    /// Smallest defect over graphically connected statements; `None` when
    /// the graph separates everything.
    pub fn min_connected_defect(&self) -> Option<T> {
        self.statements
            .iter()
            .filter(|s| !s.statement.separated)
            .map(|s| s.defect.clone())
            .reduce(|a, b| a.min_of(b))
    }

    /// Whether some statement matching `describe(..) == text` is listed as unfaithful.
    pub fn flags_unfaithful<G: SeparationGraph + ?Sized>(&self, graph: &G, text: &str) -> bool {
        self.unfaithful_statements.iter().any(|s| s.statement.describe(graph) == text)
    }

    pub fn defect_of<G: SeparationGraph + ?Sized>(&self, graph: &G, text: &str) -> Option<&T> {
        self.statements
            .iter()
            .find(|s| s.statement.describe(graph) == text)
            .map(|s| &s.defect)
    }
}
