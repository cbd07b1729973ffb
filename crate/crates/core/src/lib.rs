//! Graphical separation, exact conditional-independence testing and
//! faithfulness experiments for discrete and linear Gaussian Bayesian
//! networks.
//!
//! The numerical core is generic over a [`Scalar`]; the aliases at the crate
//! root fix it to [`Rational`] (arbitrary-precision fractions), which is what
//! makes "the defect is exactly zero" a decidable predicate. `f64` aliases are
//! provided for quick exploratory use where exactness does not matter.

pub mod discrete;
pub mod error;
pub mod gaussian;
pub mod graph;
pub mod interpolate;
pub mod io;
pub mod rng;
pub mod scalar;
pub mod typicality;

pub use error::{Error, Result};
pub use graph::{Admg, Dag, SeparationGraph, SeparationStatement, VertexSet};
pub use scalar::{format_rational, parse_rational, Rational, Scalar};
pub use typicality::{ExperimentConfig, Family, Model, TypicalityReport};

/// Exact discrete Bayesian network.
pub type DiscreteBn = discrete::DiscreteNetwork<Rational>;
/// Exact probability table over a product state space.
pub type JointTable = discrete::Table<Rational>;
/// Exact linear Gaussian Bayesian network.
pub type GaussianBn = gaussian::GaussianNetwork<Rational>;
/// Exact covariance matrix of a linear Gaussian network.
pub type CovarianceMatrix = gaussian::Covariance<Rational>;
/// Per-statement verdicts with exact defects.
pub type FaithfulnessReport = discrete::FaithfulnessReport<Rational>;
/// Polynomial with exact rational coefficients.
pub type RationalPolynomial = interpolate::Polynomial<Rational>;
/// Pair of exact discrete networks joined by the per-vertex mixture.
pub type InterpolationPath = interpolate::InterpolationPath<Rational>;

pub type DiscreteBnF64 = discrete::DiscreteNetwork<f64>;
pub type JointTableF64 = discrete::Table<f64>;
pub type GaussianBnF64 = gaussian::GaussianNetwork<f64>;
