//! Seeded Monte-Carlo experiments over parameter space.
//!
//! Every draw derives its own seed from the experiment seed with
//! [`sub_seed`], so draws run in parallel and reports only aggregate counts.
//! All zero verdicts are exact rational comparisons.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::discrete::{sample_parameters, FaithfulnessReport as Report, DEFAULT_RESOLUTION};
use crate::gaussian::sample_parameters_gaussian;
use crate::graph::project_indices;
use crate::graph::SeparationStatement;
use crate::rng::{seeded, sub_seed, symmetric_unit};
use crate::{Dag, DiscreteBn, Error, FaithfulnessReport, GaussianBn, Rational, Result, Scalar, SeparationGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Discrete,
    Gaussian,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Discrete => "discrete",
            Family::Gaussian => "gaussian",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discrete" => Ok(Family::Discrete),
            "gaussian" => Ok(Family::Gaussian),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

/// A network of either family.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Discrete(DiscreteBn),
    Gaussian(GaussianBn),
}

impl Model {
    pub fn graph(&self) -> &Dag {
        match self {
            Model::Discrete(bn) => bn.graph(),
            Model::Gaussian(bn) => bn.graph(),
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Model::Discrete(_) => Family::Discrete,
            Model::Gaussian(_) => Family::Gaussian,
        }
    }

    pub fn check_faithful(&self) -> Result<FaithfulnessReport> {
        match self {
            Model::Discrete(bn) => bn.check_faithful(),
            Model::Gaussian(bn) => bn.check_faithful(),
        }
    }

    /// Report of the `observed` marginal against `projected`, whose vertex
    /// `i` is the `i`-th observed vertex.
    fn report_marginal<G: SeparationGraph>(&self, observed: VertexSet, projected: &G) -> Result<FaithfulnessReport> {
        let scope: Vec<usize> = (0..observed.len()).collect();
        match self {
            Model::Discrete(bn) => {
                let table = bn.joint().marginal(observed)?.with_scope(scope)?;
                Report::for_table(projected, &table)
            }
            Model::Gaussian(bn) => bn.covariance().restrict(observed)?.with_scope(scope)?.report_against(projected),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub graph: Dag,
    pub latent: VertexSet,
    /// Discrete state counts, one per vertex of `graph` (latent ones included).
    pub cards: Vec<usize>,
    pub family: Family,
    pub samples: usize,
    pub seed: u64,
    pub epsilons: Vec<Rational>,
    pub radii: Vec<Rational>,
    pub grid: usize,
    /// Denominator of every sampled parameter or offset.
    pub resolution: u64,
}

fn powers_of_ten(from: u32, to: u32) -> Vec<Rational> {
    (from..=to).map(|k| Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), k as usize))).collect()
}

impl ExperimentConfig {
    pub fn new(graph: Dag, family: Family) -> Self {
        let n = graph.vertex_count();
        ExperimentConfig {
            graph,
            latent: VertexSet::EMPTY,
            cards: vec![2; n],
            family,
            samples: 1000,
            seed: 0,
            epsilons: powers_of_ten(1, 4),
            radii: powers_of_ten(1, 6),
            grid: 10_000,
            resolution: DEFAULT_RESOLUTION,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        if self.grid == 0 {
            return Err(Error::InvalidArgument("grid must be at least 1".into()));
        }
        if self.cards.len() != self.graph.vertex_count() {
            return Err(Error::InvalidArgument("one cardinality per vertex is required".into()));
        }
        if !self.latent.is_subset(self.graph.all_vertices()) {
            return Err(Error::InvalidArgument("latent set is not contained in the graph".into()));
        }
        for (name, list) in [("epsilons", &self.epsilons), ("radii", &self.radii)] {
            if list.iter().any(|x| !x.is_positive()) {
                return Err(Error::InvalidArgument(format!("{name} must be strictly positive")));
            }
            if list.windows(2).any(|w| w[1] >= w[0]) {
                return Err(Error::InvalidArgument(format!("{name} must be strictly decreasing")));
            }
        }
        Ok(())
    }

    pub fn observed(&self) -> VertexSet {
        self.graph.all_vertices().difference(self.latent)
    }

    fn draw(&self, index: u64) -> Result<Model> {
        let seed = sub_seed(self.seed, index);
        Ok(match self.family {
            Family::Discrete => Model::Discrete(sample_parameters(&self.graph, &self.cards, seed, self.resolution)?),
            Family::Gaussian => Model::Gaussian(sample_parameters_gaussian(&self.graph, seed, self.resolution)?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    MeasureZero,
    Denseness,
    Openness,
    LineScan,
    Latent,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::MeasureZero => "measure-zero",
            Experiment::Denseness => "denseness",
            Experiment::Openness => "openness",
            Experiment::LineScan => "line-scan",
            Experiment::Latent => "latent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusCount {
    pub radius: Rational,
    pub faithful: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpennessReport {
    /// Smallest exact defect over connected statements; `None` when the
    /// graph separates every pair.
    pub delta: Option<Rational>,
    pub radius: Rational,
    pub probes: usize,
    /// Probes whose joint lies within total variation `delta / 4`.
    pub passed: usize,
    pub passed_faithful: usize,
    pub faithful: usize,
}

impl OpennessReport {
    pub fn is_vacuous(&self) -> bool {
        self.passed == 0
    }

    pub fn holds(&self) -> bool {
        self.passed == self.passed_faithful
    }
}

/// Perturbation direction for a Gaussian network.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    pub coefficients: Vec<Vec<(usize, Rational)>>,
    pub variances: Vec<Rational>,
}

impl Direction {
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().flatten().all(|(_, d)| d.is_zero()) && self.variances.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineScan {
    /// Seed the direction was drawn from, after skipping degenerate ones.
    pub direction_seed: u64,
    pub statement: String,
    pub zeros: Vec<Rational>,
    /// `(t, |defect|)` at every grid point.
    pub profile: Vec<(Rational, Rational)>,
}

impl LineScan {
    pub fn zero_count(&self) -> usize {
        self.zeros.len()
    }

    pub fn zero_at_origin(&self) -> bool {
        self.zeros.iter().any(Zero::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypicalityReport {
    pub experiment: Experiment,
    pub config: ExperimentConfig,
    pub exact_unfaithful: usize,
    pub markov_violations: usize,
    pub epsilon_counts: Vec<(Rational, usize)>,
    pub radius_faithful: Vec<RadiusCount>,
    pub line_scans: Vec<LineScan>,
    pub openness: Vec<OpennessReport>,
}

impl TypicalityReport {
    fn empty(experiment: Experiment, config: ExperimentConfig) -> Self {
        TypicalityReport {
            experiment,
            config,
            exact_unfaithful: 0,
            markov_violations: 0,
            epsilon_counts: Vec::new(),
            radius_faithful: Vec::new(),
            line_scans: Vec::new(),
            openness: Vec::new(),
        }
    }

    pub fn line_zeros(&self) -> usize {
        self.line_scans.iter().map(LineScan::zero_count).sum()
    }
}

struct DrawOutcome {
    min_defect: Option<Rational>,
    markov_violations: usize,
}

fn sample_outcomes(cfg: &ExperimentConfig, experiment: Experiment) -> Result<TypicalityReport> {
    cfg.validate()?;
    let observed = cfg.observed();
    let projected = project_indices(&cfg.graph, observed)?;
    crate::graph::enumerate_statements(&projected)?;
    let outcomes = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let report = cfg.draw(i)?.report_marginal(observed, &projected)?;
            Ok(DrawOutcome {
                min_defect: report.min_connected_defect(),
                markov_violations: report.markov_violations.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = TypicalityReport::empty(experiment, cfg.clone());
    report.exact_unfaithful = outcomes.iter().filter(|o| o.min_defect.as_ref().is_some_and(Zero::is_zero)).count();
    report.markov_violations = outcomes.iter().map(|o| o.markov_violations).sum();
    report.epsilon_counts = cfg
        .epsilons
        .iter()
        .map(|eps| {
            let count = outcomes.iter().filter(|o| o.min_defect.as_ref().is_some_and(|d| d < eps)).count();
            (eps.clone(), count)
        })
        .collect();
    Ok(report)
}

/// Draws `samples` parameter vectors on `cfg.graph` and records, for each,
/// the smallest exact defect over the connected statements.
pub fn measure_zero_experiment(cfg: &ExperimentConfig) -> Result<TypicalityReport> {
    if !cfg.latent.is_empty() {
        return Err(Error::InvalidArgument("measure-zero runs on fully observed graphs; use the latent experiment".into()));
    }
    sample_outcomes(cfg, Experiment::MeasureZero)
}

/// Like [`measure_zero_experiment`], but each draw is marginalized to the
/// observed vertices and judged against the latent projection.
pub fn latent_experiment(cfg: &ExperimentConfig) -> Result<TypicalityReport> {
    sample_outcomes(cfg, Experiment::Latent)
}

fn reflect_or(value: Rational, fallback: &Rational) -> Rational {
    if value.is_zero() {
        fallback.clone()
    } else {
        value.abs()
    }
}

/// Adds an independent offset `u * radius`, `u` uniform on a grid in
/// `[-1, 1]`, to every free parameter. Table rows are reflected into the
/// nonnegative orthant and renormalized; variances are reflected to stay
/// positive.
pub fn perturb(model: &Model, radius: &Rational, seed: u64, resolution: u64) -> Result<Model> {
    let mut rng = seeded(seed);
    let mut offset = || radius.clone() * symmetric_unit::<Rational>(&mut rng, resolution);
    match model {
        Model::Discrete(bn) => Ok(Model::Discrete(bn.map_rows(|_, _, row| {
            let moved: Vec<Rational> = row.iter().map(|p| (p.clone() + offset()).abs()).collect();
            let total = crate::scalar::sum(&moved);
            if total.is_zero() {
                row.to_vec()
            } else {
                moved.into_iter().map(|p| p / total.clone()).collect()
            }
        })?)),
        Model::Gaussian(bn) => {
            let n = bn.graph().vertex_count();
            let coefficients = (0..n)
                .map(|v| bn.coefficients(v).iter().map(|(p, b)| (*p, b.clone() + offset())).collect())
                .collect();
            let variances = bn.variances().iter().map(|s| reflect_or(s.clone() + offset(), s)).collect();
            Ok(Model::Gaussian(bn.with_parameters(coefficients, variances)?))
        }
    }
}

/// Perturbs an unfaithful `theta0` at every radius of `cfg` and counts the
/// faithful results. Graph and family are taken from `theta0`.
pub fn denseness_experiment(theta0: &Model, cfg: &ExperimentConfig) -> Result<TypicalityReport> {
    let mut cfg = cfg.clone();
    cfg.graph = theta0.graph().clone();
    cfg.family = theta0.family();
    cfg.latent = VertexSet::EMPTY;
    if let Model::Discrete(bn) = theta0 {
        cfg.cards = bn.cards().to_vec();
    }
    cfg.validate()?;
    if theta0.check_faithful()?.is_faithful {
        return Err(Error::Precondition("denseness needs an unfaithful starting network".into()));
    }
    let mut report = TypicalityReport::empty(Experiment::Denseness, cfg.clone());
    for (k, radius) in cfg.radii.iter().enumerate() {
        let base = (k * cfg.samples) as u64;
        let faithful = (0..cfg.samples as u64)
            .into_par_iter()
            .map(|i| {
                let probe = perturb(theta0, radius, sub_seed(cfg.seed, base + i), cfg.resolution)?;
                Ok(usize::from(probe.check_faithful()?.is_faithful))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        report.radius_faithful.push(RadiusCount { radius: radius.clone(), faithful, total: cfg.samples });
    }
    Ok(report)
}

/// Probes the neighbourhood of a faithful discrete network: every perturbation
/// whose joint is within total variation `delta / 4` of `theta`'s must be
/// faithful, since each defect moves by at most four times the distance.
pub fn openness_witness(theta: &DiscreteBn, n_probes: usize, radius: &Rational, seed: u64, resolution: u64) -> Result<OpennessReport> {
    let report = theta.check_faithful()?;
    if !report.is_faithful {
        return Err(Error::Precondition("openness needs a faithful network".into()));
    }
    let delta = report.min_connected_defect();
    let threshold = delta.as_ref().map(|d| d.clone() / Rational::from_count(4));
    let joint = theta.joint();
    let model = Model::Discrete(theta.clone());
    let outcomes = (0..n_probes as u64)
        .into_par_iter()
        .map(|i| {
            let Model::Discrete(probe) = perturb(&model, radius, sub_seed(seed, i), resolution)? else {
                unreachable!("perturbation keeps the family")
            };
            let tv = probe.joint().tv_distance(&joint)?;
            let inside = threshold.as_ref().is_none_or(|t| &tv < t);
            Ok((inside, probe.check_faithful()?.is_faithful))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OpennessReport {
        delta,
        radius: radius.clone(),
        probes: n_probes,
        passed: outcomes.iter().filter(|o| o.0).count(),
        passed_faithful: outcomes.iter().filter(|o| o.0 && o.1).count(),
        faithful: outcomes.iter().filter(|o| o.1).count(),
    })
}

/// Runs [`openness_witness`] at every radius of `cfg` with `samples` probes each.
pub fn openness_experiment(theta: &DiscreteBn, cfg: &ExperimentConfig) -> Result<TypicalityReport> {
    let mut cfg = cfg.clone();
    cfg.graph = theta.graph().clone();
    cfg.family = Family::Discrete;
    cfg.cards = theta.cards().to_vec();
    cfg.latent = VertexSet::EMPTY;
    cfg.validate()?;
    let mut report = TypicalityReport::empty(Experiment::Openness, cfg.clone());
    for (k, radius) in cfg.radii.iter().enumerate() {
        let witness = openness_witness(theta, cfg.samples, radius, sub_seed(cfg.seed, k as u64), cfg.resolution)?;
        report.radius_faithful.push(RadiusCount { radius: radius.clone(), faithful: witness.faithful, total: witness.probes });
        report.openness.push(witness);
    }
    Ok(report)
}

/// Direction with weight entries uniform in `[-1, 1]` and variance entries
/// uniform in `[-1/2, 1/2]`, drawn from `seed` or the first following seed
/// that gives a nonzero direction.
pub fn random_direction(theta: &GaussianBn, seed: u64, resolution: u64) -> (Direction, u64) {
    let half = Rational::from_ratio(1, 2);
    let mut seed = seed;
    loop {
        let mut rng = seeded(seed);
        let n = theta.graph().vertex_count();
        let direction = Direction {
            coefficients: (0..n)
                .map(|v| theta.coefficients(v).iter().map(|(p, _)| (*p, symmetric_unit(&mut rng, resolution))).collect())
                .collect(),
            variances: (0..n).map(|_| half.clone() * symmetric_unit::<Rational>(&mut rng, resolution)).collect(),
        };
        if !direction.is_zero() {
            return (direction, seed);
        }
        seed = seed.wrapping_add(1);
    }
}

fn witness_statement(theta: &GaussianBn) -> Result<SeparationStatement> {
    theta
        .check_faithful()?
        .unfaithful_statements
        .first()
        .map(|s| s.statement)
        .ok_or_else(|| Error::Precondition("line scan needs an unfaithful network".into()))
}

/// Exact defect of the first unfaithful statement of `theta0` at the `grid + 1`
/// points `t = -1 + 2j/grid` along `theta0 + t * direction`.
pub fn line_scan_along(theta0: &GaussianBn, direction: &Direction, grid: usize) -> Result<LineScan> {
    if grid == 0 {
        return Err(Error::InvalidArgument("grid must be at least 1".into()));
    }
    if direction.is_zero() {
        return Err(Error::InvalidArgument("direction is zero".into()));
    }
    let n = theta0.graph().vertex_count();
    if direction.coefficients.len() != n
        || direction.variances.len() != n
        || (0..n).any(|v| {
            let (c, d) = (theta0.coefficients(v), &direction.coefficients[v]);
            c.len() != d.len() || c.iter().zip(d).any(|(a, b)| a.0 != b.0)
        })
    {
        return Err(Error::InvalidArgument("direction does not match the network's parameters".into()));
    }
    let statement = witness_statement(theta0)?;
    let (a, b) = (VertexSet::singleton(statement.a), VertexSet::singleton(statement.b));
    let profile = (0..=grid)
        .into_par_iter()
        .map(|j| {
            let t = Rational::from_ratio(2 * j as i64 - grid as i64, grid as i64);
            let coefficients = (0..n)
                .map(|v| {
                    theta0
                        .coefficients(v)
                        .iter()
                        .zip(&direction.coefficients[v])
                        .map(|((p, beta), (_, d))| (*p, beta.clone() + t.clone() * d.clone()))
                        .collect()
                })
                .collect();
            let variances = theta0
                .variances()
                .iter()
                .zip(&direction.variances)
                .map(|(s, d)| reflect_or(s.clone() + t.clone() * d.clone(), s))
                .collect();
            let defect = theta0.with_parameters(coefficients, variances)?.ci_defect(a, b, statement.c)?;
            Ok((t, defect))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LineScan {
        direction_seed: 0,
        statement: statement.describe(theta0.graph()),
        zeros: profile.iter().filter(|(_, d)| d.is_zero()).map(|(t, _)| t.clone()).collect(),
        profile,
    })
}

/// Line scan along a random direction drawn from `seed`.
pub fn line_scan_experiment(theta0: &GaussianBn, seed: u64, grid: usize, resolution: u64) -> Result<LineScan> {
    let (direction, used) = random_direction(theta0, seed, resolution);
    let mut scan = line_scan_along(theta0, &direction, grid)?;
    scan.direction_seed = used;
    Ok(scan)
}

/// `cfg.samples` line scans with direction seeds derived from `cfg.seed`.
pub fn line_scan_report(theta0: &GaussianBn, cfg: &ExperimentConfig) -> Result<TypicalityReport> {
    let mut cfg = cfg.clone();
    cfg.graph = theta0.graph().clone();
    cfg.family = Family::Gaussian;
    cfg.latent = VertexSet::EMPTY;
    cfg.validate()?;
    let mut report = TypicalityReport::empty(Experiment::LineScan, cfg.clone());
    for k in 0..cfg.samples as u64 {
        report.line_scans.push(line_scan_experiment(theta0, sub_seed(cfg.seed, k), cfg.grid, cfg.resolution)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::cancelling_paths_bn;
    use crate::graph::fixtures::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn cancelling() -> GaussianBn {
        cancelling_paths_bn(r(1, 1), r(2, 1), [r(1, 1), r(1, 1), r(1, 1)]).unwrap()
    }

    #[test]
    fn config_validation() {
        let mut cfg = ExperimentConfig::new(triangle(), Family::Discrete);
        assert!(cfg.validate().is_ok());
        cfg.epsilons = vec![r(1, 100), r(1, 10)];
        assert!(cfg.validate().is_err());
        cfg.epsilons = vec![r(0, 1)];
        assert!(cfg.validate().is_err());
        cfg.epsilons = vec![r(1, 10)];
        cfg.samples = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn measure_zero_counts_are_monotone_and_deterministic() {
        for family in [Family::Discrete, Family::Gaussian] {
            let mut cfg = ExperimentConfig::new(triangle(), family);
            cfg.samples = 200;
            let report = measure_zero_experiment(&cfg).unwrap();
            assert_eq!(report.exact_unfaithful, 0);
            assert_eq!(report.markov_violations, 0);
            assert!(report.epsilon_counts.windows(2).all(|w| w[0].1 >= w[1].1));
            assert_eq!(report, measure_zero_experiment(&cfg).unwrap());
        }
    }

    #[test]
    fn latent_with_nothing_hidden_matches_measure_zero() {
        let mut cfg = ExperimentConfig::new(fork(), Family::Discrete);
        cfg.samples = 50;
        let a = measure_zero_experiment(&cfg).unwrap();
        let b = latent_experiment(&cfg).unwrap();
        assert_eq!(a.epsilon_counts, b.epsilon_counts);
        assert_eq!(a.exact_unfaithful, b.exact_unfaithful);
        assert_eq!(a.markov_violations, b.markov_violations);
    }

    #[test]
    fn latent_draws_are_markov_to_the_projection() {
        let g = two_latents();
        let mut cfg = ExperimentConfig::new(g.clone(), Family::Discrete);
        cfg.latent = g.set_of(&["L1", "L2"]).unwrap();
        cfg.samples = 30;
        let report = latent_experiment(&cfg).unwrap();
        assert_eq!(report.markov_violations, 0);
        assert_eq!(report.exact_unfaithful, 0);
    }

    #[test]
    fn denseness_from_cancelling_paths() {
        let mut cfg = ExperimentConfig::new(triangle(), Family::Gaussian);
        cfg.samples = 20;
        cfg.radii = vec![r(1, 1000), r(1, 1_000_000)];
        let report = denseness_experiment(&Model::Gaussian(cancelling()), &cfg).unwrap();
        for rc in &report.radius_faithful {
            assert_eq!(rc.faithful, rc.total);
        }
    }

    #[test]
    fn denseness_rejects_faithful_start() {
        let bn = sample_parameters_gaussian::<Rational>(&triangle(), 1, 1 << 10).unwrap();
        let cfg = ExperimentConfig::new(triangle(), Family::Gaussian);
        assert!(matches!(denseness_experiment(&Model::Gaussian(bn), &cfg), Err(Error::Precondition(_))));
    }

    #[test]
    fn perturbed_rows_stay_on_the_simplex() {
        let bn = sample_parameters::<Rational>(&triangle(), &[2, 3, 2], 4, 100).unwrap();
        let Model::Discrete(p) = perturb(&Model::Discrete(bn), &r(1, 2), 9, 100).unwrap() else {
            panic!()
        };
        assert!(p.joint().is_normalized());
    }

    #[test]
    fn openness_holds_and_reports_vacuity() {
        let bn = sample_parameters::<Rational>(&triangle(), &[2, 2, 2], 3, 1000).unwrap();
        let small = openness_witness(&bn, 20, &r(1, 1_000_000), 1, 1 << 20).unwrap();
        assert!(small.passed > 0 && small.holds());
        let delta = bn.check_faithful().unwrap().min_connected_defect().unwrap();
        assert_eq!(small.delta, Some(delta));
        let large = openness_witness(&bn, 20, &r(1, 1), 1, 1 << 20).unwrap();
        assert!(large.holds());
        assert!(large.passed < large.probes);
    }

    #[test]
    fn line_scan_finds_only_the_origin() {
        let theta = cancelling();
        for seed in 0..3 {
            let scan = line_scan_experiment(&theta, seed, 10, 1 << 20).unwrap();
            assert_eq!(scan.statement, "(A,C | {})");
            assert_eq!(scan.zero_count(), 1);
            assert!(scan.zero_at_origin());
        }
    }

    #[test]
    fn line_scan_along_one_weight_is_linear() {
        let theta = cancelling();
        let g = theta.graph();
        let (a, c) = (g.index_of("A").unwrap(), g.index_of("C").unwrap());
        let mut direction = random_direction(&theta, 0, 4).0;
        for (v, row) in direction.coefficients.iter_mut().enumerate() {
            for (p, d) in row.iter_mut() {
                *d = if v == c && *p == a { r(1, 1) } else { r(0, 1) };
            }
        }
        direction.variances.iter_mut().for_each(|d| *d = r(0, 1));
        let scan = line_scan_along(&theta, &direction, 4).unwrap();
        for (t, defect) in &scan.profile {
            assert_eq!(defect, &t.abs());
        }
        assert_eq!(scan.zero_count(), 1);
    }
}
