//! JSON and CSV formats. Every number that is a probability, weight,
//! variance or defect travels as a `"p/q"` string.
//!
//! Graph file:
//! `{"vertices": [..], "edges": [["A","B"], ..], "bidirected": [..], "latent": [..], "cardinalities": {"A": 3}}`
//! with everything but `vertices` optional.
//!
//! Discrete model:
//! `{"vertices": [..], "cardinalities": {..}, "cpts": {"B": {"parents": ["A"], "table": [["1/2","1/2"], ..]}}}`,
//! one row per parent configuration, first parent most significant.
//!
//! Gaussian model:
//! `{"vertices": [..], "nodes": {"B": {"parents": {"A": "2/1"}, "variance": "1/1"}}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::discrete::Cpt;
use crate::graph::SeparationStatement;
use crate::typicality::{LineScan, Model, OpennessReport, TypicalityReport};
use crate::{
    format_rational, parse_rational, Admg, Dag, DiscreteBn, Error, FaithfulnessReport, GaussianBn, Rational, Result,
    SeparationGraph, VertexSet,
};

fn parse_json<'a, D: Deserialize<'a>>(text: &'a str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_pretty<S: Serialize>(value: &S) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("in-memory serialization");
    out.push('\n');
    out
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn parse_rationals(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|s| parse_rational(s)).collect()
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bidirected: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub latent: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cardinalities: BTreeMap<String, usize>,
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphInput {
    Dag { dag: Dag, latent: VertexSet, cards: Vec<usize> },
    Admg(Admg),
}

impl GraphInput {
    pub fn as_separation_graph(&self) -> &dyn SeparationGraph {
        match self {
            GraphInput::Dag { dag, .. } => dag,
            GraphInput::Admg(admg) => admg,
        }
    }
}

fn labelled_edges<G: SeparationGraph + ?Sized>(g: &G, edges: &[(usize, usize)]) -> Vec<(String, String)> {
    edges.iter().map(|&(t, h)| (g.label(t).to_string(), g.label(h).to_string())).collect()
}

fn cardinalities(labels: &[String], cards: &BTreeMap<String, usize>) -> Result<Vec<usize>> {
    if let Some(name) = cards.keys().find(|k| !labels.contains(k)) {
        return Err(Error::UnknownVertex(name.clone()));
    }
    Ok(labels.iter().map(|l| cards.get(l).copied().unwrap_or(2)).collect())
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let file: GraphFile = parse_json(text)?;
    if !file.bidirected.is_empty() {
        if !file.latent.is_empty() {
            return Err(Error::InvalidArgument("a graph with bidirected edges cannot declare latent vertices".into()));
        }
        return Ok(GraphInput::Admg(Admg::new(&file.vertices, &file.edges, &file.bidirected)?));
    }
    let dag = Dag::new(&file.vertices, &file.edges)?;
    let latent_labels: Vec<&str> = file.latent.iter().map(String::as_str).collect();
    let latent = dag.set_of(&latent_labels)?;
    let cards = cardinalities(dag.labels(), &file.cardinalities)?;
    Ok(GraphInput::Dag { dag, latent, cards })
}

pub fn dag_to_json(dag: &Dag) -> String {
    to_pretty(&GraphFile {
        vertices: dag.labels().to_vec(),
        edges: labelled_edges(dag, &dag.edges()),
        ..Default::default()
    })
}

pub fn admg_to_json(admg: &Admg) -> String {
    to_pretty(&GraphFile {
        vertices: admg.labels().to_vec(),
        edges: labelled_edges(admg, &admg.directed_edges()),
        bidirected: labelled_edges(admg, &admg.bidirected_edges()),
        ..Default::default()
    })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CptFile {
    parents: Vec<String>,
    table: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeFile {
    parents: BTreeMap<String, String>,
    variance: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cardinalities: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cpts: Option<BTreeMap<String, CptFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nodes: Option<BTreeMap<String, NodeFile>>,
}

fn entry<'a, V>(map: &'a BTreeMap<String, V>, vertices: &[String], what: &str) -> Result<Vec<&'a V>> {
    if let Some(extra) = map.keys().find(|k| !vertices.contains(k)) {
        return Err(Error::UnknownVertex(extra.clone()));
    }
    vertices
        .iter()
        .map(|v| map.get(v).ok_or_else(|| Error::InvalidModel(format!("no {what} for `{v}`"))))
        .collect()
}

fn model_graph<'a>(vertices: &[String], parents: impl Iterator<Item = (&'a String, Vec<&'a String>)>) -> Result<Dag> {
    let edges: Vec<(&str, &str)> = parents
        .flat_map(|(child, ps)| ps.into_iter().map(move |p| (p.as_str(), child.as_str())))
        .collect();
    let vertices: Vec<&str> = vertices.iter().map(String::as_str).collect();
    Dag::new(&vertices, &edges)
}

pub fn parse_model(text: &str) -> Result<Model> {
    let file: ModelFile = parse_json(text)?;
    match (&file.cpts, &file.nodes) {
        (Some(cpts), None) => {
            let tables = entry(cpts, &file.vertices, "table")?;
            let dag = model_graph(&file.vertices, file.vertices.iter().zip(&tables).map(|(v, t)| (v, t.parents.iter().collect())))?;
            let cards = match &file.cardinalities {
                Some(map) => cardinalities(dag.labels(), map)?,
                None => tables.iter().map(|t| t.table.first().map_or(0, Vec::len)).collect(),
            };
            let cpts = tables
                .iter()
                .map(|t| {
                    Ok(Cpt {
                        parents: t.parents.iter().map(|p| dag.index_of(p)).collect::<Result<_>>()?,
                        rows: t.table.iter().map(|row| parse_rationals(row)).collect::<Result<_>>()?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Model::Discrete(DiscreteBn::new(dag, cards, cpts)?))
        }
        (None, Some(nodes)) => {
            if file.cardinalities.is_some() {
                return Err(Error::InvalidModel("gaussian models take no cardinalities".into()));
            }
            let nodes = entry(nodes, &file.vertices, "node")?;
            let dag = model_graph(&file.vertices, file.vertices.iter().zip(&nodes).map(|(v, n)| (v, n.parents.keys().collect())))?;
            let coefficients = nodes
                .iter()
                .map(|n| n.parents.iter().map(|(p, b)| Ok((dag.index_of(p)?, parse_rational(b)?))).collect())
                .collect::<Result<Vec<_>>>()?;
            let variances = nodes.iter().map(|n| parse_rational(&n.variance)).collect::<Result<Vec<_>>>()?;
            Ok(Model::Gaussian(GaussianBn::new(dag, coefficients, variances)?))
        }
        _ => Err(Error::InvalidModel("a model needs exactly one of `cpts` (discrete) or `nodes` (gaussian)".into())),
    }
}

fn model_file(model: &Model) -> ModelFile {
    let g = model.graph();
    let vertices = g.labels().to_vec();
    match model {
        Model::Discrete(bn) => ModelFile {
            cardinalities: Some(vertices.iter().cloned().zip(bn.cards().iter().copied()).collect()),
            cpts: Some(
                bn.cpts()
                    .iter()
                    .enumerate()
                    .map(|(v, cpt)| {
                        let file = CptFile {
                            parents: cpt.parents.iter().map(|&p| g.label(p).to_string()).collect(),
                            table: cpt.rows.iter().map(|row| rationals(row)).collect(),
                        };
                        (g.label(v).to_string(), file)
                    })
                    .collect(),
            ),
            nodes: None,
            vertices,
        },
        Model::Gaussian(bn) => ModelFile {
            cardinalities: None,
            cpts: None,
            nodes: Some(
                (0..g.vertex_count())
                    .map(|v| {
                        let file = NodeFile {
                            parents: bn
                                .coefficients(v)
                                .iter()
                                .map(|(p, b)| (g.label(*p).to_string(), format_rational(b)))
                                .collect(),
                            variance: format_rational(&bn.variances()[v]),
                        };
                        (g.label(v).to_string(), file)
                    })
                    .collect(),
            ),
            vertices,
        },
    }
}

pub fn model_to_json(model: &Model) -> String {
    to_pretty(&model_file(model))
}

#[derive(Debug, Serialize)]
struct StatementOut {
    a: String,
    b: String,
    given: Vec<String>,
    separated: bool,
    defect: String,
}

#[derive(Debug, Serialize)]
struct FaithfulnessOut {
    faithful: bool,
    markov_violations: Vec<String>,
    unfaithful: Vec<String>,
    statements: Vec<StatementOut>,
}

fn faithfulness_out<G: SeparationGraph + ?Sized>(graph: &G, report: &FaithfulnessReport) -> FaithfulnessOut {
    let describe = |s: &SeparationStatement| s.describe(graph);
    FaithfulnessOut {
        faithful: report.is_faithful,
        markov_violations: report.markov_violations.iter().map(|s| describe(&s.statement)).collect(),
        unfaithful: report.unfaithful_statements.iter().map(|s| describe(&s.statement)).collect(),
        statements: report
            .statements
            .iter()
            .map(|s| StatementOut {
                a: graph.label(s.statement.a).to_string(),
                b: graph.label(s.statement.b).to_string(),
                given: graph.labels_of(s.statement.c),
                separated: s.statement.separated,
                defect: format_rational(&s.defect),
            })
            .collect(),
    }
}

pub fn faithfulness_to_json<G: SeparationGraph + ?Sized>(graph: &G, report: &FaithfulnessReport) -> String {
    to_pretty(&faithfulness_out(graph, report))
}

/// Interpolated model at `lambda` together with its defect table.
pub fn interpolation_to_json(lambda: &Rational, model: &Model, report: &FaithfulnessReport) -> String {
    #[derive(Serialize)]
    struct Out {
        lambda: String,
        model: ModelFile,
        defects: FaithfulnessOut,
    }
    to_pretty(&Out { lambda: format_rational(lambda), model: model_file(model), defects: faithfulness_out(model.graph(), report) })
}

#[derive(Debug, Serialize)]
struct ConfigOut {
    family: &'static str,
    graph: GraphFile,
    samples: usize,
    grid: usize,
    resolution: u64,
    epsilons: Vec<String>,
    radii: Vec<String>,
}

#[derive(Debug, Serialize)]
struct LineScanOut {
    direction_seed: u64,
    statement: String,
    zeros: Vec<String>,
    max_defect: String,
}

#[derive(Debug, Serialize)]
struct OpennessOut {
    radius: String,
    delta: Option<String>,
    probes: usize,
    passed: usize,
    passed_faithful: usize,
    vacuous: bool,
}

#[derive(Debug, Serialize)]
struct ReportOut {
    experiment: &'static str,
    version: &'static str,
    config: ConfigOut,
    seed: u64,
    samples: usize,
    exact_unfaithful: usize,
    markov_violations: usize,
    epsilon_counts: Vec<(String, usize)>,
    radius_faithful: Vec<(String, String)>,
    line_zeros: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    line_scans: Vec<LineScanOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    openness: Vec<OpennessOut>,
}

fn line_scan_out(scan: &LineScan) -> LineScanOut {
    let max = scan.profile.iter().map(|(_, d)| d).max().cloned().unwrap_or_else(num_traits::Zero::zero);
    LineScanOut {
        direction_seed: scan.direction_seed,
        statement: scan.statement.clone(),
        zeros: rationals(&scan.zeros),
        max_defect: format_rational(&max),
    }
}

fn openness_out(o: &OpennessReport) -> OpennessOut {
    OpennessOut {
        radius: format_rational(&o.radius),
        delta: o.delta.as_ref().map(format_rational),
        probes: o.probes,
        passed: o.passed,
        passed_faithful: o.passed_faithful,
        vacuous: o.is_vacuous(),
    }
}

fn report_out(report: &TypicalityReport) -> ReportOut {
    let cfg = &report.config;
    let g = &cfg.graph;
    let graph = GraphFile {
        vertices: g.labels().to_vec(),
        edges: labelled_edges(g, &g.edges()),
        latent: g.labels_of(cfg.latent),
        cardinalities: match cfg.family {
            crate::typicality::Family::Discrete => g.labels().iter().cloned().zip(cfg.cards.iter().copied()).collect(),
            crate::typicality::Family::Gaussian => BTreeMap::new(),
        },
        ..Default::default()
    };
    ReportOut {
        experiment: report.experiment.name(),
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigOut {
            family: cfg.family.name(),
            graph,
            samples: cfg.samples,
            grid: cfg.grid,
            resolution: cfg.resolution,
            epsilons: rationals(&cfg.epsilons),
            radii: rationals(&cfg.radii),
        },
        seed: cfg.seed,
        samples: cfg.samples,
        exact_unfaithful: report.exact_unfaithful,
        markov_violations: report.markov_violations,
        epsilon_counts: report.epsilon_counts.iter().map(|(e, n)| (format_rational(e), *n)).collect(),
        radius_faithful: report
            .radius_faithful
            .iter()
            .map(|r| (format_rational(&r.radius), format!("{}/{}", r.faithful, r.total)))
            .collect(),
        line_zeros: report.line_zeros(),
        line_scans: report.line_scans.iter().map(line_scan_out).collect(),
        openness: report.openness.iter().map(openness_out).collect(),
    }
}

pub fn report_to_json(report: &TypicalityReport) -> String {
    to_pretty(&report_out(report))
}

/// Flat `section,key,value` rows.
pub fn report_to_csv(report: &TypicalityReport) -> String {
    let out = report_out(report);
    let mut rows = vec![
        "section,key,value".to_string(),
        format!("summary,experiment,{}", out.experiment),
        format!("summary,family,{}", out.config.family),
        format!("summary,seed,{}", out.seed),
        format!("summary,samples,{}", out.samples),
        format!("summary,exact_unfaithful,{}", out.exact_unfaithful),
        format!("summary,markov_violations,{}", out.markov_violations),
        format!("summary,line_zeros,{}", out.line_zeros),
    ];
    rows.extend(out.epsilon_counts.iter().map(|(e, n)| format!("epsilon_count,{e},{n}")));
    rows.extend(out.radius_faithful.iter().map(|(r, f)| format!("radius_faithful,{r},{f}")));
    rows.extend(out.line_scans.iter().map(|s| format!("line_zeros,{},{}", s.direction_seed, s.zeros.len())));
    rows.extend(out.openness.iter().map(|o| format!("openness_passed_faithful,{},{}/{}", o.radius, o.passed_faithful, o.passed)));
    let mut text = rows.join("\n");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::cancelling_paths_bn;
    use crate::Scalar;

    const FIG5: &str = r#"{
        "vertices": ["A", "B", "C", "L1", "L2"],
        "edges": [["A","B"],["B","L2"],["L2","C"],["L1","A"],["L1","B"],["L1","C"],["L1","L2"]],
        "latent": ["L1", "L2"]
    }"#;

    #[test]
    fn graph_file_with_latents() {
        let GraphInput::Dag { dag, latent, cards } = parse_graph(FIG5).unwrap() else { panic!() };
        assert_eq!(dag.labels_of(latent), vec!["L1", "L2"]);
        assert_eq!(cards, vec![2; 5]);
    }

    #[test]
    fn admg_round_trip() {
        let GraphInput::Dag { dag, .. } = parse_graph(FIG5).unwrap() else { panic!() };
        let admg = crate::graph::latent_project(&dag, &["A", "B", "C"]).unwrap();
        let text = admg_to_json(&admg);
        assert_eq!(parse_graph(&text).unwrap(), GraphInput::Admg(admg.clone()));
        assert_eq!(admg_to_json(&admg), text);
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_graph("{\n  \"vertices\": [\"A\",\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn discrete_model_round_trip_and_row_errors() {
        let text = r#"{"vertices": ["A", "B"],
            "cpts": {"A": {"parents": [], "table": [["1/3", "2/3"]]},
                     "B": {"parents": ["A"], "table": [["1/2", "1/2"], ["1/4", "3/4"]]}}}"#;
        let model = parse_model(text).unwrap();
        assert_eq!(parse_model(&model_to_json(&model)).unwrap(), model);
        let bad = text.replace("3/4", "1/2");
        let err = parse_model(&bad).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("row 1 of `B`"), "{err}");
        assert!(matches!(parse_model(&text.replace("1/3", "0.333")), Err(Error::Parse(_))));
    }

    #[test]
    fn gaussian_model_round_trip() {
        let r = |p, q| Rational::from_ratio(p, q);
        let bn = cancelling_paths_bn(r(1, 1), r(2, 1), [r(1, 1), r(1, 1), r(1, 1)]).unwrap();
        let model = Model::Gaussian(bn);
        let text = model_to_json(&model);
        assert!(text.contains("\"-2/1\""));
        assert_eq!(parse_model(&text).unwrap(), model);
    }

    #[test]
    fn model_needs_one_family() {
        assert_eq!(parse_model(r#"{"vertices": ["A"]}"#).unwrap_err().exit_code(), 2);
    }
}
