use super::{Admg, Dag, SeparationGraph, VertexSet};
use crate::{Error, Result};

/// Observed vertices reachable from `start` along directed paths whose
/// intermediate vertices are all latent.
fn reach_through_latents(g: &Dag, start: usize, latent: VertexSet) -> VertexSet {
    let mut seen = VertexSet::EMPTY;
    let mut observed = VertexSet::EMPTY;
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for w in g.children(v).difference(seen).iter() {
            seen.insert(w);
            if latent.contains(w) {
                frontier.push(w);
            } else {
                observed.insert(w);
            }
        }
    }
    observed
}

/// Latent projection of `g` onto `observed`.
///
/// `a -> b` whenever a directed path from `a` to `b` runs through latent
/// vertices only; `a <-> b` whenever some latent vertex reaches both `a` and
/// `b` along latent-only directed paths. The result has exactly the observed
/// vertices, in the order they are declared in `g`.
pub fn latent_project(g: &Dag, observed: &[&str]) -> Result<Admg> {
    let mut keep = VertexSet::EMPTY;
    for label in observed {
        let v = g
            .index_of(label)
            .map_err(|_| Error::InvalidArgument(format!("observed vertex `{label}` is not in the graph")))?;
        keep.insert(v);
    }
    project_indices(g, keep)
}

pub(crate) fn project_indices(g: &Dag, keep: VertexSet) -> Result<Admg> {
    let latent = g.all_vertices().difference(keep);
    let kept: Vec<usize> = keep.iter().collect();
    let position = |v: usize| kept.iter().position(|&k| k == v).expect("observed vertex");
    let mut parents = vec![VertexSet::EMPTY; kept.len()];
    let mut siblings = vec![VertexSet::EMPTY; kept.len()];
    for (i, &a) in kept.iter().enumerate() {
        for b in reach_through_latents(g, a, latent).iter() {
            parents[position(b)].insert(i);
        }
    }
    for w in latent.iter() {
        let reached: Vec<usize> = reach_through_latents(g, w, latent).iter().map(position).collect();
        for (k, &x) in reached.iter().enumerate() {
            for &y in &reached[k + 1..] {
                siblings[x].insert(y);
                siblings[y].insert(x);
            }
        }
    }
    let labels = kept.iter().map(|&v| g.labels()[v].clone()).collect();
    Admg::from_parts(labels, parents, siblings)
}
