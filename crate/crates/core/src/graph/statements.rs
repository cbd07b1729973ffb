use super::{SeparationGraph, VertexSet};
use crate::{Error, Result};

/// Default cap on the number of vertices whose statements get enumerated.
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

/// Enumeration size limit: `FAITHLAB_MAX_VERTICES` if set and valid,
/// otherwise [`DEFAULT_VERTEX_LIMIT`].
pub fn vertex_limit() -> usize {
    std::env::var("FAITHLAB_MAX_VERTICES")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_VERTEX_LIMIT)
}

/// A singleton separation query `a ⊥ b | c` together with its graphical verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeparationStatement {
    pub a: usize,
    pub b: usize,
    pub c: VertexSet,
    pub separated: bool,
}

impl SeparationStatement {
    /// Human-readable form such as `(A,C | {B})`.
    pub fn describe<G: SeparationGraph + ?Sized>(&self, g: &G) -> String {
        format!("({},{} | {{{}}})", g.label(self.a), g.label(self.b), g.labels_of(self.c).join(","))
    }
}

pub(crate) fn check_query(a: usize, b: usize, c: VertexSet) -> Result<()> {
    if a == b {
        return Err(Error::InvalidArgument("separation query needs two distinct vertices".into()));
    }
    if c.contains(a) || c.contains(b) {
        return Err(Error::InvalidArgument("conditioning set contains a query vertex".into()));
    }
    Ok(())
}

pub(crate) fn resolve_query<G: SeparationGraph + ?Sized>(
    g: &G,
    a: &str,
    b: &str,
    c: &[&str],
) -> Result<(usize, usize, VertexSet)> {
    let (a, b, c) = (g.index_of(a)?, g.index_of(b)?, g.set_of(c)?);
    check_query(a, b, c)?;
    Ok((a, b, c))
}

/// All singleton statements of `g` under the configured [`vertex_limit`].
pub fn enumerate_statements<G: SeparationGraph + ?Sized>(g: &G) -> Result<Vec<SeparationStatement>> {
    enumerate_statements_with_limit(g, vertex_limit())
}

/// All `(a, b, C)` with `a < b` in declaration order and `C` ranging over the
/// subsets of the remaining vertices, `n(n-1)/2 * 2^(n-2)` statements.
pub fn enumerate_statements_with_limit<G: SeparationGraph + ?Sized>(
    g: &G,
    limit: usize,
) -> Result<Vec<SeparationStatement>> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::SizeLimit { what: "statement enumeration", size: n, limit });
    }
    let all = g.all_vertices();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let rest = all.without(a).without(b);
            for c in rest.subsets() {
                out.push(SeparationStatement { a, b, c, separated: g.separated(a, b, c) });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Dag;
    use super::*;

    #[test]
    fn chain_has_one_separation() {
        let g = chain();
        let st = enumerate_statements(&g).unwrap();
        assert_eq!(st.len(), 6);
        let sep: Vec<_> = st.iter().filter(|s| s.separated).map(|s| s.describe(&g)).collect();
        assert_eq!(sep, ["(A,C | {B})"]);
    }

    #[test]
    fn edgeless_pair() {
        let g = Dag::new::<&str>(&["A", "B"], &[]).unwrap();
        let st = enumerate_statements(&g).unwrap();
        assert_eq!(st.len(), 1);
        assert!(st[0].separated);
    }

    #[test]
    fn collider_statements() {
        let g = collider();
        let st = enumerate_statements(&g).unwrap();
        assert_eq!(st.len(), 6);
        let find = |d: &str| st.iter().find(|s| s.describe(&g) == d).unwrap().separated;
        assert!(find("(A,B | {})"));
        assert!(!find("(A,B | {C})"));
        assert_eq!(st.iter().filter(|s| s.separated).count(), 1);
    }

    #[test]
    fn count_formula_and_limit() {
        let g = two_latents();
        assert_eq!(enumerate_statements(&g).unwrap().len(), 5 * 4 / 2 * 8);
        assert!(matches!(
            enumerate_statements_with_limit(&g, 4),
            Err(Error::SizeLimit { size: 5, limit: 4, .. })
        ));
    }
}
