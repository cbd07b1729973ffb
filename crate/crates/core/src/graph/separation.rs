//! Separation by reachability, and the exhaustive path-enumeration oracle.

use super::{statements, Dag, SeparationGraph, VertexSet};
use crate::Result;

/// One edge leaving `from`, recorded with the edge marks at both ends
/// (`true` = arrowhead).
#[derive(Clone, Copy)]
struct Step {
    to: usize,
    head_at_from: bool,
    head_at_to: bool,
}

fn steps<G: SeparationGraph + ?Sized>(g: &G, v: usize) -> impl Iterator<Item = Step> + '_ {
    let out = g.children(v).iter().map(|w| Step { to: w, head_at_from: false, head_at_to: true });
    let inc = g.parents(v).iter().map(|w| Step { to: w, head_at_from: true, head_at_to: false });
    let bi = g.siblings(v).iter().map(|w| Step { to: w, head_at_from: true, head_at_to: true });
    out.chain(inc).chain(bi)
}

/// Whether an intermediate vertex lets a walk through, given the marks of the
/// two edges meeting at it.
fn passes(v: usize, head_in: bool, head_out: bool, c: VertexSet, an_c: VertexSet) -> bool {
    if head_in && head_out {
        an_c.contains(v)
    } else {
        !c.contains(v)
    }
}

/// Search over (vertex, arrived-with-arrowhead) states: `b` is reachable iff
/// some walk from `a` has every collider in `An(c)` and no non-collider in
/// `c`, which is equivalent to the existence of a connecting path.
pub(super) fn connected<G: SeparationGraph + ?Sized>(g: &G, a: usize, b: usize, c: VertexSet) -> bool {
    let an_c = g.ancestors(c);
    let n = g.vertex_count();
    let mut visited = vec![[false; 2]; n];
    let mut stack = Vec::new();
    for s in steps(g, a) {
        let slot = &mut visited[s.to][s.head_at_to as usize];
        if !*slot {
            *slot = true;
            stack.push((s.to, s.head_at_to));
        }
    }
    while let Some((v, head_in)) = stack.pop() {
        if v == b {
            return true;
        }
        for s in steps(g, v) {
            if !passes(v, head_in, s.head_at_from, c, an_c) {
                continue;
            }
            let slot = &mut visited[s.to][s.head_at_to as usize];
            if !*slot {
                *slot = true;
                stack.push((s.to, s.head_at_to));
            }
        }
    }
    false
}

/// Every simple path from `a` to `b`, as the sequence of steps taken.
fn simple_paths<G: SeparationGraph + ?Sized>(g: &G, a: usize, b: usize) -> Vec<Vec<Step>> {
    fn extend<G: SeparationGraph + ?Sized>(
        g: &G,
        v: usize,
        b: usize,
        on_path: VertexSet,
        current: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
    ) {
        for s in steps(g, v) {
            if on_path.contains(s.to) {
                continue;
            }
            current.push(s);
            if s.to == b {
                out.push(current.clone());
            } else {
                extend(g, s.to, b, on_path.with(s.to), current, out);
            }
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(g, a, b, VertexSet::singleton(a), &mut Vec::new(), &mut out);
    out
}

/// Literal separation check on any mixed graph: enumerate every simple path
/// between `a` and `b` and require each to contain a collider outside
/// `An(c)` or a non-collider inside `c`. Exponential; meant for small graphs.
pub fn separated_bruteforce<G: SeparationGraph + ?Sized>(g: &G, a: usize, b: usize, c: VertexSet) -> bool {
    let an_c = g.ancestors(c);
    simple_paths(g, a, b).iter().all(|path| {
        path.windows(2).any(|w| {
            let v = w[0].to;
            let collider = w[0].head_at_to && w[1].head_at_from;
            if collider {
                !an_c.contains(v)
            } else {
                c.contains(v)
            }
        })
    })
}

/// Exhaustive-path d-separation oracle, by label.
pub fn d_separated_bruteforce(g: &Dag, a: &str, b: &str, c: &[&str]) -> Result<bool> {
    let (a, b, c) = statements::resolve_query(g, a, b, c)?;
    Ok(separated_bruteforce(g, a, b, c))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::Admg;
    use super::*;
    use crate::Error;

    #[test]
    fn chain_and_collider() {
        let g = chain();
        assert!(g.d_separated("A", "C", &["B"]).unwrap());
        assert!(!g.d_separated("A", "C", &[]).unwrap());
        assert!(!d_separated_bruteforce(&g, "A", "C", &[]).unwrap());
        let g = collider();
        assert!(!g.d_separated("A", "B", &["C"]).unwrap());
        assert!(g.d_separated("A", "B", &[]).unwrap());
    }

    #[test]
    fn example_one_graphs() {
        assert!(!triangle().d_separated("A", "C", &[]).unwrap());
        assert!(d_separated_bruteforce(&fork(), "A", "C", &["B"]).unwrap());
        assert!(!d_separated_bruteforce(&copied_cause(), "A", "C", &["B"]).unwrap());
        assert!(!copied_cause().d_separated("A", "C", &["B"]).unwrap());
        assert!(copied_cause().d_separated("A", "C", &["D"]).unwrap());
    }

    #[test]
    fn descendant_of_collider_opens() {
        let g = Dag::new(&["A", "B", "C", "D"], &[("A", "C"), ("B", "C"), ("C", "D")]).unwrap();
        assert!(!g.d_separated("A", "B", &["D"]).unwrap());
        assert!(!d_separated_bruteforce(&g, "A", "B", &["D"]).unwrap());
    }

    #[test]
    fn m_separation_basics() {
        let g = Admg::new(&["A", "B", "C"], &[], &[("A", "B")]).unwrap();
        assert!(g.m_separated("A", "C", &[]).unwrap());
        assert!(!g.m_separated("A", "B", &[]).unwrap());
        // A <-> B <-> C: B is a collider.
        let g = Admg::new(&["A", "B", "C"], &[], &[("A", "B"), ("B", "C")]).unwrap();
        assert!(g.m_separated("A", "C", &[]).unwrap());
        assert!(!g.m_separated("A", "C", &["B"]).unwrap());
        // A -> B <-> C
        let g = Admg::new(&["A", "B", "C"], &[("A", "B")], &[("B", "C")]).unwrap();
        assert!(g.m_separated("A", "C", &[]).unwrap());
        assert!(!g.m_separated("A", "C", &["B"]).unwrap());
    }

    #[test]
    fn query_validation() {
        let g = chain();
        assert!(matches!(g.d_separated("A", "Z", &[]), Err(Error::UnknownVertex(_))));
        assert!(matches!(g.d_separated("A", "A", &[]), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.d_separated("A", "C", &["A"]), Err(Error::InvalidArgument(_))));
    }
}
