//! Per-vertex (Markov) mixtures of two discrete networks, total-variation
//! distances, and the dependence polynomial along a mixture path.

mod polynomial;

use crate::discrete::{Cpt, DiscreteNetwork, Odometer, Table};
use crate::graph::VertexSet;
use crate::scalar::pow;
use crate::{Error, Result, Scalar};

pub use polynomial::Polynomial;

/// Width of the isolating interval [`InterpolationPath::lambda_star`] bisects down to: `2^-40`.
pub const ROOT_TOLERANCE_LOG2: u32 = 40;

/// Two networks over the same graph and state spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationPath<T> {
    p0: DiscreteNetwork<T>,
    p1: DiscreteNetwork<T>,
}

fn check_lambda<T: Scalar>(lambda: &T) -> Result<()> {
    if lambda.is_negative() || *lambda > T::one() {
        return Err(Error::InvalidArgument(format!("mixture weight {lambda:?} is outside [0, 1]")));
    }
    Ok(())
}

impl<T: Scalar> InterpolationPath<T> {
    pub fn new(p0: DiscreteNetwork<T>, p1: DiscreteNetwork<T>) -> Result<Self> {
        if p0.graph() != p1.graph() || p0.cards() != p1.cards() {
            return Err(Error::InvalidArgument("endpoints must share graph and cardinalities".into()));
        }
        let same_parents = p0.cpts().iter().zip(p1.cpts()).all(|(a, b)| a.parents == b.parents);
        if !same_parents {
            return Err(Error::InvalidArgument("endpoints order their table parents differently".into()));
        }
        Ok(InterpolationPath { p0, p1 })
    }

    pub fn start(&self) -> &DiscreteNetwork<T> {
        &self.p0
    }

    pub fn end(&self) -> &DiscreteNetwork<T> {
        &self.p1
    }

    pub fn vertex_count(&self) -> usize {
        self.p0.cards().len()
    }

    /// The network whose every table row is `(1 - lambda) * row0 + lambda * row1`.
    pub fn at(&self, lambda: &T) -> Result<DiscreteNetwork<T>> {
        check_lambda(lambda)?;
        let keep = T::one() - lambda.clone();
        let cpts = self
            .p0
            .cpts()
            .iter()
            .zip(self.p1.cpts())
            .map(|(c0, c1)| Cpt {
                parents: c0.parents.clone(),
                rows: c0
                    .rows
                    .iter()
                    .zip(&c1.rows)
                    .map(|(r0, r1)| {
                        r0.iter()
                            .zip(r1)
                            .map(|(x, y)| keep.clone() * x.clone() + lambda.clone() * y.clone())
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        DiscreteNetwork::new(self.p0.graph().clone(), self.p0.cards().to_vec(), cpts)
    }

    /// Joint probability of one configuration by the expansion over
    /// `alpha ∈ {0,1}^d`: `sum (1-l)^(d-|alpha|) l^|alpha| prod_v p_{alpha_v}(x_v | x_pa(v))`.
    /// Independent of [`InterpolationPath::at`]; used to cross-check it.
    pub fn expansion_probability(&self, lambda: &T, states: &[usize]) -> T {
        let d = self.vertex_count();
        let keep = T::one() - lambda.clone();
        let factor = |net: &DiscreteNetwork<T>, v: usize| {
            let cpt = net.cpt(v);
            let row = cpt.parents.iter().fold(0, |acc, &p| acc * net.cards()[p] + states[p]);
            cpt.rows[row][states[v]].clone()
        };
        let mut total = T::zero();
        for alpha in 0u64..1 << d {
            let ones = alpha.count_ones() as usize;
            let weight = pow(&keep, d - ones) * pow(lambda, ones);
            let product = (0..d).fold(T::one(), |acc, v| {
                let net = if alpha >> v & 1 == 1 { &self.p1 } else { &self.p0 };
                acc * factor(net, v)
            });
            total = total + weight * product;
        }
        total
    }

    /// Signed defect polynomials `q(l) = p_l(a,b,c) p_l(c) - p_l(a,c) p_l(b,c)`,
    /// one per cell of the `a ∪ b ∪ c` state space (cells in row-major order
    /// over that set's vertices in declaration order).
    ///
    /// Recovered from exact evaluations at `2|V| + 1` equally spaced weights,
    /// which determines a polynomial of degree at most `2|V|`.
    pub fn dependence_polynomials(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Vec<(Vec<usize>, Polynomial<T>)>> {
        let degree = 2 * self.vertex_count();
        let mut samples: Vec<(T, Vec<(Vec<usize>, T)>)> = Vec::with_capacity(degree + 1);
        for i in 0..=degree {
            let lambda = T::from_ratio(i as i64, degree.max(1) as i64);
            let cells = self.at(&lambda)?.joint().defect_cells(a, b, c)?;
            samples.push((lambda, cells));
        }
        let cells = samples[0].1.len();
        Ok((0..cells)
            .map(|k| {
                let points: Vec<(T, T)> = samples.iter().map(|(l, cs)| (l.clone(), cs[k].1.clone())).collect();
                (samples[0].1[k].0.clone(), Polynomial::interpolate(&points))
            })
            .collect())
    }

    /// Defect polynomial of a single cell; `cell` lists states of `a ∪ b ∪ c`
    /// in declaration order.
    pub fn dependence_polynomial(&self, a: VertexSet, b: VertexSet, c: VertexSet, cell: &[usize]) -> Result<Polynomial<T>> {
        let scope = a.union(b).union(c);
        if cell.len() != scope.len() || scope.iter().zip(cell).any(|(v, &s)| s >= self.p0.cards()[v]) {
            return Err(Error::InvalidArgument("cell does not address the state space of a ∪ b ∪ c".into()));
        }
        self.dependence_polynomials(a, b, c)?
            .into_iter()
            .find(|(states, _)| states == cell)
            .map(|(_, p)| p)
            .ok_or_else(|| Error::InvalidArgument("cell not found".into()))
    }

    /// Certified weight `l* ∈ (0, 1]` such that the dependence of `a` and `b`
    /// given `c` persists for every mixture weight in `(0, l*)`.
    ///
    /// Requires the start network to satisfy the independence and the end
    /// network to violate it. For each cell with a nonzero defect polynomial,
    /// the smallest root in `(0, 1]` is isolated by Sturm sequences and
    /// bisection; the result is the largest certified lower bound over cells.
    pub fn lambda_star(&self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<T> {
        if !self.p0.joint().ci_defect(a, b, c)?.is_zero() {
            return Err(Error::Precondition("start network must satisfy the independence".into()));
        }
        if self.p1.joint().ci_defect(a, b, c)?.is_zero() {
            return Err(Error::Precondition("end network must violate the independence".into()));
        }
        let tolerance = T::one() / pow(&T::from_ratio(2, 1), ROOT_TOLERANCE_LOG2 as usize);
        self.dependence_polynomials(a, b, c)?
            .into_iter()
            .filter_map(|(_, q)| q.smallest_positive_root_lower_bound(&T::one(), &tolerance))
            .reduce(|x, y| x.max_of(y))
            .ok_or_else(|| Error::DegeneratePath("every defect polynomial vanishes identically".into()))
    }

    /// `(lambda, d_TV(P_lambda, P_0))` for each grid weight.
    pub fn tv_convergence_profile(&self, grid: &[T]) -> Result<Vec<(T, T)>> {
        let start = self.p0.joint();
        grid.iter()
            .map(|l| Ok((l.clone(), self.at(l)?.joint().tv_distance(&start)?)))
            .collect()
    }
}

/// `1 - (1 - lambda)^d`: the mass carried by all mixed terms of the expansion,
/// an upper bound on `d_TV(P_lambda, P_0)` for a `d`-vertex path.
pub fn tv_bound<T: Scalar>(lambda: &T, vertices: usize) -> T {
    T::one() - pow(&(T::one() - lambda.clone()), vertices)
}

/// Cell-wise mixture of two joint tables (generally not Markov to the graph).
pub fn naive_mixture<T: Scalar>(t0: &Table<T>, t1: &Table<T>, lambda: &T) -> Result<Table<T>> {
    check_lambda(lambda)?;
    t0.mixture(t1, lambda)
}

pub fn tv_distance<T: Scalar>(t0: &Table<T>, t1: &Table<T>) -> Result<T> {
    t0.tv_distance(t1)
}

/// Total-variation distance between the joints of two networks; zero for
/// distinct tables that induce the same joint.
pub fn pseudo_distance<T: Scalar>(m0: &DiscreteNetwork<T>, m1: &DiscreteNetwork<T>) -> Result<T> {
    if m0.graph() != m1.graph() || m0.cards() != m1.cards() {
        return Err(Error::InvalidArgument("networks must share graph and cardinalities".into()));
    }
    m0.joint().tv_distance(&m1.joint())
}

/// All configurations of a network's state space, in joint-table order.
pub fn configurations(cards: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut odo = Odometer::new(cards);
    while let Some(s) = odo.next_state() {
        out.push(s.to_vec());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, Dag};
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn xy(x_row: [Rational; 2], y_rows: [[Rational; 2]; 2]) -> DiscreteNetwork<Rational> {
        let g = Dag::new(&["X", "Y"], &[("X", "Y")]).unwrap();
        DiscreteNetwork::new(
            g,
            vec![2, 2],
            vec![
                Cpt { parents: vec![], rows: vec![x_row.to_vec()] },
                Cpt { parents: vec![0], rows: y_rows.iter().map(|r| r.to_vec()).collect() },
            ],
        )
        .unwrap()
    }

    fn half() -> [Rational; 2] {
        [r(1, 2), r(1, 2)]
    }

    fn independent() -> DiscreteNetwork<Rational> {
        xy(half(), [half(), half()])
    }

    fn copy() -> DiscreteNetwork<Rational> {
        xy(half(), [[r(1, 1), r(0, 1)], [r(0, 1), r(1, 1)]])
    }

    fn flip() -> DiscreteNetwork<Rational> {
        xy(half(), [[r(0, 1), r(1, 1)], [r(1, 1), r(0, 1)]])
    }

    fn x() -> VertexSet {
        VertexSet::singleton(0)
    }

    fn y() -> VertexSet {
        VertexSet::singleton(1)
    }

    #[test]
    fn endpoints_and_midpoint() {
        let path = InterpolationPath::new(copy(), flip()).unwrap();
        assert_eq!(path.at(&r(0, 1)).unwrap(), copy());
        assert_eq!(path.at(&r(1, 1)).unwrap(), flip());
        let mid = path.at(&r(1, 2)).unwrap().joint();
        assert!(mid.probabilities().iter().all(|p| *p == r(1, 4)));
        assert_eq!(mid.ci_defect(x(), y(), VertexSet::EMPTY).unwrap(), r(0, 1));
        assert!(path.at(&r(3, 2)).is_err());
    }

    #[test]
    fn distances() {
        let (p0, p1) = (copy().joint(), flip().joint());
        assert_eq!(tv_distance(&p0, &p0).unwrap(), r(0, 1));
        assert_eq!(tv_distance(&p0, &p1).unwrap(), r(1, 1));
        let path = InterpolationPath::new(copy(), flip()).unwrap();
        let profile = path.tv_convergence_profile(&[r(0, 1), r(1, 4), r(1, 2), r(1, 1)]).unwrap();
        let tvs: Vec<_> = profile.into_iter().map(|(_, t)| t).collect();
        assert_eq!(tvs, [r(0, 1), r(1, 4), r(1, 2), r(1, 1)]);
        assert_eq!(pseudo_distance(&copy(), &flip()).unwrap(), r(1, 1));
        assert_eq!(pseudo_distance(&copy(), &copy()).unwrap(), r(0, 1));
    }

    #[test]
    fn pseudo_distance_ignores_unreachable_rows() {
        // X is always 0, so the Y row for X = 1 never matters.
        let a = xy([r(1, 1), r(0, 1)], [[r(1, 3), r(2, 3)], half()]);
        let b = xy([r(1, 1), r(0, 1)], [[r(1, 3), r(2, 3)], [r(1, 1), r(0, 1)]]);
        assert_ne!(a, b);
        assert_eq!(pseudo_distance(&a, &b).unwrap(), r(0, 1));
    }

    #[test]
    fn dependence_polynomials_in_closed_form() {
        let cell = [0, 0];
        let path = InterpolationPath::new(independent(), copy()).unwrap();
        let q = path.dependence_polynomial(x(), y(), VertexSet::EMPTY, &cell).unwrap();
        assert_eq!(q.coefficients(), &[r(0, 1), r(1, 4)]);
        let path = InterpolationPath::new(copy(), flip()).unwrap();
        let q = path.dependence_polynomial(x(), y(), VertexSet::EMPTY, &cell).unwrap();
        assert_eq!(q.coefficients(), &[r(1, 4), r(-1, 2)]);
        assert_eq!(q.eval(&r(1, 2)), r(0, 1));
        let same = InterpolationPath::new(independent(), independent()).unwrap();
        assert!(same.dependence_polynomial(x(), y(), VertexSet::EMPTY, &cell).unwrap().is_zero());
        assert!(path.dependence_polynomial(x(), y(), VertexSet::EMPTY, &[0, 2]).is_err());
    }

    #[test]
    fn lambda_star_cases() {
        let path = InterpolationPath::new(independent(), copy()).unwrap();
        assert_eq!(path.lambda_star(x(), y(), VertexSet::EMPTY).unwrap(), r(1, 1));
        let swapped = InterpolationPath::new(copy(), independent()).unwrap();
        assert!(matches!(swapped.lambda_star(x(), y(), VertexSet::EMPTY), Err(Error::Precondition(_))));
    }

    #[test]
    fn lambda_star_isolates_interior_root() {
        // X pinned to 0 with Y := X, towards a fair X with Y := 1 - X.
        // Independent at l = 0 (X is constant); q(l) = (l/2)(1 - l/2)(1 - 2l).
        let pinned = xy([r(1, 1), r(0, 1)], [[r(1, 1), r(0, 1)], [r(0, 1), r(1, 1)]]);
        let path = InterpolationPath::new(pinned, flip()).unwrap();
        let q = path.dependence_polynomial(x(), y(), VertexSet::EMPTY, &[0, 0]).unwrap();
        let expected = Polynomial::new(vec![r(0, 1), r(1, 2)])
            * Polynomial::new(vec![r(1, 1), r(-1, 2)])
            * Polynomial::new(vec![r(1, 1), r(-2, 1)]);
        assert_eq!(q, expected);
        let bound = path.lambda_star(x(), y(), VertexSet::EMPTY).unwrap();
        assert!(bound < r(1, 2));
        assert!(r(1, 2) - bound <= r(1, 1 << 40));
    }

    #[test]
    fn expansion_matches_direct_joint() {
        let g = fixtures::triangle();
        let p0 = crate::discrete::sample_parameters::<Rational>(&g, &[2, 3, 2], 1, 50).unwrap();
        let p1 = crate::discrete::sample_parameters::<Rational>(&g, &[2, 3, 2], 2, 50).unwrap();
        let path = InterpolationPath::new(p0, p1).unwrap();
        for l in [r(1, 4), r(1, 3), r(1, 2)] {
            let joint = path.at(&l).unwrap().joint();
            for (k, states) in configurations(&[2, 3, 2]).iter().enumerate() {
                assert_eq!(joint.probabilities()[k], path.expansion_probability(&l, states));
            }
        }
    }

    #[test]
    fn mismatched_endpoints() {
        let other = crate::discrete::sample_parameters::<Rational>(&fixtures::chain(), &[2, 2, 2], 0, 10).unwrap();
        assert!(InterpolationPath::new(copy(), other).is_err());
    }
}
