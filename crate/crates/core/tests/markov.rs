use faithlab::discrete::sample_parameters;
use faithlab::gaussian::sample_parameters_gaussian;
use faithlab::graph::random_dag;
use faithlab::interpolate::tv_distance;
use faithlab::rng::seeded;
use faithlab::{JointTable, Rational, Scalar, SeparationGraph, VertexSet};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn disjoint_triples(n: usize, rng: &mut impl Rng) -> (VertexSet, VertexSet, VertexSet) {
    let mut sets = [VertexSet::EMPTY; 4];
    for v in 0..n {
        sets[rng.gen_range(0..4)].insert(v);
    }
    (sets[0], sets[1], sets[2])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discrete_networks_are_exactly_markov(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = seeded(seed);
        let g = random_dag(n, 0.5, &mut rng).unwrap();
        let cards: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
        let bn = sample_parameters::<Rational>(&g, &cards, rng.gen(), 1000).unwrap();
        prop_assert!(bn.joint().is_normalized());
        prop_assert!(bn.check_faithful().unwrap().markov_violations.is_empty());
    }

    #[test]
    fn gaussian_networks_are_exactly_markov(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = seeded(seed);
        let g = random_dag(n, 0.5, &mut rng).unwrap();
        let bn = sample_parameters_gaussian::<Rational>(&g, rng.gen(), 1000).unwrap();
        let cov = bn.covariance();
        prop_assert!(cov.is_symmetric() && cov.is_positive_definite());
        prop_assert!(bn.check_faithful().unwrap().markov_violations.is_empty());
    }

    #[test]
    fn set_level_separation_gives_set_level_independence(seed in any::<u64>(), n in 3usize..=5) {
        let mut rng = seeded(seed);
        let g = random_dag(n, 0.5, &mut rng).unwrap();
        let bn = sample_parameters::<Rational>(&g, &vec![2; n], rng.gen(), 1000).unwrap();
        let gbn = sample_parameters_gaussian::<Rational>(&g, rng.gen(), 1000).unwrap();
        let joint = bn.joint();
        for _ in 0..10 {
            let (a, b, c) = disjoint_triples(n, &mut rng);
            if a.is_empty() || b.is_empty() || !g.sets_separated(a, b, c) {
                continue;
            }
            prop_assert!(joint.ci_defect(a, b, c).unwrap().is_zero());
            prop_assert!(gbn.ci_defect(a, b, c).unwrap().is_zero());
        }
    }

    #[test]
    fn defect_is_four_lipschitz_in_total_variation(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = seeded(seed);
        let g = random_dag(n, 0.5, &mut rng).unwrap();
        let cards = vec![2; n];
        let p = sample_parameters::<Rational>(&g, &cards, rng.gen(), 50).unwrap().joint();
        let q = sample_parameters::<Rational>(&g, &cards, rng.gen(), 50).unwrap().joint();
        let tv = tv_distance(&p, &q).unwrap();
        let (a, b, c) = disjoint_triples(n, &mut rng);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let gap = (p.ci_defect(a, b, c).unwrap() - q.ci_defect(a, b, c).unwrap()).abs();
        prop_assert!(gap <= Rational::from_count(4) * tv);
    }

    #[test]
    fn marginalization_is_consistent(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = seeded(seed);
        let g = random_dag(n, 0.5, &mut rng).unwrap();
        let cards: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
        let joint: JointTable = sample_parameters(&g, &cards, rng.gen(), 100).unwrap().joint();
        let outer: VertexSet = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        let inner: VertexSet = outer.iter().filter(|_| rng.gen_bool(0.5)).collect();
        let direct = joint.marginal(inner).unwrap();
        prop_assert_eq!(joint.marginal(outer).unwrap().marginal(inner).unwrap(), direct.clone());
        prop_assert!(direct.is_normalized());

        let gbn = sample_parameters_gaussian::<Rational>(&g, rng.gen(), 100).unwrap();
        let cov = gbn.covariance();
        prop_assert_eq!(cov.restrict(outer).unwrap().restrict(inner).unwrap(), cov.restrict(inner).unwrap());
    }
}

#[test]
fn float_and_rational_defects_agree() {
    let mut rng = seeded(7);
    let g = random_dag(4, 0.6, &mut rng).unwrap();
    let seed = rng.gen();
    let exact = sample_parameters::<Rational>(&g, &[2, 2, 3, 2], seed, 1000).unwrap().joint();
    let float = sample_parameters::<f64>(&g, &[2, 2, 3, 2], seed, 1000).unwrap().joint();
    let (a, b, c) = (VertexSet::singleton(0), VertexSet::singleton(3), VertexSet::singleton(1));
    let e = exact.ci_defect(a, b, c).unwrap().to_f64();
    let f = float.ci_defect(a, b, c).unwrap();
    assert!((e - f).abs() < 1e-12);
}
