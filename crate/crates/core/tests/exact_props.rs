mod common;

use dominator::exact::{gamma_exact, independence_number_exact, is_ab_dominating, DEFAULT_NODE_LIMIT};
use dominator::generators::gnp;
use dominator::turan::{build_aux, guaranteed_independent, Strategy, StrategyKind};
use dominator::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gamma(g: &Graph, a: usize, b: usize) -> Option<usize> {
    gamma_exact(g, a, b, DEFAULT_NODE_LIMIT).unwrap().size()
}

/// Smallest optimal set in lexicographic order of sorted vertex lists.
fn brute_first_witness(g: &Graph, a: usize, b: usize) -> Option<Vec<usize>> {
    let size = common::brute_gamma(g, a, b)?;
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != size {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_ab_dominating(g, &set, a, b).unwrap() && best.as_ref().is_none_or(|w| set < *w) {
            best = Some(set);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_monotone_in_a_and_b(seed in any::<u64>(), n in 2usize..=12, p in 0.3f64..0.95) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        for a in 1..=3 {
            for b in 1..=3 {
                let here = gamma(&g, a, b);
                if let (Some(x), Some(y)) = (here, gamma(&g, a + 1, b)) {
                    prop_assert!(x <= y, "a: {} -> {}", x, y);
                }
                if let (Some(x), Some(y)) = (here, gamma(&g, a, b + 1)) {
                    prop_assert!(x <= y, "b: {} -> {}", x, y);
                }
            }
        }
    }

    #[test]
    fn witness_is_verified_and_lexicographically_first(seed in any::<u64>(), n in 1usize..=10, p in 0.2f64..0.9) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let outcome = gamma_exact(&g, a, b, DEFAULT_NODE_LIMIT).unwrap();
            let expected = brute_first_witness(&g, a, b);
            match outcome {
                dominator::GammaOutcome::Optimal { witness, .. } => {
                    prop_assert!(is_ab_dominating(&g, &witness, a, b).unwrap());
                    prop_assert_eq!(Some(witness), expected);
                }
                dominator::GammaOutcome::Infeasible => prop_assert_eq!(expected, None),
            }
        }
    }
}

#[test]
fn feasibility_on_the_corpus() {
    for case in common::small_corpus() {
        let g = &case.graph;
        let delta = g.min_degree().unwrap();
        for a in 1..=4 {
            for b in 1..=4 {
                let found = gamma(g, a, b);
                if delta >= a {
                    assert!(found.is_some(), "{} ({a},{b})", case.name);
                }
                if g.n() <= 16 {
                    assert_eq!(found, common::brute_gamma(g, a, b), "{} ({a},{b})", case.name);
                }
            }
        }
    }
}

#[test]
fn exact_independence_meets_caro_wei_on_aux_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let kinds = [
        StrategyKind::Tt22Min3,
        StrategyKind::Tt22Min4,
        StrategyKind::KkClique { k: 2 },
        StrategyKind::KkMatching { k: 2 },
        StrategyKind::KkPartition { k: 3, d: 1 },
        StrategyKind::AbGeneral { a: 1, b: 2 },
    ];
    for round in 0..10 {
        for kind in &kinds {
            let n = rng.random_range(12..=30);
            let g = common::random_min_degree(n, kind.required_degree(), &mut rng);
            let aux = build_aux(&g, &Strategy::new(kind.clone())).unwrap();
            assert!(aux.within_budget(), "{kind} round {round}");
            let (alpha, set) = independence_number_exact(&aux.to_graph()).unwrap();
            assert!(aux.is_independent(&set));
            let floor = guaranteed_independent(n, aux.edge_budget);
            assert!(alpha >= floor, "{kind} round {round}: alpha(G')={alpha} < {floor}");
        }
    }
}
