use dominator::exact::is_ab_dominating;
use dominator::generators::{random_regular, DEFAULT_RESTART_CAP};
use dominator::lll::{
    e_upper, failure_prob, is_good_at, lll_condition, minimal_colors, moser_tardos, Coloring, LllParams,
};
use dominator::Graph;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn class_complement(c: &Coloring, x: u32) -> Vec<usize> {
    (0..c.colors.len()).filter(|&v| c.colors[v] != x).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Whenever a coloring is good everywhere, removing any one class leaves
    /// a dominating set, not only the largest one.
    #[test]
    fn goodness_is_sound_for_every_class(
        seed in any::<u64>(),
        n in 4usize..=24,
        colors in 2u32..=4,
        a in 1usize..=2,
        b in 1usize..=2,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dominator::generators::gnp(n, rng.random_range(0.4..0.95), &mut rng);
        let c = Coloring::new((0..n).map(|_| rng.random_range(0..colors)).collect(), colors).unwrap();
        if (0..n).all(|v| is_good_at(&g, &c, v, a, b)) {
            for x in 0..colors {
                prop_assert!(is_ab_dominating(&g, &class_complement(&c, x), a, b).unwrap());
            }
        }
    }

    #[test]
    fn resampling_output_is_good(seed in any::<u64>(), n in 8usize..=30, colors in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = dominator::generators::gnp(n, 0.8, &mut rng);
        if let Ok(run) = moser_tardos(&g, colors, 1, 1, seed, 2000) {
            prop_assert!((0..n).all(|v| is_good_at(&g, &run.coloring, v, 1, 1)));
            for x in 0..colors {
                prop_assert!(is_ab_dominating(&g, &class_complement(&run.coloring, x), 1, 1).unwrap());
            }
        }
    }
}

#[test]
fn failure_prob_non_increasing_in_delta() {
    for colors in 2..=6 {
        for a in 1..=3 {
            for b in 1..=3 {
                let start = a.max(b);
                let mut prev: Option<BigRational> = None;
                for delta in start..=30 {
                    // a union bound, so it may exceed 1 for small delta
                    let p = failure_prob(delta, colors, a, b).unwrap();
                    if let Some(q) = &prev {
                        assert!(p <= *q, "N={colors} a={a} b={b} delta={delta}");
                    }
                    prev = Some(p);
                }
            }
        }
    }
}

#[test]
fn minimal_colors_non_decreasing_in_max_degree() {
    for delta in 2..=16 {
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 3)] {
            if a > delta || b > delta {
                continue;
            }
            let mut prev = Some(0);
            for max_delta in delta..=delta + 10 {
                let report = minimal_colors(LllParams { delta, max_delta, a, b }, 64);
                match (prev, report.minimal_n) {
                    (Some(p), Some(n)) => assert!(n >= p, "({delta},{max_delta},{a},{b})"),
                    (None, Some(_)) => panic!("({delta},{max_delta},{a},{b}) became feasible"),
                    _ => {}
                }
                prev = report.minimal_n;
            }
        }
    }
}

#[test]
fn minimal_colors_is_tight() {
    for delta in 3..=16 {
        for max_delta in delta..=delta + 4 {
            for (a, b) in [(1, 2), (2, 1), (2, 2)] {
                let params = LllParams { delta, max_delta, a, b };
                let report = minimal_colors(params, 64);
                let Some(n) = report.minimal_n else { continue };
                let value = report.condition_value.unwrap();
                assert!(value <= BigRational::one());
                assert_eq!(lll_condition(&failure_prob(delta, n, a, b).unwrap(), max_delta).1, value);
                assert!(value >= BigRational::from_integer(0.into()));
                if n > 2 {
                    let below = failure_prob(delta, n - 1, a, b).unwrap();
                    assert!(!lll_condition(&below, max_delta).0, "{params:?}");
                }
            }
        }
    }
    assert!(e_upper() > BigRational::new(2718281828u64.into(), 1_000_000_000u64.into()));
}

fn regular(n: usize, r: usize, seed: u64) -> Graph {
    random_regular(n, r, seed, DEFAULT_RESTART_CAP).unwrap()
}

#[test]
fn resampling_terminates_well_within_budget() {
    let n = 100;
    let mut counts = Vec::new();
    for seed in 0..20 {
        let g = regular(n, 7, seed);
        let run = moser_tardos(&g, 4, 2, 2, seed, 50 * n as u64).unwrap();
        counts.push(run.resamples);
    }
    // far below 50n in practice; allow generous slack
    assert!(counts.iter().all(|&c| c < 5 * n as u64), "{counts:?}");
}

#[test]
fn dense_rows_resample_to_good_colorings() {
    let g = regular(200, 14, 1);
    let run = moser_tardos(&g, 2, 2, 2, 3, 50 * 200).unwrap();
    assert!((0..200).all(|v| is_good_at(&g, &run.coloring, v, 2, 2)));
    let g = regular(60, 9, 2);
    let run = moser_tardos(&g, 3, 2, 2, 4, 50 * 60).unwrap();
    assert!((0..60).all(|v| is_good_at(&g, &run.coloring, v, 2, 2)));
}

#[test]
fn resampling_is_reproducible() {
    let g = regular(100, 7, 1);
    assert_eq!(
        moser_tardos(&g, 4, 2, 2, 2, 5000).unwrap(),
        moser_tardos(&g, 4, 2, 2, 2, 5000).unwrap()
    );
}

#[test]
fn random_regular_is_deterministic_and_regular() {
    for (n, r) in [(20, 7), (100, 7), (200, 14), (31, 4)] {
        let g = regular(n, r, 1);
        assert_eq!(g.degree_profile().unwrap().regular_degree, Some(r));
        assert_eq!(g, regular(n, r, 1));
    }
}
