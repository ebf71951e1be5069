mod common;

use dominator::generators::gnp;
use dominator::io::{parse_edge_list, parse_graph, parse_graph6, write_edge_list, write_graph6, GraphFormat};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(seed in any::<u64>(), n in 0usize..=30, p in 0.0f64..=1.0) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&text, None).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 1usize..=30, p in 0.0f64..=1.0) {
        let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&text, Some(GraphFormat::EdgeList)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graph6_long_header_round_trip(seed in any::<u64>(), n in 63usize..=140) {
        let g = gnp(n, 0.1, &mut ChaCha8Rng::seed_from_u64(seed));
        let text = write_graph6(&g);
        prop_assert!(text.starts_with('~'));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

#[test]
fn corpus_round_trips_in_both_formats() {
    for case in common::small_corpus() {
        let g = &case.graph;
        assert_eq!(&parse_graph6(&write_graph6(g)).unwrap(), g, "{}", case.name);
        assert_eq!(&parse_edge_list(&write_edge_list(g)).unwrap(), g, "{}", case.name);
    }
}
