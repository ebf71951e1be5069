//! Shared corpus and oracles for the integration tests.
#![allow(dead_code)]

use dominator::bounds::StructureHint;
use dominator::generators::{
    complete, complete_bipartite, cycle, gnp, heawood, petersen, projective_incidence, random_regular, GraphKind,
    DEFAULT_RESTART_CAP,
};
use dominator::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub name: String,
    pub graph: Graph,
    pub hint: StructureHint,
}

impl Case {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
            hint: StructureHint::default(),
        }
    }

    fn tagged(name: impl Into<String>, kind: GraphKind, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
            hint: kind.structure_hint(),
        }
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Named families plus seeded random graphs, all on at most 20 vertices.
pub fn small_corpus() -> Vec<Case> {
    let mut cases = vec![
        Case::tagged("heawood", GraphKind::Heawood, heawood()),
        Case::tagged("petersen", GraphKind::Petersen, petersen()),
        Case::tagged(
            "pg2",
            GraphKind::ProjectiveIncidence { q: 2 },
            projective_incidence(2).unwrap(),
        ),
    ];
    for n in 3..=12 {
        cases.push(Case::tagged(format!("c{n}"), GraphKind::Cycle { n }, cycle(n).unwrap()));
    }
    for n in 2..=8 {
        cases.push(Case::new(format!("k{n}"), complete(n)));
    }
    for (s, t) in [(1, 3), (2, 2), (2, 5), (3, 3), (3, 5), (4, 4), (5, 5)] {
        cases.push(Case::new(format!("k{s},{t}"), complete_bipartite(s, t)));
    }
    for n in [2, 5, 9] {
        cases.push(Case::new(format!("p{n}"), path(n)));
    }
    for (i, (n, r)) in [(8, 3), (10, 3), (12, 4), (16, 3), (16, 5), (18, 4), (20, 3), (20, 6)]
        .into_iter()
        .enumerate()
    {
        let g = random_regular(n, r, 100 + i as u64, DEFAULT_RESTART_CAP).unwrap();
        cases.push(Case::new(format!("rr{n},{r}#{i}"), g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..16 {
        let n = rng.random_range(5..=16);
        let p = rng.random_range(0.25..0.7);
        cases.push(Case::new(format!("gnp{n}#{i}"), gnp(n, p, &mut rng)));
    }
    cases
}

/// Seeded graph on `n` vertices with minimum degree at least `min_degree`:
/// a sparse G(n, p) whose deficient vertices get extra random neighbors.
pub fn random_min_degree(n: usize, min_degree: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p = rng.random_range(0.02..0.15);
    let base = gnp(n, p, rng);
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| base.neighbors(v).to_vec()).collect();
    for v in 0..n {
        while adj[v].len() < min_degree {
            let u = rng.random_range(0..n);
            if u != v && !adj[v].contains(&u) {
                adj[v].push(u);
                adj[u].push(v);
                edges.push((v.min(u), v.max(u)));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Minimum (a,b)-dominating set size by enumerating all 2^n subsets.
pub fn brute_gamma(g: &Graph, a: usize, b: usize) -> Option<usize> {
    let n = g.n();
    assert!(n <= 16, "brute force is for tiny graphs");
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|v| {
                let inside = (masks[v] & s).count_ones() as usize;
                if s >> v & 1 == 1 {
                    inside >= a
                } else {
                    inside >= b
                }
            })
        })
        .map(|s| s.count_ones() as usize)
        .min()
}
