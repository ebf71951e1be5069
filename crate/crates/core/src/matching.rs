//! Perfect matchings: exact for bipartite graphs, randomized search otherwise.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{ordered, Edge, Graph, Vertex};

/// Attempts made by the randomized search on non-bipartite graphs.
pub const DEFAULT_MATCHING_ATTEMPTS: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingOutcome {
    /// A perfect matching, edges as `(u, v)` with `u < v`, sorted.
    Found(Vec<Edge>),
    /// Proven that no perfect matching exists.
    Nonexistent,
    /// The randomized search gave up; a perfect matching may still exist.
    NotFound,
}

impl MatchingOutcome {
    pub fn edges(&self) -> Option<&[Edge]> {
        match self {
            MatchingOutcome::Found(e) => Some(e),
            _ => None,
        }
    }
}

pub fn find_perfect_matching(g: &Graph, seed: u64) -> MatchingOutcome {
    let n = g.n();
    if n % 2 == 1 || (0..n).any(|v| g.degree(v) == 0) {
        return MatchingOutcome::Nonexistent;
    }
    match g.bipartition() {
        Some(side) => bipartite_matching(g, &side),
        None => randomized_matching(g, seed, DEFAULT_MATCHING_ATTEMPTS),
    }
}

fn collect(mate: &[Option<Vertex>]) -> Vec<Edge> {
    let mut edges: Vec<Edge> = mate
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| ordered(v, u)))
        .collect();
    edges.sort_unstable();
    edges
}

/// Kuhn's augmenting-path algorithm from the `false` side.
fn bipartite_matching(g: &Graph, side: &[bool]) -> MatchingOutcome {
    let n = g.n();
    let mut mate: Vec<Option<Vertex>> = vec![None; n];
    for root in (0..n).filter(|&v| !side[v]) {
        let mut visited = vec![false; n];
        if !augment(g, root, &mut mate, &mut visited) {
            return MatchingOutcome::Nonexistent;
        }
    }
    if mate.iter().any(Option::is_none) {
        return MatchingOutcome::Nonexistent;
    }
    MatchingOutcome::Found(collect(&mate))
}

fn augment(g: &Graph, u: Vertex, mate: &mut [Option<Vertex>], visited: &mut [bool]) -> bool {
    for &w in g.neighbors(u) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        let free = match mate[w] {
            None => true,
            Some(x) => augment(g, x, mate, visited),
        };
        if free {
            mate[w] = Some(u);
            mate[u] = Some(w);
            return true;
        }
    }
    false
}

/// Random greedy maximal matching followed by length-3 augmentations
/// `u - x = y - w  ->  u = x - y = w`, restarted up to `attempts` times.
fn randomized_matching(g: &Graph, seed: u64, attempts: u32) -> MatchingOutcome {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    for _ in 0..attempts {
        order.shuffle(&mut rng);
        let mut mate: Vec<Option<Vertex>> = vec![None; n];
        for &u in &order {
            if mate[u].is_some() {
                continue;
            }
            let mut options: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| mate[w].is_none()).collect();
            options.shuffle(&mut rng);
            if let Some(&w) = options.first() {
                mate[u] = Some(w);
                mate[w] = Some(u);
            }
        }
        let mut improved = true;
        while improved {
            improved = false;
            for &u in &order {
                if mate[u].is_some() {
                    continue;
                }
                'search: for &x in g.neighbors(u) {
                    let Some(y) = mate[x] else {
                        mate[u] = Some(x);
                        mate[x] = Some(u);
                        improved = true;
                        break 'search;
                    };
                    for &w in g.neighbors(y) {
                        if w != u && w != x && mate[w].is_none() {
                            mate[u] = Some(x);
                            mate[x] = Some(u);
                            mate[y] = Some(w);
                            mate[w] = Some(y);
                            improved = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if mate.iter().all(Option::is_some) {
            return MatchingOutcome::Found(collect(&mate));
        }
    }
    MatchingOutcome::NotFound
}

/// True iff `edges` is a perfect matching of `g`.
pub fn is_perfect_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut covered = vec![false; g.n()];
    for &(u, v) in edges {
        if !g.has_edge(u, v) || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, heawood, petersen};

    #[test]
    fn cycle_four() {
        let g = cycle(4).unwrap();
        let m = find_perfect_matching(&g, 0);
        let edges = m.edges().unwrap();
        assert!(is_perfect_matching(&g, edges));
        assert!(edges == [(0, 1), (2, 3)] || edges == [(0, 3), (1, 2)]);
    }

    #[test]
    fn star_has_none() {
        assert_eq!(find_perfect_matching(&complete_bipartite(1, 3), 0), MatchingOutcome::Nonexistent);
        assert_eq!(find_perfect_matching(&complete_bipartite(2, 4), 0), MatchingOutcome::Nonexistent);
        assert_eq!(find_perfect_matching(&complete(3), 0), MatchingOutcome::Nonexistent);
    }

    #[test]
    fn heawood_has_seven_edges() {
        let g = heawood();
        let m = find_perfect_matching(&g, 0);
        let edges = m.edges().unwrap();
        assert_eq!(edges.len(), 7);
        assert!(is_perfect_matching(&g, edges));
    }

    #[test]
    fn non_bipartite() {
        for g in [petersen(), complete(6), cycle(6).unwrap()] {
            let m = find_perfect_matching(&g, 9);
            assert!(is_perfect_matching(&g, m.edges().unwrap()));
        }
        // two disjoint triangles: odd components, search cannot succeed
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(find_perfect_matching(&g, 1), MatchingOutcome::NotFound);
    }
}
