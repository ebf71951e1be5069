//! Deterministic generators for the named graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::StructureHint;
use crate::graph::{ordered, Edge, Graph};

/// Default number of whole restarts the pairing model may take.
pub const DEFAULT_RESTART_CAP: u32 = 10_000;

/// Random stub picks tried before a partial pairing is declared stuck.
const PICKS_PER_STEP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("q={0} is not prime")]
    QNotPrime(u64),
    #[error("infeasible degree: n={n}, r={r} (need n*r even and r < n)")]
    InfeasibleDegree { n: usize, r: usize },
    #[error("configuration model exceeded {0} restarts")]
    RetryLimit(u32),
    #[error("a seed is required for random generation")]
    MissingSeed,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Heawood,
    Petersen,
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    ProjectiveIncidence { q: u64 },
    RandomRegular { n: usize, r: usize },
}

impl GraphKind {
    /// Structural facts known from the construction itself.
    pub fn structure_hint(&self) -> StructureHint {
        match *self {
            GraphKind::Heawood => StructureHint {
                heawood: true,
                projective_incidence: true,
                moore: false,
            },
            GraphKind::Petersen => StructureHint {
                moore: true,
                ..StructureHint::default()
            },
            GraphKind::Cycle { n } => StructureHint {
                moore: n == 5,
                ..StructureHint::default()
            },
            GraphKind::ProjectiveIncidence { q } => StructureHint {
                heawood: q == 2,
                projective_incidence: true,
                moore: false,
            },
            _ => StructureHint::default(),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, GraphKind::RandomRegular { .. })
    }
}

pub fn generate(kind: GraphKind, seed: Option<u64>) -> Result<Graph, GenerateError> {
    match kind {
        GraphKind::Heawood => Ok(heawood()),
        GraphKind::Petersen => Ok(petersen()),
        GraphKind::Cycle { n } => cycle(n),
        GraphKind::Complete { n } => Ok(complete(n)),
        GraphKind::CompleteBipartite { s, t } => Ok(complete_bipartite(s, t)),
        GraphKind::ProjectiveIncidence { q } => projective_incidence(q),
        GraphKind::RandomRegular { n, r } => {
            let seed = seed.ok_or(GenerateError::MissingSeed)?;
            random_regular(n, r, seed, DEFAULT_RESTART_CAP)
        }
    }
}

/// Heawood graph as the LCF notation [5,-5]^7: a 14-cycle plus chords.
pub fn heawood() -> Graph {
    let n = 14;
    let mut edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).step_by(2).map(|i| (i, (i + 5) % n)));
    Graph::from_edges(n, edges).expect("static edge list")
}

/// Outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| ordered(i, (i + 1) % n))).expect("cycle"))
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph")
}

/// Parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let edges = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
    Graph::from_edges(s + t, edges).expect("complete bipartite graph")
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Canonical representatives of the 1-dimensional subspaces of Z_q^3: the first
/// nonzero coordinate is 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if v.iter().find(|&&c| c != 0) == Some(&1) {
                    points.push(v);
                }
            }
        }
    }
    points
}

/// Point/line incidence graph of PG(2,q) for prime q. Points are vertices
/// `0..m`, lines are `m..2m` with `m = q^2+q+1`. A line is the kernel of a
/// linear form, so point `p` lies on line `l` iff `p . l = 0 (mod q)`.
pub fn projective_incidence(q: u64) -> Result<Graph, GenerateError> {
    if !is_prime(q) {
        return Err(GenerateError::QNotPrime(q));
    }
    let points = projective_points(q);
    let m = points.len();
    let mut edges = Vec::with_capacity(m * (q as usize + 1));
    for (pi, p) in points.iter().enumerate() {
        for (li, l) in points.iter().enumerate() {
            let dot: u64 = p.iter().zip(l).map(|(a, b)| a * b).sum();
            if dot.is_multiple_of(q) {
                edges.push((pi, m + li));
            }
        }
    }
    Ok(Graph::from_edges(2 * m, edges).expect("incidence graph"))
}

/// Uniform-ish random r-regular graph from a stub pairing.
///
/// Stubs are paired one random pair at a time; a pick that would create a loop
/// or a repeated edge is redrawn, and a pairing that gets stuck is thrown away
/// whole. Fully determined by `seed`.
pub fn random_regular(
    n: usize,
    r: usize,
    seed: u64,
    restart_cap: u32,
) -> Result<Graph, GenerateError> {
    if r >= n.max(1) || (n * r) % 2 == 1 {
        return Err(GenerateError::InfeasibleDegree { n, r });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restart_cap {
        if let Some(edges) = try_pairing(n, r, &mut rng) {
            return Ok(Graph::from_edges(n, edges).expect("pairing produced a simple graph"));
        }
    }
    Err(GenerateError::RetryLimit(restart_cap))
}

fn try_pairing(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Edge>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    stubs.shuffle(rng);
    let mut adj = vec![Vec::with_capacity(r); n];
    let mut edges = Vec::with_capacity(n * r / 2);
    while !stubs.is_empty() {
        let mut placed = false;
        for _ in 0..PICKS_PER_STEP {
            let i = rng.random_range(0..stubs.len());
            let j = rng.random_range(0..stubs.len());
            let (u, v) = (stubs[i], stubs[j]);
            if i == j || u == v || adj[u].contains(&v) {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push(ordered(u, v));
            let (hi, lo) = if i > j { (i, j) } else { (j, i) };
            stubs.swap_remove(hi);
            stubs.swap_remove(lo);
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    Some(edges)
}

/// G(n, p) random graph. Not one of the named families; used to build test
/// corpora of irregular graphs.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("gnp edges are simple")
}
