//! Auxiliary-graph constructions.
//!
//! Each strategy adds a small gadget of edges per vertex `v` of `G`, drawn among
//! `v`'s neighbors (and, for `a < b`, edges at `v` itself), so that every
//! independent set `A` of the resulting graph `G'` leaves `V \ A`
//! (a,b)-dominating in `G`. A graph with at most `alpha * n` edges has an
//! independent set of size at least `n / (2 alpha + 1)`, which turns the
//! gadget budget `alpha` into the bound `2 alpha / (2 alpha + 1) * n`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_rational::Ratio;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{independence_number_exact, CertificateError, DominationCertificate, ExactError, Method};
use crate::graph::{ordered, Edge, Graph, Vertex};
use crate::matching::{find_perfect_matching, MatchingOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TuranError {
    #[error("vertex {vertex} has degree {degree}, strategy needs at least {required}")]
    DegreeTooSmall { vertex: Vertex, degree: usize, required: usize },
    #[error("only {have} vertices have degree >= 4, strategy needs {need}")]
    TooFewHighDegree { have: usize, need: usize },
    #[error("invalid strategy parameters: {0}")]
    InvalidParameters(String),
    #[error("vertex {vertex}: not enough neighbors outside the paired set for the incident edges")]
    NotEnoughDistinctEndpoints { vertex: Vertex },
    #[error("no spanning subgraph supplied: {0}")]
    MissingSpanningSubgraph(String),
    #[error("spanning subgraph rejected: {0}")]
    InvalidSpanningSubgraph(String),
    #[error("complement of the independent set failed verification: {0}")]
    VerificationFailed(CertificateError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyKind {
    /// Triangle on 3 neighbors; (2,2), needs degree 3.
    Tt22Min3,
    /// Two disjoint edges on 4 neighbors; (2,2), needs degree 4.
    Tt22Min4,
    /// Clique on k+1 neighbors; (k,k).
    KkClique { k: usize },
    /// k disjoint edges on 2k neighbors; (k,k).
    KkMatching { k: usize },
    /// k+1+d neighbors split into d+1 near-equal cliques; (k,k).
    KkPartition { k: usize, d: usize },
    /// Triangle at degree-3 vertices, two disjoint edges elsewhere; (2,2).
    Tt22Mixed,
    /// a disjoint pairs among neighbors plus b-a edges at the vertex.
    AbGeneral { a: usize, b: usize },
    /// As `AbGeneral`, with the edges at each vertex taken from a
    /// (b-a)-regular spanning subgraph. When `b - a = 1` and no subgraph is
    /// given, a perfect matching is searched for.
    AbSpanning { a: usize, b: usize, subgraph: Option<Graph> },
}

impl StrategyKind {
    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::Tt22Min3 => "tt22_min3",
            StrategyKind::Tt22Min4 => "tt22_min4",
            StrategyKind::KkClique { .. } => "kk_clique",
            StrategyKind::KkMatching { .. } => "kk_matching",
            StrategyKind::KkPartition { .. } => "kk_partition",
            StrategyKind::Tt22Mixed => "tt22_mixed",
            StrategyKind::AbGeneral { .. } => "ab_general",
            StrategyKind::AbSpanning { .. } => "ab_spanning",
        }
    }

    /// The (a,b) pair the construction dominates for.
    pub fn params(&self) -> (usize, usize) {
        match *self {
            StrategyKind::Tt22Min3 | StrategyKind::Tt22Min4 | StrategyKind::Tt22Mixed => (2, 2),
            StrategyKind::KkClique { k } | StrategyKind::KkMatching { k } | StrategyKind::KkPartition { k, .. } => {
                (k, k)
            }
            StrategyKind::AbGeneral { a, b } | StrategyKind::AbSpanning { a, b, .. } => (a, b),
        }
    }

    /// Minimum degree the construction needs.
    pub fn required_degree(&self) -> usize {
        match *self {
            StrategyKind::Tt22Min3 | StrategyKind::Tt22Mixed => 3,
            StrategyKind::Tt22Min4 => 4,
            StrategyKind::KkClique { k } => k + 1,
            StrategyKind::KkMatching { k } => 2 * k,
            StrategyKind::KkPartition { k, d } => k + 1 + d,
            StrategyKind::AbGeneral { a, b } | StrategyKind::AbSpanning { a, b, .. } => a + b,
        }
    }

    /// Edge budget per vertex, counted with multiplicity.
    pub fn budget(&self) -> Ratio<u64> {
        let r = |x: usize| Ratio::from_integer(x as u64);
        match *self {
            StrategyKind::Tt22Min3 => r(3),
            StrategyKind::Tt22Min4 => r(2),
            StrategyKind::KkClique { k } => r(k * (k + 1) / 2),
            StrategyKind::KkMatching { k } => r(k),
            StrategyKind::KkPartition { k, d } => r(part_sizes(k + 1 + d, d + 1).iter().map(|&p| binomial(p, 2)).sum()),
            StrategyKind::Tt22Mixed => Ratio::new(5, 2),
            StrategyKind::AbGeneral { b, .. } => r(b),
            StrategyKind::AbSpanning { a, b, .. } => Ratio::new((a + b) as u64, 2),
        }
    }

    fn validate(&self) -> Result<(), TuranError> {
        let bad = |m: String| Err(TuranError::InvalidParameters(m));
        match *self {
            StrategyKind::KkClique { k } | StrategyKind::KkMatching { k } if k == 0 => bad("k must be >= 1".into()),
            StrategyKind::KkPartition { k, d } if k == 0 || d >= k => {
                bad(format!("kk_partition needs k >= 1 and 0 <= d <= k-1 (got k={k}, d={d})"))
            }
            StrategyKind::AbGeneral { a, b } | StrategyKind::AbSpanning { a, b, .. } if a == 0 || a >= b => {
                bad(format!("need 1 <= a < b (got a={a}, b={b})"))
            }
            _ => Ok(()),
        }
    }
}

/// Sizes of `parts` blocks covering `m` items, differing by at most one,
/// larger blocks first.
pub fn part_sizes(m: usize, parts: usize) -> Vec<usize> {
    (0..parts).map(|i| m / parts + usize::from(i < m % parts)).collect()
}

/// The per-vertex edge count `k(k+d+1)/(2d+2)` obtained by subtracting the
/// Turán-graph edge estimate from `C(k+1+d, 2)`. It is exact only when `d+1`
/// divides `k+1+d`; otherwise the balanced partition has more edges.
pub fn partition_turan_estimate(k: usize, d: usize) -> Ratio<u64> {
    Ratio::new((k * (k + d + 1)) as u64, (2 * d + 2) as u64)
}

/// The closed form `(2d+(k-d)(k-d+1)) / (2d+(k-d)(k-d+1)+1)` stated for the
/// partition construction; reported next to the certified bound.
pub fn partition_stated_bound(k: usize, d: usize) -> Ratio<u64> {
    let top = (2 * d + (k - d) * (k - d + 1)) as u64;
    Ratio::new(top, top + 1)
}

/// Bound `2 alpha / (2 alpha + 1)` on the dominating fraction.
pub fn bound_from_budget(alpha: Ratio<u64>) -> Ratio<u64> {
    let two = Ratio::from_integer(2);
    two * alpha / (two * alpha + Ratio::from_integer(1))
}

/// `ceil(n / (2 alpha + 1))`, the guaranteed independent set size.
pub fn guaranteed_independent(n: usize, alpha: Ratio<u64>) -> usize {
    (Ratio::from_integer(n as u64) / (Ratio::from_integer(2) * alpha + Ratio::from_integer(1)))
        .ceil()
        .to_integer() as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Chooser {
    #[default]
    LowestIndex,
    SeededRandom(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strategy {
    pub kind: StrategyKind,
    pub chooser: Chooser,
}

impl Strategy {
    pub fn new(kind: StrategyKind) -> Self {
        Self {
            kind,
            chooser: Chooser::LowestIndex,
        }
    }

    pub fn with_chooser(mut self, chooser: Chooser) -> Self {
        self.chooser = chooser;
        self
    }
}

/// Strategy names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyName {
    Tt22Min3,
    Tt22Min4,
    KkClique,
    KkMatching,
    KkPartition,
    Tt22Mixed,
    AbGeneral,
    AbSpanning,
}

impl FromStr for StrategyName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.replace('-', "_").as_str() {
            "tt22_min3" => Self::Tt22Min3,
            "tt22_min4" => Self::Tt22Min4,
            "kk_clique" => Self::KkClique,
            "kk_matching" => Self::KkMatching,
            "kk_partition" => Self::KkPartition,
            "tt22_mixed" => Self::Tt22Mixed,
            "ab_general" => Self::AbGeneral,
            "ab_spanning" => Self::AbSpanning,
            other => return Err(format!("unknown strategy '{other}'")),
        })
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyKind::KkClique { k } | StrategyKind::KkMatching { k } => write!(f, "{}(k={k})", self.name()),
            StrategyKind::KkPartition { k, d } => write!(f, "{}(k={k},d={d})", self.name()),
            StrategyKind::AbGeneral { a, b } | StrategyKind::AbSpanning { a, b, .. } => {
                write!(f, "{}(a={a},b={b})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

/// The derived graph `G'` over the vertex set of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub base_n: usize,
    /// Distinct edges, multiplicities collapsed.
    pub aux_edges: BTreeSet<Edge>,
    /// Edges added on behalf of each base vertex. A shared spanning-subgraph
    /// edge is logged once, under its smaller endpoint.
    pub gadget_log: Vec<Vec<Edge>>,
    /// Per-vertex budget: the construction adds at most `edge_budget * n`
    /// edges counted with multiplicity.
    pub edge_budget: Ratio<u64>,
    pub a: usize,
    pub b: usize,
}

impl AuxGraph {
    pub fn edge_count_with_multiplicity(&self) -> usize {
        self.gadget_log.iter().map(Vec::len).sum()
    }

    /// `|contributed edges| <= alpha * n`, with multiplicity.
    pub fn within_budget(&self) -> bool {
        Ratio::from_integer(self.edge_count_with_multiplicity() as u64)
            <= self.edge_budget * Ratio::from_integer(self.base_n as u64)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.base_n, self.aux_edges.iter().copied()).expect("aux edges are simple")
    }

    /// True iff no aux edge joins two members of `set`.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        let members: HashSet<Vertex> = set.iter().copied().collect();
        self.aux_edges
            .iter()
            .all(|(u, v)| !(members.contains(u) && members.contains(v)))
    }
}

struct NeighborPicker {
    rng: Option<ChaCha8Rng>,
}

impl NeighborPicker {
    fn new(chooser: Chooser) -> Self {
        Self {
            rng: match chooser {
                Chooser::LowestIndex => None,
                Chooser::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            },
        }
    }

    /// `count` vertices out of `pool`: the first ones, or a random sample in
    /// random order.
    fn pick(&mut self, pool: &[Vertex], count: usize) -> Vec<Vertex> {
        debug_assert!(pool.len() >= count);
        match &mut self.rng {
            None => pool[..count].to_vec(),
            Some(rng) => {
                let mut chosen: Vec<Vertex> = pool.choose_multiple(rng, count).copied().collect();
                chosen.shuffle(rng);
                chosen
            }
        }
    }
}

fn clique(vs: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &u)| vs[i + 1..].iter().map(move |&w| ordered(u, w)))
}

fn pairs(vs: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    vs.chunks_exact(2).map(|p| ordered(p[0], p[1]))
}

fn resolve_spanning(g: &Graph, a: usize, b: usize, supplied: &Option<Graph>, seed: u64) -> Result<Graph, TuranError> {
    let need = b - a;
    let sub = match supplied {
        Some(s) => s.clone(),
        None if need == 1 => match find_perfect_matching(g, seed) {
            MatchingOutcome::Found(edges) => Graph::from_edges(g.n(), edges).expect("matching edges are simple"),
            MatchingOutcome::Nonexistent => {
                return Err(TuranError::MissingSpanningSubgraph("graph has no perfect matching".into()))
            }
            MatchingOutcome::NotFound => {
                return Err(TuranError::MissingSpanningSubgraph(
                    "randomized search found no perfect matching".into(),
                ))
            }
        },
        None => {
            return Err(TuranError::MissingSpanningSubgraph(format!(
                "a {need}-regular spanning subgraph must be supplied"
            )))
        }
    };
    if sub.n() != g.n() {
        return Err(TuranError::InvalidSpanningSubgraph(format!(
            "has {} vertices, graph has {}",
            sub.n(),
            g.n()
        )));
    }
    if let Some(v) = (0..sub.n()).find(|&v| sub.degree(v) != need) {
        return Err(TuranError::InvalidSpanningSubgraph(format!(
            "vertex {v} has degree {} instead of {need}",
            sub.degree(v)
        )));
    }
    if let Some((u, v)) = sub.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(TuranError::InvalidSpanningSubgraph(format!("edge {{{u},{v}}} is not in the graph")));
    }
    Ok(sub)
}

/// Builds `G'` for the strategy.
pub fn build_aux(g: &Graph, strategy: &Strategy) -> Result<AuxGraph, TuranError> {
    let kind = &strategy.kind;
    kind.validate()?;
    let n = g.n();
    let required = kind.required_degree();
    if let Some(v) = (0..n).find(|&v| g.degree(v) < required) {
        return Err(TuranError::DegreeTooSmall {
            vertex: v,
            degree: g.degree(v),
            required,
        });
    }
    if *kind == StrategyKind::Tt22Mixed {
        let have = (0..n).filter(|&v| g.degree(v) >= 4).count();
        let need = n.div_ceil(2);
        if have < need {
            return Err(TuranError::TooFewHighDegree { have, need });
        }
    }

    let spanning = match kind {
        StrategyKind::AbSpanning { a, b, subgraph } => {
            let seed = match strategy.chooser {
                Chooser::SeededRandom(s) => s,
                Chooser::LowestIndex => 0,
            };
            Some(resolve_spanning(g, *a, *b, subgraph, seed)?)
        }
        _ => None,
    };

    let mut picker = NeighborPicker::new(strategy.chooser);
    let mut gadget_log: Vec<Vec<Edge>> = vec![Vec::new(); n];
    for (v, log) in gadget_log.iter_mut().enumerate() {
        let nbrs = g.neighbors(v);
        match *kind {
            StrategyKind::Tt22Min3 => log.extend(clique(&picker.pick(nbrs, 3))),
            StrategyKind::Tt22Min4 => log.extend(pairs(&picker.pick(nbrs, 4))),
            StrategyKind::KkClique { k } => log.extend(clique(&picker.pick(nbrs, k + 1))),
            StrategyKind::KkMatching { k } => log.extend(pairs(&picker.pick(nbrs, 2 * k))),
            StrategyKind::KkPartition { k, d } => {
                let chosen = picker.pick(nbrs, k + 1 + d);
                let mut rest = chosen.as_slice();
                for size in part_sizes(k + 1 + d, d + 1) {
                    let (part, tail) = rest.split_at(size);
                    log.extend(clique(part));
                    rest = tail;
                }
            }
            StrategyKind::Tt22Mixed => {
                if nbrs.len() == 3 {
                    log.extend(clique(&picker.pick(nbrs, 3)));
                } else {
                    log.extend(pairs(&picker.pick(nbrs, 4)));
                }
            }
            StrategyKind::AbGeneral { a, b } => {
                let paired = picker.pick(nbrs, 2 * a);
                log.extend(pairs(&paired));
                let incident: Vec<Edge> = nbrs
                    .iter()
                    .filter(|u| !paired.contains(u))
                    .take(b - a)
                    .map(|&u| ordered(v, u))
                    .collect();
                if incident.len() < b - a {
                    return Err(TuranError::NotEnoughDistinctEndpoints { vertex: v });
                }
                log.extend(incident);
            }
            StrategyKind::AbSpanning { a, .. } => {
                let sub = spanning.as_ref().expect("resolved above");
                let own = sub.neighbors(v);
                let pool: Vec<Vertex> = nbrs.iter().copied().filter(|u| !own.contains(u)).collect();
                if pool.len() < 2 * a {
                    return Err(TuranError::NotEnoughDistinctEndpoints { vertex: v });
                }
                log.extend(pairs(&picker.pick(&pool, 2 * a)));
                log.extend(own.iter().filter(|&&u| v < u).map(|&u| (v, u)));
            }
        }
    }

    let aux_edges: BTreeSet<Edge> = gadget_log.iter().flatten().copied().collect();
    let (a, b) = kind.params();
    Ok(AuxGraph {
        base_n: n,
        aux_edges,
        gadget_log,
        edge_budget: kind.budget(),
        a,
        b,
    })
}

/// Min-degree greedy: take a vertex of least remaining degree (lowest index on
/// ties), drop it and its neighbors, repeat. Yields at least
/// `sum_v 1/(deg(v)+1)` vertices.
pub fn greedy_independent_set(h: &AuxGraph) -> Vec<Vertex> {
    let g = h.to_graph();
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut chosen = Vec::new();
    while let Some((_, v)) = queue.pop_first() {
        chosen.push(v);
        alive[v] = false;
        let removed: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
        for &u in &removed {
            alive[u] = false;
            queue.remove(&(degree[u], u));
        }
        for &u in &removed {
            for &w in g.neighbors(u) {
                if alive[w] {
                    queue.remove(&(degree[w], w));
                    degree[w] -= 1;
                    queue.insert((degree[w], w));
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extractor {
    #[default]
    Greedy,
    /// Maximum independent set of `G'`; at most 128 vertices.
    Exact,
}

/// Everything a Turán run produced.
#[derive(Debug, Clone)]
pub struct TuranRun {
    pub certificate: DominationCertificate,
    pub aux: AuxGraph,
    pub independent: Vec<Vertex>,
}

/// `V \ A` for an independent set `A` of `G'`, verified and checked against
/// `|S| <= n - ceil(n / (2 alpha + 1))`.
pub fn turan_run(g: &Graph, strategy: &Strategy, extractor: Extractor) -> Result<TuranRun, TuranError> {
    let aux = build_aux(g, strategy)?;
    debug_assert!(aux.within_budget());
    let independent = match extractor {
        Extractor::Greedy => greedy_independent_set(&aux),
        Extractor::Exact => independence_number_exact(&aux.to_graph())?.1,
    };
    let n = g.n();
    let mut in_a = vec![false; n];
    for &v in &independent {
        in_a[v] = true;
    }
    let set: Vec<Vertex> = (0..n).filter(|&v| !in_a[v]).collect();
    let guaranteed_max = n - guaranteed_independent(n, aux.edge_budget);
    let bound = bound_from_budget(aux.edge_budget);
    let certificate = DominationCertificate::issue(g, set, aux.a, aux.b, Some(bound), Method::Turan)
        .map_err(TuranError::VerificationFailed)?;
    if certificate.size() > guaranteed_max {
        return Err(TuranError::VerificationFailed(CertificateError::BoundExceeded {
            size: certificate.size(),
            allowed: guaranteed_max,
        }));
    }
    Ok(TuranRun {
        certificate,
        aux,
        independent,
    })
}

pub fn turan_dominating_set(g: &Graph, strategy: &Strategy) -> Result<DominationCertificate, TuranError> {
    turan_run(g, strategy, Extractor::Greedy).map(|r| r.certificate)
}
