//! Verification of (a,b)-dominating sets and exact oracles for small graphs.
//!
//! A set `S` is (a,b)-dominating when every member has at least `a` neighbors
//! in `S` and every non-member has at least `b` neighbors in `S`.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Default cap on branch-and-bound tree nodes.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

/// Largest graph the bitmask independence oracle accepts.
pub const MAX_MIS_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("a and b must be positive (got a={a}, b={b})")]
    NonPositiveParameter { a: usize, b: usize },
    #[error("node limit {limit} exceeded (best size found: {incumbent:?})")]
    BudgetExceeded { limit: u64, incumbent: Option<usize> },
    #[error("graph has {0} vertices; the exact independence oracle handles at most 128")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("set is not ({a},{b})-dominating")]
    NotDominating { a: usize, b: usize },
    #[error("set has {size} vertices, above the claimed bound {allowed}")]
    BoundExceeded { size: usize, allowed: usize },
}

/// True iff `set` is (a,b)-dominating in `g`. Duplicate entries are ignored.
pub fn is_ab_dominating(g: &Graph, set: &[Vertex], a: usize, b: usize) -> Result<bool, ExactError> {
    if a == 0 || b == 0 {
        return Err(ExactError::NonPositiveParameter { a, b });
    }
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(ExactError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        member[v] = true;
    }
    Ok(is_dominating_mask(g, &member, a, b))
}

pub(crate) fn is_dominating_mask(g: &Graph, member: &[bool], a: usize, b: usize) -> bool {
    (0..g.n()).all(|v| {
        let inside = g.neighbors(v).iter().filter(|&&u| member[u]).count();
        inside >= if member[v] { a } else { b }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Turan,
    Lll,
    External,
}

fn serialize_ratio<S: Serializer>(r: &Option<Ratio<u64>>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        None => s.serialize_none(),
        Some(r) => [*r.numer(), *r.denom()].serialize(s),
    }
}

/// A vertex set together with the parameters and bound it was checked against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub set: Vec<Vertex>,
    pub a: usize,
    pub b: usize,
    pub verified: bool,
    /// Bound as a fraction of `n`, serialized as `[num, den]`.
    #[serde(serialize_with = "serialize_ratio")]
    pub claimed_bound: Option<Ratio<u64>>,
    pub method: Method,
}

impl DominationCertificate {
    /// Checks `set` against `g` and, when a bound is given, against
    /// `|S| <= ceil(bound * n)`. Only successful checks produce a certificate.
    pub fn issue(
        g: &Graph,
        mut set: Vec<Vertex>,
        a: usize,
        b: usize,
        claimed_bound: Option<Ratio<u64>>,
        method: Method,
    ) -> Result<Self, CertificateError> {
        set.sort_unstable();
        set.dedup();
        if !is_ab_dominating(g, &set, a, b)? {
            return Err(CertificateError::NotDominating { a, b });
        }
        if let Some(bound) = claimed_bound {
            let allowed = (bound * g.n() as u64).ceil().to_integer() as usize;
            if set.len() > allowed {
                return Err(CertificateError::BoundExceeded {
                    size: set.len(),
                    allowed,
                });
            }
        }
        Ok(Self {
            set,
            a,
            b,
            verified: true,
            claimed_bound,
            method,
        })
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn claimed_bound_f64(&self) -> Option<f64> {
        self.claimed_bound.and_then(|r| r.to_f64())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaOutcome {
    Optimal { size: usize, witness: Vec<Vertex> },
    /// No (a,b)-dominating set exists.
    Infeasible,
}

impl GammaOutcome {
    pub fn size(&self) -> Option<usize> {
        match self {
            GammaOutcome::Optimal { size, .. } => Some(*size),
            GammaOutcome::Infeasible => None,
        }
    }
}

const UNDECIDED: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct GammaSearch<'g> {
    g: &'g Graph,
    a: usize,
    b: usize,
    state: Vec<u8>,
    in_count: Vec<usize>,
    open_count: Vec<usize>,
    size: usize,
    best: Option<(usize, Vec<u8>)>,
    nodes: u64,
    limit: u64,
}

impl GammaSearch<'_> {
    fn need(&self, v: Vertex) -> usize {
        match self.state[v] {
            IN => self.a,
            OUT => self.b,
            _ => self.a.min(self.b),
        }
    }

    fn can_reach(&self, v: Vertex) -> bool {
        self.in_count[v] + self.open_count[v] >= self.need(v)
    }

    fn lower_bound(&self) -> usize {
        let deficit = (0..self.g.n())
            .map(|v| self.need(v).saturating_sub(self.in_count[v]))
            .max()
            .unwrap_or(0);
        self.size + deficit
    }

    fn assign(&mut self, v: Vertex, s: u8) {
        self.state[v] = s;
        for &u in self.g.neighbors(v) {
            self.open_count[u] -= 1;
            if s == IN {
                self.in_count[u] += 1;
            }
        }
        if s == IN {
            self.size += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let s = self.state[v];
        for &u in self.g.neighbors(v) {
            self.open_count[u] += 1;
            if s == IN {
                self.in_count[u] -= 1;
            }
        }
        if s == IN {
            self.size -= 1;
        }
        self.state[v] = UNDECIDED;
    }

    fn consistent_around(&self, v: Vertex) -> bool {
        self.can_reach(v) && self.g.neighbors(v).iter().all(|&u| self.can_reach(u))
    }

    fn search(&mut self, depth: usize) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(());
        }
        if let Some((best, _)) = &self.best {
            if self.lower_bound() >= *best {
                return Ok(());
            }
        }
        if depth == self.g.n() {
            self.best = Some((self.size, self.state.clone()));
            return Ok(());
        }
        for s in [IN, OUT] {
            self.assign(depth, s);
            if self.consistent_around(depth) {
                let r = self.search(depth + 1);
                if r.is_err() {
                    self.unassign(depth);
                    return r;
                }
            }
            self.unassign(depth);
        }
        Ok(())
    }
}

/// Minimum size of an (a,b)-dominating set by branch and bound.
///
/// Vertices are decided in index order, "include" before "exclude", and only
/// strict improvements replace the incumbent, so the witness is the
/// lexicographically first optimal set in that order.
pub fn gamma_exact(g: &Graph, a: usize, b: usize, node_limit: u64) -> Result<GammaOutcome, ExactError> {
    if a == 0 || b == 0 {
        return Err(ExactError::NonPositiveParameter { a, b });
    }
    let n = g.n();
    let mut search = GammaSearch {
        g,
        a,
        b,
        state: vec![UNDECIDED; n],
        in_count: vec![0; n],
        open_count: (0..n).map(|v| g.degree(v)).collect(),
        size: 0,
        best: None,
        nodes: 0,
        limit: node_limit,
    };
    if (0..n).any(|v| !search.can_reach(v)) {
        return Ok(GammaOutcome::Infeasible);
    }
    // S = V works exactly when every vertex has a neighbors.
    if g.min_degree().unwrap_or(a) >= a {
        search.best = Some((n, vec![IN; n]));
    }
    if search.search(0).is_err() {
        return Err(ExactError::BudgetExceeded {
            limit: node_limit,
            incumbent: search.best.map(|(s, _)| s),
        });
    }
    Ok(match search.best {
        None => GammaOutcome::Infeasible,
        Some((size, state)) => {
            let witness: Vec<Vertex> = (0..n).filter(|&v| state[v] == IN).collect();
            debug_assert!(is_ab_dominating(g, &witness, a, b).unwrap());
            GammaOutcome::Optimal { size, witness }
        }
    })
}

/// Maximum independent set by branching on a highest-degree vertex.
pub fn independence_number_exact(g: &Graph) -> Result<(usize, Vec<Vertex>), ExactError> {
    let n = g.n();
    if n > MAX_MIS_VERTICES {
        return Err(ExactError::TooLarge(n));
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | (1 << u)))
        .collect();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = (0u128, 0u32);
    mis_branch(&adj, all, 0, &mut best);
    let witness: Vec<Vertex> = (0..n).filter(|&v| best.0 >> v & 1 == 1).collect();
    Ok((witness.len(), witness))
}

fn mis_branch(adj: &[u128], open: u128, chosen: u128, best: &mut (u128, u32)) {
    let have = chosen.count_ones();
    if have + open.count_ones() <= best.1 {
        return;
    }
    let mut pick: Option<(u32, usize)> = None;
    let mut rest = open;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & open).count_ones();
        if pick.is_none_or(|(bd, _)| d > bd) {
            pick = Some((d, v));
        }
    }
    match pick {
        None => {
            *best = (chosen, have);
        }
        Some((0, _)) => {
            // everything left is isolated
            let all = chosen | open;
            *best = (all, all.count_ones());
        }
        Some((_, v)) => {
            mis_branch(adj, open & !(1 << v) & !adj[v], chosen | (1 << v), best);
            mis_branch(adj, open & !(1 << v), chosen, best);
        }
    }
}
