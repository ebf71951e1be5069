//! Closed-form upper bounds from prior work, and a side-by-side comparison
//! with the constructive and exact methods.

use std::collections::BTreeMap;

use num_integer::binomial;
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{gamma_exact, ExactError, GammaOutcome, DEFAULT_NODE_LIMIT};
use crate::graph::{DegreeProfile, Graph};
use crate::lll::{minimal_colors, LllParams, DEFAULT_MAX_COLORS};
use crate::turan::{bound_from_budget, turan_run, Chooser, Extractor, Strategy, StrategyKind};

/// Largest graph `compare_all` hands to the exact solver.
pub const EXACT_COMPARE_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("k={k} out of range: {reason}")]
    KOutOfRange { k: usize, reason: String },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// Facts about a graph that this crate does not decide on its own; supplied
/// by generators or asserted by the user.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct StructureHint {
    /// The graph is the Heawood graph.
    pub heawood: bool,
    /// Incidence graph of a projective plane of order r-1.
    pub projective_incidence: bool,
    /// Moore graph of degree r and diameter 2.
    pub moore: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    HenningYeo,
    Chang,
    Kaz,
    AliProjective,
    AliMoore,
    Turan,
    Lll,
    Exact,
}

impl BoundMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundMethod::HenningYeo => "henning_yeo",
            BoundMethod::Chang => "chang",
            BoundMethod::Kaz => "kaz",
            BoundMethod::AliProjective => "ali_projective",
            BoundMethod::AliMoore => "ali_moore",
            BoundMethod::Turan => "turan",
            BoundMethod::Lll => "lll",
            BoundMethod::Exact => "exact",
        }
    }

    /// Closed-form comparators, as opposed to sizes of sets actually built.
    pub fn is_closed_form(&self) -> bool {
        !matches!(self, BoundMethod::Turan | BoundMethod::Exact)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub method: BoundMethod,
    /// Method plus variant, e.g. `turan:tt22_min3`.
    pub label: String,
    pub a: usize,
    pub b: usize,
    pub applicable: bool,
    pub reason: Option<String>,
    /// Upper bound on the domination number, in vertices.
    pub value: Option<f64>,
    /// The bound as a fraction of n, when it has that form.
    #[serde(skip)]
    pub fraction: Option<Ratio<u64>>,
    /// The value is the exact domination number.
    pub equality: bool,
    /// The value exceeds n.
    pub vacuous: bool,
    pub parameters: BTreeMap<String, String>,
    /// Local-lemma details, for the shared table schema.
    #[serde(skip)]
    pub lll: Option<LllDetail>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LllDetail {
    pub params: LllParams,
    pub minimal_n: u32,
    pub p: BigRational,
    pub condition_value: BigRational,
}

impl BoundReport {
    fn new(method: BoundMethod, label: impl Into<String>, a: usize, b: usize) -> Self {
        Self {
            method,
            label: label.into(),
            a,
            b,
            applicable: false,
            reason: None,
            value: None,
            fraction: None,
            equality: false,
            vacuous: false,
            parameters: BTreeMap::new(),
            lll: None,
        }
    }

    fn with_value(mut self, n: usize, value: f64) -> Self {
        self.applicable = true;
        self.value = Some(value);
        self.vacuous = value > n as f64;
        self
    }

    fn with_fraction(self, n: usize, fraction: Ratio<u64>) -> Self {
        let value = (fraction * n as u64).to_f64().unwrap_or(f64::NAN);
        let mut r = self.with_value(n, value);
        r.fraction = Some(fraction);
        r
    }

    fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.applicable = false;
        self.value = None;
        self.fraction = None;
        self.reason = Some(reason.into());
        self
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn note(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }

    /// Largest set size the bound permits. The slack absorbs float noise on
    /// integral values such as `11/13 * 13`.
    pub fn ceil_value(&self) -> Option<usize> {
        self.value.map(|v| (v - 1e-9).ceil().max(0.0) as usize)
    }
}

/// Rounds to 12 significant digits.
fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// `(1/n) sum_v C(d(v) + shift, m)` as an exact rational.
fn mean_binomial(g: &Graph, shift: usize, m: usize) -> Ratio<u64> {
    let total: u64 = (0..g.n()).map(|v| binomial((g.degree(v) + shift) as u64, m as u64)).sum();
    Ratio::new(total, g.n() as u64)
}

/// `n (ln(delta-k+2) + ln d~_{k-1} + 1) / (delta-k+2)` with
/// `d~_m = (1/n) sum C(d(v)+1, m)`, bounding the (k-1,k) number.
pub fn bound_chang(g: &Graph, k: usize) -> Result<BoundReport, BoundError> {
    let delta = g.min_degree().ok_or(BoundError::EmptyGraph)?;
    if k == 0 || k > delta + 1 {
        return Err(BoundError::KOutOfRange {
            k,
            reason: format!("need 1 <= k <= delta+1 = {}", delta + 1),
        });
    }
    let d_tilde = mean_binomial(g, 1, k - 1);
    assert!(d_tilde >= Ratio::from_integer(1), "mean binomial below 1 with k-1 <= delta");
    let slack = (delta + 2 - k) as f64;
    let value = g.n() as f64 * (slack.ln() + d_tilde.to_f64().unwrap().ln() + 1.0) / slack;
    Ok(BoundReport::new(BoundMethod::Chang, "chang", k.saturating_sub(1), k)
        .with_value(g.n(), sig12(value))
        .param("k", k)
        .param("d_tilde", d_tilde))
}

/// `n (ln(delta-k) + ln d^_k + 1) / (delta-k)` with `d^_m = (1/n) sum C(d(v), m)`,
/// bounding the (k,k) number.
pub fn bound_kaz(g: &Graph, k: usize) -> Result<BoundReport, BoundError> {
    let delta = g.min_degree().ok_or(BoundError::EmptyGraph)?;
    if k == 0 || delta <= k {
        return Err(BoundError::KOutOfRange {
            k,
            reason: format!("need delta > k >= 1 (delta={delta})"),
        });
    }
    let d_hat = mean_binomial(g, 0, k);
    let slack = (delta - k) as f64;
    let value = g.n() as f64 * (slack.ln() + d_hat.to_f64().unwrap().ln() + 1.0) / slack;
    Ok(BoundReport::new(BoundMethod::Kaz, "kaz", k, k)
        .with_value(g.n(), sig12(value))
        .param("k", k)
        .param("d_hat", d_hat))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedBound {
    HenningYeo,
    AliProjective,
    AliMoore,
}

/// Degree-only bounds. Whether the graph is the Heawood graph, a projective
/// plane incidence graph or a Moore graph comes from `hint`.
pub fn bound_fixed(
    profile: &DegreeProfile,
    n: usize,
    which: FixedBound,
    hint: StructureHint,
) -> Result<BoundReport, BoundError> {
    match which {
        FixedBound::HenningYeo => {
            if profile.min_degree < 3 {
                return Err(BoundError::NotApplicable(format!(
                    "needs delta >= 3, got {}",
                    profile.min_degree
                )));
            }
            let r = BoundReport::new(BoundMethod::HenningYeo, "henning_yeo", 2, 2);
            if hint.heawood {
                let mut r = r.with_value(n, 12.0).note("Heawood graph: exact value 12");
                r.equality = true;
                Ok(r)
            } else {
                Ok(r.with_fraction(n, Ratio::new(11, 13)).note("assumes G is connected and not the Heawood graph"))
            }
        }
        FixedBound::AliProjective => {
            let r = regular_degree(profile)?;
            if r < 3 {
                return Err(BoundError::NotApplicable(format!("needs r >= 3, got r={r}")));
            }
            let q = (r * (r - 1)) as u64;
            let rep = BoundReport::new(BoundMethod::AliProjective, "ali_projective", r - 1, r - 1).param("r", r);
            if hint.projective_incidence {
                let mut rep = rep
                    .with_value(n, (2 * r * (r - 1)) as f64)
                    .note("projective plane incidence graph: exact value 2r(r-1)");
                rep.fraction = Some(Ratio::new(q, q + 1));
                rep.equality = true;
                Ok(rep)
            } else {
                Ok(rep
                    .with_fraction(n, Ratio::new(q - 1, q))
                    .note("assumes G is not a projective plane incidence graph"))
            }
        }
        FixedBound::AliMoore => {
            let r = regular_degree(profile)?;
            if r < 2 {
                return Err(BoundError::NotApplicable(format!("needs r >= 2, got r={r}")));
            }
            let sq = (r * r) as u64;
            let rep = BoundReport::new(BoundMethod::AliMoore, "ali_moore", r - 1, r).param("r", r);
            if hint.moore {
                let mut rep = rep.with_value(n, sq as f64).note("Moore graph: exact value r^2");
                rep.fraction = Some(Ratio::new(sq, sq + 1));
                rep.equality = true;
                Ok(rep)
            } else {
                Ok(rep
                    .with_fraction(n, Ratio::new(sq - 1, sq))
                    .note("assumes G is not a Moore graph of diameter 2"))
            }
        }
    }
}

fn regular_degree(profile: &DegreeProfile) -> Result<usize, BoundError> {
    profile
        .regular_degree
        .ok_or_else(|| BoundError::NotApplicable("graph is not regular".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareOptions {
    pub hint: StructureHint,
    pub node_limit: u64,
    pub max_colors: u32,
    pub chooser: Chooser,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self {
            hint: StructureHint::default(),
            node_limit: DEFAULT_NODE_LIMIT,
            max_colors: DEFAULT_MAX_COLORS,
            chooser: Chooser::LowestIndex,
        }
    }
}

/// Turán strategies whose (a,b) matches.
pub fn matching_strategies(a: usize, b: usize) -> Vec<StrategyKind> {
    let mut out = Vec::new();
    if a == b {
        if a == 2 {
            out.extend([StrategyKind::Tt22Min3, StrategyKind::Tt22Min4, StrategyKind::Tt22Mixed]);
        }
        out.push(StrategyKind::KkClique { k: a });
        out.push(StrategyKind::KkMatching { k: a });
        out.extend((1..a).map(|d| StrategyKind::KkPartition { k: a, d }));
    } else if a < b {
        out.push(StrategyKind::AbGeneral { a, b });
        if b - a == 1 {
            out.push(StrategyKind::AbSpanning { a, b, subgraph: None });
        }
    }
    out
}

/// Every method that can speak to `gamma_{a,b}(g)`, applicable ones sorted by
/// value, then the inapplicable ones with reasons.
pub fn compare_all(g: &Graph, a: usize, b: usize, opts: &CompareOptions) -> Vec<BoundReport> {
    let n = g.n();
    let mut reports = Vec::new();
    let Ok(profile) = g.degree_profile() else {
        return vec![BoundReport::new(BoundMethod::Exact, "exact", a, b).inapplicable("graph has no vertices")];
    };
    let connected = g.is_connected();

    // exact
    let exact = BoundReport::new(BoundMethod::Exact, "exact", a, b);
    reports.push(if n > EXACT_COMPARE_LIMIT {
        exact.inapplicable(format!("n={n} exceeds {EXACT_COMPARE_LIMIT}"))
    } else {
        match gamma_exact(g, a, b, opts.node_limit) {
            Ok(GammaOutcome::Optimal { size, .. }) => {
                let mut r = exact.with_value(n, size as f64);
                r.equality = true;
                r
            }
            Ok(GammaOutcome::Infeasible) => exact.inapplicable("infeasible: no (a,b)-dominating set exists"),
            Err(e @ ExactError::BudgetExceeded { .. }) => exact.inapplicable(e.to_string()),
            Err(e) => exact.inapplicable(e.to_string()),
        }
    });

    // closed forms from prior work
    let hy = BoundReport::new(BoundMethod::HenningYeo, "henning_yeo", a, b);
    reports.push(if (a, b) != (2, 2) {
        hy.inapplicable("bounds gamma_{2,2} only")
    } else if !connected {
        hy.inapplicable("graph is disconnected")
    } else {
        bound_fixed(&profile, n, FixedBound::HenningYeo, opts.hint).unwrap_or_else(|e| hy.inapplicable(e.to_string()))
    });

    let chang = BoundReport::new(BoundMethod::Chang, "chang", a, b);
    reports.push(if a + 1 != b {
        chang.inapplicable("bounds gamma_{k-1,k} only")
    } else {
        bound_chang(g, b).unwrap_or_else(|e| chang.inapplicable(e.to_string()))
    });

    let kaz = BoundReport::new(BoundMethod::Kaz, "kaz", a, b);
    reports.push(if a != b {
        kaz.inapplicable("bounds gamma_{k,k} only")
    } else {
        bound_kaz(g, a).unwrap_or_else(|e| kaz.inapplicable(e.to_string()))
    });

    // both bounds concern r-regular graphs with r = a + 1
    let r_matches = profile.regular_degree == Some(a + 1);
    for (which, method, label, fits, scope) in [
        (
            FixedBound::AliProjective,
            BoundMethod::AliProjective,
            "ali_projective",
            a == b && r_matches,
            "bounds gamma_{r-1,r-1} of r-regular graphs",
        ),
        (
            FixedBound::AliMoore,
            BoundMethod::AliMoore,
            "ali_moore",
            b == a + 1 && r_matches,
            "bounds gamma_{r-1,r} of r-regular graphs",
        ),
    ] {
        let base = BoundReport::new(method, label, a, b);
        reports.push(if !fits {
            base.inapplicable(scope)
        } else if !connected {
            base.inapplicable("graph is disconnected")
        } else {
            bound_fixed(&profile, n, which, opts.hint).unwrap_or_else(|e| base.inapplicable(e.to_string()))
        });
    }

    // local lemma over the degree profile
    let lll = BoundReport::new(BoundMethod::Lll, "lll", a, b);
    let params = LllParams {
        delta: profile.min_degree as u32,
        max_delta: profile.max_degree as u32,
        a: a as u32,
        b: b as u32,
    };
    let report = minimal_colors(params, opts.max_colors);
    reports.push(match (report.minimal_n, report.bound) {
        (Some(colors), Some(bound)) => {
            let mut r = lll.with_fraction(n, bound).param("N", colors);
            r.lll = Some(LllDetail {
                params,
                minimal_n: colors,
                p: report.p_at_n.clone().expect("set with minimal_n"),
                condition_value: report.condition_value.clone().expect("set with minimal_n"),
            });
            r
        }
        _ => lll.inapplicable(report.reason.unwrap_or_default()),
    });

    // constructions
    for kind in matching_strategies(a, b) {
        let label = format!("turan:{kind}");
        let base = BoundReport::new(BoundMethod::Turan, label, a, b);
        let strategy = Strategy::new(kind).with_chooser(opts.chooser);
        reports.push(match turan_run(g, &strategy, Extractor::Greedy) {
            Ok(run) => {
                let mut r = base
                    .with_value(n, run.certificate.size() as f64)
                    .param("bound_fraction", bound_from_budget(run.aux.edge_budget))
                    .param("alpha", run.aux.edge_budget)
                    .param("aux_edges", run.aux.aux_edges.len());
                r.fraction = Some(bound_from_budget(run.aux.edge_budget));
                r
            }
            Err(e) => base.inapplicable(e.to_string()),
        });
    }
    if matching_strategies(a, b).is_empty() {
        reports.push(BoundReport::new(BoundMethod::Turan, "turan", a, b).inapplicable("no construction for a > b"));
    }

    let (mut applicable, inapplicable): (Vec<_>, Vec<_>) = reports.into_iter().partition(|r| r.applicable);
    applicable.sort_by(|x, y| x.value.partial_cmp(&y.value).expect("finite bounds"));
    applicable.extend(inapplicable);
    applicable
}

/// True when the exact solver proved infeasibility in a comparison.
pub fn is_infeasible(reports: &[BoundReport]) -> bool {
    reports.iter().any(|r| {
        r.method == BoundMethod::Exact && !r.applicable && r.reason.as_deref().is_some_and(|s| s.starts_with("infeasible"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, cycle, heawood, petersen, random_regular, DEFAULT_RESTART_CAP};

    fn regular_profile(r: usize, n: usize) -> DegreeProfile {
        DegreeProfile {
            min_degree: r,
            max_degree: r,
            degree_sequence: vec![r; n],
            is_regular: true,
            regular_degree: Some(r),
        }
    }

    #[test]
    fn chang_examples() {
        let g = random_regular(100, 7, 1, DEFAULT_RESTART_CAP).unwrap();
        let r = bound_chang(&g, 2).unwrap();
        let expected = 100.0 * (7f64.ln() + 8f64.ln() + 1.0) / 7.0;
        assert!((r.value.unwrap() - expected).abs() < 1e-9);
        assert!((r.value.unwrap() - 71.79).abs() < 0.01);
        let r = bound_chang(&g, 1).unwrap();
        assert!((r.value.unwrap() - 100.0 * (8f64.ln() + 1.0) / 8.0).abs() < 1e-9);
        let star = complete_bipartite(1, 3);
        let r = bound_chang(&star, 1).unwrap();
        assert!((r.value.unwrap() - 3.386).abs() < 1e-3);
        assert!(matches!(bound_chang(&star, 3), Err(BoundError::KOutOfRange { k: 3, .. })));
    }

    #[test]
    fn kaz_examples() {
        let g7 = random_regular(100, 7, 1, DEFAULT_RESTART_CAP).unwrap();
        let r = bound_kaz(&g7, 2).unwrap();
        assert!((r.value.unwrap() - 100.0 * (5f64.ln() + 21f64.ln() + 1.0) / 5.0).abs() < 1e-9);
        assert!((r.value.unwrap() - 113.1).abs() < 0.1);
        assert!(r.vacuous);
        let g14 = random_regular(100, 14, 1, DEFAULT_RESTART_CAP).unwrap();
        let r = bound_kaz(&g14, 2).unwrap();
        assert!((r.value.unwrap() - 66.6).abs() < 0.1);
        assert!(!r.vacuous);
        assert!(matches!(bound_kaz(&cycle(5).unwrap(), 2), Err(BoundError::KOutOfRange { .. })));
    }

    #[test]
    fn fixed_examples() {
        let incidence = StructureHint {
            projective_incidence: true,
            ..Default::default()
        };
        let r = bound_fixed(&regular_profile(3, 14), 14, FixedBound::AliProjective, incidence).unwrap();
        assert_eq!(r.value, Some(12.0));
        assert!(r.equality);
        let moore = StructureHint {
            moore: true,
            ..Default::default()
        };
        let r = bound_fixed(&regular_profile(3, 10), 10, FixedBound::AliMoore, moore).unwrap();
        assert_eq!(r.value, Some(9.0));
        let r = bound_fixed(&regular_profile(3, 26), 26, FixedBound::HenningYeo, StructureHint::default()).unwrap();
        assert_eq!(r.value, Some(22.0));
        assert_eq!(r.fraction, Some(Ratio::new(11, 13)));
        let r = bound_fixed(&regular_profile(3, 12), 12, FixedBound::AliProjective, StructureHint::default()).unwrap();
        assert_eq!(r.fraction, Some(Ratio::new(5, 6)));
        let mut irregular = regular_profile(3, 4);
        irregular.regular_degree = None;
        irregular.is_regular = false;
        assert!(matches!(
            bound_fixed(&irregular, 4, FixedBound::AliMoore, StructureHint::default()),
            Err(BoundError::NotApplicable(_))
        ));
    }

    #[test]
    fn heawood_comparison() {
        let opts = CompareOptions {
            hint: StructureHint {
                heawood: true,
                projective_incidence: true,
                moore: false,
            },
            ..Default::default()
        };
        let reports = compare_all(&heawood(), 2, 2, &opts);
        let exact = reports.iter().find(|r| r.method == BoundMethod::Exact).unwrap();
        assert_eq!(exact.value, Some(12.0));
        let turan = reports.iter().find(|r| r.label == "turan:tt22_min3").unwrap();
        assert!(turan.value.unwrap() <= 12.0);
        for r in reports.iter().filter(|r| r.applicable) {
            assert!(r.ceil_value().unwrap() >= 12, "{}", r.label);
        }
    }

    #[test]
    fn petersen_comparison() {
        let opts = CompareOptions {
            hint: StructureHint {
                moore: true,
                ..Default::default()
            },
            ..Default::default()
        };
        let reports = compare_all(&petersen(), 2, 3, &opts);
        let exact = reports.iter().find(|r| r.method == BoundMethod::Exact).unwrap();
        assert_eq!(exact.value, Some(9.0));
        let moore = reports.iter().find(|r| r.method == BoundMethod::AliMoore).unwrap();
        assert_eq!(moore.value, Some(9.0));
        assert!(moore.equality);
    }

    #[test]
    fn infeasible_comparison() {
        let reports = compare_all(&cycle(4).unwrap(), 3, 3, &CompareOptions::default());
        assert!(is_infeasible(&reports));
        assert!(reports.iter().all(|r| !r.applicable));
    }
}
