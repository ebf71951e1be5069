//! Random-coloring bound via the symmetric local lemma, and a resampling
//! constructor for the colorings it promises.
//!
//! Color every vertex uniformly with one of `N` colors and delete one color
//! class. Vertex `v` is bad if either fewer than `b` of its neighbors differ
//! from its own color (it fails when its class is deleted), or some other
//! color covers more than `d(v) - a` of its neighbors (it fails as a member
//! when that class is deleted). With no bad vertex, deleting any class leaves
//! an (a,b)-dominating set, and the largest class has at least `n/N` vertices.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

use crate::exact::{CertificateError, DominationCertificate, Method};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_MAX_COLORS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LllError {
    #[error("parameters out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("resample budget {budget} exhausted with {bad_vertices} bad vertices left")]
    ResampleBudgetExceeded { budget: u64, bad_vertices: usize },
    #[error("coloring is not good at vertex {0}")]
    ColoringNotGood(Vertex),
    #[error("coloring is invalid: {0}")]
    InvalidColoring(String),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// Rational upper bound on e, so a passing condition is never optimistic.
pub fn e_upper() -> BigRational {
    BigRational::new(
        BigInt::from(2_718_281_828_459_045_236u64),
        BigInt::from(1_000_000_000_000_000_000u64),
    )
}

fn binomial_big(n: u32, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_{j < m} C(delta, j) (N-1)^j`: colorings of `delta` neighbors in which
/// fewer than `m` avoid a fixed color.
fn short_count(delta: u32, colors: u32, m: u32) -> BigUint {
    let others = BigUint::from(colors - 1);
    (0..m)
        .map(|j| binomial_big(delta, j) * others.pow(j))
        .fold(BigUint::zero(), |s, t| s + t)
}

fn check_params(delta: u32, colors: u32, a: u32, b: u32) -> Result<(), LllError> {
    if colors < 2 {
        return Err(LllError::ParameterOutOfRange(format!("need N >= 2, got {colors}")));
    }
    if a == 0 || b == 0 || a > delta || b > delta {
        return Err(LllError::ParameterOutOfRange(format!(
            "need 1 <= a,b <= delta (delta={delta}, a={a}, b={b})"
        )));
    }
    Ok(())
}

/// Probability that a vertex of degree `delta` is bad under a uniform
/// `N`-coloring, union-bounded over the `N-1` colors that could be deleted
/// while it stays a member:
/// `(S_b + (N-1) S_a) / N^delta` with `S_m = sum_{j<m} C(delta,j)(N-1)^j`.
pub fn failure_prob(delta: u32, colors: u32, a: u32, b: u32) -> Result<BigRational, LllError> {
    check_params(delta, colors, a, b)?;
    let num = short_count(delta, colors, b) + BigUint::from(colors - 1) * short_count(delta, colors, a);
    let den = BigUint::from(colors).pow(delta);
    Ok(BigRational::new(num.into(), den.into()))
}

/// Variant with the deleted color fixed in advance: the vertex fails when it
/// has that color and fewer than `b` neighbors avoid it, or another color and
/// fewer than `a` neighbors avoid the fixed one. Equals `failure_prob / N`.
/// Reported for comparison only; certification uses [`failure_prob`].
pub fn failure_prob_fixed_color(delta: u32, colors: u32, a: u32, b: u32) -> Result<BigRational, LllError> {
    Ok(failure_prob(delta, colors, a, b)? / BigRational::from_integer(BigInt::from(colors)))
}

/// `e_up * P * Delta^2` and whether it is at most 1.
pub fn lll_condition(p: &BigRational, max_degree: u32) -> (bool, BigRational) {
    let dependents = BigRational::from_integer(BigInt::from(max_degree) * BigInt::from(max_degree));
    let value = e_upper() * p * dependents;
    (value <= BigRational::one(), value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LllParams {
    pub delta: u32,
    #[serde(rename = "Delta")]
    pub max_delta: u32,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LllReport {
    pub params: LllParams,
    pub minimal_n: Option<u32>,
    /// Failure probability at `minimal_n`.
    pub p_at_n: Option<BigRational>,
    /// `(N-1)/N`.
    pub bound: Option<Ratio<u64>>,
    pub condition_value: Option<BigRational>,
    /// Why no N was found, when none was.
    pub reason: Option<String>,
}

/// Smallest `N` in `2..=max_colors` for which the local-lemma condition holds.
/// Every `N` is tried in turn; the condition is not assumed monotone in `N`.
pub fn minimal_colors(params: LllParams, max_colors: u32) -> LllReport {
    let LllParams { delta, max_delta, a, b } = params;
    let mut report = LllReport {
        params,
        minimal_n: None,
        p_at_n: None,
        bound: None,
        condition_value: None,
        reason: None,
    };
    if max_delta < delta {
        report.reason = Some(format!("Delta={max_delta} is below delta={delta}"));
        return report;
    }
    if let Err(e) = check_params(delta, 2, a, b) {
        report.reason = Some(e.to_string());
        return report;
    }
    for colors in 2..=max_colors {
        let p = failure_prob(delta, colors, a, b).expect("parameters checked");
        let (holds, value) = lll_condition(&p, max_delta);
        if holds {
            report.minimal_n = Some(colors);
            report.bound = Some(Ratio::new(colors as u64 - 1, colors as u64));
            report.p_at_n = Some(p);
            report.condition_value = Some(value);
            return report;
        }
    }
    report.reason = Some(format!("condition fails for every N <= {max_colors}"));
    report
}

/// Smallest `r <= max_degree` such that the condition holds for r-regular
/// graphs with the given `N`, `a`, `b`.
pub fn smallest_regular_degree(colors: u32, a: u32, b: u32, max_degree: u32) -> Option<u32> {
    (a.max(b).max(1)..=max_degree).find(|&r| {
        failure_prob(r, colors, a, b)
            .map(|p| lll_condition(&p, r).0)
            .unwrap_or(false)
    })
}

/// Decimal expansion of a non-negative rational with `digits` fractional
/// digits, rounded half up.
pub fn to_decimal(r: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    if digits == 0 {
        return int.to_string();
    }
    format!("{int}.{:0>width$}", frac.to_string(), width = digits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
    pub num_colors: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, num_colors: u32) -> Result<Self, LllError> {
        if let Some(v) = colors.iter().position(|&c| c >= num_colors) {
            return Err(LllError::InvalidColoring(format!(
                "vertex {v} has color {} >= N={num_colors}",
                colors[v]
            )));
        }
        Ok(Self { colors, num_colors })
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colors as usize];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// Goodness of `v`: at least `b` neighbors avoid `v`'s color, and for every
/// other color at least `a` neighbors avoid that color.
pub fn is_good_at(g: &Graph, c: &Coloring, v: Vertex, a: usize, b: usize) -> bool {
    let own = c.colors[v];
    let deg = g.degree(v);
    let mut hits = vec![0usize; c.num_colors as usize];
    for &u in g.neighbors(v) {
        hits[c.colors[u] as usize] += 1;
    }
    if deg - hits[own as usize] < b {
        return false;
    }
    hits.iter()
        .enumerate()
        .filter(|&(x, _)| x as u32 != own)
        .all(|(_, &h)| deg - h >= a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResampleRun {
    pub coloring: Coloring,
    pub resamples: u64,
}

/// Moser–Tardos resampling. Starts from a uniform coloring; while some vertex
/// is bad, the lowest-index bad vertex and its neighbors get fresh colors.
pub fn moser_tardos(
    g: &Graph,
    colors: u32,
    a: usize,
    b: usize,
    seed: u64,
    max_resamples: u64,
) -> Result<ResampleRun, LllError> {
    if colors < 2 || a == 0 || b == 0 {
        return Err(LllError::ParameterOutOfRange(format!(
            "need N >= 2 and a,b >= 1 (N={colors}, a={a}, b={b})"
        )));
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coloring = Coloring {
        colors: (0..n).map(|_| rng.random_range(0..colors)).collect(),
        num_colors: colors,
    };
    let mut bad: BTreeSet<Vertex> = (0..n).filter(|&v| !is_good_at(g, &coloring, v, a, b)).collect();
    let mut resamples = 0u64;
    while let Some(&v) = bad.first() {
        if resamples >= max_resamples {
            return Err(LllError::ResampleBudgetExceeded {
                budget: max_resamples,
                bad_vertices: bad.len(),
            });
        }
        resamples += 1;
        coloring.colors[v] = rng.random_range(0..colors);
        for &u in g.neighbors(v) {
            coloring.colors[u] = rng.random_range(0..colors);
        }
        // goodness at w reads only N(w), so only vertices within distance 2 move
        let mut touched = BTreeSet::from([v]);
        for &u in g.neighbors(v) {
            touched.insert(u);
            touched.extend(g.neighbors(u).iter().copied());
        }
        for w in touched {
            if is_good_at(g, &coloring, w, a, b) {
                bad.remove(&w);
            } else {
                bad.insert(w);
            }
        }
    }
    debug_assert!((0..n).all(|v| is_good_at(g, &coloring, v, a, b)));
    Ok(ResampleRun { coloring, resamples })
}

/// Deletes a largest color class (smallest index on ties) from a good coloring.
pub fn extract_dominating(g: &Graph, c: &Coloring, a: usize, b: usize) -> Result<DominationCertificate, LllError> {
    if c.colors.len() != g.n() {
        return Err(LllError::InvalidColoring(format!(
            "{} colors for {} vertices",
            c.colors.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| !is_good_at(g, c, v, a, b)) {
        return Err(LllError::ColoringNotGood(v));
    }
    let sizes = c.class_sizes();
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let removed = sizes.iter().position(|&s| s == largest).unwrap_or(0) as u32;
    let set: Vec<Vertex> = (0..g.n()).filter(|&v| c.colors[v] != removed).collect();
    let bound = Ratio::new(c.num_colors as u64 - 1, c.num_colors as u64);
    Ok(DominationCertificate::issue(g, set, a, b, Some(bound), Method::Lll)?)
}

/// Lossy conversion for display.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    fn q(n: u64, d: u64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn failure_prob_examples() {
        assert_eq!(failure_prob(7, 4, 2, 2).unwrap(), q(88, 16384));
        assert_eq!(failure_prob(13, 2, 1, 2).unwrap(), q(15, 8192));
        assert_eq!(failure_prob(1, 2, 1, 1).unwrap(), q(1, 1));
        assert_eq!(failure_prob_fixed_color(7, 4, 2, 2).unwrap(), q(22, 16384));
        assert!(failure_prob(3, 1, 1, 1).is_err());
        assert!(failure_prob(3, 2, 4, 1).is_err());
        assert!(failure_prob(3, 2, 0, 1).is_err());
    }

    #[test]
    fn condition_examples() {
        let (holds, v) = lll_condition(&q(88, 16384), 7);
        assert!(holds);
        assert_eq!(to_decimal(&v, 4), "0.7154");
        let (holds, v) = lll_condition(&q(15, 8192), 14);
        assert!(holds);
        assert_eq!(to_decimal(&v, 4), "0.9756");
        let (holds, v) = lll_condition(&q(1, 1), 1);
        assert!(!holds);
        assert_eq!(v, e_upper());
    }

    #[test]
    fn e_upper_exceeds_e() {
        assert!(ratio_to_f64(&e_upper()) >= std::f64::consts::E);
        assert_eq!(to_decimal(&e_upper(), 18), "2.718281828459045236");
    }

    #[test]
    fn minimal_colors_examples() {
        let run = |delta, max_delta, a, b| {
            minimal_colors(LllParams { delta, max_delta, a, b }, DEFAULT_MAX_COLORS).minimal_n
        };
        assert_eq!(run(7, 7, 2, 2), Some(4));
        assert_eq!(run(9, 11, 2, 2), Some(3));
        assert_eq!(run(8, 8, 2, 1), Some(3));
        assert_eq!(run(14, 14, 2, 2), Some(2));
        assert_eq!(run(2, 2, 3, 3), None);
        assert_eq!(run(3, 3, 2, 2), None);
        let r = minimal_colors(LllParams { delta: 5, max_delta: 4, a: 1, b: 1 }, 8);
        assert!(r.reason.unwrap().contains("below"));
    }

    #[test]
    fn regular_threshold() {
        // N=2, (2,2) first passes at r=14
        assert_eq!(smallest_regular_degree(2, 2, 2, 64), Some(14));
        assert_eq!(smallest_regular_degree(4, 2, 2, 64), Some(7));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(to_decimal(&q(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&q(5, 1), 2), "5.00");
        assert_eq!(to_decimal(&q(1, 8), 0), "0");
    }

    #[test]
    fn goodness_examples() {
        let c4 = cycle(4).unwrap();
        // removing either class of a proper 2-coloring leaves S independent
        let alt = Coloring::new(vec![0, 1, 0, 1], 2).unwrap();
        assert!(!is_good_at(&c4, &alt, 0, 1, 1));
        let c6 = cycle(6).unwrap();
        let three = Coloring::new(vec![0, 1, 2, 0, 1, 2], 3).unwrap();
        assert!((0..6).all(|v| is_good_at(&c6, &three, v, 1, 1)));
        let mono = Coloring::new(vec![0; 4], 2).unwrap();
        assert!(!is_good_at(&c4, &mono, 0, 1, 1));
        // v=1 sees colors {0,1,1}: one neighbor avoids color 1 (>= b=1), two
        // avoid color 0 (>= a=2)
        let k4 = complete(4);
        let c = Coloring::new(vec![0, 1, 1, 1], 2).unwrap();
        assert!(is_good_at(&k4, &c, 1, 2, 1));
        // with b=2 only one neighbor avoids color 1
        assert!(!is_good_at(&k4, &c, 1, 2, 2));
        // v=0 sees {1,1,1}: three avoid color 0, but none avoid color 1
        assert!(!is_good_at(&k4, &c, 0, 1, 1));
        assert!(Coloring::new(vec![0, 2], 2).is_err());
    }

    #[test]
    fn extract_from_cycles() {
        let c6 = cycle(6).unwrap();
        let three = Coloring::new(vec![0, 1, 2, 0, 1, 2], 3).unwrap();
        let cert = extract_dominating(&c6, &three, 1, 1).unwrap();
        assert_eq!(cert.set, vec![1, 2, 4, 5]);
        assert!(cert.verified);
        let c4 = cycle(4).unwrap();
        let mono = Coloring::new(vec![0; 4], 2).unwrap();
        assert_eq!(extract_dominating(&c4, &mono, 1, 1), Err(LllError::ColoringNotGood(0)));
    }

    #[test]
    fn resample_budget() {
        // K4 with 2 colors and (3,3) can never be good
        let err = moser_tardos(&complete(4), 2, 3, 3, 1, 50).unwrap_err();
        assert!(matches!(err, LllError::ResampleBudgetExceeded { budget: 50, bad_vertices: 1.. }));
    }
}
