//! Searches for Q-index maximizers among graphs without K_{t,s+1}: exact over
//! all isomorphism classes of small order, and heuristic beyond that.

mod anneal;
pub mod canon;
pub mod enumerate;

pub use anneal::heuristic_max_q;
pub use canon::{canonical_form, canonical_labeling, Canonical};
pub use enumerate::{enumerate_graphs, enumerate_hereditary, MAX_BUILTIN_ORDER};

use std::collections::BTreeSet;
use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{conjecture_bound, q_bound_t2, q_bound_t2_applies, DEFAULT_SLACK};
use crate::error::{Error, Result};
use crate::forbidden::{contains_kst, ForbiddenPattern};
use crate::graph::{decode_graph6, encode_graph6, Graph, VertexSet};
use crate::spectral::{q_index, DEFAULT_TOL};

/// Eigenvalue tolerance while scanning; maximizers are re-evaluated at
/// [`DEFAULT_TOL`] before reporting.
pub const SEARCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    BoundHolds,
    BoundViolated,
    BoundInapplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    Graph6Stream,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub source: Source,
    /// Whether `max_q` is the exact maximum (false for heuristic runs).
    pub exact: bool,
    pub graphs_seen: usize,
    pub free_graphs: usize,
    pub max_q: f64,
    /// Canonical graph6 of every maximizer within `slack`, sorted.
    pub argmax: Vec<String>,
    pub bound_value: Option<f64>,
    pub verdict: Verdict,
    pub argmax_is_extremal_join: bool,
    pub slack: f64,
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    pub runtime_ms: u64,
}

/// True when `g` has no K_{t,s+1}; graphs too small to hold the pattern are free.
pub fn is_free(g: &Graph, pat: ForbiddenPattern) -> Result<bool> {
    if pat.t() + pat.large_side() > g.order() {
        return Ok(true);
    }
    Ok(!contains_kst(g, pat)?)
}

/// Whether `g` is K_{t−1} ∨ H with H s-regular.
pub fn is_extremal_join(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.order();
    if t < 1 || n < t {
        return false;
    }
    let dominating: Vec<usize> = (0..n).filter(|&u| g.degree(u) == n - 1).collect();
    if dominating.len() < t - 1 {
        return false;
    }
    let clique: VertexSet = dominating.iter().take(t - 1).copied().collect();
    let rest = g.vertices().difference(clique);
    if rest.is_empty() {
        return false;
    }
    // In G every vertex of H has degree d_H + (t − 1).
    rest.iter().all(|v| g.degree(v) == s + t - 1)
}

pub(crate) struct Candidate {
    pub graph: Graph,
    pub q: f64,
}

pub(crate) fn finish_report(
    n: usize,
    pat: ForbiddenPattern,
    candidates: Vec<Candidate>,
    graphs_seen: usize,
    free_graphs: usize,
    source: Source,
    started: Instant,
) -> Result<SearchReport> {
    let (s, t) = (pat.s(), pat.t());
    let rough_max = candidates.iter().map(|c| c.q).fold(f64::NEG_INFINITY, f64::max);
    let mut finalists: Vec<(Graph, f64)> = candidates
        .into_iter()
        .filter(|c| c.q >= rough_max - DEFAULT_SLACK - 2.0 * SEARCH_TOL)
        .map(|c| {
            let q = q_index(&c.graph, DEFAULT_TOL)?.value;
            Ok((c.graph, q))
        })
        .collect::<Result<_>>()?;
    let max_q = finalists.iter().map(|f| f.1).fold(f64::NEG_INFINITY, f64::max);
    finalists.retain(|f| f.1 >= max_q - DEFAULT_SLACK);

    let mut argmax = BTreeSet::new();
    let mut extremal = false;
    for (g, _) in &finalists {
        if !is_free(g, pat)? {
            return Err(Error::Unsupported(format!(
                "maximizer {} contains the forbidden pattern",
                encode_graph6(g)
            )));
        }
        extremal |= is_extremal_join(g, s, t);
        argmax.insert(encode_graph6(&canonical_form(g)));
    }

    let bound_value = conjecture_bound(n, s, t).ok();
    let verdict = match bound_value {
        None => Verdict::BoundInapplicable,
        Some(b) if max_q <= b + DEFAULT_SLACK => Verdict::BoundHolds,
        Some(_) => Verdict::BoundViolated,
    };
    Ok(SearchReport {
        n,
        s,
        t,
        source,
        exact: source != Source::Heuristic,
        graphs_seen,
        free_graphs,
        max_q,
        argmax: argmax.into_iter().collect(),
        bound_value,
        verdict,
        argmax_is_extremal_join: extremal,
        slack: DEFAULT_SLACK,
        seed: None,
        budget: None,
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}

fn evaluate_classes(
    n: usize,
    pat: ForbiddenPattern,
    classes: &[Graph],
    source: Source,
    started: Instant,
) -> Result<SearchReport> {
    let free: Vec<Candidate> = classes
        .par_iter()
        .map(|g| -> Result<Option<Candidate>> {
            if !is_free(g, pat)? {
                return Ok(None);
            }
            Ok(Some(Candidate { graph: g.clone(), q: q_index(g, SEARCH_TOL)?.value }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let free_count = free.len();
    finish_report(n, pat, free, classes.len(), free_count, source, started)
}

/// Exact maximum of q over all K_{t,s+1}-free graphs of order n ≤ 9, using
/// the builtin enumerator. Every isomorphism class of order n is visited and
/// counted in `graphs_seen`.
pub fn exhaustive_max_q(n: usize, pat: ForbiddenPattern) -> Result<SearchReport> {
    let started = Instant::now();
    let classes = enumerate_graphs(n)?;
    evaluate_classes(n, pat, &classes, Source::Builtin, started)
}

/// Exact maximum over the graphs of order n supplied as graph6 lines, e.g.
/// from an external generator. Inputs are canonicalized and deduplicated, so
/// relabeled or repeated graphs do not change the report.
pub fn exhaustive_max_q_stream<R: BufRead>(n: usize, pat: ForbiddenPattern, reader: R) -> Result<SearchReport> {
    let started = Instant::now();
    let mut classes = BTreeSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(&line).map_err(|e| match e {
            Error::MalformedGraph6 { reason, .. } => Error::MalformedGraph6 { line: Some(idx + 1), reason },
            other => other,
        })?;
        if g.order() != n {
            return Err(Error::MalformedGraph6 {
                line: Some(idx + 1),
                reason: format!("order {} does not match n = {n}", g.order()),
            });
        }
        classes.insert(canonical_form(&g));
    }
    if classes.is_empty() {
        return Err(Error::Unsupported("graph6 stream contains no graphs".into()));
    }
    let classes: Vec<Graph> = classes.into_iter().collect();
    evaluate_classes(n, pat, &classes, Source::Graph6Stream, started)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prop4Report {
    pub m: usize,
    pub s: usize,
    /// Classes of H with Δ(H) ≤ s.
    pub classes: usize,
    pub bound: f64,
    pub max_q: f64,
    /// H (graph6) with q(K_1 ∨ H) above the bound by more than the slack.
    pub violations: Vec<String>,
    /// H (graph6) with q(K_1 ∨ H) within the slack of the bound.
    pub equality_cases: Vec<String>,
    pub regular_cases: Vec<String>,
    /// Equality cases are exactly the s-regular H.
    pub equality_iff_regular: bool,
    pub holds: bool,
    pub slack: f64,
}

/// Checks q(K_1 ∨ H) ≤ q_bound_t2(m + 1, s) over every H of order m with
/// Δ(H) ≤ s, with equality exactly for s-regular H.
pub fn proposition4_scan(m: usize, s: usize) -> Result<Prop4Report> {
    if m > 8 {
        return Err(Error::UseStreamSource { n: m, max: 8 });
    }
    let hs = enumerate_hereditary(m, |h| h.max_degree() <= s)?;
    let bound = q_bound_t2(m + 1, s);
    let k1 = Graph::empty(1)?;
    let rows: Vec<(String, f64, bool)> = hs
        .par_iter()
        .map(|h| {
            let q = q_index(&k1.join(h)?, DEFAULT_TOL)?.value;
            let regular = h.min_degree() == s && h.max_degree() == s;
            Ok((encode_graph6(h), q, regular))
        })
        .collect::<Result<_>>()?;

    let max_q = rows.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let pick = |f: &dyn Fn(&(String, f64, bool)) -> bool| -> Vec<String> {
        rows.iter().filter(|r| f(r)).map(|r| r.0.clone()).collect()
    };
    let violations = pick(&|r| r.1 > bound + DEFAULT_SLACK);
    let equality_cases = pick(&|r| (r.1 - bound).abs() <= DEFAULT_SLACK);
    let regular_cases = pick(&|r| r.2);
    let equality_iff_regular = equality_cases == regular_cases;
    Ok(Prop4Report {
        m,
        s,
        classes: rows.len(),
        bound,
        max_q,
        holds: violations.is_empty() && equality_iff_regular,
        violations,
        equality_cases,
        regular_cases,
        equality_iff_regular,
        slack: DEFAULT_SLACK,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Theorem6Report {
    pub n: usize,
    pub s: usize,
    /// K_{2,s+1}-free classes of order n.
    pub free_graphs: usize,
    pub bound: f64,
    pub dominating_classes: usize,
    pub dominating_max_q: Option<f64>,
    pub dominating_argmax: Vec<String>,
    /// Every class with a dominating vertex satisfies q ≤ bound + slack.
    pub dominating_bound_holds: bool,
    /// Equality holds exactly for K_1 ∨ H with H s-regular.
    pub dominating_equality_iff_regular_join: bool,
    pub other_classes: usize,
    pub other_max_q: Option<f64>,
    pub other_argmax: Vec<String>,
    /// max q < n over classes without a dominating vertex.
    pub other_below_n: Option<bool>,
    /// Whether n ≥ s² + 6s + 6, the range where `other_below_n` is guaranteed.
    pub threshold_met: bool,
    pub slack: f64,
}

/// Splits the K_{2,s+1}-free graphs of order n by whether they have a
/// dominating vertex and compares each part with its bound.
pub fn theorem6_scan(n: usize, s: usize) -> Result<Theorem6Report> {
    let pat = ForbiddenPattern::new(2, s)?;
    let classes = enumerate_hereditary(n, |g| is_free(g, pat).unwrap_or(false))?;
    let bound = q_bound_t2(n, s);
    let rows: Vec<(Graph, f64)> = classes
        .par_iter()
        .map(|g| Ok((g.clone(), q_index(g, DEFAULT_TOL)?.value)))
        .collect::<Result<_>>()?;
    let (dominating, other): (Vec<_>, Vec<_>) = rows.into_iter().partition(|(g, _)| g.max_degree() == n - 1);

    let summarize = |part: &[(Graph, f64)]| {
        let max = part.iter().map(|r| r.1).fold(None, |m: Option<f64>, q| Some(m.map_or(q, |m| m.max(q))));
        let argmax = match max {
            Some(mx) => part
                .iter()
                .filter(|r| r.1 >= mx - DEFAULT_SLACK)
                .map(|r| encode_graph6(&r.0))
                .collect(),
            None => Vec::new(),
        };
        (max, argmax)
    };
    let (dominating_max_q, dominating_argmax) = summarize(&dominating);
    let (other_max_q, other_argmax) = summarize(&other);

    let dominating_bound_holds = dominating.iter().all(|r| r.1 <= bound + DEFAULT_SLACK);
    let dominating_equality_iff_regular_join = dominating
        .iter()
        .all(|(g, q)| ((q - bound).abs() <= DEFAULT_SLACK) == is_extremal_join(g, s, 2));

    Ok(Theorem6Report {
        n,
        s,
        free_graphs: dominating.len() + other.len(),
        bound,
        dominating_classes: dominating.len(),
        dominating_max_q,
        dominating_argmax,
        dominating_bound_holds,
        dominating_equality_iff_regular_join,
        other_classes: other.len(),
        other_max_q,
        other_argmax,
        other_below_n: other_max_q.map(|q| q < n as f64),
        threshold_met: q_bound_t2_applies(n, s),
        slack: DEFAULT_SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn pat(t: usize, s: usize) -> ForbiddenPattern {
        ForbiddenPattern::new(t, s).unwrap()
    }

    #[test]
    fn exhaustive_order_four_counts_all_classes() {
        let r = exhaustive_max_q(4, pat(2, 1)).unwrap();
        assert_eq!(r.graphs_seen, 11);
        assert_eq!(r.free_graphs, 8);
        assert!(r.exact);
    }

    #[test]
    fn exhaustive_order_five_finds_bowtie() {
        let r = exhaustive_max_q(5, pat(2, 1)).unwrap();
        assert_eq!(r.graphs_seen, 34);
        let bowtie = complete(1).unwrap().join(&perfect_matching(2).unwrap()).unwrap();
        assert_eq!(r.argmax, vec![encode_graph6(&canonical_form(&bowtie))]);
        assert!((r.max_q - q_bound_t2(5, 1)).abs() < 1e-9);
        assert!((r.max_q - 5.5615528).abs() < 1e-7);
        assert!(r.argmax_is_extremal_join);
        assert_eq!(r.verdict, Verdict::BoundHolds);
    }

    #[test]
    fn exhaustive_order_three_is_triangle() {
        let r = exhaustive_max_q(3, pat(2, 1)).unwrap();
        assert_eq!(r.free_graphs, 4);
        assert!((r.max_q - 4.0).abs() < 1e-9);
        assert_eq!(r.argmax, vec![encode_graph6(&complete(3).unwrap())]);
    }

    #[test]
    fn stream_source_dedups_relabelings() {
        let c5 = cycle(5).unwrap();
        let moved = c5.relabeled(&[2, 4, 1, 0, 3]).unwrap();
        let text = format!("{}\n{}\n{}\n", encode_graph6(&c5), encode_graph6(&moved), encode_graph6(&path(5).unwrap()));
        let r = exhaustive_max_q_stream(5, pat(2, 1), text.as_bytes()).unwrap();
        assert_eq!(r.graphs_seen, 2);
        assert!((r.max_q - 4.0).abs() < 1e-9);
        assert_eq!(r.source, Source::Graph6Stream);
    }

    #[test]
    fn stream_errors_carry_line_numbers() {
        let err = exhaustive_max_q_stream(5, pat(2, 1), "DQc\nD!c\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::MalformedGraph6 { line: Some(2), .. }));
        let err = exhaustive_max_q_stream(5, pat(2, 1), "DQc\nC~\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::MalformedGraph6 { line: Some(2), .. }));
    }

    #[test]
    fn builtin_limit() {
        assert_eq!(
            exhaustive_max_q(10, pat(2, 1)).unwrap_err(),
            Error::UseStreamSource { n: 10, max: MAX_BUILTIN_ORDER }
        );
    }

    #[test]
    fn prop4_examples() {
        let r = proposition4_scan(5, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.equality_cases, vec![encode_graph6(&canonical_form(&cycle(5).unwrap()))]);
        let r = proposition4_scan(4, 1).unwrap();
        assert_eq!(r.equality_cases, vec![encode_graph6(&canonical_form(&perfect_matching(2).unwrap()))]);
        let r = proposition4_scan(5, 1).unwrap();
        assert!(r.equality_cases.is_empty() && r.regular_cases.is_empty() && r.holds);
        assert!(r.max_q < r.bound);
    }

    #[test]
    fn theorem6_examples() {
        let r = theorem6_scan(6, 2).unwrap();
        assert!((r.dominating_max_q.unwrap() - (5.0 + 20f64.sqrt() / 2.0)).abs() < 1e-8);
        assert!(r.dominating_bound_holds && r.dominating_equality_iff_regular_join);
        assert!(!r.threshold_met);
        let r = theorem6_scan(5, 1).unwrap();
        assert!((r.dominating_max_q.unwrap() - 5.5615528).abs() < 1e-7);
        let r = theorem6_scan(4, 1).unwrap();
        assert!(r.other_max_q.unwrap() < 4.0 + 1e-9);
    }

    #[test]
    fn extremal_join_recognition() {
        let wheel = complete(1).unwrap().join(&cycle(5).unwrap()).unwrap();
        assert!(is_extremal_join(&wheel, 2, 2));
        assert!(!is_extremal_join(&wheel, 1, 2));
        assert!(is_extremal_join(&complete(5).unwrap(), 2, 3));
        assert!(!is_extremal_join(&cycle(5).unwrap(), 2, 2));
    }

    #[test]
    fn heuristic_rejects_zero_budget() {
        assert_eq!(heuristic_max_q(5, pat(2, 1), 0, 1).unwrap_err(), Error::InvalidBudget);
    }
}
