//! Closed-form extremal bounds for graphs without K_{t,s+1} (or K_{s,t}),
//! the degree-based Merris bound, and the numeric inequality chain behind
//! `q(G) < n` for graphs without a dominating vertex.
//!
//! Every bound here silently assumes side conditions on `(n, s, t)`. The
//! evaluators reject parameters outside their hypothesis, and [`BoundReport`]
//! records which hypotheses hold so callers never compare against a bound
//! that does not apply.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Slack used when comparing floating-point values against a bound.
pub const DEFAULT_SLACK: f64 = 1e-7;

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(what()))
    }
}

fn kst_hypothesis(s: usize, t: usize) -> Result<()> {
    require(t >= 2 && s >= t, || format!("need s ≥ t ≥ 2, got s = {s}, t = {t}"))
}

/// Upper bound on λ(G) for K_{s,t}-free graphs of order n (s ≥ t ≥ 2).
pub fn adjacency_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    kst_hypothesis(s, t)?;
    let (n, s, t) = (n as f64, s as f64, t as f64);
    if t == 2.0 {
        Ok(0.5 + ((s - 1.0) * (n - 1.0) + 0.25).sqrt())
    } else {
        Ok(frac_pow(s - t + 1.0, 1.0 / t) * frac_pow(n, 1.0 - 1.0 / t)
            + (t - 1.0) * frac_pow(n, 1.0 - 2.0 / t)
            + t
            - 2.0)
    }
}

/// Upper bound on e(G) for K_{s,t}-free graphs of order n (s ≥ t ≥ 2).
pub fn edge_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    kst_hypothesis(s, t)?;
    let (n, s, t) = (n as f64, s as f64, t as f64);
    if t == 2.0 {
        Ok(n / 2.0 * ((s - 1.0) * (n - 1.0) + 0.25).sqrt() + n / 4.0)
    } else {
        Ok(0.5 * frac_pow(s - t + 1.0, 1.0 / t) * frac_pow(n, 2.0 - 1.0 / t)
            + 0.5 * (t - 1.0) * frac_pow(n, 2.0 - 2.0 / t)
            + 0.5 * (t - 2.0) * n)
    }
}

fn frac_pow(base: f64, exp: f64) -> f64 {
    if base == 0.0 {
        0.0
    } else {
        (exp * base.ln()).exp()
    }
}

/// `(n + 2s)/2 + √((n − 2s)² + 8s)/2`, the maximum Q-index of a K_{2,s+1}-free
/// graph of order n once n ≥ s² + 6s + 6. Also the Q-index of K_1 ∨ H for
/// every s-regular H of order n − 1.
pub fn q_bound_t2(n: usize, s: usize) -> f64 {
    let (n, s) = (n as f64, s as f64);
    (n + 2.0 * s) / 2.0 + ((n - 2.0 * s).powi(2) + 8.0 * s).sqrt() / 2.0
}

/// Smallest order from which the K_{2,s+1} Q-index bound is proved.
pub fn q_bound_t2_threshold(s: usize) -> usize {
    s * s + 6 * s + 6
}

pub fn q_bound_t2_applies(n: usize, s: usize) -> bool {
    s >= 1 && n >= q_bound_t2_threshold(s)
}

/// Conjectured maximum Q-index of a K_{t,s+1}-free graph of order n, attained
/// by K_{t−1} ∨ H with H s-regular of order n − t + 1.
pub fn conjecture_bound(n: usize, s: usize, t: usize) -> Result<f64> {
    require(t >= 2 && s + 1 >= t, || {
        format!("need s ≥ t − 1 ≥ 1, got s = {s}, t = {t}")
    })?;
    let disc = conjecture_discriminant(n, s, t);
    if disc < 0.0 {
        return Err(Error::DiscriminantNegative(disc));
    }
    let (n, s, t) = (n as f64, s as f64, t as f64);
    Ok(n / 2.0 + s + t - 2.0 + disc.sqrt() / 2.0)
}

fn conjecture_discriminant(n: usize, s: usize, t: usize) -> f64 {
    let (n, s, t) = (n as f64, s as f64, t as f64);
    (n - 2.0 + 2.0 * s).powi(2) - 8.0 * s * (n - 2.0) + 4.0 * (t - 1.0) * (n - t + 1.0)
}

/// F(u) = d(u) + (1/d(u)) Σ_{v∈Γ(u)} d(v).
pub fn f_value(g: &Graph, u: usize) -> Result<f64> {
    if u >= g.order() {
        return Err(Error::IndexOutOfRange { index: u, order: g.order() });
    }
    let d = g.degree(u);
    if d == 0 {
        return Err(Error::IsolatedVertex(u));
    }
    let sum: usize = g.neighbors(u).iter().map(|v| g.degree(v)).sum();
    Ok(d as f64 + sum as f64 / d as f64)
}

/// max F(u) over nonisolated u; an upper bound on q(G).
pub fn merris_bound(g: &Graph) -> Result<f64> {
    let mut best: Option<f64> = None;
    for u in (0..g.order()).filter(|&u| g.degree(u) > 0) {
        let f = f_value(g, u)?;
        best = Some(best.map_or(f, |b| b.max(f)));
    }
    best.ok_or(Error::NoEdges)
}

/// The window `(n, n + 2s/(n − 2s))` that strictly contains `q_bound_t2(n, s)`.
pub fn bo_window(n: usize, s: usize) -> Result<(f64, f64)> {
    require(n > 2 * s, || format!("need n > 2s, got n = {n}, s = {s}"))?;
    let (nf, sf) = (n as f64, s as f64);
    Ok((nf, nf + 2.0 * sf / (nf - 2.0 * sf)))
}

/// Which hypotheses hold at `(n, s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Applicability {
    /// s ≥ t ≥ 2: the adjacency and edge bounds for K_{s,t}-free graphs.
    pub kst_bounds: bool,
    /// t = 2 and n ≥ s² + 6s + 6: the proven Q-index bound.
    pub q_bound_t2: bool,
    /// s ≥ t − 1 ≥ 1 with a nonnegative discriminant.
    pub conjecture: bool,
    /// n > 2s.
    pub bo_window: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    /// λ bound for K_{s,t}-free graphs.
    pub adj_bound: Option<f64>,
    /// e(G) bound for K_{s,t}-free graphs.
    pub edge_bound: Option<f64>,
    pub q_bound_t2: f64,
    pub q_bound_t2_threshold: usize,
    pub conjecture_bound: Option<f64>,
    pub bo_window: Option<(f64, f64)>,
    pub merris_bound: Option<f64>,
    pub applicability: Applicability,
}

impl BoundReport {
    pub fn evaluate(n: usize, s: usize, t: usize) -> BoundReport {
        let adj_bound = adjacency_bound(n, s, t).ok();
        let conj = conjecture_bound(n, s, t).ok();
        let bo = bo_window(n, s).ok();
        BoundReport {
            n,
            s,
            t,
            adj_bound,
            edge_bound: edge_bound(n, s, t).ok(),
            q_bound_t2: q_bound_t2(n, s),
            q_bound_t2_threshold: q_bound_t2_threshold(s),
            conjecture_bound: conj,
            bo_window: bo,
            merris_bound: None,
            applicability: Applicability {
                kst_bounds: adj_bound.is_some(),
                q_bound_t2: t == 2 && q_bound_t2_applies(n, s),
                conjecture: conj.is_some(),
                bo_window: bo.is_some(),
            },
        }
    }

    pub fn with_graph(mut self, g: &Graph) -> BoundReport {
        self.merris_bound = merris_bound(g).ok();
        self
    }
}

/// One named step of the numeric chain, with the two sides compared.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub strict: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofLedger {
    pub s: usize,
    pub n: usize,
    pub checks: Vec<LedgerCheck>,
}

impl ProofLedger {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn push(&mut self, name: &str, lhs: Q, rhs: Q, strict: bool) {
        let holds = if strict { lhs < rhs } else { lhs <= rhs };
        let f = |x: Q| *x.numer() as f64 / *x.denom() as f64;
        self.checks.push(LedgerCheck { name: name.to_string(), lhs: f(lhs), rhs: f(rhs), strict, holds });
    }
}

type Q = Ratio<i128>;

fn q(x: usize) -> Q {
    Q::from_integer(x as i128)
}

/// Evaluates every numeric inequality used to show q(G) < n for K_{2,s+1}-free
/// graphs of order n ≥ s² + 6s + 6 without a dominating vertex.
///
/// Each side is a rational function of s and n, so every comparison is decided
/// exactly; several non-strict steps are equalities at n = s² + 6s + 6.
///
/// Sparse regime (Δ ≤ n − s − 2): the convex function
/// g(x) = x + 1 + (n − 1)s/x must stay below n at both ends of
/// `s + 2 ≤ d(u) ≤ n − s − 2`.
/// Dense regime (Δ ≥ n − s − 1): the eigenvector entries outside the
/// neighborhood of a maximum-degree vertex are below 2/n, and the final chain
/// `n − 1 + 2s/(n − 1 − 2s) + 24s²/n² < n` closes the argument.
pub fn verify_theorem3_steps(s: usize, n: usize) -> Result<ProofLedger> {
    require(s >= 1, || "need s ≥ 1".into())?;
    require(n >= q_bound_t2_threshold(s), || {
        format!("need n ≥ s² + 6s + 6 = {}, got n = {n}", q_bound_t2_threshold(s))
    })?;
    require(n <= 1 << 20, || format!("n = {n} is too large for exact evaluation"))?;
    let (nq, sq) = (q(n), q(s));
    let one = q(1);
    let g = |x: Q| x + one + (nq - one) * sq / x;
    let mut ledger = ProofLedger { s, n, checks: Vec::new() };

    // Sparse regime.
    ledger.push("sparse: n > s^2 + 2s + 2", q(s * s + 2 * s + 2), nq, true);
    ledger.push("sparse: low-degree case s + 1 + (n - s - 2) < n", sq + one + nq - sq - q(2), nq, true);
    ledger.push("sparse: g(s+2) < n", g(sq + q(2)), nq, true);
    ledger.push("sparse: g(n-s-2) < n", g(nq - sq - q(2)), nq, true);
    let max_ends = (sq + q(3) + (nq - one) * sq / (sq + q(2)))
        .max(nq - sq - one + (nq - one) * sq / (nq - sq - q(2)));
    ledger.push(
        "sparse: max{s+3+(n-1)s/(s+2), n-s-1+(n-1)s/(n-s-2)} < n",
        max_ends,
        nq,
        true,
    );

    // Dense regime: eigenvector entries.
    ledger.push("dense: n > 3s + 2", q(3 * s + 2), nq, true);
    let gap = nq - q(4) * sq + q(2);
    let xv_bound = sq / ((nq - q(3) * sq - one) * gap);
    let xv_step1 = one / ((sq + one) * gap);
    let xv_step2 = one / (q(2) * gap);
    ledger.push("dense: s/((n-3s-1)(n-4s+2)) <= 1/((s+1)(n-4s+2))", xv_bound, xv_step1, false);
    ledger.push("dense: 1/((s+1)(n-4s+2)) <= 1/(2(n-4s+2))", xv_step1, xv_step2, false);
    ledger.push("dense: 1/(2(n-4s+2)) <= 2/n", xv_step2, q(2) / nq, false);
    ledger.push("dense: 2s/n <= 1/3", q(2) * sq / nq, one / q(3), false);
    ledger.push("dense: (1+1/3)/(n-3s-1) <= 2/n", Q::new(4, 3) / (nq - q(3) * sq - one), q(2) / nq, false);
    let binom = sq * (sq - one) / q(2);
    ledger.push(
        "dense: (C(s,2) + s^2)*16/n^2 < 24s^2/n^2",
        (binom + sq * sq) * q(16) / (nq * nq),
        q(24) * sq * sq / (nq * nq),
        true,
    );

    // Dense regime: final chain.
    let end_low = nq - sq + q(2) * sq / (nq - q(3) * sq);
    let end_high = nq - one + q(2) * sq / (nq - one - q(2) * sq);
    ledger.push("dense: n-s+2s/(n-3s) <= n-1+2s/(n-1-2s)", end_low, end_high, false);
    let frac = q(2) * sq / (nq - one - q(2) * sq);
    let relaxed_frac = q(2) / (sq + q(4) + q(5) / sq);
    ledger.push("dense: 2s/(n-1-2s) <= 2/(s+4+5/s)", frac, relaxed_frac, false);
    ledger.push("dense: 2/(s+4+5/s) <= 2/5", relaxed_frac, Q::new(2, 5), false);
    let sq_term = q(24) * sq * sq / (nq * nq);
    let relaxed_sq = q(24) / ((sq + q(6) + q(6) / sq) * (sq + q(6) + q(6) / sq));
    ledger.push("dense: 24s^2/n^2 <= 24/(s+6+6/s)^2", sq_term, relaxed_sq, false);
    ledger.push("dense: 24/(s+6+6/s)^2 <= 24/49", relaxed_sq, Q::new(24, 49), false);
    ledger.push("dense: 2/5 + 24/49 < 1", Q::new(2, 5) + Q::new(24, 49), one, true);
    ledger.push("dense: n-1+2s/(n-1-2s)+24s^2/n^2 < n", end_high + sq_term, nq, true);

    Ok(ledger)
}
