//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use qindex::bounds::{conjecture_bound, merris_bound, q_bound_t2, verify_theorem3_steps};
use qindex::constructions::{circulant, default_offsets, random_regular};
use qindex::graph::{decode_graph6, encode_graph6};
use qindex::search::{enumerate_graphs, exhaustive_max_q, heuristic_max_q, proposition4_scan, Verdict};
use qindex::spectral::{adjacency_radius, full_spectrum, q_index, MatrixKind, DEFAULT_TOL};
use qindex::{ForbiddenPattern, Graph};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    check(elapsed.as_secs() < limit_s, || format!("runtime {elapsed:.1?} exceeds {limit_s}s"))
}

fn eigensolver_agreement() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    graphs.extend(random_corpus(101, 500, 8, 30));
    let mut worst: f64 = 0.0;
    for g in &graphs {
        let it = q_index(g, DEFAULT_TOL).map_err(|e| e.to_string())?.value;
        let full = full_spectrum(g, MatrixKind::Signless).into_iter().fold(f64::NEG_INFINITY, f64::max);
        let d = (it - full).abs();
        worst = worst.max(d);
        check(d <= 1e-8, || format!("{g}: iterative {it} vs full {full}"))?;
    }
    within(start.elapsed(), 120)?;
    Ok(format!("{} graphs, max deviation {worst:.2e}", graphs.len()))
}

fn regular_join_identity() -> Outcome {
    let mut cases = 0;
    let mut worst: f64 = 0.0;
    for s in 1..=4 {
        for m in s + 1..=30 {
            if s * m % 2 == 1 {
                continue;
            }
            let hs = [
                circulant(m, &default_offsets(m, s)).map_err(|e| e.to_string())?,
                random_regular(m, s, 1).map_err(|e| e.to_string())?,
                random_regular(m, s, 2).map_err(|e| e.to_string())?,
            ];
            let n = m + 1;
            let (nf, sf) = (n as f64, s as f64);
            let formula = (nf + 2.0 * sf) / 2.0 + ((nf - 2.0 * sf).powi(2) + 8.0 * sf).sqrt() / 2.0;
            let quotient = regular_join_q(n, s);
            check((formula - quotient).abs() < 1e-12, || format!("formula/quotient mismatch at n={n}, s={s}"))?;
            for h in &hs {
                check(h.is_regular() && h.max_degree() == s, || format!("{h} is not {s}-regular"))?;
                let g = Graph::empty(1).unwrap().join(h).unwrap();
                let q = q_index(&g, DEFAULT_TOL).map_err(|e| e.to_string())?.value;
                worst = worst.max((q - formula).abs());
                check((q - formula).abs() <= 1e-7, || format!("K1 v {h}: q={q} vs {formula}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} joins, max deviation {worst:.2e}"))
}

fn proposition4() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for s in 1..=3 {
        for m in 1..=7 {
            let bound = q_bound_t2(m + 1, s);
            for h in enumerate_graphs(m).unwrap().into_iter().filter(|h| h.max_degree() <= s) {
                let q = q_index(&Graph::empty(1).unwrap().join(&h).unwrap(), DEFAULT_TOL).unwrap().value;
                let regular = h.is_regular() && h.min_degree() == s;
                check(q <= bound + 1e-7, || format!("m={m} s={s} H={h}: q={q} > {bound}"))?;
                let equal = (q - bound).abs() <= 1e-7;
                check(equal == regular, || format!("m={m} s={s} H={h}: equality {equal}, regular {regular}"))?;
                checked += 1;
            }
            let report = proposition4_scan(m, s).map_err(|e| e.to_string())?;
            check(report.holds && report.equality_iff_regular && report.violations.is_empty(), || {
                format!("library scan disagrees at m={m} s={s}")
            })?;
        }
    }
    within(start.elapsed(), 300)?;
    Ok(format!("{checked} graphs H, runtime {:.1?}", start.elapsed()))
}

fn fact_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=8).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    graphs.extend(random_corpus(404, 1000, 2, 30));
    graphs
}

fn merris() -> Outcome {
    let mut checked = 0;
    for g in fact_corpus().iter().filter(|g| g.size() > 0) {
        let bound = merris_bound(g).map_err(|e| e.to_string())?;
        let q = q_index(g, DEFAULT_TOL).unwrap().value;
        check(q <= bound + 1e-7, || format!("{g}: q={q} > merris {bound}"))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

fn degree_facts() -> Outcome {
    let mut checked = 0;
    for g in fact_corpus() {
        let q = q_index(&g, DEFAULT_TOL).unwrap().value;
        let lambda = adjacency_radius(&g, DEFAULT_TOL).unwrap().value;
        if g.size() > 0 {
            let d = g.max_degree() as f64 + 1.0;
            check(q >= d - 1e-9, || format!("{g}: q={q} < Δ+1={d}"))?;
        }
        let avg = 2.0 * g.size() as f64 / g.order() as f64;
        check(lambda >= avg - 1e-9, || format!("{g}: λ={lambda} < 2e/n={avg}"))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

fn conjecture_reduction() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in 1..=6 {
        for n in 3..=200 {
            let c = conjecture_bound(n, s, 2).map_err(|e| e.to_string())?;
            let d = c - q_bound_t2(n, s);
            worst = worst.max(d.abs());
            check(d <= 1e-10, || format!("n={n} s={s}: difference {d}"))?;
        }
    }
    Ok(format!("max |difference| {worst:.2e}"))
}

fn sandwich() -> Outcome {
    let mut checked = 0;
    for s in 1..=6 {
        for n in (3..=200).filter(|&n| n > 2 * s) {
            let q = q_bound_t2(n, s);
            let upper = n as f64 + 2.0 * s as f64 / (n - 2 * s) as f64;
            check((n as f64) < q && q < upper, || format!("n={n} s={s}: {n} < {q} < {upper} fails"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}

fn proof_ledger() -> Outcome {
    let mut checks = 0;
    for s in 1..=6 {
        for n in s * s + 6 * s + 6..=200 {
            let ledger = verify_theorem3_steps(s, n).map_err(|e| e.to_string())?;
            if let Some(bad) = ledger.checks.iter().find(|c| !c.holds) {
                return Err(format!("s={s} n={n}: {} ({} vs {})", bad.name, bad.lhs, bad.rhs));
            }
            checks += ledger.checks.len();
        }
    }
    Ok(format!("{checks} inequalities"))
}

fn conjecture_probe() -> Outcome {
    let start = Instant::now();
    let mut exhaustive_runs = 0;
    let mut tight = 0;
    for (t, s) in [(2, 1), (2, 2), (3, 2)] {
        let pat = ForbiddenPattern::new(t, s).unwrap();
        for n in 1..=8 {
            if conjecture_bound(n, s, t).is_err() {
                continue;
            }
            let r = exhaustive_max_q(n, pat).map_err(|e| e.to_string())?;
            check(r.verdict != Verdict::BoundViolated, || {
                format!("n={n} t={t} s={s}: q={} exceeds {:?} at {:?}", r.max_q, r.bound_value, r.argmax)
            })?;
            exhaustive_runs += 1;
            if r.argmax_is_extremal_join {
                tight += 1;
            }
        }
    }
    let pat = ForbiddenPattern::new(2, 1).unwrap();
    let mut joins = Vec::new();
    for n in 13..=16 {
        let r = heuristic_max_q(n, pat, 100_000, 1).map_err(|e| e.to_string())?;
        let bound = q_bound_t2(n, 1);
        check(r.max_q <= bound + 1e-4, || format!("hunt n={n}: q={} > {bound}", r.max_q))?;
        check(r.verdict != Verdict::BoundViolated, || format!("hunt n={n}: verdict bound_violated"))?;
        let dominating = r.argmax.iter().all(|code| {
            let g = decode_graph6(code).unwrap();
            g.max_degree() == n - 1
        });
        check(!r.argmax.is_empty() && dominating, || format!("hunt n={n}: argmax {:?} has no dominating vertex", r.argmax))?;
        joins.push(format!("n={n} q={:.6}{}", r.max_q, if r.argmax_is_extremal_join { " (K1 v 1-regular)" } else { "" }));
    }
    within(start.elapsed(), 900)?;
    Ok(format!("{exhaustive_runs} exhaustive runs ({tight} attained by the join); hunt {}", joins.join(", ")))
}

fn enumeration() -> Outcome {
    let expected = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_graphs(n).unwrap();
        check(got.len() == want, || format!("n={n}: {} classes, expected {want}", got.len()))?;
        if n <= 6 {
            let perms = permutations(n);
            let oracle: HashSet<u64> = labeled_graphs(n).map(|g| brute_canonical_key(&g, &perms)).collect();
            let ours: HashSet<u64> = got.iter().map(|g| brute_canonical_key(g, &perms)).collect();
            check(oracle.len() == want && ours == oracle, || {
                format!("n={n}: oracle {} classes, library reps cover {}", oracle.len(), ours.len())
            })?;
        }
    }
    Ok("counts 1..8 match, n <= 6 matches brute force".into())
}

fn codec() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for g in labeled_graphs(n) {
            let code = encode_graph6(&g);
            check(decode_graph6(&code).as_ref() == Ok(&g), || format!("round trip failed for {code}"))?;
            cases += 1;
        }
    }
    let mut r = rng(1111);
    use rand::Rng;
    for _ in 0..1000 {
        let n = r.gen_range(1..=62);
        let p = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, p);
        let code = encode_graph6(&g);
        check(decode_graph6(&code).as_ref() == Ok(&g), || format!("round trip failed for {code}"))?;
        cases += 1;
    }
    Ok(format!("{cases} round trips"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("eigensolver oracle agreement", eigensolver_agreement),
        ("regular join identity", regular_join_identity),
        ("K1 v H bound, exhaustive", proposition4),
        ("Merris bound", merris),
        ("q >= max degree + 1 and lambda >= 2e/n", degree_facts),
        ("conjecture reduces to the t = 2 bound", conjecture_reduction),
        ("bound sandwich", sandwich),
        ("proof ledger", proof_ledger),
        ("conjecture probe", conjecture_probe),
        ("enumeration counts", enumeration),
        ("graph6 round trip", codec),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
