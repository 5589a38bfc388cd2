//! One PASS/FAIL line per acceptance criterion, with pinned time limits.
//!
//! The process fails if a criterion other than the documented known-red
//! one fails, if a criterion exceeds its time limit, or if the known-red
//! check starts passing (the decisions ledger would then be stale).

use std::time::{Duration, Instant};

use kn_toolkit::sampling::DEFAULT_SEED;
use kn_toolkit::suite;

/// Wall-clock limits per criterion. Limits for 1–3 are those of the
/// acceptance list; the others are generous ceilings for debug builds.
const LIMITS: [(u8, u64); 9] = [(1, 10), (2, 60), (3, 10), (4, 60), (5, 60), (6, 60), (7, 60), (8, 60), (9, 60)];

/// Checks that are expected to fail, with the reason printed next to them.
const KNOWN_RED: [(u8, &str, &str); 1] = [(
    5,
    "printed L1 witness satisfies the identity",
    "the printed Φ fails on the rows n = 1, 2; the unique solution has c = 1/3 and Φ(l_m) = (m−1)/6, (m−4)/6",
)];

fn main() {
    let mut problems = Vec::new();
    for (id, limit) in LIMITS {
        let start = Instant::now();
        let c = suite::by_id(id, DEFAULT_SEED).expect("criterion exists");
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let failing: Vec<&str> = c.checks.iter().filter(|k| !k.passed()).map(|k| k.name.as_str()).collect();
        let status = if failing.is_empty() && in_time { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {id}: {} [{} checks, {:.2} s, limit {limit} s]",
            c.title,
            c.checks.len(),
            took.as_secs_f64()
        );
        if !in_time {
            problems.push(format!("criterion {id} took {took:?}, limit {limit} s"));
        }
        for k in c.checks.iter().filter(|k| !k.passed()) {
            let known = KNOWN_RED.iter().find(|(i, name, _)| *i == id && *name == k.name);
            match known {
                Some((_, _, why)) => println!("    known red: {} ({why})", k.name),
                None => problems.push(format!("criterion {id}: {} failed: {}", k.name, k.detail)),
            }
            if let Some(w) = &k.witness {
                println!("    witness: {w}");
            }
        }
        for (i, name, _) in KNOWN_RED.iter().filter(|(i, _, _)| *i == id) {
            if !failing.contains(name) {
                problems.push(format!("criterion {i}: known-red check `{name}` no longer fails"));
            }
        }
    }
    if !problems.is_empty() {
        for p in &problems {
            eprintln!("unexpected: {p}");
        }
        std::process::exit(1);
    }
}
