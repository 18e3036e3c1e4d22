//! The full claim suite as a structured, deterministic report.
//!
//! Each [`Entry`] ties a computed value to the value it is claimed to equal.
//! All claims are exact integers, booleans or strings, so an entry passes
//! only on exact equality. Entries appear in a fixed order regardless of how
//! the work is scheduled.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::centralizer::{
    centralizer_of_generator, simple_centralizer, verify_struc_decomposition,
};
use crate::error::Result;
use crate::graph::{graph_simple_braids, graph_simple_perms, graph_sym, CommutingGraph};
use crate::lemmas;
use crate::monoid::BraidEngine;
use crate::simple::{self, enum_divisors_delta, enum_simple, SimpleBraid};
use crate::symm::{enum_sym, project};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest `n` for braid graphs and Garside divisors.
    pub max_n_braids: usize,
    /// Largest `n` for the permutation graphs.
    pub max_n_perms: usize,
    /// Largest `n` for simple-braid counts and centralizer cardinalities.
    pub max_n_simple: usize,
    /// Draws per randomized lemma.
    pub lemma_cases: usize,
    pub seed: u64,
    /// Fibonacci function the expected counts are computed with.
    pub fib: fn(u32) -> u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n_braids: 6,
            max_n_perms: 5,
            max_n_simple: 7,
            lemma_cases: 500,
            seed: 0x5eed,
            fib: simple::fib,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub claim: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let mark = if e.pass { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {:<36} {}", e.id, e.claim)?;
            if !e.pass {
                writeln!(f, "         computed {} expected {}", e.computed, e.expected)?;
            }
        }
        write!(
            f,
            "{} claims: {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        )
    }
}

struct Builder {
    entries: Vec<Entry>,
}

impl Builder {
    fn push(&mut self, id: impl Into<String>, claim: impl Into<String>, computed: Value, expected: Value) {
        let pass = computed == expected;
        self.entries.push(Entry {
            id: id.into(),
            claim: claim.into(),
            computed,
            expected,
            pass,
        });
    }

    fn finish(self) -> VerificationReport {
        let passed = self.entries.iter().filter(|e| e.pass).count();
        VerificationReport {
            summary: Summary {
                total: self.entries.len(),
                passed,
                failed: self.entries.len() - passed,
            },
            entries: self.entries,
        }
    }
}

fn word(n: usize, letters: &[usize]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).expect("literal words are valid")
}

fn simple(engine: &BraidEngine, n: usize, letters: &[usize]) -> Result<SimpleBraid> {
    SimpleBraid::from_word(engine, &word(n, letters))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Runs every claim check within the given bounds.
pub fn verify_all(engine: &BraidEngine, opts: &VerifyOptions) -> Result<VerificationReport> {
    let fib = opts.fib;
    let mut r = Builder { entries: Vec::new() };

    // simple-braid counts
    for n in 1..=opts.max_n_simple {
        let count = enum_simple(engine, n)?.len() as u64;
        r.push(
            format!("simple-count/n={n}"),
            format!("|SB_{n}| = F_{}", 2 * n - 1),
            json!(count),
            json!(fib(2 * n as u32 - 1)),
        );
    }

    // word problem
    let lhs = word(5, &[4, 3, 3, 2, 3]);
    let rhs = word(5, &[2, 4, 3, 2, 2]);
    r.push(
        "word-problem/equivalence",
        "x4x3x3x2x3 = x2x4x3x2x2 in MB_5",
        json!(engine.braid_eq(&lhs, &rhs)?),
        json!(true),
    );
    let (alpha, beta) = (word(5, &[1, 3, 2]), word(5, &[2, 3]));
    let ab = engine.canonical(&alpha.multiply(&beta)?)?;
    let ba = engine.canonical(&beta.multiply(&alpha)?)?;
    r.push(
        "word-problem/canonical-ab",
        "canonical form of x1x3x2 . x2x3",
        json!(ab.to_string()),
        json!("5: 1 3 2 2 3"),
    );
    r.push(
        "word-problem/canonical-ba",
        "canonical form of x2x3 . x1x3x2",
        json!(ba.to_string()),
        json!("5: 2 1 3 3 2"),
    );
    r.push(
        "word-problem/example-noncommuting",
        "x1x3x2 and x2x3 do not commute",
        json!(ab != ba),
        json!(true),
    );

    r.push(
        "projection/worked-value",
        "pi(x1x3x2x3) in one-line notation",
        json!(project(&word(5, &[1, 3, 2, 3])).to_string()),
        json!("[4,1,3,2,5]"),
    );

    // Garside divisors
    let limits = engine.limits();
    for n in 2..=opts.max_n_braids.min(limits.max_delta_n) {
        let div = enum_divisors_delta(engine, n)?;
        r.push(
            format!("garside/count/n={n}"),
            format!("|Div(Delta_{n})| = {n}!"),
            json!(div.len()),
            json!(factorial(n)),
        );
        let images: BTreeSet<_> = div.iter().map(|d| project(d.word())).collect();
        let all: BTreeSet<_> = enum_sym(limits, n)?.into_iter().collect();
        r.push(
            format!("garside/bijection/n={n}"),
            format!("pi restricted to Div(Delta_{n}) is a bijection onto Sigma_{n}"),
            json!(images.len() == div.len() && images == all),
            json!(true),
        );
        let simples = enum_simple(engine, n)?;
        let proper = simples.iter().all(|s| div.contains(s.canonical())) && simples.len() < div.len();
        if n >= 3 {
            r.push(
                format!("garside/proper-superset/n={n}"),
                format!("SB_{n} is a proper subset of Div(Delta_{n})"),
                json!(proper),
                json!(true),
            );
        }
        if n == 5 {
            let a = engine.canonical(&word(5, &[1, 3, 2, 3]))?;
            let in_simple = simples.iter().any(|s| s.canonical() == &a);
            r.push(
                "garside/non-simple-divisor",
                "x1x3x2x3 divides Delta_5 and is not simple",
                json!(div.contains(&a) && !in_simple),
                json!(true),
            );
        }
    }

    // centralizers of generators
    for n in 2..=opts.max_n_simple.min(6) {
        let mut agree = true;
        for i in 1..n {
            let brute = simple_centralizer(engine, &simple(engine, n, &[i])?, n)?.members;
            agree &= brute == centralizer_of_generator(engine, i, n)?;
        }
        r.push(
            format!("centralizer/generators/n={n}"),
            format!("C_{n}(x_i) = simple braids avoiding x_(i-1), x_(i+1)"),
            json!(agree),
            json!(true),
        );
    }

    // extension counts and the factorization through the tail set
    for n in 2..=4 {
        for m in 1..=2 {
            if n + m > opts.max_n_simple {
                continue;
            }
            let mut computed = Vec::new();
            let mut expected = Vec::new();
            for b in enum_simple(engine, n)?.iter().filter(|b| b.contains_letter(n - 1)) {
                let big = simple_centralizer(engine, b, n + m)?.count as u64;
                let small = simple_centralizer(engine, b, n)?.count as u64;
                computed.push(big);
                expected.push(small * fib(2 * m as u32 - 1));
            }
            r.push(
                format!("centralizer/extension-count/n={n},m={m}"),
                format!("c_{}(beta) = c_{n}(beta) F_{} for beta with x_{}", n + m, 2 * m - 1, n - 1),
                json!(computed),
                json!(expected),
            );
        }
    }
    for n in 2..=3 {
        for m in 1..=2 {
            if n + m > opts.max_n_simple {
                continue;
            }
            let mut holds = true;
            for b in enum_simple(engine, n)?.iter().filter(|b| b.contains_letter(n - 1)) {
                holds &= verify_struc_decomposition(engine, b, n, m)?.holds();
            }
            r.push(
                format!("centralizer/structure/n={n},m={m}"),
                format!("C_{}(beta) = C_{n}(beta) . E_{n}, uniquely", n + m),
                json!(holds),
                json!(true),
            );
        }
    }

    // closed-form values
    let x1 = simple(engine, 2, &[1])?;
    r.push(
        "centralizer/c2-x1",
        "c_2(x1) = 2",
        json!(simple_centralizer(engine, &x1, 2)?.count),
        json!(2),
    );
    for m in 1..=3 {
        if 2 + m > opts.max_n_simple {
            continue;
        }
        r.push(
            format!("centralizer/x1/m={m}"),
            format!("c_{}(x1) = 2 F_{}", 2 + m, 2 * m - 1),
            json!(simple_centralizer(engine, &x1, 2 + m)?.count as u64),
            json!(2 * fib(2 * m as u32 - 1)),
        );
    }
    for n in 3..=5 {
        for m in 1..=2 {
            if n + m > opts.max_n_simple {
                continue;
            }
            let top = simple(engine, n, &[n - 1])?;
            r.push(
                format!("centralizer/top-generator/n={n},m={m}"),
                format!("c_{}(x{}) = 2 F_{} F_{}", n + m, n - 1, 2 * n - 5, 2 * m - 1),
                json!(simple_centralizer(engine, &top, n + m)?.count as u64),
                json!(2 * fib(2 * n as u32 - 5) * fib(2 * m as u32 - 1)),
            );
        }
    }

    // lemmas
    for stats in lemmas::run_suite(engine, opts.seed, opts.lemma_cases)? {
        r.push(
            format!("lemma/{}", stats.name.replace(' ', "-")),
            format!(
                "{}: {} cases, premise held in {}",
                stats.name, stats.cases, stats.premise_held
            ),
            json!(stats.counterexamples.len()),
            json!(0),
        );
    }
    for n in 2..=4 {
        for m in 1..=2 {
            if n + m > opts.max_n_simple {
                continue;
            }
            let stats = lemmas::check_no_middle_letter(engine, n, m)?;
            r.push(
                format!("lemma/no-middle-letter/n={n},m={m}"),
                format!("members of C_{}(beta) avoid x{n} when x{} | beta", n + m, n - 1),
                json!(stats.counterexamples.len()),
                json!(0),
            );
        }
    }

    // commuting graphs
    let braid_graphs: Vec<(usize, CommutingGraph)> = (3..=opts.max_n_braids.min(6))
        .map(|n| Ok((n, graph_simple_braids(engine, n)?)))
        .collect::<Result<_>>()?;
    let perm_graphs: Vec<(usize, CommutingGraph, CommutingGraph)> = (3..=opts.max_n_perms.min(5))
        .map(|n| Ok((n, graph_simple_perms(engine, n)?, graph_sym(engine, n)?)))
        .collect::<Result<_>>()?;

    if let Some((_, g5)) = braid_graphs.iter().find(|(n, _)| *n == 5) {
        r.push("graph/sb5/vertices", "Gamma(SB_5) has 33 vertices", json!(g5.vertex_count()), json!(33));
        let big = g5.components().iter().filter(|c| c.len() >= 2).count();
        r.push(
            "graph/sb5/one-component",
            "Gamma(SB_5) has one non-trivial component, the rest isolated",
            json!(big),
            json!(1),
        );
    }
    for (n, g) in braid_graphs.iter().filter(|(n, _)| *n <= 5) {
        let mut ok = true;
        for b in enum_simple(engine, *n)?.into_iter().filter(|b| !b.is_empty()) {
            let c = simple_centralizer(engine, &b, *n)?.count;
            ok &= g.degree(&b.label()) == Some(c - 2);
        }
        r.push(
            format!("graph/degree-formula/n={n}"),
            format!("deg(beta) = c_{n}(beta) - 2 in Gamma(SB_{n})"),
            json!(ok),
            json!(true),
        );
    }
    if let Some((_, g6)) = braid_graphs.iter().find(|(n, _)| *n == 6) {
        let ok = g6.contains_complete_bipartite(&["x1", "x1x2", "x2x1"], &["x4", "x4x5", "x5x4"])?;
        r.push(
            "witness/k33-in-sb6",
            "Gamma(SB_6) contains K_3,3 on {x1,x1x2,x2x1} x {x4,x4x5,x5x4}",
            json!(ok),
            json!(true),
        );
    }
    if let Some((_, ss5, _)) = perm_graphs.iter().find(|(n, _, _)| *n == 5) {
        let clique = ss5.find_clique(5);
        let ok = match &clique {
            Some(c) => ss5.contains_clique(c)?,
            None => false,
        };
        r.push(
            "witness/k5-in-ssigma5",
            format!(
                "Gamma(SSigma_5) contains K_5 (found: {})",
                clique.map(|c| c.join(" ")).unwrap_or_else(|| "none".into())
            ),
            json!(ok),
            json!(true),
        );
    }

    for (n, g) in &braid_graphs {
        r.push(
            format!("planarity/sb/n={n}"),
            format!("Gamma(SB_{n}) planar iff n <= 5"),
            json!(g.planar()),
            json!(*n <= 5),
        );
    }
    for (n, ss, sigma) in &perm_graphs {
        r.push(
            format!("planarity/ssigma/n={n}"),
            format!("Gamma(SSigma_{n}) planar iff n <= 4"),
            json!(ss.planar()),
            json!(*n <= 4),
        );
        r.push(
            format!("planarity/sigma/n={n}"),
            format!("Gamma(Sigma_{n}) planar iff n <= 4"),
            json!(sigma.planar()),
            json!(*n <= 4),
        );
    }
    let k5 = CommutingGraph::from_parts(
        (0..5).map(|i| i.to_string()).collect(),
        (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))),
    )?;
    let k33 = CommutingGraph::from_parts(
        (0..6).map(|i| i.to_string()).collect(),
        (0..3).flat_map(|a| (3..6).map(move |b| (a, b))),
    )?;
    r.push("planarity/k5", "K_5 is non-planar", json!(k5.planar()), json!(false));
    r.push("planarity/k33", "K_3,3 is non-planar", json!(k33.planar()), json!(false));

    // refinement under the projection
    for (n, g) in &braid_graphs {
        let Some((_, ss, _)) = perm_graphs.iter().find(|(m, _, _)| m == n) else {
            continue;
        };
        let simples = enum_simple(engine, *n)?;
        let image = |label: &str| {
            simples
                .iter()
                .find(|b| b.label() == label)
                .map(|b| project(b.word()).to_string())
        };
        let maps = g.edges().all(|(a, b)| match (image(a), image(b)) {
            (Some(pa), Some(pb)) => ss.has_edge(&pa, &pb),
            _ => false,
        });
        let strict = !g.has_edge("x1x2", "x2x1")
            && matches!((image("x1x2"), image("x2x1")), (Some(a), Some(b)) if ss.has_edge(&a, &b));
        r.push(
            format!("refinement/n={n}"),
            format!("Gamma(SB_{n}) maps into Gamma(SSigma_{n}) properly, witnessed by x1x2, x2x1"),
            json!(maps && strict),
            json!(true),
        );
    }

    if let Some((_, _, sigma4)) = perm_graphs.iter().find(|(n, _, _)| *n == 4) {
        let core: BTreeSet<String> = sigma4.two_core().into_iter().collect();
        let degrees = sigma4.degrees();
        let rest_low = degrees
            .iter()
            .filter(|(v, _)| !core.contains(*v))
            .all(|(_, &d)| d <= 1);
        let core_graph = sigma4.induced(&core.iter().cloned().collect::<Vec<_>>())?;
        let one_piece = core_graph.components().len() == 1;
        r.push(
            "graph/sigma4-core",
            "Gamma(Sigma_4): off-core vertices have degree <= 1, the 2-core is connected and planar",
            json!(rest_low && one_piece && sigma4.planar()),
            json!(true),
        );
    }

    Ok(r.finish())
}
