//! Randomized and exhaustive checks of the structural lemmas about `MB_n`
//! and simple braids. Every check is driven by a seeded RNG, so a given seed
//! always produces the same cases and the same statistics.
//!
//! Each check reports how many cases it ran, how many of them satisfied the
//! lemma's hypothesis (an implication with a false premise proves nothing),
//! and any counterexamples found.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::centralizer::simple_centralizer;
use crate::error::Result;
use crate::monoid::BraidEngine;
use crate::simple::{enum_simple, SimpleBraid};
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaStats {
    pub name: &'static str,
    pub cases: usize,
    pub premise_held: usize,
    pub counterexamples: Vec<String>,
}

impl LemmaStats {
    fn new(name: &'static str) -> Self {
        LemmaStats {
            name,
            cases: 0,
            premise_held: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, premise: bool, conclusion: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if premise {
            self.premise_held += 1;
            if !conclusion && self.counterexamples.len() < 10 {
                self.counterexamples.push(describe());
            }
        }
    }
}

/// Largest strand count the randomized checks draw from.
pub const MAX_LEMMA_STRANDS: usize = 5;

fn random_word(rng: &mut ChaCha8Rng, n: usize, alphabet: std::ops::Range<usize>, max_len: usize) -> BraidWord {
    let len = if alphabet.is_empty() { 0 } else { rng.gen_range(0..=max_len) };
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(alphabet.clone())).collect();
    BraidWord::new(n, letters).expect("letters drawn inside 1..n")
}

fn with_top_letter(engine: &BraidEngine, n: usize, top: usize) -> Result<Vec<SimpleBraid>> {
    Ok(enum_simple(engine, n)?
        .into_iter()
        .filter(|b| b.contains_letter(top))
        .collect())
}

/// A simple braid containing `x_{n-1}` has `x_{n-1}` as a left or a right
/// divisor.
pub fn check_left_or_right(engine: &BraidEngine, rng: &mut ChaCha8Rng, cases: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("left-or-right divisor");
    let pools: Vec<Vec<SimpleBraid>> = (2..=MAX_LEMMA_STRANDS)
        .map(|n| with_top_letter(engine, n, n - 1))
        .collect::<Result<_>>()?;
    for _ in 0..cases {
        let n = rng.gen_range(2..=MAX_LEMMA_STRANDS);
        let beta = pools[n - 2].choose(rng).expect("x_{n-1} itself is in the pool");
        let top = BraidWord::generator(n, n - 1)?;
        let ok = engine.left_divides(&top, beta.word())? || engine.right_divides(&top, beta.word())?;
        stats.record(true, ok, || beta.label());
    }
    Ok(stats)
}

/// For `β ∈ SB_n` with `x_{n-1}` and `α ∈ SB_{n+1}` with `x_n`, `βα ≠ αβ`.
pub fn check_consecutive(engine: &BraidEngine, rng: &mut ChaCha8Rng, cases: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("consecutive top letters do not commute");
    let top = MAX_LEMMA_STRANDS - 1;
    let betas: Vec<Vec<SimpleBraid>> = (2..=top)
        .map(|n| with_top_letter(engine, n, n - 1))
        .collect::<Result<_>>()?;
    let alphas: Vec<Vec<SimpleBraid>> = (2..=top)
        .map(|n| with_top_letter(engine, n + 1, n))
        .collect::<Result<_>>()?;
    for _ in 0..cases {
        let n = rng.gen_range(2..=top);
        let beta = betas[n - 2].choose(rng).unwrap().embed(n + 1)?;
        let alpha = alphas[n - 2].choose(rng).unwrap();
        let commute = engine.commutes(beta.word(), alpha.word())?;
        stats.record(true, !commute, || format!("{} commutes with {}", beta.label(), alpha.label()));
    }
    Ok(stats)
}

/// If `x_{n-1} ∤ β`, then `x_{n-1} |_L βγ` forces `x_{n-1} |_L γ`, and
/// `x_{n-1} |_R γβ` forces `x_{n-1} |_R γ`.
pub fn check_divisor_propagation(engine: &BraidEngine, rng: &mut ChaCha8Rng, cases: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("top-letter divisor propagation");
    for k in 0..cases {
        let n = rng.gen_range(2..=MAX_LEMMA_STRANDS);
        let top = BraidWord::generator(n, n - 1)?;
        let beta = random_word(rng, n, 1..n - 1, 4);
        let mut gamma = random_word(rng, n, 1..n, 4);
        if rng.gen_bool(0.5) {
            // bias towards words that actually contain x_{n-1}
            let mut ls: Vec<usize> = gamma.letters().iter().map(|&l| l as usize).collect();
            let at = rng.gen_range(0..=ls.len());
            ls.insert(at, n - 1);
            gamma = BraidWord::new(n, ls)?;
        }
        if k % 2 == 0 {
            let premise = engine.left_divides(&top, &beta.multiply(&gamma)?)?;
            let conclusion = !premise || engine.left_divides(&top, &gamma)?;
            stats.record(premise, conclusion, || format!("left: beta={beta} gamma={gamma}"));
        } else {
            let premise = engine.right_divides(&top, &gamma.multiply(&beta)?)?;
            let conclusion = !premise || engine.right_divides(&top, &gamma)?;
            stats.record(premise, conclusion, || format!("right: beta={beta} gamma={gamma}"));
        }
    }
    Ok(stats)
}

/// `βγ = βδ ⇒ γ = δ` and `γβ = δβ ⇒ γ = δ`. Each draw yields two cases.
///
/// The first case splits a random word `u` of `βγ` after `|β|` letters and
/// takes `δ` from the remainder; whenever the head is a word of `β` the
/// premise holds by construction. The second case draws `δ` at random.
pub fn check_cancellation(engine: &BraidEngine, rng: &mut ChaCha8Rng, cases: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("left and right cancellation");
    for k in 0..cases {
        let n = rng.gen_range(2..=MAX_LEMMA_STRANDS);
        let beta = random_word(rng, n, 1..n, 3);
        let gamma = random_word(rng, n, 1..n, 4);
        let left = k % 2 == 0;
        let product = if left { beta.multiply(&gamma)? } else { gamma.multiply(&beta)? };
        let class: Vec<BraidWord> = engine.equivalence_class(&product)?.into_iter().collect();
        let u = class.choose(rng).expect("class is non-empty");
        let b = beta.len();
        let (head, tail) = if left {
            (&u.letters()[..b], &u.letters()[b..])
        } else {
            let cut = u.len() - b;
            (&u.letters()[cut..], &u.letters()[..cut])
        };
        let head = BraidWord::new(n, head.iter().map(|&l| l as usize))?;
        let delta = BraidWord::new(n, tail.iter().map(|&l| l as usize))?;
        let premise = engine.braid_eq(&head, &beta)?;
        let conclusion = !premise || engine.braid_eq(&delta, &gamma)?;
        stats.record(premise, conclusion, || format!("beta={beta} gamma={gamma} delta={delta}"));

        let other = random_word(rng, n, 1..n, gamma.len());
        let (lhs, rhs) = if left {
            (beta.multiply(&gamma)?, beta.multiply(&other)?)
        } else {
            (gamma.multiply(&beta)?, other.multiply(&beta)?)
        };
        let premise = engine.braid_eq(&lhs, &rhs)?;
        let conclusion = !premise || engine.braid_eq(&gamma, &other)?;
        stats.record(premise, conclusion, || format!("beta={beta} gamma={gamma} delta={other}"));
    }
    Ok(stats)
}

/// In a cancellative monoid: if `β` commutes with `γ₁γ₂` and with one
/// factor, it commutes with the other.
pub fn check_factor_commutation(engine: &BraidEngine, rng: &mut ChaCha8Rng, cases: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("commuting with a product and one factor");
    let pools: Vec<Vec<SimpleBraid>> = (2..=MAX_LEMMA_STRANDS)
        .map(|n| enum_simple(engine, n))
        .collect::<Result<_>>()?;
    for k in 0..cases {
        let n = rng.gen_range(2..=MAX_LEMMA_STRANDS);
        let pool = &pools[n - 2];
        let beta = pool.choose(rng).unwrap().word().clone();
        let g1 = pool.choose(rng).unwrap().word().clone();
        let g2 = pool.choose(rng).unwrap().word().clone();
        let with_product = engine.commutes(&beta, &g1.multiply(&g2)?)?;
        let (known, other) = if k % 2 == 0 { (&g1, &g2) } else { (&g2, &g1) };
        let premise = with_product && engine.commutes(&beta, known)?;
        let conclusion = !premise || engine.commutes(&beta, other)?;
        stats.record(premise, conclusion, || format!("beta={beta} g1={g1} g2={g2}"));
    }
    Ok(stats)
}

/// Exhaustive: when `x_{n-1} | β`, no member of `C_{n+m}(β)` contains `x_n`.
pub fn check_no_middle_letter(engine: &BraidEngine, n: usize, m: usize) -> Result<LemmaStats> {
    let mut stats = LemmaStats::new("extended centralizer avoids x_n");
    for beta in with_top_letter(engine, n, n - 1)? {
        let c = simple_centralizer(engine, &beta, n + m)?;
        for g in &c.members {
            stats.record(true, !g.contains_letter(n), || {
                format!("{} in C_{}({})", g.label(), n + m, beta.label())
            });
        }
    }
    Ok(stats)
}

/// The randomized suite with `cases` draws per lemma.
pub fn run_suite(engine: &BraidEngine, seed: u64, cases: usize) -> Result<Vec<LemmaStats>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(vec![
        check_left_or_right(engine, &mut rng, cases)?,
        check_consecutive(engine, &mut rng, cases)?,
        check_divisor_propagation(engine, &mut rng, cases)?,
        check_cancellation(engine, &mut rng, cases)?,
        check_factor_commutation(engine, &mut rng, cases)?,
    ])
}
