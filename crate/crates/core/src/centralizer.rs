//! Simple centralizers `C_n(β) = {γ ∈ SB_n : βγ = γβ}` and executable forms
//! of their structure results.
//!
//! Every set here is computed by brute force over `SB_n` using word-problem
//! equality of the two products. The closed-form predictions live next to the
//! brute-force routines so that tests can hold one against the other.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::monoid::BraidEngine;
use crate::simple::{enum_simple, fib, SimpleBraid};

#[derive(Debug, Clone, Serialize)]
pub struct CentralizerResult {
    pub base: SimpleBraid,
    pub strands: usize,
    pub members: Vec<SimpleBraid>,
    pub count: usize,
}

/// `E_n`: simple braids of `MB_{n+m}` that avoid every letter `x_j`, `j <= n`.
#[derive(Debug, Clone, Serialize)]
pub struct TailSet {
    pub n: usize,
    pub m: usize,
    pub members: Vec<SimpleBraid>,
}

/// Outcome of checking `C_{n+m}(β) = C_n(β) · E_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub centralizer_size: usize,
    pub pairs: usize,
    pub distinct_products: usize,
    pub sets_equal: bool,
}

impl Decomposition {
    pub fn injective(&self) -> bool {
        self.pairs == self.distinct_products
    }

    pub fn holds(&self) -> bool {
        self.sets_equal && self.injective()
    }
}

/// `C_n(β)` by filtering `SB_n`. `beta` may come from a smaller monoid and is
/// embedded into `MB_n`.
pub fn simple_centralizer(
    engine: &BraidEngine,
    beta: &SimpleBraid,
    n: usize,
) -> Result<CentralizerResult> {
    let base = beta.embed(n)?;
    let candidates = enum_simple(engine, n)?;
    let members = candidates
        .into_par_iter()
        .map(|g| Ok(engine.commutes(base.word(), g.word())?.then_some(g)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    Ok(CentralizerResult {
        count: members.len(),
        base,
        strands: n,
        members,
    })
}

/// The set `{β ∈ SB_n : x_{i-1} ∤ β and x_{i+1} ∤ β}`, which is the closed
/// form of `C_n(x_i)`. No commutation is tested here.
pub fn centralizer_of_generator(
    engine: &BraidEngine,
    i: usize,
    n: usize,
) -> Result<Vec<SimpleBraid>> {
    if i == 0 || i >= n {
        return Err(BraidError::LetterOutOfRange {
            letter: i,
            strands: n,
        });
    }
    Ok(enum_simple(engine, n)?
        .into_iter()
        .filter(|b| !b.contains_letter(i - 1) && !b.contains_letter(i + 1))
        .collect())
}

pub fn tail_set(engine: &BraidEngine, n: usize, m: usize) -> Result<TailSet> {
    if m == 0 {
        return Err(BraidError::Precondition("tail set needs m >= 1".into()));
    }
    let members = enum_simple(engine, n + m)?
        .into_iter()
        .filter(|b| b.letters().iter().all(|&l| l as usize > n))
        .collect();
    Ok(TailSet { n, m, members })
}

fn require_top_letter(beta: &SimpleBraid, n: usize) -> Result<()> {
    if beta.strands() > n || n < 2 || !beta.contains_letter(n - 1) {
        return Err(BraidError::Precondition(format!(
            "{} must be a simple braid of MB_{n} containing x{}",
            beta.label(),
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Checks that `C_{n+m}(β)` is exactly the set of products `γ₁γ₂` with
/// `γ₁ ∈ C_n(β)` and `γ₂ ∈ E_n`, and that distinct pairs give distinct
/// products. Requires `x_{n-1} | β`.
pub fn verify_struc_decomposition(
    engine: &BraidEngine,
    beta: &SimpleBraid,
    n: usize,
    m: usize,
) -> Result<Decomposition> {
    require_top_letter(beta, n)?;
    let big = simple_centralizer(engine, beta, n + m)?;
    let small = simple_centralizer(engine, beta, n)?;
    let tails = tail_set(engine, n, m)?;

    let mut products = BTreeSet::new();
    let mut pairs = 0;
    for g1 in &small.members {
        let g1 = g1.embed(n + m)?;
        for g2 in &tails.members {
            pairs += 1;
            products.insert(engine.canonical(&g1.word().multiply(g2.word())?)?);
        }
    }
    let lhs: BTreeSet<_> = big.members.iter().map(|b| b.canonical().clone()).collect();
    Ok(Decomposition {
        centralizer_size: lhs.len(),
        pairs,
        distinct_products: products.len(),
        sets_equal: lhs == products,
    })
}

/// `c_n(β) · F_{2m-1}`, with `c_n(β)` computed by brute force.
pub fn predicted_count(engine: &BraidEngine, beta: &SimpleBraid, n: usize, m: usize) -> Result<u64> {
    require_top_letter(beta, n)?;
    if m == 0 {
        return Err(BraidError::Precondition("m must be >= 1".into()));
    }
    let c_n = simple_centralizer(engine, beta, n)?.count as u64;
    Ok(c_n * fib(2 * m as u32 - 1))
}
