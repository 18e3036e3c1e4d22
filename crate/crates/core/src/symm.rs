//! The symmetric group `Σ_n` in Coxeter generators and the projection
//! `π: MB_n → Σ_n`, `x_i ↦ s_i`.
//!
//! Permutations are stored in one-line notation, `image[k]` being the image
//! of point `k + 1`. Products read left to right: `compose(p, q)` applies `p`
//! first and then `q`, matching how a braid word is read.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::monoid::{BraidEngine, Limits};
use crate::simple::enum_simple;
use crate::word::BraidWord;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(image)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn from_one_line(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(BraidError::Precondition(format!(
                    "{image:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Disjoint-cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.degree() + 1];
        let mut out = String::new();
        for start in 1..=self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push_str(&format!("({})", cycle.iter().join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.image.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// The Coxeter generator `s_i = (i i+1)` in `Σ_n`.
pub fn transposition(i: usize, n: usize) -> Result<Permutation> {
    if i == 0 || i >= n {
        return Err(BraidError::LetterOutOfRange {
            letter: i,
            strands: n,
        });
    }
    let mut p = Permutation::identity(n);
    p.image.swap(i - 1, i);
    Ok(p)
}

/// Apply `p`, then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(BraidError::StrandMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(Permutation {
        image: p.image.iter().map(|&k| q.apply(k)).collect(),
    })
}

pub fn project(w: &BraidWord) -> Permutation {
    let mut image: Vec<usize> = (1..=w.strands()).collect();
    // post-composing with s_i swaps the values i and i+1 wherever they sit
    for &l in w.letters() {
        let i = l as usize;
        for v in image.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    Permutation { image }
}

pub fn perm_commute(p: &Permutation, q: &Permutation) -> Result<bool> {
    Ok(compose(p, q)? == compose(q, p)?)
}

/// All of `Σ_n` in lexicographic one-line order.
pub fn enum_sym(limits: &Limits, n: usize) -> Result<Vec<Permutation>> {
    limits.check("symmetric-group enumeration", n, limits.max_sym_n)?;
    Ok((1..=n)
        .permutations(n)
        .map(|image| Permutation { image })
        .collect())
}

/// The simple permutations `π(SB_n)`.
pub fn enum_simple_perms(engine: &BraidEngine, n: usize) -> Result<BTreeSet<Permutation>> {
    Ok(enum_simple(engine, n)?
        .iter()
        .map(|b| project(b.word()))
        .collect())
}
