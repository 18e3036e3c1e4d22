//! Simple braids, the Garside braid `Δ_n` and its divisors.
//!
//! A braid is simple when it has a word using every generator at most once.
//! Since a repeated letter is needed before the braid relation can fire, the
//! words of a simple braid are exactly the commutation-reorderings of one
//! distinct-letter word, and simplicity can be read off any representative.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::monoid::{BraidEngine, CanonicalBraid};
use crate::word::{BraidWord, Letter};

/// Fibonacci number `F_k` with `F_0 = 0`, `F_1 = 1`, or `None` on `u64`
/// overflow (from `k = 94`).
pub fn checked_fib(k: u32) -> Option<u64> {
    if k == 0 {
        return Some(0);
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..k {
        let next = a.checked_add(b)?;
        a = b;
        b = next;
    }
    Some(b)
}

/// Fibonacci number `F_k`.
///
/// # Panics
///
/// If `F_k` does not fit in a `u64`.
pub fn fib(k: u32) -> u64 {
    checked_fib(k).unwrap_or_else(|| panic!("F_{k} overflows u64"))
}

pub fn is_simple(w: &BraidWord) -> bool {
    let mut seen = [false; 256];
    w.letters()
        .iter()
        .all(|&l| !std::mem::replace(&mut seen[l as usize], true))
}

/// A simple braid, held in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SimpleBraid(CanonicalBraid);

impl SimpleBraid {
    pub fn new(canon: CanonicalBraid) -> Result<Self> {
        if is_simple(canon.word()) {
            Ok(SimpleBraid(canon))
        } else {
            Err(BraidError::Precondition(format!(
                "{} repeats a generator and is not simple",
                canon.label()
            )))
        }
    }

    pub fn from_word(engine: &BraidEngine, w: &BraidWord) -> Result<Self> {
        Self::new(engine.canonical(w)?)
    }

    pub fn canonical(&self) -> &CanonicalBraid {
        &self.0
    }

    pub fn word(&self) -> &BraidWord {
        self.0.word()
    }

    pub fn strands(&self) -> usize {
        self.0.strands()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_letter(&self, i: usize) -> bool {
        self.0.word().contains_letter(i)
    }

    pub fn label(&self) -> String {
        self.0.label()
    }

    /// The same braid in `MB_m`. Embedding keeps the canonical word.
    pub fn embed(&self, m: usize) -> Result<SimpleBraid> {
        Ok(SimpleBraid(CanonicalBraid::assume(self.word().embed(m)?)))
    }
}

impl fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleBraid({})", self.label())
    }
}

/// All simple braids of `MB_n`, identity included, in shortlex order.
///
/// Every injective letter sequence over `{1, ..., n-1}` is canonicalized and
/// the results deduplicated; the count is `F_{2n-1}`.
pub fn enum_simple(engine: &BraidEngine, n: usize) -> Result<Vec<SimpleBraid>> {
    engine
        .limits()
        .check("simple-braid enumeration", n, engine.limits().max_simple_n)?;
    crate::word::check_strands(n)?;
    let alphabet: Vec<Letter> = (1..n).map(|l| l as Letter).collect();
    let canon: HashSet<Vec<Letter>> = (0..=alphabet.len())
        .into_par_iter()
        .flat_map_iter(|k| {
            alphabet
                .iter()
                .copied()
                .permutations(k)
                .map(|seq| crate::monoid::distinct_letter_normal_form(&seq))
                .collect::<HashSet<_>>()
        })
        .collect();
    let mut out: Vec<SimpleBraid> = canon
        .into_iter()
        .map(|letters| SimpleBraid(CanonicalBraid::assume(BraidWord::from_raw(n, letters))))
        .collect();
    out.sort_by(|a, b| a.0.shortlex_cmp(&b.0));
    Ok(out)
}

/// The Garside braid `x_1 (x_2 x_1) ... (x_{n-1} ... x_1)` as a literal word.
pub fn delta(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::Precondition(format!(
            "the Garside braid needs n >= 2, got {n}"
        )));
    }
    BraidWord::new(n, (1..n).flat_map(|k| (1..=k).rev()))
}

/// `Div(Δ_n)`: canonical forms of every factor of every word of `Δ_n`.
pub fn enum_divisors_delta(engine: &BraidEngine, n: usize) -> Result<BTreeSet<CanonicalBraid>> {
    engine
        .limits()
        .check("Garside divisor enumeration", n, engine.limits().max_delta_n)?;
    let top = delta(n)?;
    let class: Vec<BraidWord> = engine.equivalence_class(&top)?.into_iter().collect();
    let factors: HashSet<Vec<Letter>> = class
        .par_iter()
        .flat_map_iter(|w| {
            let ls = w.letters();
            (0..=ls.len())
                .flat_map(move |i| (i..=ls.len()).map(move |j| ls[i..j].to_vec()))
                .collect::<HashSet<_>>()
        })
        .collect();
    factors
        .into_par_iter()
        .map(|f| engine.canonical(&BraidWord::from_raw(n, f)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Limits;
    use proptest::prelude::*;

    fn w(n: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    /// Recurrence iterated by hand, kept separate from `checked_fib`.
    const FIB_TABLE: [u64; 14] = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233];

    #[test]
    fn fibonacci_values() {
        for (k, &v) in FIB_TABLE.iter().enumerate() {
            assert_eq!(fib(k as u32), v);
        }
        assert_eq!(fib(9), 34);
        assert_eq!(checked_fib(93), Some(12_200_160_415_121_876_738));
        assert_eq!(checked_fib(94), None);
    }

    #[test]
    #[should_panic(expected = "overflows")]
    fn fib_panics_on_overflow() {
        fib(100);
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&w(5, &[1, 3, 2, 4])));
        assert!(!is_simple(&w(5, &[1, 3, 2, 3])));
        assert!(is_simple(&BraidWord::identity(5).unwrap()));
    }

    #[test]
    fn simple_braids_of_three_strands() {
        let e = BraidEngine::default();
        let labels: Vec<_> = enum_simple(&e, 3).unwrap().iter().map(|b| b.label()).collect();
        assert_eq!(labels, ["e", "x1", "x2", "x1x2", "x2x1"]);
        let one: Vec<_> = enum_simple(&e, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].is_empty());
    }

    #[test]
    fn simple_counts_follow_fibonacci() {
        let e = BraidEngine::default();
        for n in 1..=8 {
            assert_eq!(enum_simple(&e, n).unwrap().len() as u64, fib(2 * n as u32 - 1), "n = {n}");
        }
    }

    #[test]
    fn simple_enumeration_cap() {
        let e = BraidEngine::new(Limits {
            max_simple_n: 4,
            ..Limits::default()
        });
        assert!(enum_simple(&e, 5).unwrap_err().is_resource_limit());
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta(2).unwrap(), w(2, &[1]));
        assert_eq!(delta(3).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(delta(4).unwrap(), w(4, &[1, 2, 1, 3, 2, 1]));
        assert_eq!(delta(6).unwrap().len(), 15);
        assert!(delta(1).is_err());
    }

    #[test]
    fn garside_divisors() {
        let e = BraidEngine::default();
        assert_eq!(enum_divisors_delta(&e, 3).unwrap().len(), 6);
        let div5 = enum_divisors_delta(&e, 5).unwrap();
        assert_eq!(div5.len(), 120);
        assert!(div5.contains(&e.canonical(&w(5, &[1, 3, 2, 3])).unwrap()));
        for s in enum_simple(&e, 5).unwrap() {
            assert!(div5.contains(s.canonical()));
        }
        assert!(enum_divisors_delta(&e, 6).unwrap_err().is_resource_limit());
    }

    #[test]
    fn simple_braids_with_top_letter_move_to_an_end() {
        let e = BraidEngine::default();
        for n in 2..=6 {
            let top = BraidWord::generator(n, n - 1).unwrap();
            for b in enum_simple(&e, n).unwrap() {
                if b.contains_letter(n - 1) {
                    let l = e.left_divides(&top, b.word()).unwrap();
                    let r = e.right_divides(&top, b.word()).unwrap();
                    assert!(l || r, "{}", b.label());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn simplicity_is_class_invariant(ls in prop::collection::vec(1usize..5, 0..7)) {
            let word = BraidWord::new(5, ls).unwrap();
            let class = BraidEngine::shared().equivalence_class(&word).unwrap();
            let every_member_simple = class.iter().all(is_simple);
            prop_assert_eq!(is_simple(&word), every_member_simple);
        }
    }
}
