//! The word problem in the positive braid monoid `MB_n`.
//!
//! Both defining relations are length preserving:
//!
//! ```text
//! x_{i+1} x_i x_{i+1} = x_i x_{i+1} x_i
//! x_i x_j             = x_j x_i          for |i - j| >= 2
//! ```
//!
//! so the equivalence class of a word is a finite set of words of the same
//! length, and its lexicographically least member is a complete invariant.
//! [`BraidEngine`] computes classes by breadth-first closure, memoizes the
//! resulting canonical forms in a concurrent map, and answers equality and
//! divisibility queries on top of them.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::word::{same_strands, BraidWord, Letter};

/// Resource caps. Every enumerator checks its cap up front and fails with a
/// resource-limit error rather than running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest equivalence class the closure will materialize.
    pub max_class_size: usize,
    /// Largest `n` for simple-braid enumeration.
    pub max_simple_n: usize,
    /// Largest `n` for enumerating `Div(Δ_n)`.
    pub max_delta_n: usize,
    /// Largest `n` for enumerating all of `Σ_n`.
    pub max_sym_n: usize,
    /// Largest `n` for the commuting graph of simple braids.
    pub max_graph_braid_n: usize,
    /// Largest `n` for the two permutation commuting graphs.
    pub max_graph_perm_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_class_size: 1_000_000,
            max_simple_n: 10,
            max_delta_n: 5,
            max_sym_n: 7,
            max_graph_braid_n: 7,
            max_graph_perm_n: 6,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, what: &'static str, n: usize, max: usize) -> Result<()> {
        if n > max {
            Err(BraidError::EnumerationCap { what, n, max })
        } else {
            Ok(())
        }
    }
}

/// The lexicographically least word of an equivalence class.
///
/// Only [`BraidEngine::canonical`] constructs these, so two values are equal
/// as monoid elements exactly when they are equal as Rust values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalBraid(BraidWord);

impl CanonicalBraid {
    /// Wraps a word already known to be lex-least in its class.
    pub(crate) fn assume(word: BraidWord) -> Self {
        CanonicalBraid(word)
    }

    pub fn word(&self) -> &BraidWord {
        &self.0
    }

    pub fn into_word(self) -> BraidWord {
        self.0
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

    pub fn label(&self) -> String {
        self.0.label()
    }

    /// Shortlex order: by length, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.letters()).cmp(&(other.len(), other.letters()))
    }
}

impl fmt::Display for CanonicalBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CanonicalBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalBraid({})", self.0)
    }
}

/// Classes up to this size are memoized member-by-member; larger ones only
/// record the queried word.
const MEMO_CLASS_LIMIT: usize = 50_000;

/// Word-problem engine: equivalence closure, canonical forms, equality and
/// divisibility, plus the resource limits the higher-level enumerators obey.
///
/// The canonical-form cache is keyed by letter sequence (canonical forms do
/// not depend on the strand count) and is safe to share across threads.
pub struct BraidEngine {
    limits: Limits,
    cache: DashMap<Vec<Letter>, Arc<[Letter]>>,
}

impl Default for BraidEngine {
    fn default() -> Self {
        Self::new(Limits::default())
    }
}

static SHARED: Lazy<BraidEngine> = Lazy::new(BraidEngine::default);

impl BraidEngine {
    pub fn new(limits: Limits) -> Self {
        BraidEngine {
            limits,
            cache: DashMap::new(),
        }
    }

    /// Process-wide engine with default limits.
    pub fn shared() -> &'static BraidEngine {
        &SHARED
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cached_words(&self) -> usize {
        self.cache.len()
    }

    /// All words reachable from `w` by applying either relation in either
    /// direction, anywhere in the word.
    pub fn equivalence_class(&self, w: &BraidWord) -> Result<BTreeSet<BraidWord>> {
        let class = self.class_of(w.letters())?;
        Ok(class
            .into_iter()
            .map(|letters| BraidWord::from_raw(w.strands(), letters))
            .collect())
    }

    pub fn canonical(&self, w: &BraidWord) -> Result<CanonicalBraid> {
        let letters = self.canonical_letters(w.letters())?;
        Ok(CanonicalBraid(BraidWord::from_raw(
            w.strands(),
            letters.to_vec(),
        )))
    }

    pub fn braid_eq(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        same_strands(u, v)?;
        self.equal_letters(u.letters(), v.letters())
    }

    /// Whether `u·v = v·u` in the monoid.
    pub fn commutes(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        same_strands(u, v)?;
        let uv = [u.letters(), v.letters()].concat();
        let vu = [v.letters(), u.letters()].concat();
        self.equal_letters(&uv, &vu)
    }

    /// `g | b`: some word of `b` contains a factor equivalent to `g`.
    pub fn divides(&self, g: &BraidWord, b: &BraidWord) -> Result<bool> {
        self.factor_search(g, b, |len, glen| 0..=len - glen)
    }

    /// `g |_L b`: some word of `b` has a prefix equivalent to `g`.
    pub fn left_divides(&self, g: &BraidWord, b: &BraidWord) -> Result<bool> {
        self.factor_search(g, b, |_, _| 0..=0)
    }

    /// `g |_R b`: some word of `b` has a suffix equivalent to `g`.
    pub fn right_divides(&self, g: &BraidWord, b: &BraidWord) -> Result<bool> {
        self.factor_search(g, b, |len, glen| len - glen..=len - glen)
    }

    /// `x_i | b`. Both relations preserve the set of letters that occur, so
    /// this is literal membership.
    pub fn letter_divides(&self, i: usize, b: &BraidWord) -> Result<bool> {
        if i == 0 || i >= b.strands() {
            return Err(BraidError::LetterOutOfRange {
                letter: i,
                strands: b.strands(),
            });
        }
        Ok(b.contains_letter(i))
    }

    fn factor_search<R>(
        &self,
        g: &BraidWord,
        b: &BraidWord,
        offsets: impl Fn(usize, usize) -> R,
    ) -> Result<bool>
    where
        R: Iterator<Item = usize>,
    {
        same_strands(g, b)?;
        let glen = g.len();
        if glen > b.len() {
            return Ok(false);
        }
        if glen == 0 {
            return Ok(true);
        }
        let targets = self.class_of(g.letters())?;
        let class = self.class_of(b.letters())?;
        Ok(class.iter().any(|member| {
            offsets(member.len(), glen).any(|at| targets.contains(&member[at..at + glen]))
        }))
    }

    pub(crate) fn equal_letters(&self, u: &[Letter], v: &[Letter]) -> Result<bool> {
        if u == v {
            return Ok(true);
        }
        if u.len() != v.len() || !same_letter_set(u, v) || !same_permutation(u, v) {
            return Ok(false);
        }
        Ok(self.canonical_letters(u)? == self.canonical_letters(v)?)
    }

    pub(crate) fn canonical_letters(&self, w: &[Letter]) -> Result<Arc<[Letter]>> {
        if let Some(hit) = self.cache.get(w) {
            return Ok(hit.clone());
        }
        if has_distinct_letters(w) {
            let canon: Arc<[Letter]> = distinct_letter_normal_form(w).into();
            self.cache.insert(w.to_vec(), canon.clone());
            return Ok(canon);
        }
        let class = self.class_of(w)?;
        let canon: Arc<[Letter]> = class
            .iter()
            .min()
            .expect("class contains its seed")
            .as_slice()
            .into();
        if class.len() <= MEMO_CLASS_LIMIT {
            for member in class {
                self.cache.insert(member, canon.clone());
            }
        } else {
            self.cache.insert(w.to_vec(), canon.clone());
        }
        Ok(canon)
    }

    fn class_of(&self, w: &[Letter]) -> Result<HashSet<Vec<Letter>>> {
        let cap = self.limits.max_class_size;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(word) = queue.pop_front() {
            for next in rewrites(&word) {
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(BraidError::ClassTooLarge { cap });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }
}

/// Every word obtained from `w` by one application of a relation.
fn rewrites(w: &[Letter]) -> impl Iterator<Item = Vec<Letter>> + '_ {
    let commutations = w
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0].abs_diff(pair[1]) >= 2)
        .map(move |(at, _)| {
            let mut next = w.to_vec();
            next.swap(at, at + 1);
            next
        });
    let braid_moves = w
        .windows(3)
        .enumerate()
        .filter(|(_, t)| t[0] == t[2] && t[0].abs_diff(t[1]) == 1)
        .map(move |(at, t)| {
            let mut next = w.to_vec();
            next[at] = t[1];
            next[at + 1] = t[0];
            next[at + 2] = t[1];
            next
        });
    commutations.chain(braid_moves)
}

fn has_distinct_letters(w: &[Letter]) -> bool {
    let mut seen = [false; 256];
    w.iter().all(|&l| !std::mem::replace(&mut seen[l as usize], true))
}

/// Lex-least word for a word without repeated letters.
///
/// With no repeated letter the braid relation can never fire, so the class is
/// the set of reorderings that keep every pair of adjacent-index letters in
/// their original relative order. Greedily emitting the smallest letter that
/// has no adjacent-index letter before it yields the least such reordering.
pub(crate) fn distinct_letter_normal_form(w: &[Letter]) -> Vec<Letter> {
    let mut rest = w.to_vec();
    let mut out = Vec::with_capacity(w.len());
    while !rest.is_empty() {
        let pick = (0..rest.len())
            .filter(|&k| rest[..k].iter().all(|&p| p.abs_diff(rest[k]) != 1))
            .min_by_key(|&k| rest[k])
            .expect("first remaining letter is always available");
        out.push(rest.remove(pick));
    }
    out
}

fn same_letter_set(u: &[Letter], v: &[Letter]) -> bool {
    let mut a = [false; 256];
    let mut b = [false; 256];
    u.iter().for_each(|&l| a[l as usize] = true);
    v.iter().for_each(|&l| b[l as usize] = true);
    a == b
}

/// Necessary condition: equivalent words have the same image in `Σ_n`.
fn same_permutation(u: &[Letter], v: &[Letter]) -> bool {
    let n = u.iter().chain(v).copied().max().unwrap_or(0) as usize + 1;
    let apply = |w: &[Letter]| {
        let mut pos: Vec<usize> = (0..=n).collect();
        for &l in w {
            pos.swap(l as usize, l as usize + 1);
        }
        pos
    };
    apply(u) == apply(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    fn engine() -> BraidEngine {
        BraidEngine::default()
    }

    #[test]
    fn class_of_equivalence_example() {
        let class = engine().equivalence_class(&w(5, &[4, 3, 3, 2, 3])).unwrap();
        assert!(class.contains(&w(5, &[2, 4, 3, 2, 2])));
        assert!(class.iter().all(|m| m.len() == 5));
    }

    #[test]
    fn class_of_identity_is_singleton() {
        let e = BraidWord::identity(4).unwrap();
        let class = engine().equivalence_class(&e).unwrap();
        assert_eq!(class.into_iter().collect::<Vec<_>>(), vec![e]);
    }

    #[test]
    fn class_with_only_one_commutation() {
        let class = engine().equivalence_class(&w(5, &[1, 3, 2, 2, 3])).unwrap();
        let expected: BTreeSet<_> = [w(5, &[1, 3, 2, 2, 3]), w(5, &[3, 1, 2, 2, 3])].into();
        assert_eq!(class, expected);
    }

    #[test]
    fn class_cap_is_enforced() {
        let tiny = BraidEngine::new(Limits {
            max_class_size: 3,
            ..Limits::default()
        });
        let delta4 = w(4, &[1, 2, 1, 3, 2, 1]);
        assert_eq!(
            tiny.canonical(&delta4).unwrap_err(),
            BraidError::ClassTooLarge { cap: 3 }
        );
        assert!(tiny.canonical(&w(4, &[1, 2])).is_ok());
    }

    #[test]
    fn canonical_examples() {
        let e = engine();
        let ab = w(5, &[1, 3, 2]).multiply(&w(5, &[2, 3])).unwrap();
        let ba = w(5, &[2, 3]).multiply(&w(5, &[1, 3, 2])).unwrap();
        assert_eq!(e.canonical(&ab).unwrap().word(), &w(5, &[1, 3, 2, 2, 3]));
        assert_eq!(e.canonical(&ba).unwrap().word(), &w(5, &[2, 1, 3, 3, 2]));
        assert_eq!(e.canonical(&w(5, &[3])).unwrap().word(), &w(5, &[3]));
    }

    #[test]
    fn braid_eq_examples() {
        let e = engine();
        assert!(e.braid_eq(&w(5, &[4, 3, 3, 2, 3]), &w(5, &[2, 4, 3, 2, 2])).unwrap());
        assert!(!e.braid_eq(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
        let x = w(4, &[1, 2, 1, 3]);
        assert!(e.braid_eq(&x, &x).unwrap());
        assert!(matches!(
            e.braid_eq(&w(3, &[1]), &w(4, &[1])),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn embedding_preserves_commutation() {
        let e = engine();
        let (a, b) = (w(4, &[1]), w(4, &[3]));
        assert!(e.commutes(&a, &b).unwrap());
        assert!(e.commutes(&a.embed(6).unwrap(), &b.embed(6).unwrap()).unwrap());
        let (a, b) = (w(3, &[1, 2]), w(3, &[2, 1]));
        assert!(!e.commutes(&a, &b).unwrap());
        assert!(!e.commutes(&a.embed(6).unwrap(), &b.embed(6).unwrap()).unwrap());
    }

    #[test]
    fn divisibility_examples() {
        let e = engine();
        assert!(e.divides(&w(5, &[3]), &w(5, &[1, 3, 2, 3])).unwrap());
        assert!(!e.divides(&w(3, &[2, 1]), &w(3, &[1, 2])).unwrap());
        let delta5 = w(5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1]);
        assert!(e.divides(&w(5, &[1, 3, 2, 3]), &delta5).unwrap());

        assert!(e.left_divides(&w(5, &[1]), &w(5, &[1, 3, 2, 4])).unwrap());
        assert!(e.left_divides(&w(5, &[3]), &w(5, &[1, 3, 2, 4])).unwrap());
        assert!(!e.left_divides(&w(3, &[2]), &w(3, &[1, 2])).unwrap());
        assert!(e.right_divides(&w(3, &[2]), &w(3, &[1, 2])).unwrap());
        assert!(!e.right_divides(&w(3, &[1]), &w(3, &[1, 2])).unwrap());
        // x2x1x2 = x1x2x1, so x1 is a right divisor of x2x1x2
        assert!(e.right_divides(&w(3, &[1]), &w(3, &[2, 1, 2])).unwrap());

        let empty = BraidWord::identity(5).unwrap();
        assert!(e.left_divides(&empty, &w(5, &[2])).unwrap());
        assert!(!e.divides(&w(5, &[2, 2]), &w(5, &[2])).unwrap());
    }

    #[test]
    fn letter_divides_examples() {
        let e = engine();
        assert!(e.letter_divides(3, &w(5, &[1, 3, 2, 4])).unwrap());
        assert!(!e.letter_divides(2, &w(5, &[1, 3])).unwrap());
        assert!(e.letter_divides(4, &w(5, &[4, 3, 3, 2, 3])).unwrap());
        assert!(e.letter_divides(5, &w(5, &[1])).is_err());
    }

    #[test]
    fn distinct_letter_fast_path_matches_closure() {
        let e = engine();
        for letters in [vec![4u8, 3, 1, 2], vec![3, 1, 4, 2], vec![5, 1, 3, 2, 4]] {
            let class = e.class_of(&letters).unwrap();
            let least = class.iter().min().unwrap().clone();
            assert_eq!(distinct_letter_normal_form(&letters), least);
        }
    }

    fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn class_is_length_preserving_and_closed(word in word_strategy(5, 7)) {
            let e = BraidEngine::shared();
            let class = e.equivalence_class(&word).unwrap();
            let raw: HashSet<Vec<Letter>> = class.iter().map(|m| m.letters().to_vec()).collect();
            for member in &class {
                prop_assert_eq!(member.len(), word.len());
                for next in rewrites(member.letters()) {
                    prop_assert!(raw.contains(&next));
                }
            }
        }

        #[test]
        fn canonical_is_idempotent_and_class_invariant(word in word_strategy(5, 7)) {
            let e = BraidEngine::shared();
            let canon = e.canonical(&word).unwrap();
            prop_assert_eq!(&e.canonical(canon.word()).unwrap(), &canon);
            for member in e.equivalence_class(&word).unwrap() {
                prop_assert_eq!(&e.canonical(&member).unwrap(), &canon);
            }
        }

        #[test]
        fn distinct_letter_fast_path_agrees(perm in Just((1u8..8).collect::<Vec<_>>()).prop_shuffle(), k in 0usize..8) {
            let letters = &perm[..k];
            let fresh = BraidEngine::default();
            let least = fresh.class_of(letters).unwrap().into_iter().min().unwrap();
            prop_assert_eq!(distinct_letter_normal_form(letters), least);
        }

        #[test]
        fn equality_is_a_congruence(u in word_strategy(4, 4), v in word_strategy(4, 4), c in word_strategy(4, 3)) {
            let e = BraidEngine::shared();
            if e.braid_eq(&u, &v).unwrap() {
                prop_assert!(e.braid_eq(&c.multiply(&u).unwrap(), &c.multiply(&v).unwrap()).unwrap());
                prop_assert!(e.braid_eq(&u.multiply(&c).unwrap(), &v.multiply(&c).unwrap()).unwrap());
            }
        }

        #[test]
        fn equality_matches_class_membership(u in word_strategy(4, 5), v in word_strategy(4, 5)) {
            let e = BraidEngine::shared();
            let in_class = e.equivalence_class(&u).unwrap().contains(&v);
            prop_assert_eq!(e.braid_eq(&u, &v).unwrap(), in_class);
        }

        #[test]
        fn letter_divides_matches_single_letter_divisor(word in word_strategy(5, 6), i in 1usize..5) {
            let e = BraidEngine::shared();
            let x = BraidWord::generator(5, i).unwrap();
            prop_assert_eq!(e.letter_divides(i, &word).unwrap(), e.divides(&x, &word).unwrap());
        }

        #[test]
        fn left_and_right_divisors_are_divisors(g in word_strategy(4, 2), b in word_strategy(4, 5)) {
            let e = BraidEngine::shared();
            let l = e.left_divides(&g, &b).unwrap();
            let r = e.right_divides(&g, &b).unwrap();
            if l || r {
                prop_assert!(e.divides(&g, &b).unwrap());
            }
        }

        #[test]
        fn embedding_reflects_equality(u in word_strategy(4, 5), v in word_strategy(4, 5)) {
            let e = BraidEngine::shared();
            prop_assert_eq!(
                e.braid_eq(&u, &v).unwrap(),
                e.braid_eq(&u.embed(6).unwrap(), &v.embed(6).unwrap()).unwrap()
            );
        }
    }
}
