//! Words over the Artin generators `x_1, ..., x_{n-1}`.
//!
//! A [`BraidWord`] is a purely syntactic object: a strand count together with
//! a finite sequence of 1-based generator indices. The empty sequence is the
//! identity `e`. Equality of words is literal; equality of the braids they
//! represent is decided by [`crate::BraidEngine`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// Generator index. `3` stands for `x_3`.
pub type Letter = u8;

/// Largest supported strand count (letters must fit in a [`Letter`]).
pub const MAX_STRANDS: usize = Letter::MAX as usize + 1;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    strands: usize,
    letters: Vec<usize>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> Self {
        RawWord {
            strands: w.strands,
            letters: w.letters.iter().map(|&l| l as usize).collect(),
        }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_strands(strands)?;
        let letters = letters
            .into_iter()
            .map(|l| {
                if l >= 1 && l < strands {
                    Ok(l as Letter)
                } else {
                    Err(BraidError::LetterOutOfRange { letter: l, strands })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands, letters })
    }

    /// The empty word `e` in `MB_n`.
    pub fn identity(strands: usize) -> Result<Self> {
        check_strands(strands)?;
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// The single-letter word `x_i`.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Self::new(strands, [i])
    }

    /// Callers guarantee every letter lies in `1..strands`.
    pub(crate) fn from_raw(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && (l as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains_letter(&self, i: usize) -> bool {
        self.letters.iter().any(|&l| l as usize == i)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.letters.iter().max().map(|&l| l as usize)
    }

    /// Concatenation in the free monoid. Both words must live in the same
    /// `MB_n`; no implicit embedding is performed.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        same_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reinterpret the word in `MB_m` for `m >= n`.
    pub fn embed(&self, m: usize) -> Result<BraidWord> {
        if m < self.strands {
            return Err(BraidError::EmbedTooSmall {
                from: self.strands,
                to: m,
            });
        }
        check_strands(m)?;
        Ok(BraidWord {
            strands: m,
            letters: self.letters.clone(),
        })
    }

    /// Compact label such as `x1x3x2`, or `e` for the identity.
    pub fn label(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        self.letters.iter().map(|l| format!("x{l}")).collect()
    }
}

pub(crate) fn check_strands(strands: usize) -> Result<()> {
    if strands == 0 || strands > MAX_STRANDS {
        Err(BraidError::InvalidStrands { strands })
    } else {
        Ok(())
    }
}

pub(crate) fn same_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        Err(BraidError::StrandMismatch {
            left: a.strands,
            right: b.strands,
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `n: i1 i2 ... ik`. Error columns are 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let Some(colon) = s.find(':') else {
            return Err(BraidError::Parse {
                column: s.len() + 1,
                message: "expected `n:` strand-count prefix".into(),
            });
        };
        let head = &s[..colon];
        let strands = parse_number(head, 0, "strand count")?;
        check_strands(strands).map_err(|e| BraidError::Parse {
            column: token_column(head, 0),
            message: e.to_string(),
        })?;
        let letters = parse_letters(&s[colon + 1..], colon + 1, strands)?;
        Ok(BraidWord { strands, letters })
    }
}

/// Parses a bare whitespace-separated letter list for a known strand count.
pub fn parse_letters_for(s: &str, strands: usize) -> Result<BraidWord> {
    check_strands(strands)?;
    let letters = parse_letters(s, 0, strands)?;
    Ok(BraidWord { strands, letters })
}

fn parse_letters(body: &str, offset: usize, strands: usize) -> Result<Vec<Letter>> {
    let mut letters = Vec::new();
    let mut pos = 0;
    for tok in body.split_whitespace() {
        let rel = body[pos..].find(tok).unwrap() + pos;
        pos = rel + tok.len();
        let column = offset + rel + 1;
        let value: usize = tok.parse().map_err(|_| BraidError::Parse {
            column,
            message: format!("`{tok}` is not a generator index"),
        })?;
        if value == 0 || value >= strands {
            return Err(BraidError::Parse {
                column,
                message: format!(
                    "letter {value} out of range 1..={} for {strands} strands",
                    strands - 1
                ),
            });
        }
        letters.push(value as Letter);
    }
    Ok(letters)
}

fn parse_number(tok: &str, offset: usize, what: &str) -> Result<usize> {
    tok.trim().parse().map_err(|_| BraidError::Parse {
        column: token_column(tok, offset),
        message: format!("invalid {what} `{}`", tok.trim()),
    })
}

fn token_column(tok: &str, offset: usize) -> usize {
    offset + (tok.len() - tok.trim_start().len()) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(n, letters.iter().copied()).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let word = w(5, &[4, 3, 3, 2, 3]);
        assert_eq!(word.to_string(), "5: 4 3 3 2 3");
        assert_eq!("5: 4 3 3 2 3".parse::<BraidWord>().unwrap(), word);
        assert_eq!("7:".parse::<BraidWord>().unwrap(), BraidWord::identity(7).unwrap());
    }

    #[test]
    fn parse_errors_carry_columns() {
        match "5: 1 9 2".parse::<BraidWord>() {
            Err(BraidError::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("unexpected {other:?}"),
        }
        match "5: 1 x 2".parse::<BraidWord>() {
            Err(BraidError::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "1 2 3".parse::<BraidWord>(),
            Err(BraidError::Parse { .. })
        ));
        assert!(matches!(
            "0: ".parse::<BraidWord>(),
            Err(BraidError::Parse { column: 1, .. })
        ));
    }

    #[test]
    fn json_form() {
        let word = w(5, &[1, 3, 2]);
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, r#"{"strands":5,"letters":[1,3,2]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), word);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":3,"letters":[3]}"#).is_err());
    }

    #[test]
    fn multiply_concatenates() {
        let p = w(5, &[1, 3, 2]).multiply(&w(5, &[2, 3])).unwrap();
        assert_eq!(p, w(5, &[1, 3, 2, 2, 3]));
        let e = BraidWord::identity(5).unwrap();
        assert_eq!(e.multiply(&w(5, &[2])).unwrap(), w(5, &[2]));
        assert_eq!(w(3, &[1]).multiply(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert!(matches!(
            w(3, &[1]).multiply(&w(4, &[2])),
            Err(BraidError::StrandMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn embed_keeps_letters() {
        assert_eq!(w(3, &[1, 2]).embed(5).unwrap(), w(5, &[1, 2]));
        assert_eq!(
            BraidWord::identity(2).unwrap().embed(7).unwrap(),
            BraidWord::identity(7).unwrap()
        );
        assert!(matches!(
            w(5, &[1]).embed(4),
            Err(BraidError::EmbedTooSmall { from: 5, to: 4 })
        ));
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(3, [3]).is_err());
        assert!(BraidWord::new(3, [0]).is_err());
        assert!(BraidWord::new(0, []).is_err());
        assert_eq!(w(1, &[]).label(), "e");
        assert_eq!(w(6, &[1, 2]).label(), "x1x2");
    }
}
