//! Finite words over small ASCII alphabets and the basic factor machinery:
//! occurrences, palindromes, borders and complete returns.
//!
//! Everything here is the naive reference path. Faster structures (see
//! [`crate::eertree`]) are checked against these functions in tests.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const MAX_ALPHABET: usize = 26;

fn check_symbol(c: char) -> Result<u8> {
    if c.is_ascii_graphic() {
        Ok(c as u8)
    } else {
        Err(Error::InvalidSymbol(c))
    }
}

/// An ordered set of 1 to 26 distinct printable symbols.
///
/// The order is the one used for enumeration and for lexicographic
/// comparison in [`Alphabet::cmp_words`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<u8>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let mut out = Vec::with_capacity(symbols.len());
        for c in symbols.chars() {
            let b = check_symbol(c)?;
            if out.contains(&b) {
                return Err(Error::InvalidAlphabet(symbols.to_string()));
            }
            out.push(b);
        }
        if out.is_empty() || out.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(symbols.to_string()));
        }
        Ok(Self { symbols: out })
    }

    /// `{a, b}`.
    pub fn binary() -> Self {
        Self {
            symbols: b"ab".to_vec(),
        }
    }

    /// `{a, b, c}`.
    pub fn ternary() -> Self {
        Self {
            symbols: b"abc".to_vec(),
        }
    }

    /// The sorted set of symbols occurring in `w`, or `None` for ε.
    pub fn of_word(w: &Word) -> Option<Self> {
        let set: BTreeSet<u8> = w.as_bytes().iter().copied().collect();
        if set.is_empty() {
            None
        } else {
            Some(Self {
                symbols: set.into_iter().collect(),
            })
        }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.symbols.contains(&symbol)
    }

    /// Position of `symbol` in the alphabet order.
    pub fn rank(&self, symbol: u8) -> Option<usize> {
        self.symbols.iter().position(|&s| s == symbol)
    }

    /// Lexicographic order induced by the alphabet order.
    pub fn cmp_words(&self, x: &Word, y: &Word) -> std::cmp::Ordering {
        let key = |w: &Word| -> Vec<usize> {
            w.as_bytes()
                .iter()
                .map(|&b| self.rank(b).unwrap_or(usize::MAX))
                .collect()
        };
        key(x).cmp(&key(y))
    }

    /// Number of words of length `0..=max_len`, saturating at `u128::MAX`.
    pub fn words_up_to(&self, max_len: usize) -> u128 {
        let k = self.size() as u128;
        let mut total: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..=max_len {
            total = total.saturating_add(pow);
            pow = pow.saturating_mul(k);
        }
        total
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.symbols).expect("ascii"))
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::new(&s).map_err(serde::de::Error::custom)
    }
}

/// A finite word. The empty word ε is the empty string.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(check_symbol)
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn parse_over(s: &str, alphabet: &Alphabet) -> Result<Self> {
        let w = Self::parse(s)?;
        if let Some(&bad) = w.0.iter().find(|&&b| !alphabet.contains(b)) {
            return Err(Error::NotInAlphabet {
                symbol: bad as char,
                alphabet: alphabet.to_string(),
            });
        }
        Ok(w)
    }

    /// Builds a word from raw bytes. Callers guarantee printable ASCII.
    pub(crate) fn from_bytes_unchecked(bytes: Vec<u8>) -> Self {
        Self(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("words are ascii")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// The factor `w[start .. start + len)`.
    pub fn factor(&self, start: usize, len: usize) -> Self {
        Self(self.0[start..start + len].to_vec())
    }

    /// Number of distinct symbols used.
    pub fn distinct_symbols(&self) -> usize {
        let mut seen = [false; 128];
        self.0
            .iter()
            .filter(|&&b| !std::mem::replace(&mut seen[b as usize], true))
            .count()
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One occurrence of a non-empty factor inside a host word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorOccurrence {
    pub start: usize,
    pub length: usize,
}

impl FactorOccurrence {
    pub fn end(&self) -> usize {
        self.start + self.length
    }
}

pub(crate) fn is_palindrome(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Start positions of every occurrence of `u` in `w`, overlaps included.
pub fn occurrences(w: &Word, u: &Word) -> Result<Vec<usize>> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(occurrences_raw(w.as_bytes(), u.as_bytes()))
}

pub(crate) fn occurrences_raw(w: &[u8], u: &[u8]) -> Vec<usize> {
    if u.len() > w.len() {
        return Vec::new();
    }
    w.windows(u.len())
        .enumerate()
        .filter_map(|(i, win)| (win == u).then_some(i))
        .collect()
}

/// Occurrences of `u` in `w` as spans.
pub fn occurrence_spans(w: &Word, u: &Word) -> Result<Vec<FactorOccurrence>> {
    Ok(occurrences(w, u)?
        .into_iter()
        .map(|start| FactorOccurrence {
            start,
            length: u.len(),
        })
        .collect())
}

/// The distinct complete returns to `u` in `w`: factors spanning two
/// consecutive occurrences of `u`, with `u` as prefix and as suffix and no
/// other occurrence inside.
pub fn complete_returns(w: &Word, u: &Word) -> Result<BTreeSet<Word>> {
    let occ = occurrences(w, u)?;
    Ok(occ
        .windows(2)
        .map(|pair| w.factor(pair[0], pair[1] + u.len() - pair[0]))
        .collect())
}

/// All distinct palindromic factors of `w`, ε included.
pub fn palindromic_factors(w: &Word) -> BTreeSet<Word> {
    let s = w.as_bytes();
    let mut seen: HashSet<&[u8]> = HashSet::new();
    seen.insert(&[]);
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            if is_palindrome(&s[i..j]) {
                seen.insert(&s[i..j]);
            }
        }
    }
    seen.into_iter().map(|f| Word(f.to_vec())).collect()
}

/// The longest proper border of `w` (ε when `|w| <= 1`).
///
/// Computed with the prefix (failure) function, independently of the
/// direct period scan in [`crate::complexity::minimal_period`].
pub fn longest_border(w: &Word) -> Word {
    let s = w.as_bytes();
    if s.is_empty() {
        return Word::empty();
    }
    let mut fail = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = fail[i - 1];
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    Word(s[..fail[s.len() - 1]].to_vec())
}
