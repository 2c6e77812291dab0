//! Complexity functions of a finite word and the indices derived from them.
//!
//! Profiles are indexed `0..=N+1` with the value at `N+1` fixed to 0, so
//! identities that look one step past the word length can be evaluated
//! without special cases.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{is_palindrome, Word};

/// `values[n]` = number of distinct factors of length `n`, for `0 <= n <= N + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComplexityProfile {
    pub values: Vec<usize>,
}

/// `values[n]` = number of distinct palindromic factors of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PalindromeProfile {
    pub values: Vec<usize>,
}

/// First differences of the subword complexity, `C(n+1) - C(n)` for
/// `0 <= n < N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceProfile {
    pub values: Vec<i64>,
    /// `(r, s)` when `values` is exactly `1^r 0^s (-1)^r`.
    pub trapezoid: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralIndices {
    #[serde(rename = "R")]
    pub r_index: usize,
    #[serde(rename = "K")]
    pub k_index: usize,
    /// `None` for ε.
    #[serde(rename = "pi")]
    pub min_period: Option<usize>,
}

impl ComplexityProfile {
    pub fn at(&self, n: usize) -> usize {
        self.values.get(n).copied().unwrap_or(0)
    }
}

impl PalindromeProfile {
    pub fn at(&self, n: usize) -> usize {
        self.values.get(n).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

fn distinct_factors_of_len(s: &[u8], n: usize) -> HashSet<&[u8]> {
    if n > s.len() {
        return HashSet::new();
    }
    if n == 0 {
        return HashSet::from([&s[..0]]);
    }
    s.windows(n).collect()
}

pub fn subword_complexity(w: &Word) -> ComplexityProfile {
    let s = w.as_bytes();
    let values = (0..=s.len() + 1)
        .map(|n| distinct_factors_of_len(s, n).len())
        .collect();
    ComplexityProfile { values }
}

pub fn palindromic_complexity(w: &Word) -> PalindromeProfile {
    let s = w.as_bytes();
    let values = (0..=s.len() + 1)
        .map(|n| {
            distinct_factors_of_len(s, n)
                .into_iter()
                .filter(|f| is_palindrome(f))
                .count()
        })
        .collect();
    PalindromeProfile { values }
}

/// Splits `values` into `1^r 0^s (-1)^t` and returns `(r, s)` when `t == r`.
fn trapezoid_runs(values: &[i64]) -> Option<(usize, usize)> {
    let r = values.iter().take_while(|&&d| d == 1).count();
    let s = values[r..].iter().take_while(|&&d| d == 0).count();
    let t = values[r + s..].iter().take_while(|&&d| d == -1).count();
    (r + s + t == values.len() && t == r).then_some((r, s))
}

pub fn difference_profile(w: &Word) -> Result<DifferenceProfile> {
    if w.is_empty() {
        return Err(Error::DifferenceOfEmpty);
    }
    let c = subword_complexity(w);
    let values: Vec<i64> = (0..w.len())
        .map(|n| c.at(n + 1) as i64 - c.at(n) as i64)
        .collect();
    let trapezoid = trapezoid_runs(&values);
    Ok(DifferenceProfile { values, trapezoid })
}

/// Length-`n` factors `u` such that `ux` and `uy` are factors for two
/// distinct symbols `x != y`.
pub fn right_special_factors(w: &Word, n: usize) -> Result<BTreeSet<Word>> {
    let s = w.as_bytes();
    if n > s.len() {
        return Err(Error::LengthExceedsWord {
            len: n,
            word_len: s.len(),
        });
    }
    let mut extensions: HashMap<&[u8], u8> = HashMap::new();
    let mut special: BTreeSet<Word> = BTreeSet::new();
    for i in 0..s.len() - n {
        let (u, x) = (&s[i..i + n], s[i + n]);
        match extensions.get(u) {
            Some(&y) if y != x => {
                special.insert(Word::from_bytes_unchecked(u.to_vec()));
            }
            Some(_) => {}
            None => {
                extensions.insert(u, x);
            }
        }
    }
    Ok(special)
}

/// Smallest `p` such that `w` has no right special factor of length `p`.
pub fn r_index(w: &Word) -> usize {
    (0..=w.len())
        .find(|&p| right_special_factors(w, p).expect("p <= |w|").is_empty())
        .expect("no factor of length |w| is right special")
}

/// Length of the shortest suffix occurring exactly once (0 for ε).
pub fn k_index(w: &Word) -> usize {
    let s = w.as_bytes();
    (1..=s.len())
        .find(|&k| {
            let suffix = &s[s.len() - k..];
            s.windows(k).filter(|win| *win == suffix).count() == 1
        })
        .unwrap_or(0)
}

/// Smallest `p >= 1` with `w[i] == w[i + p]` wherever both are defined.
pub fn minimal_period(w: &Word) -> Result<usize> {
    let s = w.as_bytes();
    if s.is_empty() {
        return Err(Error::PeriodOfEmpty);
    }
    Ok((1..=s.len())
        .find(|&p| (0..s.len() - p).all(|i| s[i] == s[i + p]))
        .expect("|w| is always a period"))
}

pub fn structural_indices(w: &Word) -> StructuralIndices {
    StructuralIndices {
        r_index: r_index(w),
        k_index: k_index(w),
        min_period: minimal_period(w).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn subword_profiles() {
        assert_eq!(subword_complexity(&w("aba")).values, vec![1, 2, 2, 1, 0]);
        assert_eq!(
            subword_complexity(&w("aaabab")).values,
            vec![1, 2, 3, 4, 3, 2, 1, 0]
        );
        assert_eq!(subword_complexity(&w("")).values, vec![1, 0]);
    }

    #[test]
    fn palindrome_profiles() {
        assert_eq!(
            palindromic_complexity(&w("aba")).values,
            vec![1, 2, 0, 1, 0]
        );
        assert_eq!(
            palindromic_complexity(&w("aabbaa")).values,
            vec![1, 2, 2, 0, 1, 0, 1, 0]
        );
        assert_eq!(palindromic_complexity(&w("a")).values, vec![1, 1, 0]);
        assert_eq!(palindromic_complexity(&w("")).values, vec![1, 0]);
    }

    #[test]
    fn difference_profiles() {
        let d = difference_profile(&w("aaabab")).unwrap();
        assert_eq!(d.values, vec![1, 1, 1, -1, -1, -1]);
        assert_eq!(d.trapezoid, Some((3, 0)));

        let d = difference_profile(&w("aabbaa")).unwrap();
        assert_eq!(d.values, vec![1, 2, 0, -1, -1, -1]);
        assert_eq!(d.trapezoid, None);

        let d = difference_profile(&w("a")).unwrap();
        assert_eq!(d.values, vec![0]);
        assert_eq!(d.trapezoid, Some((0, 1)));

        assert_eq!(difference_profile(&w("")), Err(Error::DifferenceOfEmpty));
    }

    #[test]
    fn trapezoid_runs_need_matching_ends() {
        assert_eq!(trapezoid_runs(&[1, 1, 0, -1]), None);
        assert_eq!(trapezoid_runs(&[1, -1, 1, -1]), None);
        assert_eq!(trapezoid_runs(&[1, 0, 0, -1]), Some((1, 2)));
    }

    #[test]
    fn right_special() {
        assert_eq!(right_special_factors(&w("aaabab"), 1).unwrap(), set(&["a"]));
        assert_eq!(
            right_special_factors(&w("aaabab"), 2).unwrap(),
            set(&["aa"])
        );
        assert!(right_special_factors(&w("aabbaa"), 2).unwrap().is_empty());
        assert_eq!(right_special_factors(&w("ab"), 0).unwrap(), set(&[""]));
        assert!(right_special_factors(&w("aaa"), 0).unwrap().is_empty());
        assert_eq!(
            right_special_factors(&w("ab"), 3),
            Err(Error::LengthExceedsWord {
                len: 3,
                word_len: 2
            })
        );
    }

    #[test]
    fn indices() {
        assert_eq!(r_index(&w("aaabab")), 3);
        assert_eq!(r_index(&w("aabbaa")), 2);
        assert_eq!(r_index(&w("aaaaa")), 0);
        assert_eq!(r_index(&w("")), 0);

        assert_eq!(k_index(&w("aaabab")), 3);
        assert_eq!(k_index(&w("aabbaa")), 3);
        assert_eq!(k_index(&w("a")), 1);
        assert_eq!(k_index(&w("aaaaa")), 5);
        assert_eq!(k_index(&w("")), 0);

        assert_eq!(minimal_period(&w("aaabab")), Ok(6));
        assert_eq!(minimal_period(&w("aabbaa")), Ok(4));
        assert_eq!(minimal_period(&w("aaaa")), Ok(1));
        assert_eq!(minimal_period(&w("")), Err(Error::PeriodOfEmpty));
    }
}
