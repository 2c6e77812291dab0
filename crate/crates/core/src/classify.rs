//! Word-class predicates and the two profile identities.
//!
//! Richness has two independent algorithms (palindrome count through the
//! eertree, and palindromic complete returns through the naive factor
//! machinery). Balance likewise has a direct sliding-window check and a
//! witness search. Finite Sturmian words are taken to be the balanced
//! words over at most two letters.

use serde::{Deserialize, Serialize};

use crate::complexity::{
    difference_profile, palindromic_complexity, structural_indices, subword_complexity,
    StructuralIndices,
};
use crate::eertree::index_count_palindromes;
use crate::error::{Error, Result};
use crate::word::{complete_returns, palindromic_factors, Word};

/// Rich: exactly `|w| + 1` distinct palindromic factors, ε included.
pub fn is_rich_by_count(w: &Word) -> bool {
    index_count_palindromes(w) == w.len()
}

/// Rich: every complete return to every non-empty palindromic factor is a
/// palindrome.
pub fn is_rich_by_returns(w: &Word) -> bool {
    palindromic_factors(w)
        .iter()
        .filter(|u| !u.is_empty())
        .all(|u| {
            complete_returns(w, u)
                .expect("u is non-empty")
                .iter()
                .all(Word::is_palindrome)
        })
}

pub fn is_trapezoidal(w: &Word) -> bool {
    let idx = structural_indices(w);
    w.len() == idx.r_index + idx.k_index
}

/// `(r, s)` when the first differences of the subword complexity read
/// `1^r 0^s (-1)^r`.
pub fn has_trapezoidal_profile(w: &Word) -> Result<Option<(usize, usize)>> {
    if w.is_empty() {
        return Err(Error::ProfileOfEmpty);
    }
    Ok(difference_profile(w)?.trapezoid)
}

fn require_binary(w: &Word) -> Result<()> {
    if w.distinct_symbols() > 2 {
        Err(Error::NotBinary)
    } else {
        Ok(())
    }
}

/// For every length, the count of each symbol over all factors of that
/// length takes at most two adjacent values.
pub fn is_balanced(w: &Word) -> Result<bool> {
    require_binary(w)?;
    let s = w.as_bytes();
    let Some(&x) = s.first() else {
        return Ok(true);
    };
    // On two letters, balance in one letter forces balance in the other.
    let mut prefix = vec![0usize; s.len() + 1];
    for (i, &b) in s.iter().enumerate() {
        prefix[i + 1] = prefix[i] + usize::from(b == x);
    }
    for n in 1..=s.len() {
        let counts = (0..=s.len() - n).map(|i| prefix[i + n] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        if hi - lo > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A shortest palindrome `U` (ties broken by byte order) such that `xUx`
/// and `yUy` are both factors of `w` for its two distinct symbols.
pub fn unbalance_witness(w: &Word) -> Result<Option<Word>> {
    require_binary(w)?;
    let s = w.as_bytes();
    let Some(&x) = s.first() else {
        return Ok(None);
    };
    let Some(&y) = s.iter().find(|&&b| b != x) else {
        return Ok(None);
    };
    let contains = |f: &[u8]| f.len() <= s.len() && s.windows(f.len()).any(|win| win == f);
    let wrap = |c: u8, u: &Word| {
        let mut v = Vec::with_capacity(u.len() + 2);
        v.push(c);
        v.extend_from_slice(u.as_bytes());
        v.push(c);
        v
    };
    let mut candidates: Vec<Word> = palindromic_factors(w).into_iter().collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(candidates
        .into_iter()
        .find(|u| contains(&wrap(x, u)) && contains(&wrap(y, u))))
}

/// Binary (or unary) and balanced. Never errors: three or more symbols
/// simply fail.
pub fn is_finite_sturmian(w: &Word) -> bool {
    is_balanced(w).unwrap_or(false)
}

pub fn is_sturmian_palindrome(w: &Word) -> bool {
    w.is_palindrome() && is_finite_sturmian(w)
}

/// One failed instance of a pointwise identity `lhs(n) == rhs(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub n: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl std::fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={}: {} != {}", self.n, self.lhs, self.rhs)
    }
}

/// Every `n` in `0..=|w|` where `P(n) + P(n+1) = C(n+1) - C(n) + 2` fails.
pub fn condition_b_failures(w: &Word) -> Vec<IdentityFailure> {
    let c = subword_complexity(w);
    let p = palindromic_complexity(w);
    (0..=w.len())
        .filter_map(|n| {
            let lhs = (p.at(n) + p.at(n + 1)) as i64;
            let rhs = c.at(n + 1) as i64 - c.at(n) as i64 + 2;
            (lhs != rhs).then_some(IdentityFailure { n, lhs, rhs })
        })
        .collect()
}

pub fn condition_b(w: &Word) -> bool {
    condition_b_failures(w).is_empty()
}

/// Every `n` in `0..=N` where `P(n) + P(N - n) = 2` fails.
pub fn condition_b_prime_failures(w: &Word) -> Vec<IdentityFailure> {
    let p = palindromic_complexity(w);
    let big_n = w.len();
    (0..=big_n)
        .filter_map(|n| {
            let lhs = (p.at(n) + p.at(big_n - n)) as i64;
            (lhs != 2).then_some(IdentityFailure { n, lhs, rhs: 2 })
        })
        .collect()
}

pub fn condition_b_prime(w: &Word) -> bool {
    condition_b_prime_failures(w).is_empty()
}

/// The involution on `{0, 1, 2}` exchanging 0 and 2 and fixing 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ThetaInvolution;

impl ThetaInvolution {
    pub fn apply(self, v: usize) -> Result<usize> {
        match v {
            0..=2 => Ok(2 - v),
            _ => Err(Error::ProfileNotTernary),
        }
    }
}

/// Whether `values` equals the θ-image of its own reversal.
pub fn theta_palindrome_check(values: &[usize]) -> Result<bool> {
    let theta = ThetaInvolution;
    let image = values
        .iter()
        .rev()
        .map(|&v| theta.apply(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(image == values)
}

/// Every per-word verdict and index at once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub is_palindrome: bool,
    pub is_rich: bool,
    pub is_trapezoidal: bool,
    /// `None` when the word uses three or more symbols.
    pub is_balanced: Option<bool>,
    pub is_finite_sturmian: bool,
    pub is_sturmian_palindrome: bool,
    #[serde(rename = "condition_B")]
    pub condition_b: bool,
    #[serde(rename = "condition_B_prime")]
    pub condition_b_prime: bool,
    #[serde(flatten)]
    pub indices: StructuralIndices,
    /// Distinct palindromic factors, ε included.
    pub palindrome_count: usize,
    pub unbalance_witness: Option<Word>,
}

impl ClassificationReport {
    pub fn of(w: &Word) -> Self {
        let indices = structural_indices(w);
        let is_palindrome = w.is_palindrome();
        let is_balanced = is_balanced(w).ok();
        let is_finite_sturmian = is_balanced == Some(true);
        Self {
            is_palindrome,
            is_rich: is_rich_by_count(w),
            is_trapezoidal: w.len() == indices.r_index + indices.k_index,
            is_balanced,
            is_finite_sturmian,
            is_sturmian_palindrome: is_palindrome && is_finite_sturmian,
            condition_b: condition_b(w),
            condition_b_prime: condition_b_prime(w),
            indices,
            palindrome_count: index_count_palindromes(w) + 1,
            unbalance_witness: unbalance_witness(w).ok().flatten(),
        }
    }
}
