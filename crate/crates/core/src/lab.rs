//! Exhaustive verification of the characterization theorems over every word
//! up to a length bound, plus witness mining and class censuses.
//!
//! The word space of each length is cut into blocks sharing a fixed-length
//! prefix. Blocks are evaluated independently (optionally on a rayon pool)
//! and merged back in block order, so the output never depends on the
//! number of workers.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{
    condition_b, condition_b_failures, condition_b_prime, has_trapezoidal_profile, is_balanced,
    is_finite_sturmian, is_rich_by_count, is_rich_by_returns, is_trapezoidal,
};
use crate::complexity::{minimal_period, palindromic_complexity, r_index, structural_indices};
use crate::eertree::index_count_palindromes;
use crate::error::{Error, Result};
use crate::generators::AllWords;
use crate::word::{longest_border, palindromic_factors, Alphabet, Word};

pub const SCHEMA_VERSION: u32 = 1;

/// Default cap on the number of words a single run may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Smallest number of prefix blocks per length (when the length allows it).
const MIN_BLOCKS: u128 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Claim {
    /// Richness by palindrome count agrees with richness by complete returns.
    Prop1,
    /// Trapezoidal words are rich.
    Prop2,
    /// Rich palindromes are exactly the words satisfying condition B.
    ThmFgc,
    /// Sturmian palindromes, condition B' and trapezoidal palindromes coincide.
    ThmMain,
    /// At most `|w| + 1` palindromic factors, with equality exactly for rich words.
    PalBound,
    /// Minimal period is at least `R + 1` and equals `|w|` minus the longest border.
    PeriodIneq,
    /// Trapezoidal words use at most two symbols.
    BinaryTrap,
    /// The `R + K` definition of trapezoidal matches the `1^r 0^s (-1)^r` profile.
    ProfileEquiv,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Prop1,
        Claim::Prop2,
        Claim::ThmFgc,
        Claim::ThmMain,
        Claim::PalBound,
        Claim::PeriodIneq,
        Claim::BinaryTrap,
        Claim::ProfileEquiv,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Prop1 => "PROP1",
            Claim::Prop2 => "PROP2",
            Claim::ThmFgc => "THM_FGC",
            Claim::ThmMain => "THM_MAIN",
            Claim::PalBound => "PAL_BOUND",
            Claim::PeriodIneq => "PERIOD_INEQ",
            Claim::BinaryTrap => "BINARY_TRAP",
            Claim::ProfileEquiv => "PROFILE_EQUIV",
        }
    }

    /// `None` when the claim holds for `w`, otherwise a diagnostic.
    pub fn check(self, w: &Word) -> Option<String> {
        match self {
            Claim::Prop1 => check_prop1(w),
            Claim::Prop2 => check_prop2(w),
            Claim::ThmFgc => check_thm_fgc(w),
            Claim::ThmMain => check_thm_main(w),
            Claim::PalBound => check_pal_bound(w),
            Claim::PeriodIneq => check_period(w),
            Claim::BinaryTrap => check_binary_trap(w),
            Claim::ProfileEquiv => check_profile_equiv(w),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == norm)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

fn check_prop1(w: &Word) -> Option<String> {
    let by_count = is_rich_by_count(w);
    let by_returns = is_rich_by_returns(w);
    (by_count != by_returns).then(|| {
        format!(
            "rich by count={by_count} ({} palindromic factors, |w|+1={}), rich by returns={by_returns}",
            index_count_palindromes(w) + 1,
            w.len() + 1
        )
    })
}

fn check_prop2(w: &Word) -> Option<String> {
    if !is_trapezoidal(w) || is_rich_by_count(w) {
        return None;
    }
    let idx = structural_indices(w);
    Some(format!(
        "trapezoidal (R={}, K={}) but {} palindromic factors < |w|+1={}",
        idx.r_index,
        idx.k_index,
        index_count_palindromes(w) + 1,
        w.len() + 1
    ))
}

fn check_thm_fgc(w: &Word) -> Option<String> {
    let rich_palindrome = w.is_palindrome() && is_rich_by_count(w);
    let failures = condition_b_failures(w);
    if rich_palindrome == failures.is_empty() {
        return None;
    }
    let detail = match failures.first() {
        Some(f) => format!(
            "first failure at n={}: P(n)+P(n+1)={} vs C(n+1)-C(n)+2={}",
            f.n, f.lhs, f.rhs
        ),
        None => "identity holds for every n".to_string(),
    };
    Some(format!(
        "rich palindrome={rich_palindrome}, condition B={}; {detail}",
        failures.is_empty()
    ))
}

fn check_thm_main(w: &Word) -> Option<String> {
    let sturmian_pal = w.is_palindrome() && is_finite_sturmian(w);
    let b_prime = condition_b_prime(w);
    let trap_pal = w.is_palindrome() && is_trapezoidal(w);
    (sturmian_pal != b_prime || b_prime != trap_pal).then(|| {
        let p = palindromic_complexity(w);
        format!(
            "Sturmian palindrome={sturmian_pal}, condition B'={b_prime}, trapezoidal palindrome={trap_pal}; P={:?}",
            &p.values[..=w.len()]
        )
    })
}

fn check_pal_bound(w: &Word) -> Option<String> {
    let naive = palindromic_factors(w).len();
    let indexed = index_count_palindromes(w) + 1;
    let bound = w.len() + 1;
    if naive > bound {
        return Some(format!("{naive} palindromic factors exceed |w|+1={bound}"));
    }
    if naive != indexed {
        return Some(format!(
            "naive count {naive} != palindrome index count {indexed}"
        ));
    }
    let by_returns = is_rich_by_returns(w);
    ((naive == bound) != by_returns).then(|| {
        format!("{naive} palindromic factors (|w|+1={bound}) but rich by returns={by_returns}")
    })
}

fn check_period(w: &Word) -> Option<String> {
    let pi = minimal_period(w).ok()?;
    let r = r_index(w);
    let border = longest_border(w).len();
    if pi < r + 1 {
        return Some(format!("pi={pi} < R+1={}", r + 1));
    }
    (pi != w.len() - border).then(|| format!("pi={pi} != |w|-|border|={}", w.len() - border))
}

fn check_binary_trap(w: &Word) -> Option<String> {
    let k = w.distinct_symbols();
    (k > 2 && is_trapezoidal(w)).then(|| {
        let idx = structural_indices(w);
        format!(
            "trapezoidal (R={}, K={}) over {k} symbols",
            idx.r_index, idx.k_index
        )
    })
}

fn check_profile_equiv(w: &Word) -> Option<String> {
    let profile = has_trapezoidal_profile(w).ok()?;
    let trap = is_trapezoidal(w);
    (trap != profile.is_some()).then(|| {
        let idx = structural_indices(w);
        format!(
            "R+K trapezoidal={trap} (R={}, K={}) but profile decomposition={profile:?}",
            idx.r_index, idx.k_index
        )
    })
}

/// How blocks are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// One thread, blocks in order.
    Sequential,
    /// A dedicated pool with this many workers.
    Threads(usize),
    /// The global rayon pool (one worker per core).
    #[default]
    Available,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub parallelism: Parallelism,
    /// Maximum number of words a run may visit.
    pub budget: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            parallelism: Parallelism::Available,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl RunOptions {
    pub fn sequential() -> Self {
        Self {
            parallelism: Parallelism::Sequential,
            ..Self::default()
        }
    }

    pub fn threads(n: usize) -> Self {
        Self {
            parallelism: Parallelism::Threads(n.max(1)),
            ..Self::default()
        }
    }

    fn check_budget(&self, alphabet: &Alphabet, max_len: usize) -> Result<()> {
        let words = alphabet.words_up_to(max_len);
        if words > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                words,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Block {
    len: usize,
    start: u128,
    size: u128,
}

impl Block {
    fn words(self, alphabet: &Alphabet) -> impl Iterator<Item = Word> {
        AllWords::starting_at(alphabet, self.len, self.start).take(self.size as usize)
    }
}

/// Prefix blocks of length `len`, in lexicographic order.
fn blocks_of_length(alphabet: &Alphabet, len: usize) -> Vec<Block> {
    let k = alphabet.size() as u128;
    let mut prefix = 0;
    let mut count: u128 = 1;
    while prefix < len && count < MIN_BLOCKS {
        prefix += 1;
        count *= k;
    }
    let size = k.pow((len - prefix) as u32);
    (0..count)
        .map(|b| Block {
            len,
            start: b * size,
            size,
        })
        .collect()
}

fn blocks_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Block> {
    (0..=max_len)
        .flat_map(|n| blocks_of_length(alphabet, n))
        .collect()
}

/// Maps `f` over `blocks`, returning results in block order.
fn map_blocks<T, F>(parallelism: Parallelism, blocks: &[Block], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Block) -> T + Sync + Send,
{
    match parallelism {
        Parallelism::Sequential => blocks.iter().map(|&b| f(b)).collect(),
        Parallelism::Available => blocks.par_iter().map(|&b| f(b)).collect(),
        Parallelism::Threads(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| blocks.par_iter().map(|&b| f(b)).collect()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: Word,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub claim: Claim,
    pub alphabet: Alphabet,
    pub max_len: usize,
    pub words_checked: u64,
    pub verified: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time. Left out of the serialized form so reports from
    /// different runs compare byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Checks `claim` on every word of length `0..=max_len` over `alphabet`.
pub fn verify_claim(
    claim: Claim,
    alphabet: &Alphabet,
    max_len: usize,
    options: &RunOptions,
) -> Result<VerificationReport> {
    options.check_budget(alphabet, max_len)?;
    let started = Instant::now();
    let blocks = blocks_up_to(alphabet, max_len);
    let per_block = map_blocks(options.parallelism, &blocks, |block| {
        let mut checked = 0u64;
        let mut found = Vec::new();
        for w in block.words(alphabet) {
            checked += 1;
            if let Some(diagnostic) = claim.check(&w) {
                found.push(Counterexample {
                    word: w,
                    diagnostic,
                });
            }
        }
        (checked, found)
    });
    let mut words_checked = 0;
    let mut counterexamples = Vec::new();
    for (checked, found) in per_block {
        words_checked += checked;
        counterexamples.extend(found);
    }
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        claim,
        alphabet: alphabet.clone(),
        max_len,
        words_checked,
        verified: counterexamples.is_empty(),
        counterexamples,
        elapsed: started.elapsed(),
    })
}

/// A single word-class test usable in predicate expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    Palindrome,
    Rich,
    Trapezoidal,
    TrapezoidalProfile,
    Balanced,
    FiniteSturmian,
    SturmianPalindrome,
    ConditionB,
    ConditionBPrime,
}

impl Atom {
    const NAMES: [(&'static str, Atom); 13] = [
        ("palindrome", Atom::Palindrome),
        ("rich", Atom::Rich),
        ("trapezoidal", Atom::Trapezoidal),
        ("trapezoidal_profile", Atom::TrapezoidalProfile),
        ("balanced", Atom::Balanced),
        ("finite_sturmian", Atom::FiniteSturmian),
        ("sturmian", Atom::FiniteSturmian),
        ("sturmian_palindrome", Atom::SturmianPalindrome),
        ("condition_b", Atom::ConditionB),
        ("b", Atom::ConditionB),
        ("condition_b_prime", Atom::ConditionBPrime),
        ("b_prime", Atom::ConditionBPrime),
        ("b'", Atom::ConditionBPrime),
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES
            .iter()
            .find(|(_, a)| *a == self)
            .expect("every atom is named")
            .0
    }

    /// Balance is false (not an error) for words on three or more symbols.
    pub fn holds(self, w: &Word) -> bool {
        match self {
            Atom::Palindrome => w.is_palindrome(),
            Atom::Rich => is_rich_by_count(w),
            Atom::Trapezoidal => is_trapezoidal(w),
            Atom::TrapezoidalProfile => matches!(has_trapezoidal_profile(w), Ok(Some(_))),
            Atom::Balanced => is_balanced(w).unwrap_or(false),
            Atom::FiniteSturmian => is_finite_sturmian(w),
            Atom::SturmianPalindrome => w.is_palindrome() && is_finite_sturmian(w),
            Atom::ConditionB => condition_b(w),
            Atom::ConditionBPrime => condition_b_prime(w),
        }
    }
}

/// A conjunction of possibly negated atoms, written `rich&!trapezoidal`
/// (`,` also separates, `not_` also negates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    terms: Vec<(bool, Atom)>,
}

impl Predicate {
    pub fn holds(&self, w: &Word) -> bool {
        self.terms
            .iter()
            .all(|&(positive, atom)| atom.holds(w) == positive)
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPredicate(s.to_string());
        let terms = s
            .split(['&', ','])
            .map(|raw| {
                let t = raw.trim().to_ascii_lowercase().replace('-', "_");
                let (positive, name) = match t.strip_prefix('!').or_else(|| t.strip_prefix("not_"))
                {
                    Some(rest) => (false, rest.trim().to_string()),
                    None => (true, t),
                };
                Atom::NAMES
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|&(_, atom)| (positive, atom))
                    .ok_or_else(unknown)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (positive, atom)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("&")?;
            }
            if !positive {
                f.write_str("!")?;
            }
            f.write_str(atom.name())?;
        }
        Ok(())
    }
}

/// Every word of exactly `length` satisfying `predicate`, in alphabet order.
pub fn find_class_members(
    predicate: &Predicate,
    alphabet: &Alphabet,
    length: usize,
    options: &RunOptions,
) -> Result<Vec<Word>> {
    let total = (alphabet.size() as u128).saturating_pow(length as u32);
    if total > options.budget as u128 {
        return Err(Error::BudgetExceeded {
            words: total,
            budget: options.budget,
        });
    }
    let blocks = blocks_of_length(alphabet, length);
    let per_block = map_blocks(options.parallelism, &blocks, |block| {
        block
            .words(alphabet)
            .filter(|w| predicate.holds(w))
            .collect::<Vec<_>>()
    });
    Ok(per_block.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub length: usize,
    pub total: u64,
    pub palindrome: u64,
    pub rich: u64,
    pub trapezoidal: u64,
    pub balanced: u64,
    pub sturmian_palindrome: u64,
    pub condition_b: u64,
    pub condition_b_prime: u64,
    pub rich_palindrome: u64,
    pub trapezoidal_palindrome: u64,
}

impl CensusRow {
    fn add(&mut self, w: &Word) {
        let pal = w.is_palindrome();
        let rich = is_rich_by_count(w);
        let trap = is_trapezoidal(w);
        let balanced = is_finite_sturmian(w);
        let tally = |slot: &mut u64, hit: bool| *slot += u64::from(hit);
        self.total += 1;
        tally(&mut self.palindrome, pal);
        tally(&mut self.rich, rich);
        tally(&mut self.trapezoidal, trap);
        tally(&mut self.balanced, balanced);
        tally(&mut self.sturmian_palindrome, pal && balanced);
        tally(&mut self.condition_b, condition_b(w));
        tally(&mut self.condition_b_prime, condition_b_prime(w));
        tally(&mut self.rich_palindrome, pal && rich);
        tally(&mut self.trapezoidal_palindrome, pal && trap);
    }

    fn merge(&mut self, other: &CensusRow) {
        self.total += other.total;
        self.palindrome += other.palindrome;
        self.rich += other.rich;
        self.trapezoidal += other.trapezoidal;
        self.balanced += other.balanced;
        self.sturmian_palindrome += other.sturmian_palindrome;
        self.condition_b += other.condition_b;
        self.condition_b_prime += other.condition_b_prime;
        self.rich_palindrome += other.rich_palindrome;
        self.trapezoidal_palindrome += other.trapezoidal_palindrome;
    }
}

/// Per-length class counts for lengths `1..=max_len`. `balanced` counts
/// balanced words over at most two symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub schema_version: u32,
    pub alphabet: Alphabet,
    pub max_len: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    /// One column of the table, e.g. `column(|r| r.balanced)`.
    pub fn column(&self, f: impl Fn(&CensusRow) -> u64) -> Vec<u64> {
        self.rows.iter().map(f).collect()
    }
}

pub fn census(alphabet: &Alphabet, max_len: usize, options: &RunOptions) -> Result<CensusTable> {
    options.check_budget(alphabet, max_len)?;
    let mut rows = Vec::with_capacity(max_len);
    for len in 1..=max_len {
        let blocks = blocks_of_length(alphabet, len);
        let partial = map_blocks(options.parallelism, &blocks, |block| {
            let mut row = CensusRow::default();
            block.words(alphabet).for_each(|w| row.add(&w));
            row
        });
        let mut row = CensusRow {
            length: len,
            ..CensusRow::default()
        };
        partial.iter().for_each(|p| row.merge(p));
        rows.push(row);
    }
    Ok(CensusTable {
        schema_version: SCHEMA_VERSION,
        alphabet: alphabet.clone(),
        max_len,
        rows,
    })
}
