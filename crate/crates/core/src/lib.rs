//! Complexity invariants of finite words and exhaustive checks of how they
//! characterize rich, Sturmian and trapezoidal words.
//!
//! - [`word`]: words, alphabets, occurrences, palindromic factors, borders,
//!   complete returns.
//! - [`eertree`]: the palindromic tree, a one-pass counter of distinct
//!   palindromic factors.
//! - [`complexity`]: subword and palindromic complexity, their first
//!   differences, right special factors, `R`, `K` and the minimal period.
//! - [`classify`]: rich / trapezoidal / balanced / finite Sturmian
//!   predicates and the identities
//!   `P(n) + P(n+1) = C(n+1) - C(n) + 2` and `P(n) + P(N-n) = 2`.
//! - [`lab`]: exhaustive verification, witness enumeration, censuses.
//! - [`generators`]: enumeration, random words, Christoffel and central words.
//! - [`cli`]: the `richwords` command.
//!
//! ```
//! use richwords::{classify, Word};
//!
//! let w = Word::parse("aabbaa").unwrap();
//! assert!(classify::is_rich_by_count(&w));
//! assert!(!classify::is_trapezoidal(&w));
//! ```

pub mod classify;
pub mod cli;
pub mod complexity;
pub mod eertree;
pub mod error;
pub mod generators;
pub mod lab;
pub mod word;

pub use classify::ClassificationReport;
pub use complexity::{ComplexityProfile, DifferenceProfile, PalindromeProfile, StructuralIndices};
pub use eertree::PalindromeIndex;
pub use error::{Error, Result};
pub use generators::ChristoffelParams;
pub use lab::{Claim, Parallelism, Predicate, RunOptions, VerificationReport};
pub use word::{Alphabet, FactorOccurrence, Word};
