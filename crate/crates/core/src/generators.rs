//! Word sources: exhaustive enumeration, seeded random words, and
//! Christoffel / central words for Sturmian corpora.

use std::collections::BTreeSet;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Name of the generator behind [`random_words`], recorded in outputs next
/// to the seed.
pub const RNG_NAME: &str = "ChaCha8";

/// All words of one length in the lexicographic order of the alphabet.
#[derive(Debug, Clone)]
pub struct AllWords {
    symbols: Vec<u8>,
    digits: Vec<usize>,
    done: bool,
}

pub fn all_words(alphabet: &Alphabet, n: usize) -> AllWords {
    AllWords {
        symbols: alphabet.symbols().to_vec(),
        digits: vec![0; n],
        done: false,
    }
}

impl AllWords {
    /// Starts at the `index`-th word (base-`|alphabet|` digits, most
    /// significant first). Past-the-end indices yield nothing.
    pub fn starting_at(alphabet: &Alphabet, n: usize, mut index: u128) -> Self {
        let k = alphabet.size() as u128;
        let mut digits = vec![0; n];
        for d in digits.iter_mut().rev() {
            *d = (index % k) as usize;
            index /= k;
        }
        Self {
            symbols: alphabet.symbols().to_vec(),
            digits,
            done: index > 0,
        }
    }
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let word =
            Word::from_bytes_unchecked(self.digits.iter().map(|&d| self.symbols[d]).collect());
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.symbols.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}

/// Slope parameters of a lower Christoffel word: `p` letters `b`, `q`
/// letters `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChristoffelParams {
    p: u32,
    q: u32,
}

impl ChristoffelParams {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Every valid pair with `p + q <= max_denominator`, ordered by `(p+q, p)`.
    pub fn all_up_to(max_denominator: u32) -> Vec<Self> {
        (2..=max_denominator)
            .flat_map(|n| (1..n).filter_map(move |p| Self::new(p, n - p).ok()))
            .collect()
    }
}

/// `w_i = a` if `floor((i+1)p/n) == floor(ip/n)` else `b`, with `n = p + q`.
pub fn lower_christoffel(params: ChristoffelParams) -> Word {
    let (p, n) = (params.p as u64, (params.p + params.q) as u64);
    let bytes = (0..n)
        .map(|i| {
            if (i + 1) * p / n == i * p / n {
                b'a'
            } else {
                b'b'
            }
        })
        .collect();
    Word::from_bytes_unchecked(bytes)
}

/// The lower Christoffel word without its first and last letters.
pub fn central_word(params: ChristoffelParams) -> Word {
    let c = lower_christoffel(params);
    c.factor(1, c.len() - 2)
}

/// All circular factors of length `<= max_factor_len` of the lower
/// Christoffel words with `p + q <= max_denominator`, i.e. the factors of
/// the periodic words `c c c ...`. Christoffel words are circularly
/// balanced, so every member is a finite Sturmian word.
pub fn sturmian_corpus(max_denominator: u32, max_factor_len: usize) -> BTreeSet<Word> {
    let mut corpus = BTreeSet::from([Word::empty()]);
    for params in ChristoffelParams::all_up_to(max_denominator) {
        let c = lower_christoffel(params);
        let period = c.len();
        let repeated: Vec<u8> = c
            .as_bytes()
            .iter()
            .copied()
            .cycle()
            .take(period + max_factor_len)
            .collect();
        for start in 0..period {
            for len in 1..=max_factor_len {
                corpus.insert(Word::from_bytes_unchecked(
                    repeated[start..start + len].to_vec(),
                ));
            }
        }
    }
    corpus
}

/// `count` uniform words of the given length, reproducible from `seed`.
pub fn random_words(alphabet: &Alphabet, length: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_words_with(&mut rng, alphabet, length, count)
}

pub fn random_words_with<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    length: usize,
    count: usize,
) -> Vec<Word> {
    let symbols = alphabet.symbols();
    (0..count)
        .map(|_| {
            Word::from_bytes_unchecked(
                (0..length)
                    .map(|_| symbols[rng.gen_range(0..symbols.len())])
                    .collect(),
            )
        })
        .collect()
}
