//! Brute-force oracles written straight from the definitions, on plain
//! `String`s, sharing no code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn words(alphabet: &str, len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| alphabet.chars().map(move |c| format!("{w}{c}")))
            .collect();
    }
    out
}

pub fn words_up_to(alphabet: &str, max_len: usize) -> Vec<String> {
    (0..=max_len).flat_map(|n| words(alphabet, n)).collect()
}

pub fn rev(s: &str) -> String {
    s.chars().rev().collect()
}

pub fn is_pal(s: &str) -> bool {
    s == rev(s)
}

pub fn factors_of_len(s: &str, n: usize) -> BTreeSet<String> {
    if n > s.len() {
        return BTreeSet::new();
    }
    (0..=s.len() - n).map(|i| s[i..i + n].to_string()).collect()
}

pub fn factors(s: &str) -> BTreeSet<String> {
    (0..=s.len()).flat_map(|n| factors_of_len(s, n)).collect()
}

pub fn pal_factors(s: &str) -> BTreeSet<String> {
    factors(s).into_iter().filter(|f| is_pal(f)).collect()
}

/// `C(0..=N+1)`.
pub fn c_profile(s: &str) -> Vec<usize> {
    (0..=s.len() + 1)
        .map(|n| factors_of_len(s, n).len())
        .collect()
}

/// `P(0..=N+1)`.
pub fn p_profile(s: &str) -> Vec<usize> {
    (0..=s.len() + 1)
        .map(|n| factors_of_len(s, n).iter().filter(|f| is_pal(f)).count())
        .collect()
}

pub fn count_occ(s: &str, u: &str) -> usize {
    if u.len() > s.len() {
        return 0;
    }
    (0..=s.len() - u.len())
        .filter(|&i| &s[i..i + u.len()] == u)
        .count()
}

pub fn is_right_special(s: &str, u: &str) -> bool {
    let fs = factors(s);
    let exts: BTreeSet<char> = s
        .chars()
        .filter(|&c| fs.contains(&format!("{u}{c}")))
        .collect();
    exts.len() >= 2
}

pub fn r_oracle(s: &str) -> usize {
    (0..=s.len())
        .find(|&p| factors_of_len(s, p).iter().all(|u| !is_right_special(s, u)))
        .unwrap()
}

pub fn k_oracle(s: &str) -> usize {
    (1..=s.len())
        .find(|&k| count_occ(s, &s[s.len() - k..]) == 1)
        .unwrap_or(0)
}

pub fn period_oracle(s: &str) -> usize {
    let b = s.as_bytes();
    (1..=s.len())
        .find(|&p| (0..s.len()).all(|i| i + p >= s.len() || b[i] == b[i + p]))
        .unwrap()
}

pub fn border_oracle(s: &str) -> String {
    (0..s.len())
        .rev()
        .map(|k| &s[..k])
        .find(|p| s.ends_with(p))
        .unwrap_or("")
        .to_string()
}

pub fn is_rich_oracle(s: &str) -> bool {
    pal_factors(s).len() == s.len() + 1
}

/// Any two equal-length factors differ by at most one in every letter count.
pub fn balanced_oracle(s: &str) -> bool {
    let letters: BTreeSet<char> = s.chars().collect();
    (1..=s.len()).all(|n| {
        let fs = factors_of_len(s, n);
        letters.iter().all(|&x| {
            let counts: Vec<usize> = fs
                .iter()
                .map(|f| f.chars().filter(|&c| c == x).count())
                .collect();
            counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1
        })
    })
}

pub fn trapezoidal_oracle(s: &str) -> bool {
    s.len() == r_oracle(s) + k_oracle(s)
}

pub fn distinct_letters(s: &str) -> usize {
    s.chars().collect::<BTreeSet<_>>().len()
}
