mod common;

use common::*;
use proptest::prelude::*;
use richwords::classify::*;
use richwords::complexity::*;
use richwords::eertree::{index_count_palindromes, PalindromeIndex};
use richwords::generators::{
    all_words, central_word, lower_christoffel, random_words, ChristoffelParams,
};
use richwords::lab::{census, find_class_members, verify_claim, Claim, RunOptions};
use richwords::word::{complete_returns, longest_border, occurrences, palindromic_factors};
use richwords::{Alphabet, ClassificationReport, Word};

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn each_word(alphabet: &str, max_len: usize, mut f: impl FnMut(&Word)) {
    let a = Alphabet::new(alphabet).unwrap();
    for n in 0..=max_len {
        all_words(&a, n).for_each(|x| f(&x));
    }
}

#[test]
fn enumeration_matches_oracle_order() {
    for (alpha, n) in [("ab", 6), ("abc", 4), ("ba", 3)] {
        let got: Vec<String> = all_words(&Alphabet::new(alpha).unwrap(), n)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, words(alpha, n));
    }
}

#[test]
fn profiles_and_indices_match_oracles() {
    for (alpha, max) in [("ab", 10), ("abc", 6)] {
        for s in words_up_to(alpha, max) {
            let x = w(&s);
            assert_eq!(subword_complexity(&x).values, c_profile(&s), "{s}");
            assert_eq!(palindromic_complexity(&x).values, p_profile(&s), "{s}");
            assert_eq!(r_index(&x), r_oracle(&s), "{s}");
            assert_eq!(k_index(&x), k_oracle(&s), "{s}");
            assert_eq!(longest_border(&x).to_string(), border_oracle(&s), "{s}");
            if !s.is_empty() {
                assert_eq!(minimal_period(&x).unwrap(), period_oracle(&s), "{s}");
            }
            let pals: Vec<String> = palindromic_factors(&x)
                .iter()
                .map(|p| p.to_string())
                .collect();
            assert_eq!(
                pals.into_iter().collect::<std::collections::BTreeSet<_>>(),
                pal_factors(&s)
            );
        }
    }
}

#[test]
fn classifiers_match_oracles() {
    for (alpha, max) in [("ab", 10), ("abc", 6)] {
        for s in words_up_to(alpha, max) {
            let x = w(&s);
            assert_eq!(is_rich_by_count(&x), is_rich_oracle(&s), "{s}");
            assert_eq!(is_rich_by_returns(&x), is_rich_oracle(&s), "{s}");
            assert_eq!(is_trapezoidal(&x), trapezoidal_oracle(&s), "{s}");
            if distinct_letters(&s) <= 2 {
                assert_eq!(is_balanced(&x).unwrap(), balanced_oracle(&s), "{s}");
            } else {
                assert!(is_balanced(&x).is_err());
                assert!(!is_finite_sturmian(&x));
            }
        }
    }
}

#[test]
fn right_special_sets_match_oracle() {
    for s in words_up_to("ab", 8) {
        let x = w(&s);
        for n in 0..=s.len() {
            let got: Vec<String> = right_special_factors(&x, n)
                .unwrap()
                .iter()
                .map(|u| u.to_string())
                .collect();
            let want: Vec<String> = factors_of_len(&s, n)
                .into_iter()
                .filter(|u| is_right_special(&s, u))
                .collect();
            assert_eq!(got, want, "{s} n={n}");
        }
    }
}

#[test]
fn complete_returns_have_exactly_two_occurrences() {
    each_word("ab", 10, |x| {
        for u in palindromic_factors(x).iter().filter(|u| !u.is_empty()) {
            for r in complete_returns(x, u).unwrap() {
                let (rs, us) = (r.to_string(), u.to_string());
                assert!(rs.starts_with(&us) && rs.ends_with(&us));
                assert_eq!(count_occ(&rs, &us), 2, "{x} {u} {r}");
            }
        }
    });
}

#[test]
fn binary_returns_to_letters_are_palindromes() {
    each_word("ab", 12, |x| {
        for letter in ["a", "b"] {
            assert!(
                complete_returns(x, &w(letter))
                    .unwrap()
                    .iter()
                    .all(Word::is_palindrome),
                "{x}"
            );
        }
    });
}

#[test]
fn palindrome_profile_sums_to_factor_count() {
    each_word("ab", 12, |x| {
        let p = palindromic_complexity(x);
        assert_eq!(p.total(), palindromic_factors(x).len());
        assert_eq!(p.values[0], 1);
        assert_eq!(*p.values.last().unwrap(), 0);
        let c = subword_complexity(x);
        assert!(p.values.iter().zip(&c.values).all(|(pv, cv)| pv <= cv));
    });
}

#[test]
fn complexity_bounds() {
    for (alpha, max) in [("ab", 12), ("abc", 7)] {
        let k = alpha.len();
        each_word(alpha, max, |x| {
            let c = subword_complexity(x);
            let n = x.len();
            assert_eq!(c.values[0], 1);
            assert_eq!(c.values[n + 1], 0);
            if n > 0 {
                assert_eq!(c.values[n], 1);
            }
            for (i, &v) in c.values[..=n].iter().enumerate() {
                assert!(v <= n - i + 1 && v <= k.pow(i as u32), "{x} n={i}");
            }
        });
    }
}

#[test]
fn difference_profile_sums_to_zero() {
    each_word("ab", 14, |x| {
        if let Ok(d) = difference_profile(x) {
            assert_eq!(d.values.iter().sum::<i64>(), 0, "{x}");
        }
    });
}

#[test]
fn structural_index_ranges() {
    each_word("ab", 12, |x| {
        if x.is_empty() {
            return;
        }
        let i = structural_indices(x);
        let n = x.len();
        assert!(i.r_index <= n);
        assert!((1..=n).contains(&i.k_index));
        let pi = i.min_period.unwrap();
        assert!((1..=n).contains(&pi) && pi > i.r_index);
    });
}

#[test]
fn balance_agrees_with_witness() {
    each_word("ab", 14, |x| {
        let balanced = is_balanced(x).unwrap();
        let witness = unbalance_witness(x).unwrap();
        assert_eq!(balanced, witness.is_none(), "{x}");
        if let Some(u) = witness {
            assert!(u.is_palindrome());
            let s = x.to_string();
            assert!(
                s.contains(&format!("a{u}a")) && s.contains(&format!("b{u}b")),
                "{x} {u}"
            );
        }
    });
}

#[test]
fn report_invariants() {
    each_word("ab", 10, |x| {
        let r = ClassificationReport::of(x);
        assert_eq!(r.is_rich, r.palindrome_count == x.len() + 1);
        assert_eq!(
            r.is_sturmian_palindrome,
            r.is_palindrome && r.is_finite_sturmian
        );
        assert_eq!(r.is_balanced == Some(true), r.unbalance_witness.is_none());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            serde_json::from_str::<ClassificationReport>(&json).unwrap(),
            r
        );
    });
}

#[test]
fn christoffel_letter_counts_and_central_palindromes() {
    for params in ChristoffelParams::all_up_to(20) {
        let c = lower_christoffel(params);
        let bs = c.as_bytes().iter().filter(|&&b| b == b'b').count();
        assert_eq!(bs as u32, params.p());
        assert_eq!((c.len() - bs) as u32, params.q());
        let m = central_word(params);
        assert!(m.is_palindrome(), "{m}");
        assert!(is_sturmian_palindrome(&m) && condition_b_prime(&m) && is_trapezoidal(&m));
    }
}

#[test]
fn parallel_and_sequential_reports_agree() {
    let abc = Alphabet::ternary();
    for claim in Claim::ALL {
        let seq = verify_claim(claim, &abc, 6, &RunOptions::sequential()).unwrap();
        let par = verify_claim(claim, &abc, 6, &RunOptions::threads(4)).unwrap();
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            serde_json::to_string(&par).unwrap()
        );
        assert!(seq.verified, "{claim}: {:?}", seq.counterexamples.first());
        assert_eq!(seq.words_checked, 1093);
    }
}

#[test]
fn members_in_alphabet_order() {
    let ba = Alphabet::new("ba").unwrap();
    let got = find_class_members(
        &"palindrome".parse().unwrap(),
        &ba,
        3,
        &RunOptions::threads(3),
    )
    .unwrap();
    let strs: Vec<&str> = got.iter().map(Word::as_str).collect();
    assert_eq!(strs, ["bbb", "bab", "aba", "aaa"]);
}

#[test]
fn census_restates_main_theorem() {
    let t = census(&Alphabet::binary(), 12, &RunOptions::default()).unwrap();
    for r in &t.rows {
        assert_eq!(r.total, 1 << r.length);
        assert_eq!(r.sturmian_palindrome, r.condition_b_prime);
        assert_eq!(r.condition_b_prime, r.trapezoidal_palindrome);
        assert_eq!(r.condition_b, r.rich_palindrome);
        assert!(r.trapezoidal <= r.rich);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn index_matches_naive(s in "[abc]{0,60}") {
        let x = w(&s);
        prop_assert_eq!(index_count_palindromes(&x) + 1, palindromic_factors(&x).len());
        let idx = PalindromeIndex::build(&x);
        prop_assert_eq!(idx.len(), palindromic_factors(&x).len());
        for (i, pair) in idx.prefix_counts().windows(2).enumerate() {
            prop_assert!(pair[1] - pair[0] <= 1);
            prop_assert_eq!(pair[1], palindromic_factors(&x.factor(0, i + 1)).len() - 1);
        }
    }

    #[test]
    fn occurrences_are_exact(s in "[ab]{0,40}", u in "[ab]{1,4}") {
        let (x, y) = (w(&s), w(&u));
        let occ = occurrences(&x, &y).unwrap();
        prop_assert_eq!(occ.len(), count_occ(&s, &u));
        prop_assert!(occ.windows(2).all(|p| p[0] < p[1]));
        for p in occ {
            prop_assert_eq!(&s[p..p + u.len()], u.as_str());
        }
    }

    #[test]
    fn border_plus_period_is_length(s in "[ab]{1,80}") {
        let x = w(&s);
        prop_assert_eq!(longest_border(&x).len() + minimal_period(&x).unwrap(), x.len());
    }

    #[test]
    fn random_words_are_seeded(seed in any::<u64>(), len in 0usize..50) {
        let ab = Alphabet::binary();
        let a = random_words(&ab, len, 3, seed);
        prop_assert_eq!(&a, &random_words(&ab, len, 3, seed));
        prop_assert!(a.iter().all(|x| x.len() == len));
    }
}
