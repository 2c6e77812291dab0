//! Christoffel and central words, and the three faces of the Sturmian
//! palindrome characterization on each central word.
//!
//! cargo run -p richwords --example christoffel -- 9

use richwords::classify::{condition_b_prime, is_sturmian_palindrome, is_trapezoidal};
use richwords::complexity::palindromic_complexity;
use richwords::generators::{central_word, lower_christoffel, sturmian_corpus, ChristoffelParams};

fn main() {
    let max_den: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    println!(
        "{:>3} {:>3}  {:<12} {:<10} {:>5} {:>5} {:>5}  P",
        "p", "q", "christoffel", "central", "A'", "B'", "C'"
    );
    for params in ChristoffelParams::all_up_to(max_den) {
        let c = lower_christoffel(params);
        let m = central_word(params);
        let p = palindromic_complexity(&m);
        println!(
            "{:>3} {:>3}  {:<12} {:<10} {:>5} {:>5} {:>5}  {:?}",
            params.p(),
            params.q(),
            c.as_str(),
            m.as_str(),
            is_sturmian_palindrome(&m),
            condition_b_prime(&m),
            m.is_palindrome() && is_trapezoidal(&m),
            &p.values[..=m.len()],
        );
    }
    let corpus = sturmian_corpus(max_den, 6);
    println!("\n{} circular factors of length <= 6", corpus.len());
}
