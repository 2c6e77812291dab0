//! Builds the palindromic tree one symbol at a time and checks it against
//! the naive palindrome set on every prefix.
//!
//! cargo run -p richwords --example palindrome_index -- abaababaab

use richwords::word::palindromic_factors;
use richwords::{PalindromeIndex, Word};

fn main() -> Result<(), richwords::Error> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "abaababaabaab".to_string());
    let w = Word::parse(&arg)?;

    let mut index = PalindromeIndex::new();
    println!("{:>4}  {:<16} {:>6} {:>6}  rich?", "i", "prefix", "index", "naive");
    for (i, &b) in w.as_bytes().iter().enumerate() {
        let fresh = index.push(b);
        let prefix = w.factor(0, i + 1);
        let naive = palindromic_factors(&prefix).len() - 1;
        assert_eq!(naive, index.distinct_nonempty());
        println!(
            "{:>4}  {:<16} {:>6} {:>6}  {}{}",
            i + 1,
            prefix.as_str(),
            index.distinct_nonempty(),
            naive,
            if index.distinct_nonempty() == i + 1 {
                "yes"
            } else {
                "no"
            },
            if fresh { "" } else { "  (no new palindrome)" },
        );
    }
    println!(
        "longest palindromic suffix: {}",
        index.longest_palindromic_suffix()
    );
    Ok(())
}
