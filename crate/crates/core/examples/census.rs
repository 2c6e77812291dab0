//! Per-length counts of each word class over {a, b}.
//!
//! cargo run --release -p richwords --example census -- 14

use richwords::lab::{census, RunOptions};
use richwords::Alphabet;

fn main() -> Result<(), richwords::Error> {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let table = census(&Alphabet::binary(), max_len, &RunOptions::default())?;
    println!(
        "{:>3} {:>7} {:>6} {:>6} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10}",
        "n", "total", "pal", "rich", "trap", "balanced", "B", "B'", "st_pal", "trap\\st"
    );
    for r in &table.rows {
        println!(
            "{:>3} {:>7} {:>6} {:>6} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10}",
            r.length,
            r.total,
            r.palindrome,
            r.rich,
            r.trapezoidal,
            r.balanced,
            r.condition_b,
            r.condition_b_prime,
            r.sturmian_palindrome,
            // Balanced binary words are trapezoidal, so the difference counts
            // trapezoidal words that are not Sturmian.
            r.trapezoidal - r.balanced,
        );
    }
    Ok(())
}
