//! Exhaustively checks every claim over binary and ternary words.
//!
//! cargo run --release -p richwords --example verify_theorems -- 14

use richwords::lab::{verify_claim, Claim, RunOptions};
use richwords::Alphabet;

fn main() -> Result<(), richwords::Error> {
    let max_binary: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let max_ternary = (max_binary * 2 / 3).max(1);
    let options = RunOptions::default();

    for (alphabet, max_len) in [
        (Alphabet::binary(), max_binary),
        (Alphabet::ternary(), max_ternary),
    ] {
        for claim in Claim::ALL {
            let r = verify_claim(claim, &alphabet, max_len, &options)?;
            println!(
                "{:<14} {{{}}} <= {:>2}  {:>9} words  {:<8} {:>9.1?}",
                claim.id(),
                alphabet,
                max_len,
                r.words_checked,
                if r.verified { "ok" } else { "FAILED" },
                r.elapsed
            );
            for c in r.counterexamples.iter().take(5) {
                println!("    {:?}: {}", c.word.as_str(), c.diagnostic);
            }
        }
    }
    Ok(())
}
