//! Words separating the classes: rich but not trapezoidal, trapezoidal but
//! not Sturmian.
//!
//! cargo run -p richwords --example witnesses -- 8

use richwords::lab::{find_class_members, Predicate, RunOptions};
use richwords::{Alphabet, Word};

fn main() -> Result<(), richwords::Error> {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let ab = Alphabet::binary();
    let options = RunOptions::default();
    let queries: [&str; 3] = [
        "rich&!trapezoidal",
        "trapezoidal&!finite_sturmian",
        "palindrome&rich&!finite_sturmian",
    ];

    for query in queries {
        let predicate: Predicate = query.parse()?;
        println!("{predicate}");
        for len in 1..=max_len {
            let found = find_class_members(&predicate, &ab, len, &options)?;
            let shown: Vec<&str> = found.iter().take(8).map(Word::as_str).collect();
            let more = if found.len() > shown.len() {
                " ..."
            } else {
                ""
            };
            println!("  n={len:<2} {:>4}  {}{more}", found.len(), shown.join(" "));
        }
    }
    Ok(())
}
