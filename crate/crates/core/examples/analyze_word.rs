//! Complexity profiles and class verdicts for one word.
//!
//! cargo run -p richwords --example analyze_word -- aaabab

use richwords::cli::Analysis;
use richwords::Word;

fn main() -> Result<(), richwords::Error> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "aabbaa".to_string());
    let w = Word::parse(&arg)?;
    let a = Analysis::of(&w);
    let c = &a.classification;

    println!("word      {:?} (length {})", w.as_str(), w.len());
    println!("C         {:?}", a.subword_complexity);
    println!("P         {:?}", a.palindromic_complexity);
    match (&a.differences, a.trapezoid_profile) {
        (Some(d), Some(t)) => println!("D         {d:?}  = 1^{} 0^{} (-1)^{}", t.r, t.s, t.r),
        (Some(d), None) => println!("D         {d:?}  (not a trapezoid)"),
        (None, _) => println!("D         undefined for the empty word"),
    }
    println!(
        "R={} K={} pi={}",
        c.indices.r_index,
        c.indices.k_index,
        c.indices.min_period.map_or("-".into(), |p| p.to_string())
    );
    println!(
        "palindromes ({}): {:?}",
        c.palindrome_count,
        a.palindromic_factors
            .iter()
            .map(Word::as_str)
            .collect::<Vec<_>>()
    );
    println!();
    println!("palindrome          {}", c.is_palindrome);
    println!("rich                {}", c.is_rich);
    println!("trapezoidal         {}", c.is_trapezoidal);
    println!(
        "balanced            {}",
        c.is_balanced
            .map_or("n/a (3+ symbols)".into(), |b| b.to_string())
    );
    println!("finite Sturmian     {}", c.is_finite_sturmian);
    println!("Sturmian palindrome {}", c.is_sturmian_palindrome);
    println!("condition B         {}", c.condition_b);
    println!("condition B'        {}", c.condition_b_prime);
    if let Some(u) = &c.unbalance_witness {
        println!(
            "unbalanced: both a{u}a and b{u}b occur (U = {:?})",
            u.as_str()
        );
    }
    Ok(())
}
