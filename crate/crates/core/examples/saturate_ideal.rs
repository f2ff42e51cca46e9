//! The Tambara ideal generated by a single element, level by level.
//!
//! ```bash
//! cargo run -p tambara --example saturate_ideal
//! ```

use tambara::ideals::saturate_with_stats;
use tambara::{BurnsideElement, GeneratorSet, Level, Result};

fn main() -> Result<()> {
    let gen = BurnsideElement::from_coeffs(Level::new(24, 4)?, [(4, 1), (2, -1), (1, -2)])?;
    let (ideal, stats) = saturate_with_stats(24, &GeneratorSet::from_elements([gen.clone()]))?;
    println!("generated by {gen} at level 4 of C_24 ({} passes)\n", stats.passes);
    println!("{ideal}");

    for (m, x) in [(8, "t_8 + t_2 - 10"), (24, "t_8 + t_2 - 10"), (24, "t_3 - 3")] {
        let el = parse(24, m, x)?;
        println!("{x:<16} at level {m:>2}: {}", ideal.member(m, &el)?);
    }
    Ok(())
}

fn parse(n: u64, m: u64, text: &str) -> Result<BurnsideElement> {
    let mut coeffs = Vec::new();
    for term in text.replace(" - ", " + -").split(" + ") {
        let (c, k) = match term.split_once("t_") {
            Some((c, k)) => (match c { "" => 1, "-" => -1, c => c.parse().expect("coefficient") }, k.parse().expect("index")),
            None => (term.parse::<i64>().expect("constant"), 1),
        };
        coeffs.push((k, c));
    }
    BurnsideElement::from_coeffs(Level::new(n, m)?, coeffs)
}
