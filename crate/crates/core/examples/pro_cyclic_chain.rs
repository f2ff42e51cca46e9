//! Truncations of the `ℤ_p`- and `Ẑ`-extensions of a finite field form an
//! ascending chain of ideals.
//!
//! ```bash
//! cargo run --release -p tambara --example pro_cyclic_chain
//! ```

use tambara::ideals::verify_theorem;
use tambara::{Result, Theorem, TheoremParams};

fn main() -> Result<()> {
    for (p, depths) in [(2, 1..=5), (3, 1..=4)] {
        for depth in depths {
            let params = TheoremParams { p: Some(p), depth: Some(depth), q: Some(3), ..Default::default() };
            summarize(verify_theorem(Theorem::ZpTruncated, &params)?);
        }
    }
    for n in [3, 4, 5] {
        let params = TheoremParams { depth: Some(n), q: Some(5), ..Default::default() };
        summarize(verify_theorem(Theorem::ZhatTruncated, &params)?);
    }
    Ok(())
}

fn summarize(report: tambara::ideals::VerificationReport) {
    let equal = report.levels.values().filter(|l| l.equal).count();
    println!("{} C_{}: {equal}/{} levels equal, verdict {}", report.theorem, report.modulus, report.levels.len(), report.verdict);
    for check in report.checks.iter().filter(|c| c.name.contains("chain")) {
        println!("    {}: {}", check.name, check.passed);
    }
}
