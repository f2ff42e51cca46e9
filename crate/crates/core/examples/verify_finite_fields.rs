//! Saturated catalog generators against Dress kernels over a grid of
//! finite fields.
//!
//! ```bash
//! cargo run --release -p tambara --example verify_finite_fields
//! ```

use tambara::ideals::verify_theorem;
use tambara::{Result, Theorem, TheoremParams};

fn main() -> Result<()> {
    let qs = [3, 5, 7, 9, 11, 13];
    print!("{:>4}", "N");
    for q in qs {
        print!(" {q:>4}");
    }
    println!();
    for n in [1, 2, 4, 6, 8, 12, 16, 24, 30, 60] {
        print!("{n:>4}");
        for q in qs {
            let params = TheoremParams { n: Some(n), q: Some(q), ..Default::default() };
            let report = verify_theorem(Theorem::FiniteFields, &params)?;
            print!(" {:>4}", if report.verdict { "ok" } else { "FAIL" });
        }
        println!();
    }

    let report = verify_theorem(Theorem::Absolute, &TheoremParams::with_n(24))?;
    println!("\nabsolute generator for C_24: {}", report.generators);
    for check in &report.checks {
        println!("  {}: {}", check.name, check.detail);
    }
    Ok(())
}
