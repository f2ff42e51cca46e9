//! Trace ideals of quadratic extensions of the rationals.
//!
//! ```bash
//! cargo run -p tambara --example rational_quadratic -- 7/2 -3 13
//! ```

use tambara::gw::{pi, tau_rational};
use tambara::ideals::{generator_catalog, saturate};
use tambara::{Rational, Result, Theorem, TheoremParams};

fn main() -> Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["-5", "-1", "2", "5", "7", "10", "21", "4/9", "7/2"].map(String::from).to_vec();
    }
    for text in inputs {
        let r: Rational = text.parse()?;
        let tau = tau_rational(r)?;
        let entry = generator_catalog(Theorem::RationalQuadratic, &TheoremParams { r: Some(r), ..Default::default() })?;
        let ideal = saturate(entry.modulus, &entry.generators)?;
        println!("Q(√{r:<5}) τ = {tau}, π = {}  level 2: {}", pi(tau), ideal.level(2)?);
    }
    Ok(())
}
