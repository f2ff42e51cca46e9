//! The Dress map of `F_{q^N}/F_q` and its kernel at every level.
//!
//! ```bash
//! cargo run -p tambara --example dress_kernel -- 3 12
//! ```

use tambara::dress::{dress, dress_kernel_level};
use tambara::numtheory::divisors;
use tambara::{BurnsideElement, ExtensionSpec, Level, Result};

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let q = args.next().unwrap_or(3);
    let n = args.next().unwrap_or(12);
    let spec = ExtensionSpec::finite(q, n)?;

    for m in divisors(n)? {
        let level = Level::new(n, m)?;
        let images: Vec<String> = level
            .basis()
            .into_iter()
            .map(|k| {
                let gw = dress(&spec, &BurnsideElement::basis_element(level, k)?)?;
                Ok(format!("t_{k}↦({},{})", gw.dim(), gw.det() as u8))
            })
            .collect::<Result<_>>()?;
        println!("level {m:>3}  F_{q}^{:<3}  {}", spec.field_degree(m)?, images.join(" "));
        println!("           kernel {}", dress_kernel_level(&spec, m)?);
    }
    Ok(())
}
