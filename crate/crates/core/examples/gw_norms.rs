//! Rost norms in GW of finite fields: the closed table next to the
//! reciprocity-based computation.
//!
//! ```bash
//! cargo run -p tambara --example gw_norms
//! ```

use tambara::{GwClass, Result};

fn main() -> Result<()> {
    println!("{:>4} {:>3} {:>3}   {:<22} agrees", "n", "ε", "m", "norm");
    for m in [2, 3, 4, 6] {
        for (n, det) in [(3, false), (3, true), (-2, true), (0, true)] {
            let x = GwClass::new(5, m, n, det)?;
            let closed = x.norm_closed(m)?;
            let oracle = x.norm_oracle(m)?;
            println!("{n:>4} {:>3} {m:>3}   {:<22} {}", det as u8, format!("({}, {})", closed.dim(), closed.det() as u8), closed == oracle);
        }
    }

    let x = GwClass::new(3, 4, 2, true)?;
    println!("\nx = {x}");
    println!("transfer by 2: {}", x.transfer(2)?);
    println!("restrict by 3: {}", x.restrict(3)?);
    Ok(())
}
