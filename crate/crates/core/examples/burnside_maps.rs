//! Arithmetic and structure maps in the Burnside functor of `C_8`.
//!
//! ```bash
//! cargo run -p tambara --example burnside_maps
//! ```

use tambara::{BurnsideElement, Level, Result};

fn main() -> Result<()> {
    let level4 = Level::new(8, 4)?;
    let x = BurnsideElement::from_coeffs(level4, [(4, 1), (2, -1), (1, -2)])?;
    let two_minus_t2 = BurnsideElement::from_coeffs(level4, [(1, 2), (2, -1)])?;

    println!("x              = {x}   (level {}, card {})", x.level(), x.card());
    println!("(2 - t_2)·x    = {}", &two_minus_t2 * &x);
    println!("res to 2       = {}", x.restrict(2)?);
    println!("tr to 8        = {}", x.transfer(8)?);
    println!("N to 8         = {}", x.norm(8)?);
    println!("N + 2 tr       = {}", &x.norm(8)? + &x.transfer(8)?.scale(&2.into()));

    // composite index: the prime-step chain and the one-shot formula agree
    let y = BurnsideElement::from_coeffs(Level::new(36, 3)?, [(3, 1), (1, -3)])?;
    println!("\nN_3^36(t_3 - 3) = {}", y.norm(36)?);
    assert_eq!(y.norm(36)?, y.norm_direct(36)?);

    println!("\nas JSON: {}", serde_json::to_string(&x).expect("serializable"));
    Ok(())
}
