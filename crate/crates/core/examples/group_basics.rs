//! Group arithmetic, involutions and the element sum.
//!
//! ```text
//! cargo run --example group_basics
//! ```

use zerosum::group::{enumerate_abelian_groups, Group};

fn main() -> zerosum::Result<()> {
    let g = Group::new(&[2, 4])?;
    let a = g.element(&[1, 3])?;
    let b = g.element(&[1, 2])?;
    println!("{g}: {a} + {b} = {}, -{a} = {}", g.add(&a, &b)?, g.neg(&a)?);
    println!("order of {a} is {}", g.order_of(&a)?);

    let s = g.sylow2_decomposition();
    println!("2-part {}, odd part {}", s.l(), s.h());

    println!("{:<16} {:>3} {:>8}", "group", "|I|", "sum");
    for n in [8, 12, 16] {
        for g in enumerate_abelian_groups(n) {
            println!(
                "{:<16} {:>3} {:>8}",
                g.to_string(),
                g.involution_count(),
                g.sum_all_elements().to_string()
            );
        }
    }
    Ok(())
}
