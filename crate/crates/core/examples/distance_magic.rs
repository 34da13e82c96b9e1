//! Distance magic labelings of complete multipartite graphs.

use zerosum::group::{enumerate_abelian_groups, Group};
use zerosum::labeling::distance_magic_multipartite;
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    let z7 = Group::cyclic(7)?;
    let d = distance_magic_multipartite(&z7, &[1, 3, 3], Budget::default())?;
    let labels: Vec<String> = d.labels.unwrap().iter().map(|e| e.to_string()).collect();
    println!(
        "K(1,3,3) over Z_7: labels {labels:?}, magic constant {}",
        d.magic_constant.unwrap()
    );

    for g in enumerate_abelian_groups(8) {
        for sizes in [&[2, 2, 2, 2][..], &[4, 4], &[1, 3, 4]] {
            let d = distance_magic_multipartite(&g, sizes, Budget::default())?;
            let mu = d.magic_constant.map_or("-".to_string(), |m| m.to_string());
            println!("{:<10} {sizes:?}: {} mu = {mu}", g.to_string(), d.status);
        }
    }
    Ok(())
}
