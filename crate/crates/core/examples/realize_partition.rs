//! Realizing size and target vectors as subset partitions.

use zerosum::group::Group;
use zerosum::partition::{heuristic_realize, realize_partition, RealizationInstance};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    let z7 = Group::cyclic(7)?;
    let inst = RealizationInstance::zero_sum(&z7, z7.nonzero(), vec![3, 3])?;
    let v = realize_partition(&inst, Budget::default());
    println!("Z_7* into zero-sum triples: {} {}", v.status, v.witness.unwrap());

    // Prescribed targets instead of zero.
    let targets = vec![z7.element(&[1])?, z7.element(&[6])?];
    let inst = RealizationInstance::new(&z7, z7.nonzero(), vec![3, 3], targets)?;
    println!(
        "with targets 1, 6: {}",
        realize_partition(&inst, Budget::default()).witness.unwrap()
    );

    // The element sum of Z_8* is 4, so no zero-sum vector fits.
    let z8 = Group::cyclic(8)?;
    let inst = RealizationInstance::zero_sum(&z8, z8.nonzero(), vec![7])?;
    let v = realize_partition(&inst, Budget::default());
    println!("Z_8* as one zero-sum part: {} ({})", v.status, v.reason);

    // Orders beyond the exact ceiling go through the randomized search.
    let big = Group::new(&[3, 3, 3, 3, 3])?;
    let mut sizes = vec![3; 80];
    sizes.push(2);
    let inst = RealizationInstance::zero_sum(&big, big.nonzero(), sizes)?;
    let v = heuristic_realize(&inst, 7);
    println!("{big}* into 80 zero-sum triples and a pair: {}", v.status);
    Ok(())
}
