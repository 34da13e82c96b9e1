//! Skolem sequences and Skolem partitions built from good six-subsets.

use zerosum::group::Group;
use zerosum::skolem::{
    characterize_r_skolem, find_skolem_sequence, good_six, is_skolem_sequence, refine_good_six, skolem_partition,
    Refinement, SkolemDomain,
};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    println!(
        "4 2 3 2 4 3 1 1 valid: {}",
        is_skolem_sequence(&[4, 2, 3, 2, 4, 3, 1, 1])?
    );
    for n in 1..=6 {
        let v = find_skolem_sequence(n, Budget::default());
        match v.found() {
            Some(s) => println!("order {n}: {s}"),
            None => println!("order {n}: {}", v.label()),
        }
    }

    let z13 = Group::cyclic(13)?;
    let six = good_six(&z13, &z13.element(&[1])?, &z13.element(&[3])?).expect("1, 3 give six distinct members");
    println!(
        "good six-subset of Z_13: {:?}",
        six.members.iter().map(|e| e.to_string()).collect::<Vec<_>>()
    );
    println!("as pairs:   {}", refine_good_six(&z13, &six, Refinement::Pairs));
    println!("as triples: {}", refine_good_six(&z13, &six, Refinement::Triples));

    let v = skolem_partition(&z13, &SkolemDomain::Star, Budget::default())?;
    let w = v.witness.unwrap();
    println!("Z_13*: {} six-subsets, {} pairs", w.six_parts.len(), w.two_parts.len());

    for row in characterize_r_skolem(20, Budget::default())?
        .iter()
        .filter(|r| r.group.is_cyclic())
    {
        println!("{:<6} |R| = {:>2}  {}", row.group.to_string(), row.r_size, row.status);
    }
    Ok(())
}
