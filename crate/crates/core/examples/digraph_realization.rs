//! Irregular arc labelings of digraphs.

use zerosum::graph::Digraph;
use zerosum::group::Group;
use zerosum::labeling::{digraph_realizable, digraph_weights};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    let g = Group::cyclic(16)?;
    let dg = Digraph::random_with_components(&[3, 3, 4], 0.4, 11);
    println!("arcs {:?}", dg.arcs());
    let v = digraph_realizable(&g, &dg, Budget::default())?;
    let labels = v.into_found().expect("16 elements leave room for three zero-sum parts");
    let w = digraph_weights(&g, &dg, &labels)?;
    println!("labels  {:?}", labels.iter().map(|e| e.to_string()).collect::<Vec<_>>());
    println!("weights {:?}", w.iter().map(|e| e.to_string()).collect::<Vec<_>>());

    // Two components of size 2 need disjoint pairs {x, -x}; Z_4 has only one.
    let small = Digraph::new(4, vec![(0, 1), (2, 3)])?;
    println!(
        "Z_4 on two arcs: {}",
        digraph_realizable(&Group::cyclic(4)?, &small, Budget::default())?.label()
    );
    Ok(())
}
