//! Antimagic labelings of rooted k-trees from zero-sum partitions.

use zerosum::graph::{random_k_tree, Graph, RootedTree};
use zerosum::group::Group;
use zerosum::labeling::{antimagic_label_ktree, verify_antimagic, vertex_weights};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    for (moduli, k) in [(&[7][..], 2), (&[3, 3], 2), (&[13], 3)] {
        let g = Group::new(moduli)?;
        let tree = random_k_tree(g.order(), k, 1).expect("order allows a k-tree");
        let labels = antimagic_label_ktree(&g, &tree, k, Budget::default())?;
        let weights = vertex_weights(&g, tree.graph(), &labels)?;
        println!("{g}, {k}-tree edges {:?}", tree.graph().edges());
        println!(
            "  labels  {:?}",
            labels.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        );
        println!(
            "  weights {:?}",
            weights.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        );
        assert!(verify_antimagic(&g, tree.graph(), &labels, &g.nonzero()));
    }

    // A path has a vertex with one child, so it is not a 2-tree.
    let path = RootedTree::new(Graph::path(8), 0)?;
    let e = antimagic_label_ktree(&Group::new(&[2, 2, 2])?, &path, 2, Budget::default());
    println!("path on (Z_2)^3: {}", e.unwrap_err());
    Ok(())
}
