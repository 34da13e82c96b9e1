//! Group irregularity strength against its closed form.

use zerosum::graph::{connected_graphs, Graph};
use zerosum::labeling::{group_irregularity_strength, irregularity_strength, predicted_group_irregularity};
use zerosum::Budget;

fn main() {
    let budget = Budget::default();
    for (name, g) in [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("P6", Graph::path(6)),
        ("K4", Graph::complete(4)),
    ] {
        println!(
            "{name}: s_g = {:?}, formula {:?}, s = {:?}",
            group_irregularity_strength(&g, 12, budget),
            predicted_group_irregularity(&g),
            irregularity_strength(&g, 12, budget)
        );
    }

    for n in 3..=5 {
        let graphs = connected_graphs(n);
        let agree = graphs
            .iter()
            .filter(|g| {
                let got = group_irregularity_strength(g, n + 3, budget);
                predicted_group_irregularity(g).map(zerosum::labeling::GroupIrregularity::Value) == Some(got)
            })
            .count();
        println!("{n} vertices: {agree} of {} connected graphs match", graphs.len());
    }
}
