//! Orthomorphisms from zero-sum triples, and cycle-type searches.

use zerosum::group::Group;
use zerosum::orthomorphism::{complete_mapping_exists, construct_from_triples, search_k_cycle_orthomorphism, CycleMap};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    for moduli in [&[7][..], &[13], &[2, 2, 7]] {
        let g = Group::new(moduli)?;
        let c = construct_from_triples(&g, Budget::default())?;
        println!(
            "{g}: theta {}, phi {}",
            c.certificate.theta_cycles, c.certificate.phi_cycles
        );
    }

    for n in 2..=9 {
        for g in zerosum::group::enumerate_abelian_groups(n) {
            let v = complete_mapping_exists(&g, Budget::default())?;
            println!(
                "{:<10} |I| = {}  complete mapping: {}",
                g.to_string(),
                g.involution_count(),
                v.label()
            );
        }
    }

    let z13 = Group::cyclic(13)?;
    let v = search_k_cycle_orthomorphism(&z13, 4, CycleMap::Phi, Budget::default())?;
    if let Some(c) = v.found() {
        println!(
            "Z_13 with phi in 4-cycles: phi {}, theta {}",
            c.phi_cycles, c.theta_cycles
        );
    }
    Ok(())
}
