//! Acceptance run: one pass/fail line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use common::zero_sum_block_profiles;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerosum::graph::{connected_graphs, random_k_tree, Graph, RootedTree};
use zerosum::group::{enumerate_abelian_groups, Element, Group};
use zerosum::labeling::{
    antimagic_label_ktree, distance_magic_multipartite, group_irregularity_strength, irregular_exists,
    predicted_group_irregularity, verify_antimagic, verify_distance_magic, GroupIrregularity,
};
use zerosum::orthomorphism::{complete_mapping_exists, construct_from_triples};
use zerosum::partition::{realize_partition, RealizationInstance, Status};
use zerosum::skolem::{find_skolem_sequence, is_skolem_sequence, skolem_partition, SkolemDomain};
use zerosum::zspp::{groups_between, integer_partitions, Outcome, ZsppChecker};
use zerosum::{Budget, Error, SearchVerdict};

const BUDGET: Budget = Budget(zerosum::search::DEFAULT_BUDGET);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn zeng() -> Check {
    let report = ZsppChecker::new(BUDGET).check_zeng(16);
    let bad: Vec<String> = report
        .verdicts
        .iter()
        .filter(|v| v.is_mismatch() || v.outcome == Outcome::Unknown)
        .map(|v| format!("{} {}", v.group, v.outcome))
        .collect();
    ensure(bad.is_empty(), format!("mismatched or unresolved: {bad:?}"))?;
    Ok(format!("{} groups of order 3..16, 0 mismatches", report.verdicts.len()))
}

fn elementary_two_groups() -> Check {
    let checker = ZsppChecker::new(BUDGET);
    for n in 2..=4 {
        let g = Group::new(&vec![2; n]).map_err(|e| e.to_string())?;
        let v = checker.has_x_zspp(&g, 3).map_err(|e| e.to_string())?;
        ensure(v.holds(), format!("{g}: {}", v.outcome))?;
    }
    Ok("(Z_2)^n has 3-ZSPP for n = 2, 3, 4".into())
}

fn four_zspp() -> Check {
    let checker = ZsppChecker::new(BUDGET);
    let groups: Vec<Group> = groups_between(4, 16)
        .into_iter()
        .filter(|g| g.involution_count() > 1)
        .collect();
    for g in &groups {
        let v = checker.check_4zspp(g).map_err(|e| e.to_string())?;
        ensure(v.holds(), format!("{g}: {}", v.outcome))?;
    }
    Ok(format!("{} groups with |I| > 1", groups.len()))
}

fn mixed_sizes() -> Check {
    let checker = ZsppChecker::new(BUDGET);
    let mut failing = Vec::new();
    for g in groups_between(4, 16).iter().filter(|g| g.involution_count() > 1) {
        let v = checker.check_mixed_23(g).map_err(|e| e.to_string())?;
        ensure(
            !v.is_mismatch() && v.outcome != Outcome::Unknown,
            format!("{g}: {}", v.outcome),
        )?;
        if let Some(c) = &v.counterexample {
            failing.push((g.to_string(), c.sizes.to_string(), c.status));
        }
    }
    let hit = failing.iter().find(|(g, _, _)| g == "Z_2xZ_2xZ_4");
    let Some((_, sizes, status)) = hit else {
        return Err("no infeasible size vector reported for Z_2xZ_2xZ_4".into());
    };
    ensure(
        *status == Status::Infeasible,
        format!("Z_2xZ_2xZ_4 counterexample is {status}"),
    )?;
    Ok(format!("characterization holds; Z_2xZ_2xZ_4 infeasible at {sizes}"))
}

fn one_involution() -> Check {
    let checker = ZsppChecker::new(BUDGET);
    for n in (4..=20u32).step_by(2) {
        let g = Group::cyclic(n).map_err(|e| e.to_string())?;
        let r = checker.check_one_involution(&g).map_err(|e| e.to_string())?;
        let c = r.cyclic_2_3.expect("cyclic group");
        ensure(c.holds(), format!("{g} parts 2 and 3: {}", c.outcome))?;
    }
    let groups: Vec<Group> = groups_between(2, 16)
        .into_iter()
        .filter(|g| g.involution_count() == 1)
        .collect();
    for g in &groups {
        let r = checker.check_one_involution(g).map_err(|e| e.to_string())?;
        ensure(r.parts_4.holds(), format!("{g} parts >= 4: {}", r.parts_4.outcome))?;
    }
    Ok(format!(
        "cyclic orders 4..20 with parts 2, 3; {} groups with parts >= 4",
        groups.len()
    ))
}

fn skolem() -> Check {
    ensure(
        is_skolem_sequence(&[4, 2, 3, 2, 4, 3, 1, 1]).unwrap_or(false),
        "42324311 rejected",
    )?;
    for n in [2, 3] {
        ensure(
            find_skolem_sequence(n, BUDGET).is_exhausted(),
            format!("order {n} not refuted"),
        )?;
    }
    let mut count = 0;
    for n in (3..=27).step_by(2) {
        for g in enumerate_abelian_groups(n) {
            let v = skolem_partition(&g, &SkolemDomain::Star, BUDGET).map_err(|e| e.to_string())?;
            ensure(v.is_feasible(), format!("{g}*: {}", v.status))?;
            count += 1;
        }
    }
    let mut pattern = Vec::new();
    for m in [14u32, 20, 26, 32] {
        let g = Group::cyclic(m).map_err(|e| e.to_string())?;
        let v = skolem_partition(&g, &SkolemDomain::NonInvolutions, BUDGET).map_err(|e| e.to_string())?;
        ensure(v.status != Status::Unknown, format!("Z_{m} unresolved"))?;
        pattern.push(v.is_feasible());
    }
    ensure(pattern == [false, false, true, true], format!("R pattern {pattern:?}"))?;
    Ok(format!(
        "{count} odd-order groups partitioned; R for 14, 20, 26, 32 = no, no, yes, yes"
    ))
}

fn triple_construction() -> Check {
    let mut notes = Vec::new();
    for moduli in [&[7][..], &[13], &[2, 2, 7]] {
        let g = Group::new(moduli).map_err(|e| e.to_string())?;
        let c = construct_from_triples(&g, BUDGET).map_err(|e| e.to_string())?;
        let cert = &c.certificate;
        ensure(cert.recheck(), format!("{g}: certificate does not recheck"))?;
        ensure(
            cert.theta.apply(&g.zero()).unwrap().is_zero(),
            format!("{g}: theta moves 0"),
        )?;
        let t = &cert.theta_cycles;
        let want = (g.order() - 1) / 3;
        ensure(
            t.count(1) == 1 && t.count(3) == want && t.lengths().len() == want + 1,
            format!("{g}: theta cycle type {t}"),
        )?;
        notes.push(format!("{g} phi {}", cert.phi_cycles));
    }
    ensure(
        notes[0] == "Z_7 phi 1 + 2^3",
        format!("Z_7 phi type recorded as {}", notes[0]),
    )?;
    Ok(format!("theta types 1 + 3^k; {}", notes.join(", ")))
}

fn hall_paige() -> Check {
    let mut with = Vec::new();
    let mut without = Vec::new();
    for n in 2..=9 {
        for g in enumerate_abelian_groups(n) {
            let v = complete_mapping_exists(&g, BUDGET).map_err(|e| e.to_string())?;
            ensure(!matches!(v, SearchVerdict::BudgetExceeded), format!("{g} unresolved"))?;
            ensure(
                v.is_found() == (g.involution_count() != 1),
                format!("{g}: {}", v.label()),
            )?;
            if v.is_found() { &mut with } else { &mut without }.push(g.to_string());
        }
    }
    Ok(format!("exist: {}; none: {}", with.join(" "), without.join(" ")))
}

fn irregularity_strength() -> Check {
    for (name, g, want) in [
        ("P4", Graph::path(4), 4),
        ("C5", Graph::cycle(5), 5),
        ("P6", Graph::path(6), 7),
    ] {
        let got = group_irregularity_strength(&g, 12, BUDGET);
        ensure(got == GroupIrregularity::Value(want), format!("s_g({name}) = {got:?}"))?;
    }
    let mut count = 0;
    for n in 3..=5 {
        for graph in connected_graphs(n) {
            let got = group_irregularity_strength(&graph, n + 3, BUDGET);
            let want = predicted_group_irregularity(&graph).expect("connected, n >= 3");
            ensure(
                got == GroupIrregularity::Value(want),
                format!("{:?}: {got:?} vs {want}", graph.edges()),
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "s_g(P4) = 4, s_g(C5) = 5, s_g(P6) = 7; {count} connected graphs on 3..5 vertices match"
    ))
}

/// Every labeling by `Γ` with repetition, for confirming a negative answer.
fn brute_force_irregular(g: &Group, graph: &Graph) -> bool {
    let els: Vec<Element> = g.elements().collect();
    let m = graph.edge_count();
    let mut idx = vec![0usize; m];
    loop {
        let mut w = vec![g.zero(); graph.n()];
        for (&(u, v), &i) in graph.edges().iter().zip(&idx) {
            w[u] = g.add(&w[u], &els[i]).unwrap();
            w[v] = g.add(&w[v], &els[i]).unwrap();
        }
        if w.iter().collect::<BTreeSet<_>>().len() == graph.n() {
            return true;
        }
        let mut k = 0;
        while k < m && idx[k] + 1 == els.len() {
            idx[k] = 0;
            k += 1;
        }
        if k == m {
            return false;
        }
        idx[k] += 1;
    }
}

fn z6_irregular() -> Check {
    let z6 = Group::cyclic(6).map_err(|e| e.to_string())?;
    let graphs = connected_graphs(6);
    for graph in &graphs {
        let v = irregular_exists(&z6, graph, BUDGET);
        ensure(v.is_exhausted(), format!("{:?}: {}", graph.edges(), v.label()))?;
    }
    for (name, g) in [
        ("P6", Graph::path(6)),
        ("C6", Graph::cycle(6)),
        ("K_{1,5}", Graph::star(5)),
    ] {
        ensure(
            !brute_force_irregular(&z6, &g),
            format!("{name} has a Z_6-irregular labeling"),
        )?;
    }
    Ok(format!(
        "none for all {} connected graphs of order 6; P6, C6, K_1,5 also by brute force",
        graphs.len()
    ))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn distance_magic() -> Check {
    let z7 = Group::cyclic(7).map_err(|e| e.to_string())?;
    let d = distance_magic_multipartite(&z7, &[1, 3, 3], BUDGET).map_err(|e| e.to_string())?;
    let labels = d.labels.ok_or("no labeling of K_{1,3,3}")?;
    let shown: Vec<String> = labels.iter().map(|e| e.to_string()).collect();
    ensure(
        shown == ["0", "1", "2", "4", "3", "5", "6"],
        format!("labels {shown:?}"),
    )?;
    ensure(
        d.magic_constant.as_ref().is_some_and(|m| m.is_zero()),
        "magic constant is not 0",
    )?;

    let mut labelings = 0u64;
    for n in 2..=8 {
        let size_vectors: Vec<Vec<usize>> = integer_partitions(n, 1).map(|p| p.0).filter(|p| p.len() >= 2).collect();
        for g in enumerate_abelian_groups(n) {
            let els: Vec<Element> = g.elements().collect();
            for sizes in &size_vectors {
                let mut perm: Vec<usize> = (0..n).collect();
                loop {
                    let labels: Vec<Element> = perm.iter().map(|&i| els[i].clone()).collect();
                    let mut start = 0;
                    let sums: BTreeSet<Element> = sizes
                        .iter()
                        .map(|&s| {
                            start += s;
                            g.sum(labels[start - s..start].iter()).unwrap()
                        })
                        .collect();
                    let magic = verify_distance_magic(&g, sizes, &labels).is_some();
                    ensure(magic == (sums.len() == 1), format!("{g} {sizes:?} {perm:?}"))?;
                    labelings += 1;
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }
        }
    }
    Ok(format!(
        "K_1,3,3 over Z_7 has mu = 0; duality holds on {labelings} labelings"
    ))
}

fn antimagic_two_trees() -> Check {
    let groups: Vec<Group> = [7, 9, 13].into_iter().flat_map(enumerate_abelian_groups).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..50 {
        let g = &groups[i % groups.len()];
        let tree = random_k_tree(g.order(), 2, rng.gen()).ok_or("no 2-tree")?;
        let labels = antimagic_label_ktree(g, &tree, 2, BUDGET).map_err(|e| format!("{g}: {e}"))?;
        ensure(
            verify_antimagic(g, tree.graph(), &labels, &g.nonzero()),
            format!("{g}: not antimagic"),
        )?;
    }
    for m in [2usize, 3, 4] {
        let g = Group::new(&vec![2; m]).map_err(|e| e.to_string())?;
        let path = RootedTree::new(Graph::path(1 << m), 0).map_err(|e| e.to_string())?;
        match antimagic_label_ktree(&g, &path, 1, BUDGET) {
            Err(Error::ConstructionUnavailable(_)) => {}
            other => return Err(format!("(Z_2)^{m} path: {other:?}")),
        }
    }
    Ok("50 random 2-trees on Z_7, Z_9, Z_3xZ_3, Z_13 verified; (Z_2)^m paths: construction unavailable".into())
}

fn solver_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut cache: HashMap<Vec<Element>, BTreeSet<Vec<usize>>> = HashMap::new();
    let mut instances = 0;
    let mut feasible = 0;
    for n in 2..=12 {
        for g in enumerate_abelian_groups(n) {
            for _ in 0..200 {
                let domain: Vec<Element> = match rng.gen_range(0..4) {
                    0 => g.nonzero().into_iter().collect(),
                    1 => g.all().into_iter().collect(),
                    2 => g.non_involutions().into_iter().collect(),
                    _ => g.elements().filter(|_| rng.gen_bool(0.7)).collect(),
                };
                let mut sizes = Vec::new();
                let mut left = domain.len();
                while left > 0 {
                    let m = rng.gen_range(1..=left.min(5));
                    sizes.push(m);
                    left -= m;
                }
                let set = domain.iter().cloned().collect();
                let inst = RealizationInstance::zero_sum(&g, set, sizes.clone()).map_err(|e| e.to_string())?;
                let v = realize_partition(&inst, BUDGET);
                let profiles = cache
                    .entry(domain.clone())
                    .or_insert_with(|| zero_sum_block_profiles(&g, &domain));
                sizes.sort_unstable_by(|a, b| b.cmp(a));
                ensure(v.status != Status::Unknown, format!("{g} {sizes:?} unresolved"))?;
                ensure(
                    v.is_feasible() == profiles.contains(&sizes),
                    format!("{g} {sizes:?}: {}", v.status),
                )?;
                instances += 1;
                feasible += v.is_feasible() as usize;
            }
        }
    }
    Ok(format!("{instances} instances agree ({feasible} feasible)"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("2-ZSPP iff |I| in {0,3}, orders 3..16", zeng),
        ("3-ZSPP for (Z_2)^n, n = 2..4", elementary_two_groups),
        ("4-ZSPP for |I| > 1, order <= 16", four_zspp),
        ("mixed 2/3 sizes iff |I| in {3, |G*|}", mixed_sizes),
        ("one-involution partitions", one_involution),
        ("Skolem sequences and partitions", skolem),
        ("orthomorphisms from zero-sum triples", triple_construction),
        ("complete mappings iff |I| != 1, order <= 9", hall_paige),
        ("group irregularity strength formula", irregularity_strength),
        ("no Z_6-irregular labeling of order-6 graphs", z6_irregular),
        ("distance magic multipartite labelings", distance_magic),
        ("antimagic 2-trees", antimagic_two_trees),
        ("exact solver vs naive enumeration, order <= 12", solver_oracle),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
