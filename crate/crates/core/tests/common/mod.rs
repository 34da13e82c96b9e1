#![allow(dead_code)]

use std::collections::BTreeSet;

use zerosum::group::{Element, Group};

/// Every size multiset that some partition of `domain` into zero-sum
/// blocks realizes. Blocks are grown from the smallest unused element by
/// trying every subset of the remaining elements.
pub fn zero_sum_block_profiles(group: &Group, domain: &[Element]) -> BTreeSet<Vec<usize>> {
    fn rec(group: &Group, unused: &[Element], sizes: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if unused.is_empty() {
            let mut s = sizes.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(s);
            return;
        }
        let first = &unused[0];
        let rest = &unused[1..];
        for mask in 0u32..(1 << rest.len()) {
            let block: Vec<&Element> = std::iter::once(first)
                .chain(
                    rest.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, e)| e),
                )
                .collect();
            if !group.sum(block.iter().copied()).unwrap().is_zero() {
                continue;
            }
            let left: Vec<Element> = rest
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 0)
                .map(|(_, e)| e.clone())
                .collect();
            sizes.push(block.len());
            rec(group, &left, sizes, out);
            sizes.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(group, domain, &mut Vec::new(), &mut out);
    out
}

/// Brute force over all assignments of domain elements to labelled parts.
pub fn naive_feasible(group: &Group, domain: &[Element], sizes: &[usize], targets: &[Element]) -> bool {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        group: &Group,
        domain: &[Element],
        i: usize,
        sizes: &[usize],
        targets: &[Element],
        fill: &mut Vec<usize>,
        sums: &mut Vec<Element>,
        total: usize,
    ) -> bool {
        if i == domain.len() || fill.iter().sum::<usize>() == total {
            return fill.iter().zip(sizes).all(|(a, b)| a == b) && sums.iter().zip(targets).all(|(a, b)| a == b);
        }
        // Element i may also stay out when the parts need not cover the domain.
        if domain.len() - i > total - fill.iter().sum::<usize>()
            && rec(group, domain, i + 1, sizes, targets, fill, sums, total)
        {
            return true;
        }
        for k in 0..sizes.len() {
            if fill[k] < sizes[k] {
                let old = sums[k].clone();
                sums[k] = group.add(&old, &domain[i]).unwrap();
                fill[k] += 1;
                let ok = rec(group, domain, i + 1, sizes, targets, fill, sums, total);
                fill[k] -= 1;
                sums[k] = old;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let total = sizes.iter().sum();
    rec(
        group,
        domain,
        0,
        sizes,
        targets,
        &mut vec![0; sizes.len()],
        &mut vec![group.zero(); sizes.len()],
        total,
    )
}
