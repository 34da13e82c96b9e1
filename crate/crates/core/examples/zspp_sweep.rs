//! Checking the x-zero-sum partition property over a range of groups.

use zerosum::zspp::{groups_between, Outcome, ZsppChecker};
use zerosum::Budget;

fn main() -> zerosum::Result<()> {
    let checker = ZsppChecker::new(Budget::default());

    let report = checker.check_zeng(12);
    for v in &report.verdicts {
        println!(
            "{:<12} |I| = {}  2-ZSPP {}",
            v.group.to_string(),
            v.involutions,
            v.outcome
        );
    }
    println!("mismatches: {}", report.mismatches().len());

    for g in groups_between(4, 16).iter().filter(|g| g.involution_count() > 1) {
        let v = checker.check_3zspp_conjecture(g)?;
        let why = v
            .counterexample
            .as_ref()
            .map(|c| format!(" at {}", c.sizes))
            .unwrap_or_default();
        println!("{:<12} 3-ZSPP {}{why} ({})", g.to_string(), v.outcome, v.note);
    }

    let g = zerosum::Group::new(&[2, 2, 4])?;
    let v = checker.check_mixed_23(&g)?;
    if v.outcome == Outcome::Fails {
        println!("{g}: mixed sizes fail at {}", v.counterexample.unwrap().sizes);
    }
    Ok(())
}
