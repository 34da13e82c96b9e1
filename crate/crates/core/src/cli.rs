//! The `zerosum` command line.
//!
//! Exit codes: 0 when the question is answered positively (or every checked
//! theorem is confirmed), 1 for a definite negative (or a theorem mismatch),
//! 2 when a search ran out of budget, 3 for invalid input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::{
    Certificate, LabelingCertificate, LabelingTarget, OrthomorphismTables, PartitionCertificate, SkolemCertificate,
};
use crate::graph::{random_k_tree, Digraph, Graph, RootedTree};
use crate::group::{Element, Group};
use crate::labeling::{
    antimagic_label_ktree, digraph_realizable, distance_magic_multipartite, group_irregularity_strength,
    irregular_exists, irregularity_strength, predicted_group_irregularity, GroupIrregularity,
};
use crate::orthomorphism::{
    complete_mapping_exists, construct_from_triples, search_k_cycle_orthomorphism, CycleMap, TripleHypotheses,
};
use crate::partition::{heuristic_realize, realize_partition, DomainKind, RealizationInstance, Status};
use crate::search::{Budget, SearchVerdict, DEFAULT_BUDGET, EXACT_SEARCH_CEILING};
use crate::skolem::{
    characterize_r_skolem, cyclic_r_skolem_prediction, find_skolem_sequence, is_skolem_sequence, skolem_partition,
    SkolemDomain,
};
use crate::zspp::{groups_between, Outcome, PropertyVerdict, ZsppChecker};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zerosum",
    version,
    about = "Zero-sum subset partitions of finite Abelian groups"
)]
pub struct Cli {
    /// Search node budget per exact search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed for heuristics and random instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the certificate (or the sweep report) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, involutions, 2-part decomposition and element sum of a group.
    Group {
        /// Cyclic factor orders, e.g. `2 4` for Z_2 x Z_4.
        #[arg(required = true)]
        moduli: Vec<u32>,
    },
    /// Realize a size/target vector as a subset partition.
    Partition(PartitionArgs),
    /// Skolem sequences and Skolem partitions.
    Skolem(SkolemArgs),
    /// Check theorems and conjectures over ranges of groups, or re-verify a
    /// certificate file.
    Verify(VerifyArgs),
    /// Orthomorphisms and complete mappings.
    Ortho(OrthoArgs),
    /// Group labelings of graphs.
    #[command(subcommand)]
    Label(LabelCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    /// All nonzero elements.
    Star,
    /// Every element.
    All,
    /// Nonzero elements that are not involutions.
    R,
}

impl From<DomainArg> for DomainKind {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Star => DomainKind::Star,
            DomainArg::All => DomainKind::Whole,
            DomainArg::R => DomainKind::NonInvolutions,
        }
    }
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(required = true)]
    pub moduli: Vec<u32>,
    #[arg(long, value_enum, default_value_t = DomainArg::Star)]
    pub domain: DomainArg,
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Part targets, comma separated; coordinates of one element are joined
    /// with `:` (e.g. `1:0,0:3`). Defaults to all zero.
    #[arg(long, value_delimiter = ',')]
    pub targets: Vec<String>,
    /// Parts need not cover the domain.
    #[arg(long)]
    pub disjoint: bool,
    /// Use the seeded randomized search instead of the exact one.
    #[arg(long)]
    pub heuristic: bool,
}

#[derive(Debug, Args)]
pub struct SkolemArgs {
    /// Group for a Skolem partition.
    pub moduli: Vec<u32>,
    #[arg(long, value_enum, default_value_t = DomainArg::Star)]
    pub domain: DomainArg,
    /// Search for a Skolem sequence of this order instead.
    #[arg(long, conflicts_with = "moduli")]
    pub sequence: Option<usize>,
    /// Check whether the given comma separated sequence is a Skolem sequence.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["moduli", "sequence"])]
    pub check: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// 2-ZSPP holds iff the group has 0 or 3 involutions.
    #[arg(long)]
    pub zeng: bool,
    /// 3-ZSPP for groups with more than one involution.
    #[arg(long = "three-zspp")]
    pub three_zspp: bool,
    /// 4-ZSPP for groups with more than one involution.
    #[arg(long = "four-zspp")]
    pub four_zspp: bool,
    /// Mixed parts of size 2 and at least 3.
    #[arg(long)]
    pub mixed: bool,
    /// Partitions of the whole group into zero-sum parts of a divisor size.
    #[arg(long)]
    pub divisor: bool,
    /// Partitions of R for groups with exactly one involution.
    #[arg(long = "one-involution")]
    pub one_involution: bool,
    /// Complete mapping exists iff the group does not have exactly one involution.
    #[arg(long = "hall-paige")]
    pub hall_paige: bool,
    /// Skolem partitions of the nonzero elements of odd-order groups.
    #[arg(long = "skolem-star")]
    pub skolem_star: bool,
    /// Skolem partitions of R (cyclic groups of the given --orders, or all
    /// groups up to --max-order).
    #[arg(long = "skolem-r", alias = "skolem-R")]
    pub skolem_r: bool,
    /// Orthomorphisms built from zero-sum triples.
    #[arg(long)]
    pub triples: bool,
    /// Group irregularity strength of every connected graph up to
    /// --max-vertices against its closed form.
    #[arg(long)]
    pub sg: bool,
    /// Every check above.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 16)]
    pub max_order: usize,
    /// Cyclic group orders for --skolem-r.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub max_vertices: usize,
    /// Re-verify a certificate file instead of running checks.
    #[arg(long, conflicts_with = "all")]
    pub certificate: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrthoArgs {
    #[arg(required = true)]
    pub moduli: Vec<u32>,
    /// Build the orthomorphism from a partition into zero-sum triples.
    #[arg(long)]
    pub construct: bool,
    /// Search for an orthomorphism whose selected map is a product of k-cycles.
    #[arg(long, conflicts_with = "construct")]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = WhichArg::Theta)]
    pub which: WhichArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Phi,
    Theta,
}

#[derive(Debug, Subcommand)]
pub enum LabelCommand {
    /// Antimagic labeling of a rooted k-tree with |G| vertices.
    Antimagic {
        #[arg(required = true)]
        moduli: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Tree as a JSON file or a family spec; a random k-tree when omitted.
        #[arg(long)]
        tree: Option<String>,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Irregular labeling of a graph by a given group.
    Irregular {
        #[arg(required = true)]
        moduli: Vec<u32>,
        /// JSON file `{"n":..,"edges":[[u,v],..]}` or `path:N`, `cycle:N`,
        /// `complete:N`, `star:L`, `multipartite:A,B,..`.
        #[arg(long)]
        graph: String,
    },
    /// Group irregularity strength of a graph.
    Sg {
        #[arg(long)]
        graph: String,
        /// Largest group order tried.
        #[arg(long, default_value_t = 32)]
        k_max: usize,
    },
    /// Irregular arc labeling of a digraph.
    Digraph {
        #[arg(required = true)]
        moduli: Vec<u32>,
        /// JSON file `{"n":..,"arcs":[[u,v],..]}`.
        #[arg(long, conflicts_with = "components")]
        digraph: Option<String>,
        /// Weak component sizes of a random digraph drawn from --seed.
        #[arg(long, value_delimiter = ',')]
        components: Vec<usize>,
    },
    /// Distance magic labeling of a complete multipartite graph.
    DistanceMagic {
        #[arg(required = true)]
        moduli: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

/// What a command produced.
struct Output {
    json: Value,
    table: String,
    code: i32,
    /// Written to `--out` when given.
    artifact: Option<String>,
}

/// Parses `std::env::args`, runs, prints, and returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return code;
        }
    };
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return EXIT_USAGE;
        }
        // Fails only if a pool was already installed, which then serves.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match execute(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json output") + "\n",
                Format::Table => out.table.clone(),
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), text.as_bytes());
            if let (Some(path), Some(artifact)) = (&cli.out, &out.artifact) {
                if let Err(e) = std::fs::write(path, artifact) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<Output> {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Group { moduli } => cmd_group(moduli),
        Command::Partition(a) => cmd_partition(a, budget, cli.seed),
        Command::Skolem(a) => cmd_skolem(a, budget),
        Command::Verify(a) => cmd_verify(a, budget),
        Command::Ortho(a) => cmd_ortho(a, budget),
        Command::Label(l) => cmd_label(l, budget, cli.seed),
    }
}

fn group_of(moduli: &[u32]) -> anyhow::Result<Group> {
    Ok(Group::new(moduli)?)
}

fn parse_element(group: &Group, text: &str) -> anyhow::Result<Element> {
    let coords = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(':')
        .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad element `{text}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(group.element_reduced(&coords)?)
}

fn show(items: &[Element]) -> String {
    let s: Vec<String> = items.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", s.join(", "))
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Feasible => EXIT_YES,
        Status::Infeasible | Status::InfeasibleNecessary => EXIT_NO,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn verdict_code<T>(v: &SearchVerdict<T>) -> i32 {
    match v {
        SearchVerdict::Found(_) => EXIT_YES,
        SearchVerdict::Exhausted => EXIT_NO,
        SearchVerdict::BudgetExceeded => EXIT_UNKNOWN,
    }
}

fn cmd_group(moduli: &[u32]) -> anyhow::Result<Output> {
    let g = group_of(moduli)?;
    let inv: Vec<Element> = g.involutions().into_iter().collect();
    let sylow = g.sylow2_decomposition();
    let sum = g.sum_all_elements();
    let json = json!({
        "group": g.to_string(),
        "moduli": g.moduli(),
        "order": g.order(),
        "rank": g.rank(),
        "involution_count": inv.len(),
        "involutions": inv,
        "two_part": sylow.l().to_string(),
        "odd_part": sylow.h().to_string(),
        "element_sum": sum,
    });
    let mut t = String::new();
    writeln!(t, "group       {g}")?;
    writeln!(t, "order       {}", g.order())?;
    writeln!(t, "|I|         {}", inv.len())?;
    writeln!(t, "involutions {}", show(&inv))?;
    writeln!(t, "2-part      {}", sylow.l())?;
    writeln!(t, "odd part    {}", sylow.h())?;
    writeln!(t, "sum         {sum}")?;
    Ok(Output {
        json,
        table: t,
        code: EXIT_YES,
        artifact: None,
    })
}

fn cmd_partition(a: &PartitionArgs, budget: Budget, seed: u64) -> anyhow::Result<Output> {
    let g = group_of(&a.moduli)?;
    let domain = DomainKind::from(a.domain).resolve(&g);
    let targets = if a.targets.is_empty() {
        vec![g.zero(); a.sizes.len()]
    } else {
        a.targets
            .iter()
            .map(|t| parse_element(&g, t))
            .collect::<anyhow::Result<_>>()?
    };
    let inst = if a.disjoint {
        RealizationInstance::disjoint(&g, domain, a.sizes.clone(), targets)?
    } else {
        RealizationInstance::new(&g, domain, a.sizes.clone(), targets)?
    };
    let v = if a.heuristic || g.order() > EXACT_SEARCH_CEILING {
        heuristic_realize(&inst, seed)
    } else {
        realize_partition(&inst, budget)
    };
    let cert = PartitionCertificate::new(&inst, &v, seed);
    let mut t = String::new();
    writeln!(t, "group   {g}")?;
    writeln!(
        t,
        "domain  {} ({} elements)",
        DomainKind::from(a.domain).name(),
        inst.domain().len()
    )?;
    writeln!(t, "sizes   {:?}", a.sizes)?;
    writeln!(t, "targets {}", show(inst.targets()))?;
    writeln!(t, "status  {}", v.status)?;
    if let Some(w) = &v.witness {
        for (i, p) in w.parts.iter().enumerate() {
            writeln!(t, "  A{} = {}", i + 1, show(p))?;
        }
    } else {
        writeln!(t, "reason  {}", v.reason)?;
    }
    let cert = Certificate::Partition(cert);
    Ok(Output {
        json: serde_json::to_value(&cert)?,
        table: t,
        code: status_code(v.status),
        artifact: Some(cert.to_json()),
    })
}

fn cmd_skolem(a: &SkolemArgs, budget: Budget) -> anyhow::Result<Output> {
    if let Some(seq) = &a.check {
        let ok = is_skolem_sequence(seq)?;
        return Ok(Output {
            json: json!({ "sequence": seq, "skolem": ok }),
            table: format!("{} {}\n", if ok { "valid" } else { "invalid" }, join(seq)),
            code: if ok { EXIT_YES } else { EXIT_NO },
            artifact: None,
        });
    }
    if let Some(n) = a.sequence {
        let v = find_skolem_sequence(n, budget);
        let entries = v.found().map(|s| s.entries().to_vec());
        let table = match &entries {
            Some(e) => format!("order {n}: {}\n", join(e)),
            None => format!("order {n}: {}\n", v.label()),
        };
        return Ok(Output {
            json: json!({ "order": n, "result": v.label(), "sequence": entries }),
            table,
            code: verdict_code(&v),
            artifact: None,
        });
    }
    if a.moduli.is_empty() {
        bail!("give group moduli, --sequence N, or --check SEQ");
    }
    let g = group_of(&a.moduli)?;
    let (domain, set) = match a.domain {
        DomainArg::Star => (SkolemDomain::Star, g.nonzero()),
        DomainArg::R => (SkolemDomain::NonInvolutions, g.non_involutions()),
        DomainArg::All => bail!("a Skolem partition needs --domain star or r"),
    };
    let v = skolem_partition(&g, &domain, budget)?;
    let cert = Certificate::Skolem(SkolemCertificate::new(&g, &set, v.status, v.witness.as_ref()));
    let mut t = String::new();
    writeln!(t, "group  {g}")?;
    writeln!(
        t,
        "domain {} ({} elements)",
        DomainKind::from(a.domain).name(),
        set.len()
    )?;
    writeln!(t, "status {}", v.status)?;
    match &v.witness {
        Some(w) => {
            for s in &w.six_parts {
                writeln!(t, "  six c={} d={}: {}", s.c, s.d, show(&s.members))?;
            }
            for p in &w.two_parts {
                writeln!(t, "  pair {}", show(p))?;
            }
        }
        None => writeln!(t, "reason {}", v.reason)?,
    }
    Ok(Output {
        json: serde_json::to_value(&cert)?,
        table: t,
        code: status_code(v.status),
        artifact: Some(cert.to_json()),
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// One line of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub subject: String,
    pub involutions: Option<usize>,
    pub outcome: Outcome,
    /// What a proven result predicts; `None` for open cases.
    pub expected: Option<bool>,
    pub detail: String,
}

impl CheckRow {
    pub fn is_mismatch(&self) -> bool {
        matches!(
            (self.expected, self.outcome),
            (Some(true), Outcome::Fails) | (Some(false), Outcome::Holds)
        )
    }

    /// Unresolved where a proven result applies.
    pub fn is_unknown(&self) -> bool {
        self.expected.is_some() && self.outcome == Outcome::Unknown
    }

    pub fn mark(&self) -> &'static str {
        if self.is_mismatch() {
            "MISMATCH"
        } else if self.expected.is_none() {
            if self.outcome == Outcome::Fails {
                "open-fails"
            } else {
                "open"
            }
        } else if self.outcome == Outcome::Unknown {
            "unknown"
        } else {
            "ok"
        }
    }

    fn from_verdict(v: &PropertyVerdict) -> Self {
        let mut detail = format!("{}/{} realized", v.witness_count, v.instances);
        if let Some(c) = &v.counterexample {
            write!(detail, "; {} is {}", c.sizes, c.status).unwrap();
        }
        if !v.note.is_empty() {
            write!(detail, "; {}", v.note).unwrap();
        }
        CheckRow {
            check: v.property.clone(),
            subject: v.group.to_string(),
            involutions: Some(v.involutions),
            outcome: v.outcome,
            expected: v.expected,
            detail,
        }
    }
}

fn outcome_of<T>(v: &SearchVerdict<T>) -> Outcome {
    match v {
        SearchVerdict::Found(_) => Outcome::Holds,
        SearchVerdict::Exhausted => Outcome::Fails,
        SearchVerdict::BudgetExceeded => Outcome::Unknown,
    }
}

fn status_outcome(s: Status) -> Outcome {
    match s {
        Status::Feasible => Outcome::Holds,
        Status::Unknown => Outcome::Unknown,
        _ => Outcome::Fails,
    }
}

/// Runs the selected sweeps and returns their rows in a fixed order.
pub fn verify_rows(a: &VerifyArgs, budget: Budget) -> anyhow::Result<Vec<CheckRow>> {
    let all = a.all;
    let checker = ZsppChecker::new(budget);
    let groups = groups_between(2, a.max_order);
    let many_inv: Vec<&Group> = groups.iter().filter(|g| g.involution_count() > 1).collect();
    let mut rows = Vec::new();
    if all || a.zeng {
        rows.extend(
            checker
                .check_zeng(a.max_order)
                .verdicts
                .iter()
                .map(CheckRow::from_verdict),
        );
    }
    if all || a.three_zspp {
        for g in &many_inv {
            rows.push(CheckRow::from_verdict(&checker.check_3zspp_conjecture(g)?));
        }
    }
    if all || a.four_zspp {
        for g in &many_inv {
            rows.push(CheckRow::from_verdict(&checker.check_4zspp(g)?));
        }
    }
    if all || a.mixed {
        for g in &many_inv {
            rows.push(CheckRow::from_verdict(&checker.check_mixed_23(g)?));
        }
    }
    if all || a.divisor {
        for g in &many_inv {
            for m in (3..=g.order()).filter(|m| g.order() % m == 0) {
                rows.push(CheckRow::from_verdict(&checker.check_divisor_partition(g, m)?));
            }
        }
    }
    if all || a.one_involution {
        for g in groups.iter().filter(|g| g.involution_count() == 1) {
            let r = checker.check_one_involution(g)?;
            if let Some(c) = &r.cyclic_2_3 {
                rows.push(CheckRow::from_verdict(c));
            }
            rows.push(CheckRow::from_verdict(&r.parts_4));
            rows.push(CheckRow::from_verdict(&r.conjecture));
        }
    }
    if all || a.hall_paige {
        for g in groups
            .iter()
            .filter(|g| g.order() <= a.max_order.min(EXACT_SEARCH_CEILING))
        {
            let v = complete_mapping_exists(g, budget)?;
            let detail = match v.found() {
                Some(c) => format!("theta cycle type {}", c.theta_cycles),
                None => v.label().to_string(),
            };
            rows.push(CheckRow {
                check: "complete-mapping".into(),
                subject: g.to_string(),
                involutions: Some(g.involution_count()),
                outcome: outcome_of(&v),
                expected: Some(g.involution_count() != 1),
                detail,
            });
        }
    }
    if all || a.skolem_star {
        for g in groups.iter().filter(|g| g.involution_count() == 0) {
            let v = skolem_partition(g, &SkolemDomain::Star, budget)?;
            rows.push(CheckRow {
                check: "skolem-star".into(),
                subject: g.to_string(),
                involutions: Some(0),
                outcome: status_outcome(v.status),
                expected: Some(true),
                detail: v.witness.map_or(v.reason, |w| {
                    format!("{} six-subsets, {} pairs", w.six_parts.len(), w.two_parts.len())
                }),
            });
        }
    }
    if all || a.skolem_r {
        if a.orders.is_empty() {
            for row in characterize_r_skolem(a.max_order, budget)? {
                let expected = if row.known_family {
                    Some(true)
                } else {
                    row.cyclic_prediction
                };
                rows.push(CheckRow {
                    check: "skolem-r".into(),
                    subject: row.group.to_string(),
                    involutions: Some(row.involutions),
                    outcome: status_outcome(row.status),
                    expected,
                    detail: format!("|R| = {}", row.r_size),
                });
            }
        } else {
            for &m in &a.orders {
                let g = Group::cyclic(u32::try_from(m).map_err(|_| anyhow!("order {m} too large"))?)?;
                let v = skolem_partition(&g, &SkolemDomain::NonInvolutions, budget)?;
                rows.push(CheckRow {
                    check: "skolem-r".into(),
                    subject: g.to_string(),
                    involutions: Some(g.involution_count()),
                    outcome: status_outcome(v.status),
                    expected: cyclic_r_skolem_prediction(m),
                    detail: format!("|R| = {}", g.non_involutions().len()),
                });
            }
        }
    }
    if all || a.triples {
        for g in groups.iter().filter(|g| TripleHypotheses::of(g).all_hold()) {
            let (outcome, detail) = match construct_from_triples(g, budget) {
                Ok(c) => {
                    let want = 1 + (g.order() - 1) / 3;
                    let ok = c.certificate.theta_cycles.count(3) == (g.order() - 1) / 3
                        && c.certificate.theta_cycles.count(1) == 1
                        && c.certificate.theta_cycles.lengths().len() == want;
                    (
                        if ok { Outcome::Holds } else { Outcome::Fails },
                        format!("theta {}; phi {}", c.certificate.theta_cycles, c.certificate.phi_cycles),
                    )
                }
                Err(crate::Error::ConstructionUnavailable(r)) => (Outcome::Unknown, r),
                Err(e) => return Err(e.into()),
            };
            rows.push(CheckRow {
                check: "triple-orthomorphism".into(),
                subject: g.to_string(),
                involutions: Some(g.involution_count()),
                outcome,
                expected: Some(true),
                detail,
            });
        }
    }
    if all || a.sg {
        for n in 3..=a.max_vertices.min(6) {
            for graph in crate::graph::connected_graphs(n) {
                let predicted = predicted_group_irregularity(&graph);
                let got = group_irregularity_strength(&graph, n + 3, budget);
                let outcome = match (&got, predicted) {
                    (GroupIrregularity::Value(v), Some(p)) if *v == p => Outcome::Holds,
                    (GroupIrregularity::Unknown, _) => Outcome::Unknown,
                    _ => Outcome::Fails,
                };
                rows.push(CheckRow {
                    check: "group-irregularity".into(),
                    subject: format!("{:?}", graph.edges()),
                    involutions: None,
                    outcome,
                    expected: Some(true),
                    detail: format!("n = {n}, s_g = {}, predicted {:?}", sg_text(&got), predicted),
                });
            }
        }
    }
    Ok(rows)
}

fn sg_text(g: &GroupIrregularity) -> String {
    match g {
        GroupIrregularity::Value(v) => v.to_string(),
        GroupIrregularity::Exceeded => "exceeded".into(),
        GroupIrregularity::NotCovered => "undefined".into(),
        GroupIrregularity::Unknown => "unknown".into(),
    }
}

fn cmd_verify(a: &VerifyArgs, budget: Budget) -> anyhow::Result<Output> {
    if let Some(path) = &a.certificate {
        return verify_certificate(path, budget);
    }
    let any = a.all
        || a.zeng
        || a.three_zspp
        || a.four_zspp
        || a.mixed
        || a.divisor
        || a.one_involution
        || a.hall_paige
        || a.skolem_star
        || a.skolem_r
        || a.triples
        || a.sg;
    if !any {
        bail!("choose at least one check (see `zerosum verify --help`)");
    }
    let rows = verify_rows(a, budget)?;
    let mismatches = rows.iter().filter(|r| r.is_mismatch()).count();
    let unknowns = rows.iter().filter(|r| r.is_unknown()).count();
    let open_fails = rows.iter().filter(|r| r.mark() == "open-fails").count();
    let code = if mismatches > 0 {
        EXIT_NO
    } else if unknowns > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_YES
    };
    let mut t = String::new();
    let w = rows.iter().map(|r| r.subject.len()).max().unwrap_or(5).max(5);
    writeln!(
        t,
        "{:<32} {:<w$} {:>3} {:<8} {:<10} detail",
        "check", "group", "|I|", "outcome", "status"
    )?;
    for r in &rows {
        let inv = r.involutions.map_or("-".to_string(), |i| i.to_string());
        writeln!(
            t,
            "{:<32} {:<w$} {:>3} {:<8} {:<10} {}",
            r.check,
            r.subject,
            inv,
            r.outcome.to_string(),
            r.mark(),
            r.detail
        )?;
    }
    writeln!(
        t,
        "{} rows, {mismatches} mismatches, {unknowns} unknown, {open_fails} open cases failing",
        rows.len()
    )?;
    let lines: String = rows
        .iter()
        .map(|r| serde_json::to_string(r).expect("rows serialize") + "\n")
        .collect();
    Ok(Output {
        json: json!({
            "rows": rows,
            "mismatches": mismatches,
            "unknowns": unknowns,
            "open_failures": open_fails,
        }),
        table: t,
        code,
        artifact: Some(lines),
    })
}

fn verify_certificate(path: &Path, budget: Budget) -> anyhow::Result<Output> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let cert = Certificate::from_json(&text)?;
    let ok = cert.verify(budget)?;
    let kind = match &cert {
        Certificate::Partition(_) => "partition",
        Certificate::Skolem(_) => "skolem",
        Certificate::Orthomorphism(_) => "orthomorphism",
        Certificate::Labeling(_) => "labeling",
    };
    Ok(Output {
        json: json!({ "certificate": kind, "valid": ok }),
        table: format!("{kind} certificate {}\n", if ok { "valid" } else { "INVALID" }),
        code: if ok { EXIT_YES } else { EXIT_NO },
        artifact: None,
    })
}

fn cmd_ortho(a: &OrthoArgs, budget: Budget) -> anyhow::Result<Output> {
    let g = group_of(&a.moduli)?;
    let mut t = String::new();
    writeln!(t, "group {g}")?;
    let (cert, extra) = if a.construct {
        let c = construct_from_triples(&g, budget)?;
        writeln!(t, "triples")?;
        for tr in &c.triples {
            writeln!(t, "  {}", show(tr))?;
        }
        let h = &c.hypotheses;
        if h.forms_disagree() {
            writeln!(
                t,
                "note  hypotheses hold: {}, order 4 mod 24: {}",
                h.all_hold(),
                h.order_4_mod_24
            )?;
        }
        let extra = json!({ "triples": c.triples, "hypotheses": c.hypotheses, "phi_is_3_cycles": c.phi_is_3_cycles });
        (SearchVerdict::Found(c.certificate), extra)
    } else if let Some(k) = a.k {
        let which = match a.which {
            WhichArg::Phi => CycleMap::Phi,
            WhichArg::Theta => CycleMap::Theta,
        };
        (
            search_k_cycle_orthomorphism(&g, k, which, budget)?,
            json!({ "k": k, "which": which }),
        )
    } else {
        (complete_mapping_exists(&g, budget)?, json!({}))
    };
    let code = verdict_code(&cert);
    match cert.found() {
        Some(c) => {
            writeln!(t, "phi   {}", c.phi_cycles)?;
            writeln!(t, "theta {}", c.theta_cycles)?;
            for (x, (p, th)) in g.elements().zip(c.phi.images().iter().zip(c.theta.images())) {
                writeln!(t, "  {x} -> phi {p}, theta {th}")?;
            }
        }
        None => writeln!(t, "result {}", cert.label())?,
    }
    let tables = cert.found().map(OrthomorphismTables::new);
    let artifact = tables.clone().map(|o| Certificate::Orthomorphism(o).to_json());
    Ok(Output {
        json: json!({ "group": g.to_string(), "result": cert.label(), "certificate": tables, "details": extra }),
        table: t,
        code,
        artifact,
    })
}

/// Reads a graph from a JSON file or a family spec such as `path:4`.
pub fn load_graph(spec: &str) -> anyhow::Result<Graph> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec)?;
        return serde_json::from_str(&text).with_context(|| format!("bad graph file {spec}"));
    }
    let (family, arg) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("`{spec}` is neither a file nor a family spec like path:4"))?;
    let nums = arg
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .with_context(|| format!("bad graph spec `{spec}`"))?;
    let one = || -> anyhow::Result<usize> {
        match nums.as_slice() {
            [n] => Ok(*n),
            _ => bail!("`{family}` takes one number"),
        }
    };
    Ok(match family {
        "path" => Graph::path(one()?),
        "cycle" => Graph::cycle(one()?),
        "complete" => Graph::complete(one()?),
        "star" => Graph::star(one()?),
        "multipartite" => Graph::complete_multipartite(&nums),
        _ => bail!("unknown graph family `{family}`"),
    })
}

fn cmd_label(l: &LabelCommand, budget: Budget, seed: u64) -> anyhow::Result<Output> {
    match l {
        LabelCommand::Antimagic { moduli, k, tree, root } => {
            let g = group_of(moduli)?;
            let tree = match tree {
                Some(spec) => RootedTree::new(load_graph(spec)?, *root)?,
                None => random_k_tree(g.order(), *k, seed)
                    .ok_or_else(|| anyhow!("no {k}-tree has {} vertices", g.order()))?,
            };
            let labels = antimagic_label_ktree(&g, &tree, *k, budget)?;
            let target = LabelingTarget::Antimagic {
                graph: tree.graph().clone(),
                root: Some(tree.root()),
            };
            labeling_output(&g, target, labels, seed, EXIT_YES)
        }
        LabelCommand::Irregular { moduli, graph } => {
            let g = group_of(moduli)?;
            let graph = load_graph(graph)?;
            let v = irregular_exists(&g, &graph, budget);
            let code = verdict_code(&v);
            match v.into_found() {
                Some(labels) => labeling_output(&g, LabelingTarget::Irregular { graph }, labels, seed, code),
                None => Ok(no_labeling(&g, code)),
            }
        }
        LabelCommand::Sg { graph, k_max } => {
            let graph = load_graph(graph)?;
            let got = group_irregularity_strength(&graph, *k_max, budget);
            let predicted = if graph.is_connected() {
                predicted_group_irregularity(&graph)
            } else {
                None
            };
            let s = irregularity_strength(&graph, *k_max, budget);
            let code = match got {
                GroupIrregularity::Value(_) => EXIT_YES,
                GroupIrregularity::Unknown => EXIT_UNKNOWN,
                _ => EXIT_NO,
            };
            let mut t = String::new();
            writeln!(t, "vertices  {}", graph.n())?;
            writeln!(t, "edges     {}", graph.edge_count())?;
            writeln!(t, "s_g       {}", sg_text(&got))?;
            if let Some(p) = predicted {
                writeln!(t, "formula   {p}")?;
            }
            writeln!(t, "s         {}", s.map_or("none".into(), |s| s.to_string()))?;
            Ok(Output {
                json: json!({ "n": graph.n(), "edges": graph.edge_count(), "s_g": got, "formula": predicted, "s": s }),
                table: t,
                code,
                artifact: None,
            })
        }
        LabelCommand::Digraph {
            moduli,
            digraph,
            components,
        } => {
            let g = group_of(moduli)?;
            let dg = match digraph {
                Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)
                    .with_context(|| format!("bad digraph file {path}"))?,
                None if !components.is_empty() => Digraph::random_with_components(components, 0.3, seed),
                None => bail!("give --digraph FILE or --components SIZES"),
            };
            let v = digraph_realizable(&g, &dg, budget)?;
            let code = verdict_code(&v);
            match v.into_found() {
                Some(labels) => {
                    labeling_output(&g, LabelingTarget::DigraphIrregular { digraph: dg }, labels, seed, code)
                }
                None => Ok(no_labeling(&g, code)),
            }
        }
        LabelCommand::DistanceMagic { moduli, sizes } => {
            let g = group_of(moduli)?;
            let d = distance_magic_multipartite(&g, sizes, budget)?;
            let code = status_code(d.status);
            match d.labels {
                Some(labels) => {
                    let mut out = labeling_output(
                        &g,
                        LabelingTarget::DistanceMagic { sizes: sizes.clone() },
                        labels,
                        seed,
                        code,
                    )?;
                    let nu = d.class_sum.expect("class sum accompanies labels");
                    let mu = d.magic_constant.expect("magic constant accompanies labels");
                    write!(out.table, "class sum {nu}\nmagic constant {mu}\n")?;
                    out.json["class_sum"] = serde_json::to_value(&nu)?;
                    out.json["magic_constant"] = serde_json::to_value(&mu)?;
                    Ok(out)
                }
                None => Ok(no_labeling(&g, code)),
            }
        }
    }
}

fn no_labeling(g: &Group, code: i32) -> Output {
    let result = if code == EXIT_UNKNOWN { "unknown" } else { "none" };
    Output {
        json: json!({ "group": g.to_string(), "result": result }),
        table: format!("group  {g}\nresult {result}\n"),
        code,
        artifact: None,
    }
}

fn labeling_output(
    g: &Group,
    target: LabelingTarget,
    labels: Vec<Element>,
    seed: u64,
    code: i32,
) -> anyhow::Result<Output> {
    let cert = LabelingCertificate::new(g, target, &labels, seed)?;
    let mut t = String::new();
    writeln!(t, "group  {g}")?;
    writeln!(t, "labels {}", join(&labels))?;
    if !matches!(cert.target, LabelingTarget::DistanceMagic { .. }) {
        let weights: Vec<String> = cert
            .weights
            .iter()
            .map(|c| g.element(c).map(|e| e.to_string()))
            .collect::<crate::Result<_>>()?;
        writeln!(t, "weights {}", weights.join(" "))?;
    }
    let cert = Certificate::Labeling(cert);
    Ok(Output {
        json: serde_json::to_value(&cert)?,
        table: t,
        code,
        artifact: Some(cert.to_json()),
    })
}
