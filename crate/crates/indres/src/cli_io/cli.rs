use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use super::suite::{run_suite, Suite};
use super::{emit, load_finite_group, load_group_data, parse_props, to_json, ErrorRecord, HMode, JobSpec, SubgroupMode};
use crate::blocks::{blocks, ModularReduction};
use crate::chartab::brute::{brute_class_sizes, brute_table};
use crate::chartab::{character_table, BigIntString, CharTable, TableJson};
use crate::classfun::GroupData;
use crate::correspondence::{brute_induced_lattice, induced_lattice, QuotientsJson};
use crate::error::{Error, Result};
use crate::groupcore::{intersection_set_maxima, normalizer, sylow, Budget};
use crate::lattice::IntLattice;

#[derive(Parser, Debug)]
#[command(name = "indres", version, about = "Induced-character lattices and local-global properties of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of a group, as JSON
    Table {
        /// group file or built-in name (S4, A5, M11, SL2(13), ...)
        group: String,
        /// match this table to the group's classes instead of computing one
        #[arg(long)]
        check: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// p-blocks with defects and defect groups
    Blocks {
        group: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        table: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check properties; exit 0 when all hold, 1 when one fails
    Verify(Job),
    /// The quotients Q1 and Q2
    Quotients(Job),
    /// Recompute the reference rows and compare
    PaperTable {
        #[arg(long, default_value = "small")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Independent brute-force computations for cross-checking
    Oracle {
        #[command(subcommand)]
        kind: OracleKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleKind {
    /// Induced lattice from every subgroup up to conjugacy, against the elementary one
    SubgroupLattice {
        group: String,
        #[arg(short, long)]
        p: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Class sizes by conjugating every element by every element
    BruteClasses {
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Character table from counted class multiplication coefficients
    BruteTable {
        group: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// output file (default: stdout)
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub budget_order: Option<u64>,
    #[arg(long)]
    pub budget_classes: Option<usize>,
}

impl Common {
    fn budget(&self, default_order: u64) -> Budget {
        let d = Budget::default();
        Budget {
            max_order: self.budget_order.unwrap_or(default_order),
            max_classes: self.budget_classes.unwrap_or(d.max_classes),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Job {
    group: String,
    #[arg(short, long)]
    p: u64,
    /// P is a Sylow p-subgroup (the default)
    #[arg(long, conflicts_with_all = ["p_subgroup", "defect_block"])]
    sylow: bool,
    /// P given by generators in a group file
    #[arg(long)]
    p_subgroup: Option<PathBuf>,
    /// P is a defect group of this block
    #[arg(long, conflicts_with = "p_subgroup")]
    defect_block: Option<usize>,
    /// "normalizer" (default) or a group file with generators of H
    #[arg(long = "h", default_value = "normalizer")]
    h: String,
    /// comma list from irc, wirc, wircstar, pres, pind, in, g, all
    #[arg(long, default_value = "irc")]
    props: String,
    #[arg(long)]
    g_table: Option<PathBuf>,
    #[arg(long)]
    h_table: Option<PathBuf>,
    /// virtual character μ of G × H for property g
    #[arg(long)]
    witness: Option<PathBuf>,
    /// block of G for property g
    #[arg(long)]
    block: Option<usize>,
    #[command(flatten)]
    common: Common,
}

impl Job {
    fn spec(&self) -> Result<JobSpec> {
        let mut j = JobSpec::new(self.group.clone(), self.p);
        j.subgroup = match (&self.p_subgroup, self.defect_block) {
            (Some(path), _) => SubgroupMode::Explicit(path.clone()),
            (None, Some(b)) => SubgroupMode::DefectGroupOfBlock(b),
            (None, None) => SubgroupMode::Sylow,
        };
        j.h = if self.h == "normalizer" { HMode::Normalizer } else { HMode::Explicit(self.h.clone().into()) };
        j.props = parse_props(&self.props)?;
        j.g_table = self.g_table.clone();
        j.h_table = self.h_table.clone();
        j.witness = self.witness.clone();
        j.block = self.block;
        j.output = self.common.output.clone();
        let b = self.common.budget(Budget::default().max_order);
        j.budget_order = b.max_order;
        j.budget_classes = b.max_classes;
        j.validate()?;
        Ok(j)
    }
}

/// Runs a parsed command line and returns the exit code. Errors are printed
/// as an error record (to the output file when one was given, else stdout)
/// and give exit code 2.
pub fn run(cli: Cli) -> i32 {
    let output = match &cli.command {
        Command::Table { common, .. }
        | Command::Blocks { common, .. }
        | Command::PaperTable { common, .. }
        | Command::Verify(Job { common, .. })
        | Command::Quotients(Job { common, .. }) => common.output.clone(),
        Command::Oracle { kind } => match kind {
            OracleKind::SubgroupLattice { common, .. }
            | OracleKind::BruteClasses { common, .. }
            | OracleKind::BruteTable { common, .. } => common.output.clone(),
        },
    };
    match dispatch(cli.command) {
        Ok(ok) => {
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let rec = to_json(&ErrorRecord::from(&e)).unwrap_or_default();
            let _ = emit(&rec, output.as_deref());
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Table { group, check, common } => {
            let budget = common.budget(Budget::default().max_order);
            let g = load_finite_group(&group, &budget)?;
            let t = match check {
                Some(path) => GroupData::with_table(g, &crate::chartab::load_table(path)?)?.table,
                None => character_table(&g, &budget)?,
            };
            eprintln!("{group}: order {}, {} classes, degrees {:?}", t.order(), t.num_classes(), t.degrees());
            emit(&to_json(&t.to_json())?, common.output.as_deref())?;
            Ok(true)
        }
        Command::Blocks { group, p, table, common } => {
            let budget = common.budget(Budget::default().max_order);
            let g = load_group_data(&group, table.as_deref(), &budget)?;
            let red = ModularReduction::for_tables(p, &[&g.table])?;
            let out = BlocksJson {
                group: super::group_label(&group),
                p,
                blocks: blocks(&g, p, &red)?
                    .iter()
                    .map(|b| BlockJson {
                        id: b.id,
                        chars: b.chars.clone(),
                        degrees: b.chars.iter().map(|&i| g.table.degrees()[i]).collect(),
                        defect: b.defect,
                        defect_group_order: b.defect_group.order(),
                        defect_group: b.defect_group.describe(&g.group),
                    })
                    .collect(),
            };
            for b in &out.blocks {
                eprintln!("block {} defect {} degrees {:?}", b.id, b.defect, b.degrees);
            }
            emit(&to_json(&out)?, common.output.as_deref())?;
            Ok(true)
        }
        Command::Verify(job) => {
            let spec = job.spec()?;
            let report = spec.verify()?;
            eprintln!("{}", report.table_row());
            for v in &report.verdicts {
                eprintln!("{:>9} {:?}: {}", v.property, v.level, if v.holds { "holds" } else { "fails" });
            }
            emit(&to_json(&report)?, spec.output.as_deref())?;
            Ok(report.all_hold)
        }
        Command::Quotients(job) => {
            let spec = job.spec()?;
            let inst = spec.instance()?;
            let q = QuotientsJson::from(&inst.quotients()?);
            eprintln!("Q1 = {}, Q2 = {}", q.q1_text, q.q2_text);
            emit(&to_json(&q)?, spec.output.as_deref())?;
            Ok(true)
        }
        Command::PaperTable { suite, common } => {
            let suite: Suite = suite.parse()?;
            let outcomes = run_suite(suite, &common.budget(Budget::default().max_order))?;
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&o.line());
                text.push('\n');
            }
            let matched = outcomes.iter().filter(|o| o.matches).count();
            text.push_str(&format!("{matched} of {} rows match\n", outcomes.len()));
            emit(&text, common.output.as_deref())?;
            Ok(matched == outcomes.len())
        }
        Command::Oracle { kind } => oracle(kind),
    }
}

#[derive(Serialize)]
struct BlockJson {
    id: usize,
    chars: Vec<usize>,
    degrees: Vec<u64>,
    defect: u32,
    defect_group_order: u64,
    defect_group: String,
}

#[derive(Serialize)]
struct BlocksJson {
    group: String,
    p: u64,
    blocks: Vec<BlockJson>,
}

#[derive(Serialize)]
struct LatticeOracle {
    group: String,
    p: u64,
    elementary_hnf: Vec<Vec<BigIntString>>,
    brute_hnf: Vec<Vec<BigIntString>>,
    identical: bool,
}

#[derive(Serialize)]
struct ClassOracle {
    group: String,
    brute_class_sizes: Vec<usize>,
    class_sizes: Vec<usize>,
    identical: bool,
}

#[derive(Serialize)]
struct TableOracle {
    group: String,
    degrees: Vec<u64>,
    identical: bool,
    table: TableJson,
}

fn hnf_json(l: &IntLattice) -> Vec<Vec<BigIntString>> {
    l.hnf().iter().map(|r| r.iter().cloned().map(BigIntString).collect()).collect()
}

fn check_order(order: u64, limit: u64) -> Result<()> {
    if order > limit {
        return Err(Error::Budget(format!("group order {order} exceeds the oracle limit {limit}")));
    }
    Ok(())
}

/// The irreducible rows as canonical strings, sorted.
fn row_set(t: &CharTable) -> Vec<String> {
    let mut v: Vec<String> = t.to_json().irreducibles.iter().map(|r| serde_json::to_string(r).unwrap_or_default()).collect();
    v.sort();
    v
}

fn oracle(kind: OracleKind) -> Result<bool> {
    match kind {
        OracleKind::SubgroupLattice { group, p, common } => {
            let budget = common.budget(200);
            let perm = super::load_perm_group(&group)?;
            check_order(perm.order_u64()?, budget.max_order)?;
            let g = GroupData::compute(crate::groupcore::FiniteGroup::from_perm_group(&perm, &budget)?, &budget)?;
            let pg = sylow(&g.group, p);
            let s = intersection_set_maxima(&g.group, &pg, &normalizer(&g.group, &pg))?;
            let fast = induced_lattice(&g, p, &s.maxima, &budget)?;
            let brute = brute_induced_lattice(&g, p, &pg, &s.maxima, budget.max_order, &budget)?;
            let out = LatticeOracle {
                group: super::group_label(&group),
                p,
                elementary_hnf: hnf_json(&fast),
                brute_hnf: hnf_json(&brute),
                identical: fast == brute,
            };
            emit(&to_json(&out)?, common.output.as_deref())?;
            Ok(out.identical)
        }
        OracleKind::BruteClasses { group, common } => {
            let budget = common.budget(5000);
            let perm = super::load_perm_group(&group)?;
            check_order(perm.order_u64()?, budget.max_order)?;
            let g = crate::groupcore::FiniteGroup::from_perm_group(&perm, &budget)?;
            let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size as usize).collect();
            sizes.sort_unstable();
            let brute = brute_class_sizes(&perm);
            let out = ClassOracle { group: super::group_label(&group), identical: brute == sizes, brute_class_sizes: brute, class_sizes: sizes };
            emit(&to_json(&out)?, common.output.as_deref())?;
            Ok(out.identical)
        }
        OracleKind::BruteTable { group, common } => {
            let budget = common.budget(5000);
            let perm = super::load_perm_group(&group)?;
            check_order(perm.order_u64()?, budget.max_order)?;
            let g = crate::groupcore::FiniteGroup::from_perm_group(&perm, &budget)?;
            let brute = brute_table(&g)?;
            let main = character_table(&g, &budget)?;
            let mut degrees = brute.degrees().to_vec();
            degrees.sort_unstable();
            let out = TableOracle {
                group: super::group_label(&group),
                degrees,
                identical: row_set(&brute) == row_set(&main),
                table: brute.to_json(),
            };
            emit(&to_json(&out)?, common.output.as_deref())?;
            Ok(out.identical)
        }
    }
}
