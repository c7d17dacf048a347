//! The curated instance list with recorded (Q1, IRC, Q2) values, and the
//! runner comparing computed rows against them.

use std::str::FromStr;

use serde::Serialize;

use crate::blocks::{blocks, ModularReduction};
use crate::classfun::GroupData;
use crate::correspondence::{Instance, Property, PropertyReport, Quotients};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::groupcore::{Budget, FiniteGroup};
use crate::lattice::Invariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupChoice {
    Sylow,
    /// defect group of the unique block whose defect groups have this order
    DefectGroupOrder(u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceRow {
    pub group: &'static str,
    pub p: u64,
    pub subgroup: SubgroupChoice,
    pub q1: &'static str,
    pub irc: bool,
    pub q2: &'static str,
    pub order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// rows with |G| ≤ 10⁵
    Small,
    /// every row
    Extended,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Suite::Small),
            "extended" => Ok(Suite::Extended),
            _ => Err(Error::Domain(format!("unknown suite {s:?} (small or extended)"))),
        }
    }
}

const fn row(group: &'static str, p: u64, order: u64, q1: &'static str, irc: bool, q2: &'static str) -> ReferenceRow {
    ReferenceRow { group, p, subgroup: SubgroupChoice::Sylow, q1, irc, q2, order }
}

const ROWS: &[ReferenceRow] = &[
    row("S4", 2, 24, "Z^2", true, "Z^2"),
    row("S5", 2, 120, "Z", true, "Z"),
    row("S6", 2, 720, "Z^2", true, "Z^2"),
    row("S6", 3, 720, "Z^4", true, "Z^4"),
    row("S7", 2, 5040, "Z", true, "Z"),
    row("S7", 3, 5040, "Z^2", true, "Z^2"),
    row("S8", 2, 40320, "Z + Z", true, "Z"),
    row("S8", 3, 40320, "[Z^2] + [Z^2]", true, "[Z^2] + [Z^2]"),
    row("S9", 2, 362880, "Z", true, "Z"),
    row("S9", 3, 362880, "Z", true, "Z"),
    row("A5", 2, 60, "Z", true, "Z"),
    row("A6", 2, 360, "Z", true, "Z"),
    row("A6", 3, 360, "Z^2", true, "Z^2"),
    row("A7", 2, 2520, "Z", true, "Z"),
    row("A7", 3, 2520, "Z", true, "Z"),
    row("A8", 2, 20160, "Z", true, "Z"),
    row("A8", 3, 20160, "Z^2", true, "Z^2"),
    row("A9", 2, 181440, "Z/2", true, "Z/2"),
    row("A9", 3, 181440, "Z^2", true, "Z^2"),
    row("M11", 2, 7920, "Z^2", true, "Z"),
    row("M11", 3, 7920, "Z^2", true, "Z^2"),
    row("M12", 2, 95040, "Z^2", true, "Z^2"),
    ReferenceRow {
        group: "M12",
        p: 2,
        subgroup: SubgroupChoice::DefectGroupOrder(4),
        q1: "Z/2",
        irc: true,
        q2: "Z/2",
        order: 95040,
    },
    row("M12", 3, 95040, "Z/3", true, "Z/3"),
    row("SL2(11)", 2, 1320, "Z/2", true, "Z/2"),
    row("SL2(13)", 2, 2184, "Z/2", true, "Z/2"),
    row("SL2(17)", 2, 4896, "Z^6", true, "Z"),
    row("SL2(19)", 2, 6840, "Z/2", true, "Z/2"),
    row("SL3(3)", 2, 5616, "Z^2", true, "Z"),
    row("PSL4(2)", 3, 20160, "Z^2", true, "Z^2"),
    row("PSp4(3)", 2, 25920, "Z", true, "Z"),
    row("PSU3(3)", 2, 6048, "Z^2", true, "Z^2"),
    row("PSU3(3)", 3, 6048, "Z^5", false, "Z"),
    row("PSU3(4)", 2, 62400, "Z^6", false, "Z"),
    row("PSU3(4)", 5, 62400, "Z/5 + Z^2", true, "Z/5 + Z^2"),
    row("PSU3(5)", 2, 126000, "Z^2", true, "Z"),
    ReferenceRow {
        group: "PSU3(5)",
        p: 2,
        subgroup: SubgroupChoice::DefectGroupOrder(4),
        q1: "Z/2",
        irc: true,
        q2: "Z/2",
        order: 126000,
    },
    row("PSU3(5)", 3, 126000, "Z/3", true, "Z/3"),
    row("PSU3(5)", 5, 126000, "Z^5", false, "Z^3"),
    row("SL3(5)", 2, 372000, "Z/2 + Z/2", true, "Z/2 + Z/2"),
];

pub fn reference_rows(suite: Suite) -> Vec<ReferenceRow> {
    ROWS.iter().filter(|r| suite == Suite::Extended || r.order <= 100_000).cloned().collect()
}

/// A recorded entry: one group, or one per block when bracketed.
fn parse_entry(s: &str) -> Result<Vec<Invariants>> {
    if s.contains('[') {
        s.split("] + [")
            .map(|part| part.trim().trim_start_matches('[').trim_end_matches(']').parse())
            .collect()
    } else {
        Ok(vec![s.parse()?])
    }
}

/// Compares a computed quotient with a recorded entry; bracketed entries as
/// multisets of block components.
fn entry_matches(q: &Quotients, whole: &Invariants, part: impl Fn(usize) -> Invariants, recorded: &str) -> Result<bool> {
    let want = parse_entry(recorded)?;
    if !q.bracketed {
        return Ok(want.len() == 1 && want[0] == *whole);
    }
    let mut got: Vec<String> = (0..q.blocks.len()).map(|i| part(i).to_string()).collect();
    let mut want: Vec<String> = want.iter().map(|w| w.to_string()).collect();
    got.sort();
    want.sort();
    Ok(got == want)
}

#[derive(Clone, Debug, Serialize)]
pub struct RowOutcome {
    pub row: ReferenceRow,
    pub q1: String,
    pub irc: bool,
    pub q2: String,
    pub matches: bool,
    pub report: PropertyReport,
}

impl RowOutcome {
    pub fn line(&self) -> String {
        let yes = |b| if b { "Yes" } else { "No" };
        let p = match self.row.subgroup {
            SubgroupChoice::Sylow => "Sylow".to_string(),
            SubgroupChoice::DefectGroupOrder(n) => format!("defect group of order {n}"),
        };
        format!(
            "{:<8} {} {:<28} | {:<16} | {:<3} | {:<16} | {}",
            self.row.group,
            self.row.p,
            p,
            self.q1,
            yes(self.irc),
            self.q2,
            if self.matches {
                "match".to_string()
            } else {
                format!("MISMATCH (recorded {} | {} | {})", self.row.q1, yes(self.row.irc), self.row.q2)
            }
        )
    }
}

/// Sets up the instance of a row: P Sylow, or the defect group of the block
/// singled out by its defect group order; H = N_G(P).
pub fn row_instance(r: &ReferenceRow, budget: &Budget) -> Result<Instance> {
    let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name(r.group)?, budget)?, budget)?;
    let label = r.group.to_string();
    match r.subgroup {
        SubgroupChoice::Sylow => Instance::sylow(label, g, r.p, budget),
        SubgroupChoice::DefectGroupOrder(n) => {
            let red = ModularReduction::for_tables(r.p, &[&g.table])?;
            let hits: Vec<usize> = blocks(&g, r.p, &red)?
                .iter()
                .filter(|b| b.defect_group.order() == n)
                .map(|b| b.id)
                .collect();
            match hits.as_slice() {
                [b] => Instance::defect_group(label, g, r.p, *b, budget),
                _ => Err(Error::Precondition(format!("{} blocks with defect groups of order {n}", hits.len()))),
            }
        }
    }
}

/// Runs one row with all five properties and the self-checks.
pub fn run_row(r: &ReferenceRow, budget: &Budget) -> Result<RowOutcome> {
    let inst = row_instance(r, budget)?;
    let report = PropertyReport::build(&inst, &Property::ALL, true, None)?;
    let q = inst.quotients()?;
    let irc = inst.check_property(Property::Irc, crate::correspondence::Level::Global)?.holds;
    let m1 = entry_matches(&q, &q.q1, |i| q.blocks[i].q1.clone(), r.q1)?;
    let m2 = entry_matches(&q, &q.q2, |i| q.blocks[i].q2.clone(), r.q2)?;
    Ok(RowOutcome { row: r.clone(), q1: q.q1_text(), irc, q2: q.q2_text(), matches: m1 && m2 && irc == r.irc, report })
}

pub fn run_suite(suite: Suite, budget: &Budget) -> Result<Vec<RowOutcome>> {
    reference_rows(suite).iter().map(|r| run_row(r, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse() {
        for r in ROWS {
            assert!(parse_entry(r.q1).is_ok() && parse_entry(r.q2).is_ok(), "{}", r.group);
        }
        assert_eq!(parse_entry("[Z^2] + [Z^2]").unwrap().len(), 2);
        assert_eq!(reference_rows(Suite::Small).len() + 9, reference_rows(Suite::Extended).len());
    }

    #[test]
    fn small_rows_s4_a5() {
        for r in reference_rows(Suite::Small).iter().filter(|r| r.order <= 60) {
            let o = run_row(r, &Budget::default()).unwrap();
            assert!(o.matches, "{}", o.line());
        }
    }
}
