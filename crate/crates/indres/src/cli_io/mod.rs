//! Job descriptions, loading of groups, tables and witnesses, the reference
//! suite and the command-line front end.

mod cli;
mod suite;

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cli::{run, Cli};
pub use suite::{reference_rows, row_instance, run_row, run_suite, ReferenceRow, RowOutcome, SubgroupChoice, Suite};

use crate::chartab::load_table;
use crate::classfun::{GroupData, VirtualCharacter};
use crate::correspondence::{Instance, Property, PropertyReport};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::groupcore::io::{load_group, GroupFile};
use crate::groupcore::{Budget, FiniteGroup, PermGroup, Subgroup};

/// A property name accepted by `--props`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Requested {
    Irc,
    Wirc,
    WircStar,
    PRes,
    PInd,
    /// the height-zero count comparison
    In,
    /// property (G) for a supplied witness
    G,
}

impl FromStr for Requested {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "in" => Ok(Requested::In),
            "g" => Ok(Requested::G),
            other => Ok(match Property::from_str(other)? {
                Property::Irc => Requested::Irc,
                Property::Wirc => Requested::Wirc,
                Property::WircStar => Requested::WircStar,
                Property::PRes => Requested::PRes,
                Property::PInd => Requested::PInd,
            }),
        }
    }
}

impl Requested {
    fn property(self) -> Option<Property> {
        match self {
            Requested::Irc => Some(Property::Irc),
            Requested::Wirc => Some(Property::Wirc),
            Requested::WircStar => Some(Property::WircStar),
            Requested::PRes => Some(Property::PRes),
            Requested::PInd => Some(Property::PInd),
            Requested::In | Requested::G => None,
        }
    }
}

/// Parses a comma-separated property list; "all" means the five matching and
/// containment properties.
pub fn parse_props(s: &str) -> Result<Vec<Requested>> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|x| !x.trim().is_empty()) {
        if part.trim().eq_ignore_ascii_case("all") {
            out.extend([Requested::Irc, Requested::Wirc, Requested::WircStar, Requested::PRes, Requested::PInd]);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode", content = "value")]
pub enum SubgroupMode {
    Sylow,
    /// generators in a group file
    Explicit(PathBuf),
    /// a defect group of the block with this index
    DefectGroupOfBlock(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode", content = "value")]
pub enum HMode {
    Normalizer,
    Explicit(PathBuf),
}

/// One `verify` or `quotients` run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JobSpec {
    /// group file, or the name of a built-in group
    pub group: String,
    pub p: u64,
    pub subgroup: SubgroupMode,
    pub h: HMode,
    pub props: Vec<Requested>,
    pub g_table: Option<PathBuf>,
    pub h_table: Option<PathBuf>,
    pub witness: Option<PathBuf>,
    pub block: Option<usize>,
    pub output: Option<PathBuf>,
    pub budget_order: u64,
    pub budget_classes: usize,
}

impl JobSpec {
    pub fn new(group: impl Into<String>, p: u64) -> Self {
        let b = Budget::default();
        JobSpec {
            group: group.into(),
            p,
            subgroup: SubgroupMode::Sylow,
            h: HMode::Normalizer,
            props: vec![Requested::Irc],
            g_table: None,
            h_table: None,
            witness: None,
            block: None,
            output: None,
            budget_order: b.max_order,
            budget_classes: b.max_classes,
        }
    }

    pub fn budget(&self) -> Budget {
        Budget { max_order: self.budget_order, max_classes: self.budget_classes }
    }

    pub fn validate(&self) -> Result<()> {
        if self.props.contains(&Requested::G) && (self.witness.is_none() || self.block.is_none()) {
            return Err(Error::Precondition("property g needs a witness file and a block index".into()));
        }
        Ok(())
    }

    /// Loads the group, tables and subgroups and sets up the instance.
    pub fn instance(&self) -> Result<Instance> {
        self.validate()?;
        let budget = self.budget();
        let g = load_group_data(&self.group, self.g_table.as_deref(), &budget)?;
        let h_table = self.h_table.as_deref().map(load_table).transpose()?;
        let h = match &self.h {
            HMode::Normalizer => None,
            HMode::Explicit(path) => Some(load_subgroup(&g.group, path)?),
        };
        let label = group_label(&self.group);
        match &self.subgroup {
            SubgroupMode::Sylow => {
                let pg = crate::groupcore::sylow(&g.group, self.p);
                Instance::new(label, g, self.p, pg, h, h_table.as_ref(), &budget)
            }
            SubgroupMode::Explicit(path) => {
                let pg = load_subgroup(&g.group, path)?;
                Instance::new(label, g, self.p, pg, h, h_table.as_ref(), &budget)
            }
            SubgroupMode::DefectGroupOfBlock(b) => {
                let pg = defect_group_of(&g, self.p, *b)?;
                Instance::new(label, g, self.p, pg, h, h_table.as_ref(), &budget)
            }
        }
    }

    /// Runs the requested checks.
    pub fn verify(&self) -> Result<PropertyReport> {
        let inst = self.instance()?;
        let props: Vec<Property> = self.props.iter().filter_map(|r| r.property()).collect();
        let with_counts = self.props.contains(&Requested::In);
        let witness = match (self.props.contains(&Requested::G), &self.witness, self.block) {
            (true, Some(path), Some(b)) => Some((b, load_witness(path)?)),
            _ => None,
        };
        PropertyReport::build(&inst, &props, with_counts, witness.as_ref().map(|(b, mu)| (*b, mu)))
    }
}

fn defect_group_of(g: &GroupData, p: u64, b: usize) -> Result<Subgroup> {
    let red = crate::blocks::ModularReduction::for_tables(p, &[&g.table])?;
    let bl = crate::blocks::blocks(g, p, &red)?;
    bl.get(b)
        .map(|x| x.defect_group.clone())
        .ok_or_else(|| Error::Domain(format!("block index {b} out of range ({} blocks)", bl.len())))
}

/// The built-in group name, or the file stem of a group file.
pub fn group_label(spec: &str) -> String {
    let path = Path::new(spec);
    if path.is_file() {
        path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| spec.to_string())
    } else {
        spec.to_string()
    }
}

/// A group file when `spec` names an existing file, otherwise a built-in group.
pub fn load_perm_group(spec: &str) -> Result<PermGroup> {
    if Path::new(spec).is_file() {
        load_group(spec)
    } else {
        fixtures::by_name(spec)
    }
}

pub fn load_finite_group(spec: &str, budget: &Budget) -> Result<FiniteGroup> {
    FiniteGroup::from_perm_group(&load_perm_group(spec)?, budget)
}

/// The group with its character table, read from `table` (and matched to the
/// group's classes) when given.
pub fn load_group_data(spec: &str, table: Option<&Path>, budget: &Budget) -> Result<GroupData> {
    let g = load_finite_group(spec, budget)?;
    match table {
        Some(path) => GroupData::with_table(g, &load_table(path)?),
        None => GroupData::compute(g, budget),
    }
}

/// A subgroup given by generators in the group file format.
pub fn load_subgroup(g: &FiniteGroup, path: &Path) -> Result<Subgroup> {
    let text = std::fs::read_to_string(path)?;
    let f: GroupFile = serde_json::from_str(&text).map_err(|e| Error::Format(format!("subgroup file: {e}")))?;
    if f.degree != g.degree() {
        return Err(Error::Domain(format!("subgroup has degree {}, group has degree {}", f.degree, g.degree())));
    }
    let s = Subgroup::from_perms(g, f.to_group()?.generators())?;
    if let Some(o) = &f.order {
        if s.order().to_string() != *o {
            return Err(Error::Consistency(format!("subgroup file states order {o}, generators give {}", s.order())));
        }
    }
    Ok(s)
}

pub fn load_witness(path: &Path) -> Result<VirtualCharacter> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("witness file: {e}")))
}

/// What a failed run prints: `{"error": {"kind": ..., "message": ...}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorRecord {
    pub error: ErrorBody,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorRecord {
    fn from(e: &Error) -> Self {
        ErrorRecord { error: ErrorBody { kind: e.kind().to_string(), message: e.to_string() } }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn props_parse() {
        assert_eq!(parse_props("irc, pres").unwrap(), vec![Requested::Irc, Requested::PRes]);
        assert_eq!(parse_props("all,in").unwrap().len(), 6);
        assert!(parse_props("irc,foo").is_err());
    }

    #[test]
    fn g_needs_witness() {
        let mut j = JobSpec::new("S4", 2);
        j.props = vec![Requested::G];
        assert!(matches!(j.validate(), Err(Error::Precondition(_))));
    }

    #[test]
    fn s4_report() {
        let mut j = JobSpec::new("S4", 2);
        j.props = parse_props("all,in").unwrap();
        let r = j.verify().unwrap();
        assert!(r.all_hold);
        assert!(r.self_checks.all());
        assert_eq!(r.table_row(), "S4, 2 | Z^2 | Yes | Z^2");
    }
}
