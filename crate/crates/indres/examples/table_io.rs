//! Writes a character table to JSON, reads it back and matches it to the
//! classes of the group again.
//!
//!     cargo run --example table_io -- M11

use indres::chartab::{character_table, load_table, reconcile, save_table, CharTable};
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};

fn text(t: &CharTable) -> String {
    serde_json::to_string(&t.to_json()).unwrap()
}

fn main() -> indres::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A5".into());
    let budget = Budget::default();
    let g = FiniteGroup::from_perm_group(&fixtures::by_name(&name)?, &budget)?;
    let t = character_table(&g, &budget)?;
    let path = std::env::temp_dir().join(format!("{name}-table.json"));
    save_table(&t, &path)?;
    let back = load_table(&path)?;
    let matched = reconcile(&back, &g)?;
    println!("{}: wrote {}", name, path.display());
    println!("round trip identical: {}", text(&back) == text(&t));
    println!("reconciled identical: {}", text(&matched) == text(&t));
    Ok(())
}
