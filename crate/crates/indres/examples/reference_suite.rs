//! Recomputes the reference rows (Q1, IRC, Q2) and compares them with the
//! recorded values. Pass a group name to run only its rows, or "extended" for
//! every row.
//!
//!     cargo run --release --example reference_suite -- M11

use indres::cli_io::{reference_rows, run_row, Suite};
use indres::groupcore::Budget;

fn main() -> indres::Result<()> {
    let arg = std::env::args().nth(1);
    let suite = if arg.as_deref() == Some("extended") { Suite::Extended } else { Suite::Small };
    let rows = reference_rows(Suite::Extended);
    let picked: Vec<_> = match arg.as_deref() {
        None | Some("small") | Some("extended") => reference_rows(suite),
        Some(name) => rows.into_iter().filter(|r| r.group == name).collect(),
    };
    let mut bad = 0;
    for r in &picked {
        let o = run_row(r, &Budget::default())?;
        bad += usize::from(!o.matches);
        println!("{}", o.line());
    }
    println!("{} of {} rows match", picked.len() - bad, picked.len());
    Ok(())
}
