//! Prints the quotient row (Q1, IRC, Q2) for a group and prime with P Sylow
//! and H = N_G(P).
//!
//!     cargo run --example quotients -- S6 3

use std::time::Instant;

use indres::classfun::GroupData;
use indres::correspondence::{Instance, Level, Property};
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};

fn main() -> indres::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "S4".into());
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let budget = Budget::default();
    let start = Instant::now();
    let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name(&name)?, &budget)?, &budget)?;
    let inst = Instance::sylow(name.as_str(), g, p, &budget)?;
    let q = inst.quotients()?;
    let irc = inst.check_property(Property::Irc, Level::Global)?;
    println!(
        "{name}, {p} | {} | {} | {}",
        q.q1_text(),
        if irc.holds { "Yes" } else { "No" },
        q.q2_text()
    );
    eprintln!("{:.2?}", start.elapsed());
    Ok(())
}
