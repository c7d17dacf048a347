//! Quotients for P a defect group of a chosen block, H = N_G(P). Lists the
//! blocks when no index is given.
//!
//!     cargo run --release --example block_quotients -- M12 2 3

use indres::blocks::{blocks, ModularReduction};
use indres::classfun::GroupData;
use indres::correspondence::{Instance, Level, Property};
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};

fn main() -> indres::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("M12");
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let budget = Budget::default();
    let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name(name)?, &budget)?, &budget)?;
    let Some(b) = args.get(2).and_then(|s| s.parse().ok()) else {
        let red = ModularReduction::for_tables(p, &[&g.table])?;
        for bl in blocks(&g, p, &red)? {
            let degs: Vec<u64> = bl.chars.iter().map(|&i| g.table.degrees()[i]).collect();
            println!("block {} defect {} degrees {degs:?}", bl.id, bl.defect);
        }
        return Ok(());
    };
    let inst = Instance::defect_group(name, g, p, b, &budget)?;
    let q = inst.quotients()?;
    let irc = inst.check_property(Property::Irc, Level::Global)?;
    println!(
        "{name}, {p}, |P| = {} | {} | {} | {}",
        inst.p_in_g.order(),
        q.q1_text(),
        if irc.holds { "Yes" } else { "No" },
        q.q2_text()
    );
    Ok(())
}
