//! The order-1000 group 5^(1+2):Q8 at p = 2: block-level properties for the
//! block with faithful central character, and property (G) for the witness μ.
//!
//!     cargo run --release --example extraspecial_witness

use std::time::Instant;

use indres::classfun::GroupData;
use indres::correspondence::{extraspecial_witness, property_g, Instance, Level, Property};
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};

fn main() -> indres::Result<()> {
    let budget = Budget::default();
    let start = Instant::now();
    let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name("5^1+2:Q8")?, &budget)?, &budget)?;
    let inst = Instance::sylow("5^1+2:Q8", g, 2, &budget)?;
    let (b, mu) = extraspecial_witness(&inst)?;
    let degs: Vec<u64> = inst.g_blocks[b].chars.iter().map(|&i| inst.g.table.degrees()[i]).collect();
    println!("|H| = {}, block {b} degrees {degs:?}", inst.h.order());
    for prop in Property::ALL {
        let v = inst.check_property(prop, Level::Block(b))?;
        println!("{prop:>9}: {}", if v.holds { "holds" } else { "fails" });
    }
    let check = property_g(&inst, b, &mu)?;
    println!("        G: {} (congruence {}, constituents {})", if check.holds { "holds" } else { "fails" }, check.congruence, check.constituents);
    for f in &check.failures {
        println!("  {f}");
    }
    eprintln!("{:.2?}", start.elapsed());
    Ok(())
}
