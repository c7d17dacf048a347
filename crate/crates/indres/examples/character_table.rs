//! Computes the character table of a fixture group and prints its degrees.
//!
//!     cargo run --example character_table -- M11

use std::time::Instant;

use indres::chartab::character_table;
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};

fn main() -> indres::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S5".into());
    let start = Instant::now();
    let g = FiniteGroup::from_perm_group(&fixtures::by_name(&name)?, &Budget::default())?;
    let t0 = start.elapsed();
    let t = character_table(&g, &Budget::default())?;
    println!("{name}: order {}, {} classes", g.order(), g.num_classes());
    println!("degrees {:?}", t.degrees());
    println!("enumerate {:.2?}, table {:.2?}", t0, start.elapsed() - t0);
    Ok(())
}
