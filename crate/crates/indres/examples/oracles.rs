//! Compares the fast code paths against brute-force definitions on small
//! groups: class sizes, character tables and the induced lattice.
//!
//!     cargo run --release --example oracles

use indres::chartab::brute::{brute_class_sizes, brute_table};
use indres::chartab::{character_table, CharTable};
use indres::classfun::GroupData;
use indres::correspondence::{brute_induced_lattice, induced_lattice};
use indres::fixtures;
use indres::groupcore::{intersection_set_maxima, normalizer, sylow, Budget, FiniteGroup};

fn rows(t: &CharTable) -> Vec<String> {
    let mut v: Vec<String> = t.to_json().irreducibles.iter().map(|r| serde_json::to_string(r).unwrap()).collect();
    v.sort();
    v
}

fn main() -> indres::Result<()> {
    let budget = Budget::default();
    for name in ["S3", "Q8", "A4", "S4", "A5"] {
        let perm = fixtures::by_name(name)?;
        let g = FiniteGroup::from_perm_group(&perm, &budget)?;
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size as usize).collect();
        sizes.sort_unstable();
        let classes = brute_class_sizes(&perm) == sizes;
        let tables = rows(&brute_table(&g)?) == rows(&character_table(&g, &budget)?);
        println!("{name:<4} classes {classes} table {tables}");
    }
    for (name, p) in [("S4", 2), ("S4", 3), ("A5", 2), ("A5", 5), ("S5", 2)] {
        let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name(name)?, &budget)?, &budget)?;
        let pg = sylow(&g.group, p);
        let s = intersection_set_maxima(&g.group, &pg, &normalizer(&g.group, &pg))?;
        let fast = induced_lattice(&g, p, &s.maxima, &budget)?;
        let brute = brute_induced_lattice(&g, p, &pg, &s.maxima, 200, &budget)?;
        println!("{name:<4} p={p} induced lattice identical {}", fast == brute);
    }
    Ok(())
}
