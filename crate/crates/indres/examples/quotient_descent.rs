//! Checks that the property verdicts for (G, P, HL) agree with those for the
//! quotient by a normal p-subgroup L, here S4 over its Klein four subgroup.
//!
//!     cargo run --example quotient_descent

use indres::classfun::GroupData;
use indres::correspondence::quotient_consistency;
use indres::fixtures;
use indres::groupcore::{sylow, Budget, FiniteGroup, Permutation, Subgroup};

fn main() -> indres::Result<()> {
    let budget = Budget::default();
    let g = GroupData::compute(FiniteGroup::from_perm_group(&fixtures::by_name("S4")?, &budget)?, &budget)?;
    let v4 = Subgroup::from_perms(
        &g.group,
        &[Permutation::from_cycles(4, &[&[1, 2], &[3, 4]])?, Permutation::from_cycles(4, &[&[1, 3], &[2, 4]])?],
    )?;
    let p_tilde = sylow(&g.group, 2);
    let c = quotient_consistency(&g, 2, &p_tilde, &v4, &budget)?;
    for (prop, up, down) in &c.verdicts {
        println!("{prop:>9}: G {up}, G/L {down}");
    }
    println!("consistent: {}", c.consistent);
    Ok(())
}
