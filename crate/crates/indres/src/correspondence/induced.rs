//! Lattices spanned by induced characters.

use crate::classfun::{Fusion, GroupData};
use crate::error::Result;
use crate::groupcore::{qualifying_elementary_subgroups, subgroup_classes, sylow, Budget, Subgroup};
use crate::lattice::IntLattice;

/// Ind_E^X φ for every subgroup E in the list and every φ ∈ Irr(E), as
/// coefficient vectors over Irr(X).
pub fn induced_generators(x: &GroupData, subs: &[Subgroup], budget: &Budget) -> Result<Vec<Vec<i64>>> {
    let mut gens = Vec::new();
    for e in subs {
        let ed = GroupData::compute(e.to_group(&x.group)?, budget)?;
        let f = Fusion::of_subgroup(x, &ed, e)?;
        for j in 0..ed.table.num_classes() {
            gens.push(f.res.iter().map(|row| row[j]).collect());
        }
    }
    Ok(gens)
}

pub fn span(x: &GroupData, gens: &[Vec<i64>]) -> Result<IntLattice> {
    IntLattice::from_generators(x.table.num_classes(), gens.iter().map(|v| v.as_slice()))
}

/// ℐ(X, P, 𝒮) where 𝒮 is the downward closure of `maxima` (subgroups of X),
/// generated from qualifying elementary subgroups.
pub fn induced_lattice(x: &GroupData, p: u64, maxima: &[Subgroup], budget: &Budget) -> Result<IntLattice> {
    let subs = qualifying_elementary_subgroups(&x.group, p, maxima);
    span(x, &induced_generators(x, &subs, budget)?)
}

/// The same lattice straight from the definition: every subgroup L (up to
/// conjugacy) having a conjugate L' with L' ∩ P a Sylow subgroup of L' lying
/// in the closure of `maxima`.
pub fn brute_induced_lattice(
    x: &GroupData,
    p: u64,
    pgrp: &Subgroup,
    maxima: &[Subgroup],
    max_order: u64,
    budget: &Budget,
) -> Result<IntLattice> {
    let mut subs = Vec::new();
    for (l, conj) in subgroup_classes(&x.group, max_order)? {
        let lp = l.order() / crate::modp::p_prime_part(l.order(), p);
        let ok = conj.iter().any(|m| {
            let mut i = m.clone();
            i.intersect_with(pgrp.members());
            i.count_ones(..) as u64 == lp && maxima.iter().any(|q| i.is_subset(q.members()))
        });
        if ok {
            subs.push(l);
        }
    }
    span(x, &induced_generators(x, &subs, budget)?)
}

/// Whether Ind over all elementary subgroups spans 𝒞(X). Every p-subgroup
/// lies in a Sylow subgroup, so taking the Sylow subgroup as the only maximum
/// admits every elementary subgroup.
pub fn brauer_completeness(x: &GroupData, budget: &Budget) -> Result<bool> {
    let p = crate::modp::prime_divisors(x.order()).first().copied().unwrap_or(2);
    let s = sylow(&x.group, p);
    let lat = induced_lattice(x, p, &[s], budget)?;
    Ok(lat == IntLattice::full(x.table.num_classes()))
}
