//! Permutation groups: stabilizer chains, enumerated groups with conjugacy
//! classes, local subgroups, intersection sets and elementary subgroups.

mod chain;
mod elementary;
mod enumerate;
mod finite;
mod intersection;
pub mod io;
mod perm;
mod subgroup;

pub use chain::{PermGroup, StabChain};
pub use elementary::{conjugacy_representatives, is_elementary, prune_contained, qualifying_elementary_subgroups};
pub use enumerate::subgroup_classes;
pub use finite::{Budget, ConjClass, FiniteGroup};
pub use intersection::{conjugate_orbit, intersection_set_maxima, IntersectionSet};
pub use perm::Permutation;
pub use subgroup::{
    centralizer, centralizer_in, centralizer_of, conjugate_into, conjugating_element, normalizer, normalizer_in,
    sylow, sylow_in, Subgroup,
};

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Class data in the exchange shape: representative, size, order, power maps
/// and centralizer order.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    pub representative: Permutation,
    pub size: BigUint,
    pub rep_order: u64,
    pub power_map: BTreeMap<u64, usize>,
    pub centralizer_order: BigUint,
}

pub fn group_from_generators(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

pub fn conjugacy_classes(g: &PermGroup, budget: &Budget) -> Result<Vec<ConjClassData>> {
    let f = FiniteGroup::from_perm_group(g, budget)?;
    Ok(class_data(&f))
}

pub fn class_data(f: &FiniteGroup) -> Vec<ConjClassData> {
    f.classes()
        .iter()
        .enumerate()
        .map(|(i, c)| ConjClassData {
            representative: f.elem(c.rep).clone(),
            size: BigUint::from(c.size),
            rep_order: c.rep_order,
            power_map: f.power_maps().iter().map(|(&r, m)| (r, m[i])).collect(),
            centralizer_order: BigUint::from(f.centralizer_order(i)),
        })
        .collect()
}

fn sub_of(f: &FiniteGroup, k: &PermGroup) -> Result<Subgroup> {
    Subgroup::from_perms(f, k.generators()).map_err(|_| Error::domain("subgroup is not contained in the group"))
}

pub fn centralizer_of_element(g: &PermGroup, x: &Permutation, budget: &Budget) -> Result<PermGroup> {
    let f = FiniteGroup::from_perm_group(g, budget)?;
    let i = f.index_of(x).ok_or_else(|| Error::domain(format!("{x} is not in the group")))?;
    Ok(PermGroup::new(g.degree(), centralizer(&f, i).perms(&f))?)
}

pub fn normalizer_of(g: &PermGroup, k: &PermGroup, budget: &Budget) -> Result<PermGroup> {
    let f = FiniteGroup::from_perm_group(g, budget)?;
    let ks = sub_of(&f, k)?;
    Ok(PermGroup::new(g.degree(), normalizer(&f, &ks).perms(&f))?)
}

pub fn sylow_subgroup(g: &PermGroup, p: u64, budget: &Budget) -> Result<PermGroup> {
    if !crate::modp::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let f = FiniteGroup::from_perm_group(g, budget)?;
    Ok(PermGroup::new(g.degree(), sylow(&f, p).perms(&f))?)
}
