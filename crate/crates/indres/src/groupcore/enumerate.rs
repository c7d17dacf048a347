//! Full subgroup enumeration for small groups, used only by the oracles.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::finite::FiniteGroup;
use super::intersection::conjugate_orbit;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// One representative of every conjugacy class of subgroups, built by
/// adjoining cyclic subgroups to known representatives. Each representative
/// comes with the member sets of all its conjugates.
pub fn subgroup_classes(x: &FiniteGroup, max_order: u64) -> Result<Vec<(Subgroup, Vec<FixedBitSet>)>> {
    if x.order() > max_order {
        return Err(Error::Budget(format!(
            "subgroup enumeration is limited to order {max_order}; the group has order {}",
            x.order()
        )));
    }
    // one generator per cyclic subgroup
    let mut cyclic: Vec<u32> = Vec::new();
    let mut seen_cyclic: HashSet<FixedBitSet> = HashSet::new();
    for y in 1..x.order() as u32 {
        let c = Subgroup::generated(x, &[y]);
        if seen_cyclic.insert(c.members().clone()) {
            cyclic.push(y);
        }
    }
    let trivial = Subgroup::trivial(x);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(trivial.members().clone());
    let mut out = vec![(trivial.clone(), vec![trivial.members().clone()])];
    let mut pos = 0;
    while pos < out.len() {
        let k = out[pos].0.clone();
        for &c in &cyclic {
            if k.contains(c) {
                continue;
            }
            let mut gens = k.gens().to_vec();
            gens.push(c);
            let s = Subgroup::generated(x, &gens);
            if seen.contains(s.members()) {
                continue;
            }
            let conj: Vec<FixedBitSet> = conjugate_orbit(x, &s).into_iter().map(|(m, _)| m).collect();
            for m in &conj {
                seen.insert(m.clone());
            }
            out.push((s, conj));
        }
        pos += 1;
    }
    out.sort_by(|a, b| a.0.order().cmp(&b.0.order()).then_with(|| a.0.members().ones().cmp(b.0.members().ones())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{Budget, PermGroup, Permutation};

    #[test]
    fn s4_has_eleven_classes() {
        let a = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let g = FiniteGroup::from_perm_group(&PermGroup::new(4, vec![a, b]).unwrap(), &Budget::default()).unwrap();
        let cls = subgroup_classes(&g, 200).unwrap();
        assert_eq!(cls.len(), 11);
        let total: usize = cls.iter().map(|c| c.1.len()).sum();
        assert_eq!(total, 30);
    }
}
