use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::finite::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::modp;

/// A subgroup of an enumerated group, stored as a member bitset over the
/// ambient element indices plus a small generating set. Equality and hashing
/// look only at the members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: FixedBitSet,
    gens: Vec<u32>,
    order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(g.order() as usize);
        members.insert(0);
        Subgroup { members, gens: Vec::new(), order: 1 }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(g.order() as usize);
        members.insert_range(..);
        Subgroup { members, gens: g.gens().to_vec(), order: g.order() as usize }
    }

    /// The subgroup generated by the given elements.
    pub fn generated(g: &FiniteGroup, gens: &[u32]) -> Self {
        let gens: Vec<u32> = gens.iter().copied().filter(|&x| x != 0).collect();
        let mut members = FixedBitSet::with_capacity(g.order() as usize);
        members.insert(0);
        let mut list = vec![0u32];
        let mut pos = 0;
        while pos < list.len() {
            let x = list[pos];
            for &s in &gens {
                let y = g.mul(x, s);
                if !members.put(y as usize) {
                    list.push(y);
                }
            }
            pos += 1;
        }
        Subgroup { members, gens, order: list.len() }
    }

    /// Generated by permutations that must lie in `g`.
    pub fn from_perms(g: &FiniteGroup, perms: &[Permutation]) -> Result<Self> {
        let idx = perms
            .iter()
            .map(|p| g.index_of(p).ok_or_else(|| Error::domain(format!("{p} is not an element of the group"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated(g, &idx))
    }

    /// From a member set known to be a subgroup; a generating set is picked
    /// greedily in index order.
    pub fn from_members(g: &FiniteGroup, members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        let mut gens = Vec::new();
        let mut cur = Self::trivial(g);
        for x in members.ones() {
            if cur.order == order {
                break;
            }
            if !cur.contains(x as u32) {
                gens.push(x as u32);
                cur = Self::generated(g, &gens);
            }
        }
        debug_assert_eq!(cur.members, members);
        Subgroup { members, gens, order }
    }

    /// Collects the members of `within` satisfying `pred` (which must cut out a subgroup).
    pub fn filter(g: &FiniteGroup, within: &Subgroup, pred: impl Fn(u32) -> bool) -> Self {
        let mut m = FixedBitSet::with_capacity(g.order() as usize);
        for x in within.members.ones() {
            if pred(x as u32) {
                m.insert(x);
            }
        }
        Self::from_members(g, m)
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.ones().map(|x| x as u32)
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Self::from_members(g, m)
    }

    /// t H t^-1.
    pub fn conjugate(&self, g: &FiniteGroup, t: u32) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(g.order() as usize);
        for x in self.members.ones() {
            m.insert(g.conj(t, x as u32) as usize);
        }
        let gens = self.gens.iter().map(|&s| g.conj(t, s)).collect();
        Subgroup { members: m, gens, order: self.order }
    }

    pub fn conjugate_members(&self, g: &FiniteGroup, t: u32) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(g.order() as usize);
        for x in self.members.ones() {
            m.insert(g.conj(t, x as u32) as usize);
        }
        m
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        modp::p_prime_part(self.order(), p) == 1
    }

    pub fn is_normal_in(&self, g: &FiniteGroup, over: &Subgroup) -> bool {
        over.gens.iter().all(|&t| self.gens.iter().all(|&s| self.contains(g.conj(t, s))))
    }

    pub fn perms(&self, g: &FiniteGroup) -> Vec<Permutation> {
        self.gens.iter().map(|&i| g.elem(i).clone()).collect()
    }

    /// The subgroup as a standalone enumerated group (classes in canonical order).
    pub fn to_group(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        let elems = self.elements().map(|i| g.elem(i).clone()).collect();
        FiniteGroup::from_elements(g.degree(), &self.perms(g), elems, g.base().to_vec())
    }

    /// Stable description used in reports.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        let gs: Vec<String> = self.gens.iter().map(|&i| g.elem(i).to_string()).collect();
        format!("order {} <{}>", self.order, gs.join(", "))
    }
}

/// C_G(x) as a subgroup.
pub fn centralizer(g: &FiniteGroup, x: u32) -> Subgroup {
    Subgroup::filter(g, &Subgroup::whole(g), |y| g.commute(x, y))
}

/// C_W(x) for a subgroup W.
pub fn centralizer_in(g: &FiniteGroup, within: &Subgroup, x: u32) -> Subgroup {
    Subgroup::filter(g, within, |y| g.commute(x, y))
}

/// Centralizer in `within` of all generators of `k`.
pub fn centralizer_of(g: &FiniteGroup, within: &Subgroup, k: &Subgroup) -> Subgroup {
    Subgroup::filter(g, within, |y| k.gens().iter().all(|&s| g.commute(s, y)))
}

pub fn normalizer(g: &FiniteGroup, k: &Subgroup) -> Subgroup {
    normalizer_in(g, &Subgroup::whole(g), k)
}

pub fn normalizer_in(g: &FiniteGroup, within: &Subgroup, k: &Subgroup) -> Subgroup {
    Subgroup::filter(g, within, |y| k.gens().iter().all(|&s| k.contains(g.conj(y, s))))
}

/// A Sylow p-subgroup of `within`, grown one normalizing p-element at a
/// time, always taking the first suitable element in index order.
pub fn sylow_in(g: &FiniteGroup, within: &Subgroup, p: u64) -> Subgroup {
    let n = within.order();
    let target = n / modp::p_prime_part(n, p);
    let mut q = Subgroup::trivial(g);
    while q.order() < target {
        let y = within
            .elements()
            .find(|&y| {
                !q.contains(y)
                    && modp::p_prime_part(g.elem_order(y), p) == 1
                    && q.gens().iter().all(|&s| q.contains(g.conj(y, s)))
            })
            .expect("a p-subgroup below Sylow order has a normalizing p-element outside it");
        let mut gens = q.gens().to_vec();
        gens.push(y);
        q = Subgroup::generated(g, &gens);
    }
    q
}

pub fn sylow(g: &FiniteGroup, p: u64) -> Subgroup {
    sylow_in(g, &Subgroup::whole(g), p)
}

/// Some t in `within` with t A t^-1 contained in B, scanning in index order.
pub fn conjugate_into(g: &FiniteGroup, within: &Subgroup, a: &Subgroup, b: &Subgroup) -> Option<u32> {
    if a.order() > b.order() || b.order() % a.order() != 0 {
        return None;
    }
    within.elements().find(|&t| a.gens().iter().all(|&s| b.contains(g.conj(t, s))))
}

/// Some t in `within` with t A t^-1 = B.
pub fn conjugating_element(g: &FiniteGroup, within: &Subgroup, a: &Subgroup, b: &Subgroup) -> Option<u32> {
    if a.order() != b.order() {
        return None;
    }
    conjugate_into(g, within, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::chain::PermGroup;
    use crate::groupcore::finite::Budget;

    fn s4() -> FiniteGroup {
        let a = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        FiniteGroup::from_perm_group(&PermGroup::new(4, vec![a, b]).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn local_subgroups_of_s4() {
        let g = s4();
        let t = g.index_of(&Permutation::from_cycles(4, &[&[1, 2]]).unwrap()).unwrap();
        assert_eq!(centralizer(&g, t).order(), 4);
        assert_eq!(centralizer(&g, 0).order(), 24);
        let p2 = sylow(&g, 2);
        assert_eq!(p2.order(), 8);
        assert_eq!(normalizer(&g, &p2).order(), 8);
        assert_eq!(sylow(&g, 3).order(), 3);
        assert_eq!(sylow(&g, 5).order(), 1);
        let c3 = Subgroup::from_perms(&g, &[Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap()]).unwrap();
        assert_eq!(normalizer(&g, &c3).order(), 6);
        let whole = Subgroup::whole(&g);
        assert_eq!(normalizer(&g, &whole).order(), 24);
        // Sylow subgroups of conjugate inputs are conjugate
        let x = p2.conjugate(&g, t);
        assert!(conjugating_element(&g, &whole, &p2, &x).is_some());
    }
}
