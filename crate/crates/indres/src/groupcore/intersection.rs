use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::finite::FiniteGroup;
use super::subgroup::{normalizer, Subgroup};
use crate::error::{Error, Result};

/// The maximal members of the intersection set of (G, P, H): subgroups of P
/// of the form P ∩ tPt^-1 with t outside H, maximal under inclusion. Each comes
/// with the transporter t that produced it.
#[derive(Clone, Debug)]
pub struct IntersectionSet {
    pub maxima: Vec<Subgroup>,
    pub witnesses: Vec<u32>,
}

impl IntersectionSet {
    pub fn is_empty(&self) -> bool {
        self.maxima.is_empty()
    }

    /// Membership in the downward closure.
    pub fn contains(&self, q: &Subgroup) -> bool {
        self.maxima.iter().any(|m| q.is_subgroup_of(m))
    }

    /// Re-expresses the maxima inside another enumerated group containing them.
    pub fn transfer(&self, from: &FiniteGroup, to: &FiniteGroup) -> Result<Vec<Subgroup>> {
        self.maxima
            .iter()
            .map(|m| Subgroup::from_perms(to, &m.perms(from)))
            .collect()
    }
}

/// The conjugates of `k` under G, each paired with one transporter t
/// (tKt^-1 = conjugate), in breadth-first order from K itself.
pub fn conjugate_orbit(g: &FiniteGroup, k: &Subgroup) -> Vec<(FixedBitSet, u32)> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(k.members().clone());
    let mut orbit = vec![(k.members().clone(), 0u32)];
    let mut pos = 0;
    while pos < orbit.len() {
        let t = orbit[pos].1;
        for &s in g.gens() {
            let st = g.mul(s, t);
            let m = k.conjugate_members(g, st);
            if seen.insert(m.clone()) {
                orbit.push((m, st));
            }
        }
        pos += 1;
    }
    orbit
}

pub fn intersection_set_maxima(g: &FiniteGroup, p: &Subgroup, h: &Subgroup) -> Result<IntersectionSet> {
    if !p.is_subgroup_of(h) {
        return Err(Error::Precondition("P is not contained in H".into()));
    }
    let n = normalizer(g, p);
    if !n.is_subgroup_of(h) {
        return Err(Error::Precondition(format!(
            "H (order {}) does not contain N_G(P) (order {})",
            h.order(),
            n.order()
        )));
    }
    let mut cands: Vec<(FixedBitSet, u32)> = Vec::new();
    let mut seen = HashSet::new();
    for (m, t) in conjugate_orbit(g, p) {
        if h.contains(t) {
            continue;
        }
        let mut i = p.members().clone();
        i.intersect_with(&m);
        if seen.insert(i.clone()) {
            cands.push((i, t));
        }
    }
    let mut maxima: Vec<(FixedBitSet, u32)> = cands
        .iter()
        .filter(|(a, _)| !cands.iter().any(|(b, _)| a != b && a.is_subset(b)))
        .cloned()
        .collect();
    maxima.sort_by(|(a, _), (b, _)| {
        b.count_ones(..).cmp(&a.count_ones(..)).then_with(|| a.ones().cmp(b.ones()))
    });
    let witnesses = maxima.iter().map(|(_, t)| *t).collect();
    let maxima = maxima.into_iter().map(|(m, _)| Subgroup::from_members(g, m)).collect();
    Ok(IntersectionSet { maxima, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::chain::PermGroup;
    use crate::groupcore::finite::Budget;
    use crate::groupcore::perm::Permutation;
    use crate::groupcore::subgroup::sylow;

    fn grp(n: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
        let gs = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        FiniteGroup::from_perm_group(&PermGroup::new(n, gs).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn s4_two() {
        let g = grp(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let p = sylow(&g, 2);
        let s = intersection_set_maxima(&g, &p, &normalizer(&g, &p)).unwrap();
        assert_eq!(s.maxima.len(), 1);
        assert_eq!(s.maxima[0].order(), 4);
        // the normal Klein four group: every element is an involution or 1
        assert!(s.maxima[0].elements().all(|x| g.elem_order(x) <= 2));
        assert!(s.maxima[0].is_normal_in(&g, &Subgroup::whole(&g)));
        let all = Subgroup::whole(&g);
        assert!(intersection_set_maxima(&g, &p, &all).unwrap().is_empty());
        assert!(intersection_set_maxima(&g, &p, &p.intersection(&g, &Subgroup::trivial(&g))).is_err());
    }

    #[test]
    fn a5_five_is_ti() {
        let g = grp(5, &[&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5]]]);
        assert_eq!(g.order(), 60);
        let p = sylow(&g, 5);
        let s = intersection_set_maxima(&g, &p, &normalizer(&g, &p)).unwrap();
        assert_eq!(s.maxima.len(), 1);
        assert_eq!(s.maxima[0].order(), 1);
        let t = s.witnesses[0];
        assert!(!normalizer(&g, &p).contains(t));
    }
}
