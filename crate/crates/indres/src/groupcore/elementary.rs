//! Elementary subgroups whose p-part lies, up to conjugacy, in a given
//! downward-closed family of p-subgroups.
//!
//! Inducing from a subgroup factors through any overgroup, so it is enough to
//! return a family that contains a conjugate of every qualifying elementary
//! subgroup:
//!
//! * ℓ ≠ p: an ℓ-elementary group is ⟨x⟩ × S with x an ℓ'-element and S an
//!   ℓ-subgroup of C(x); its p-part is ⟨x_p⟩, so it qualifies iff the class of
//!   x_p meets a maximum. All such groups sit inside ⟨x⟩ × Syl_ℓ(C(x)).
//! * ℓ = p: the group is ⟨y⟩ × S with S a p-group; conjugating S into a
//!   maximum Q puts the whole group inside ⟨y⟩ × C_Q(y).

use fixedbitset::FixedBitSet;

use super::finite::FiniteGroup;
use super::subgroup::{centralizer, centralizer_in, conjugating_element, normalizer, sylow_in, Subgroup};
use crate::modp;

/// Picks one representative of each conjugacy class among the subgroups.
pub fn conjugacy_representatives(x: &FiniteGroup, subs: &[Subgroup]) -> Vec<Subgroup> {
    let whole = Subgroup::whole(x);
    let mut reps: Vec<Subgroup> = Vec::new();
    for s in subs {
        if !reps.iter().any(|r| conjugating_element(x, &whole, s, r).is_some()) {
            reps.push(s.clone());
        }
    }
    reps
}

/// Covering family of qualifying elementary subgroups of `x` relative to the
/// downward closure of `maxima` (subgroups of `x`). Empty when there are no maxima.
pub fn qualifying_elementary_subgroups(x: &FiniteGroup, p: u64, maxima: &[Subgroup]) -> Vec<Subgroup> {
    if maxima.is_empty() {
        return Vec::new();
    }
    let maxima = conjugacy_representatives(x, maxima);
    let k = x.num_classes();
    let mut meets = vec![false; k];
    for q in &maxima {
        for m in q.elements() {
            meets[x.class_of(m)] = true;
        }
    }
    let primes = modp::prime_divisors(x.order());
    let mut out: Vec<Subgroup> = Vec::new();

    // cyclic subgroups up to conjugacy: keep the least class among generators
    for (c, cls) in x.classes().iter().enumerate() {
        let r = cls.rep;
        let o = cls.rep_order;
        let first = (1..o.max(2))
            .filter(|&j| num_integer::gcd(j, o) == 1)
            .map(|j| x.power_class(c, j as i64))
            .min()
            .unwrap_or(c);
        if first != c && o > 1 {
            continue;
        }
        if !meets[x.class_of(x.p_part(r, p))] {
            continue;
        }
        let cent = centralizer(x, r);
        out.push(Subgroup::generated(x, &[r]));
        for &l in &primes {
            if l == p || o % l == 0 {
                continue;
            }
            let s = sylow_in(x, &cent, l);
            if s.order() > 1 {
                let mut gens = s.gens().to_vec();
                gens.push(r);
                out.push(Subgroup::generated(x, &gens));
            }
        }
    }

    for q in &maxima {
        if q.order() == 1 {
            continue;
        }
        out.push(q.clone());
        let n = normalizer(x, q);
        // p'-elements centralizing some element of order p in Q
        let whole = Subgroup::whole(x);
        let mut z_reps: Vec<u32> = Vec::new();
        let mut z_done = FixedBitSet::with_capacity(x.order() as usize);
        for z in q.elements() {
            if z == 0 || x.elem_order(z) != p || z_done.contains(z as usize) {
                continue;
            }
            z_reps.push(z);
            for m in orbit(x, n.gens(), &[z]) {
                z_done.insert(m as usize);
            }
        }
        let mut cand = FixedBitSet::with_capacity(x.order() as usize);
        for &z in &z_reps {
            for y in centralizer_in(x, &whole, z).elements() {
                if y != 0 && x.elem_order(y) % p != 0 {
                    cand.insert(y as usize);
                }
            }
        }
        let mut done = FixedBitSet::with_capacity(x.order() as usize);
        for y in cand.ones() {
            let y = y as u32;
            if done.contains(y as usize) {
                continue;
            }
            let o = x.elem_order(y);
            let gens_of_cyclic: Vec<u32> = (1..o)
                .filter(|&j| num_integer::gcd(j, o) == 1)
                .map(|j| x.pow(y, j as i64))
                .collect();
            for m in orbit(x, n.gens(), &gens_of_cyclic) {
                done.insert(m as usize);
            }
            let cq = centralizer_in(x, q, y);
            if cq.order() == 1 {
                continue;
            }
            let mut gens = cq.gens().to_vec();
            gens.push(y);
            out.push(Subgroup::generated(x, &gens));
        }
    }
    prune_contained(out)
}

fn orbit(x: &FiniteGroup, gens: &[u32], start: &[u32]) -> Vec<u32> {
    let mut seen = FixedBitSet::with_capacity(x.order() as usize);
    let mut list = Vec::new();
    for &s in start {
        if !seen.put(s as usize) {
            list.push(s);
        }
    }
    let mut pos = 0;
    while pos < list.len() {
        let y = list[pos];
        for &g in gens {
            let z = x.conj(g, y);
            if !seen.put(z as usize) {
                list.push(z);
            }
        }
        pos += 1;
    }
    list
}

/// Drops duplicates and subgroups contained in another member; larger groups first.
pub fn prune_contained(mut subs: Vec<Subgroup>) -> Vec<Subgroup> {
    subs.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.members().ones().cmp(b.members().ones())));
    let mut kept: Vec<Subgroup> = Vec::new();
    for s in subs {
        if !kept.iter().any(|k| s.is_subgroup_of(k)) {
            kept.push(s);
        }
    }
    kept
}

/// True if the group is ℓ-elementary for some prime ℓ: a cyclic ℓ'-group times an ℓ-group.
pub fn is_elementary(x: &FiniteGroup, e: &Subgroup) -> bool {
    let n = e.order();
    if n == 1 {
        return true;
    }
    for l in modp::prime_divisors(n) {
        let lpart = n / modp::p_prime_part(n, l);
        let s = sylow_in(x, e, l);
        // the ℓ'-part must be a normal, hence central-cyclic, complement
        let comp = n / lpart;
        let central_cyclic = e.elements().any(|y| {
            x.elem_order(y) == comp && e.gens().iter().all(|&g| x.commute(g, y))
        });
        if central_cyclic && s.order() == lpart {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::chain::PermGroup;
    use crate::groupcore::finite::Budget;
    use crate::groupcore::intersection::intersection_set_maxima;
    use crate::groupcore::perm::Permutation;
    use crate::groupcore::subgroup::sylow;

    fn grp(n: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
        let gs = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        FiniteGroup::from_perm_group(&PermGroup::new(n, gs).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn a5_five_parts_trivial() {
        let g = grp(5, &[&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5]]]);
        let p = sylow(&g, 5);
        let s = intersection_set_maxima(&g, &p, &normalizer(&g, &p)).unwrap();
        let es = qualifying_elementary_subgroups(&g, 5, &s.maxima);
        assert!(!es.is_empty());
        for e in &es {
            assert_ne!(e.order() % 5, 0);
            assert!(is_elementary(&g, e));
        }
    }

    #[test]
    fn s4_two_parts_in_klein() {
        let g = grp(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let p = sylow(&g, 2);
        let s = intersection_set_maxima(&g, &p, &normalizer(&g, &p)).unwrap();
        let es = qualifying_elementary_subgroups(&g, 2, &s.maxima);
        let v = &s.maxima[0];
        for e in &es {
            assert!(is_elementary(&g, e));
            let e2 = sylow_in(&g, e, 2);
            let whole = Subgroup::whole(&g);
            assert!(crate::groupcore::subgroup::conjugate_into(&g, &whole, &e2, v).is_some());
        }
        let s3 = grp(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        let all = Subgroup::whole(&s3);
        let p3 = sylow(&s3, 3);
        let s = intersection_set_maxima(&s3, &p3, &all).unwrap();
        assert!(qualifying_elementary_subgroups(&s3, 3, &s.maxima).is_empty());
    }
}
