use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::chain::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::modp;

/// Size limits for the enumerative algorithms.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_order: u64,
    pub max_classes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_order: 10_000_000, max_classes: 2_000 }
    }
}

/// Elements are looked up by their images of a base, packed into a u128 when
/// they fit. Only group members may be looked up this way.
#[derive(Clone)]
enum Lookup {
    Packed { bits: u32, map: FxHashMap<u128, u32> },
    Wide(FxHashMap<Vec<u32>, u32>),
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Element index of the representative.
    pub rep: u32,
    pub size: u64,
    pub rep_order: u64,
    pub members: Vec<u32>,
}

/// A finite permutation group with all elements listed, an O(|base|) element
/// index, inverses, element orders and conjugacy classes. Element 0 is the
/// identity.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    gens: Vec<u32>,
    elems: Vec<Permutation>,
    base: Vec<u32>,
    lookup: Lookup,
    inv: Vec<u32>,
    orders: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjClass>,
    exponent: u64,
    power_maps: BTreeMap<u64, Vec<usize>>,
    inv_class: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {}, degree {}, {} classes)", self.order(), self.degree, self.classes.len())
    }
}

fn bits_for(degree: usize) -> u32 {
    (usize::BITS - (degree.max(2) - 1).leading_zeros()).max(1)
}

impl FiniteGroup {
    /// Enumerates a permutation group and computes its classes in canonical order.
    pub fn from_perm_group(g: &PermGroup, budget: &Budget) -> Result<Self> {
        let order = g.order_u64()?;
        if order > budget.max_order {
            return Err(Error::Budget(format!(
                "group order {order} exceeds the enumeration budget {}; supply external tables",
                budget.max_order
            )));
        }
        let chain = g.chain();
        let elems = chain.elements();
        let base = chain.base();
        Self::assemble(g.degree(), g.generators(), elems, base, true)
    }

    /// Builds the group on an explicit element list. `base` must separate the
    /// elements (any base of an overgroup does).
    pub fn from_elements(degree: usize, gens: &[Permutation], elems: Vec<Permutation>, base: Vec<u32>) -> Result<Self> {
        Self::assemble(degree, gens, elems, base, true)
    }

    fn assemble(degree: usize, gens: &[Permutation], elems: Vec<Permutation>, base: Vec<u32>, classes: bool) -> Result<Self> {
        if elems.is_empty() || !elems[0].is_identity() {
            return Err(Error::internal("element list must start with the identity"));
        }
        let lookup = build_lookup(degree, &base, &elems)?;
        let mut g = FiniteGroup {
            degree,
            gens: Vec::new(),
            elems,
            base,
            lookup,
            inv: Vec::new(),
            orders: Vec::new(),
            class_of: Vec::new(),
            classes: Vec::new(),
            exponent: 1,
            power_maps: BTreeMap::new(),
            inv_class: Vec::new(),
        };
        g.gens = gens
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| g.index_of(p).ok_or_else(|| Error::internal("generator missing from element list")))
            .collect::<Result<_>>()?;
        g.inv = g.elems.iter().map(|p| g.index_of(&p.inverse()).unwrap()).collect();
        g.orders = g.elems.iter().map(|p| p.order() as u32).collect();
        if classes {
            g.compute_classes();
        }
        Ok(g)
    }

    /// G x H acting on the disjoint union of the point sets. Element (a, b) has
    /// index a*|H| + b and class (i, j) has index i*k_H + j; this pair order is
    /// kept instead of the canonical class sort so that product tables line up.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let na = a.order() as usize;
        let nb = b.order() as usize;
        let mut elems = Vec::with_capacity(na * nb);
        for x in &a.elems {
            for y in &b.elems {
                elems.push(x.direct_sum(y));
            }
        }
        let shift = a.degree as u32;
        let mut base = a.base.clone();
        base.extend(b.base.iter().map(|&x| x + shift));
        let id_a = Permutation::identity(a.degree);
        let id_b = Permutation::identity(b.degree);
        let mut gens: Vec<Permutation> = a.gens.iter().map(|&i| a.elems[i as usize].direct_sum(&id_b)).collect();
        gens.extend(b.gens.iter().map(|&j| id_a.direct_sum(&b.elems[j as usize])));
        let mut g = Self::assemble(a.degree + b.degree, &gens, elems, base, false)?;
        let kb = b.classes.len();
        g.class_of = (0..na * nb)
            .map(|i| a.class_of[i / nb] * kb as u32 + b.class_of[i % nb])
            .collect();
        g.classes = Vec::with_capacity(a.classes.len() * kb);
        for ca in &a.classes {
            for cb in &b.classes {
                let mut members = Vec::with_capacity(ca.members.len() * cb.members.len());
                for &x in &ca.members {
                    for &y in &cb.members {
                        members.push(x * nb as u32 + y);
                    }
                }
                g.classes.push(ConjClass {
                    rep: ca.rep * nb as u32 + cb.rep,
                    size: ca.size * cb.size,
                    rep_order: num_integer::lcm(ca.rep_order, cb.rep_order),
                    members,
                });
            }
        }
        g.finish_class_data();
        Ok(g)
    }

    fn compute_classes(&mut self) {
        let n = self.elems.len();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let gi: Vec<(u32, u32)> = self.gens.iter().map(|&s| (s, self.inv[s as usize])).collect();
        for x in 0..n as u32 {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            class_of[x as usize] = id;
            let mut orbit = vec![x];
            let mut pos = 0;
            while pos < orbit.len() {
                let y = orbit[pos];
                for &(s, sinv) in &gi {
                    let z = self.mul(self.mul(s, y), sinv);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        orbit.push(z);
                    }
                }
                pos += 1;
            }
            raw.push(orbit);
        }
        let mut classes: Vec<ConjClass> = raw
            .into_iter()
            .map(|mut members| {
                members.sort_unstable();
                let rep = *members
                    .iter()
                    .min_by(|&&a, &&b| self.elems[a as usize].images().cmp(self.elems[b as usize].images()))
                    .unwrap();
                ConjClass {
                    rep,
                    size: members.len() as u64,
                    rep_order: self.orders[rep as usize] as u64,
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.rep_order, a.size)
                .cmp(&(b.rep_order, b.size))
                .then_with(|| self.elems[a.rep as usize].images().cmp(self.elems[b.rep as usize].images()))
        });
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = ci as u32;
            }
        }
        self.class_of = class_of;
        self.classes = classes;
        self.finish_class_data();
    }

    fn finish_class_data(&mut self) {
        self.exponent = self.classes.iter().fold(1, |e, c| num_integer::lcm(e, c.rep_order));
        self.inv_class = self
            .classes
            .iter()
            .map(|c| self.class_of[self.inv[c.rep as usize] as usize] as usize)
            .collect();
        let mut pm = BTreeMap::new();
        for r in modp::prime_divisors(self.order()) {
            let map = self
                .classes
                .iter()
                .map(|c| self.class_of[self.pow(c.rep, r as i64) as usize] as usize)
                .collect();
            pm.insert(r, map);
        }
        self.power_maps = pm;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    /// Generator element indices (identity generators dropped).
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn gen_perms(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&i| self.elems[i as usize].clone()).collect()
    }

    pub fn elem(&self, i: u32) -> &Permutation {
        &self.elems[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn to_perm_group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.gen_perms()).expect("degrees agree")
    }

    #[inline]
    fn key<F: Fn(u32) -> u32>(&self, img: F) -> Option<u32> {
        match &self.lookup {
            Lookup::Packed { bits, map } => {
                let mut k: u128 = 0;
                for &b in &self.base {
                    k = (k << bits) | img(b) as u128;
                }
                map.get(&k).copied()
            }
            Lookup::Wide(map) => {
                let k: Vec<u32> = self.base.iter().map(|&b| img(b)).collect();
                map.get(&k).copied()
            }
        }
    }

    /// Index of a permutation, or None if it is not an element.
    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        if p.degree() != self.degree {
            return None;
        }
        let i = self.key(|b| p.image(b))?;
        (self.elems[i as usize] == *p).then_some(i)
    }

    /// Product a*b (a applied first).
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let pa = &self.elems[a as usize];
        let pb = &self.elems[b as usize];
        self.key(|x| pb.image(pa.image(x))).expect("closed under products")
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// t * x * t^-1.
    #[inline]
    pub fn conj(&self, t: u32, x: u32) -> u32 {
        let pt = &self.elems[t as usize];
        let px = &self.elems[x as usize];
        let pti = &self.elems[self.inv[t as usize] as usize];
        self.key(|b| pti.image(px.image(pt.image(b)))).expect("closed under conjugation")
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        let o = self.orders[a as usize] as i64;
        let mut e = e.rem_euclid(o) as u64;
        let mut acc = 0u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elem_order(&self, a: u32) -> u64 {
        self.orders[a as usize] as u64
    }

    /// The p-part and p'-part of an element: a = a_p * a_p' (they commute).
    pub fn p_part(&self, a: u32, p: u64) -> u32 {
        let o = self.elem_order(a);
        let pp = o / modp::p_prime_part(o, p);
        let m = o / pp;
        if pp == 1 {
            return 0;
        }
        // exponent = 1 mod pp, 0 mod m
        let t = m as i64 * modinv_i64(m as i64, pp as i64);
        self.pow(a, t)
    }

    pub fn p_prime_part(&self, a: u32, p: u64) -> u32 {
        let ap = self.p_part(a, p);
        self.mul(a, self.inv(ap))
    }

    pub fn class_of(&self, a: u32) -> usize {
        self.class_of[a as usize] as usize
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn inv_class(&self, c: usize) -> usize {
        self.inv_class[c]
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.order() / self.classes[c].size
    }

    pub fn power_maps(&self) -> &BTreeMap<u64, Vec<usize>> {
        &self.power_maps
    }

    /// Class of rep(c)^k for any integer k.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.class_of(self.pow(self.classes[c].rep, k))
    }
}

fn modinv_i64(a: i64, m: i64) -> i64 {
    let e = num_integer::Integer::extended_gcd(&a.rem_euclid(m), &m);
    e.x.rem_euclid(m)
}

fn build_lookup(degree: usize, base: &[u32], elems: &[Permutation]) -> Result<Lookup> {
    let bits = bits_for(degree);
    let lk = if (base.len() as u32) * bits <= 128 {
        let mut map = FxHashMap::default();
        map.reserve(elems.len());
        for (i, p) in elems.iter().enumerate() {
            let mut k: u128 = 0;
            for &b in base {
                k = (k << bits) | p.image(b) as u128;
            }
            if map.insert(k, i as u32).is_some() {
                return Err(Error::internal("base does not separate the elements"));
            }
        }
        Lookup::Packed { bits, map }
    } else {
        let mut map = FxHashMap::default();
        for (i, p) in elems.iter().enumerate() {
            let k: Vec<u32> = base.iter().map(|&b| p.image(b)).collect();
            if map.insert(k, i as u32).is_some() {
                return Err(Error::internal("base does not separate the elements"));
            }
        }
        Lookup::Wide(map)
    };
    Ok(lk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::perm::Permutation;

    pub(crate) fn sym(n: usize) -> FiniteGroup {
        let a = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
        let c: Vec<u32> = (1..=n as u32).collect();
        let b = Permutation::from_cycles(n, &[&c]).unwrap();
        FiniteGroup::from_perm_group(&PermGroup::new(n, vec![a, b]).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn s4_classes() {
        let g = sym(4);
        let sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 6, 8, 6]);
        let orders: Vec<u64> = g.classes().iter().map(|c| c.rep_order).collect();
        assert_eq!(orders, vec![1, 2, 2, 3, 4]);
        assert_eq!(g.exponent(), 12);
        // square of a 4-cycle is a double transposition
        assert_eq!(g.power_maps()[&2][4], 1);
        for i in 0..24u32 {
            assert_eq!(g.mul(i, g.inv(i)), 0);
            let p = g.p_part(i, 2);
            let q = g.p_prime_part(i, 2);
            assert_eq!(g.mul(p, q), i);
            assert!(g.commute(p, q));
        }
    }

    #[test]
    fn product_classes() {
        let a = sym(3);
        let g = FiniteGroup::direct_product(&a, &a).unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(g.num_classes(), 9);
        for (ci, c) in g.classes().iter().enumerate() {
            for &m in &c.members {
                assert_eq!(g.class_of(m), ci);
            }
            assert_eq!(c.members.len() as u64, c.size);
        }
        // conjugation orbits agree with the pair classes
        for x in 0..36u32 {
            for &s in g.gens() {
                assert_eq!(g.class_of(g.conj(s, x)), g.class_of(x));
            }
        }
    }
}
