//! p-blocks from central characters reduced modulo a prime ideal over p,
//! defect groups, Brauer correspondence and the character subsets attached
//! to a p-subgroup.

use num_integer::Integer;
use serde::Serialize;

use crate::chartab::{CharTable, Cyclotomic};
use crate::classfun::GroupData;
use crate::error::{Error, Result};
use crate::groupcore::{conjugate_into, sylow_in, centralizer, FiniteGroup, Subgroup};
use crate::modp;

/// Element of F_p[x]/(f), coefficients low degree first.
pub type Fe = Vec<u64>;

/// The residue field F_p[x]/(f) together with the image of a root of unity.
#[derive(Clone, Debug)]
pub struct ModularReduction {
    pub p: u64,
    /// all values are read in Q(ζ_m)
    pub m: u64,
    /// p'-part of m
    pub m_prime: u64,
    /// residue degree
    pub d: u32,
    /// f without its leading 1
    pub f: Vec<u64>,
    /// image of ζ_m, an element of order m'
    pub root: Fe,
    powers: Vec<Fe>,
}

impl ModularReduction {
    /// Deterministic reduction for values in Q(ζ_m). The field polynomial is
    /// the least monic irreducible of degree ord_{m'}(p) in the encoding
    /// Σ c_i p^i; the root image is a^((p^d-1)/m') for the least encoded a
    /// giving an element of exact order m', raised to the power `choice_exp`
    /// (coprime to m'); choice_exp = 1 is the default ideal.
    pub fn new(p: u64, m: u64, choice_exp: u64) -> Result<Self> {
        if !modp::is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        let mp = modp::p_prime_part(m, p);
        if choice_exp.gcd(&mp) != 1 {
            return Err(Error::Domain("root choice exponent must be coprime to the p'-part".into()));
        }
        let d = if mp == 1 { 1 } else { (1..).find(|&k| modp::pow_mod(p % mp, k, mp) == 1 % mp).unwrap() as u32 };
        let size = (p as u128).checked_pow(d).ok_or_else(|| Error::Budget("residue field too large".into()))?;
        let f = least_irreducible(p, d);
        let mut r = ModularReduction { p, m, m_prime: mp, d, f, root: Vec::new(), powers: Vec::new() };
        let cofactor = (size - 1) / mp as u128;
        let primes = modp::prime_divisors(mp);
        let mut enc: u128 = 1;
        let base = loop {
            let a = r.decode(enc);
            let c = r.pow(&a, cofactor);
            if !r.is_zero(&c) && primes.iter().all(|&q| !r.is_one(&r.pow(&c, (mp / q) as u128))) {
                break c;
            }
            enc += 1;
            if enc >= size {
                return Err(Error::internal("no element of the required order"));
            }
        };
        // ζ_m ↦ ρ^e with e ≡ (p-part of m)⁻¹ so that ζ_{m'} = ζ_m^{m/m'} ↦ ρ
        let ppart = m / mp;
        let e = modp::inv_mod(ppart % mp.max(2), mp.max(2)) % mp.max(1);
        let e = if mp == 1 { 0 } else { e };
        let base = r.pow(&base, choice_exp as u128);
        r.root = r.pow(&base, e as u128);
        let mut pw = Vec::with_capacity(mp as usize);
        let mut cur = r.one();
        for _ in 0..mp {
            pw.push(cur.clone());
            cur = r.mul(&cur, &r.root);
        }
        r.powers = pw;
        Ok(r)
    }

    /// Default reduction for a table (and any subgroup tables read alongside it).
    pub fn for_tables(p: u64, tables: &[&CharTable]) -> Result<Self> {
        let m = tables.iter().fold(1u64, |a, t| a.lcm(&t.value_modulus()));
        Self::new(p, m, 1)
    }

    /// Root-choice exponents giving other prime ideals over p (outside the Frobenius orbit of 1).
    pub fn alternative_choices(&self, count: usize) -> Vec<u64> {
        let mp = self.m_prime;
        let mut orbit = vec![false; mp.max(1) as usize];
        let mut x = 1 % mp.max(1);
        for _ in 0..self.d {
            orbit[x as usize] = true;
            x = x * self.p % mp.max(1);
        }
        (2..mp).filter(|&j| j.gcd(&mp) == 1 && !orbit[j as usize]).take(count).collect()
    }

    /// At least `count` reductions modulo distinct prime ideals over p. When
    /// Q(ζ_m) has too few such ideals, m is enlarged by further primes (the
    /// table values stay inside the larger field).
    pub fn distinct_ideals(p: u64, m: u64, count: usize) -> Result<Vec<ModularReduction>> {
        let mut m = m.max(1);
        for q in (3u64..).filter(|&q| modp::is_prime(q) && q != p).take(12) {
            let base = Self::new(p, m, 1)?;
            let alts = base.alternative_choices(count.saturating_sub(1));
            if alts.len() + 1 >= count {
                let mut out = vec![base];
                for j in alts {
                    out.push(Self::new(p, m, j)?);
                }
                return Ok(out);
            }
            m *= q;
        }
        Err(Error::Budget(format!("no field with {count} prime ideals over {p} found")))
    }

    fn decode(&self, mut x: u128) -> Fe {
        let mut v = vec![0u64; self.d as usize];
        for c in v.iter_mut() {
            *c = (x % self.p as u128) as u64;
            x /= self.p as u128;
        }
        v
    }

    pub fn zero(&self) -> Fe {
        vec![0; self.d as usize]
    }

    pub fn one(&self) -> Fe {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn is_zero(&self, a: &Fe) -> bool {
        a.iter().all(|&x| x == 0)
    }

    fn is_one(&self, a: &Fe) -> bool {
        a[0] == 1 % self.p && a[1..].iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn scale(&self, a: &Fe, k: u64) -> Fe {
        a.iter().map(|x| x * (k % self.p) % self.p).collect()
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let d = self.d as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * d];
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
        }
        for i in (d..2 * d).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (j, &fj) in self.f.iter().enumerate() {
                    prod[i - d + j] = (prod[i - d + j] + (p - c) * fj) % p;
                }
            }
        }
        prod.truncate(d);
        prod
    }

    fn pow(&self, a: &Fe, mut e: u128) -> Fe {
        let mut r = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Image of an algebraic integer of Q(ζ_m') with m' | m.
    pub fn reduce(&self, v: &Cyclotomic) -> Result<Fe> {
        let mv = v.modulus();
        if self.m % mv != 0 {
            return Err(Error::internal(format!("value modulus {mv} does not divide {}", self.m)));
        }
        let step = self.m / mv;
        let mut acc = self.zero();
        let pb = num_bigint::BigInt::from(self.p);
        for (e, c) in v.coeffs().iter().enumerate() {
            let c = c.mod_floor(&pb);
            let c: u64 = c.try_into().unwrap();
            if c == 0 {
                continue;
            }
            let idx = if self.m_prime == 1 { 0 } else { ((e as u64 * step) % self.m_prime) as usize };
            acc = self.add(&acc, &self.scale(&self.powers[idx], c));
        }
        Ok(acc)
    }
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    // f monic, given in full (leading 1 included)
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let c = *r.last().unwrap();
        let s = r.len() - 1 - df;
        if c != 0 {
            for (j, &x) in f.iter().enumerate() {
                r[s + j] = (r[s + j] + (p - c) * x % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&prod, f, p)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_gcd(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let inv = modp::inv_mod(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|x| x * inv % p).collect();
        let r = trim(poly_rem(&a, &monic, p));
        a = b;
        b = r;
    }
    a
}

/// x^(p^k) mod f
fn frob_power(f: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut x = poly_rem(&[0, 1], f, p);
    for _ in 0..k {
        // raise to the p-th power by repeated multiplication
        let mut r = vec![1u64];
        let mut b = x.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                r = poly_mulmod(&r, &b, f, p);
            }
            b = poly_mulmod(&b, &b, f, p);
            e >>= 1;
        }
        x = r;
    }
    x
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = (f.len() - 1) as u32;
    // subtract x mod f (which is not x when f is linear)
    let x = poly_rem(&[0, 1], f, p);
    let sub_x = |mut v: Vec<u64>| {
        v.resize(v.len().max(x.len()), 0);
        for (a, &b) in v.iter_mut().zip(&x) {
            *a = (*a + p - b) % p;
        }
        v
    };
    let xq = frob_power(f, p, d);
    if trim(sub_x(xq)).iter().any(|&c| c != 0) {
        return false;
    }
    for q in modp::prime_divisors(d as u64) {
        let h = sub_x(frob_power(f, p, d / q as u32));
        if poly_gcd(f.to_vec(), h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Least monic irreducible of degree d, returned without its leading 1.
fn least_irreducible(p: u64, d: u32) -> Vec<u64> {
    let mut enc: u128 = 0;
    loop {
        let mut x = enc;
        let mut f: Vec<u64> = (0..d)
            .map(|_| {
                let c = (x % p as u128) as u64;
                x /= p as u128;
                c
            })
            .collect();
        f.push(1);
        if is_irreducible(&f, p) {
            f.pop();
            return f;
        }
        enc += 1;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Block {
    pub id: usize,
    pub chars: Vec<usize>,
    pub defect: u32,
    #[serde(skip)]
    pub defect_group: Subgroup,
    #[serde(skip)]
    pub central_character: Vec<Fe>,
}

impl Block {
    pub fn defect_group_order(&self, p: u64) -> u64 {
        p.pow(self.defect)
    }

    /// Height-zero members.
    pub fn height_zero(&self, t: &CharTable, p: u64) -> Vec<usize> {
        let min = self.chars.iter().map(|&i| modp::val(t.degrees()[i], p)).min().unwrap_or(0);
        self.chars.iter().copied().filter(|&i| modp::val(t.degrees()[i], p) == min).collect()
    }
}

/// λ_χ(C) = |C|χ(x_C)/χ(1) reduced, for every χ and class C.
pub fn central_characters(t: &CharTable, red: &ModularReduction) -> Result<Vec<Vec<Fe>>> {
    let mut out = Vec::with_capacity(t.num_classes());
    for (i, row) in t.irreducibles().iter().enumerate() {
        let d = num_bigint::BigInt::from(t.degrees()[i]);
        let mut lam = Vec::with_capacity(row.len());
        for (c, v) in row.iter().enumerate() {
            let w = v
                .scale(&num_bigint::BigInt::from(t.classes()[c].size))
                .div_exact(&d)
                .ok_or_else(|| Error::Internal(format!("central character of row {i} is not integral at class {c}")))?;
            lam.push(red.reduce(&w)?);
        }
        out.push(lam);
    }
    Ok(out)
}

/// Partition of Irr(G) into blocks, ordered by least character index.
pub fn block_partition(t: &CharTable, red: &ModularReduction) -> Result<Vec<(Vec<usize>, Vec<Fe>)>> {
    let lam = central_characters(t, red)?;
    let mut parts: Vec<(Vec<usize>, Vec<Fe>)> = Vec::new();
    for (i, l) in lam.into_iter().enumerate() {
        match parts.iter_mut().find(|(_, c)| *c == l) {
            Some(part) => part.0.push(i),
            None => parts.push((vec![i], l)),
        }
    }
    Ok(parts)
}

/// Blocks of G with defects and defect groups.
pub fn blocks(g: &GroupData, p: u64, red: &ModularReduction) -> Result<Vec<Block>> {
    let t = &g.table;
    let n = g.order();
    let vp = modp::val(n, p);
    let mut out = Vec::new();
    for (id, (chars, lam)) in block_partition(t, red)?.into_iter().enumerate() {
        let min = chars.iter().map(|&i| modp::val(t.degrees()[i], p)).min().unwrap();
        let defect = vp - min;
        let dg = defect_group(&g.group, p, &lam, red, defect)?;
        out.push(Block { id, chars, defect, defect_group: dg, central_character: lam });
    }
    Ok(out)
}

fn defect_group(g: &FiniteGroup, p: u64, lam: &[Fe], red: &ModularReduction, defect: u32) -> Result<Subgroup> {
    let best = (0..g.num_classes())
        .filter(|&c| !red.is_zero(&lam[c]))
        .min_by_key(|&c| (modp::val(g.centralizer_order(c), p), c))
        .ok_or_else(|| Error::internal("block with zero central character"))?;
    let cent = centralizer(g, g.classes()[best].rep);
    let d = sylow_in(g, &cent, p);
    if d.order() != p.pow(defect) {
        return Err(Error::Internal(format!(
            "defect group of order {} but defect {} predicts {}",
            d.order(),
            defect,
            p.pow(defect)
        )));
    }
    Ok(d)
}

/// Brauer correspondent of the block of `h` with central character `lam_e`:
/// the block of `g` whose central character is C ↦ λ_e(Σ H-classes in C), if unique.
pub fn brauer_correspondent(g_blocks: &[Block], lam_e: &[Fe], fusion: &[usize], red: &ModularReduction) -> Option<usize> {
    let k = g_blocks.first()?.central_character.len();
    let mut induced = vec![red.zero(); k];
    for (hc, &gc) in fusion.iter().enumerate() {
        induced[gc] = red.add(&induced[gc], &lam_e[hc]);
    }
    let hits: Vec<usize> = g_blocks
        .iter()
        .filter(|b| b.central_character == induced)
        .map(|b| b.id)
        .collect();
    (hits.len() == 1).then(|| hits[0])
}

/// Irr(G,P), Irr₀(G,P) and Irr^p(G,P).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharSubsets {
    pub irr: Vec<usize>,
    pub irr0: Vec<usize>,
    pub irr_p: Vec<usize>,
    /// blocks whose defect group lies in P up to conjugacy
    pub blocks: Vec<usize>,
}

pub fn char_subsets(g: &GroupData, p: u64, pgrp: &Subgroup, blocks: &[Block]) -> CharSubsets {
    let whole = Subgroup::whole(&g.group);
    let mut irr = Vec::new();
    let mut bl = Vec::new();
    for b in blocks {
        if b.defect_group.order() <= pgrp.order() && conjugate_into(&g.group, &whole, &b.defect_group, pgrp).is_some() {
            irr.extend(b.chars.iter().copied());
            bl.push(b.id);
        }
    }
    irr.sort_unstable();
    let target = modp::val(g.order() / pgrp.order(), p);
    let (irr0, irr_p): (Vec<usize>, Vec<usize>) =
        irr.iter().partition(|&&i| modp::val(g.table.degrees()[i], p) == target);
    CharSubsets { irr, irr0, irr_p, blocks: bl }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::groupcore::{normalizer, sylow, Budget};

    fn data(name: &str) -> GroupData {
        let g = FiniteGroup::from_perm_group(&fixtures::by_name(name).unwrap(), &Budget::default()).unwrap();
        GroupData::compute(g, &Budget::default()).unwrap()
    }

    fn degrees(g: &GroupData, b: &Block) -> Vec<u64> {
        b.chars.iter().map(|&i| g.table.degrees()[i]).collect()
    }

    #[test]
    fn s4_and_a5() {
        let s4 = data("S4");
        let red = ModularReduction::for_tables(2, &[&s4.table]).unwrap();
        let bs = blocks(&s4, 2, &red).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].defect_group.order(), 8);
        let a5 = data("A5");
        let red = ModularReduction::for_tables(5, &[&a5.table]).unwrap();
        let bs = blocks(&a5, 5, &red).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(degrees(&a5, &bs[0]), vec![1, 3, 3, 4]);
        assert_eq!(degrees(&a5, &bs[1]), vec![5]);
        assert_eq!(bs[0].defect_group.order(), 5);
        assert_eq!(bs[1].defect, 0);
    }

    #[test]
    fn cyclic_defect_zero() {
        let c = data("C6");
        let red = ModularReduction::for_tables(5, &[&c.table]).unwrap();
        let bs = blocks(&c, 5, &red).unwrap();
        assert_eq!(bs.len(), 6);
        assert!(bs.iter().all(|b| b.defect == 0));
    }

    #[test]
    fn subsets_s4() {
        let s4 = data("S4");
        let red = ModularReduction::for_tables(2, &[&s4.table]).unwrap();
        let bs = blocks(&s4, 2, &red).unwrap();
        let p = sylow(&s4.group, 2);
        let cs = char_subsets(&s4, 2, &p, &bs);
        assert_eq!(cs.irr0.len(), 4);
        assert_eq!(cs.irr_p.iter().map(|&i| s4.table.degrees()[i]).collect::<Vec<_>>(), vec![2]);
        let _ = normalizer(&s4.group, &p);
    }

    #[test]
    fn alternative_ideal_same_partition() {
        let a5 = data("A5");
        for p in [2, 3, 5] {
            let red = ModularReduction::for_tables(p, &[&a5.table]).unwrap();
            let base: Vec<Vec<usize>> = block_partition(&a5.table, &red).unwrap().into_iter().map(|x| x.0).collect();
            for j in red.alternative_choices(2) {
                let alt = ModularReduction::new(p, red.m, j).unwrap();
                let other: Vec<Vec<usize>> = block_partition(&a5.table, &alt).unwrap().into_iter().map(|x| x.0).collect();
                assert_eq!(base, other);
            }
        }
    }
}
