//! Slow reference computations used to cross-check the main algorithms on
//! small groups.

use std::collections::HashSet;

use super::cyclotomic::Cyclotomic;
use super::linalg::{charpoly, nullspace, roots, Mat};
use super::table::CharTable;
use crate::error::{Error, Result};
use crate::groupcore::{FiniteGroup, PermGroup, Permutation};
use crate::modp::{self, add_mod, inv_mod, mul_mod, pow_mod, sub_mod};

/// Conjugacy classes by literal conjugation of every element by every element.
/// Returns the class sizes in ascending order.
pub fn brute_class_sizes(g: &PermGroup) -> Vec<usize> {
    let elems: Vec<Permutation> = g.chain().elements();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut sizes = Vec::new();
    for x in &elems {
        if seen.contains(x) {
            continue;
        }
        let mut cls: HashSet<Permutation> = HashSet::new();
        for t in &elems {
            cls.insert(t.mul(x).mul(&t.inverse()));
        }
        sizes.push(cls.len());
        seen.extend(cls);
    }
    sizes.sort_unstable();
    sizes
}

/// Character table from the full set of class multiplication coefficients,
/// counted over all pairs of elements, and the eigenvectors of one generic
/// combination of the class matrices.
pub fn brute_table(g: &FiniteGroup) -> Result<CharTable> {
    let k = g.num_classes();
    let n = g.order();
    let e = g.exponent();
    // a[j][l][i] = #{(x, y) ∈ C_j × C_l : x y = z_i}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    let reps: Vec<u32> = g.classes().iter().map(|c| c.rep).collect();
    for x in 0..n as u32 {
        let j = g.class_of(x);
        for y in 0..n as u32 {
            let z = g.mul(x, y);
            let i = g.class_of(z);
            if reps[i] == z {
                a[j][g.class_of(y)][i] += 1;
            }
        }
    }
    let mut q = modp::prime_one_mod(e, 8 * ((n as f64).sqrt() as u64 + 2) + k as u64 * 4);
    let mut seed = 0x9e37_79b9u64;
    for _attempt in 0..32 {
        let coef: Vec<u64> = (0..k)
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (seed >> 33) % q
            })
            .collect();
        let m: Mat = (0..k)
            .map(|l| {
                (0..k)
                    .map(|i| (0..k).fold(0u64, |s, j| add_mod(s, mul_mod(coef[j], a[j][l][i] % q, q), q)))
                    .collect()
            })
            .collect();
        let lams = roots(&charpoly(&m, q), q);
        if lams.len() == k {
            let mut rows = Vec::with_capacity(k);
            for lam in lams {
                let shifted: Mat = (0..k)
                    .map(|r| (0..k).map(|c| if r == c { sub_mod(m[r][c], lam, q) } else { m[r][c] }).collect())
                    .collect();
                let ns = nullspace(&shifted, k, q);
                if ns.len() != 1 || ns[0][0] == 0 {
                    return Err(Error::internal("degenerate eigenspace"));
                }
                let s = inv_mod(ns[0][0], q);
                let w: Vec<u64> = ns[0].iter().map(|&x| mul_mod(x, s, q)).collect();
                rows.push(values(g, q, &w)?);
            }
            return super::dixon::finish(g, rows);
        }
        q = modp::prime_one_mod(e, q + 1);
    }
    Err(Error::internal("no separating combination found"))
}

fn values(g: &FiniteGroup, q: u64, w: &[u64]) -> Result<Vec<Cyclotomic>> {
    let n = g.order();
    let e = g.exponent();
    let cls = g.classes();
    let mut norm = 0u64;
    for (l, c) in cls.iter().enumerate() {
        let t = mul_mod(w[l], w[g.inv_class(l)], q);
        norm = add_mod(norm, mul_mod(t, inv_mod(c.size % q, q), q), q);
    }
    let target = mul_mod(n % q, inv_mod(norm, q), q);
    let d = (1..=n)
        .take_while(|d| d * d <= n)
        .find(|&d| mul_mod(d % q, d % q, q) == target)
        .ok_or_else(|| Error::internal("degree not found"))?;
    let chi: Vec<u64> = (0..cls.len())
        .map(|l| mul_mod(d % q, mul_mod(w[l], inv_mod(cls[l].size % q, q), q), q))
        .collect();
    let z = modp::root_of_unity(q, e);
    // values on powers of the representative, by literal powering
    cls.iter()
        .map(|c| {
            let o = c.rep_order;
            let zo = pow_mod(z, e / o, q);
            let mut mult = vec![0u64; o as usize];
            let oinv = inv_mod(o % q, q);
            for (r, m) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                for t in 0..o {
                    let x = chi[g.class_of(g.pow(c.rep, t as i64))];
                    let zz = pow_mod(zo, (o - (r as u64 * t) % o) % o, q);
                    acc = add_mod(acc, mul_mod(x, zz, q), q);
                }
                *m = mul_mod(acc, oinv, q);
                if *m > d {
                    return Err(Error::internal("multiplicity out of range"));
                }
            }
            Ok(Cyclotomic::from_multiplicities(o, &mult))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::groupcore::Budget;

    #[test]
    fn agrees_with_main_table() {
        let gs = vec![
            Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
            Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
        ];
        let pg = PermGroup::new(4, gs).unwrap();
        assert_eq!(brute_class_sizes(&pg), vec![1, 3, 6, 6, 8]);
        let g = FiniteGroup::from_perm_group(&pg, &Budget::default()).unwrap();
        assert_eq!(brute_table(&g).unwrap(), character_table(&g, &Budget::default()).unwrap());
    }
}
