//! Consistency checks that hold for every instance; a failure means a bug.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{Instance, Level, Pair};
use crate::blocks::Block;
use crate::error::Result;
use crate::lattice::IntLattice;
use crate::modp;

/// Both halves of the mutual-inverse statement for Ind and Proj_P Res:
/// Proj_P Res Ind φ ≡ φ mod ℐ(H) for φ ∈ Irr(H,P), and
/// Irr(G,P) ⊆ Ind 𝒞(H,P) + ℐ(G).
pub fn inverse_maps_check(inst: &Instance) -> Result<bool> {
    for &phi in &inst.h_sets.irr {
        let ind = inst.ind(phi);
        let mut back = vec![0i64; inst.k_h()];
        for (chi, &a) in ind.iter().enumerate() {
            if a != 0 {
                for (x, y) in back.iter_mut().zip(inst.proj_res(chi)) {
                    *x += a * y;
                }
            }
        }
        back[phi] -= 1;
        if !inst.i_h.contains(&back)? {
            return Ok(false);
        }
    }
    let mut l = inst.i_g()?.clone();
    for &phi in &inst.h_sets.irr {
        let v: Vec<BigInt> = inst.ind(phi).into_iter().map(BigInt::from).collect();
        l.insert(&v)?;
    }
    for &chi in &inst.g_sets.irr {
        let mut e = vec![0i64; inst.k_g()];
        e[chi] = 1;
        if !l.contains(&e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A lattice equals the sum of its restrictions to the blocks.
pub fn split_check(lat: &IntLattice, blocks: &[Block]) -> Result<bool> {
    let mut acc = IntLattice::zero(lat.dim());
    for b in blocks {
        acc = acc.sum(&lat.restrict_to(&b.chars))?;
    }
    Ok(&acc == lat)
}

/// χ(1)_{p'} ≡ sign·|G:H|_{p'}·φ(1)_{p'} (mod p) for every matched pair.
pub fn degree_congruences(inst: &Instance, pairs: &[Pair]) -> bool {
    let p = inst.p as i128;
    let m = inst.index_p_prime() as i128;
    pairs.iter().all(|pr| {
        let a = modp::p_prime_part(inst.g.table.degrees()[pr.chi], inst.p) as i128;
        let b = modp::p_prime_part(inst.h.table.degrees()[pr.phi], inst.p) as i128;
        (a - pr.sign as i128 * m * b).rem_euclid(p) == 0
    })
}

/// Every member of ℐ(H,P,𝒮) has degree divisible by p^{v_p|H:P|+1}; checked on a basis.
pub fn ideal_degree_check(inst: &Instance) -> bool {
    if inst.s.maxima.iter().any(|q| q.order() == inst.p_in_g.order()) {
        return true;
    }
    let e = modp::val(inst.h.order() / inst.p_in_h.order(), inst.p) + 1;
    let modulus = BigInt::from(inst.p).pow(e);
    inst.i_h.hnf().iter().all(|row| {
        let d: BigInt = row.iter().zip(inst.h.table.degrees()).map(|(c, &d)| c * BigInt::from(d)).sum();
        (d % &modulus).is_zero()
    })
}

/// With 𝒮 = {1}, ℐ(H) consists of the class functions vanishing on p-singular
/// elements. Checks the basis by evaluation; None when 𝒮 ≠ {1}.
pub fn projective_vanishing_check(inst: &Instance) -> Option<bool> {
    if inst.s.maxima.len() != 1 || inst.s.maxima[0].order() != 1 {
        return None;
    }
    let t = &inst.h.table;
    let singular: Vec<usize> = (0..t.num_classes()).filter(|&c| t.classes()[c].rep_order % inst.p == 0).collect();
    Some(inst.i_h.hnf().iter().all(|row| {
        let coeffs: Vec<i64> = row.iter().map(|x| x.to_i64().expect("small lattice entries")).collect();
        let vals = t.class_values(&coeffs);
        singular.iter().all(|&c| vals[c].is_zero())
    }))
}

/// Counts M_l on both sides with l running over 1..(p-1)/2.
#[derive(Clone, Debug, Serialize)]
pub struct InCounts {
    pub level: Level,
    /// |G:H|_{p'} mod p
    pub multiplier: u64,
    pub g: BTreeMap<u64, usize>,
    pub h: BTreeMap<u64, usize>,
    pub holds: bool,
}

/// M_{ml}(G, ·) = M_l(H, ·) on height-zero characters, with m = |G:H|_{p'}.
/// For P Sylow and H = N_G(P) at global level this is the count comparison
/// between Irr_{p'}(G) and Irr_{p'}(N_G(P)).
pub fn isaacs_navarro(inst: &Instance, level: Level) -> Result<InCounts> {
    let sides = inst.sides(level)?;
    let p = inst.p;
    let m = inst.index_p_prime() % p;
    let count = |degs: Vec<u64>, mult: u64| -> BTreeMap<u64, usize> {
        let top = if p == 2 { 1 } else { (p - 1) / 2 };
        let mut out: BTreeMap<u64, usize> = (1..=top).map(|l| (l, 0)).collect();
        for d in degs {
            let r = modp::p_prime_part(d, p) % p;
            // r ≡ ±mult·l
            for l in 1..=top {
                let t = mult * l % p;
                if r == t || r == (p - t) % p {
                    *out.get_mut(&l).unwrap() += 1;
                    break;
                }
            }
        }
        out
    };
    let gd = sides.g_irr0.iter().map(|&i| inst.g.table.degrees()[i]).collect();
    let hd = sides.h_irr0.iter().map(|&i| inst.h.table.degrees()[i]).collect();
    let g = count(gd, m);
    let h = count(hd, 1);
    let holds = g == h;
    Ok(InCounts { level, multiplier: m, g, h, holds })
}
