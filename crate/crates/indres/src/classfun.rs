//! Virtual characters as integer vectors over Irr, with induction and
//! restriction through class fusion.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::chartab::{character_table, reconcile, CharTable, Cyclotomic};
use crate::error::{Error, Result};
use crate::groupcore::{Budget, FiniteGroup, Subgroup};
use crate::modp::{self, ModField};

/// An element of ℤIrr(G), tied to the table it was built over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VirtualCharacter {
    pub table: String,
    pub coeffs: Vec<i64>,
}

impl VirtualCharacter {
    pub fn zero(t: &CharTable) -> Self {
        VirtualCharacter { table: t.id().to_string(), coeffs: vec![0; t.num_classes()] }
    }

    pub fn irr(t: &CharTable, i: usize) -> Self {
        let mut v = Self::zero(t);
        v.coeffs[i] = 1;
        v
    }

    pub fn from_coeffs(t: &CharTable, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != t.num_classes() {
            return Err(Error::Domain(format!(
                "{} coefficients for a table with {} irreducibles",
                coeffs.len(),
                t.num_classes()
            )));
        }
        Ok(VirtualCharacter { table: t.id().to_string(), coeffs })
    }

    /// The regular character.
    pub fn regular(t: &CharTable) -> Self {
        VirtualCharacter { table: t.id().to_string(), coeffs: t.degrees().iter().map(|&d| d as i64).collect() }
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.table != other.table {
            return Err(Error::Domain(format!(
                "virtual characters over different tables ({} and {})",
                self.table, other.table
            )));
        }
        Ok(())
    }

    pub fn check_table(&self, t: &CharTable) -> Result<()> {
        if self.table != t.id() {
            return Err(Error::Domain(format!("character over table {} used with table {}", self.table, t.id())));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(VirtualCharacter {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        VirtualCharacter { table: self.table.clone(), coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    /// True for genuine characters (all multiplicities nonnegative).
    pub fn is_character(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    pub fn degree(&self, t: &CharTable) -> i64 {
        self.coeffs.iter().zip(t.degrees()).map(|(a, &d)| a * d as i64).sum()
    }

    pub fn values(&self, t: &CharTable) -> Vec<Cyclotomic> {
        t.class_values(&self.coeffs)
    }

    /// ⟨χ, θ⟩; Irr is orthonormal so this is the coordinate dot product.
    pub fn inner(&self, other: &Self) -> Result<i64> {
        self.same(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum())
    }

    /// χ̄(g) = χ(g⁻¹).
    pub fn dual(&self, t: &CharTable) -> Self {
        let mut c = vec![0; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[t.conj_row(i)] += a;
        }
        VirtualCharacter { table: self.table.clone(), coeffs: c }
    }

    /// Keeps only the given coordinates.
    pub fn project(&self, keep: &[usize]) -> Self {
        let mut c = vec![0; self.coeffs.len()];
        for &i in keep {
            c[i] = self.coeffs[i];
        }
        VirtualCharacter { table: self.table.clone(), coeffs: c }
    }

    /// Sorted (index, multiplicity) list of nonzero constituents.
    pub fn constituents(&self) -> Vec<(usize, i64)> {
        self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, &a)| (i, a)).collect()
    }
}

/// A permutation group together with its character table on the same class order.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub group: FiniteGroup,
    pub table: CharTable,
}

impl GroupData {
    pub fn compute(group: FiniteGroup, budget: &Budget) -> Result<Self> {
        let table = character_table(&group, budget)?;
        Ok(GroupData { group, table })
    }

    /// Uses a supplied table after matching it to the group's classes.
    pub fn with_table(group: FiniteGroup, table: &CharTable) -> Result<Self> {
        let table = reconcile(table, &group)?;
        Ok(GroupData { group, table })
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn trivial(&self) -> VirtualCharacter {
        VirtualCharacter::irr(&self.table, 0)
    }
}

/// Class fusion of a subgroup and the restriction matrix R[χ][φ] = ⟨Res χ, φ⟩.
#[derive(Clone, Debug)]
pub struct Fusion {
    pub big_table: String,
    pub small_table: String,
    pub class_map: Vec<usize>,
    pub res: Vec<Vec<i64>>,
}

impl Fusion {
    /// `embed[i]` is the element of `big` equal to element `i` of `small`.
    pub fn new(big: &GroupData, small: &GroupData, embed: &[u32]) -> Result<Self> {
        let sg = &small.group;
        if embed.len() as u64 != sg.order() {
            return Err(Error::Domain("embedding does not cover the subgroup".into()));
        }
        let class_map: Vec<usize> = sg.classes().iter().map(|c| big.group.class_of(embed[c.rep as usize])).collect();
        for (c, cl) in sg.classes().iter().enumerate() {
            if big.group.classes()[class_map[c]].rep_order != cl.rep_order {
                return Err(Error::Domain("class fusion does not preserve element orders".into()));
            }
        }
        let res = restriction_matrix(&big.table, &small.table, &class_map)?;
        Ok(Fusion { big_table: big.table.id().into(), small_table: small.table.id().into(), class_map, res })
    }

    /// Fusion for a subgroup given as a member set of `big`.
    pub fn of_subgroup(big: &GroupData, small: &GroupData, sub: &Subgroup) -> Result<Self> {
        let embed: Vec<u32> = sub.elements().collect();
        Self::new(big, small, &embed)
    }

    /// Fusion for a group whose permutations live in the same symmetric group.
    pub fn by_permutations(big: &GroupData, small: &GroupData) -> Result<Self> {
        let embed = small
            .group
            .elements()
            .iter()
            .map(|p| {
                if p.degree() != big.group.degree() {
                    return None;
                }
                big.group.index_of(p)
            })
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::Domain("not a subgroup".into()))?;
        Self::new(big, small, &embed)
    }

    pub fn induce(&self, phi: &VirtualCharacter) -> Result<VirtualCharacter> {
        if phi.table != self.small_table {
            return Err(Error::Domain("character is not over the subgroup table".into()));
        }
        let coeffs = self
            .res
            .iter()
            .map(|row| row.iter().zip(&phi.coeffs).map(|(r, a)| r * a).sum())
            .collect();
        Ok(VirtualCharacter { table: self.big_table.clone(), coeffs })
    }

    pub fn restrict(&self, chi: &VirtualCharacter) -> Result<VirtualCharacter> {
        if chi.table != self.big_table {
            return Err(Error::Domain("character is not over the group table".into()));
        }
        let ks = self.res.first().map_or(0, |r| r.len());
        let mut coeffs = vec![0i64; ks];
        for (row, &a) in self.res.iter().zip(&chi.coeffs) {
            if a != 0 {
                for (c, r) in coeffs.iter_mut().zip(row) {
                    *c += a * r;
                }
            }
        }
        Ok(VirtualCharacter { table: self.small_table.clone(), coeffs })
    }
}

/// R[χ][φ] = (1/|H|) Σ_c |c| χ(fus c) φ(c⁻¹), computed modulo a large prime
/// and checked against degrees.
pub fn restriction_matrix(g: &CharTable, h: &CharTable, class_map: &[usize]) -> Result<Vec<Vec<i64>>> {
    let f = ModField::for_exponent(g.value_modulus().lcm(&h.value_modulus()));
    let gv = g.mod_values(&f);
    let hv = h.mod_values(&f);
    let kh = h.num_classes();
    let ninv = f.inv(h.order() % f.q);
    let sizes: Vec<u64> = h.classes().iter().map(|c| c.size % f.q).collect();
    let mut out = Vec::with_capacity(g.num_classes());
    for (ci, chi) in gv.iter().enumerate() {
        let res: Vec<u64> = class_map.iter().map(|&c| chi[c]).collect();
        let mut row = Vec::with_capacity(kh);
        for phi in &hv {
            let mut acc = 0u64;
            for c in 0..kh {
                let t = f.mul(f.mul(res[c], phi[h.inv_class(c)]), sizes[c]);
                acc = f.add(acc, t);
            }
            let m = f.lift(f.mul(acc, ninv));
            if m < 0 {
                return Err(Error::internal("negative restriction multiplicity"));
            }
            row.push(m);
        }
        let deg: i64 = row.iter().zip(h.degrees()).map(|(m, &d)| m * d as i64).sum();
        if deg != g.degrees()[ci] as i64 {
            return Err(Error::internal("restriction does not preserve the degree"));
        }
        out.push(row);
    }
    Ok(out)
}

/// χ × θ over the product table built by `CharTable::direct_product(a, b)`.
pub fn outer_product(
    chi: &VirtualCharacter,
    theta: &VirtualCharacter,
    a: &CharTable,
    b: &CharTable,
    product: &CharTable,
) -> Result<VirtualCharacter> {
    chi.check_table(a)?;
    theta.check_table(b)?;
    if product.num_classes() != a.num_classes() * b.num_classes() {
        return Err(Error::Domain("product table has the wrong size".into()));
    }
    let kb = b.num_classes();
    let mut coeffs = vec![0i64; product.num_classes()];
    for (i, &x) in chi.coeffs.iter().enumerate() {
        if x != 0 {
            for (j, &y) in theta.coeffs.iter().enumerate() {
                coeffs[i * kb + j] = x * y;
            }
        }
    }
    VirtualCharacter::from_coeffs(product, coeffs)
}

/// Irr(G | φ) for φ ∈ Irr(L), L normal: constituents whose restriction contains φ.
pub fn lying_over(fusion: &Fusion, phi: usize) -> Vec<usize> {
    (0..fusion.res.len()).filter(|&x| fusion.res[x][phi] != 0).collect()
}

/// π_φ(χ) = Σ_{ξ ∈ Irr(G|φ)} ⟨χ, ξ⟩ ξ. `l` must be normal in `g`.
pub fn pi_phi(
    chi: &VirtualCharacter,
    g: &GroupData,
    l: &Subgroup,
    fusion: &Fusion,
    phi: usize,
) -> Result<VirtualCharacter> {
    chi.check_table(&g.table)?;
    if !l.is_normal_in(&g.group, &Subgroup::whole(&g.group)) {
        return Err(Error::Domain("subgroup is not normal".into()));
    }
    if fusion.big_table != g.table.id() {
        return Err(Error::Domain("fusion does not belong to this group".into()));
    }
    Ok(chi.project(&lying_over(fusion, phi)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// residues of χ(1)
    Global,
    /// residues of the p'-part of χ(1)
    PPrimePart,
}

/// M_l counts: characters (within `subset` if given) with degree ≡ ±l mod p,
/// for l = 1..(p-1)/2 (l = 1 when p = 2). Characters divisible by p are not counted.
pub fn ml_counts(t: &CharTable, p: u64, subset: Option<&[usize]>, mode: CountMode) -> BTreeMap<u64, usize> {
    let top = if p == 2 { 1 } else { (p - 1) / 2 };
    let mut out: BTreeMap<u64, usize> = (1..=top).map(|l| (l, 0)).collect();
    let all: Vec<usize> = (0..t.num_classes()).collect();
    for &i in subset.unwrap_or(&all) {
        let mut d = t.degrees()[i];
        if mode == CountMode::PPrimePart {
            d = modp::p_prime_part(d, p);
        }
        let r = d % p;
        if r == 0 {
            continue;
        }
        let l = r.min(p - r);
        *out.get_mut(&l).unwrap() += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{PermGroup, Permutation};

    fn grp(n: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
        let gs = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        FiniteGroup::from_perm_group(&PermGroup::new(n, gs).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn s3_induction_from_c3() {
        let b = Budget::default();
        let g = GroupData::compute(grp(3, &[&[&[1, 2]], &[&[1, 2, 3]]]), &b).unwrap();
        let c3 = Subgroup::generated(&g.group, &[g.group.index_of(&Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()).unwrap()]);
        let h = GroupData::compute(c3.to_group(&g.group).unwrap(), &b).unwrap();
        let f = Fusion::of_subgroup(&g, &h, &c3).unwrap();
        let omega = VirtualCharacter::irr(&h.table, 1);
        let ind = f.induce(&omega).unwrap();
        assert_eq!(ind.coeffs, vec![0, 0, 1]);
        let res = f.restrict(&VirtualCharacter::irr(&g.table, 2)).unwrap();
        assert_eq!(res.coeffs, vec![0, 1, 1]);
        // π_ω(ρ) = 2χ₂
        let rho = VirtualCharacter::regular(&g.table);
        assert_eq!(pi_phi(&rho, &g, &c3, &f, 1).unwrap().coeffs, vec![0, 0, 2]);
        let m = ml_counts(&g.table, 3, None, CountMode::Global);
        assert_eq!(m[&1], 3);
    }

    #[test]
    fn c4_dual() {
        let g = GroupData::compute(grp(4, &[&[&[1, 2, 3, 4]]]), &Budget::default()).unwrap();
        let t = &g.table;
        let nonreal: Vec<usize> = (0..4).filter(|&i| t.conj_row(i) != i).collect();
        assert_eq!(nonreal.len(), 2);
        let d = VirtualCharacter::irr(t, nonreal[0]).dual(t);
        assert_eq!(d, VirtualCharacter::irr(t, nonreal[1]));
        assert_eq!(d.dual(t), VirtualCharacter::irr(t, nonreal[0]));
    }
}
