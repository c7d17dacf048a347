//! Induced lattices for a triple (G, P, H), the quotients 𝒬₁ and 𝒬₂, the
//! correspondence properties and the checks built on them.

mod checks;
mod induced;
mod properties;
mod quotient;
mod report;
mod witness;

use std::cell::OnceCell;

use serde::Serialize;

pub use checks::{
    degree_congruences, ideal_degree_check, isaacs_navarro, projective_vanishing_check, split_check, inverse_maps_check,
    InCounts,
};
pub use induced::{brauer_completeness, brute_induced_lattice, induced_generators, induced_lattice, span};
pub use properties::{Level, Pair, Property, Verdict};
pub use quotient::{quotient_group, quotient_consistency, QuotientCheck};
pub use report::{BlockQuotientsJson, PropertyReport, QuotientsJson, SelfChecks, SubgroupInfo};
pub use witness::{
    extraspecial_witness, omega, product_dual, product_id, property_g, transform_i, transform_r, GCheck, ProductData,
};

use crate::blocks::{blocks, brauer_correspondent, char_subsets, Block, CharSubsets, ModularReduction};
use crate::chartab::CharTable;
use crate::classfun::{Fusion, GroupData, VirtualCharacter};
use crate::error::{Error, Result};
use crate::groupcore::{intersection_set_maxima, normalizer, sylow, Budget, IntersectionSet, Subgroup};
use crate::lattice::{quotient_invariants, IntLattice, Invariants};
use crate::modp;

/// All data attached to one (G, p, P, H).
pub struct Instance {
    pub label: String,
    pub p: u64,
    pub g: GroupData,
    pub h: GroupData,
    pub p_in_g: Subgroup,
    pub h_in_g: Subgroup,
    pub p_in_h: Subgroup,
    /// H → G
    pub fusion: Fusion,
    pub s: IntersectionSet,
    pub red: ModularReduction,
    pub g_blocks: Vec<Block>,
    pub h_blocks: Vec<Block>,
    pub g_sets: CharSubsets,
    pub h_sets: CharSubsets,
    /// Brauer correspondent in G of each block of H, when defined
    pub correspondents: Vec<Option<usize>>,
    pub i_h: IntLattice,
    i_g: OnceCell<IntLattice>,
    budget: Budget,
}

/// Invariant factors of 𝒬₁ and 𝒬₂ for one block of H.
#[derive(Clone, Debug, Serialize)]
pub struct BlockQuotients {
    pub h_block: usize,
    pub g_block: Option<usize>,
    pub q1: Invariants,
    pub q2: Invariants,
}

#[derive(Clone, Debug, Serialize)]
pub struct Quotients {
    pub q1: Invariants,
    pub q2: Invariants,
    /// one entry per block of H inside Irr(H,P), in display order
    pub blocks: Vec<BlockQuotients>,
    /// more than one block of G has P as a defect group
    pub bracketed: bool,
}

impl Quotients {
    pub fn q1_text(&self) -> String {
        self.render(|b| &b.q1, &self.q1)
    }

    pub fn q2_text(&self) -> String {
        self.render(|b| &b.q2, &self.q2)
    }

    fn render(&self, part: impl Fn(&BlockQuotients) -> &Invariants, whole: &Invariants) -> String {
        if self.bracketed {
            self.blocks.iter().map(|b| format!("[{}]", part(b))).collect::<Vec<_>>().join(" + ")
        } else {
            whole.to_string()
        }
    }
}

/// The character sets one property compares.
pub(crate) struct Sides {
    pub g_irr0: Vec<usize>,
    pub h_irr0: Vec<usize>,
    pub g_cp: Vec<usize>,
    pub h_cp: Vec<usize>,
}

impl Instance {
    /// Sets up (G, P, H). `h` defaults to N_G(P); `h_table` replaces the
    /// computed table of H after reconciliation.
    pub fn new(
        label: impl Into<String>,
        g: GroupData,
        p: u64,
        p_in_g: Subgroup,
        h_in_g: Option<Subgroup>,
        h_table: Option<&CharTable>,
        budget: &Budget,
    ) -> Result<Self> {
        if !modp::is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if !p_in_g.is_p_group(p) {
            return Err(Error::Precondition(format!("P (order {}) is not a {p}-group", p_in_g.order())));
        }
        let h_in_g = h_in_g.unwrap_or_else(|| normalizer(&g.group, &p_in_g));
        let s = intersection_set_maxima(&g.group, &p_in_g, &h_in_g)?;
        let hg = h_in_g.to_group(&g.group)?;
        let h = match h_table {
            Some(t) => GroupData::with_table(hg, t)?,
            None => GroupData::compute(hg, budget)?,
        };
        let p_in_h = Subgroup::from_perms(&h.group, &p_in_g.perms(&g.group))?;
        let fusion = Fusion::of_subgroup(&g, &h, &h_in_g)?;
        let red = ModularReduction::for_tables(p, &[&g.table, &h.table])?;
        let g_blocks = blocks(&g, p, &red)?;
        let h_blocks = blocks(&h, p, &red)?;
        let g_sets = char_subsets(&g, p, &p_in_g, &g_blocks);
        let h_sets = char_subsets(&h, p, &p_in_h, &h_blocks);
        let correspondents = h_blocks
            .iter()
            .map(|e| brauer_correspondent(&g_blocks, &e.central_character, &fusion.class_map, &red))
            .collect();
        let h_maxima = s.transfer(&g.group, &h.group)?;
        let i_h = induced_lattice(&h, p, &h_maxima, budget)?;
        Ok(Instance {
            label: label.into(),
            p,
            g,
            h,
            p_in_g,
            h_in_g,
            p_in_h,
            fusion,
            s,
            red,
            g_blocks,
            h_blocks,
            g_sets,
            h_sets,
            correspondents,
            i_h,
            i_g: OnceCell::new(),
            budget: budget.clone(),
        })
    }

    /// Sylow P and H = N_G(P).
    pub fn sylow(label: impl Into<String>, g: GroupData, p: u64, budget: &Budget) -> Result<Self> {
        let pg = sylow(&g.group, p);
        Self::new(label, g, p, pg, None, None, budget)
    }

    /// P = a defect group of block `b` of G, H = N_G(P).
    pub fn defect_group(label: impl Into<String>, g: GroupData, p: u64, b: usize, budget: &Budget) -> Result<Self> {
        let red = ModularReduction::for_tables(p, &[&g.table])?;
        let bl = blocks(&g, p, &red)?;
        let blk = bl.get(b).ok_or_else(|| Error::Domain(format!("block index {b} out of range ({} blocks)", bl.len())))?;
        let pg = blk.defect_group.clone();
        Self::new(label, g, p, pg, None, None, budget)
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// P trivial: the properties are reported but carry no information.
    pub fn is_degenerate(&self) -> bool {
        self.p_in_g.order() == 1
    }

    /// ℐ(G,P,𝒮), built on first use.
    pub fn i_g(&self) -> Result<&IntLattice> {
        if let Some(l) = self.i_g.get() {
            return Ok(l);
        }
        let l = induced_lattice(&self.g, self.p, &self.s.maxima, &self.budget)?;
        Ok(self.i_g.get_or_init(|| l))
    }

    pub fn k_g(&self) -> usize {
        self.g.table.num_classes()
    }

    pub fn k_h(&self) -> usize {
        self.h.table.num_classes()
    }

    /// |G:H|_{p'}
    pub fn index_p_prime(&self) -> u64 {
        modp::p_prime_part(self.g.order() / self.h.order(), self.p)
    }

    /// Proj_P Res^G_H χ for an irreducible χ.
    pub fn proj_res(&self, chi: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.k_h()];
        for &j in &self.h_sets.irr {
            v[j] = self.fusion.res[chi][j];
        }
        v
    }

    pub fn proj_res_virtual(&self, chi: &VirtualCharacter) -> Result<VirtualCharacter> {
        Ok(self.fusion.restrict(chi)?.project(&self.h_sets.irr))
    }

    /// Ind^G_H φ for an irreducible φ.
    pub fn ind(&self, phi: usize) -> Vec<i64> {
        self.fusion.res.iter().map(|row| row[phi]).collect()
    }

    /// Blocks of G having P as a defect group.
    pub fn blocks_with_defect_p(&self) -> Vec<usize> {
        self.g_sets
            .blocks
            .iter()
            .copied()
            .filter(|&b| self.g_blocks[b].defect_group.order() == self.p_in_g.order())
            .collect()
    }

    /// The block e of H with defect group P and Brauer correspondent b.
    pub fn correspondent_of(&self, b: usize) -> Result<usize> {
        if !self.blocks_with_defect_p().contains(&b) {
            return Err(Error::Precondition(format!("block {b} of G does not have P as a defect group")));
        }
        let hits: Vec<usize> = self
            .h_sets
            .blocks
            .iter()
            .copied()
            .filter(|&e| self.correspondents[e] == Some(b) && self.h_blocks[e].defect_group.order() == self.p_in_h.order())
            .collect();
        match hits.as_slice() {
            [e] => Ok(*e),
            [] => Err(Error::Precondition(format!("block {b} has no Brauer correspondent in H"))),
            _ => Err(Error::Internal(format!("block {b} has several Brauer correspondents"))),
        }
    }

    pub(crate) fn sides(&self, level: Level) -> Result<Sides> {
        match level {
            Level::Global => Ok(Sides {
                g_irr0: self.g_sets.irr0.clone(),
                h_irr0: self.h_sets.irr0.clone(),
                g_cp: self.g_sets.irr_p.clone(),
                h_cp: self.h_sets.irr_p.clone(),
            }),
            Level::Block(b) => {
                let e = self.correspondent_of(b)?;
                let split = |chars: &[usize], zero: &[usize]| -> (Vec<usize>, Vec<usize>) {
                    chars.iter().partition(|i| zero.contains(i))
                };
                let (g0, gp) = split(&self.g_blocks[b].chars, &self.g_sets.irr0);
                let (h0, hp) = split(&self.h_blocks[e].chars, &self.h_sets.irr0);
                Ok(Sides { g_irr0: g0, h_irr0: h0, g_cp: gp, h_cp: hp })
            }
        }
    }

    /// 𝒬₁ and 𝒬₂, globally and per block of H in Irr(H,P).
    pub fn quotients(&self) -> Result<Quotients> {
        let k = self.k_h();
        let mut order: Vec<usize> = self.h_sets.blocks.clone();
        order.sort_by_key(|&e| (std::cmp::Reverse(self.h_blocks[e].defect), self.h_blocks[e].chars[0]));
        let mut out = Vec::new();
        for e in order {
            let chars = &self.h_blocks[e].chars;
            let amb = IntLattice::coordinates(k, chars);
            let i1 = self.i_h.restrict_to(chars);
            let cp: Vec<usize> = chars.iter().copied().filter(|i| self.h_sets.irr_p.contains(i)).collect();
            let i2 = IntLattice::coordinates(k, &cp).sum(&self.i_h)?.restrict_to(chars);
            out.push(BlockQuotients {
                h_block: e,
                g_block: self.correspondents[e],
                q1: quotient_invariants(&amb, &i1)?,
                q2: quotient_invariants(&amb, &i2)?,
            });
        }
        let amb = IntLattice::coordinates(k, &self.h_sets.irr);
        let q1 = quotient_invariants(&amb, &self.i_h.restrict_to(&self.h_sets.irr))?;
        let i2 = IntLattice::coordinates(k, &self.h_sets.irr_p).sum(&self.i_h)?.restrict_to(&self.h_sets.irr);
        let q2 = quotient_invariants(&amb, &i2)?;
        let bracketed = self.blocks_with_defect_p().len() > 1;
        Ok(Quotients { q1, q2, blocks: out, bracketed })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::groupcore::FiniteGroup;

    pub(crate) fn data(name: &str) -> GroupData {
        let b = Budget::default();
        let g = FiniteGroup::from_perm_group(&fixtures::by_name(name).unwrap(), &b).unwrap();
        GroupData::compute(g, &b).unwrap()
    }

    #[test]
    fn s4_two_quotients() {
        let inst = Instance::sylow("S4", data("S4"), 2, &Budget::default()).unwrap();
        assert_eq!(inst.i_h.rank(), 3);
        let q = inst.quotients().unwrap();
        assert_eq!(q.q1_text(), "Z^2");
        assert_eq!(q.q2_text(), "Z^2");
    }

    #[test]
    fn a5_five_projectives() {
        let inst = Instance::sylow("A5", data("A5"), 5, &Budget::default()).unwrap();
        // 𝒮 = {1}: ℐ(H) is spanned by projectives, rank = number of 5-regular classes of D10
        assert_eq!(inst.h.order(), 10);
        assert_eq!(inst.i_h.rank(), 2);
    }

    #[test]
    fn s3_whole_group_is_zero() {
        let g = data("S3");
        let p = sylow(&g.group, 3);
        let all = Subgroup::whole(&g.group);
        let inst = Instance::new("S3", g, 3, p, Some(all), None, &Budget::default()).unwrap();
        assert!(inst.i_h.is_zero());
        assert!(inst.i_g().unwrap().is_zero());
    }

    #[test]
    fn brauer_completeness_small() {
        for name in ["S3", "S4", "A5", "Q8", "D8", "SL2(3)"] {
            assert!(brauer_completeness(&data(name), &Budget::default()).unwrap(), "{name}");
        }
    }
}
