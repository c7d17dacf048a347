//! Passing to a quotient G/L: the properties of (G, P, HL) descend to
//! (G/L, P̃/L, HL/L).

use serde::Serialize;

use super::{Instance, Level, Property};
use crate::classfun::GroupData;
use crate::error::{Error, Result};
use crate::groupcore::{normalizer, sylow_in, Budget, FiniteGroup, PermGroup, Permutation, Subgroup};

/// G/L acting on the cosets of a normal subgroup, with the coset index of
/// every element of G.
pub fn quotient_group(g: &FiniteGroup, l: &Subgroup) -> Result<(PermGroup, Vec<u32>)> {
    if !l.is_normal_in(g, &Subgroup::whole(g)) {
        return Err(Error::Domain("subgroup is not normal".into()));
    }
    let n = g.order() as usize;
    let mut coset = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for y in l.elements() {
            coset[g.mul(x, y) as usize] = id;
        }
    }
    let gens = g.gens().iter().map(|&s| act(g, &coset, s)).collect::<Result<Vec<_>>>()?;
    let q = PermGroup::new(reps.len(), gens)?;
    Ok((q, coset))
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientCheck {
    /// (property, holds for (G,P,HL), holds for the quotient)
    pub verdicts: Vec<(Property, bool, bool)>,
    pub consistent: bool,
}

/// Computes the five properties on (G, P, HL) and on (G/L, P̃/L, HL/L),
/// where P is a Sylow subgroup of `p_tilde` (which must contain L) and
/// H = N_G(P), and checks that every property holding upstairs also holds
/// downstairs.
pub fn quotient_consistency(g: &GroupData, p: u64, p_tilde: &Subgroup, l: &Subgroup, budget: &Budget) -> Result<QuotientCheck> {
    let gg = &g.group;
    if !l.is_subgroup_of(p_tilde) {
        return Err(Error::Precondition("L must lie in the p-subgroup preimage".into()));
    }
    let pgrp = sylow_in(gg, p_tilde, p);
    let h = normalizer(gg, &pgrp);
    let mut hl_gens = h.gens().to_vec();
    hl_gens.extend_from_slice(l.gens());
    let hl = Subgroup::generated(gg, &hl_gens);
    let up = Instance::new("G", g.clone(), p, pgrp, Some(hl.clone()), None, budget)?;

    let (qg, coset) = quotient_group(gg, l)?;
    let qf = FiniteGroup::from_perm_group(&qg, budget)?;
    // images of P̃ and HL through the coset action
    let image_of = |s: &Subgroup| -> Result<Subgroup> {
        let perms: Vec<Permutation> = s.gens().iter().map(|&x| act(gg, &coset, x)).collect::<Result<_>>()?;
        Subgroup::from_perms(&qf, &perms)
    };
    let qd = GroupData::compute(qf.clone(), budget)?;
    let down = Instance::new("G/L", qd, p, image_of(p_tilde)?, Some(image_of(&hl)?), None, budget)?;
    let mut verdicts = Vec::new();
    let mut consistent = true;
    for prop in Property::ALL {
        let a = up.check_property(prop, Level::Global)?.holds;
        let b = down.check_property(prop, Level::Global)?.holds;
        if a && !b {
            consistent = false;
        }
        verdicts.push((prop, a, b));
    }
    Ok(QuotientCheck { verdicts, consistent })
}

/// The permutation of cosets induced by left multiplication with x.
fn act(g: &FiniteGroup, coset: &[u32], x: u32) -> Result<Permutation> {
    let k = coset.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut reps = vec![u32::MAX; k];
    for (y, &c) in coset.iter().enumerate() {
        if reps[c as usize] == u32::MAX {
            reps[c as usize] = y as u32;
        }
    }
    Permutation::from_images(reps.iter().map(|&r| coset[g.mul(x, r) as usize]).collect())
}
