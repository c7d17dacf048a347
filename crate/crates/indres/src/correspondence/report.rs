//! Serializable summaries of an instance.

use serde::Serialize;

use super::{
    degree_congruences, ideal_degree_check, isaacs_navarro, projective_vanishing_check, property_g, split_check,
    inverse_maps_check, GCheck, InCounts, Instance, Level, Property, Quotients, Verdict,
};
use crate::classfun::VirtualCharacter;
use crate::error::Result;
use crate::lattice::Invariants;

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupInfo {
    pub order: u64,
    pub description: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockQuotientsJson {
    pub h_block: usize,
    pub g_block: Option<usize>,
    pub q1: Invariants,
    pub q2: Invariants,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientsJson {
    pub q1: Invariants,
    pub q2: Invariants,
    pub q1_text: String,
    pub q2_text: String,
    pub bracketed: bool,
    pub blocks: Vec<BlockQuotientsJson>,
}

impl From<&Quotients> for QuotientsJson {
    fn from(q: &Quotients) -> Self {
        QuotientsJson {
            q1: q.q1.clone(),
            q2: q.q2.clone(),
            q1_text: q.q1_text(),
            q2_text: q.q2_text(),
            bracketed: q.bracketed,
            blocks: q
                .blocks
                .iter()
                .map(|b| BlockQuotientsJson { h_block: b.h_block, g_block: b.g_block, q1: b.q1.clone(), q2: b.q2.clone() })
                .collect(),
        }
    }
}

/// Identities that hold for every instance; a false entry points at a bug.
#[derive(Clone, Debug, Serialize)]
pub struct SelfChecks {
    /// Proj_P Res ∘ Ind is the identity modulo ℐ(H), and Irr(G,P) ⊆ Ind 𝒞(H,P) + ℐ(G)
    pub inverse_maps: bool,
    /// ℐ(H) is the sum of its block parts
    pub split_h: bool,
    /// ℐ(G) is the sum of its block parts
    pub split_g: bool,
    /// degree congruences on every matching produced
    pub degree_congruences: bool,
    pub ideal_degrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projective_vanishing: Option<bool>,
}

impl SelfChecks {
    pub fn run(inst: &Instance, verdicts: &[Verdict]) -> Result<Self> {
        let degree_congruences = verdicts
            .iter()
            .filter_map(|v| v.witness.as_ref())
            .all(|pairs| degree_congruences(inst, pairs));
        Ok(SelfChecks {
            inverse_maps: inverse_maps_check(inst)?,
            split_h: split_check(&inst.i_h, &inst.h_blocks)?,
            split_g: split_check(inst.i_g()?, &inst.g_blocks)?,
            degree_congruences,
            ideal_degrees: ideal_degree_check(inst),
            projective_vanishing: projective_vanishing_check(inst),
        })
    }

    pub fn all(&self) -> bool {
        self.inverse_maps
            && self.split_h
            && self.split_g
            && self.degree_congruences
            && self.ideal_degrees
            && self.projective_vanishing != Some(false)
    }
}

/// Everything `verify` reports for one instance.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub label: String,
    pub p: u64,
    pub g_order: u64,
    pub h_order: u64,
    pub p_order: u64,
    /// P trivial: every property holds vacuously
    pub degenerate: bool,
    pub s_maxima: Vec<SubgroupInfo>,
    pub rank_i_h: usize,
    pub quotients: QuotientsJson,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub isaacs_navarro: Vec<InCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_g: Option<GCheck>,
    pub self_checks: SelfChecks,
    /// every requested property holds at every level
    pub all_hold: bool,
}

impl PropertyReport {
    /// Checks `props` globally and on every block of G with defect group P;
    /// the count comparison when `with_counts`, and property (G) for a
    /// supplied (block, μ).
    pub fn build(
        inst: &Instance,
        props: &[Property],
        with_counts: bool,
        witness: Option<(usize, &VirtualCharacter)>,
    ) -> Result<Self> {
        let g = &inst.g.group;
        let s_maxima = inst
            .s
            .maxima
            .iter()
            .map(|q| SubgroupInfo { order: q.order(), description: q.describe(g) })
            .collect();
        let mut levels = vec![Level::Global];
        levels.extend(inst.blocks_with_defect_p().into_iter().map(Level::Block));
        let mut verdicts = Vec::new();
        let mut counts = Vec::new();
        for &level in &levels {
            for &prop in props {
                verdicts.push(inst.check_property(prop, level)?);
            }
            if with_counts {
                counts.push(isaacs_navarro(inst, level)?);
            }
        }
        let property_g = witness.map(|(b, mu)| property_g(inst, b, mu)).transpose()?;
        let all_hold = verdicts.iter().all(|v| v.holds)
            && counts.iter().all(|c| c.holds)
            && property_g.as_ref().map_or(true, |c| c.holds);
        let self_checks = SelfChecks::run(inst, &verdicts)?;
        Ok(PropertyReport {
            label: inst.label.clone(),
            p: inst.p,
            g_order: inst.g.order(),
            h_order: inst.h.order(),
            p_order: inst.p_in_g.order(),
            degenerate: inst.is_degenerate(),
            s_maxima,
            rank_i_h: inst.i_h.rank(),
            quotients: QuotientsJson::from(&inst.quotients()?),
            verdicts,
            isaacs_navarro: counts,
            property_g,
            self_checks,
            all_hold,
        })
    }

    /// "G, p | Q1 | IRC | Q2" with IRC read from the global verdict.
    pub fn table_row(&self) -> String {
        let irc = self
            .verdicts
            .iter()
            .find(|v| v.property == Property::Irc && v.level == Level::Global)
            .map(|v| if v.holds { "Yes" } else { "No" })
            .unwrap_or("-");
        format!("{}, {} | {} | {} | {}", self.label, self.p, self.quotients.q1_text, irc, self.quotients.q2_text)
    }
}
