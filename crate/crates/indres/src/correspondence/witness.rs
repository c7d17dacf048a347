//! Virtual characters of G × H: ω(G,b,H), the maps I_μ and R_μ, and the
//! check of property (G) for a supplied μ.
//!
//! Characters of G × H are χ × ψ for χ ∈ Irr(G), ψ ∈ Irr(H), stored at index
//! χ·k_H + ψ. The product table itself is never formed.

use num_integer::Integer;
use serde::Serialize;

use super::Instance;
use crate::chartab::CharTable;
use crate::classfun::{Fusion, GroupData, VirtualCharacter};
use crate::error::{Error, Result};
use crate::groupcore::{qualifying_elementary_subgroups, sylow, FiniteGroup, Subgroup};
use crate::lattice::IntLattice;
use crate::modp::ModField;

/// Identifier used for virtual characters over G × H.
pub fn product_id(g: &CharTable, h: &CharTable) -> String {
    format!("{}x{}", g.id(), h.id())
}

/// G × H as an enumerated group, element (a, b) at index a·|H| + b.
pub struct ProductData {
    pub group: FiniteGroup,
    pub id: String,
}

impl ProductData {
    pub fn new(inst: &Instance) -> Result<Self> {
        Ok(ProductData {
            group: FiniteGroup::direct_product(&inst.g.group, &inst.h.group)?,
            id: product_id(&inst.g.table, &inst.h.table),
        })
    }
}

fn idx(inst: &Instance, chi: usize, psi: usize) -> usize {
    chi * inst.k_h() + psi
}

/// ω(G,b,H) = Σ_{χ∈b} Σ_{φ∈e} ⟨Res χ, φ⟩ χ × φ̄ with e the Brauer correspondent.
pub fn omega(inst: &Instance, b: usize) -> Result<VirtualCharacter> {
    let e = inst.correspondent_of(b)?;
    let mut coeffs = vec![0i64; inst.k_g() * inst.k_h()];
    for &chi in &inst.g_blocks[b].chars {
        for &phi in &inst.h_blocks[e].chars {
            coeffs[idx(inst, chi, inst.h.table.conj_row(phi))] += inst.fusion.res[chi][phi];
        }
    }
    Ok(VirtualCharacter { table: product_id(&inst.g.table, &inst.h.table), coeffs })
}

fn check_product(inst: &Instance, mu: &VirtualCharacter) -> Result<()> {
    if mu.table != product_id(&inst.g.table, &inst.h.table) || mu.coeffs.len() != inst.k_g() * inst.k_h() {
        return Err(Error::Domain("virtual character is not over G × H for this instance".into()));
    }
    Ok(())
}

/// μ̄(g, h) = μ(g⁻¹, h⁻¹).
pub fn product_dual(inst: &Instance, mu: &VirtualCharacter) -> Result<VirtualCharacter> {
    check_product(inst, mu)?;
    let mut coeffs = vec![0i64; mu.coeffs.len()];
    for chi in 0..inst.k_g() {
        for psi in 0..inst.k_h() {
            let a = mu.coeffs[idx(inst, chi, psi)];
            if a != 0 {
                coeffs[idx(inst, inst.g.table.conj_row(chi), inst.h.table.conj_row(psi))] += a;
            }
        }
    }
    Ok(VirtualCharacter { table: mu.table.clone(), coeffs })
}

/// I_μ(φ)(g) = (1/|H|) Σ_h μ(g,h) φ(h). In coefficients, χ × ψ sends φ to ⟨ψ, φ̄⟩ χ.
pub fn transform_i(inst: &Instance, mu: &VirtualCharacter, phi: &VirtualCharacter) -> Result<VirtualCharacter> {
    check_product(inst, mu)?;
    phi.check_table(&inst.h.table)?;
    let mut out = VirtualCharacter::zero(&inst.g.table);
    for (j, &c) in phi.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let psi = inst.h.table.conj_row(j);
        for chi in 0..inst.k_g() {
            out.coeffs[chi] += c * mu.coeffs[idx(inst, chi, psi)];
        }
    }
    Ok(out)
}

/// R_μ(χ)(h) = (1/|G|) Σ_g μ(g,h) χ(g). In coefficients, ξ × ψ sends χ to ⟨ξ, χ̄⟩ ψ.
pub fn transform_r(inst: &Instance, mu: &VirtualCharacter, chi: &VirtualCharacter) -> Result<VirtualCharacter> {
    check_product(inst, mu)?;
    chi.check_table(&inst.g.table)?;
    let mut out = VirtualCharacter::zero(&inst.h.table);
    for (i, &c) in chi.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let xi = inst.g.table.conj_row(i);
        for psi in 0..inst.k_h() {
            out.coeffs[psi] += c * mu.coeffs[idx(inst, xi, psi)];
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GCheck {
    pub block: usize,
    pub h_block: usize,
    /// μ − ω lies in ℐ(G×H, ΔP, Δ𝒮)
    pub congruence: bool,
    /// each I_μ(φ) and R_μ̄(χ) has one height-zero constituent, multiplicity ±1
    pub constituents: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

/// Property (G) for block b of G and a supplied μ over G × H.
pub fn property_g(inst: &Instance, b: usize, mu: &VirtualCharacter) -> Result<GCheck> {
    check_product(inst, mu)?;
    let e = inst.correspondent_of(b)?;
    let gb = &inst.g_blocks[b].chars;
    let he = &inst.h_blocks[e].chars;
    let he_dual: Vec<usize> = he.iter().map(|&j| inst.h.table.conj_row(j)).collect();
    let coords: Vec<(usize, usize)> = gb.iter().flat_map(|&x| he_dual.iter().map(move |&y| (x, y))).collect();
    for (i, &c) in mu.coeffs.iter().enumerate() {
        if c != 0 && !coords.contains(&(i / inst.k_h(), i % inst.k_h())) {
            return Err(Error::Domain("μ has constituents outside the block b ⊗ ē".into()));
        }
    }
    let mut failures = Vec::new();
    let om = omega(inst, b)?;
    let diff: Vec<i64> = coords.iter().map(|&(x, y)| mu.coeffs[idx(inst, x, y)] - om.coeffs[idx(inst, x, y)]).collect();
    let lat = diagonal_lattice(inst, &coords)?;
    let congruence = lat.contains(&diff)?;
    if !congruence {
        failures.push("μ − ω is not in the diagonal induced lattice".into());
    }
    let sides = inst.sides(super::Level::Block(b))?;
    let mu_bar = product_dual(inst, mu)?;
    let single = |v: &VirtualCharacter, zero: &[usize]| -> bool {
        let hz: Vec<i64> = zero.iter().map(|&i| v.coeffs[i]).filter(|&a| a != 0).collect();
        hz.len() == 1 && hz[0].abs() == 1
    };
    for &phi in &sides.h_irr0 {
        let img = transform_i(inst, mu, &VirtualCharacter::irr(&inst.h.table, phi))?;
        if !single(&img, &sides.g_irr0) {
            failures.push(format!("I_mu of H-irreducible {phi} has constituents {:?}", img.constituents()));
        }
    }
    for &chi in &sides.g_irr0 {
        let img = transform_r(inst, &mu_bar, &VirtualCharacter::irr(&inst.g.table, chi))?;
        if !single(&img, &sides.h_irr0) {
            failures.push(format!("R_mubar of G-irreducible {chi} has constituents {:?}", img.constituents()));
        }
    }
    let constituents = failures.len() == usize::from(!congruence);
    Ok(GCheck { block: b, h_block: e, congruence, constituents, holds: congruence && constituents, failures })
}

/// ℐ(G×H, ΔP, Δ𝒮) ∩ 𝒞(G×H, b ⊗ ē), in the listed coordinates. The lattice
/// splits along blocks, so the block part is spanned by the block
/// projections of the generators Ind_E φ.
fn diagonal_lattice(inst: &Instance, coords: &[(usize, usize)]) -> Result<IntLattice> {
    let dim = coords.len();
    if inst.s.maxima.is_empty() {
        return Ok(IntLattice::zero(dim));
    }
    let prod = ProductData::new(inst)?;
    let nh = inst.h.order() as u32;
    let h_index = |x: u32| -> Result<u32> {
        inst.h.group.index_of(inst.g.group.elem(x)).ok_or_else(|| Error::internal("P is not inside H"))
    };
    let mut maxima = Vec::new();
    for q in &inst.s.maxima {
        let gens = q.gens().iter().map(|&x| Ok(x * nh + h_index(x)?)).collect::<Result<Vec<u32>>>()?;
        maxima.push(Subgroup::generated(&prod.group, &gens));
    }
    let subs = qualifying_elementary_subgroups(&prod.group, inst.p, &maxima);
    let m = inst.g.table.value_modulus().lcm(&inst.h.table.value_modulus());
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for e in &subs {
        let ed = GroupData::compute(e.to_group(&prod.group)?, inst.budget())?;
        let embed: Vec<u32> = e.elements().collect();
        let f = ModField::for_exponent(m.lcm(&ed.table.value_modulus()));
        let gv = inst.g.table.mod_values(&f);
        let hv = inst.h.table.mod_values(&f);
        let ev = ed.table.mod_values(&f);
        let et = &ed.table;
        let cls: Vec<(usize, usize, u64)> = ed
            .group
            .classes()
            .iter()
            .map(|c| {
                let x = embed[c.rep as usize];
                (inst.g.group.class_of(x / nh), inst.h.group.class_of(x % nh), c.size % f.q)
            })
            .collect();
        let ninv = f.inv(ed.order() % f.q);
        for (phi, row) in ev.iter().enumerate() {
            let mut v = Vec::with_capacity(dim);
            for &(x, y) in coords {
                let mut acc = 0u64;
                for (c, &(gc, hc, size)) in cls.iter().enumerate() {
                    let t = f.mul(f.mul(gv[x][gc], hv[y][hc]), f.mul(row[et.inv_class(c)], size));
                    acc = f.add(acc, t);
                }
                let mult = f.lift(f.mul(acc, ninv));
                if mult < 0 {
                    return Err(Error::internal(format!("negative multiplicity for constituent {phi}")));
                }
                v.push(mult);
            }
            gens.push(v);
        }
    }
    IntLattice::from_generators(dim, gens.iter().map(|v| v.as_slice()))
}

/// The witness for the order-1000 example: with L the normal Sylow
/// 5-subgroup, C = Z(L), χ the degree-5 irreducible of L under block b and φ
/// the linear character of C under e,
/// μ = ω(G,b,H) − (Ind_L^G χ) × (Ind_C^H φ)‾.
/// Returns b (the first block of G with defect group P and degree-5
/// members) and μ.
pub fn extraspecial_witness(inst: &Instance) -> Result<(usize, VirtualCharacter)> {
    let g = &inst.g;
    let b = inst
        .blocks_with_defect_p()
        .into_iter()
        .find(|&b| inst.g_blocks[b].chars.iter().any(|&i| g.table.degrees()[i] == 5))
        .ok_or_else(|| Error::Precondition("no block with defect group P containing a degree-5 character".into()))?;
    let e = inst.correspondent_of(b)?;
    let l = sylow(&g.group, 5);
    if !l.is_normal_in(&g.group, &Subgroup::whole(&g.group)) {
        return Err(Error::Precondition("the Sylow 5-subgroup is not normal".into()));
    }
    let ld = GroupData::compute(l.to_group(&g.group)?, inst.budget())?;
    let fl = Fusion::of_subgroup(g, &ld, &l)?;
    let chi5 = *inst.g_blocks[b].chars.iter().find(|&&i| g.table.degrees()[i] == 5).unwrap();
    let chi_l = single_constituent(&fl.res[chi5])?;
    let ind_l: Vec<i64> = fl.res.iter().map(|r| r[chi_l]).collect();

    let c_in_g = Subgroup::filter(&g.group, &l, |x| l.gens().iter().all(|&s| g.group.commute(s, x)));
    let c_in_h = Subgroup::from_perms(&inst.h.group, &c_in_g.perms(&g.group))?;
    let cd = GroupData::compute(c_in_h.to_group(&inst.h.group)?, inst.budget())?;
    let fc = Fusion::of_subgroup(&inst.h, &cd, &c_in_h)?;
    let phi_c = single_constituent(&fc.res[inst.h_blocks[e].chars[0]])?;
    let ind_c: Vec<i64> = fc.res.iter().map(|r| r[phi_c]).collect();

    let mut mu = omega(inst, b)?;
    for (x, &a) in ind_l.iter().enumerate() {
        for (y, &c) in ind_c.iter().enumerate() {
            if a != 0 && c != 0 {
                mu.coeffs[idx(inst, x, inst.h.table.conj_row(y))] -= a * c;
            }
        }
    }
    Ok((b, mu))
}

fn single_constituent(row: &[i64]) -> Result<usize> {
    let nz: Vec<usize> = (0..row.len()).filter(|&j| row[j] != 0).collect();
    match nz.as_slice() {
        [j] => Ok(*j),
        _ => Err(Error::Precondition("restriction is not a multiple of one irreducible".into())),
    }
}
