use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::cyclotomic::{Cyclotomic, CyclotomicJson};
use super::table::{CharTable, ClassInfo};
use crate::error::{Error, Result};
use crate::groupcore::FiniteGroup;
use crate::modp::ModField;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ClassJson {
    pub rep_order: u64,
    pub size: u64,
    #[serde(default)]
    pub powermap: BTreeMap<u64, usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TableJson {
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<Vec<CyclotomicJson>>,
}

impl CharTable {
    pub fn to_json(&self) -> TableJson {
        TableJson {
            order: self.order(),
            exponent: self.exponent(),
            classes: self
                .classes()
                .iter()
                .map(|c| ClassJson { rep_order: c.rep_order, size: c.size, powermap: c.power_map.clone() })
                .collect(),
            irreducibles: self.irreducibles().iter().map(|r| r.iter().map(|v| v.to_json()).collect()).collect(),
        }
    }

    /// Parses and fully re-verifies a table.
    pub fn from_json(j: &TableJson) -> Result<CharTable> {
        let k = j.classes.len();
        for c in &j.classes {
            if c.powermap.values().any(|&i| i >= k) {
                return Err(Error::Format("power map index out of range".into()));
            }
        }
        let classes = j
            .classes
            .iter()
            .map(|c| ClassInfo { rep_order: c.rep_order, size: c.size, power_map: c.powermap.clone() })
            .collect();
        let irr = j
            .irreducibles
            .iter()
            .map(|r| r.iter().map(Cyclotomic::from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let t = CharTable::new(j.order, classes, irr, true)?;
        if t.exponent() != j.exponent {
            return Err(Error::Integrity(format!(
                "declared exponent {} but class orders give {}",
                j.exponent,
                t.exponent()
            )));
        }
        Ok(t)
    }
}

pub fn parse_table(s: &str) -> Result<CharTable> {
    let j: TableJson = serde_json::from_str(s).map_err(|e| Error::Format(format!("table file: {e}")))?;
    CharTable::from_json(&j)
}

pub fn load_table(path: impl AsRef<Path>) -> Result<CharTable> {
    parse_table(&std::fs::read_to_string(path)?)
}

pub fn save_table(t: &CharTable, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(&t.to_json())?)?;
    Ok(())
}

/// Rewrites a table onto the class order of `g`. Classes are matched by
/// element order, size and power maps, and a candidate matching is accepted
/// only if the central characters it induces are eigenvectors of the class
/// multiplication of `g` (an exact check of all structure constants modulo a
/// large prime).
pub fn reconcile(t: &CharTable, g: &FiniteGroup) -> Result<CharTable> {
    let k = g.num_classes();
    if t.order() != g.order() || t.num_classes() != k {
        return Err(Error::Consistency(format!(
            "table is for order {} with {} classes; group has order {} with {} classes",
            t.order(),
            t.num_classes(),
            g.order(),
            k
        )));
    }
    let f = ModField::for_exponent(t.value_modulus());
    let vals = t.mod_values(&f);
    let central = |sigma: &[usize]| -> Vec<Vec<u64>> {
        // w[χ][group class] for the matching sigma: table class -> group class
        vals.iter()
            .zip(t.degrees())
            .map(|(row, &d)| {
                let dinv = f.inv(d % f.q);
                let mut w = vec![0u64; k];
                for (c, &gc) in sigma.iter().enumerate() {
                    w[gc] = f.mul(f.mul(row[c], t.classes()[c].size % f.q), dinv);
                }
                w
            })
            .collect()
    };
    let products = class_products(g);
    let accept = |sigma: &[usize]| -> bool {
        let w = central(sigma);
        w.iter().all(|wv| {
            (0..k).all(|j| {
                (0..k).all(|l| {
                    // ω_j ω_l = Σ_i a_{jli} ω_i
                    let lhs = f.mul(wv[j], wv[l]);
                    let mut rhs = 0u64;
                    for &(i, cnt) in &products[j][l] {
                        rhs = f.add(rhs, f.mul(cnt % f.q, wv[i]));
                    }
                    lhs == rhs
                })
            })
        })
    };
    let mut sigma = vec![usize::MAX; k];
    let mut used = vec![false; k];
    let mut tries = 0usize;
    if !search(t, g, 0, &mut sigma, &mut used, &accept, &mut tries) {
        return Err(Error::Consistency("table class data does not match the group".into()));
    }
    let mut inv = vec![0usize; k];
    for (c, &gc) in sigma.iter().enumerate() {
        inv[gc] = c;
    }
    let irr: Vec<Vec<Cyclotomic>> = t
        .irreducibles()
        .iter()
        .map(|r| inv.iter().map(|&c| r[c].clone()).collect())
        .collect();
    CharTable::new(t.order(), super::dixon::class_infos(g), irr, false)
}

const MAX_TRIES: usize = 100_000;

fn search(
    t: &CharTable,
    g: &FiniteGroup,
    c: usize,
    sigma: &mut [usize],
    used: &mut [bool],
    accept: &dyn Fn(&[usize]) -> bool,
    tries: &mut usize,
) -> bool {
    let k = sigma.len();
    if c == k {
        *tries += 1;
        return accept(sigma);
    }
    if *tries > MAX_TRIES {
        return false;
    }
    let tc = &t.classes()[c];
    for gc in 0..k {
        let cl = &g.classes()[gc];
        if used[gc] || cl.rep_order != tc.rep_order || cl.size != tc.size {
            continue;
        }
        // power maps into already matched classes must agree
        let ok = tc.power_map.iter().all(|(&p, &img)| {
            let target = if img == c { Some(gc) } else if img < c { Some(sigma[img]) } else { None };
            target.map_or(true, |tg| g.power_class(gc, p as i64) == tg)
        });
        if !ok {
            continue;
        }
        sigma[c] = gc;
        used[gc] = true;
        if search(t, g, c + 1, sigma, used, accept, tries) {
            return true;
        }
        sigma[c] = usize::MAX;
        used[gc] = false;
    }
    false
}

/// Sparse structure constants a_{jli} = #{x ∈ C_j : x⁻¹ z_i ∈ C_l}, indexed [j][l].
fn class_products(g: &FiniteGroup) -> Vec<Vec<Vec<(usize, u64)>>> {
    let k = g.num_classes();
    let mut out = vec![vec![Vec::new(); k]; k];
    for j in 0..k {
        let mut m = vec![vec![0u64; k]; k];
        for &x in &g.classes()[j].members {
            let xi = g.inv(x);
            for (i, cl) in g.classes().iter().enumerate() {
                m[g.class_of(g.mul(xi, cl.rep))][i] += 1;
            }
        }
        for (l, row) in m.into_iter().enumerate() {
            out[j][l] = row.into_iter().enumerate().filter(|&(_, c)| c != 0).collect();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::groupcore::{Budget, PermGroup, Permutation};

    fn s4() -> FiniteGroup {
        let gs = vec![
            Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
            Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
        ];
        FiniteGroup::from_perm_group(&PermGroup::new(4, gs).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn round_trip_and_perturbation() {
        let g = s4();
        let t = character_table(&g, &Budget::default()).unwrap();
        let s = serde_json::to_string(&t.to_json()).unwrap();
        let u = parse_table(&s).unwrap();
        assert_eq!(t, u);
        assert_eq!(t.id(), u.id());
        let mut j = t.to_json();
        j.irreducibles[3][1] = Cyclotomic::from_int(2).to_json();
        let err = CharTable::from_json(&j).unwrap_err();
        assert_eq!(err.kind(), "integrity");
    }

    #[test]
    fn reconcile_permuted_classes() {
        let g = s4();
        let t = character_table(&g, &Budget::default()).unwrap();
        let r = reconcile(&t, &g).unwrap();
        assert_eq!(r.irreducibles(), t.irreducibles());
        let gs = vec![Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()];
        let c4 = FiniteGroup::from_perm_group(&PermGroup::new(4, gs).unwrap(), &Budget::default()).unwrap();
        assert_eq!(reconcile(&t, &c4).unwrap_err().kind(), "consistency");
    }
}
