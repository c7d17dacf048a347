//! The matching properties IRC, WIRC, WIRC* and the containments pRes, pInd.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Instance;
use crate::error::{Error, Result};
use crate::lattice::IntLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Irc,
    Wirc,
    WircStar,
    PRes,
    PInd,
}

impl Property {
    pub const ALL: [Property; 5] = [Property::Irc, Property::Wirc, Property::WircStar, Property::PRes, Property::PInd];

    pub fn name(self) -> &'static str {
        match self {
            Property::Irc => "irc",
            Property::Wirc => "wirc",
            Property::WircStar => "wircstar",
            Property::PRes => "pres",
            Property::PInd => "pind",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Domain(format!("unknown property {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Global,
    /// a block of G with defect group P, by index
    Block(usize),
}

/// χ ↦ sign·φ in a signed bijection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub chi: usize,
    pub phi: usize,
    pub sign: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub level: Level,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Pair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_certificate: Option<String>,
}

impl Instance {
    pub fn check_property(&self, which: Property, level: Level) -> Result<Verdict> {
        let sides = self.sides(level)?;
        let k_h = self.k_h();
        let k_g = self.k_g();
        let verdict = |holds, witness, cert| Verdict { property: which, level, holds, witness, failure_certificate: cert };
        match which {
            Property::PRes => {
                let l = IntLattice::coordinates(k_h, &sides.h_cp).sum(&self.i_h)?;
                for &chi in &sides.g_cp {
                    if !l.contains(&self.proj_res(chi))? {
                        let cert = format!("Proj_P Res of irreducible {chi} (degree {}) is not in the target lattice", self.g.table.degrees()[chi]);
                        return Ok(verdict(false, None, Some(cert)));
                    }
                }
                Ok(verdict(true, None, None))
            }
            Property::PInd => {
                let l = IntLattice::coordinates(k_g, &sides.g_cp).sum(self.i_g()?)?;
                for &phi in &sides.h_cp {
                    if !l.contains(&self.ind(phi))? {
                        let cert = format!("Ind of irreducible {phi} of H (degree {}) is not in the target lattice", self.h.table.degrees()[phi]);
                        return Ok(verdict(false, None, Some(cert)));
                    }
                }
                Ok(verdict(true, None, None))
            }
            Property::Irc | Property::Wirc | Property::WircStar => {
                let (a, b) = (&sides.g_irr0, &sides.h_irr0);
                if a.len() != b.len() {
                    let cert = format!("height-zero sets differ in size: {} in G, {} in H", a.len(), b.len());
                    return Ok(verdict(false, None, Some(cert)));
                }
                let edges = self.edges(which, &sides)?;
                match least_perfect_matching(&edges) {
                    Some(m) => {
                        let pairs = m
                            .into_iter()
                            .enumerate()
                            .map(|(i, j)| Pair { chi: a[i], phi: b[j], sign: edges[i][j].unwrap() })
                            .collect();
                        Ok(verdict(true, Some(pairs), None))
                    }
                    None => {
                        let size = max_matching(&edges, &vec![false; a.len()], &vec![false; b.len()]);
                        let isolated: Vec<usize> = (0..a.len()).filter(|&i| edges[i].iter().all(|e| e.is_none())).map(|i| a[i]).collect();
                        let mut cert = format!("maximum matching has size {size} of {}", a.len());
                        if !isolated.is_empty() {
                            cert.push_str(&format!("; irreducibles of G with no admissible partner: {isolated:?}"));
                        }
                        Ok(verdict(false, None, Some(cert)))
                    }
                }
            }
        }
    }

    /// edges[i][j] = Some(sign) when sign·φ_j is admissible for χ_i (+1 preferred).
    fn edges(&self, which: Property, sides: &super::Sides) -> Result<Vec<Vec<Option<i64>>>> {
        let (a, b) = (&sides.g_irr0, &sides.h_irr0);
        let mut out = vec![vec![None; b.len()]; a.len()];
        match which {
            Property::Irc | Property::Wirc => {
                let l = if which == Property::Irc {
                    self.i_h.clone()
                } else {
                    IntLattice::coordinates(self.k_h(), &sides.h_cp).sum(&self.i_h)?
                };
                for (i, &chi) in a.iter().enumerate() {
                    let t = self.proj_res(chi);
                    for (j, &phi) in b.iter().enumerate() {
                        for sign in [1i64, -1] {
                            let mut v: Vec<i64> = t.iter().map(|x| -x).collect();
                            v[phi] += sign;
                            if l.contains(&v)? {
                                out[i][j] = Some(sign);
                                break;
                            }
                        }
                    }
                }
            }
            Property::WircStar => {
                let l = IntLattice::coordinates(self.k_g(), &sides.g_cp).sum(self.i_g()?)?;
                for (j, &phi) in b.iter().enumerate() {
                    let ind = self.ind(phi);
                    for (i, &chi) in a.iter().enumerate() {
                        for sign in [1i64, -1] {
                            let mut v: Vec<i64> = ind.iter().map(|x| sign * x).collect();
                            v[chi] -= 1;
                            if l.contains(&v)? {
                                out[i][j] = Some(sign);
                                break;
                            }
                        }
                    }
                }
            }
            _ => unreachable!("not a matching property"),
        }
        Ok(out)
    }
}

/// Size of a maximum matching avoiding the used rows and columns (Kuhn's algorithm).
fn max_matching(edges: &[Vec<Option<i64>>], row_used: &[bool], col_used: &[bool]) -> usize {
    let n = edges.len();
    let m = col_used.len();
    let mut owner: Vec<Option<usize>> = vec![None; m];
    fn augment(
        i: usize,
        edges: &[Vec<Option<i64>>],
        col_used: &[bool],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..col_used.len() {
            if col_used[j] || seen[j] || edges[i][j].is_none() {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || augment(owner[j].unwrap(), edges, col_used, seen, owner) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut size = 0;
    for i in 0..n {
        if row_used[i] {
            continue;
        }
        let mut seen = vec![false; m];
        if augment(i, edges, col_used, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

/// The perfect matching that is lexicographically least as a sequence of
/// column choices for rows 0, 1, ...; None if there is no perfect matching.
pub(crate) fn least_perfect_matching(edges: &[Vec<Option<i64>>]) -> Option<Vec<usize>> {
    let n = edges.len();
    let mut row_used = vec![false; n];
    let mut col_used = vec![false; n];
    if max_matching(edges, &row_used, &col_used) < n {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        row_used[i] = true;
        let j = (0..n)
            .find(|&j| {
                if col_used[j] || edges[i][j].is_none() {
                    return false;
                }
                col_used[j] = true;
                let ok = max_matching(edges, &row_used, &col_used) == n - i - 1;
                col_used[j] = false;
                ok
            })
            .expect("a perfect matching extends");
        col_used[j] = true;
        out.push(j);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_matching() {
        let e = |v: &[&[u8]]| -> Vec<Vec<Option<i64>>> {
            v.iter().map(|r| r.iter().map(|&x| (x == 1).then_some(1)).collect()).collect()
        };
        assert_eq!(least_perfect_matching(&e(&[&[1, 1], &[1, 0]])), Some(vec![1, 0]));
        assert_eq!(least_perfect_matching(&e(&[&[1, 1], &[1, 1]])), Some(vec![0, 1]));
        assert_eq!(least_perfect_matching(&e(&[&[1, 0], &[1, 0]])), None);
        assert_eq!(least_perfect_matching(&e(&[])), Some(vec![]));
    }
}
