use std::sync::OnceLock;

use num_bigint::BigUint;

use super::perm::Permutation;
use crate::error::{Error, Result};

struct Level {
    point: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    // transversal[b] maps the base point to b; inverses cached for sifting
    trans: Vec<Option<(Permutation, Permutation)>>,
}

/// Base and strong generating set built by deterministic Schreier-Sims:
/// every Schreier generator is sifted, so the chain is exact.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut c = StabChain { degree, levels: Vec::new() };
        for g in gens {
            if let Some((lvl, h)) = c.sift(g, 0) {
                c.add_strong(0, lvl, h);
            }
        }
        c
    }

    /// Adds a sifted residue (fixing the first `lvl` base points) to the
    /// generating sets of levels `from..=lvl`, keeping S_{i+1} inside S_i.
    fn add_strong(&mut self, from: usize, lvl: usize, h: Permutation) {
        if lvl == self.levels.len() {
            let b = h.first_moved().expect("identity never added");
            let mut trans = vec![None; self.degree];
            let id = Permutation::identity(self.degree);
            trans[b as usize] = Some((id.clone(), id));
            self.levels.push(Level { point: b, gens: Vec::new(), orbit: vec![b], trans });
        }
        for j in (from..=lvl).rev() {
            self.add_generator(j, h.clone());
        }
    }

    /// Strips `g` from level `from`; returns the residue if it is not the identity.
    fn sift(&self, g: &Permutation, from: usize) -> Option<(usize, Permutation)> {
        let mut h = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(l.point);
            match &l.trans[b as usize] {
                None => return Some((i, h)),
                Some((_, uinv)) => h = h.mul(uinv),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((self.levels.len(), h))
        }
    }

    fn add_generator(&mut self, i: usize, g: Permutation) {
        self.levels[i].gens.push(g);
        let s_new = self.levels[i].gens.len() - 1;
        let old = self.levels[i].orbit.len();
        for pos in 0..old {
            self.process(i, pos, s_new);
        }
        let mut pos = old;
        while pos < self.levels[i].orbit.len() {
            for s in 0..self.levels[i].gens.len() {
                self.process(i, pos, s);
            }
            pos += 1;
        }
    }

    fn process(&mut self, i: usize, pos: usize, s: usize) {
        let l = &self.levels[i];
        let b = l.orbit[pos];
        let g = &l.gens[s];
        let c = g.image(b);
        let ub = &l.trans[b as usize].as_ref().unwrap().0;
        let ubg = ub.mul(g);
        match &l.trans[c as usize] {
            None => {
                let inv = ubg.inverse();
                let l = &mut self.levels[i];
                l.trans[c as usize] = Some((ubg, inv));
                l.orbit.push(c);
            }
            Some((_, ucinv)) => {
                let schreier = ubg.mul(ucinv);
                if let Some((lvl, h)) = self.sift(&schreier, i + 1) {
                    self.add_strong(i + 1, lvl, h);
                }
            }
        }
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).is_none()
    }

    /// All elements, as products u_{k-1} ... u_0 of transversal elements.
    /// The identity comes first.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut list = vec![Permutation::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(list.len() * l.orbit.len());
            for &b in &l.orbit {
                let u = &l.trans[b as usize].as_ref().unwrap().0;
                for x in &list {
                    next.push(x.mul(u));
                }
            }
            list = next;
        }
        list
    }
}

/// A permutation group given by generators, with a lazily built stabilizer chain.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup { degree: self.degree, gens: self.gens.clone(), chain: OnceLock::new() }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(degree {}, {} generators)", self.degree, self.gens.len())
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Format(format!(
                    "generator {} has degree {}, expected {}",
                    g,
                    g.degree(),
                    degree
                )));
            }
        }
        Ok(PermGroup { degree, gens, chain: OnceLock::new() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.gens))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as u64, or a budget error if it does not fit.
    pub fn order_u64(&self) -> Result<u64> {
        let o = self.order();
        u64::try_from(&o).map_err(|_| Error::Budget(format!("group order {o} exceeds 64 bits")))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn base(&self) -> Vec<u32> {
        self.chain().base()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let a = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
        let c: Vec<u32> = (1..=n as u32).collect();
        let b = Permutation::from_cycles(n, &[&c]).unwrap();
        PermGroup::new(n, vec![a, b]).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(sym(4).order(), BigUint::from(24u32));
        assert_eq!(sym(7).order(), BigUint::from(5040u32));
        let g = PermGroup::new(3, vec![Permutation::identity(3)]).unwrap();
        assert_eq!(g.order(), BigUint::from(1u32));
        let c6 = PermGroup::new(6, vec![Permutation::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]).unwrap()]).unwrap();
        assert_eq!(c6.order(), BigUint::from(6u32));
        let s = sym(5);
        let els = s.chain().elements();
        assert_eq!(els.len(), 120);
        assert!(els[0].is_identity());
        let mut sorted = els.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        assert!(els.iter().all(|g| s.contains(g)));
    }

    #[test]
    fn membership_in_alternating() {
        let a4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[2, 3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a4.order(), BigUint::from(12u32));
        assert!(!a4.contains(&Permutation::from_cycles(4, &[&[1, 2]]).unwrap()));
        assert!(a4.contains(&Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()));
    }
}
