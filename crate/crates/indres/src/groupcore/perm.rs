use std::fmt;

use crate::error::{Error, Result};

/// A permutation of {0..n-1}. Points are 0-based internally and 1-based in
/// every file format and display. Products are left to right: `a.mul(b)`
/// applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Box<[u32]>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// From 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Format(format!(
                    "images {:?} do not form a permutation of 1..{}",
                    images.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    n
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images.into_boxed_slice()))
    }

    pub fn from_images_1based(images: &[u64]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 || x > u32::MAX as u64 {
                return Err(Error::Format(format!("point {x} out of range")));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                let b = c[(i + 1) % c.len()];
                if a == 0 || b == 0 || a as usize > n || b as usize > n {
                    return Err(Error::Format(format!("cycle point out of range 1..{n}")));
                }
                img[a as usize - 1] = b - 1;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn images_1based(&self) -> Vec<u64> {
        self.0.iter().map(|&x| x as u64 + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv.into_boxed_slice())
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// t * self * t^-1.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        t.mul(self).mul(&t.inverse())
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s as u32];
            seen[s] = true;
            let mut x = self.0[s] as usize;
            while x != s {
                seen[x] = true;
                c.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Element order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// The direct sum of two permutations acting on disjoint point sets.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.degree() as u32;
        let mut v: Vec<u32> = self.0.to_vec();
        v.extend(other.0.iter().map(|&x| x + n));
        Permutation(v.into_boxed_slice())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let a = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(b.order(), 4);
        assert_eq!(a.mul(&a), Permutation::identity(4));
        assert_eq!(b.pow(4), Permutation::identity(4));
        assert_eq!(b.pow(-1), b.inverse());
        // left-to-right: 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(format!("{}", b), "(1,2,3,4)");
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
