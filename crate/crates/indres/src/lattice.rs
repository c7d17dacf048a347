//! Sublattices of ℤⁿ in row Hermite normal form over big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sublattice of ℤⁿ. Rows are kept in reduced echelon form: positive pivots,
/// entries above a pivot reduced into [0, pivot).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

/// Structure of a finitely generated abelian group: ℤ^free ⊕ ⊕ ℤ/d_i, d_1 | d_2 | ...
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub free_rank: usize,
    #[serde(with = "decimal_vec")]
    pub torsion: Vec<BigInt>,
}

mod decimal_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::chartab::BigIntString;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| BigIntString(x.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<BigIntString>::deserialize(d)?.into_iter().map(|x| x.0).collect())
    }
}

impl Invariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, renormalized to invariant factors.
    pub fn sum(&self, other: &Invariants) -> Invariants {
        let mut diag: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        normalize_diagonal(&mut diag);
        Invariants { free_rank: self.free_rank + other.free_rank, torsion: diag.into_iter().filter(|d| !d.is_one()).collect() }
    }
}

impl std::fmt::Display for Invariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reads the display form back: "0", "Z", "Z^2", "Z/2 + Z^2", "(Z/2)^4",
/// also "Z + Z". Torsion is renormalized to invariant factors.
impl std::str::FromStr for Invariants {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("cannot read abelian group {s:?}"));
        let mut acc = Invariants { free_rank: 0, torsion: Vec::new() };
        if s.trim() == "0" {
            return Ok(acc);
        }
        for part in s.split('+').map(str::trim) {
            let (base, exp) = match part.rsplit_once('^') {
                Some((b, e)) if !b.contains('/') || b.starts_with('(') => (b, e.parse::<usize>().map_err(|_| bad())?),
                _ => (part, 1),
            };
            let base = base.trim().trim_start_matches('(').trim_end_matches(')');
            let one = match base.strip_prefix("Z/") {
                Some(d) => {
                    let d: BigInt = d.parse().map_err(|_| bad())?;
                    if d <= BigInt::one() {
                        return Err(bad());
                    }
                    Invariants { free_rank: 0, torsion: vec![d] }
                }
                None if base == "Z" => Invariants { free_rank: 1, torsion: Vec::new() },
                None => return Err(bad()),
            };
            for _ in 0..exp {
                acc = acc.sum(&one);
            }
        }
        Ok(acc)
    }
}

fn pivot_of(row: &[BigInt]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("zero row in normal form")
}

fn axpy(dst: &mut [BigInt], k: &BigInt, src: &[BigInt]) {
    if k.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += k * s;
        }
    }
}

impl IntLattice {
    pub fn zero(dim: usize) -> Self {
        IntLattice { dim, rows: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntLattice { dim, rows }
    }

    pub fn from_generators<'a>(dim: usize, gens: impl IntoIterator<Item = &'a [i64]>) -> Result<Self> {
        let mut l = Self::zero(dim);
        for g in gens {
            l.insert(&g.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())?;
        }
        Ok(l)
    }

    pub fn from_big_generators(dim: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        let mut l = Self::zero(dim);
        for g in gens {
            l.insert(g)?;
        }
        Ok(l)
    }

    /// Coordinate sublattice spanned by the unit vectors e_j, j ∈ coords.
    pub fn coordinates(dim: usize, coords: &[usize]) -> Self {
        let mut l = Self::zero(dim);
        let mut cs = coords.to_vec();
        cs.sort_unstable();
        cs.dedup();
        for j in cs {
            let mut v = vec![BigInt::zero(); dim];
            v[j] = BigInt::one();
            l.rows.push(v);
        }
        l.rows.sort_by_key(|r| pivot_of(r));
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn hnf(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.dim {
            return Err(Error::Domain(format!("vector of length {n} in a lattice of dimension {}", self.dim)));
        }
        Ok(())
    }

    /// Adds a generator and restores the normal form.
    pub fn insert(&mut self, v: &[BigInt]) -> Result<()> {
        self.check_dim(v.len())?;
        let mut v = v.to_vec();
        let mut i = 0;
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else { break };
            while i < self.rows.len() && pivot_of(&self.rows[i]) < c {
                i += 1;
            }
            if i == self.rows.len() || pivot_of(&self.rows[i]) > c {
                if v[c].is_negative() {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.insert(i, v);
                break;
            }
            let a = self.rows[i][c].clone();
            let b = v[c].clone();
            if (&b % &a).is_zero() {
                let k = -(&b / &a);
                axpy(&mut v, &k, &self.rows[i]);
                continue;
            }
            let e = a.extended_gcd(&b);
            let g = e.gcd;
            let (x, y) = (e.x, e.y);
            let r = self.rows[i].clone();
            let mut nr: Vec<BigInt> = r.iter().zip(&v).map(|(ri, vi)| &x * ri + &y * vi).collect();
            let (ag, bg) = (&a / &g, &b / &g);
            let nv: Vec<BigInt> = v.iter().zip(&r).map(|(vi, ri)| &ag * vi - &bg * ri).collect();
            if nr[c].is_negative() {
                for t in nr.iter_mut() {
                    *t = -&*t;
                }
            }
            self.rows[i] = nr;
            v = nv;
        }
        self.reduce();
        Ok(())
    }

    /// Reduces entries above each pivot into [0, pivot). Top to bottom: using
    /// row i only changes columns from its pivot on, so earlier columns stay
    /// reduced.
    fn reduce(&mut self) {
        for i in 0..self.rows.len() {
            let c = pivot_of(&self.rows[i]);
            let piv = self.rows[i][c].clone();
            let (above, rest) = self.rows.split_at_mut(i);
            let ri = &rest[0];
            for row in above.iter_mut() {
                let q = row[c].div_floor(&piv);
                if !q.is_zero() {
                    axpy(row, &-q, ri);
                }
            }
        }
    }

    /// Residue of v after reduction by the normal form; zero iff v is a member.
    fn residue(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let c = pivot_of(row);
            if v[c].is_zero() {
                continue;
            }
            let q = v[c].div_floor(&row[c]);
            axpy(&mut v, &-q, row);
            if !v[c].is_zero() {
                break;
            }
        }
        v
    }

    pub fn contains_big(&self, v: &[BigInt]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.residue(v).iter().all(|x| x.is_zero()))
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        self.contains_big(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    pub fn is_sublattice_of(&self, other: &IntLattice) -> Result<bool> {
        for r in &self.rows {
            if !other.contains_big(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &IntLattice) -> Result<IntLattice> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r)?;
        }
        Ok(out)
    }

    /// {v ∈ L : v_j = 0 for all j outside coords}, by echelonizing with the
    /// excluded coordinates ordered first.
    pub fn restrict_to(&self, coords: &[usize]) -> IntLattice {
        let mut keep = vec![false; self.dim];
        for &c in coords {
            keep[c] = true;
        }
        let order: Vec<usize> = (0..self.dim).filter(|&j| !keep[j]).chain((0..self.dim).filter(|&j| keep[j])).collect();
        let excluded = self.dim - coords.iter().filter(|&&c| c < self.dim).count();
        let mut perm = IntLattice::zero(self.dim);
        for r in &self.rows {
            let pr: Vec<BigInt> = order.iter().map(|&j| r[j].clone()).collect();
            perm.insert(&pr).expect("dimension");
        }
        let mut out = IntLattice::zero(self.dim);
        for r in &perm.rows {
            if pivot_of(r) >= excluded {
                let mut back = vec![BigInt::zero(); self.dim];
                for (pos, &j) in order.iter().enumerate() {
                    back[j] = r[pos].clone();
                }
                out.insert(&back).expect("dimension");
            }
        }
        out
    }

    /// Image under zeroing every coordinate outside `coords`. Equals
    /// `restrict_to` only when the lattice splits along the coordinate blocks.
    pub fn project(&self, coords: &[usize]) -> IntLattice {
        let mut keep = vec![false; self.dim];
        for &c in coords {
            keep[c] = true;
        }
        let mut out = IntLattice::zero(self.dim);
        for r in &self.rows {
            let v: Vec<BigInt> = r.iter().enumerate().map(|(j, x)| if keep[j] { x.clone() } else { BigInt::zero() }).collect();
            out.insert(&v).expect("dimension");
        }
        out
    }

    /// Intersection with another lattice, via the kernel of [A; -B] ↦ 0.
    pub fn intersect(&self, other: &IntLattice) -> Result<IntLattice> {
        self.check_dim(other.dim)?;
        // rows (a | a) and (b | 0): members with zero first half give the intersection
        let n = self.dim;
        let mut big = IntLattice::zero(2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend(r.iter().cloned());
            big.insert(&v)?;
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat(BigInt::zero()).take(n));
            big.insert(&v)?;
        }
        let mut out = IntLattice::zero(n);
        for r in &big.rows {
            if pivot_of(r) >= n {
                out.insert(&r[n..])?;
            }
        }
        Ok(out)
    }
}

/// ambient / sub as invariant factors. `sub` must lie in `ambient`.
pub fn quotient_invariants(ambient: &IntLattice, sub: &IntLattice) -> Result<Invariants> {
    if ambient.dim != sub.dim {
        return Err(Error::Domain("lattices of different dimension".into()));
    }
    let r = ambient.rank();
    // coordinates of each sub row in the ambient basis (ambient rows are echelon)
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(sub.rank());
    for s in &sub.rows {
        let mut v = s.clone();
        let mut coords = vec![BigInt::zero(); r];
        for (i, row) in ambient.rows.iter().enumerate() {
            let c = pivot_of(row);
            if v[c].is_zero() {
                continue;
            }
            let (q, rem) = v[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return Err(Error::Precondition("sublattice is not contained in the ambient lattice".into()));
            }
            axpy(&mut v, &-&q, row);
            coords[i] = q;
        }
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::Precondition("sublattice is not contained in the ambient lattice".into()));
        }
        mat.push(coords);
    }
    let mut diag = smith_diagonal(mat, r);
    normalize_diagonal(&mut diag);
    let rank = diag.len();
    Ok(Invariants { free_rank: r - rank, torsion: diag.into_iter().filter(|d| !d.is_one()).collect() })
}

/// Nonzero diagonal entries of a Smith-type diagonalization (not yet normalized to divisibility).
fn smith_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let mut diag = Vec::new();
    let mut rows = m.len();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut again = false;
            let p = m[t][t].clone();
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&p);
                let src = m[t].clone();
                axpy(&mut m[i], &-q, &src);
                if !m[i][t].is_zero() {
                    again = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&p);
                for row in m.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * s;
                }
                if !m[t][j].is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !m[i][t].is_zero() && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
        // drop rows that became zero below the pivot block
        let mut i = t;
        while i < rows {
            if m[i].iter().all(|x| x.is_zero()) {
                m.swap_remove(i);
                rows -= 1;
            } else {
                i += 1;
            }
        }
    }
    diag
}

/// Rewrites a diagonal into invariant factors d_1 | d_2 | ... (same group).
fn normalize_diagonal(d: &mut Vec<BigInt>) {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = if g.is_zero() { BigInt::zero() } else { &d[i] / &g * &d[j] };
            d[i] = g;
            d[j] = l;
        }
    }
    d.sort();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(dim: usize, gens: &[&[i64]]) -> IntLattice {
        IntLattice::from_generators(dim, gens.iter().copied()).unwrap()
    }

    #[test]
    fn membership() {
        let l = lat(2, &[&[1, 0], &[0, 1]]);
        assert!(l.contains(&[1, 1]).unwrap());
        assert!(!lat(2, &[&[2, 0]]).contains(&[1, 0]).unwrap());
        let m = lat(3, &[&[1, 2, 3], &[4, 5, 6]]);
        assert!(m.contains(&[5, 7, 9]).unwrap());
        assert!(m.contains(&[1, 2]).is_err());
    }

    #[test]
    fn normal_form_is_fully_reduced() {
        let a = lat(4, &[&[1, 4, 0, 0], &[-1, -5, 1, 0], &[6, 0, 0, 0]]);
        let b = lat(4, &[&[6, 0, 0, 0], &[-1, -5, 1, 0], &[1, 4, 0, 0]]);
        assert_eq!(a, b);
        for (i, row) in a.hnf().iter().enumerate() {
            let c = pivot_of(row);
            for above in &a.hnf()[..i] {
                assert!(!above[c].is_negative() && above[c] < row[c]);
            }
        }
    }

    #[test]
    fn read_invariants() {
        let r = |s: &str| s.parse::<Invariants>().unwrap().to_string();
        assert_eq!(r("Z + Z"), "Z^2");
        assert_eq!(r("Z/2 + Z/3"), "Z/6");
        assert_eq!(r("(Z/2)^4"), "Z/2 + Z/2 + Z/2 + Z/2");
        assert_eq!(r("Z/5 + Z^2"), "Z/5 + Z^2");
        assert_eq!(r("0"), "0");
        assert!("Z/1".parse::<Invariants>().is_err());
        assert!("Q".parse::<Invariants>().is_err());
    }

    #[test]
    fn quotients() {
        let z2 = IntLattice::full(2);
        let q = quotient_invariants(&z2, &lat(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(q, Invariants { free_rank: 0, torsion: vec![BigInt::from(6)] });
        let q = quotient_invariants(&z2, &lat(2, &[&[2, 0]])).unwrap();
        assert_eq!(q.to_string(), "Z/2 + Z");
        let q = quotient_invariants(&IntLattice::full(3), &IntLattice::zero(3)).unwrap();
        assert_eq!(q.to_string(), "Z^3");
        assert_eq!(quotient_invariants(&lat(2, &[&[2, 0]]), &z2).unwrap_err().kind(), "precondition");
    }

    #[test]
    fn restriction() {
        let a = lat(2, &[&[1, 1]]);
        assert!(a.restrict_to(&[0]).is_zero());
        let b = lat(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(b.restrict_to(&[0]), lat(2, &[&[2, 0]]));
        assert_eq!(a.sum(&IntLattice::zero(2)).unwrap(), a);
        let i = lat(2, &[&[2, 0], &[0, 2]]).intersect(&lat(2, &[&[3, 0], &[0, 1]])).unwrap();
        assert_eq!(i, lat(2, &[&[6, 0], &[0, 2]]));
    }
}
