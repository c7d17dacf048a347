use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use sha2::{Digest, Sha256};

use super::cyclotomic::{euler_phi, Cyclotomic};
use crate::error::{Error, Result};
use crate::modp::{self, ModField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub rep_order: u64,
    pub size: u64,
    pub power_map: BTreeMap<u64, usize>,
}

/// An exact character table: classes in a fixed order, one row per
/// irreducible character. Rows hold cyclotomic integers.
#[derive(Clone, Debug)]
pub struct CharTable {
    id: String,
    order: u64,
    exponent: u64,
    classes: Vec<ClassInfo>,
    irr: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    inv_class: Vec<usize>,
    conj_row: Vec<usize>,
}

impl PartialEq for CharTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.classes == other.classes && self.irr == other.irr
    }
}

impl CharTable {
    /// Assembles and checks a table. With `verify`, both orthogonality
    /// relations are checked exactly; otherwise only the cheap invariants.
    pub fn new(order: u64, classes: Vec<ClassInfo>, irr: Vec<Vec<Cyclotomic>>, verify: bool) -> Result<Self> {
        let k = classes.len();
        if k == 0 || irr.len() != k || irr.iter().any(|r| r.len() != k) {
            return Err(Error::Integrity(format!(
                "table has {} classes and {} rows; it must be square",
                k,
                irr.len()
            )));
        }
        if classes[0].rep_order != 1 || classes[0].size != 1 {
            return Err(Error::Integrity("the first class must be the identity".into()));
        }
        if classes.iter().map(|c| c.size).sum::<u64>() != order {
            return Err(Error::Integrity("class sizes do not sum to the group order".into()));
        }
        let exponent = classes.iter().fold(1, |e, c| e.lcm(&c.rep_order));
        let mut degrees = Vec::with_capacity(k);
        for row in &irr {
            let d = row[0]
                .to_integer()
                .and_then(|d| d.to_u64())
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::Integrity(format!("degree {} is not a positive integer", row[0])))?;
            degrees.push(d);
        }
        let sq: u128 = degrees.iter().map(|&d| d as u128 * d as u128).sum();
        if sq != order as u128 {
            return Err(Error::Integrity(format!("sum of squared degrees is {sq}, group order {order}")));
        }
        // columns under complex conjugation give the inverse classes
        let cols: Vec<Vec<Cyclotomic>> = (0..k).map(|c| irr.iter().map(|r| r[c].clone()).collect()).collect();
        let mut inv_class = Vec::with_capacity(k);
        for c in 0..k {
            let conj: Vec<Cyclotomic> = cols[c].iter().map(|v| v.conj()).collect();
            let j = (0..k)
                .find(|&j| cols[j] == conj)
                .ok_or_else(|| Error::Integrity(format!("no class has the conjugate column of class {c}")))?;
            inv_class.push(j);
        }
        let mut conj_row = Vec::with_capacity(k);
        for r in &irr {
            let conj: Vec<Cyclotomic> = r.iter().map(|v| v.conj()).collect();
            let j = (0..k)
                .find(|&j| irr[j] == conj)
                .ok_or_else(|| Error::Integrity("row set is not closed under complex conjugation".into()))?;
            conj_row.push(j);
        }
        let mut t = CharTable { id: String::new(), order, exponent, classes, irr, degrees, inv_class, conj_row };
        if verify {
            t.verify_orthogonality()?;
        }
        t.id = t.fingerprint();
        Ok(t)
    }

    fn fingerprint(&self) -> String {
        let mut s = String::new();
        write!(s, "{}|", self.order).unwrap();
        for c in &self.classes {
            write!(s, "{},{},{:?};", c.rep_order, c.size, c.power_map).unwrap();
        }
        for r in &self.irr {
            for v in r {
                write!(s, "{}:", v.modulus()).unwrap();
                for x in v.coeffs() {
                    write!(s, "{x},").unwrap();
                }
                s.push(';');
            }
            s.push('\n');
        }
        let h = Sha256::digest(s.as_bytes());
        h.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Content-derived identifier carried by virtual characters.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Vec<Cyclotomic>] {
        &self.irr
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.irr[chi][class]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn inv_class(&self, c: usize) -> usize {
        self.inv_class[c]
    }

    /// Row index of the complex conjugate of each irreducible.
    pub fn conj_row(&self, chi: usize) -> usize {
        self.conj_row[chi]
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.order / self.classes[c].size
    }

    /// lcm of every modulus appearing in the values (a multiple of the exponent
    /// for computed tables, possibly larger for imported ones).
    pub fn value_modulus(&self) -> u64 {
        self.irr
            .iter()
            .flatten()
            .fold(self.exponent, |a, v| a.lcm(&v.modulus()))
    }

    /// All values reduced into a large prime field.
    pub fn mod_values(&self, f: &ModField) -> Vec<Vec<u64>> {
        let mut roots: BTreeMap<u64, u64> = BTreeMap::new();
        self.irr
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        let m = v.modulus();
                        let root = *roots.entry(m).or_insert_with(|| f.root(m));
                        v.eval_mod(f.q, root)
                    })
                    .collect()
            })
            .collect()
    }

    /// Class of rep^r for a prime r: stored power map, or the Galois image of
    /// the column when r is coprime to the element order.
    pub fn power_class(&self, c: usize, r: u64) -> Option<usize> {
        if let Some(&j) = self.classes[c].power_map.get(&r) {
            return Some(j);
        }
        let o = self.classes[c].rep_order;
        if o % r == 0 {
            return None;
        }
        let target: Vec<Cyclotomic> = self.irr.iter().map(|row| row[c].galois(r as i64)).collect();
        (0..self.num_classes()).find(|&j| self.irr.iter().zip(&target).all(|(row, t)| row[j] == *t))
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let k = self.num_classes();
        let col_mod: Vec<u64> = (0..k)
            .map(|c| self.irr.iter().fold(1u64, |a, r| a.lcm(&r[c].modulus())))
            .collect();
        let too_big = || Error::Integrity("character value too large".into());
        let mut val = vec![vec![Vec::new(); k]; k];
        let mut cval = vec![vec![Vec::new(); k]; k];
        for r in 0..k {
            for c in 0..k {
                let v = self.irr[r][c].to_modulus(col_mod[c]);
                val[r][c] = v.small_coeffs_i128().ok_or_else(too_big)?;
                cval[r][c] = v.conj().small_coeffs_i128().ok_or_else(too_big)?;
            }
        }
        let mut by_mod: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (c, &m) in col_mod.iter().enumerate() {
            by_mod.entry(m).or_default().push(c);
        }
        let big = col_mod.iter().fold(1u64, |a, m| a.lcm(m));
        let is_int = |v: &[i128], e: i128| v[0] == e && v[1..].iter().all(|&x| x == 0);
        for i in 0..k {
            for j in i..k {
                let mut total = vec![0i128; euler_phi(big)];
                for (&m, cs) in &by_mod {
                    let mut acc = vec![0i128; euler_phi(m)];
                    for &c in cs {
                        let s = self.classes[c].size as i128;
                        for (a, p) in acc.iter_mut().zip(Cyclotomic::mul_small(m, &val[i][c], &cval[j][c])) {
                            *a += s * p;
                        }
                    }
                    for (t, x) in total.iter_mut().zip(Cyclotomic::lift_small(m, big, &acc)) {
                        *t += x;
                    }
                }
                let expect = if i == j { self.order as i128 } else { 0 };
                if !is_int(&total, expect) {
                    return Err(Error::Integrity(format!(
                        "rows {i} and {j} violate the first orthogonality relation"
                    )));
                }
            }
        }
        let mut lifted: BTreeMap<(usize, usize, u64, bool), Vec<i128>> = BTreeMap::new();
        let mut get = |r: usize, c: usize, m: u64, conj: bool| -> Vec<i128> {
            lifted
                .entry((r, c, m, conj))
                .or_insert_with(|| {
                    let src = if conj { &cval[r][c] } else { &val[r][c] };
                    Cyclotomic::lift_small(col_mod[c], m, src)
                })
                .clone()
        };
        for a in 0..k {
            for b in a..k {
                let m = col_mod[a].lcm(&col_mod[b]);
                let mut acc = vec![0i128; euler_phi(m)];
                for r in 0..k {
                    let x = get(r, a, m, false);
                    let y = get(r, b, m, true);
                    for (s, p) in acc.iter_mut().zip(Cyclotomic::mul_small(m, &x, &y)) {
                        *s += p;
                    }
                }
                let expect = if a == b { self.centralizer_order(a) as i128 } else { 0 };
                if !is_int(&acc, expect) {
                    return Err(Error::Integrity(format!(
                        "classes {a} and {b} violate the second orthogonality relation"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The class function values of a virtual character given by coefficients.
    pub fn class_values(&self, coeffs: &[i64]) -> Vec<Cyclotomic> {
        (0..self.num_classes())
            .map(|c| {
                let mut acc = Cyclotomic::zero(1);
                for (i, &a) in coeffs.iter().enumerate() {
                    if a != 0 {
                        acc = acc.add(&self.irr[i][c].scale(&BigInt::from(a)));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn reordered_rows(&self, perm: &[usize]) -> Result<CharTable> {
        let irr = perm.iter().map(|&i| self.irr[i].clone()).collect();
        CharTable::new(self.order, self.classes.clone(), irr, false)
    }

    /// Direct product table: class (i, j) at index i*k_B + j, character
    /// (χ, ψ) at row index χ*k_B + ψ. Not re-verified: orthogonality of a
    /// product follows from that of the factors.
    pub fn direct_product(a: &CharTable, b: &CharTable) -> Result<CharTable> {
        let ka = a.num_classes();
        let kb = b.num_classes();
        let order = a.order * b.order;
        let primes = modp::prime_divisors(order);
        let mut classes = Vec::with_capacity(ka * kb);
        for i in 0..ka {
            for j in 0..kb {
                let mut pm = BTreeMap::new();
                for &r in &primes {
                    let (Some(pi), Some(pj)) = (a.power_class(i, r), b.power_class(j, r)) else {
                        return Err(Error::internal("power map unavailable for product table"));
                    };
                    pm.insert(r, pi * kb + pj);
                }
                classes.push(ClassInfo {
                    rep_order: a.classes[i].rep_order.lcm(&b.classes[j].rep_order),
                    size: a.classes[i].size * b.classes[j].size,
                    power_map: pm,
                });
            }
        }
        let mut irr = Vec::with_capacity(ka * kb);
        for x in &a.irr {
            for y in &b.irr {
                let mut row = Vec::with_capacity(ka * kb);
                for u in x {
                    for v in y {
                        row.push(u.mul(v));
                    }
                }
                irr.push(row);
            }
        }
        CharTable::new(order, classes, irr, false)
    }
}

