use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp;

struct CycloData {
    phi: usize,
    /// Phi_m, low degree first, monic of degree phi.
    poly: Vec<i64>,
    /// x^e mod Phi_m for 0 <= e < m.
    pw: Vec<Vec<i64>>,
}

fn cyclo_poly(m: u64) -> Vec<i64> {
    // x^m - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = div_monic(&num, &data(d).poly);
        }
    }
    num
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = r.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                r[i + j] -= c * b[j];
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn build(m: u64) -> CycloData {
    let poly = if m == 1 { vec![-1, 1] } else { cyclo_poly(m) };
    let phi = poly.len() - 1;
    let mut pw = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        pw.push(cur.clone());
        // multiply by x and reduce the overflow coefficient
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] = cur[i].checked_sub(top.checked_mul(poly[i]).expect("coefficient overflow")).expect("overflow");
            }
        }
    }
    CycloData { phi, poly, pw }
}

fn data(m: u64) -> Arc<CycloData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&m) {
        return d.clone();
    }
    let d = Arc::new(build(m));
    cache.lock().unwrap().entry(m).or_insert(d).clone()
}

pub fn euler_phi(m: u64) -> usize {
    data(m).phi
}

/// An element of Z[ζ_m] in the power basis 1, ζ, ..., ζ^(φ(m)-1), i.e. reduced
/// modulo the m-th cyclotomic polynomial. The representation is unique for a
/// fixed modulus; values at different moduli are compared after lifting both
/// to the lcm.
#[derive(Clone)]
pub struct Cyclotomic {
    m: u64,
    c: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero(m: u64) -> Self {
        Cyclotomic { m, c: vec![BigInt::zero(); euler_phi(m)] }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Cyclotomic { m: 1, c: vec![v.into()] }
    }

    /// Sum of c * ζ_m^e over the terms.
    pub fn from_terms(m: u64, terms: &[(u64, BigInt)]) -> Self {
        let d = data(m);
        let mut c = vec![BigInt::zero(); d.phi];
        for (e, v) in terms {
            if v.is_zero() {
                continue;
            }
            let row = &d.pw[(*e % m) as usize];
            for (i, &x) in row.iter().enumerate() {
                if x != 0 {
                    c[i] += v * x;
                }
            }
        }
        Cyclotomic { m, c }
    }

    /// From small multiplicities: Σ mult[e] ζ_m^e.
    pub fn from_multiplicities(m: u64, mult: &[u64]) -> Self {
        let d = data(m);
        let mut acc = vec![0i64; d.phi];
        for (e, &k) in mult.iter().enumerate() {
            if k == 0 {
                continue;
            }
            for (i, &x) in d.pw[e].iter().enumerate() {
                acc[i] += x * k as i64;
            }
        }
        Cyclotomic { m, c: acc.into_iter().map(BigInt::from).collect() }
    }

    /// From power-basis coefficients (length φ(m)).
    pub fn new_small(m: u64, c: &[i128]) -> Self {
        assert_eq!(c.len(), euler_phi(m));
        Cyclotomic { m, c: c.iter().map(|&x| BigInt::from(x)).collect() }
    }

    /// Product of two power-basis vectors in machine integers.
    pub fn mul_small(m: u64, a: &[i128], b: &[i128]) -> Vec<i128> {
        let d = data(m);
        let phi = d.phi;
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for top in (phi..prod.len()).rev() {
            let t = prod[top];
            if t == 0 {
                continue;
            }
            for i in 0..phi {
                prod[top - phi + i] -= t * d.poly[i] as i128;
            }
        }
        prod.truncate(phi);
        prod
    }

    /// Rewrites a power-basis vector over ζ_from as one over ζ_to (from | to).
    pub fn lift_small(from: u64, to: u64, v: &[i128]) -> Vec<i128> {
        if from == to {
            return v.to_vec();
        }
        let d = data(to);
        let f = to / from;
        let mut out = vec![0i128; d.phi];
        for (e, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&d.pw[(e as u64 * f % to) as usize]) {
                *o += x * y as i128;
            }
        }
        out
    }

    pub fn small_coeffs_i128(&self) -> Option<Vec<i128>> {
        self.c.iter().map(|x| x.to_i128()).collect()
    }

    pub fn root(m: u64, e: u64) -> Self {
        Self::from_terms(m, &[(e, BigInt::one())])
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().skip(1).all(|x| x.is_zero())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_rational().then(|| self.c[0].clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Nonzero (exponent, coefficient) pairs of the power-basis form.
    pub fn terms(&self) -> Vec<(u64, BigInt)> {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(e, v)| (e as u64, v.clone()))
            .collect()
    }

    /// The same number written over ζ_M for a multiple M of the modulus.
    pub fn to_modulus(&self, big: u64) -> Self {
        assert!(big % self.m == 0, "{} does not divide {}", self.m, big);
        if big == self.m {
            return self.clone();
        }
        let f = big / self.m;
        let terms: Vec<(u64, BigInt)> = self.terms().into_iter().map(|(e, v)| (e * f, v)).collect();
        Self::from_terms(big, &terms)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.m.lcm(&other.m);
        (self.to_modulus(l), other.to_modulus(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Cyclotomic { m: a.m, c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Cyclotomic { m: a.m, c: a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect() }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Cyclotomic { m: self.m, c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Exact division by an integer; None if some coefficient is not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let mut c = Vec::with_capacity(self.c.len());
        for x in &self.c {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            c.push(q);
        }
        Some(Cyclotomic { m: self.m, c })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let d = data(a.m);
        let phi = d.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        for top in (phi..prod.len()).rev() {
            let t = std::mem::take(&mut prod[top]);
            if t.is_zero() {
                continue;
            }
            for i in 0..phi {
                let pc = d.poly[i];
                if pc != 0 {
                    prod[top - phi + i] -= &t * pc;
                }
            }
        }
        prod.truncate(phi);
        Cyclotomic { m: a.m, c: prod }
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to the modulus).
    pub fn galois(&self, k: i64) -> Self {
        let k = k.rem_euclid(self.m as i64) as u64;
        debug_assert_eq!(self.m.gcd(&k.max(1)), if self.m == 1 { 1 } else { self.m.gcd(&k) });
        let terms: Vec<(u64, BigInt)> = self.terms().into_iter().map(|(e, v)| (e * k % self.m, v)).collect();
        Self::from_terms(self.m, &terms)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Image in F_q under ζ_m ↦ `root`.
    pub fn eval_mod(&self, q: u64, root: u64) -> u64 {
        let mut acc = 0u64;
        let mut pw = 1u64;
        for x in &self.c {
            if !x.is_zero() {
                let r = (x % BigInt::from(q)).to_i64().unwrap();
                acc = modp::add_mod(acc, modp::mul_mod(modp::from_i64(r, q), pw, q), q);
            }
            pw = modp::mul_mod(pw, root, q);
        }
        acc
    }

    /// Coefficients as i64 (all character values in practice).
    pub fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.c.iter().map(|x| x.to_i64()).collect()
    }

    /// Order key at a fixed modulus: modulus first, then coefficients.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.m.cmp(&other.m).then_with(|| self.c.cmp(&other.c))
    }

    pub fn abs_max_coeff(&self) -> BigInt {
        self.c.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.c == other.c;
        }
        let (a, b) = self.aligned(other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.c[0]);
        }
        let mut parts = Vec::new();
        for (e, v) in self.terms() {
            let z = match e {
                0 => String::new(),
                1 => format!("z{}", self.m),
                _ => format!("z{}^{}", self.m, e),
            };
            parts.push(match (z.is_empty(), v.is_one(), (-&v).is_one()) {
                (true, _, _) => v.to_string(),
                (false, true, _) => z,
                (false, _, true) => format!("-{z}"),
                _ => format!("{v}*{z}"),
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// File shape: `{"modulus": m, "terms": [[e, "c"], ...]}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CyclotomicJson {
    pub modulus: u64,
    pub terms: Vec<(u64, BigIntString)>,
}

/// A big integer written as a decimal string; plain JSON integers are accepted on input.
#[derive(Clone, Debug, PartialEq)]
pub struct BigIntString(pub BigInt);

impl Serialize for BigIntString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for BigIntString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s
                .parse::<BigInt>()
                .map(BigIntString)
                .map_err(|e| serde::de::Error::custom(format!("bad integer {s:?}: {e}"))),
            serde_json::Value::Number(n) => n
                .to_string()
                .parse::<BigInt>()
                .map(BigIntString)
                .map_err(|e| serde::de::Error::custom(format!("bad integer {n}: {e}"))),
            other => Err(serde::de::Error::custom(format!("expected integer, got {other}"))),
        }
    }
}

impl Cyclotomic {
    pub fn to_json(&self) -> CyclotomicJson {
        CyclotomicJson {
            modulus: self.m,
            terms: self.terms().into_iter().map(|(e, v)| (e, BigIntString(v))).collect(),
        }
    }

    pub fn from_json(j: &CyclotomicJson) -> Result<Self> {
        if j.modulus == 0 {
            return Err(Error::Format("cyclotomic modulus must be positive".into()));
        }
        let terms: Vec<(u64, BigInt)> = j.terms.iter().map(|(e, v)| (*e, v.0.clone())).collect();
        Ok(Self::from_terms(j.modulus, &terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_identities() {
        // 1 + ζ3 + ζ3^2 = 0
        let s = Cyclotomic::from_terms(3, &[(0, 1.into()), (1, 1.into()), (2, 1.into())]);
        assert!(s.is_zero());
        // i^2 = -1
        let i = Cyclotomic::root(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_int(-1));
        // ζ8 + ζ8^7 = sqrt 2, squared is 2
        let r2 = Cyclotomic::root(8, 1).add(&Cyclotomic::root(8, 7));
        assert_eq!(r2.mul(&r2), Cyclotomic::from_int(2));
        // ζ3 written over ζ6
        let z3 = Cyclotomic::root(3, 1);
        assert_eq!(z3.to_modulus(6), Cyclotomic::root(6, 2));
        assert_eq!(z3.conj(), Cyclotomic::root(3, 2));
        assert_eq!(z3.add(&z3.conj()), Cyclotomic::from_int(-1));
        assert_eq!(euler_phi(840), 192);
        let j = z3.to_json();
        assert_eq!(Cyclotomic::from_json(&j).unwrap(), z3);
    }

    #[test]
    fn eval_is_a_ring_map() {
        let f = modp::ModField::for_exponent(12);
        let a = Cyclotomic::from_terms(12, &[(1, 3.into()), (5, (-2).into())]);
        let b = Cyclotomic::from_terms(4, &[(1, 7.into()), (0, 1.into())]);
        let r12 = f.root(12);
        let prod = a.mul(&b);
        let lhs = prod.eval_mod(f.q, r12);
        let rhs = f.mul(a.eval_mod(f.q, r12), b.to_modulus(12).eval_mod(f.q, r12));
        assert_eq!(lhs, rhs);
        assert_eq!(b.eval_mod(f.q, f.root(4)), b.to_modulus(12).eval_mod(f.q, r12));
    }
}
