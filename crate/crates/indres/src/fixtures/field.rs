/// GF(p^k) with elements encoded as integers 0..p^k (base-p digits are the
/// coefficients of the polynomial basis, constant term lowest).
#[derive(Clone, Debug)]
pub struct Gf {
    pub p: u32,
    pub k: u32,
    pub size: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |a, &c| a * p + c)
}

/// Product of two polynomials reduced by the monic modulus (low degree first, without the leading 1).
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (k..2 * k).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for (j, &m) in modulus.iter().enumerate() {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

impl Gf {
    pub fn new(p: u32, k: u32) -> Self {
        let size = p.pow(k);
        // least monic irreducible of degree k
        let modulus = (0..size)
            .map(|m| digits(m, p, k))
            .find(|m| k == 1 || is_irreducible(m, p))
            .expect("an irreducible polynomial exists");
        let n = size as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..size {
            let da = digits(a, p, k);
            for b in 0..size {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * size + b) as usize] = encode(&s, p);
                mul[(a * size + b) as usize] = encode(&poly_mulmod(&da, &db, &modulus, p), p);
            }
        }
        Gf { p, k, size, add, mul }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.size + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.size + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.size).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert_ne!(a, 0);
        (1..self.size).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut r = 1;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    /// The prime-field element n·1.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.size
    }

    pub fn primitive(&self) -> u32 {
        (1..self.size)
            .find(|&a| (1..self.size as u64 - 1).all(|e| self.pow(a, e) != 1))
            .unwrap()
    }
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    // a monic polynomial of degree k is irreducible iff it has no monic factor of degree <= k/2
    let k = m.len();
    let mut full = m.to_vec();
    full.push(1);
    for d in 1..=k / 2 {
        for f in 0..p.pow(d as u32) {
            let mut fac = digits(f, p, d as u32);
            fac.push(1);
            if divides(&fac, &full, p) {
                return false;
            }
        }
    }
    true
}

fn divides(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r = g.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        if c != 0 {
            for (j, &x) in f.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * x % p) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for (p, k) in [(2, 4), (3, 2), (5, 2), (7, 1)] {
            let f = Gf::new(p, k);
            for a in 1..f.size {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            let g = f.primitive();
            assert_eq!(f.pow(g, f.size as u64 - 1), 1);
        }
    }
}
