//! Word-sized prime field helpers shared by the character-table and lattice code.

pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % q as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        q - (b - a)
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, q);
        }
        b = mul_mod(b, b, q);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime.
pub fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(a % q != 0);
    pow_mod(a, q - 2, q)
}

/// Reduce a signed integer into [0, q).
pub fn from_i64(v: i64, q: u64) -> u64 {
    let r = (v as i128).rem_euclid(q as i128);
    r as u64
}

/// Symmetric lift of a residue to (-q/2, q/2].
pub fn lift(v: u64, q: u64) -> i64 {
    if v > q / 2 {
        -((q - v) as i64)
    } else {
        v as i64
    }
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorisation, fine for group orders and exponents.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// p-adic valuation; `n` must be nonzero.
pub fn val(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// The p'-part of n.
pub fn p_prime_part(mut n: u64, p: u64) -> u64 {
    while n % p == 0 {
        n /= p;
    }
    n
}

/// Smallest prime q > lower with q = 1 mod n.
pub fn prime_one_mod(n: u64, lower: u64) -> u64 {
    let mut q = (lower / n + 1) * n + 1;
    while !is_prime(q) {
        q += n;
    }
    q
}

/// The least element of F_q of exact multiplicative order n (n | q-1).
pub fn root_of_unity(q: u64, n: u64) -> u64 {
    assert!((q - 1) % n == 0, "{n} does not divide {q}-1");
    let primes = prime_divisors(n);
    let mut x = 2u64;
    loop {
        let y = pow_mod(x, (q - 1) / n, q);
        if primes.iter().all(|&r| pow_mod(y, n / r, q) != 1) && (n > 1 || y == 1) {
            return y;
        }
        x += 1;
    }
}

/// A large prime field with a chosen primitive n-th root of unity. Integers of
/// absolute value below `q/2` survive reduction and symmetric lifting exactly.
#[derive(Clone, Debug)]
pub struct ModField {
    pub q: u64,
    pub n: u64,
    pub zeta: u64,
}

impl ModField {
    /// Smallest prime above 2^61 that is 1 mod n.
    pub fn for_exponent(n: u64) -> Self {
        let q = prime_one_mod(n, 1u64 << 61);
        let zeta = root_of_unity(q, n);
        ModField { q, n, zeta }
    }

    /// Image of the primitive m-th root of unity, m | n.
    pub fn root(&self, m: u64) -> u64 {
        assert!(self.n % m == 0, "modulus {m} does not divide {}", self.n);
        pow_mod(self.zeta, self.n / m, self.q)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.q)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.q)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.q)
    }

    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.q)
    }

    pub fn lift(&self, a: u64) -> i64 {
        lift(a, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(2305843009213693951));
        assert!(!is_prime(2305843009213693953));
        let f = ModField::for_exponent(840);
        assert_eq!((f.q - 1) % 840, 0);
        assert!(f.q > 1 << 61);
        assert_eq!(pow_mod(f.zeta, 840, f.q), 1);
        assert_ne!(pow_mod(f.zeta, 420, f.q), 1);
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(lift(f.q - 3, f.q), -3);
    }
}
