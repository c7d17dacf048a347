//! Dense linear algebra over a word-sized prime field.

use crate::modp::{add_mod, inv_mod, mul_mod, sub_mod};

pub type Mat = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Mat, q: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], q);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = mul_mod(f, m[r][j], q);
                    m[i][j] = sub_mod(m[i][j], t, q);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of {x : A x = 0} for an r x c matrix A.
pub fn nullspace(a: &Mat, cols: usize, q: u64) -> Mat {
    let mut m = a.clone();
    let pivots = rref(&mut m, q);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = sub_mod(0, m[i][f], q);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial det(xI - A), low degree first, via reduction to
/// Hessenberg form.
pub fn charpoly(a: &Mat, q: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], q);
        for i in m + 1..n {
            if h[i][m - 1] == 0 {
                continue;
            }
            let u = mul_mod(h[i][m - 1], inv, q);
            for j in 0..n {
                let t = mul_mod(u, h[m][j], q);
                h[i][j] = sub_mod(h[i][j], t, q);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], q);
                row[m] = add_mod(row[m], t, q);
            }
        }
    }
    // p_0 = 1; p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} prod(subdiag) p_{i-1}
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &ps[m - 1];
        let mut pm = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            pm[d + 1] = add_mod(pm[d + 1], c, q);
            pm[d] = sub_mod(pm[d], mul_mod(c, h[m - 1][m - 1], q), q);
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], q);
            let coef = mul_mod(t, h[m - i - 1][m - 1], q);
            if coef == 0 {
                continue;
            }
            for (d, &c) in ps[m - i - 1].iter().enumerate() {
                pm[d] = sub_mod(pm[d], mul_mod(coef, c, q), q);
            }
        }
        ps.push(pm);
    }
    ps.pop().unwrap()
}

pub fn poly_eval(p: &[u64], x: u64, q: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, q), c, q))
}

/// Distinct roots in F_q by exhaustive evaluation (q is small here).
pub fn roots(p: &[u64], q: u64) -> Vec<u64> {
    (0..q).filter(|&x| poly_eval(p, x, q) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_det() {
        let q = 101;
        let a = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        let p = charpoly(&a, q);
        // det(xI - A) = x^3 - 9x^2 + 24x - 18
        assert_eq!(p, vec![q - 18, 24, q - 9, 1]);
        let ns = nullspace(&vec![vec![1, 2, 3], vec![2, 4, 6]], 3, q);
        assert_eq!(ns.len(), 2);
        assert_eq!(roots(&[q - 1, 0, 1], q), vec![1, 100]);
    }
}
