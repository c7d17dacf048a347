//! Character tables by the Dixon–Schneider method: common eigenvectors of the
//! class-sum matrices over a small prime field, then exact lifting of the
//! values through root-of-unity multiplicities.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::cyclotomic::Cyclotomic;
use super::linalg::{charpoly, nullspace, roots, rref, Mat};
use super::table::{CharTable, ClassInfo};
use crate::error::{Error, Result};
use crate::groupcore::{Budget, FiniteGroup};
use crate::modp::{self, add_mod, inv_mod, mul_mod, pow_mod, sub_mod};

/// Computes the full table of an enumerated group.
pub fn character_table(g: &FiniteGroup, budget: &Budget) -> Result<CharTable> {
    let k = g.num_classes();
    if k > budget.max_classes || g.order() > budget.max_order {
        return Err(Error::Budget(format!(
            "group of order {} with {} classes exceeds the table budget; supply a table file with load_table",
            g.order(),
            k
        )));
    }
    let n = g.order();
    let e = g.exponent();
    let q = table_prime(n, e);
    let zeta = modp::root_of_unity(q, e);
    let w = central_characters(g, q, 0)?;
    let mut rows = Vec::with_capacity(k);
    for v in &w {
        rows.push(lift_row(g, q, e, zeta, v)?);
    }
    finish(g, rows)
}

/// Smallest prime ≡ 1 mod e above 2√n + 1; small enough to scan for roots.
pub(crate) fn table_prime(n: u64, e: u64) -> u64 {
    let lower = 2 * ((n as f64).sqrt() as u64 + 1) + 1;
    modp::prime_one_mod(e, lower)
}

/// Class-sum matrix for class j: column l holds the class counts of u·z_l for
/// u in the inverse class, so the central character vector w satisfies A w = ω_j w.
fn class_matrix(g: &FiniteGroup, j: usize, q: u64) -> Mat {
    let k = g.num_classes();
    let mut a = vec![vec![0u64; k]; k];
    let inv = g.inv_class(j);
    for &u in &g.classes()[inv].members {
        for (l, cl) in g.classes().iter().enumerate() {
            let i = g.class_of(g.mul(u, cl.rep));
            a[i][l] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= q;
        }
    }
    a
}

/// Normalized central character vectors (w[0] = 1), one per irreducible.
/// `skip` drops the first few matrices from the processing order, which is
/// only used to exercise independence of the result from that order.
pub(crate) fn central_characters(g: &FiniteGroup, q: u64, skip: usize) -> Result<Vec<Vec<u64>>> {
    let k = g.num_classes();
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&j| (g.classes()[j].size, j));
    let r = skip.min(order.len().saturating_sub(1));
    order.rotate_left(r);
    let identity: Mat = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending: Vec<(Mat, Vec<usize>)> = vec![(identity, (0..k).collect())];
    let mut done: Vec<Vec<u64>> = Vec::new();
    if k == 1 {
        return Ok(vec![vec![1]]);
    }
    for &j in &order {
        if pending.is_empty() {
            break;
        }
        let a = class_matrix(g, j, q);
        let mut next = Vec::new();
        for (basis, pivots) in pending {
            for sub in split(&a, &basis, &pivots, q) {
                if sub.0.len() == 1 {
                    done.push(sub.0.into_iter().next().unwrap());
                } else {
                    next.push(sub);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() {
        return Err(Error::internal("class matrices failed to separate the irreducibles"));
    }
    if done.len() != k {
        return Err(Error::internal("wrong number of eigenvectors"));
    }
    for v in done.iter_mut() {
        if v[0] == 0 {
            return Err(Error::internal("eigenvector vanishes at the identity class"));
        }
        let s = inv_mod(v[0], q);
        for x in v.iter_mut() {
            *x = mul_mod(*x, s, q);
        }
    }
    Ok(done)
}

/// Splits an invariant subspace (rows in RREF with the given pivots) into
/// eigenspaces of `a`.
fn split(a: &Mat, basis: &Mat, pivots: &[usize], q: u64) -> Vec<(Mat, Vec<usize>)> {
    let d = basis.len();
    // R[r][s] = coefficient of v_s in A v_r
    let mut r = vec![vec![0u64; d]; d];
    for (ri, v) in basis.iter().enumerate() {
        for (s, &pc) in pivots.iter().enumerate() {
            let mut acc = 0u64;
            for (x, y) in a[pc].iter().zip(v) {
                if *x != 0 && *y != 0 {
                    acc = add_mod(acc, mul_mod(*x, *y, q), q);
                }
            }
            r[ri][s] = acc;
        }
    }
    let lambdas = roots(&charpoly(&r, q), q);
    if lambdas.len() <= 1 {
        return vec![(basis.clone(), pivots.to_vec())];
    }
    let mut out = Vec::new();
    for lam in lambdas {
        // c R = λ c  ⇔  (Rᵀ − λI) cᵀ = 0
        let mt: Mat = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { sub_mod(r[j][i], lam, q) } else { r[j][i] })
                    .collect()
            })
            .collect();
        let ns = nullspace(&mt, d, q);
        let mut vecs: Mat = ns
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (cr, br) in c.iter().zip(basis) {
                    if *cr != 0 {
                        for (x, y) in v.iter_mut().zip(br) {
                            *x = add_mod(*x, mul_mod(*cr, *y, q), q);
                        }
                    }
                }
                v
            })
            .collect();
        let piv = rref(&mut vecs, q);
        out.push((vecs, piv));
    }
    out
}

/// Recovers the degree and the exact values of one irreducible from its
/// normalized central character.
pub(crate) fn lift_row(g: &FiniteGroup, q: u64, e: u64, zeta: u64, w: &[u64]) -> Result<Vec<Cyclotomic>> {
    let n = g.order();
    let classes = g.classes();
    // Σ_l w_l w_{l*} / |C_l| = |G| / d²
    let mut s = 0u64;
    for (l, c) in classes.iter().enumerate() {
        let t = mul_mod(w[l], w[g.inv_class(l)], q);
        s = add_mod(s, mul_mod(t, inv_mod(c.size % q, q), q), q);
    }
    if s == 0 {
        return Err(Error::internal("degenerate norm in degree recovery"));
    }
    let d2 = mul_mod(n % q, inv_mod(s, q), q);
    let bound = (n as f64).sqrt() as u64 + 1;
    let d = (1..=bound)
        .find(|&d| d * d <= n && n % d == 0 && mul_mod(d, d, q) == d2)
        .ok_or_else(|| Error::internal("no admissible degree"))?;
    let vals: Vec<u64> = classes
        .iter()
        .enumerate()
        .map(|(l, c)| mul_mod(d % q, mul_mod(w[l], inv_mod(c.size % q, q), q), q))
        .collect();
    let mut row = Vec::with_capacity(classes.len());
    for (l, c) in classes.iter().enumerate() {
        let o = c.rep_order;
        let zo = pow_mod(zeta, e / o, q);
        let zinv = inv_mod(zo, q);
        let oinv = inv_mod(o % q, q);
        let at: Vec<u64> = (0..o).map(|t| vals[g.power_class(l, t as i64)]).collect();
        let mut mult = vec![0u64; o as usize];
        let mut total = 0u64;
        for r in 0..o {
            let step = pow_mod(zinv, r, q);
            let mut acc = 0u64;
            let mut z = 1u64;
            for &x in &at {
                acc = add_mod(acc, mul_mod(x, z, q), q);
                z = mul_mod(z, step, q);
            }
            let m = mul_mod(acc, oinv, q);
            if m > d {
                return Err(Error::internal(format!("multiplicity {m} exceeds degree {d}")));
            }
            mult[r as usize] = m;
            total += m;
        }
        if total != d {
            return Err(Error::internal("multiplicities do not sum to the degree"));
        }
        row.push(Cyclotomic::from_multiplicities(o, &mult));
    }
    Ok(row)
}

pub(crate) fn class_infos(g: &FiniteGroup) -> Vec<ClassInfo> {
    let pm = g.power_maps();
    g.classes()
        .iter()
        .enumerate()
        .map(|(c, cl)| ClassInfo {
            rep_order: cl.rep_order,
            size: cl.size,
            power_map: pm.iter().map(|(&p, v)| (p, v[c])).collect::<BTreeMap<_, _>>(),
        })
        .collect()
}

/// Canonical row order: degree, trivial character first, then values.
pub(crate) fn sort_rows(rows: &mut [Vec<Cyclotomic>]) {
    let one = Cyclotomic::from_int(1);
    rows.sort_by(|a, b| {
        let da = a[0].to_integer();
        let db = b[0].to_integer();
        let ta = !a.iter().all(|v| *v == one);
        let tb = !b.iter().all(|v| *v == one);
        da.cmp(&db).then(ta.cmp(&tb)).then_with(|| {
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| x.canonical_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

pub(crate) fn finish(g: &FiniteGroup, mut rows: Vec<Vec<Cyclotomic>>) -> Result<CharTable> {
    sort_rows(&mut rows);
    let t = CharTable::new(g.order(), class_infos(g), rows, true)?;
    debug_assert_eq!(t.exponent(), g.exponent().lcm(&1));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{PermGroup, Permutation};

    fn grp(n: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
        let gs = gens.iter().map(|c| Permutation::from_cycles(n, c).unwrap()).collect();
        FiniteGroup::from_perm_group(&PermGroup::new(n, gs).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn s3_degrees() {
        let t = character_table(&grp(3, &[&[&[1, 2]], &[&[1, 2, 3]]]), &Budget::default()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
    }

    #[test]
    fn c4_linear() {
        let g = grp(4, &[&[&[1, 2, 3, 4]]]);
        let t = character_table(&g, &Budget::default()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1]);
        let i = Cyclotomic::root(4, 1);
        // some row takes the value i on some class of order 4
        assert!(t.irreducibles().iter().any(|r| r.iter().any(|v| *v == i)));
    }

    #[test]
    fn s4_and_orders_independent() {
        let g = grp(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let t = character_table(&g, &Budget::default()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
        let q = table_prime(g.order(), g.exponent());
        let mut a = central_characters(&g, q, 0).unwrap();
        let mut b = central_characters(&g, q, 2).unwrap();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_error() {
        let g = grp(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let b = Budget { max_order: 10, max_classes: 100 };
        assert_eq!(character_table(&g, &b).unwrap_err().kind(), "budget");
    }
}
