//! Permutation representations of the groups used in tests, examples and the
//! table-reproduction suite.

mod field;

use std::collections::HashMap;

pub use field::Gf;

use crate::error::{Error, Result};
use crate::groupcore::{sylow, FiniteGroup, PermGroup, Permutation, Subgroup};

fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid fixture cycles")
}

fn group(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).expect("fixture degrees agree")
}

pub fn cyclic(n: usize) -> PermGroup {
    let c: Vec<u32> = (1..=n as u32).collect();
    group(n, vec![perm(n, &[&c])])
}

/// Dihedral group of order 2n on n points.
pub fn dihedral(n: usize) -> PermGroup {
    let c: Vec<u32> = (1..=n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    group(n, vec![perm(n, &[&c]), Permutation::from_images(refl).unwrap()])
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return group(n.max(1), vec![]);
    }
    let c: Vec<u32> = (1..=n as u32).collect();
    group(n, vec![perm(n, &[&[1, 2]]), perm(n, &[&c])])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return group(n.max(1), vec![]);
    }
    let gens = (3..=n as u32).map(|k| perm(n, &[&[1, 2, k]])).collect();
    group(n, gens)
}

/// Quaternion group in its regular representation on 8 points.
pub fn quaternion8() -> PermGroup {
    // elements ±1, ±i, ±j, ±k numbered 1..8 as 1,i,j,k,-1,-i,-j,-k
    let li = perm(8, &[&[1, 2, 5, 6], &[3, 8, 7, 4]]);
    let lj = perm(8, &[&[1, 3, 5, 7], &[2, 4, 6, 8]]);
    group(8, vec![li, lj])
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.direct_sum(&Permutation::identity(b.degree()))).collect();
    gens.extend(b.generators().iter().map(|h| Permutation::identity(a.degree()).direct_sum(h)));
    group(n, gens)
}

type Mat = Vec<Vec<u32>>;

fn mat_vec(f: &Gf, m: &Mat, v: &[u32]) -> Vec<u32> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y))))
        .collect()
}

fn normalize(f: &Gf, v: &[u32]) -> Vec<u32> {
    let first = v.iter().copied().find(|&x| x != 0).unwrap();
    let s = f.inv(first);
    v.iter().map(|&x| f.mul(x, s)).collect()
}

fn all_vectors(f: &Gf, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                f.elements().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Permutation action of matrices on a set of (projective, if requested) points.
struct Action {
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
    projective: bool,
}

impl Action {
    fn new(points: Vec<Vec<u32>>, projective: bool) -> Self {
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        Action { points, index, projective }
    }

    fn perm(&self, f: &Gf, m: &Mat) -> Permutation {
        let img = self
            .points
            .iter()
            .map(|v| {
                let w = mat_vec(f, m, v);
                let w = if self.projective { normalize(f, &w) } else { w };
                self.index[&w]
            })
            .collect();
        Permutation::from_images(img).expect("matrix permutes the point set")
    }
}

fn identity_mat(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

/// Adds generators one at a time, skipping those already in the group, until
/// the group reaches `order`.
fn greedy(degree: usize, cands: impl IntoIterator<Item = Permutation>, order: u64) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut cur = group(degree, vec![]);
    for c in cands {
        if cur.contains(&c) {
            continue;
        }
        gens.push(c);
        cur = group(degree, gens.clone());
        if cur.order_u64().ok() == Some(order) {
            return Ok(cur);
        }
    }
    Err(Error::internal(format!("generators reached order {:?}, expected {order}", cur.order_u64().ok())))
}

fn transvections(n: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = identity_mat(n);
                m[i][j] = 1;
                out.push(m);
            }
        }
    }
    out
}

fn order_gl(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

/// SL_n(p), p prime, acting on the nonzero vectors of F_p^n.
pub fn sl(n: usize, p: u32) -> Result<PermGroup> {
    let f = Gf::new(p, 1);
    let pts: Vec<Vec<u32>> = all_vectors(&f, n).into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
    let act = Action::new(pts, false);
    let order = order_gl(n as u32, p as u64) / (p as u64 - 1);
    greedy(act.points.len(), transvections(n).iter().map(|m| act.perm(&f, m)), order)
}

/// PSL_n(p), p prime, acting on the points of projective space.
pub fn psl(n: usize, p: u32) -> Result<PermGroup> {
    let f = Gf::new(p, 1);
    let pts: Vec<Vec<u32>> = all_vectors(&f, n)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .filter(|v| *v == normalize(&f, v))
        .collect();
    let act = Action::new(pts, true);
    let d = num_integer::gcd(n as u64, p as u64 - 1);
    let order = order_gl(n as u32, p as u64) / (p as u64 - 1) / d;
    greedy(act.points.len(), transvections(n).iter().map(|m| act.perm(&f, m)), order)
}

/// PSU_3(q) acting on the q³+1 isotropic points of the hermitian form
/// x₁ȳ₃ + x₂ȳ₂ + x₃ȳ₁ over GF(q²).
pub fn psu3(q: u32) -> Result<PermGroup> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
    let f = Gf::new(p, 2 * k);
    let bar = |x: u32| f.pow(x, q as u64);
    let form = |u: &[u32], v: &[u32]| {
        let t0 = f.mul(u[0], bar(v[2]));
        let t1 = f.mul(u[1], bar(v[1]));
        let t2 = f.mul(u[2], bar(v[0]));
        f.add(f.add(t0, t1), t2)
    };
    let preserves = |m: &Mat| {
        let cols: Vec<Vec<u32>> = (0..3).map(|j| (0..3).map(|i| m[i][j]).collect()).collect();
        (0..3).all(|i| {
            (0..3).all(|j| {
                let e: Vec<u32> = (0..3).map(|t| u32::from(t == i)).collect();
                let g: Vec<u32> = (0..3).map(|t| u32::from(t == j)).collect();
                form(&cols[i], &cols[j]) == form(&e, &g)
            })
        })
    };
    let pts: Vec<Vec<u32>> = all_vectors(&f, 3)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .filter(|v| *v == normalize(&f, v) && form(v, v) == 0)
        .collect();
    let act = Action::new(pts, true);
    let mut cands = Vec::new();
    let minus = f.neg(1);
    for w in [vec![vec![0, 0, 1], vec![0, minus, 0], vec![1, 0, 0]], vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]] {
        if preserves(&w) {
            cands.push(w);
            break;
        }
    }
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let m = vec![vec![1, a, b], vec![0, 1, c], vec![0, 0, 1]];
                if (a, b, c) != (0, 0, 0) && preserves(&m) {
                    cands.push(m);
                }
            }
        }
    }
    let q64 = q as u64;
    let order = q64.pow(3) * (q64.pow(3) + 1) * (q64 * q64 - 1) / num_integer::gcd(3, q64 + 1);
    greedy(act.points.len(), cands.iter().map(|m| act.perm(&f, m)), order)
}

/// PSp_4(p) acting on the points of projective 3-space, generated by symplectic transvections.
pub fn psp4(p: u32) -> Result<PermGroup> {
    let f = Gf::new(p, 1);
    let b = |x: &[u32], y: &[u32]| {
        let s = f.add(f.mul(x[0], y[2]), f.mul(x[1], y[3]));
        let t = f.add(f.mul(x[2], y[0]), f.mul(x[3], y[1]));
        f.sub(s, t)
    };
    let pts: Vec<Vec<u32>> = all_vectors(&f, 4)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .filter(|v| *v == normalize(&f, v))
        .collect();
    let act = Action::new(pts.clone(), true);
    let cands = pts.iter().map(|v| {
        // x ↦ x + B(x, v) v, as a matrix acting on columns
        let m: Mat = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let e: Vec<u32> = (0..4).map(|t| u32::from(t == j)).collect();
                        f.add(u32::from(i == j), f.mul(b(&e, v), v[i]))
                    })
                    .collect()
            })
            .collect();
        act.perm(&f, &m)
    });
    let q = p as u64;
    let order = q.pow(4) * (q * q - 1) * (q.pow(4) - 1) / num_integer::gcd(2, q - 1);
    greedy(act.points.len(), cands, order)
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (x == 1).then_some((p, k))
}

pub fn mathieu11() -> PermGroup {
    group(11, vec![perm(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]), perm(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]])])
}

pub fn mathieu12() -> PermGroup {
    group(
        12,
        vec![
            perm(12, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]),
            perm(12, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]),
            perm(12, &[&[1, 12], &[2, 11], &[3, 6], &[4, 8], &[5, 9], &[7, 10]]),
        ],
    )
}

/// The extraspecial group 5^{1+2} of exponent 5 extended by a quaternion group
/// of automorphisms fixing the centre, acting on the 125 elements of the
/// extraspecial group (translations and automorphisms).
///
/// Elements are triples (a, b, c) with product
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+3(ab'-ba')), 3 being 1/2 mod 5,
/// so [x, y] = z for x = (1,0,0), y = (0,1,0), z = (0,0,1). A matrix in
/// SL₂(5) acts by (v, c) ↦ (Av, c).
pub fn extraspecial_by_quaternion() -> PermGroup {
    let idx = |a: u32, b: u32, c: u32| (a % 5) * 25 + (b % 5) * 5 + c % 5;
    let mul = |(a, b, c): (u32, u32, u32), (d, e, g): (u32, u32, u32)| {
        let w = (3 * (a * e + 5 * 5 - (b * d) % 5)) % 5;
        ((a + d) % 5, (b + e) % 5, (c + g + w) % 5)
    };
    let elems: Vec<(u32, u32, u32)> = (0..125).map(|i| (i / 25, (i / 5) % 5, i % 5)).collect();
    let translate = |t: (u32, u32, u32)| {
        let img = elems
            .iter()
            .map(|&x| {
                let (a, b, c) = mul(t, x);
                idx(a, b, c)
            })
            .collect();
        Permutation::from_images(img).unwrap()
    };
    let auto = |m: [[u32; 2]; 2]| {
        let img = elems
            .iter()
            .map(|&(a, b, c)| idx(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b, c))
            .collect();
        Permutation::from_images(img).unwrap()
    };
    group(
        125,
        vec![
            translate((1, 0, 0)),
            translate((0, 1, 0)),
            auto([[2, 0], [0, 3]]),
            auto([[0, 1], [4, 0]]),
        ],
    )
}

/// Structural checks on `extraspecial_by_quaternion`: order 1000, a normal
/// extraspecial Sylow 5-subgroup L of exponent 5, a quaternion Sylow
/// 2-subgroup P with C_L(P) = Z(L), and a point stabilizer with trivial core
/// (so the action on 125 points is the action on the cosets of P).
pub fn check_extraspecial_by_quaternion(g: &FiniteGroup) -> Result<()> {
    let fail = |what: &str| Err(Error::Integrity(format!("5^1+2:Q8 fixture: {what}")));
    if g.order() != 1000 {
        return fail("order is not 1000");
    }
    let whole = Subgroup::whole(g);
    let l = sylow(g, 5);
    if l.order() != 125 || !l.is_normal_in(g, &whole) || l.elements().any(|x| g.elem_order(x) > 5) {
        return fail("Sylow 5-subgroup is not normal of order 125 and exponent 5");
    }
    let z = Subgroup::filter(g, &l, |x| l.gens().iter().all(|&s| g.commute(s, x)));
    if z.order() != 5 {
        return fail("centre of the Sylow 5-subgroup does not have order 5");
    }
    let p = sylow(g, 2);
    let involutions = p.elements().filter(|&x| g.elem_order(x) == 2).count();
    if p.order() != 8 || involutions != 1 {
        return fail("Sylow 2-subgroup is not quaternion");
    }
    let c = Subgroup::filter(g, &l, |x| p.gens().iter().all(|&s| g.commute(s, x)));
    if c != z {
        return fail("C_L(P) differs from Z(L)");
    }
    let stab = Subgroup::filter(g, &whole, |x| g.elem(x).image(0) == 0);
    let core = Subgroup::filter(g, &stab, |x| (0..g.order() as u32).all(|t| stab.contains(g.conj(t, x))));
    if stab.order() != 8 || core.order() != 1 {
        return fail("point stabilizer is not a core-free subgroup of order 8");
    }
    Ok(())
}

/// Names accepted by `by_name` (case-sensitive), besides the parametrized
/// families Sn, An, Cn, Dn (order n), SL2(p), SL3(p), PSL3(p), PSL4(2),
/// PSU3(q), PSp4(p) and products written AxB.
pub const NAMED: &[&str] = &["Q8", "M11", "M12", "5^1+2:Q8"];

/// Looks up a fixture by name, e.g. "S4", "A5", "D8", "SL2(11)", "PSU3(3)",
/// "M11", "D8xC3".
pub fn by_name(name: &str) -> Result<PermGroup> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('x') {
        return Ok(direct_product(&by_name(a)?, &by_name(b)?));
    }
    let bad = || Error::Domain(format!("unknown fixture group {name:?}"));
    let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
    let arg = |s: &str, pre: &str| -> Result<u32> {
        num(s.strip_prefix(pre).and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?)
    };
    match name {
        "Q8" => return Ok(quaternion8()),
        "M11" => return Ok(mathieu11()),
        "M12" => return Ok(mathieu12()),
        "5^1+2:Q8" => return Ok(extraspecial_by_quaternion()),
        _ => {}
    }
    if name.starts_with("SL2(") {
        return sl(2, arg(name, "SL2(")?);
    }
    if name.starts_with("SL3(") {
        return sl(3, arg(name, "SL3(")?);
    }
    if name.starts_with("PSL3(") {
        return psl(3, arg(name, "PSL3(")?);
    }
    if name.starts_with("PSL4(") {
        return psl(4, arg(name, "PSL4(")?);
    }
    if name.starts_with("PSU3(") {
        return psu3(arg(name, "PSU3(")?);
    }
    if name.starts_with("PSp4(") {
        return psp4(arg(name, "PSp4(")?);
    }
    let (head, rest) = name.split_at(1);
    let n = num(rest)? as usize;
    match head {
        "S" => Ok(symmetric(n)),
        "A" => Ok(alternating(n)),
        "C" => Ok(cyclic(n)),
        "D" if n % 2 == 0 => Ok(dihedral(n / 2)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> u64 {
        by_name(name).unwrap().order_u64().unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(order("S4"), 24);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("D8"), 8);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("C6"), 6);
        assert_eq!(order("SL2(3)"), 24);
        assert_eq!(order("SL2(11)"), 1320);
        assert_eq!(order("SL3(3)"), 5616);
        assert_eq!(order("PSU3(3)"), 6048);
        assert_eq!(order("PSp4(3)"), 25920);
        assert_eq!(order("PSL4(2)"), 20160);
        assert_eq!(order("M11"), 7920);
        assert_eq!(order("M12"), 95040);
        assert_eq!(order("5^1+2:Q8"), 1000);
        assert_eq!(order("D8xC3"), 24);
        assert!(by_name("X9").is_err());
    }

    #[test]
    fn order_1000_structure() {
        let b = crate::groupcore::Budget::default();
        let g = FiniteGroup::from_perm_group(&extraspecial_by_quaternion(), &b).unwrap();
        check_extraspecial_by_quaternion(&g).unwrap();
        let s5 = FiniteGroup::from_perm_group(&symmetric(5), &b).unwrap();
        assert!(check_extraspecial_by_quaternion(&s5).is_err());
    }
}
