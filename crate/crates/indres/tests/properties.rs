use std::rc::Rc;

use proptest::prelude::*;

use indres::chartab::CharTable;
use indres::classfun::{GroupData, VirtualCharacter};
use indres::correspondence::{omega, product_dual, transform_i, transform_r, Instance};
use indres::fixtures;
use indres::groupcore::{Budget, FiniteGroup};
use indres::lattice::{quotient_invariants, IntLattice, Invariants};

thread_local! {
    static S4: Rc<Instance> = Rc::new(instance("S4", 2));
    static SL2_11: Rc<Instance> = Rc::new(instance("SL2(11)", 2));
}

fn instance(name: &str, p: u64) -> Instance {
    let b = Budget::default();
    let g = FiniteGroup::from_perm_group(&fixtures::by_name(name).unwrap(), &b).unwrap();
    Instance::sylow(name, GroupData::compute(g, &b).unwrap(), p, &b).unwrap()
}

fn matrix(rows: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-12i64..=12, dim), 0..=rows)
}

fn lattice(dim: usize, gens: &[Vec<i64>]) -> IntLattice {
    IntLattice::from_generators(dim, gens.iter().map(|v| v.as_slice())).unwrap()
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

/// σ_k acting on Irr as a permutation of rows.
fn galois_perm(t: &CharTable, k: i64) -> Vec<usize> {
    let rows = t.irreducibles();
    rows.iter()
        .map(|r| {
            let img: Vec<_> = r.iter().map(|v| v.galois(k)).collect();
            rows.iter().position(|s| *s == img).expect("Galois image is a row")
        })
        .collect()
}

fn coprime_units(n: u64) -> Vec<i64> {
    (1..n as i64).filter(|&k| num_integer::gcd(k, n as i64) == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_idempotent(gens in matrix(6, 5)) {
        let l = lattice(5, &gens);
        let again = IntLattice::from_big_generators(5, l.hnf()).unwrap();
        prop_assert_eq!(again.hnf(), l.hnf());
        prop_assert_eq!(l.sum(&l).unwrap(), l.clone());
        for g in &gens {
            prop_assert!(l.contains(g).unwrap());
        }
    }

    #[test]
    fn hnf_ignores_generator_order(gens in matrix(6, 4)) {
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(lattice(4, &gens), lattice(4, &rev));
    }

    #[test]
    fn quotient_free_rank(gens in matrix(6, 5)) {
        let l = lattice(5, &gens);
        let q = quotient_invariants(&IntLattice::full(5), &l).unwrap();
        prop_assert_eq!(q.free_rank, 5 - l.rank());
        let back: Invariants = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn intersection_lies_in_both(a in matrix(4, 4), b in matrix(4, 4)) {
        let (la, lb) = (lattice(4, &a), lattice(4, &b));
        let i = la.intersect(&lb).unwrap();
        prop_assert!(i.is_sublattice_of(&la).unwrap());
        prop_assert!(i.is_sublattice_of(&lb).unwrap());
    }

    #[test]
    fn dual_is_an_involution(c in coeffs(10)) {
        SL2_11.with(|inst| {
            let t = &inst.h.table;
            let n = t.num_classes();
            let v = VirtualCharacter::from_coeffs(t, c[..n.min(10)].iter().copied().chain(std::iter::repeat(0)).take(n).collect()).unwrap();
            prop_assert_eq!(v.dual(t).dual(t), v.clone());
            prop_assert_eq!(v.dual(t).degree(t), v.degree(t));
            Ok(())
        })?;
    }

    #[test]
    fn frobenius_reciprocity(a in coeffs(32), b in coeffs(32)) {
        SL2_11.with(|inst| {
            let (g, h) = (&inst.g.table, &inst.h.table);
            let chi = VirtualCharacter::from_coeffs(g, a.iter().copied().cycle().take(g.num_classes()).collect()).unwrap();
            let phi = VirtualCharacter::from_coeffs(h, b.iter().copied().cycle().take(h.num_classes()).collect()).unwrap();
            let lhs = inst.fusion.induce(&phi).unwrap().inner(&chi).unwrap();
            let rhs = phi.inner(&inst.fusion.restrict(&chi).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
    }

    #[test]
    fn omega_transforms(a in coeffs(8), b in coeffs(8)) {
        S4.with(|inst| {
            let (g, h) = (&inst.g.table, &inst.h.table);
            let bl = inst.blocks_with_defect_p()[0];
            let e = inst.correspondent_of(bl).unwrap();
            let om = omega(inst, bl).unwrap();
            let chi = VirtualCharacter::from_coeffs(g, a[..g.num_classes()].to_vec()).unwrap();
            let phi = VirtualCharacter::from_coeffs(h, b[..h.num_classes()].to_vec()).unwrap();
            // I_ω(φ) = Proj_b Ind φ and R_ω̄(χ) = Proj_e Res χ
            let ind = inst.fusion.induce(&phi).unwrap().project(&inst.g_blocks[bl].chars);
            prop_assert_eq!(transform_i(inst, &om, &phi).unwrap(), ind);
            let om_bar = product_dual(inst, &om).unwrap();
            let res = inst.fusion.restrict(&chi).unwrap().project(&inst.h_blocks[e].chars);
            prop_assert_eq!(transform_r(inst, &om_bar, &chi).unwrap(), res);
            prop_assert_eq!(product_dual(inst, &om_bar).unwrap(), om.clone());
            // ⟨I_μ(φ), χ⟩ = ⟨φ̄, R_μ(χ̄)⟩
            let lhs = transform_i(inst, &om, &phi).unwrap().inner(&chi).unwrap();
            let rhs = phi.dual(h).inner(&transform_r(inst, &om, &chi.dual(g)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
    }
}

#[test]
fn induced_lattice_is_galois_stable() {
    SL2_11.with(|inst| {
        let t = &inst.h.table;
        for k in coprime_units(t.exponent()) {
            let perm = galois_perm(t, k);
            for row in inst.i_h.hnf() {
                let mut img = vec![num_bigint::BigInt::from(0); row.len()];
                for (i, x) in row.iter().enumerate() {
                    img[perm[i]] = x.clone();
                }
                assert!(inst.i_h.contains_big(&img).unwrap(), "sigma_{k}");
            }
        }
        let g = inst.i_g().unwrap();
        let tg = &inst.g.table;
        for k in coprime_units(tg.exponent()) {
            let perm = galois_perm(tg, k);
            for row in g.hnf() {
                let mut img = vec![num_bigint::BigInt::from(0); row.len()];
                for (i, x) in row.iter().enumerate() {
                    img[perm[i]] = x.clone();
                }
                assert!(g.contains_big(&img).unwrap(), "sigma_{k}");
            }
        }
    });
}
