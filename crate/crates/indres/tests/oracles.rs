use indres::chartab::brute::{brute_class_sizes, brute_table};
use indres::chartab::{character_table, inner_product, parse_table, reconcile, CharTable};
use indres::classfun::GroupData;
use indres::correspondence::{brute_induced_lattice, induced_lattice, quotient_consistency, Instance};
use indres::fixtures;
use indres::groupcore::{intersection_set_maxima, normalizer, sylow, Budget, FiniteGroup, Permutation, Subgroup};

fn group(name: &str) -> FiniteGroup {
    FiniteGroup::from_perm_group(&fixtures::by_name(name).unwrap(), &Budget::default()).unwrap()
}

fn data(name: &str) -> GroupData {
    GroupData::compute(group(name), &Budget::default()).unwrap()
}

fn rows(t: &CharTable) -> Vec<String> {
    let mut v: Vec<String> = t.to_json().irreducibles.iter().map(|r| serde_json::to_string(r).unwrap()).collect();
    v.sort();
    v
}

#[test]
fn class_sizes_match_brute_force() {
    for name in ["S3", "Q8", "A4", "S4", "A5", "S5"] {
        let perm = fixtures::by_name(name).unwrap();
        let g = group(name);
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size as usize).collect();
        sizes.sort_unstable();
        assert_eq!(brute_class_sizes(&perm), sizes, "{name}");
    }
}

#[test]
fn tables_match_brute_force() {
    for name in ["S3", "Q8", "A4", "S4", "A5"] {
        let g = group(name);
        let t = character_table(&g, &Budget::default()).unwrap();
        assert_eq!(rows(&brute_table(&g).unwrap()), rows(&t), "{name}");
    }
    let mut d = brute_table(&group("S3")).unwrap().degrees().to_vec();
    d.sort_unstable();
    assert_eq!(d, vec![1, 1, 2]);
}

#[test]
fn induced_lattice_matches_definition() {
    for (name, p) in [("S3", 3), ("S4", 2), ("S4", 3), ("A4", 2), ("A5", 2), ("A5", 3), ("A5", 5)] {
        let g = data(name);
        let pg = sylow(&g.group, p);
        let s = intersection_set_maxima(&g.group, &pg, &normalizer(&g.group, &pg)).unwrap();
        let fast = induced_lattice(&g, p, &s.maxima, &Budget::default()).unwrap();
        let brute = brute_induced_lattice(&g, p, &pg, &s.maxima, 200, &Budget::default()).unwrap();
        assert_eq!(fast, brute, "{name} p={p}");
    }
}

#[test]
fn serialized_tables_reconcile() {
    for name in ["S4", "M11"] {
        let g = group(name);
        let t = character_table(&g, &Budget::default()).unwrap();
        let back = parse_table(&serde_json::to_string(&t.to_json()).unwrap()).unwrap();
        let again = reconcile(&back, &g).unwrap();
        assert_eq!(rows(&again), rows(&t), "{name}");
    }
    let a5 = character_table(&group("A5"), &Budget::default()).unwrap();
    assert!(reconcile(&a5, &group("S5")).is_err());
}

#[test]
fn verdicts_descend_to_quotients() {
    let g = data("S4");
    let v4 = Subgroup::from_perms(
        &g.group,
        &[Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(), Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap()],
    )
    .unwrap();
    let c = quotient_consistency(&g, 2, &sylow(&g.group, 2), &v4, &Budget::default()).unwrap();
    assert!(c.consistent);
    assert_eq!(c.verdicts.len(), 5);
    let a4 = data("A4");
    let v = sylow(&a4.group, 2);
    assert!(quotient_consistency(&a4, 2, &v, &v, &Budget::default()).unwrap().consistent);
}

#[test]
fn restriction_multiplicities_are_exact() {
    for (name, p) in [("S4", 2), ("A5", 2), ("SL2(11)", 2), ("M11", 3)] {
        let inst = Instance::sylow(name, data(name), p, &Budget::default()).unwrap();
        let (g, h) = (&inst.g.table, &inst.h.table);
        let map = &inst.fusion.class_map;
        for (i, chi) in g.irreducibles().iter().enumerate() {
            let res: Vec<_> = map.iter().map(|&c| chi[c].clone()).collect();
            for (j, psi) in h.irreducibles().iter().enumerate() {
                let m = inner_product(h, &res, psi).unwrap().to_i64().unwrap();
                assert_eq!(m, inst.fusion.res[i][j], "{name} chi{i} psi{j}");
            }
        }
    }
}
