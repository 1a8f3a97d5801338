use std::collections::{BTreeSet, HashMap};

use dng::catalog::{self, CatalogEntry};
use dng::classify::{
    barnes_first_player_wins, classify_with_lattice, cyclic_formula, gendih_formula, is_nilpotent,
    is_real, nilpotent_formula, quaternion_formula, real_element_disjunction_in,
};
use dng::oracle::{brute_nim, Oracle, Position, DEFAULT_POSITION_BUDGET};
use dng::{Group, GroupSpec, Lattice, StructureDigraph, TypeTriple};

struct Solved {
    entry: CatalogEntry,
    group: Group,
    lattice: Lattice,
    digraph: StructureDigraph,
}

fn solved_up_to(max_order: usize) -> Vec<Solved> {
    catalog::up_to(max_order)
        .into_iter()
        .map(|entry| {
            let group = entry.build().unwrap();
            let lattice = Lattice::new(&group).unwrap();
            let digraph = StructureDigraph::from_lattice(&group, &lattice)
                .unwrap()
                .solved()
                .unwrap();
            Solved {
                entry,
                group,
                lattice,
                digraph,
            }
        })
        .collect()
}

fn nim(s: &Solved) -> u32 {
    s.digraph.source_type().nim_even
}

#[test]
fn classifier_matches_solver_on_whole_catalog() {
    for s in solved_up_to(usize::MAX) {
        let c = classify_with_lattice(&s.group, &s.lattice).unwrap();
        assert_eq!(c.nim, nim(&s), "{}", s.entry.name);
        assert_eq!(
            barnes_first_player_wins(&s.group),
            c.nim != 0,
            "{}",
            s.entry.name
        );
    }
}

#[test]
fn oracle_matches_solver_up_to_order_24() {
    for s in solved_up_to(24) {
        let o = brute_nim(&s.group, DEFAULT_POSITION_BUDGET).unwrap();
        assert_eq!(o.nim, nim(&s), "{}", s.entry.name);
    }
}

#[test]
fn edges_increase_and_types_lie_in_spectrum() {
    for s in solved_up_to(48) {
        let nodes = s.digraph.nodes();
        for &(i, j) in s.digraph.edges() {
            assert!(nodes[i].subgroup.is_subset(&nodes[j].subgroup));
            assert!(nodes[i].subgroup.order() < nodes[j].subgroup.order());
        }
        for n in nodes {
            assert!(n.ty.unwrap().in_spectrum(), "{}", s.entry.name);
        }
    }
}

#[test]
fn classes_only_in_odd_maximals_have_type_110() {
    let mut seen = 0;
    for s in solved_up_to(48) {
        let maximals = s.lattice.maximal_subgroups().unwrap();
        for n in s.digraph.nodes() {
            let only_odd = maximals
                .iter()
                .filter(|m| n.subgroup.is_subset(m))
                .all(|m| !m.is_even());
            if only_odd {
                assert_eq!(n.ty, Some(TypeTriple::new(1, 1, 0)), "{}", s.entry.name);
                seen += 1;
            }
        }
    }
    assert!(seen > 50);
}

/// Positions in the same class have the same non-self option classes, and
/// those are exactly the digraph's out-neighbours.
#[test]
fn class_options_are_compatible_up_to_order_12() {
    for s in solved_up_to(12) {
        let g = &s.group;
        let poset = s.lattice.intersection_subgroups().unwrap();
        let class_of = |p: Position| {
            poset
                .smallest_containing_index(&p.to_set(g.order()))
                .unwrap()
        };
        let mut oracle = Oracle::new(g, DEFAULT_POSITION_BUDGET).unwrap();
        oracle.nim(Position::EMPTY).unwrap();
        let mut seen: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for (p, _) in oracle.positions() {
            let i = class_of(p);
            let targets: BTreeSet<usize> = oracle
                .options_of(p)
                .into_iter()
                .map(class_of)
                .filter(|&j| j != i)
                .collect();
            assert!(oracle.options_of(p).iter().all(|q| q.len() == p.len() + 1));
            let expected = seen.entry(i).or_insert_with(|| targets.clone());
            assert_eq!(*expected, targets, "{}: class {i}", s.entry.name);
        }
        for (i, targets) in seen {
            // node indices follow the poset order
            let digraph_targets: BTreeSet<usize> = s.digraph.options(i).collect();
            assert_eq!(digraph_targets, targets, "{}: class {i}", s.entry.name);
        }
    }
}

#[test]
fn zero_iff_odd_elements_in_proper_even_subgroups() {
    for s in solved_up_to(usize::MAX) {
        let g = &s.group;
        if g.order() % 2 == 1 || g.is_cyclic() {
            continue;
        }
        let even_cover = s.lattice.even_maximals_cover().unwrap();
        let odd_in_even = g
            .elements()
            .filter(|&x| g.element_order(x) % 2 == 1)
            .all(|x| {
                s.lattice
                    .subgroups()
                    .iter()
                    .any(|h| h.order() < g.order() && h.is_even() && h.contains(x))
            });
        assert_eq!(even_cover, odd_in_even, "{}", s.entry.name);
        assert_eq!(even_cover, nim(&s) == 0, "{}", s.entry.name);
    }
}

#[test]
fn even_groups_needing_three_generators_are_zero() {
    let mut seen = 0;
    for s in solved_up_to(64) {
        if s.group.order() % 2 == 0 && s.group.min_generators(2).is_err() {
            assert_eq!(nim(&s), 0, "{}", s.entry.name);
            seen += 1;
        }
    }
    assert!(seen >= 5);
}

#[test]
fn family_formulas_agree() {
    for n in 2..=64 {
        let g = Group::cyclic(n).unwrap();
        assert_eq!(
            cyclic_formula(n).unwrap(),
            classify_with_lattice(&g, &Lattice::new(&g).unwrap())
                .unwrap()
                .nim
        );
    }
    let mut nilpotent = 0;
    for s in solved_up_to(usize::MAX) {
        if is_nilpotent(&s.group) {
            assert_eq!(
                nilpotent_formula(&s.group).unwrap().nim,
                nim(&s),
                "{}",
                s.entry.name
            );
            nilpotent += 1;
        }
        match s.entry.spec() {
            Some(GroupSpec::GeneralizedDihedral(a)) => {
                assert_eq!(
                    gendih_formula(&a.build().unwrap()).unwrap().nim,
                    nim(&s),
                    "{}",
                    s.entry.name
                );
            }
            Some(GroupSpec::Dihedral(k)) => {
                assert_eq!(
                    gendih_formula(&Group::cyclic(*k).unwrap()).unwrap().nim,
                    nim(&s),
                    "{}",
                    s.entry.name
                );
            }
            Some(GroupSpec::Dicyclic(k)) if *k <= 6 => {
                assert_eq!(quaternion_formula().nim, nim(&s), "{}", s.entry.name);
            }
            _ => {}
        }
    }
    assert!(nilpotent > 80);
}

#[test]
fn cyclic_multiple_of_four_and_even_cover_never_coincide() {
    for s in solved_up_to(usize::MAX) {
        let n = s.group.order();
        if n % 2 == 1 || n == 2 {
            continue;
        }
        let cyclic4 = s.group.is_cyclic() && n % 4 == 0;
        let cover = s.lattice.even_maximals_cover().unwrap();
        assert!(!(cyclic4 && cover), "{}", s.entry.name);
        assert_eq!(cyclic4 || cover, nim(&s) == 0, "{}", s.entry.name);
    }
}

#[test]
fn real_odd_elements_satisfy_the_disjunction() {
    for s in solved_up_to(24) {
        let g = &s.group;
        if g.order() <= 2 {
            continue;
        }
        for x in g.elements() {
            if x != g.identity() && g.element_order(x) % 2 == 1 && is_real(g, x) {
                assert!(
                    real_element_disjunction_in(g, &s.lattice, x).unwrap(),
                    "{} element {x}",
                    s.entry.name
                );
            }
        }
    }
}

#[test]
fn oracle_positions_avoid_generating_sets() {
    for s in solved_up_to(12) {
        let maximals = s.lattice.maximal_subgroups().unwrap();
        let mut o = Oracle::new(&s.group, DEFAULT_POSITION_BUDGET).unwrap();
        o.nim(Position::EMPTY).unwrap();
        for (p, _) in o.positions() {
            let set = p.to_set(s.group.order());
            assert!(
                maximals.iter().any(|m| m.contains_set(&set)),
                "{}",
                s.entry.name
            );
        }
    }
}
