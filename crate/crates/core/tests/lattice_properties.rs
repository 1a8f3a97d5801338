use dng::catalog;
use dng::{ElemSet, GroupSpec, Lattice};

#[test]
fn subgroups_are_closed_and_respect_lagrange() {
    for e in catalog::up_to(60) {
        let g = e.build().unwrap();
        let lattice = Lattice::new(&g).unwrap();
        for h in lattice.subgroups() {
            assert!(g.is_subgroup(h.members()), "{}", e.name);
            assert_eq!(g.order() % h.order(), 0, "{}", e.name);
        }
        assert_eq!(lattice.trivial().order(), 1);
        assert_eq!(lattice.whole().order(), g.order());
    }
}

#[test]
fn maximals_cover_iff_not_cyclic() {
    for e in catalog::entries() {
        let g = e.build().unwrap();
        let lattice = Lattice::new(&g).unwrap();
        assert_eq!(
            lattice.maximals_cover().unwrap(),
            !g.is_cyclic(),
            "{}",
            e.name
        );
    }
}

#[test]
fn maximal_times_factor_is_maximal() {
    let mut checked = 0;
    for e in catalog::up_to(60) {
        let Some(GroupSpec::DirectProduct(a, b)) = e.spec() else {
            continue;
        };
        let (h, k, hk) = (a.build().unwrap(), b.build().unwrap(), e.build().unwrap());
        let maximals_hk = Lattice::new(&hk).unwrap().maximal_subgroups().unwrap();
        for m in Lattice::new(&h).unwrap().maximal_subgroups().unwrap() {
            let kn = k.order();
            let product = ElemSet::from_elems(
                hk.order(),
                m.members()
                    .iter()
                    .flat_map(|x| (0..kn).map(move |y| x * kn + y)),
            );
            assert!(
                maximals_hk.iter().any(|n| *n.members() == product),
                "{}: M x K missing for |M| = {}",
                e.name,
                m.order()
            );
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn cyclic_maximals_all_even_iff_four_divides() {
    for n in 2..=64 {
        let g = dng::Group::cyclic(n).unwrap();
        let lattice = Lattice::new(&g).unwrap();
        assert_eq!(lattice.all_maximals_even().unwrap(), n % 4 == 0, "Z{n}");
    }
}

#[test]
fn generalized_dihedral_maximals_are_even_except_the_base() {
    for e in catalog::entries() {
        let Some(GroupSpec::GeneralizedDihedral(a)) = e.spec() else {
            continue;
        };
        let g = e.build().unwrap();
        let base = ElemSet::from_elems(g.order(), 0..a.build().unwrap().order());
        for m in Lattice::new(&g).unwrap().maximal_subgroups().unwrap() {
            assert!(m.is_even() || *m.members() == base, "{}", e.name);
        }
    }
}

#[test]
fn intersection_poset_is_closed_with_frattini_bottom() {
    for e in catalog::up_to(48) {
        let g = e.build().unwrap();
        let lattice = Lattice::new(&g).unwrap();
        let poset = lattice.intersection_subgroups().unwrap();
        let phi = lattice.frattini().unwrap();
        assert_eq!(poset.bottom(), &phi, "{}", e.name);
        let members = poset.members();
        for a in members {
            assert!(phi.is_subset(a));
            for b in members {
                let meet = a.intersection(b);
                assert!(
                    poset.index_of(meet.members()).is_some(),
                    "{}: not intersection-closed",
                    e.name
                );
            }
        }
        for m in poset.maximals() {
            assert!(poset.index_of(m.members()).is_some());
        }
    }
}
