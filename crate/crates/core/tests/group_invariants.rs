use dng::catalog;
use dng::group::families::coset_map;
use dng::{Group, GroupSpec, Lattice};
use proptest::prelude::*;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_table(g: &Group) {
    let n = g.order();
    let e = g.identity();
    for a in g.elements() {
        assert_eq!(g.mul(e, a), a);
        assert_eq!(g.mul(a, e), a);
        assert_eq!(g.mul(a, g.inv(a)), e);
        assert_eq!(g.mul(g.inv(a), a), e);
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for b in g.elements() {
            row[g.mul(a, b)] = true;
            col[g.mul(b, a)] = true;
        }
        assert!(
            row.iter().all(|&x| x) && col.iter().all(|&x| x),
            "{}: not a Latin square",
            g.name()
        );
        assert_eq!(n % g.element_order(a), 0, "{}: Lagrange", g.name());
    }
    if n <= 256 {
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    assert_eq!(
                        g.mul(ab, c),
                        g.mul(a, g.mul(b, c)),
                        "{}: associativity",
                        g.name()
                    );
                }
            }
        }
    }
}

#[test]
fn catalog_tables_are_groups() {
    for e in catalog::entries() {
        check_table(&e.build().unwrap());
    }
}

#[test]
fn product_element_orders_are_lcms() {
    for e in catalog::entries() {
        let Some(GroupSpec::DirectProduct(a, b)) = e.spec() else {
            continue;
        };
        if e.order > 100 {
            continue;
        }
        let (g, h, gh) = (a.build().unwrap(), b.build().unwrap(), e.build().unwrap());
        for x in g.elements() {
            for y in h.elements() {
                let (p, q) = (g.element_order(x), h.element_order(y));
                assert_eq!(
                    gh.element_order(x * h.order() + y),
                    p * q / gcd(p, q),
                    "{}",
                    e.name
                );
            }
        }
    }
}

#[test]
fn quotient_projection_is_a_homomorphism() {
    let mut checked = 0;
    for e in catalog::up_to(24) {
        let g = e.build().unwrap();
        let lattice = Lattice::new(&g).unwrap();
        for n in lattice.normal_subgroups(&g) {
            let q = g.quotient(n.members()).unwrap();
            assert_eq!(q.order() * n.order(), g.order());
            let pi = coset_map(&g, n.members());
            for a in g.elements() {
                for b in g.elements() {
                    assert_eq!(
                        pi[g.mul(a, b)],
                        q.mul(pi[a], pi[b]),
                        "{} / order {}",
                        e.name,
                        n.order()
                    );
                }
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

fn small_leaf() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (2usize..8).prop_map(GroupSpec::Cyclic),
        (2usize..5).prop_map(GroupSpec::Dihedral),
        (2usize..4).prop_map(GroupSpec::Dicyclic),
        (2usize..4).prop_map(GroupSpec::Symmetric),
        Just(GroupSpec::Alternating(4)),
        (2usize..6).prop_map(|n| GroupSpec::GeneralizedDihedral(Box::new(GroupSpec::Cyclic(n)))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_products_are_groups(a in small_leaf(), b in small_leaf()) {
        let spec = GroupSpec::DirectProduct(Box::new(a.clone()), Box::new(b.clone()));
        let g = spec.build().unwrap();
        prop_assert_eq!(g.order(), a.build().unwrap().order() * b.build().unwrap().order());
        check_table(&g);
    }
}
