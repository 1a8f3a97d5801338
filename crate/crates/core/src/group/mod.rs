//! Finite groups as Cayley tables over element ids `0..order`.
//!
//! Element `0` is always the identity. Tables are validated on construction
//! (identity, Latin square, inverses) and, up to [`ASSOC_CHECK_LIMIT`],
//! exhaustively for associativity.

pub mod families;
mod perm;
pub mod spec;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::GroupError;

pub use perm::Permutation;

/// Default cap on the order of any constructed group.
pub const DEFAULT_ORDER_BUDGET: usize = 720;

/// Tables up to this order are checked for associativity (O(n³)).
pub const ASSOC_CHECK_LIMIT: usize = 256;

/// Default `cap` for [`Group::min_generators`].
pub const DEFAULT_GENERATOR_CAP: usize = 3;

/// Element id within a [`Group`].
pub type Elem = usize;

#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    orders: Vec<usize>,
}

/// Whether [`Group::from_table`] runs the cubic associativity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocCheck {
    /// Check when the order is at most [`ASSOC_CHECK_LIMIT`].
    UpToLimit,
    Always,
}

impl Group {
    /// Builds a group from a flattened row-major Cayley table.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<Elem>,
        assoc: AssocCheck,
    ) -> Result<Group, GroupError> {
        let name = name.into();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if table.len() != order * order {
            return Err(GroupError::InvalidTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(GroupError::InvalidTable(format!(
                    "element 0 is not an identity at {x}"
                )));
            }
        }
        let mut seen = vec![0usize; order];
        for a in 0..order {
            for b in 0..order {
                let v = table[a * order + b];
                if v >= order || seen[v] == 2 * a + 1 {
                    return Err(GroupError::InvalidTable(format!(
                        "row {a} is not a permutation"
                    )));
                }
                seen[v] = 2 * a + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for b in 0..order {
            for a in 0..order {
                let v = table[a * order + b];
                if seen[v] == 2 * b + 2 {
                    return Err(GroupError::InvalidTable(format!(
                        "column {b} is not a permutation"
                    )));
                }
                seen[v] = 2 * b + 2;
            }
        }
        let mut inverses = vec![0; order];
        for (x, inv) in inverses.iter_mut().enumerate() {
            // Latin rows guarantee exactly one solution
            let y = (0..order).find(|&y| table[x * order + y] == 0).unwrap();
            if table[y * order + x] != 0 {
                return Err(GroupError::InvalidTable(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
            *inv = y;
        }
        let check = match assoc {
            AssocCheck::Always => true,
            AssocCheck::UpToLimit => order <= ASSOC_CHECK_LIMIT,
        };
        if check {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b];
                    for c in 0..order {
                        if table[ab * order + c] != table[a * order + table[b * order + c]] {
                            return Err(GroupError::InvalidTable(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        let orders = (0..order)
            .map(|x| {
                let mut k = 1;
                let mut y = x;
                while y != 0 {
                    y = table[y * order + x];
                    k += 1;
                }
                k
            })
            .collect();
        Ok(Group {
            name,
            order,
            table,
            inverses,
            orders,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Least `k ≥ 1` with `x^k = e`.
    #[inline]
    pub fn element_order(&self, x: Elem) -> usize {
        self.orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.orders.clone();
        v.sort_unstable();
        v
    }

    /// Conjugate `t⁻¹ x t`.
    pub fn conjugate(&self, x: Elem, t: Elem) -> Elem {
        self.mul(self.mul(self.inv(t), x), t)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    pub fn involutions(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements().filter(|&x| self.orders[x] == 2)
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::new(self.order)
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[Elem]) -> ElemSet {
        let mut out = ElemSet::from_elems(self.order, [0]);
        self.extend_closure(&mut out, gens);
        out
    }

    /// Closes `set` under right multiplication by `gens`, giving
    /// `set · ⟨gens⟩`. This is `⟨gens⟩` whenever `set ⊆ ⟨gens⟩`.
    pub(crate) fn extend_closure(&self, set: &mut ElemSet, gens: &[Elem]) {
        let mut stack: Vec<Elem> = set.iter().collect();
        while let Some(e) = stack.pop() {
            for &g in gens {
                let f = self.mul(e, g);
                if set.insert(f) {
                    stack.push(f);
                }
            }
        }
    }

    /// True if `set` contains `e` and is closed under multiplication.
    /// Finite groups need no separate inverse check.
    pub fn is_subgroup(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let elems: Vec<_> = set.iter().collect();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &ElemSet) -> bool {
        set.iter()
            .all(|n| self.elements().all(|x| set.contains(self.conjugate(n, x))))
    }

    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.generate(gens).len() == self.order
    }

    /// Minimum size of a generating set, searching sizes `0..=cap`.
    ///
    /// Works level by level on the distinct subgroups generated by `k`
    /// elements, so tuples with an already-seen closure are never extended
    /// twice.
    pub fn min_generators(&self, cap: usize) -> Result<usize, GroupError> {
        use std::collections::HashSet;
        if self.order == 1 {
            return Ok(0);
        }
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut level: Vec<(ElemSet, Vec<Elem>)> = vec![(self.generate(&[]), Vec::new())];
        for k in 1..=cap {
            let mut next = Vec::new();
            for (h, gens) in &level {
                for x in self.elements() {
                    if h.contains(x) {
                        continue;
                    }
                    let mut gens = gens.clone();
                    gens.push(x);
                    let mut c = h.clone();
                    self.extend_closure(&mut c, &gens);
                    if c.len() == self.order {
                        return Ok(k);
                    }
                    if seen.insert(c.clone()) {
                        next.push((c, gens));
                    }
                }
            }
            level = next;
        }
        Err(GroupError::CapExceeded { cap })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct View<'a> {
            format_version: u32,
            name: &'a str,
            order: usize,
            table: Vec<&'a [Elem]>,
        }
        let view = View {
            format_version: 1,
            name: &self.name,
            order: self.order,
            table: self.table.chunks(self.order).collect(),
        };
        serde_json::to_value(view).expect("group view serializes")
    }

    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        families::cyclic(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn dihedral(n: usize) -> Result<Group, GroupError> {
        families::dihedral(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn generalized_dihedral(a: &Group) -> Result<Group, GroupError> {
        families::generalized_dihedral(a, DEFAULT_ORDER_BUDGET)
    }

    pub fn dicyclic(n: usize) -> Result<Group, GroupError> {
        families::dicyclic(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn symmetric(n: usize) -> Result<Group, GroupError> {
        families::symmetric(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn alternating(n: usize) -> Result<Group, GroupError> {
        families::alternating(n, DEFAULT_ORDER_BUDGET)
    }

    pub fn direct_product(&self, other: &Group) -> Result<Group, GroupError> {
        families::direct_product(self, other, DEFAULT_ORDER_BUDGET)
    }

    pub fn quotient(&self, normal: &ElemSet) -> Result<Group, GroupError> {
        families::quotient(self, normal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_involutions(g: &Group) -> usize {
        (1..g.order()).filter(|&x| g.mul(x, x) == 0).count()
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(Group::from_table("x", 2, vec![0, 1, 1, 1], AssocCheck::Always).is_err());
        assert!(Group::from_table("x", 2, vec![1, 0, 0, 1], AssocCheck::Always).is_err());
        assert!(Group::from_table("x", 2, vec![0, 1, 1], AssocCheck::Always).is_err());
        // Latin square with identity but not associative (order-5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            Group::from_table("loop", 5, loop5, AssocCheck::Always),
            Err(GroupError::InvalidTable(_))
        ));
    }

    #[test]
    fn cyclic_basics() {
        let z1 = Group::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z4 = Group::cyclic(4).unwrap();
        assert_eq!(count_involutions(&z4), 1);
        let z6 = Group::cyclic(6).unwrap();
        assert_eq!(z6.order_profile(), vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(z6.element_order(0), 1);
        assert_eq!(z6.element_order(1), 6);
        assert!(z6.is_cyclic());
        assert_eq!(z6.min_generators(3).unwrap(), 1);
    }

    #[test]
    fn min_generators_small() {
        let v4 = Group::cyclic(2)
            .unwrap()
            .direct_product(&Group::cyclic(2).unwrap())
            .unwrap();
        assert!(!v4.is_cyclic());
        assert_eq!(v4.min_generators(3).unwrap(), 2);
        assert!(matches!(
            v4.min_generators(1),
            Err(GroupError::CapExceeded { cap: 1 })
        ));
        let s4 = Group::symmetric(4).unwrap();
        assert_eq!(s4.min_generators(3).unwrap(), 2);
        let z2 = Group::cyclic(2).unwrap();
        let e8 = z2.direct_product(&z2).unwrap().direct_product(&z2).unwrap();
        assert_eq!(e8.min_generators(3).unwrap(), 3);
    }

    #[test]
    fn lagrange_on_orders() {
        for g in [
            Group::symmetric(4).unwrap(),
            Group::dicyclic(3).unwrap(),
            Group::alternating(5).unwrap(),
        ] {
            for x in g.elements() {
                assert_eq!(g.order() % g.element_order(x), 0);
            }
        }
    }

    #[test]
    fn json_view() {
        let z3 = Group::cyclic(3).unwrap();
        let v = z3.to_json();
        assert_eq!(v["order"], 3);
        assert_eq!(v["name"], "Z3");
        assert_eq!(v["table"][1][2], 0);
    }
}
