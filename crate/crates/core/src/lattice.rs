//! Subgroup lattice, maximal subgroups, the Frattini subgroup and the poset
//! of intersections of maximal subgroups.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::ElemSet;
use crate::error::LatticeError;
use crate::group::{Elem, Group};

/// Default cap on the number of subgroups enumerated.
pub const DEFAULT_SUBGROUP_GUARD: usize = 20_000;

/// Format tag written at the top of every DOT document this crate emits.
pub const DOT_FORMAT_VERSION: &str = "// dng-dot v1";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    // field order matters for the derived Ord: by order first
    order: usize,
    members: ElemSet,
}

impl Subgroup {
    /// Wraps a set the caller knows to be a subgroup.
    pub fn new(members: ElemSet) -> Self {
        Subgroup {
            order: members.len(),
            members,
        }
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `0` for even order, `1` for odd.
    pub fn parity(&self) -> u8 {
        (self.order % 2) as u8
    }

    pub fn is_even(&self) -> bool {
        self.order.is_multiple_of(2)
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn contains_set(&self, set: &ElemSet) -> bool {
        set.is_subset(&self.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::new(self.members.intersection(&other.members))
    }
}

/// All subgroups of a group, sorted by (order, members).
#[derive(Clone, Debug)]
pub struct Lattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    maximal: Vec<usize>,
}

/// Enumerates every subgroup of `g` with the default guard.
pub fn all_subgroups(g: &Group) -> Result<Lattice, LatticeError> {
    Lattice::with_guard(g, DEFAULT_SUBGROUP_GUARD)
}

impl Lattice {
    pub fn new(g: &Group) -> Result<Lattice, LatticeError> {
        all_subgroups(g)
    }

    /// Seeds with every cyclic subgroup and closes under joins with cyclic
    /// subgroups of prime-power order. Every subgroup is generated by its
    /// prime-power elements, so this reaches the whole lattice.
    pub fn with_guard(g: &Group, guard: usize) -> Result<Lattice, LatticeError> {
        let n = g.order();
        let mut index: HashMap<ElemSet, usize> = HashMap::new();
        let mut subs: Vec<(ElemSet, Vec<Elem>)> = Vec::new();
        let mut push = |set: ElemSet, gens: Vec<Elem>, subs: &mut Vec<(ElemSet, Vec<Elem>)>| {
            if index.contains_key(&set) {
                return Ok(());
            }
            if subs.len() >= guard {
                return Err(LatticeError::GuardExceeded { guard });
            }
            index.insert(set.clone(), subs.len());
            subs.push((set, gens));
            Ok(())
        };
        push(g.generate(&[]), Vec::new(), &mut subs)?;
        let mut seeds = Vec::new();
        let mut seen_seed = std::collections::HashSet::new();
        for x in 1..n {
            let c = g.generate(&[x]);
            if is_prime_power(g.element_order(x)) && seen_seed.insert(c.clone()) {
                seeds.push(x);
            }
            push(c, vec![x], &mut subs)?;
        }
        let mut i = 0;
        while i < subs.len() {
            for &c in &seeds {
                if subs[i].0.contains(c) {
                    continue;
                }
                let mut gens = subs[i].1.clone();
                gens.push(c);
                let mut set = subs[i].0.clone();
                g.extend_closure(&mut set, &gens);
                push(set, gens, &mut subs)?;
            }
            i += 1;
        }
        let mut subgroups: Vec<Subgroup> =
            subs.into_iter().map(|(s, _)| Subgroup::new(s)).collect();
        subgroups.sort();
        let top = subgroups.len() - 1;
        let maximal = (0..top)
            .filter(|&i| {
                !(i + 1..top).any(|j| {
                    subgroups[j].order > subgroups[i].order && subgroups[i].is_subset(&subgroups[j])
                })
            })
            .collect();
        Ok(Lattice {
            group_order: n,
            subgroups,
            maximal,
        })
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups.last().unwrap()
    }

    /// Proper subgroups that are maximal under inclusion.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>, LatticeError> {
        if self.group_order == 1 {
            return Err(LatticeError::TrivialGroup);
        }
        Ok(self
            .maximal
            .iter()
            .map(|&i| self.subgroups[i].clone())
            .collect())
    }

    /// `Φ(G)`, the intersection of all maximal subgroups.
    pub fn frattini(&self) -> Result<Subgroup, LatticeError> {
        let maximals = self.maximal_subgroups()?;
        let mut it = maximals.into_iter();
        let first = it.next().ok_or(LatticeError::TrivialGroup)?;
        Ok(it.fold(first, |acc, m| acc.intersection(&m)))
    }

    pub fn intersection_subgroups(&self) -> Result<IntersectionPoset, LatticeError> {
        IntersectionPoset::from_maximals(self.maximal_subgroups()?)
    }

    /// True if the union of the maximal subgroups is the whole group.
    pub fn maximals_cover(&self) -> Result<bool, LatticeError> {
        let ms = self.maximal_subgroups()?;
        Ok(covers(self.group_order, ms.iter()))
    }

    pub fn even_maximals_cover(&self) -> Result<bool, LatticeError> {
        let ms = self.maximal_subgroups()?;
        Ok(covers(self.group_order, ms.iter().filter(|m| m.is_even())))
    }

    pub fn all_maximals_even(&self) -> Result<bool, LatticeError> {
        Ok(self.maximal_subgroups()?.iter().all(Subgroup::is_even))
    }

    pub fn all_maximals_odd(&self) -> Result<bool, LatticeError> {
        Ok(self.maximal_subgroups()?.iter().all(|m| !m.is_even()))
    }

    /// Normal subgroups of `g` among the enumerated ones.
    pub fn normal_subgroups<'a>(&'a self, g: &'a Group) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups
            .iter()
            .filter(move |h| g.is_normal(h.members()))
    }

    /// The largest odd normal subgroup contained in `Φ(G)`.
    ///
    /// Products of odd normal subgroups of `Φ(G)` are again odd, normal and
    /// inside `Φ(G)`, so the largest one is unique.
    pub fn largest_odd_normal_in_frattini(&self, g: &Group) -> Result<Subgroup, LatticeError> {
        let phi = self.frattini()?;
        Ok(self
            .normal_subgroups(g)
            .filter(|h| !h.is_even() && h.is_subset(&phi))
            .max_by_key(|h| h.order())
            .cloned()
            .unwrap_or_else(|| self.trivial().clone()))
    }

    /// DOT rendering of the Hasse diagram; intersection subgroups get a
    /// double frame.
    pub fn to_dot(&self, name: &str) -> String {
        let poset = self.intersection_subgroups().ok();
        let framed = |s: &Subgroup| {
            poset
                .as_ref()
                .is_some_and(|p| p.index_of(s.members()).is_some())
        };
        let mut out = String::new();
        writeln!(out, "{DOT_FORMAT_VERSION}").unwrap();
        writeln!(out, "digraph lattice {{").unwrap();
        writeln!(out, "  label=\"{}\";", escape(name)).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, s) in self.subgroups.iter().enumerate() {
            let frame = if framed(s) { ", peripheries=2" } else { "" };
            writeln!(out, "  n{i} [label=\"{}\"{frame}];", s.order()).unwrap();
        }
        for (k, big) in self.subgroups.iter().enumerate() {
            let below: Vec<usize> = (0..k)
                .filter(|&i| {
                    self.subgroups[i].order < big.order && self.subgroups[i].is_subset(big)
                })
                .collect();
            for &i in &below {
                let covered = below.iter().any(|&j| {
                    j != i
                        && self.subgroups[j].order > self.subgroups[i].order
                        && self.subgroups[i].is_subset(&self.subgroups[j])
                });
                if !covered {
                    writeln!(out, "  n{i} -> n{k};").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn covers<'a>(n: usize, sets: impl Iterator<Item = &'a Subgroup>) -> bool {
    let mut union = ElemSet::new(n);
    for s in sets {
        union.union_with(s.members());
    }
    union.len() == n
}

fn is_prime_power(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let p = (2..=k).find(|d| k.is_multiple_of(*d)).unwrap();
    let mut m = k;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// The set `𝓘` of intersections of nonempty families of maximal subgroups.
/// Members are sorted by (order, members), so `members()[0]` is `Φ(G)`.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    members: Vec<Subgroup>,
    maximals: Vec<Subgroup>,
    index: HashMap<ElemSet, usize>,
}

impl IntersectionPoset {
    /// Closes the maximal subgroups under pairwise intersection.
    pub fn from_maximals(maximals: Vec<Subgroup>) -> Result<IntersectionPoset, LatticeError> {
        if maximals.is_empty() {
            return Err(LatticeError::TrivialGroup);
        }
        let mut members: Vec<Subgroup> = maximals.clone();
        let mut index: HashMap<ElemSet, usize> = members
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let mut i = 0;
        while i < members.len() {
            for m in &maximals {
                let c = members[i].intersection(m);
                if !index.contains_key(c.members()) {
                    index.insert(c.members().clone(), members.len());
                    members.push(c);
                }
            }
            i += 1;
        }
        members.sort();
        let index = members
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let mut maximals = maximals;
        maximals.sort();
        Ok(IntersectionPoset {
            members,
            maximals,
            index,
        })
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn maximals(&self) -> &[Subgroup] {
        &self.maximals
    }

    /// `Φ(G)`, the least element.
    pub fn bottom(&self) -> &Subgroup {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Members strictly below `i`: the interval `(-∞, I)`.
    pub fn strictly_below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let top = &self.members[i];
        (0..i).filter(move |&j| self.members[j].order < top.order && self.members[j].is_subset(top))
    }

    /// Index of the intersection of all maximal subgroups containing `set`,
    /// which is the least member of `𝓘` containing it.
    pub fn smallest_containing_index(&self, set: &ElemSet) -> Result<usize, LatticeError> {
        let mut acc: Option<ElemSet> = None;
        for m in self.maximals.iter().filter(|m| m.contains_set(set)) {
            match acc.as_mut() {
                None => acc = Some(m.members().clone()),
                Some(a) => a.intersect_with(m.members()),
            }
        }
        let acc = acc.ok_or(LatticeError::Generating)?;
        Ok(self.index[&acc])
    }

    pub fn smallest_containing(&self, set: &ElemSet) -> Result<&Subgroup, LatticeError> {
        Ok(&self.members[self.smallest_containing_index(set)?])
    }
}

/// Least intersection subgroup containing `set`.
pub fn smallest_intersection_containing(
    lattice: &Lattice,
    set: &ElemSet,
) -> Result<Subgroup, LatticeError> {
    let poset = lattice.intersection_subgroups()?;
    poset.smallest_containing(set).cloned()
}
