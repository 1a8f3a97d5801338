//! Structure classes and their type triples.
//!
//! Positions of the game are partitioned by the least intersection subgroup
//! `I` containing them. All positions of one class with equal parity share a
//! nim-number, so each class is summarized by a triple
//! `(pty(I), nim of even positions, nim of odd positions)`.
//!
//! For a class of parity `p` with option types `T`, writing `t[q]` for the
//! parity-`q` component of `t`:
//!
//! ```text
//! nim_p     = mex { t[1-p] : t in T }
//! nim_{1-p} = mex ({nim_p} ∪ { t[p] : t in T })
//! ```
//!
//! The full set `I` has parity `p` and can only leave the class, which gives
//! the first line; every smaller position can also stay inside the class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::SolveError;
use crate::group::Group;
use crate::lattice::{escape, IntersectionPoset, Lattice, Subgroup, DOT_FORMAT_VERSION};
use crate::oracle::mex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeTriple {
    pub parity: u8,
    pub nim_even: u32,
    pub nim_odd: u32,
}

impl TypeTriple {
    /// Every type that can occur.
    pub const SPECTRUM: [TypeTriple; 4] = [
        TypeTriple::new(0, 0, 1),
        TypeTriple::new(1, 0, 1),
        TypeTriple::new(1, 1, 0),
        TypeTriple::new(1, 3, 2),
    ];

    pub const fn new(parity: u8, nim_even: u32, nim_odd: u32) -> Self {
        TypeTriple {
            parity,
            nim_even,
            nim_odd,
        }
    }

    /// Nim-number of the positions of parity `q` (0 even, 1 odd).
    pub fn nim_of_parity(&self, q: u8) -> u32 {
        if q == 0 {
            self.nim_even
        } else {
            self.nim_odd
        }
    }

    pub fn in_spectrum(&self) -> bool {
        Self::SPECTRUM.contains(self)
    }

    /// Type of a class of parity `parity` whose options have `options` types.
    pub fn from_options(parity: u8, options: &[TypeTriple]) -> Result<TypeTriple, Vec<TypeTriple>> {
        let p = parity;
        let leave: Vec<u32> = options.iter().map(|t| t.nim_of_parity(1 - p)).collect();
        let own = mex(leave.iter().copied());
        let other = mex(options.iter().map(|t| t.nim_of_parity(p)).chain([own]));
        // parity-p positions smaller than I also see `other` inside the class
        if mex(leave.into_iter().chain([other])) != own {
            return Err(options.to_vec());
        }
        Ok(if p == 0 {
            TypeTriple::new(0, own, other)
        } else {
            TypeTriple::new(1, other, own)
        })
    }
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.parity, self.nim_even, self.nim_odd)
    }
}

#[derive(Clone, Debug)]
pub struct StructureNode {
    pub subgroup: Subgroup,
    /// Set once [`StructureDigraph::solve_types`] has run.
    pub ty: Option<TypeTriple>,
    /// False when every position of the class has the parity of `I`.
    pub both_parities: bool,
}

/// Intersection subgroups with class-option edges. Node `0` is `Φ(G)`.
#[derive(Clone, Debug)]
pub struct StructureDigraph {
    nodes: Vec<StructureNode>,
    edges: Vec<(usize, usize)>,
}

/// Builds the unsolved structure digraph of `g`.
pub fn structure_digraph(g: &Group) -> Result<StructureDigraph, SolveError> {
    let lattice = Lattice::new(g)?;
    StructureDigraph::from_lattice(g, &lattice)
}

/// Nim-number of the game on `g`: the even component of the `Φ(G)` type.
pub fn game_nim(g: &Group) -> Result<u32, SolveError> {
    let mut d = structure_digraph(g)?;
    d.solve_types()?;
    Ok(d.source_type().nim_even)
}

impl StructureDigraph {
    pub fn from_lattice(g: &Group, lattice: &Lattice) -> Result<StructureDigraph, SolveError> {
        let poset = lattice.intersection_subgroups()?;
        Self::from_poset(g, &poset)
    }

    pub fn from_poset(
        g: &Group,
        poset: &IntersectionPoset,
    ) -> Result<StructureDigraph, SolveError> {
        let mut edges = BTreeSet::new();
        let mut nodes = Vec::with_capacity(poset.len());
        for (i, sub) in poset.members().iter().enumerate() {
            for x in g.elements().filter(|&x| !sub.contains(x)) {
                let mut grown = sub.members().clone();
                grown.insert(x);
                // no maximal subgroup contains it: the move would generate G
                let Ok(j) = poset.smallest_containing_index(&grown) else {
                    continue;
                };
                let target = &poset.members()[j];
                if j == i || !sub.is_subset(target) || target.order() <= sub.order() {
                    return Err(SolveError::NotAcyclic);
                }
                edges.insert((i, j));
            }
            let below: Vec<usize> = poset.strictly_below(i).collect();
            let both_parities = sub.members().iter().any(|y| {
                let mut rest = sub.members().clone();
                rest.remove(y);
                !below
                    .iter()
                    .any(|&j| poset.members()[j].contains_set(&rest))
            });
            nodes.push(StructureNode {
                subgroup: sub.clone(),
                ty: None,
                both_parities,
            });
        }
        Ok(StructureDigraph {
            nodes,
            edges: edges.into_iter().collect(),
        })
    }

    pub fn nodes(&self) -> &[StructureNode] {
        &self.nodes
    }

    /// Sorted `(from, to)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn options(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == i).map(|e| e.1)
    }

    pub fn is_solved(&self) -> bool {
        self.nodes.iter().all(|n| n.ty.is_some())
    }

    /// Solves every node's type, largest subgroups first. Edges always go to
    /// strictly larger subgroups, which sit at higher indices.
    pub fn solve_types(&mut self) -> Result<(), SolveError> {
        for i in (0..self.nodes.len()).rev() {
            let options: Vec<TypeTriple> = self
                .options(i)
                .map(|j| self.nodes[j].ty.ok_or(SolveError::NotAcyclic))
                .collect::<Result<_, _>>()?;
            let parity = self.nodes[i].subgroup.parity();
            let ty = TypeTriple::from_options(parity, &options).map_err(|opts| {
                SolveError::Inconsistent {
                    node: i,
                    options: opts
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                }
            })?;
            self.nodes[i].ty = Some(ty);
        }
        Ok(())
    }

    pub fn solved(mut self) -> Result<StructureDigraph, SolveError> {
        self.solve_types()?;
        Ok(self)
    }

    /// Type of the `Φ(G)` class. Panics if unsolved.
    pub fn source_type(&self) -> TypeTriple {
        self.nodes[0].ty.expect("structure digraph is not solved")
    }

    pub fn type_of(&self, i: usize) -> Option<TypeTriple> {
        self.nodes[i].ty
    }

    /// Multiset of solved types, keyed by their display form.
    pub fn type_counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for n in &self.nodes {
            if let Some(t) = n.ty {
                *m.entry(t.to_string()).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node {
            subgroup_order: usize,
            parity: u8,
            nim_even: Option<u32>,
            nim_odd: Option<u32>,
        }
        #[derive(Serialize)]
        struct View {
            nodes: Vec<Node>,
            edges: Vec<[usize; 2]>,
        }
        let view = View {
            nodes: self
                .nodes
                .iter()
                .map(|n| Node {
                    subgroup_order: n.subgroup.order(),
                    parity: n.subgroup.parity(),
                    nim_even: n.ty.map(|t| t.nim_even),
                    nim_odd: n.ty.map(|t| t.nim_odd),
                })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_value(view).expect("digraph view serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{DOT_FORMAT_VERSION}").unwrap();
        out.push_str("digraph structure {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let shape = shape(n.subgroup.parity());
            let label = n.ty.map(node_label).unwrap_or_else(|| "unsolved".into());
            writeln!(
                out,
                "  n{i} [label=\"{}\", shape={shape}, xlabel=\"|I|={}\"];",
                escape(&label),
                n.subgroup.order()
            )
            .unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Merges classes with equal (type, option types ∪ {type}) signatures
    /// until nothing changes, then drops self-loops.
    pub fn simplify(&self) -> Result<SimplifiedDiagram, SolveError> {
        if !self.is_solved() {
            return Err(SolveError::Unsolved);
        }
        let ty = |i: usize| self.nodes[i].ty.unwrap();
        let mut class: Vec<usize> = (0..self.nodes.len()).collect();
        loop {
            let count = class.iter().collect::<BTreeSet<_>>().len();
            let mut sig_of_class: BTreeMap<usize, Signature> = BTreeMap::new();
            for (i, &c) in class.iter().enumerate() {
                let sig = sig_of_class
                    .entry(c)
                    .or_insert_with(|| (ty(i), BTreeSet::from([ty(i)])));
                sig.1.extend(self.options(i).map(ty));
            }
            let mut ids: BTreeMap<&Signature, usize> = BTreeMap::new();
            for sig in sig_of_class.values() {
                let next = ids.len();
                ids.entry(sig).or_insert(next);
            }
            let new_class: Vec<usize> = class.iter().map(|c| ids[&sig_of_class[c]]).collect();
            let new_count = ids.len();
            class = new_class;
            if new_count == count {
                break;
            }
        }
        // deterministic order: (type, least member order, signature)
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in class.iter().enumerate() {
            groups.entry(c).or_default().push(i);
        }
        let mut keyed: Vec<(SortKey, Vec<usize>)> = groups
            .into_values()
            .map(|members| {
                let t = ty(members[0]);
                let min_order = members
                    .iter()
                    .map(|&i| self.nodes[i].subgroup.order())
                    .min()
                    .unwrap();
                let opts: BTreeSet<TypeTriple> = members
                    .iter()
                    .flat_map(|&i| self.options(i).map(ty))
                    .collect();
                ((t, min_order, opts.into_iter().collect()), members)
            })
            .collect();
        keyed.sort();
        let mut position = vec![0; self.nodes.len()];
        for (k, (_, members)) in keyed.iter().enumerate() {
            for &i in members {
                position[i] = k;
            }
        }
        let edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (position[a], position[b]))
            .filter(|(a, b)| a != b)
            .collect();
        Ok(SimplifiedDiagram {
            nodes: keyed
                .into_iter()
                .map(|((ty, min_order, _), members)| SimplifiedNode {
                    ty,
                    members,
                    min_order,
                })
                .collect(),
            edges: edges.into_iter().collect(),
        })
    }
}

type Signature = (TypeTriple, BTreeSet<TypeTriple>);
// (type, least member order, option types)
type SortKey = (TypeTriple, usize, Vec<TypeTriple>);

fn node_label(t: TypeTriple) -> String {
    format!("pty={}|even={}|odd={}", t.parity, t.nim_even, t.nim_odd)
}

/// Odd classes point down, even classes point up.
fn shape(parity: u8) -> &'static str {
    if parity == 1 {
        "invtriangle"
    } else {
        "triangle"
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedNode {
    pub ty: TypeTriple,
    /// Indices of the merged structure-digraph nodes.
    pub members: Vec<usize>,
    pub min_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedDiagram {
    pub nodes: Vec<SimplifiedNode>,
    pub edges: Vec<(usize, usize)>,
}

impl SimplifiedDiagram {
    /// DOT text that depends only on types and edges, so isomorphic diagrams
    /// of different groups render identically.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{DOT_FORMAT_VERSION}").unwrap();
        out.push_str("digraph simplified {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(
                out,
                "  n{i} [label=\"{}\", shape={}];",
                node_label(n.ty),
                shape(n.ty.parity)
            )
            .unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
