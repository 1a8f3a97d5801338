//! Nim-numbers of the "do not generate" avoidance game on finite groups.
//!
//! Two players alternately pick previously unpicked elements of a finite
//! group `G`; a pick that makes the chosen set generate `G` is illegal, and
//! the player with no legal pick loses. This crate computes the nim-number
//! of that game in three independent ways:
//!
//! * [`classify`]: an ordered checklist on the maximal subgroups,
//! * [`structure`]: a mex calculus over structure classes indexed by
//!   intersections of maximal subgroups,
//! * [`oracle`]: a brute-force memoized search over literal positions.
//!
//! Groups are dense Cayley tables ([`Group`]) built from the small
//! expression language in [`group::spec`].
//!
//! ```
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! use dng::oracle::{brute_nim, DEFAULT_POSITION_BUDGET};
//! use dng::{classify, game_nim, parse_spec};
//!
//! let g = parse_spec("Dih(Z3 x Z3)")?.build()?;
//! let c = classify(&g)?;
//! assert_eq!(c.nim, 0);
//! assert_eq!(c.nim, game_nim(&g)?);
//! assert_eq!(c.nim, brute_nim(&g, DEFAULT_POSITION_BUDGET)?.nim);
//! # Ok(())
//! # }
//! ```

pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod structure;

pub use bitset::ElemSet;
pub use classify::{classify, Classification, Outcome, Rule};
pub use error::{ClassifyError, GroupError, LatticeError, OracleError, SolveError};
pub use group::spec::{parse_spec, GroupSpec, ParseError};
pub use group::{Elem, Group, Permutation};
pub use lattice::{Lattice, Subgroup};
pub use structure::{game_nim, StructureDigraph, TypeTriple};
