//! Group-expression language.
//!
//! ```text
//! spec := atom ("x" atom)*
//! atom := "Z" int | "D" int | "Dic" int | "S" int | "A" int
//!       | "Dih(" spec ")" | "(" spec ")"
//! ```
//!
//! `D n` is the dihedral group of order `2n`. Whitespace between tokens is
//! ignored; keywords are case-sensitive. Products associate to the left.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{families, Group, DEFAULT_ORDER_BUDGET};
use crate::error::GroupError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    GeneralizedDihedral(Box<GroupSpec>),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}", expected.join(" | "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

const ATOM_START: [&str; 7] = ["Z", "D", "Dic", "S", "A", "Dih(", "("];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                offset: start,
                expected: vec!["integer"],
            })
    }

    fn expect(&mut self, lit: &'static str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.error(&[lit]))
        }
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = GroupSpec::DirectProduct(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<GroupSpec, ParseError> {
        let Some(c) = self.peek() else {
            return Err(self.error(&ATOM_START));
        };
        match c {
            b'Z' => {
                self.pos += 1;
                Ok(GroupSpec::Cyclic(self.int()?))
            }
            b'S' => {
                self.pos += 1;
                Ok(GroupSpec::Symmetric(self.int()?))
            }
            b'A' => {
                self.pos += 1;
                Ok(GroupSpec::Alternating(self.int()?))
            }
            b'D' => {
                if self.eat("Dic") {
                    Ok(GroupSpec::Dicyclic(self.int()?))
                } else if self.eat("Dih") {
                    self.expect("(")?;
                    let inner = self.spec()?;
                    self.expect(")")?;
                    Ok(GroupSpec::GeneralizedDihedral(Box::new(inner)))
                } else {
                    self.pos += 1;
                    Ok(GroupSpec::Dihedral(self.int()?))
                }
            }
            b'(' => {
                self.pos += 1;
                let inner = self.spec()?;
                self.expect(")")?;
                Ok(inner)
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let spec = p.spec()?;
    if p.peek().is_some() {
        return Err(p.error(&["x", "end of input"]));
    }
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "Z{n}"),
            Dihedral(n) => write!(f, "D{n}"),
            Dicyclic(n) => write!(f, "Dic{n}"),
            Symmetric(n) => write!(f, "S{n}"),
            Alternating(n) => write!(f, "A{n}"),
            GeneralizedDihedral(a) => write!(f, "Dih({a})"),
            DirectProduct(a, b) => match **b {
                DirectProduct(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

impl GroupSpec {
    /// Order of the group this expression denotes, computed without building
    /// it. `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        use GroupSpec::*;
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k));
        match self {
            Cyclic(n) => Some(*n as u128),
            Dihedral(n) => Some(2 * *n as u128),
            Dicyclic(n) => Some(4 * *n as u128),
            Symmetric(n) => fact(*n),
            Alternating(n) => fact(*n).map(|f| f.div_ceil(2)),
            GeneralizedDihedral(a) => a.order()?.checked_mul(2),
            DirectProduct(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        self.build_with_budget(DEFAULT_ORDER_BUDGET)
    }

    pub fn build_with_budget(&self, budget: usize) -> Result<Group, GroupError> {
        let order = self.order().unwrap_or(u128::MAX);
        if order > budget as u128 {
            return Err(GroupError::BudgetExceeded { order, budget });
        }
        self.build_node(budget)
    }

    fn build_node(&self, budget: usize) -> Result<Group, GroupError> {
        use GroupSpec::*;
        let g = match self {
            Cyclic(n) => families::cyclic(*n, budget)?,
            Dihedral(n) => {
                if *n == 0 {
                    return Err(GroupError::InvalidParameter("D0".into()));
                }
                families::dihedral(*n, budget)?
            }
            Dicyclic(n) => families::dicyclic(*n, budget)?,
            Symmetric(n) => families::symmetric(*n, budget)?,
            Alternating(n) => families::alternating(*n, budget)?,
            GeneralizedDihedral(a) => {
                let inner = a.build_node(budget)?;
                families::generalized_dihedral(&inner, budget)?
            }
            DirectProduct(a, b) => {
                families::direct_product(&a.build_node(budget)?, &b.build_node(budget)?, budget)?
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}
