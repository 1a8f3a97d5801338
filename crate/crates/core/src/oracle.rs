//! Brute-force nim-numbers by memoized mex recursion over literal positions.
//!
//! Nothing here consults maximal subgroups: legality of a move is decided by
//! computing the generated subgroup directly. The oracle is therefore an
//! independent check on [`crate::classify`] and [`crate::structure`].

use std::collections::{HashMap, HashSet};

use crate::bitset::ElemSet;
use crate::error::OracleError;
use crate::group::{Elem, Group};
use crate::lattice::Lattice;

/// Default cap on memoized positions.
pub const DEFAULT_POSITION_BUDGET: usize = 2_000_000;

/// Largest group order the oracle accepts (positions are packed in a `u64`).
pub const MAX_ORACLE_ORDER: usize = 64;

/// Least nonnegative integer not in `values`.
pub fn mex(values: impl IntoIterator<Item = u32>) -> u32 {
    let mut seen: Vec<bool> = Vec::new();
    for v in values {
        let v = v as usize;
        if v >= seen.len() {
            seen.resize(v + 1, false);
        }
        seen[v] = true;
    }
    seen.iter().position(|&b| !b).unwrap_or(seen.len()) as u32
}

/// A set of chosen elements, packed as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(u64);

impl Position {
    pub const EMPTY: Position = Position(0);

    pub fn from_elems(elems: impl IntoIterator<Item = Elem>) -> Position {
        Position(elems.into_iter().fold(0, |m, x| {
            assert!(x < MAX_ORACLE_ORDER);
            m | 1 << x
        }))
    }

    pub fn from_set(set: &ElemSet) -> Option<Position> {
        set.as_u64().map(Position)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn parity(self) -> u8 {
        (self.len() % 2) as u8
    }

    pub fn contains(self, x: Elem) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn with(self, x: Elem) -> Position {
        Position(self.0 | 1 << x)
    }

    pub fn elems(self) -> impl Iterator<Item = Elem> {
        (0..64).filter(move |&x| self.0 >> x & 1 == 1)
    }

    pub fn to_set(self, order: usize) -> ElemSet {
        ElemSet::from_elems(order, self.elems())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Nim-number of the empty starting position.
    pub nim: u32,
    /// Distinct positions memoized.
    pub positions: usize,
    /// Option evaluations performed.
    pub effort: u64,
}

/// Memoized game-tree search for one group.
pub struct Oracle<'g> {
    group: &'g Group,
    budget: usize,
    full: u64,
    memo: HashMap<u64, u32>,
    // (generated subgroup, new element) -> generated subgroup
    joins: HashMap<(u64, u8), u64>,
    effort: u64,
}

impl<'g> Oracle<'g> {
    pub fn new(group: &'g Group, budget: usize) -> Result<Oracle<'g>, OracleError> {
        let n = group.order();
        if n < 2 {
            return Err(OracleError::TrivialGroup);
        }
        if n > MAX_ORACLE_ORDER {
            return Err(OracleError::OrderTooLarge(n));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Oracle {
            group,
            budget,
            full,
            memo: HashMap::new(),
            joins: HashMap::new(),
            effort: 0,
        })
    }

    fn span_of(&self, p: Position) -> u64 {
        let gens: Vec<Elem> = p.elems().collect();
        Position::from_set(&self.group.generate(&gens)).unwrap().0
    }

    fn join(&mut self, span: u64, x: Elem) -> u64 {
        if span >> x & 1 == 1 {
            return span;
        }
        let g = self.group;
        *self.joins.entry((span, x as u8)).or_insert_with(|| {
            let mut gens: Vec<Elem> = Position(span).elems().collect();
            gens.push(x);
            Position::from_set(&g.generate(&gens)).unwrap().0
        })
    }

    /// Whether choosing `p` keeps the chosen set non-generating.
    pub fn is_position(&self, p: Position) -> bool {
        self.span_of(p) != self.full
    }

    fn solve(&mut self, p: Position, span: u64) -> Result<u32, OracleError> {
        if let Some(&v) = self.memo.get(&p.0) {
            return Ok(v);
        }
        let mut option_nims = Vec::new();
        for x in self.group.elements() {
            if p.contains(x) {
                continue;
            }
            self.effort += 1;
            let next_span = self.join(span, x);
            if next_span == self.full {
                continue;
            }
            let q = p.with(x);
            assert_eq!(q.parity(), 1 - p.parity(), "options alternate parity");
            option_nims.push(self.solve(q, next_span)?);
        }
        if self.memo.len() >= self.budget {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        let v = mex(option_nims);
        self.memo.insert(p.0, v);
        Ok(v)
    }

    /// Nim-number of position `p`.
    pub fn nim(&mut self, p: Position) -> Result<u32, OracleError> {
        if p.0 & !self.full != 0 {
            return Err(OracleError::Precondition(
                "position has foreign elements".into(),
            ));
        }
        let span = self.span_of(p);
        if span == self.full {
            return Err(OracleError::Generating);
        }
        self.solve(p, span)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn effort(&self) -> u64 {
        self.effort
    }

    /// Every memoized position with its nim-number, in mask order.
    pub fn positions(&self) -> Vec<(Position, u32)> {
        let mut v: Vec<_> = self.memo.iter().map(|(&m, &n)| (Position(m), n)).collect();
        v.sort_unstable();
        v
    }

    /// Positions reachable from `p` in one move.
    pub fn options_of(&mut self, p: Position) -> Vec<Position> {
        let span = self.span_of(p);
        let mut out = Vec::new();
        for x in self.group.elements() {
            if !p.contains(x) && self.join(span, x) != self.full {
                out.push(p.with(x));
            }
        }
        out
    }
}

/// Nim-number of the game on `g`, from the empty position.
pub fn brute_nim(g: &Group, budget: usize) -> Result<OracleResult, OracleError> {
    let mut o = Oracle::new(g, budget)?;
    let nim = o.nim(Position::EMPTY)?;
    Ok(OracleResult {
        nim,
        positions: o.memo_len(),
        effort: o.effort(),
    })
}

pub fn brute_nim_position(g: &Group, p: Position, budget: usize) -> Result<u32, OracleError> {
    Oracle::new(g, budget)?.nim(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Player {
    First,
    Second,
}

/// Which players win at least one complete line of play.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrategyCheck {
    pub first_can_win: bool,
    pub second_can_win: bool,
}

impl StrategyCheck {
    pub fn is_strategy_free(&self) -> bool {
        self.first_can_win != self.second_can_win
    }

    pub fn winner(&self) -> Option<Player> {
        match (self.first_can_win, self.second_can_win) {
            (true, false) => Some(Player::First),
            (false, true) => Some(Player::Second),
            _ => None,
        }
    }
}

/// Walks every line of play from the empty position and records who made
/// the last move. Requires all maximal subgroups of `g` to share a parity.
pub fn strategy_free_outcome_check(g: &Group, budget: usize) -> Result<StrategyCheck, OracleError> {
    let lattice = Lattice::new(g)?;
    if !(lattice.all_maximals_even()? || lattice.all_maximals_odd()?) {
        return Err(OracleError::Precondition(
            "maximal subgroups have mixed parities".into(),
        ));
    }
    let mut o = Oracle::new(g, budget)?;
    let mut seen: HashSet<u64> = HashSet::new();
    let mut stack = vec![Position::EMPTY];
    let mut check = StrategyCheck {
        first_can_win: false,
        second_can_win: false,
    };
    while let Some(p) = stack.pop() {
        if !seen.insert(p.0) {
            continue;
        }
        if seen.len() > budget {
            return Err(OracleError::BudgetExceeded { budget });
        }
        let opts = o.options_of(p);
        if opts.is_empty() {
            // the player who moved last (move number |p|) wins
            if p.len() % 2 == 1 {
                check.first_can_win = true;
            } else {
                check.second_can_win = true;
            }
        }
        stack.extend(opts);
    }
    Ok(check)
}
