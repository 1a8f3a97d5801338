//! Constructors for the group families used throughout the crate.
//!
//! Every constructor takes an explicit order budget and refuses to build a
//! table above it.

use super::{AssocCheck, Elem, Group, Permutation};
use crate::bitset::ElemSet;
use crate::error::GroupError;

fn within_budget(order: u128, budget: usize) -> Result<usize, GroupError> {
    if order > budget as u128 {
        Err(GroupError::BudgetExceeded { order, budget })
    } else {
        Ok(order as usize)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// `Z_n` with `a·b = (a + b) mod n`.
pub fn cyclic(n: usize, budget: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(
            "cyclic group of order 0".into(),
        ));
    }
    let n = within_budget(n as u128, budget)?;
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    Group::from_table(format!("Z{n}"), n, table, AssocCheck::UpToLimit)
}

/// `A ⋊ Z_2` with the reflection acting by inversion.
///
/// Ids `0..|A|` are the copy of `A` (same ids as in `a`); id `|A| + x`
/// is the reflected element `(x, s)`.
pub fn generalized_dihedral(a: &Group, budget: usize) -> Result<Group, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian(a.name().to_string()));
    }
    let m = a.order();
    let n = within_budget(2 * m as u128, budget)?;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (ax, sx) = (x % m, x / m);
        for y in 0..n {
            let (ay, sy) = (y % m, y / m);
            let twisted = if sx == 1 { a.inv(ay) } else { ay };
            table[x * n + y] = a.mul(ax, twisted) + m * ((sx + sy) % 2);
        }
    }
    Group::from_table(
        format!("Dih({})", a.name()),
        n,
        table,
        AssocCheck::UpToLimit,
    )
}

/// Dihedral group of order `2n`, i.e. `Dih(Z_n)`.
pub fn dihedral(n: usize, budget: usize) -> Result<Group, GroupError> {
    within_budget(2 * n as u128, budget)?;
    let zn = cyclic(n, budget)?;
    Ok(generalized_dihedral(&zn, budget)?.with_name(format!("D{n}")))
}

/// `⟨x, y | x^{2n} = y^4 = 1, x^n = y^2, x^y = x^{-1}⟩`, order `4n`.
///
/// Element `x^k y^e` has id `k + 2n·e`.
pub fn dicyclic(n: usize, budget: usize) -> Result<Group, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParameter(format!(
            "dicyclic group needs n >= 2, got {n}"
        )));
    }
    let order = within_budget(4 * n as u128, budget)?;
    let m = 2 * n;
    let mut table = vec![0; order * order];
    for p in 0..order {
        let (a, e) = (p % m, p / m);
        for q in 0..order {
            let (b, f) = (q % m, q / m);
            let id = if e == 0 {
                (a + b) % m + m * f
            } else if f == 0 {
                // x^a y x^b = x^{a-b} y
                (a + m - b) % m + m
            } else {
                // x^a y x^b y = x^{a-b} y^2 = x^{a-b+n}
                (a + m - b + n) % m
            };
            table[p * order + q] = id;
        }
    }
    Group::from_table(format!("Dic{n}"), order, table, AssocCheck::UpToLimit)
}

fn permutation_group(name: String, perms: Vec<Permutation>) -> Result<Group, GroupError> {
    use std::collections::HashMap;
    let n = perms.len();
    let index: HashMap<&Permutation, Elem> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            table[i * n + j] = index[&p.then(q)];
        }
    }
    Group::from_table(name, n, table, AssocCheck::UpToLimit)
}

pub fn symmetric(n: usize, budget: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("Sym(0)".into()));
    }
    within_budget(factorial(n), budget)?;
    permutation_group(format!("S{n}"), Permutation::all(n))
}

pub fn alternating(n: usize, budget: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("Alt(0)".into()));
    }
    within_budget(factorial(n).div_ceil(2), budget)?;
    let perms = Permutation::all(n)
        .into_iter()
        .filter(Permutation::is_even)
        .collect();
    permutation_group(format!("A{n}"), perms)
}

fn product_name(g: &Group, h: &Group) -> String {
    let left = if g.name().contains('/') {
        format!("({})", g.name())
    } else {
        g.name().to_string()
    };
    let right = if h.name().contains(' ') {
        format!("({})", h.name())
    } else {
        h.name().to_string()
    };
    format!("{left} x {right}")
}

/// Component-wise product; the pair `(a, b)` gets id `a·|h| + b`.
pub fn direct_product(g: &Group, h: &Group, budget: usize) -> Result<Group, GroupError> {
    let (m, k) = (g.order(), h.order());
    let n = within_budget(m as u128 * k as u128, budget)?;
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (gx, hx) = (x / k, x % k);
        for y in 0..n {
            let (gy, hy) = (y / k, y % k);
            table[x * n + y] = g.mul(gx, gy) * k + h.mul(hx, hy);
        }
    }
    Group::from_table(product_name(g, h), n, table, AssocCheck::UpToLimit)
}

/// Coset labelling `x ↦ xN` used by [`quotient`]; coset `0` is `N` itself.
pub fn coset_map(g: &Group, normal: &ElemSet) -> Vec<Elem> {
    let mut label = vec![usize::MAX; g.order()];
    let mut next = 0;
    for x in g.elements() {
        if label[x] == usize::MAX {
            for n in normal.iter() {
                label[g.mul(x, n)] = next;
            }
            next += 1;
        }
    }
    label
}

/// `G/N` on cosets, with the natural projection given by [`coset_map`].
/// The table is always checked for associativity.
pub fn quotient(g: &Group, normal: &ElemSet) -> Result<Group, GroupError> {
    if normal.capacity() != g.order() || !g.is_subgroup(normal) || !g.is_normal(normal) {
        return Err(GroupError::NotNormal);
    }
    let label = coset_map(g, normal);
    let n = g.order() / normal.len();
    let mut reps = vec![0; n];
    for x in g.elements().rev() {
        reps[label[x]] = x;
    }
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = label[g.mul(reps[a], reps[b])];
        }
    }
    let base = if g.name().contains(' ') {
        format!("({})", g.name())
    } else {
        g.name().to_string()
    };
    Group::from_table(
        format!("{base}/N{}", normal.len()),
        n,
        table,
        AssocCheck::Always,
    )
}
