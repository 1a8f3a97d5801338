//! Nim-numbers straight from the maximal subgroups, plus closed forms for
//! several families and the element-wise outcome criterion.

use serde::Serialize;

use crate::error::ClassifyError;
use crate::group::{Elem, Group};
use crate::lattice::Lattice;

/// Which checklist clause decided the value. Names are part of the CLI
/// output contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    Size2,
    OddOrder,
    EvenFrattini,
    AllMaximalsEven,
    EvenCover,
    Fallthrough3,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Size2 => "Size2",
            Rule::OddOrder => "OddOrder",
            Rule::EvenFrattini => "EvenFrattini",
            Rule::AllMaximalsEven => "AllMaximalsEven",
            Rule::EvenCover => "EvenCover",
            Rule::Fallthrough3 => "Fallthrough3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    /// The next player (the first player, from the start) wins.
    #[serde(rename = "N-position")]
    NPosition,
    /// The previous player (the second player, from the start) wins.
    #[serde(rename = "P-position")]
    PPosition,
}

impl Outcome {
    pub fn from_nim(nim: u32) -> Outcome {
        if nim == 0 {
            Outcome::PPosition
        } else {
            Outcome::NPosition
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub nim: u32,
    pub rule: Rule,
    pub outcome: Outcome,
}

impl Classification {
    fn new(nim: u32, rule: Rule) -> Self {
        Classification {
            nim,
            rule,
            outcome: Outcome::from_nim(nim),
        }
    }
}

/// Ordered checklist: `|G| = 2`, odd order, even `Φ(G)`, all maximals
/// even, even maximals cover `G`, otherwise `*3`.
pub fn classify(g: &Group) -> Result<Classification, ClassifyError> {
    if g.order() < 2 {
        return Err(crate::error::LatticeError::TrivialGroup.into());
    }
    if g.order() == 2 {
        return Ok(Classification::new(1, Rule::Size2));
    }
    if g.order() % 2 == 1 {
        return Ok(Classification::new(1, Rule::OddOrder));
    }
    let lattice = Lattice::new(g)?;
    classify_with_lattice(g, &lattice)
}

pub fn classify_with_lattice(
    g: &Group,
    lattice: &Lattice,
) -> Result<Classification, ClassifyError> {
    let n = g.order();
    if n < 2 {
        return Err(crate::error::LatticeError::TrivialGroup.into());
    }
    Ok(if n == 2 {
        Classification::new(1, Rule::Size2)
    } else if n % 2 == 1 {
        Classification::new(1, Rule::OddOrder)
    } else if lattice.frattini()?.is_even() {
        Classification::new(0, Rule::EvenFrattini)
    } else if lattice.all_maximals_even()? {
        Classification::new(0, Rule::AllMaximalsEven)
    } else if lattice.even_maximals_cover()? {
        Classification::new(0, Rule::EvenCover)
    } else {
        Classification::new(3, Rule::Fallthrough3)
    })
}

/// True iff some odd-order element generates `G` together with every
/// involution. Vacuously true for groups without involutions.
pub fn barnes_first_player_wins(g: &Group) -> bool {
    let involutions: Vec<Elem> = g.involutions().collect();
    g.elements()
        .filter(|&x| g.element_order(x) % 2 == 1)
        .any(|x| involutions.iter().all(|&t| g.generates(&[x, t])))
}

pub fn cyclic_formula(n: usize) -> Result<u32, ClassifyError> {
    match n {
        0 | 1 => Err(ClassifyError::Precondition(format!("cyclic order {n} < 2"))),
        2 => Ok(1),
        n if n % 2 == 1 => Ok(1),
        n if n % 4 == 2 => Ok(3),
        _ => Ok(0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    Cyclic,
    Nilpotent,
    GeneralizedDihedral,
    GeneralizedQuaternion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyPrediction {
    pub family: Family,
    pub nim: u32,
}

/// Every Sylow subgroup is normal, tested by counting elements of
/// `p`-power order: there are exactly `|P|` of them iff the Sylow
/// `p`-subgroup `P` is unique.
pub fn is_nilpotent(g: &Group) -> bool {
    let n = g.order();
    prime_factors(n).into_iter().all(|(p, k)| {
        let sylow = p.pow(k as u32);
        let p_elems = g
            .elements()
            .filter(|&x| is_power_of(g.element_order(x), p))
            .count();
        p_elems == sylow
    })
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn prime_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Z_2 × Z_{2k+1}` (k ≥ 1) is recognized as cyclic of order `≡ 2 (mod 4)`
/// above 2.
pub fn nilpotent_formula(g: &Group) -> Result<FamilyPrediction, ClassifyError> {
    let n = g.order();
    if n < 2 {
        return Err(ClassifyError::Precondition("trivial group".into()));
    }
    if !is_nilpotent(g) {
        return Err(ClassifyError::Precondition(format!(
            "{} is not nilpotent",
            g.name()
        )));
    }
    let nim = if n == 2 || n % 2 == 1 {
        1
    } else if n % 4 == 2 && g.is_cyclic() {
        3
    } else {
        0
    };
    Ok(FamilyPrediction {
        family: Family::Nilpotent,
        nim,
    })
}

/// Prediction for `Dih(a)`.
pub fn gendih_formula(a: &Group) -> Result<FamilyPrediction, ClassifyError> {
    if !a.is_abelian() {
        return Err(ClassifyError::Precondition(format!(
            "{} is not abelian",
            a.name()
        )));
    }
    let nim = if a.order() % 2 == 1 && a.is_cyclic() {
        3
    } else {
        0
    };
    Ok(FamilyPrediction {
        family: Family::GeneralizedDihedral,
        nim,
    })
}

pub fn quaternion_formula() -> FamilyPrediction {
    FamilyPrediction {
        family: Family::GeneralizedQuaternion,
        nim: 0,
    }
}

/// Some `t` with `t⁻¹ x t = x⁻¹`.
pub fn is_real(g: &Group, x: Elem) -> bool {
    let target = g.inv(x);
    g.elements().any(|t| g.conjugate(x, t) == target)
}

pub fn real_element_disjunction(g: &Group, x: Elem) -> Result<bool, ClassifyError> {
    let lattice = Lattice::new(g)?;
    real_element_disjunction_in(g, &lattice, x)
}

/// For a real non-identity element `x` of odd order in a group of order above 2: `x` lies
/// in a proper even subgroup, or `G = ⟨x, u⟩` has order `2·|x|` for an
/// involution `u` inverting `x` (so `G` is dihedral over `⟨x⟩`).
pub fn real_element_disjunction_in(
    g: &Group,
    lattice: &Lattice,
    x: Elem,
) -> Result<bool, ClassifyError> {
    if x >= g.order() {
        return Err(ClassifyError::Precondition(format!("no element {x}")));
    }
    if g.order() <= 2 {
        return Err(ClassifyError::Precondition(
            "group order must exceed 2".into(),
        ));
    }
    if x == g.identity() {
        return Err(ClassifyError::Precondition(
            "the identity is excluded".into(),
        ));
    }
    if g.element_order(x).is_multiple_of(2) {
        return Err(ClassifyError::Precondition(format!(
            "element {x} has even order"
        )));
    }
    if !is_real(g, x) {
        return Err(ClassifyError::Precondition(format!(
            "element {x} is not real"
        )));
    }
    let in_even = lattice
        .subgroups()
        .iter()
        .any(|h| h.order() < g.order() && h.is_even() && h.contains(x));
    let dihedral = g.order() == 2 * g.element_order(x)
        && g.involutions()
            .any(|u| g.conjugate(x, u) == g.inv(x) && g.generates(&[x, u]));
    Ok(in_even || dihedral)
}
