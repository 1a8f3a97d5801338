//! Built-in list of test groups used by the verification survey.

use crate::error::GroupError;
use crate::group::spec::{parse_spec, GroupSpec};
use crate::group::{AssocCheck, Group, DEFAULT_ORDER_BUDGET};

#[derive(Clone, Debug)]
enum Source {
    Spec(GroupSpec),
    /// 2×2 matrices over F_3; `true` restricts to determinant 1.
    Matrices2x2Mod3 {
        special: bool,
    },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    source: Source,
}

impl CatalogEntry {
    pub fn from_spec(text: &str) -> Result<CatalogEntry, GroupError> {
        let spec = parse_spec(text)?;
        let order = spec.order().unwrap_or(u128::MAX);
        if order > DEFAULT_ORDER_BUDGET as u128 {
            return Err(GroupError::BudgetExceeded {
                order,
                budget: DEFAULT_ORDER_BUDGET,
            });
        }
        Ok(CatalogEntry {
            name: spec.to_string(),
            order: order as usize,
            source: Source::Spec(spec),
        })
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        match &self.source {
            Source::Spec(s) => s.build(),
            Source::Matrices2x2Mod3 { special } => matrix_group_mod3(*special),
        }
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        match &self.source {
            Source::Spec(s) => Some(s),
            Source::Matrices2x2Mod3 { .. } => None,
        }
    }
}

const ABELIAN_PRODUCTS: &[&str] = &[
    "Z2 x Z2",
    "Z2 x Z4",
    "Z2 x Z2 x Z2",
    "Z3 x Z3",
    "Z2 x Z6",
    "Z6 x Z2",
    "Z4 x Z4",
    "Z2 x Z8",
    "Z2 x Z2 x Z4",
    "Z2 x Z2 x Z2 x Z2",
    "Z2 x Z10",
    "Z3 x Z6",
    "Z2 x Z3 x Z3",
    "Z2 x Z12",
    "Z2 x Z2 x Z6",
    "Z5 x Z5",
    "Z2 x Z14",
    "Z3 x Z9",
    "Z3 x Z3 x Z3",
    "Z4 x Z8",
    "Z2 x Z16",
    "Z2 x Z2 x Z8",
    "Z2 x Z2 x Z2 x Z2 x Z2",
    "Z18 x Z2",
    "Z6 x Z6",
    "Z3 x Z12",
    "Z3 x Z3 x Z4",
];

const GENERALIZED_DIHEDRAL: &[&str] = &[
    "Dih(Z2 x Z2)",
    "Dih(Z2 x Z4)",
    "Dih(Z2 x Z2 x Z2)",
    "Dih(Z3 x Z3)",
    "Dih(Z2 x Z6)",
    "Dih(Z4 x Z4)",
    "Dih(Z2 x Z8)",
    "Dih(Z3 x Z6)",
    "Dih(Z5 x Z5)",
    "Dih(Z3 x Z3 x Z3)",
];

const NONABELIAN_PRODUCTS: &[&str] = &[
    "S3 x Z2",
    "S3 x Z3",
    "S3 x Z4",
    "S3 x Z2 x Z2",
    "S3 x Z5",
    "S3 x Z6",
    "S3 x S3",
    "A4 x Z2",
    "A4 x Z3",
    "A4 x Z4",
    "Dic2 x Z2",
    "Dic2 x Z3",
    "Dic2 x Z4",
    "D4 x Z2",
    "D4 x Z3",
    "D5 x Z2",
    "D5 x Z3",
    "D6 x Z3",
    "D7 x Z2",
    "Dic3 x Z2",
    "Dic3 x Z3",
    "Dic5 x Z2",
    "Dih(Z3 x Z3) x Z2",
    "S4 x Z2",
];

/// Every catalog group, ordered by (order, name).
pub fn entries() -> Vec<CatalogEntry> {
    let mut texts: Vec<String> = Vec::new();
    texts.extend((2..=64).map(|n| format!("Z{n}")));
    texts.extend((2..=30).map(|n| format!("D{n}")));
    texts.extend((2..=15).map(|n| format!("Dic{n}")));
    texts.extend(["S3", "S4", "S5", "A3", "A4", "A5"].map(String::from));
    texts.extend(ABELIAN_PRODUCTS.iter().map(|s| s.to_string()));
    texts.extend(GENERALIZED_DIHEDRAL.iter().map(|s| s.to_string()));
    texts.extend(NONABELIAN_PRODUCTS.iter().map(|s| s.to_string()));
    let mut out: Vec<CatalogEntry> = texts
        .iter()
        .map(|t| CatalogEntry::from_spec(t).expect("catalog entries parse"))
        .collect();
    out.push(CatalogEntry {
        name: "SL(2,3)".into(),
        order: 24,
        source: Source::Matrices2x2Mod3 { special: true },
    });
    out.push(CatalogEntry {
        name: "GL(2,3)".into(),
        order: 48,
        source: Source::Matrices2x2Mod3 { special: false },
    });
    out.sort_by(|a, b| (a.order, &a.name).cmp(&(b.order, &b.name)));
    out
}

/// Catalog entries of order at most `max_order`.
pub fn up_to(max_order: usize) -> Vec<CatalogEntry> {
    entries()
        .into_iter()
        .filter(|e| e.order <= max_order)
        .collect()
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// `GL(2,3)` or `SL(2,3)` by enumerating invertible matrices, identity first.
pub fn matrix_group_mod3(special: bool) -> Result<Group, GroupError> {
    type M = [u8; 4];
    let det = |m: &M| (m[0] as i32 * m[3] as i32 - m[1] as i32 * m[2] as i32).rem_euclid(3);
    let identity: M = [1, 0, 0, 1];
    let mut mats: Vec<M> = vec![identity];
    for code in 0..81u32 {
        let m: M = [
            (code % 3) as u8,
            (code / 3 % 3) as u8,
            (code / 9 % 3) as u8,
            (code / 27 % 3) as u8,
        ];
        let d = det(&m);
        if m != identity && d != 0 && (!special || d == 1) {
            mats.push(m);
        }
    }
    let mul = |a: &M, b: &M| -> M {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    let n = mats.len();
    let index: std::collections::HashMap<M, usize> =
        mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut table = vec![0; n * n];
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            table[i * n + j] = index[&mul(a, b)];
        }
    }
    let name = if special { "SL(2,3)" } else { "GL(2,3)" };
    Group::from_table(name, n, table, AssocCheck::UpToLimit)
}
