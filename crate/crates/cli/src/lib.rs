//! Subcommand implementations behind the `dng` binary.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use dng::catalog::{self, CatalogEntry};
use dng::classify::{barnes_first_player_wins, classify_with_lattice, Classification};
use dng::error::{ClassifyError, GroupError, LatticeError, OracleError, SolveError};
use dng::oracle::{brute_nim, DEFAULT_POSITION_BUDGET};
use dng::{parse_spec, Group, Lattice, StructureDigraph};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Budget(String),
    Disagreement(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Disagreement(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Budget(m) => write!(f, "budget exceeded: {m}"),
            CliError::Disagreement(m) => write!(f, "disagreement: {m}"),
            CliError::Other(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Parse(p) => CliError::Parse(p.to_string()),
            GroupError::BudgetExceeded { .. } | GroupError::CapExceeded { .. } => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::GuardExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Lattice(l) => l.into(),
            ClassifyError::Group(g) => g.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Lattice(l) => l.into(),
            other => CliError::Other(other.to_string()),
        }
    }
}

/// Builds a group from an expression such as `Z6 x Z2` or `Dih(Z3 x Z3)`.
/// `SL(2,3)` and `GL(2,3)` are accepted as catalog names.
pub fn build_group(text: &str) -> Result<Group, CliError> {
    let trimmed = text.trim();
    if let Some(entry) = catalog::entries()
        .into_iter()
        .find(|e| e.spec().is_none() && e.name == trimmed)
    {
        return Ok(entry.build()?);
    }
    let spec = parse_spec(trimmed).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(spec.build()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleValue {
    Nim(u32),
    SkippedBudget,
    Disabled,
}

impl OracleValue {
    pub fn nim(self) -> Option<u32> {
        match self {
            OracleValue::Nim(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleValue::Nim(n) => write!(f, "{n}"),
            OracleValue::SkippedBudget => f.write_str("skipped(budget)"),
            OracleValue::Disabled => f.write_str("skipped(disabled)"),
        }
    }
}

impl Serialize for OracleValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OracleValue::Nim(n) => s.serialize_u32(*n),
            other => s.collect_str(other),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramSummary {
    pub nodes: usize,
    pub edges: usize,
    pub types: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedFrom {
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_from: Option<ReducedFrom>,
    pub classification: Classification,
    pub solver_nim: Option<u32>,
    pub oracle_nim: OracleValue,
    pub agree: bool,
    pub diagram: Option<DiagramSummary>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.reduced_from {
            out += &format!("reduced from: {} (order {})\n", r.name, r.order);
        }
        out += &format!("group: {} (order {})\n", self.name, self.order);
        let c = &self.classification;
        out += &format!(
            "classifier: *{} via {} ({})\n",
            c.nim,
            c.rule.name(),
            match c.outcome {
                dng::Outcome::NPosition => "first player wins",
                dng::Outcome::PPosition => "second player wins",
            }
        );
        match self.solver_nim {
            Some(n) => out += &format!("solver: *{n}\n"),
            None => out += "solver: skipped\n",
        }
        out += &format!("oracle: {}\n", self.oracle_nim);
        if let Some(d) = &self.diagram {
            let types: Vec<String> = d.types.iter().map(|(t, k)| format!("{t}x{k}")).collect();
            out += &format!(
                "structure diagram: {} nodes, {} edges, types {}\n",
                d.nodes,
                d.edges,
                types.join(" ")
            );
        }
        out += &format!("agree: {}\n", self.agree);
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub fast: bool,
    pub oracle: bool,
    pub mod_frattini: bool,
    pub budget: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            fast: false,
            oracle: true,
            mod_frattini: false,
            budget: DEFAULT_POSITION_BUDGET,
        }
    }
}

fn run_oracle(g: &Group, budget: usize) -> Result<OracleValue, CliError> {
    match brute_nim(g, budget) {
        Ok(r) => Ok(OracleValue::Nim(r.nim)),
        Err(OracleError::BudgetExceeded { .. } | OracleError::OrderTooLarge(_)) => {
            Ok(OracleValue::SkippedBudget)
        }
        Err(e) => Err(CliError::Other(e.to_string())),
    }
}

/// Quotient of `g` by its largest odd normal subgroup inside `Φ(G)`, or
/// `None` when that subgroup is trivial.
pub fn frattini_reduction(g: &Group, lattice: &Lattice) -> Result<Option<Group>, CliError> {
    let n = lattice.largest_odd_normal_in_frattini(g)?;
    if n.order() == 1 {
        return Ok(None);
    }
    Ok(Some(g.quotient(n.members())?))
}

pub fn analyze_group(g: &Group, opts: AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let lattice = Lattice::new(g)?;
    if opts.mod_frattini {
        if let Some(q) = frattini_reduction(g, &lattice)? {
            let mut report = analyze_group(
                &q,
                AnalyzeOptions {
                    mod_frattini: false,
                    ..opts
                },
            )?;
            report.reduced_from = Some(ReducedFrom {
                name: g.name().to_string(),
                order: g.order(),
            });
            return Ok(report);
        }
    }
    let classification = classify_with_lattice(g, &lattice)?;
    let (solver_nim, diagram) = if opts.fast {
        (None, None)
    } else {
        let d = StructureDigraph::from_lattice(g, &lattice)?.solved()?;
        let summary = DiagramSummary {
            nodes: d.nodes().len(),
            edges: d.edges().len(),
            types: d.type_counts(),
        };
        (Some(d.source_type().nim_even), Some(summary))
    };
    let oracle_nim = if opts.oracle {
        run_oracle(g, opts.budget)?
    } else {
        OracleValue::Disabled
    };
    let agree = [solver_nim, oracle_nim.nim()]
        .into_iter()
        .flatten()
        .all(|n| n == classification.nim);
    Ok(AnalysisReport {
        name: g.name().to_string(),
        order: g.order(),
        reduced_from: None,
        classification,
        solver_nim,
        oracle_nim,
        agree,
        diagram,
    })
}

/// Parses, builds and analyzes. Disagreement is reported through
/// [`AnalysisReport::agree`], not as an error.
pub fn cmd_analyze(spec: &str, opts: AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let g = build_group(spec)?;
    analyze_group(&g, opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramKind {
    Structure,
    Simplified,
    Lattice,
}

pub fn cmd_diagram(spec: &str, kind: DiagramKind) -> Result<String, CliError> {
    let g = build_group(spec)?;
    let lattice = Lattice::new(&g)?;
    Ok(match kind {
        DiagramKind::Lattice => lattice.to_dot(g.name()),
        DiagramKind::Structure => StructureDigraph::from_lattice(&g, &lattice)?
            .solved()?
            .to_dot(),
        DiagramKind::Simplified => StructureDigraph::from_lattice(&g, &lattice)?
            .solved()?
            .simplify()?
            .to_dot(),
    })
}

pub const VERIFY_HEADER: [&str; 8] = [
    "name",
    "order",
    "classifier_nim",
    "rule",
    "solver_nim",
    "oracle_nim",
    "barnes",
    "d",
];

pub const GENERATOR_CAP: usize = 3;

#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub name: String,
    pub order: usize,
    pub classification: Classification,
    pub solver_nim: u32,
    pub oracle_nim: OracleValue,
    pub barnes_first: bool,
    pub min_generators: Option<usize>,
}

impl VerifyRow {
    pub fn agrees(&self) -> bool {
        let nim = self.classification.nim;
        self.solver_nim == nim
            && self.oracle_nim.nim().is_none_or(|o| o == nim)
            && self.barnes_first == (nim != 0)
    }

    pub fn fields(&self) -> [String; 8] {
        [
            self.name.clone(),
            self.order.to_string(),
            self.classification.nim.to_string(),
            self.classification.rule.name().to_string(),
            self.solver_nim.to_string(),
            self.oracle_nim.to_string(),
            if self.barnes_first { "first" } else { "second" }.to_string(),
            match self.min_generators {
                Some(d) => d.to_string(),
                None => format!(">{GENERATOR_CAP}"),
            },
        ]
    }
}

pub fn verify_group(
    name: &str,
    g: &Group,
    budget: usize,
    oracle: bool,
) -> Result<VerifyRow, CliError> {
    let lattice = Lattice::new(g)?;
    let classification = classify_with_lattice(g, &lattice)?;
    let solver_nim = StructureDigraph::from_lattice(g, &lattice)?
        .solved()?
        .source_type()
        .nim_even;
    let oracle_nim = if oracle {
        run_oracle(g, budget)?
    } else {
        OracleValue::Disabled
    };
    let min_generators = match g.min_generators(GENERATOR_CAP) {
        Ok(d) => Some(d),
        Err(GroupError::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(VerifyRow {
        name: name.to_string(),
        order: g.order(),
        classification,
        solver_nim,
        oracle_nim,
        barnes_first: barnes_first_player_wins(g),
        min_generators,
    })
}

/// Reads a catalog file: one group expression per line, `#` comments.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match catalog::find(line).filter(|e| e.spec().is_none()) {
            Some(e) => out.push(e),
            None => out.push(CatalogEntry::from_spec(line).map_err(|e| match e {
                GroupError::Parse(p) => CliError::Parse(format!("{line:?}: {p}")),
                other => CliError::from(other),
            })?),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn disagreements(&self) -> Vec<&VerifyRow> {
        self.rows.iter().filter(|r| !r.agrees()).collect()
    }

    pub fn oracle_checked(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.oracle_nim.nim().is_some())
            .count()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(VERIFY_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r.fields()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    pub fn summary(&self) -> String {
        format!(
            "{} groups, {} oracle-checked, {} disagreements",
            self.rows.len(),
            self.oracle_checked(),
            self.disagreements().len()
        )
    }
}

/// Runs every entry of order at most `max_order` concurrently; rows come
/// back in input order.
pub fn cmd_verify(
    entries: Vec<CatalogEntry>,
    max_order: usize,
    budget: usize,
    oracle: bool,
) -> Result<VerifyReport, CliError> {
    let selected: Vec<CatalogEntry> = entries
        .into_iter()
        .filter(|e| e.order <= max_order && e.order > 1)
        .collect();
    let rows = selected
        .par_iter()
        .map(|e| {
            let g = e.build()?;
            verify_group(&e.name, &g, budget, oracle)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(VerifyReport { rows })
}
