//! Catalog of improvement operations.
//!
//! An improvement operation Φi bundles a structural edit script, eight
//! ordinal criteria estimates on the scale [1,5] (higher is better — the
//! scale encodes effect valence, so even "cost" is maximized), a priority
//! rank r (1 = best), a resource requirement a, and optional binary
//! relations to other operations. Priorities convert to knapsack profits
//! through a configurable transform; the built-in transform is
//! `c = 4 − r`, matching the bundled 17-operation reference catalog whose
//! ranks span 1..4.
//!
//! File formats: a JSON document with `criteria`, `scale`, `operations`
//! (see [`load_catalog`]/[`save_catalog`]), and a CSV import/export of the
//! estimates matrix with header `Υ1..Υ8,priority,resource`
//! ([`import_estimates_csv`]/[`export_estimates_csv`]).

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::model::DesignAlternative;

/// Number of criteria every estimate vector carries.
pub const CRITERIA_COUNT: usize = 8;

/// Inclusive bounds of the ordinal estimate scale.
pub const SCALE: (u8, u8) = (1, 5);

/// Errors produced while building, loading, or querying a catalog.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Document {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("operation Φ{id}: estimate {value} is outside the ordinal scale [{}, {}]", SCALE.0, SCALE.1)]
    EstimateOutOfScale { id: u32, value: u8 },
    #[error("operation Φ{id}: expected {CRITERIA_COUNT} criteria estimates, found {found}")]
    UnknownCriterionCount { id: u32, found: usize },
    #[error("duplicate operation id Φ{id}")]
    DuplicateOperation { id: u32 },
    #[error("operation Φ{id}: priority must be at least 1")]
    BadPriority { id: u32 },
    #[error("operation Φ{id}: resource must be at least 1")]
    BadResource { id: u32 },
    #[error("operation Φ{id}: relation references unknown operation Φ{other}")]
    UnknownRelationTarget { id: u32, other: u32 },
    #[error("precedence relations form a cycle through Φ{id}")]
    CyclicPrecedence { id: u32 },
    #[error("priority {rank} is outside the transform's domain [1, {base}]")]
    PriorityOutOfRange { rank: u32, base: u32 },
    #[error("unknown operation id Φ{id}")]
    UnknownOperation { id: u32 },
    #[error("CSV import: {0}")]
    Csv(String),
}

/// Identifier of one criterion plus its display name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    /// Symbolic id, `Υ1`..`Υ8`.
    pub id: String,
    /// Display name, e.g. "scalability".
    pub name: String,
}

/// The fixed schema all estimate vectors share: eight ordinal criteria on
/// [1,5], all maximized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaSchema {
    pub criteria: Vec<Criterion>,
    /// Inclusive scale bounds `(low, high)`.
    pub scale: (u8, u8),
}

impl CriteriaSchema {
    /// The built-in schema: cost, implementation time, performance,
    /// maintenance-cost decrease, scalability, reliability, mobility,
    /// usability value — all on the ordinal scale 1 ("strong negative
    /// effect") to 5 ("strong positive effect").
    pub fn builtin() -> Self {
        let names = [
            "cost",
            "required time for implementation",
            "performance",
            "decreasing a cost of maintenance",
            "scalability",
            "reliability",
            "mobility",
            "usability value",
        ];
        CriteriaSchema {
            criteria: names
                .iter()
                .enumerate()
                .map(|(i, name)| Criterion {
                    id: format!("Υ{}", i + 1),
                    name: name.to_string(),
                })
                .collect(),
            scale: SCALE,
        }
    }
}

/// One structural edit of an operation's edit script. Targets are base
/// labels; an empty parent means "directly under the root".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action")]
pub enum EditAction {
    /// Swap one design alternative for another on an existing leaf.
    ReplaceAlternative {
        target: String,
        before: String,
        after: DesignAlternative,
    },
    /// Add a design alternative to an existing leaf.
    AddAlternative {
        target: String,
        alternative: DesignAlternative,
    },
    /// Add a new leaf under an existing non-root node.
    AddLeaf { parent: String, leaf: LeafSpec },
    /// Add a new top-level leaf (directly under the root).
    AddSubsystem { leaf: LeafSpec },
    /// Replace one or more sibling leaves by a new leaf.
    ReplaceLeaf {
        parent: String,
        before: Vec<String>,
        leaf: LeafSpec,
    },
}

/// Payload of an edit that introduces a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafSpec {
    pub label: String,
    pub title: String,
    pub alternatives: Vec<DesignAlternative>,
}

/// Binary relation from one operation to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "other")]
pub enum Relation {
    /// The two operations are interchangeable.
    Equivalence(u32),
    /// The two operations reinforce each other.
    Complementarity(u32),
    /// The referenced operation must be selected whenever this one is.
    Precedence(u32),
}

/// One improvement operation Φi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImprovementOperation {
    /// Positive index; rendered as `Φ<id>`.
    pub id: u32,
    /// One-line description of the change.
    pub summary: String,
    /// Structural edit script realizing the change.
    pub edits: Vec<EditAction>,
    /// Ordinal criteria estimates, one per schema criterion.
    pub estimates: Vec<u8>,
    /// Priority rank, 1 = best.
    pub priority: u32,
    /// Resource requirement in abstract units, ≥ 1.
    pub resource: u64,
    /// Optional binary relations to other operations.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<Relation>,
}

/// Converts a priority rank into a profit: `profit = base − rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfitTransform {
    pub base: u32,
}

impl ProfitTransform {
    pub fn new(base: u32) -> Self {
        Self { base }
    }

    /// The built-in transform `c = 4 − r` for ranks 1..4.
    pub fn builtin() -> Self {
        Self { base: 4 }
    }

    /// Applies the transform; ranks outside `[1, base]` are a
    /// configuration error.
    pub fn profit(&self, rank: u32) -> Result<i64, CatalogError> {
        if rank < 1 || rank > self.base {
            return Err(CatalogError::PriorityOutOfRange {
                rank,
                base: self.base,
            });
        }
        Ok(i64::from(self.base) - i64::from(rank))
    }
}

/// Converts a priority rank into a profit using the built-in transform
/// `c = 4 − r`; ranks outside [1,4] are a configuration error.
pub fn profit_from_priority(rank: u32) -> Result<i64, CatalogError> {
    ProfitTransform::builtin().profit(rank)
}

/// The catalog: a criteria schema, a list of operations, and the profit
/// transform its priorities convert through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub schema: CriteriaSchema,
    pub operations: Vec<ImprovementOperation>,
    pub transform: ProfitTransform,
}

impl Catalog {
    /// Builds and validates a catalog. The transform defaults to
    /// `base = max priority` so the worst rank maps to profit 0, matching
    /// the built-in `4 − r`.
    pub fn new(
        schema: CriteriaSchema,
        operations: Vec<ImprovementOperation>,
        transform: Option<ProfitTransform>,
    ) -> Result<Self, CatalogError> {
        let max_rank = operations.iter().map(|op| op.priority).max().unwrap_or(4);
        let catalog = Catalog {
            schema,
            operations,
            transform: transform.unwrap_or(ProfitTransform::new(max_rank)),
        };
        catalog.validate()?;
        Ok(catalog)
    }

    /// Checks all catalog invariants: unique ids, estimate vectors of the
    /// schema's length with values inside the scale, priorities and
    /// resources at least 1, relations resolvable, precedence acyclic.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let mut ids = BTreeSet::new();
        for op in &self.operations {
            if !ids.insert(op.id) {
                return Err(CatalogError::DuplicateOperation { id: op.id });
            }
        }
        for op in &self.operations {
            if op.estimates.len() != self.schema.criteria.len() {
                return Err(CatalogError::UnknownCriterionCount {
                    id: op.id,
                    found: op.estimates.len(),
                });
            }
            if let Some(&value) = op
                .estimates
                .iter()
                .find(|v| **v < self.schema.scale.0 || **v > self.schema.scale.1)
            {
                return Err(CatalogError::EstimateOutOfScale { id: op.id, value });
            }
            if op.priority < 1 {
                return Err(CatalogError::BadPriority { id: op.id });
            }
            if op.resource < 1 {
                return Err(CatalogError::BadResource { id: op.id });
            }
            for relation in &op.relations {
                let other = match relation {
                    Relation::Equivalence(o)
                    | Relation::Complementarity(o)
                    | Relation::Precedence(o) => *o,
                };
                if !ids.contains(&other) {
                    return Err(CatalogError::UnknownRelationTarget { id: op.id, other });
                }
            }
        }
        self.check_precedence_acyclic()?;
        Ok(())
    }

    fn check_precedence_acyclic(&self) -> Result<(), CatalogError> {
        // Depth-first search over precedence edges with a three-state mark.
        let edges: BTreeMap<u32, Vec<u32>> = self
            .operations
            .iter()
            .map(|op| {
                let targets = op
                    .relations
                    .iter()
                    .filter_map(|r| match r {
                        Relation::Precedence(other) => Some(*other),
                        _ => None,
                    })
                    .collect();
                (op.id, targets)
            })
            .collect();
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut marks: BTreeMap<u32, Mark> = edges.keys().map(|&id| (id, Mark::New)).collect();
        fn visit(
            id: u32,
            edges: &BTreeMap<u32, Vec<u32>>,
            marks: &mut BTreeMap<u32, Mark>,
        ) -> Result<(), CatalogError> {
            match marks[&id] {
                Mark::Done => return Ok(()),
                Mark::Active => return Err(CatalogError::CyclicPrecedence { id }),
                Mark::New => {}
            }
            marks.insert(id, Mark::Active);
            for &next in &edges[&id] {
                visit(next, edges, marks)?;
            }
            marks.insert(id, Mark::Done);
            Ok(())
        }
        let ids: Vec<u32> = edges.keys().copied().collect();
        for id in ids {
            visit(id, &edges, &mut marks)?;
        }
        Ok(())
    }

    /// Looks up an operation by id.
    pub fn get(&self, id: u32) -> Result<&ImprovementOperation, CatalogError> {
        self.operations
            .iter()
            .find(|op| op.id == id)
            .ok_or(CatalogError::UnknownOperation { id })
    }

    /// Profit of one operation under the catalog's transform.
    pub fn profit_of(&self, id: u32) -> Result<i64, CatalogError> {
        self.transform.profit(self.get(id)?.priority)
    }

    /// All operation ids in ascending order.
    pub fn ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.operations.iter().map(|op| op.id).collect();
        ids.sort_unstable();
        ids
    }

    /// All `(predecessor, dependent)` pairs declared through precedence
    /// relations: the predecessor must be present whenever the dependent is.
    pub fn precedence_pairs(&self) -> Vec<(u32, u32)> {
        let mut pairs = Vec::new();
        for op in &self.operations {
            for relation in &op.relations {
                if let Relation::Precedence(other) = relation {
                    pairs.push((*other, op.id));
                }
            }
        }
        pairs
    }
}

// ---------------------------------------------------------------------------
// JSON document format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCatalog {
    criteria: Vec<Criterion>,
    scale: (u8, u8),
    #[serde(skip_serializing_if = "Option::is_none")]
    profit_base: Option<u32>,
    operations: Vec<ImprovementOperation>,
}

/// Parses and validates a catalog document (JSON syntax, see module docs).
/// The optional `profit_base` field overrides the default transform.
pub fn load_catalog(document: &str) -> Result<Catalog, CatalogError> {
    let raw: RawCatalog = serde_json::from_str(document).map_err(|e| CatalogError::Document {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Catalog::new(
        CriteriaSchema {
            criteria: raw.criteria,
            scale: raw.scale,
        },
        raw.operations,
        raw.profit_base.map(ProfitTransform::new),
    )
}

/// Serializes a catalog to its canonical JSON document (two-space indent).
pub fn save_catalog(catalog: &Catalog) -> String {
    let raw = RawCatalog {
        criteria: catalog.schema.criteria.clone(),
        scale: catalog.schema.scale,
        profit_base: Some(catalog.transform.base),
        operations: catalog.operations.clone(),
    };
    let mut out = Vec::new();
    let formatter = serde_json::ser::PrettyFormatter::with_indent(b"  ");
    let mut serializer = serde_json::Serializer::with_formatter(&mut out, formatter);
    raw.serialize(&mut serializer)
        .expect("serializing a validated catalog cannot fail");
    String::from_utf8(out).expect("canonical documents are UTF-8")
}

// ---------------------------------------------------------------------------
// CSV estimates matrix
// ---------------------------------------------------------------------------

/// Exports the estimates matrix as CSV with header
/// `Υ1,…,Υ8,priority,resource`; one row per operation in ascending id order.
pub fn export_estimates_csv(catalog: &Catalog) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = catalog
        .schema
        .criteria
        .iter()
        .map(|c| c.id.clone())
        .collect();
    header.push("priority".to_string());
    header.push("resource".to_string());
    writer.write_record(&header).expect("in-memory write");
    let mut operations: Vec<&ImprovementOperation> = catalog.operations.iter().collect();
    operations.sort_by_key(|op| op.id);
    for op in operations {
        let mut row: Vec<String> = op.estimates.iter().map(|v| v.to_string()).collect();
        row.push(op.priority.to_string());
        row.push(op.resource.to_string());
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8")
}

/// Imports an estimates matrix from CSV (header `Υ1..Υ8,priority,resource`).
/// Rows become operations Φ1..Φn in row order, with empty edit scripts and
/// generated summaries; the result is validated like any other catalog.
pub fn import_estimates_csv(document: &str) -> Result<Catalog, CatalogError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(document.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CatalogError::Csv(e.to_string()))?
        .clone();
    let expected_len = CRITERIA_COUNT + 2;
    if headers.len() != expected_len {
        return Err(CatalogError::Csv(format!(
            "expected {expected_len} columns (Υ1..Υ{CRITERIA_COUNT}, priority, resource), found {}",
            headers.len()
        )));
    }
    if headers[CRITERIA_COUNT] != *"priority" || headers[CRITERIA_COUNT + 1] != *"resource" {
        return Err(CatalogError::Csv(
            "last two columns must be \"priority\" and \"resource\"".to_string(),
        ));
    }
    let mut operations = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CatalogError::Csv(e.to_string()))?;
        let id = (index + 1) as u32;
        let parse = |field: &str| -> Result<u32, CatalogError> {
            field.trim().parse().map_err(|_| {
                CatalogError::Csv(format!("row {id}: {field:?} is not a non-negative integer"))
            })
        };
        let mut estimates = Vec::with_capacity(CRITERIA_COUNT);
        for i in 0..CRITERIA_COUNT {
            estimates.push(parse(&record[i])? as u8);
        }
        operations.push(ImprovementOperation {
            id,
            summary: format!("imported operation Φ{id}"),
            edits: Vec::new(),
            estimates,
            priority: parse(&record[CRITERIA_COUNT])?,
            resource: u64::from(parse(&record[CRITERIA_COUNT + 1])?),
            relations: Vec::new(),
        });
    }
    Catalog::new(CriteriaSchema::builtin(), operations, None)
}

// ---------------------------------------------------------------------------
// Built-in 17-operation reference catalog
// ---------------------------------------------------------------------------

fn spec_leaf(label: &str, title: &str, alternatives: &[(&str, &str)]) -> LeafSpec {
    LeafSpec {
        label: label.to_string(),
        title: title.to_string(),
        alternatives: alternatives
            .iter()
            .map(|(id, description)| DesignAlternative::new(*id, *description))
            .collect(),
    }
}

/// The bundled reference catalog: 17 improvement operations with their
/// edit scripts, criteria estimates, priorities, and resource requirements.
/// The relation set is empty (the reference corpus declares none) and the
/// profit transform is the built-in `c = 4 − r`.
pub fn builtin_catalog() -> Catalog {
    // (estimates Υ1..Υ8, priority, resource) per operation.
    const TABLE: [([u8; 8], u32, u64); 17] = [
        ([3, 3, 3, 3, 4, 4, 3, 4], 1, 2),
        ([4, 2, 3, 4, 4, 4, 3, 4], 2, 3),
        ([3, 4, 3, 4, 3, 5, 3, 4], 1, 4),
        ([4, 4, 2, 3, 4, 4, 5, 3], 2, 1),
        ([3, 3, 3, 3, 5, 3, 3, 4], 1, 1),
        ([3, 4, 3, 4, 3, 4, 3, 3], 3, 2),
        ([3, 4, 3, 3, 3, 2, 3, 3], 4, 2),
        ([3, 4, 4, 4, 3, 4, 3, 3], 2, 3),
        ([2, 3, 4, 4, 4, 4, 4, 3], 1, 2),
        ([2, 3, 4, 4, 3, 4, 4, 3], 1, 4),
        ([3, 3, 3, 3, 3, 4, 4, 3], 3, 3),
        ([2, 3, 4, 3, 4, 4, 4, 3], 1, 3),
        ([3, 3, 3, 4, 3, 3, 4, 3], 3, 3),
        ([3, 3, 3, 3, 5, 3, 3, 3], 2, 3),
        ([3, 3, 2, 3, 4, 3, 3, 5], 2, 3),
        ([3, 4, 3, 3, 3, 4, 3, 4], 3, 2),
        ([3, 3, 4, 3, 4, 3, 3, 3], 3, 4),
    ];

    let summaries = [
        "Φ1: I1 — introduce group addressing",
        "Φ2: K1 — introduce standardized commissioning",
        "Φ3: L1 — introduce Cluster Library support",
        "Φ4: B1 → B2 — stochastic address management",
        "Φ5: D1 → D2 — relax addressing limits on network size",
        "Φ6: E1 → E2 — large messages via Fragmentation and Reassembly",
        "Φ7: Q1 — many-to-one routing",
        "Φ8: P1 — source routing",
        "Φ9: M1 — startup procedure of channel acquisition",
        "Φ10: N1 — channel hopping",
        "Φ11: R1 — fault tolerant routing algorithms",
        "Φ12: T1 — neighborhood tables",
        "Φ13: B1 — combine both address distribution schemes",
        "Φ14: E2 → E3 — 6LoWPAN fragmentation and reassembly",
        "Φ15: W1 — web services support",
        "Φ16: P → V, V1, V2 — 6LoWPAN multicast/broadcast support",
        "Φ17: U1, U2 — 6LoWPAN mesh networking approaches",
    ];

    let desc_b1 =
        "Device addresses automatically assigned using a hierarchical, distributed scheme";
    let desc_b2 = "Device addresses automatically assigned using a stochastic scheme";
    let edit_scripts: [Vec<EditAction>; 17] = [
        vec![EditAction::AddSubsystem {
            leaf: spec_leaf(
                "I",
                "Group addressing",
                &[("I1", "Devices can be assigned to groups, and whole groups can be addressed with a single frame")],
            ),
        }],
        vec![EditAction::AddSubsystem {
            leaf: spec_leaf(
                "K",
                "Standardized commissioning",
                &[("K1", "Standardized startup procedure and attributes support the use of commissioning tools in a multi-vendor environment")],
            ),
        }],
        vec![EditAction::AddSubsystem {
            leaf: spec_leaf(
                "L",
                "Cluster Library support",
                &[("L1", "Standardizes application behavior across profiles")],
            ),
        }],
        vec![EditAction::ReplaceAlternative {
            target: "B".to_string(),
            before: "B1".to_string(),
            after: DesignAlternative::new("B2", desc_b2),
        }],
        vec![EditAction::ReplaceAlternative {
            target: "D".to_string(),
            before: "D1".to_string(),
            after: DesignAlternative::new(
                "D2",
                "An addressing algorithm that relaxes the limits on network size. Networks with hundreds to thousands of devices are supported",
            ),
        }],
        vec![EditAction::ReplaceAlternative {
            target: "E".to_string(),
            before: "E1".to_string(),
            after: DesignAlternative::new(
                "E2",
                "Large messages, up to the buffer capacity of the sending and receiving devices, are supported using Fragmentation and Reassembly",
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "C".to_string(),
            leaf: spec_leaf(
                "Q",
                "Many-to-one routing",
                &[("Q1", "Whole network discovers the aggregator in one pass")],
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "C".to_string(),
            leaf: spec_leaf(
                "P",
                "Source routing",
                &[("P1", "Aggregator responds to all senders in an economical manner")],
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "A".to_string(),
            leaf: spec_leaf(
                "M",
                "Startup Procedure of Channel Acquisition",
                &[("M1", "PAN coordinator selects best available RF channel/Network ID at startup time")],
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "A".to_string(),
            leaf: spec_leaf(
                "N",
                "Channel Hopping",
                &[("N1", "Ongoing interference detection and adoption of a new operating RF channel and/or Network ID")],
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "F".to_string(),
            leaf: spec_leaf(
                "R",
                "Fault tolerant routing algorithms",
                &[("R1", "Response to changes in the network and in the RF environment")],
            ),
        }],
        vec![EditAction::AddLeaf {
            parent: "F".to_string(),
            leaf: spec_leaf("T", "Neighborhood tables", &[("T1", "Kept by every device")]),
        }],
        vec![EditAction::AddAlternative {
            target: "B".to_string(),
            alternative: DesignAlternative::new("B1", desc_b1),
        }],
        vec![EditAction::ReplaceAlternative {
            target: "E".to_string(),
            before: "E2".to_string(),
            after: DesignAlternative::new(
                "E3",
                "Large messages, up to the buffer capacity of the sending and receiving devices, using 6LoWPAN Fragmentation and Reassembly",
            ),
        }],
        vec![EditAction::AddSubsystem {
            leaf: spec_leaf(
                "W",
                "Web services support",
                &[("W1", "condensed HTTP with tokenized XML data")],
            ),
        }],
        vec![EditAction::ReplaceLeaf {
            parent: "C".to_string(),
            before: vec!["P".to_string()],
            leaf: spec_leaf(
                "V",
                "6LoWPAN multicast/broadcast support",
                &[("V1", "flooding"), ("V2", "unicasting to a PAN coordinator")],
            ),
        }],
        vec![EditAction::ReplaceLeaf {
            parent: "F".to_string(),
            before: vec!["R".to_string(), "T".to_string()],
            leaf: spec_leaf(
                "U",
                "6LoWPAN Approaches",
                &[("U1", "Route-over"), ("U2", "Mesh-under")],
            ),
        }],
    ];

    let operations = TABLE
        .iter()
        .zip(summaries.iter())
        .zip(edit_scripts)
        .enumerate()
        .map(
            |(index, (((estimates, priority, resource), summary), edits))| ImprovementOperation {
                id: (index + 1) as u32,
                summary: summary.to_string(),
                edits,
                estimates: estimates.to_vec(),
                priority: *priority,
                resource: *resource,
                relations: Vec::new(),
            },
        )
        .collect();

    Catalog::new(
        CriteriaSchema::builtin(),
        operations,
        Some(ProfitTransform::builtin()),
    )
    .expect("the built-in catalog satisfies its own invariants")
}

/// Formats an operation id for display: `Φ<id>`.
pub fn display_op(id: u32) -> String {
    format!("Φ{id}")
}

/// Formats a set of operation ids for display: `{Φ1, Φ2, …}` in ascending
/// id order.
pub fn display_op_set<'a>(ids: impl IntoIterator<Item = &'a u32>) -> String {
    let mut ids: Vec<u32> = ids.into_iter().copied().collect();
    ids.sort_unstable();
    let parts: Vec<String> = ids.iter().map(|id| display_op(*id)).collect();
    format!("{{{}}}", parts.join(", "))
}
