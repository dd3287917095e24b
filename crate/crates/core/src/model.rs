//! Morphological-tree data model for system generations.
//!
//! A system generation is modelled as an and-or tree: composite nodes
//! decompose a system into parts, leaf nodes carry the alternative
//! implementations (design alternatives) of one part. Node identity across
//! generations is the *base label*: prime suffixes (`A'`, `C''`) mark the
//! same subsystem evolving, so `strip_primes` is applied before any identity
//! comparison. The bundled reference corpus — four generations of the ZigBee
//! protocol lineage — is available through [`builtin_generations`].
//!
//! The on-disk format is UTF-8 JSON: an object with `id`, `name`, `root`;
//! each node object has `label`, `title`, and exactly one of `children`
//! (array of nodes) or `alternatives` (array of `{id, description}`).
//! Canonical serialization uses two-space indentation, keys in the order
//! above, arrays in stored order; [`parse_system`] followed by
//! [`serialize_system`] is byte-stable on canonical documents.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Errors produced while parsing, validating, or rendering a system model.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    /// The document is not well-formed or does not match the schema.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Document {
        line: usize,
        column: usize,
        message: String,
    },
    /// The root node must be a composite node with at least one child.
    #[error("invariant violation: root node {label:?} is not a non-empty composite")]
    RootNotComposite { label: String },
    /// A composite node must have at least one child.
    #[error("invariant violation: composite node {label:?} has no children")]
    EmptyComposite { label: String },
    /// A leaf node must carry at least one design alternative.
    #[error("invariant violation: leaf node {label:?} has no design alternatives")]
    EmptyLeaf { label: String },
    /// Two nodes share the same base label after prime-stripping.
    #[error("invariant violation: duplicate node label {label:?} (base labels must be unique)")]
    DuplicateLabel { label: String },
    /// A design alternative id does not start with the owning leaf's base label.
    #[error("invariant violation: alternative {alternative:?} does not match leaf {leaf:?}")]
    AlternativePrefixMismatch { leaf: String, alternative: String },
    /// A design alternative id does not end in an index that is at least 1.
    #[error(
        "invariant violation: alternative {alternative:?} needs a numeric index of at least 1"
    )]
    BadAlternativeIndex { alternative: String },
    /// The same design alternative id appears twice on one leaf.
    #[error("invariant violation: duplicate alternative {alternative:?} on leaf {leaf:?}")]
    DuplicateAlternative { leaf: String, alternative: String },
    /// A render format name that the model module does not know.
    #[error("unsupported render format {format:?} (expected \"text\" or \"graph-description\")")]
    UnsupportedFormat { format: String },
}

/// One concrete option for a leaf component, e.g. `B2` = stochastic
/// address assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignAlternative {
    /// Id of the form `<leaf base label><index>` with index ≥ 1.
    pub id: String,
    /// Free-text description of the option.
    pub description: String,
}

impl DesignAlternative {
    pub fn new(id: impl Into<String>, description: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
        }
    }
}

/// Payload of a node: either sub-nodes or design alternatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeContent {
    /// Composite node: ordered list of child nodes.
    Composite(Vec<Node>),
    /// Leaf node: ordered list of design alternatives.
    Leaf(Vec<DesignAlternative>),
}

/// One node of a morphological tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    /// Display label, possibly carrying prime suffixes (`A'`, `C''`).
    pub label: String,
    /// Free-text title of the subsystem or component.
    pub title: String,
    /// Children or alternatives.
    pub content: NodeContent,
}

impl Node {
    /// Builds a composite node.
    pub fn composite(
        label: impl Into<String>,
        title: impl Into<String>,
        children: Vec<Node>,
    ) -> Self {
        Self {
            label: label.into(),
            title: title.into(),
            content: NodeContent::Composite(children),
        }
    }

    /// Builds a leaf node.
    pub fn leaf(
        label: impl Into<String>,
        title: impl Into<String>,
        alternatives: Vec<DesignAlternative>,
    ) -> Self {
        Self {
            label: label.into(),
            title: title.into(),
            content: NodeContent::Leaf(alternatives),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.content, NodeContent::Leaf(_))
    }

    /// Children of a composite node; empty slice for leaves.
    pub fn children(&self) -> &[Node] {
        match &self.content {
            NodeContent::Composite(children) => children,
            NodeContent::Leaf(_) => &[],
        }
    }

    /// Alternatives of a leaf node; empty slice for composites.
    pub fn alternatives(&self) -> &[DesignAlternative] {
        match &self.content {
            NodeContent::Composite(_) => &[],
            NodeContent::Leaf(alternatives) => alternatives,
        }
    }

    /// The node's identity across generations: its label without primes.
    pub fn base_label(&self) -> &str {
        strip_primes(&self.label)
    }
}

/// A whole system generation: a named morphological tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemModel {
    /// Short identifier, e.g. `S1`.
    pub id: String,
    /// Display name, e.g. `ZigBee 2004`.
    pub name: String,
    /// Root of the tree; must be a non-empty composite on parsed models.
    pub root: Node,
}

/// Removes trailing prime marks from a label: `strip_primes("C''") == "C"`.
/// Idempotent; labels without primes pass through unchanged.
pub fn strip_primes(label: &str) -> &str {
    label.trim_end_matches('\'')
}

// ---------------------------------------------------------------------------
// Parsing and canonical serialization
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    id: String,
    name: String,
    root: RawNode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    label: String,
    title: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    children: Option<Vec<RawNode>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alternatives: Option<Vec<DesignAlternative>>,
}

fn raw_to_node(raw: RawNode) -> Result<Node, ModelError> {
    let RawNode {
        label,
        title,
        children,
        alternatives,
    } = raw;
    let content = match (children, alternatives) {
        (Some(children), None) => NodeContent::Composite(
            children
                .into_iter()
                .map(raw_to_node)
                .collect::<Result<_, _>>()?,
        ),
        (None, Some(alternatives)) => NodeContent::Leaf(alternatives),
        // A node carrying both lists or neither has no well-defined kind;
        // report it like any other malformed document.
        _ => {
            return Err(ModelError::Document {
                line: 0,
                column: 0,
                message: format!(
                    "node {label:?} must have exactly one of \"children\" or \"alternatives\""
                ),
            })
        }
    };
    Ok(Node {
        label,
        title,
        content,
    })
}

fn node_to_raw(node: &Node) -> RawNode {
    RawNode {
        label: node.label.clone(),
        title: node.title.clone(),
        children: match &node.content {
            NodeContent::Composite(children) => Some(children.iter().map(node_to_raw).collect()),
            NodeContent::Leaf(_) => None,
        },
        alternatives: match &node.content {
            NodeContent::Composite(_) => None,
            NodeContent::Leaf(alternatives) => Some(alternatives.clone()),
        },
    }
}

/// Parses a system document (JSON syntax, see the module docs) and validates
/// every model invariant. Syntax problems are reported with their position.
pub fn parse_system(document: &str) -> Result<SystemModel, ModelError> {
    let raw: RawSystem = serde_json::from_str(document).map_err(|e| ModelError::Document {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let model = SystemModel {
        id: raw.id,
        name: raw.name,
        root: raw_to_node(raw.root)?,
    };
    model.validate()?;
    Ok(model)
}

/// Serializes a model to its canonical document: two-space indent, keys in
/// schema order, arrays in stored order. No trailing newline.
pub fn serialize_system(model: &SystemModel) -> String {
    let raw = RawSystem {
        id: model.id.clone(),
        name: model.name.clone(),
        root: node_to_raw(&model.root),
    };
    let mut out = Vec::new();
    let formatter = serde_json::ser::PrettyFormatter::with_indent(b"  ");
    let mut serializer = serde_json::Serializer::with_formatter(&mut out, formatter);
    raw.serialize(&mut serializer)
        .expect("serializing a validated model cannot fail");
    String::from_utf8(out).expect("canonical documents are UTF-8")
}

impl SystemModel {
    /// Checks every structural invariant:
    /// the root is a non-empty composite, composites are non-empty, leaves
    /// carry at least one alternative, base labels are unique, alternative
    /// ids match their leaf's base label and end in an index ≥ 1.
    pub fn validate(&self) -> Result<(), ModelError> {
        match &self.root.content {
            NodeContent::Composite(children) if !children.is_empty() => {}
            _ => {
                return Err(ModelError::RootNotComposite {
                    label: self.root.label.clone(),
                })
            }
        }
        let mut seen = BTreeSet::new();
        validate_node(&self.root, &mut seen)
    }

    /// Order-insensitive equality: two models are equivalent when they carry
    /// the same labels, titles, and design alternatives, regardless of the
    /// stored order of children and alternatives.
    pub fn equivalent(&self, other: &SystemModel) -> bool {
        self.id == other.id
            && self.name == other.name
            && nodes_equivalent(&self.root, &other.root, true)
    }

    /// Structural equality on labels and design-alternative ids only:
    /// titles, descriptions, ordering, and the root node's own label are all
    /// ignored. This is the comparison behind "label-for-label, DA-for-DA"
    /// checks between trees of different provenance.
    pub fn same_shape(&self, other: &SystemModel) -> bool {
        nodes_equivalent(&self.root, &other.root, false)
    }

    /// Looks up a node by base label. The root is found under its own base
    /// label; all other nodes under theirs.
    pub fn find(&self, base_label: &str) -> Option<&Node> {
        fn walk<'a>(node: &'a Node, base: &str) -> Option<&'a Node> {
            if node.base_label() == base {
                return Some(node);
            }
            node.children().iter().find_map(|c| walk(c, base))
        }
        walk(&self.root, base_label)
    }

    /// Number of nodes in the tree, root included.
    pub fn node_count(&self) -> usize {
        fn walk(node: &Node) -> usize {
            1 + node.children().iter().map(walk).sum::<usize>()
        }
        walk(&self.root)
    }
}

fn validate_node(node: &Node, seen: &mut BTreeSet<String>) -> Result<(), ModelError> {
    let base = node.base_label().to_string();
    if !seen.insert(base) {
        return Err(ModelError::DuplicateLabel {
            label: node.label.clone(),
        });
    }
    match &node.content {
        NodeContent::Composite(children) => {
            if children.is_empty() {
                return Err(ModelError::EmptyComposite {
                    label: node.label.clone(),
                });
            }
            for child in children {
                validate_node(child, seen)?;
            }
        }
        NodeContent::Leaf(alternatives) => {
            if alternatives.is_empty() {
                return Err(ModelError::EmptyLeaf {
                    label: node.label.clone(),
                });
            }
            let mut ids = BTreeSet::new();
            for alternative in alternatives {
                validate_alternative(node, alternative)?;
                if !ids.insert(alternative.id.as_str()) {
                    return Err(ModelError::DuplicateAlternative {
                        leaf: node.label.clone(),
                        alternative: alternative.id.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

fn validate_alternative(leaf: &Node, alternative: &DesignAlternative) -> Result<(), ModelError> {
    let base = leaf.base_label();
    let Some(suffix) = alternative.id.strip_prefix(base) else {
        return Err(ModelError::AlternativePrefixMismatch {
            leaf: leaf.label.clone(),
            alternative: alternative.id.clone(),
        });
    };
    match suffix.parse::<u32>() {
        Ok(index) if index >= 1 && !suffix.starts_with('+') => Ok(()),
        _ => Err(ModelError::BadAlternativeIndex {
            alternative: alternative.id.clone(),
        }),
    }
}

fn nodes_equivalent(a: &Node, b: &Node, compare_root_identity: bool) -> bool {
    fn sorted_children(node: &Node) -> Vec<&Node> {
        let mut children: Vec<&Node> = node.children().iter().collect();
        children.sort_by(|x, y| x.base_label().cmp(y.base_label()));
        children
    }
    fn eq(a: &Node, b: &Node, titles: bool, check_label: bool) -> bool {
        if check_label && a.label != b.label {
            return false;
        }
        if titles && check_label && a.title != b.title {
            return false;
        }
        match (&a.content, &b.content) {
            (NodeContent::Composite(_), NodeContent::Composite(_)) => {
                let ca = sorted_children(a);
                let cb = sorted_children(b);
                ca.len() == cb.len() && ca.iter().zip(&cb).all(|(x, y)| eq(x, y, titles, true))
            }
            (NodeContent::Leaf(xa), NodeContent::Leaf(xb)) => {
                let mut xa: Vec<&DesignAlternative> = xa.iter().collect();
                let mut xb: Vec<&DesignAlternative> = xb.iter().collect();
                xa.sort_by(|p, q| p.id.cmp(&q.id));
                xb.sort_by(|p, q| p.id.cmp(&q.id));
                xa.len() == xb.len()
                    && xa
                        .iter()
                        .zip(&xb)
                        .all(|(p, q)| p.id == q.id && (!titles || p.description == q.description))
            }
            _ => false,
        }
    }
    eq(a, b, compare_root_identity, compare_root_identity)
}

// ---------------------------------------------------------------------------
// Flattened views and rendering
// ---------------------------------------------------------------------------

/// Flattens a model into `base leaf label → set of design-alternative ids`.
/// The union of all values equals the set of every DA id in the tree.
pub fn leaf_map(system: &SystemModel) -> BTreeMap<String, BTreeSet<String>> {
    let mut map = BTreeMap::new();
    fn walk(node: &Node, map: &mut BTreeMap<String, BTreeSet<String>>) {
        match &node.content {
            NodeContent::Composite(children) => children.iter().for_each(|c| walk(c, map)),
            NodeContent::Leaf(alternatives) => {
                map.insert(
                    node.base_label().to_string(),
                    alternatives.iter().map(|a| a.id.clone()).collect(),
                );
            }
        }
    }
    walk(&system.root, &mut map);
    map
}

/// Renders a model as indented text (`"text"`) or as a DOT-syntax digraph
/// (`"graph-description"`). Output is deterministic: nodes appear in stored
/// order. Unknown format names are an error.
pub fn render_tree(system: &SystemModel, format: &str) -> Result<String, ModelError> {
    match format {
        "text" => Ok(render_text(system)),
        "graph-description" => Ok(render_dot(system)),
        other => Err(ModelError::UnsupportedFormat {
            format: other.to_string(),
        }),
    }
}

fn render_text(system: &SystemModel) -> String {
    let mut out = String::new();
    fn walk(node: &Node, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&node.label);
        if !node.title.is_empty() {
            out.push_str("  ");
            out.push_str(&node.title);
        }
        if let NodeContent::Leaf(alternatives) = &node.content {
            let ids: Vec<&str> = alternatives.iter().map(|a| a.id.as_str()).collect();
            out.push_str(&format!("  [{}]", ids.join(", ")));
        }
        out.push('\n');
        for child in node.children() {
            walk(child, depth + 1, out);
        }
    }
    walk(&system.root, 0, &mut out);
    out
}

fn render_dot(system: &SystemModel) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", dot_quote(&system.id)));
    out.push_str("  rankdir=TB;\n");
    fn declare(node: &Node, out: &mut String) {
        let text = if node.is_leaf() {
            let ids: Vec<&str> = node.alternatives().iter().map(|a| a.id.as_str()).collect();
            format!("{} [{}]", node.label, ids.join(", "))
        } else {
            node.label.clone()
        };
        out.push_str(&format!(
            "  {} [label={}];\n",
            dot_quote(&node.label),
            dot_quote(&text)
        ));
        for child in node.children() {
            declare(child, out);
        }
    }
    fn edges(node: &Node, out: &mut String) {
        for child in node.children() {
            out.push_str(&format!(
                "  {} -> {};\n",
                dot_quote(&node.label),
                dot_quote(&child.label)
            ));
            edges(child, out);
        }
    }
    declare(&system.root, &mut out);
    edges(&system.root, &mut out);
    out.push_str("}\n");
    out
}

fn dot_quote(text: &str) -> String {
    format!("\"{}\"", text.replace('"', "\\\""))
}

impl fmt::Display for SystemModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_text(self))
    }
}

// ---------------------------------------------------------------------------
// Bundled reference corpus: four generations of the ZigBee lineage
// ---------------------------------------------------------------------------

fn da(id: &str, description: &str) -> DesignAlternative {
    DesignAlternative::new(id, description)
}

const DESC_A1: &str =
    "PAN coordinator selects best available RF channel/Network ID at startup time";
const DESC_B1: &str =
    "Device addresses automatically assigned using a hierarchical, distributed scheme";
const DESC_B2: &str = "Device addresses automatically assigned using a stochastic scheme";
const DESC_I1: &str =
    "Devices can be assigned to groups, and whole groups can be addressed with a single frame";
const DESC_D1: &str = "Network scales up to the limits of the addressing algorithm. \
Typically, networks with tens to hundreds of devices are supported";
const DESC_D2: &str = "An addressing algorithm that relaxes the limits on network size. \
Networks with hundreds to thousands of devices are supported";
const DESC_E1: &str = "<100 bytes. Exact size depends on services employed, such as security";
const DESC_E2: &str = "Large messages, up to the buffer capacity of the sending and receiving \
devices, are supported using Fragmentation and Reassembly";
const DESC_E3: &str = "Large messages, up to the buffer capacity of the sending and receiving \
devices, using 6LoWPAN Fragmentation and Reassembly";
const DESC_F1: &str = "Fault tolerant routing algorithms respond to changes in the network \
and in the RF environment";
const DESC_K1: &str = "Standardized startup procedure and attributes support the use of \
commissioning tools in a multi-vendor environment";
const DESC_L1_LONG: &str = "The ZigBee Cluster Library, as an adjunct to the stack, \
standardizes application behavior across profiles and provides an invaluable resource \
for profile developers";
const DESC_L1_SHORT: &str = "Standardizes application behavior across profiles";

const TITLE_A: &str = "Interference avoidance";
const TITLE_B: &str = "Automated/distributed address management";
const TITLE_C: &str = "Centralized data collection";
const TITLE_D: &str = "Network scalability";
const TITLE_E: &str = "Message size";
const TITLE_F: &str = "Robust mesh networking";
const TITLE_G: &str = "Low-overhead data collection by ZigBee Coordinator";
const TITLE_G4: &str = "Low-overhead data collection by 6LoWPAN Coordinator";
const TITLE_H: &str = "Low-overhead data collection by other devices";
const TITLE_I: &str = "Group addressing";
const TITLE_K: &str = "Standardized commissioning";
const TITLE_L: &str = "Cluster Library support";
const TITLE_M: &str = "Startup Procedure of Channel Acquisition";
const TITLE_N: &str = "Channel Hopping";
const TITLE_Q: &str = "Many-to-one routing";
const TITLE_P: &str = "Source routing";
const TITLE_R: &str = "Fault tolerant routing algorithms";
const TITLE_T: &str = "Neighborhood tables";
const TITLE_U: &str = "6LoWPAN Approaches";
const TITLE_V: &str = "6LoWPAN multicast/broadcast support";
const TITLE_W: &str = "Web services support";

fn generation_1() -> SystemModel {
    SystemModel {
        id: "S1".to_string(),
        name: "ZigBee 2004".to_string(),
        root: Node::composite(
            "S1",
            "ZigBee 2004",
            vec![
                Node::leaf("A", TITLE_A, vec![da("A1", DESC_A1)]),
                Node::leaf("B", TITLE_B, vec![da("B1", DESC_B1)]),
                Node::composite(
                    "C",
                    TITLE_C,
                    vec![
                        Node::leaf("G", TITLE_G, vec![da("G1", "Fully supported")]),
                        Node::leaf("H", TITLE_H, vec![da("H1", "Under special circumstances")]),
                    ],
                ),
                Node::leaf("D", TITLE_D, vec![da("D1", DESC_D1)]),
                Node::leaf("E", TITLE_E, vec![da("E1", DESC_E1)]),
                Node::leaf("F", TITLE_F, vec![da("F1", DESC_F1)]),
            ],
        ),
    }
}

fn generation_2() -> SystemModel {
    SystemModel {
        id: "S2".to_string(),
        name: "ZigBee 2006".to_string(),
        root: Node::composite(
            "S2",
            "ZigBee 2006",
            vec![
                Node::leaf("A", TITLE_A, vec![da("A1", DESC_A1)]),
                Node::leaf("B", TITLE_B, vec![da("B1", DESC_B1)]),
                Node::leaf("I", TITLE_I, vec![da("I1", DESC_I1)]),
                Node::composite(
                    "C",
                    TITLE_C,
                    vec![
                        Node::leaf("G", TITLE_G, vec![da("G1", "Fully supported")]),
                        Node::leaf("H", TITLE_H, vec![da("H1", "Under special circumstances")]),
                    ],
                ),
                Node::leaf("D", TITLE_D, vec![da("D1", DESC_D1)]),
                Node::leaf("E", TITLE_E, vec![da("E1", DESC_E1)]),
                Node::leaf("K", TITLE_K, vec![da("K1", DESC_K1)]),
                Node::leaf("F", TITLE_F, vec![da("F1", DESC_F1)]),
                Node::leaf("L", TITLE_L, vec![da("L1", DESC_L1_LONG)]),
            ],
        ),
    }
}

fn generation_3() -> SystemModel {
    SystemModel {
        id: "S3".to_string(),
        name: "ZigBee PRO".to_string(),
        root: Node::composite(
            "S3",
            "ZigBee PRO",
            vec![
                Node::composite(
                    "A'",
                    TITLE_A,
                    vec![
                        Node::leaf("M", TITLE_M, vec![da("M1", DESC_A1)]),
                        Node::leaf(
                            "N",
                            TITLE_N,
                            vec![da(
                                "N1",
                                "Ongoing interference detection and adoption of a new \
operating RF channel and/or Network ID",
                            )],
                        ),
                    ],
                ),
                Node::leaf("B", TITLE_B, vec![da("B2", DESC_B2)]),
                Node::leaf("I", TITLE_I, vec![da("I1", DESC_I1)]),
                Node::composite(
                    "C'",
                    TITLE_C,
                    vec![
                        Node::leaf("G", TITLE_G, vec![da("G1", "Fully supported")]),
                        Node::leaf("H", TITLE_H, vec![da("H1", "Under special circumstances")]),
                        Node::leaf(
                            "Q",
                            TITLE_Q,
                            vec![da(
                                "Q1",
                                "Whole network discovers the aggregator in one pass",
                            )],
                        ),
                        Node::leaf(
                            "P",
                            TITLE_P,
                            vec![da(
                                "P1",
                                "Aggregator responds to all senders in an economical manner",
                            )],
                        ),
                    ],
                ),
                Node::leaf("D", TITLE_D, vec![da("D2", DESC_D2)]),
                Node::leaf("E", TITLE_E, vec![da("E2", DESC_E2)]),
                Node::leaf("K", TITLE_K, vec![da("K1", DESC_K1)]),
                Node::composite(
                    "F'",
                    TITLE_F,
                    vec![
                        Node::leaf(
                            "R",
                            TITLE_R,
                            vec![da(
                                "R1",
                                "Response to changes in the network and in the RF environment",
                            )],
                        ),
                        Node::leaf("T", TITLE_T, vec![da("T1", "Kept by every device")]),
                    ],
                ),
                Node::leaf(
                    "L",
                    "Cluster library support",
                    vec![da("L1", DESC_L1_SHORT)],
                ),
            ],
        ),
    }
}

fn generation_4() -> SystemModel {
    SystemModel {
        id: "S4".to_string(),
        name: "ZigBee/IP (6LoWPAN) 2010".to_string(),
        root: Node::composite(
            "S4",
            "ZigBee/IP (6LoWPAN) 2010",
            vec![
                Node::composite(
                    "A'",
                    TITLE_A,
                    vec![
                        Node::leaf("M", TITLE_M, vec![da("M1", DESC_A1)]),
                        Node::leaf(
                            "N",
                            TITLE_N,
                            vec![da(
                                "N1",
                                "Ongoing interference detection and adoption of a new \
operating RF channel and/or Network ID",
                            )],
                        ),
                    ],
                ),
                Node::leaf("B", TITLE_B, vec![da("B1", DESC_B1), da("B2", DESC_B2)]),
                Node::leaf("I", TITLE_I, vec![da("I1", DESC_I1)]),
                Node::composite(
                    "C''",
                    TITLE_C,
                    vec![
                        Node::leaf("G", TITLE_G4, vec![da("G1", "Fully supported")]),
                        Node::leaf("H", TITLE_H, vec![da("H1", "Under special circumstances")]),
                        Node::leaf(
                            "Q",
                            TITLE_Q,
                            vec![da(
                                "Q1",
                                "Whole network discovers the aggregator in one pass",
                            )],
                        ),
                        Node::leaf(
                            "V",
                            TITLE_V,
                            vec![
                                da("V1", "flooding"),
                                da("V2", "unicasting to a PAN coordinator"),
                            ],
                        ),
                    ],
                ),
                Node::leaf("D", TITLE_D, vec![da("D2", DESC_D2)]),
                Node::leaf("E", TITLE_E, vec![da("E3", DESC_E3)]),
                Node::leaf("K", TITLE_K, vec![da("K1", DESC_K1)]),
                Node::composite(
                    "F''",
                    TITLE_F,
                    vec![Node::leaf(
                        "U",
                        TITLE_U,
                        vec![da("U1", "Route-over"), da("U2", "Mesh-under")],
                    )],
                ),
                Node::leaf("L", TITLE_L, vec![da("L1", DESC_L1_SHORT)]),
                Node::leaf(
                    "W",
                    TITLE_W,
                    vec![da("W1", "condensed HTTP with tokenized XML data")],
                ),
            ],
        ),
    }
}

/// The bundled reference corpus: generations 1–3 of the ZigBee lineage plus
/// the direct expert-based forecast of generation 4, in that order.
///
/// The forecast generation carries the ASCII id `S4`; displays elsewhere
/// write it as `S̃4` to mark it as a forecast rather than a shipped
/// generation.
pub fn builtin_generations() -> Vec<SystemModel> {
    vec![
        generation_1(),
        generation_2(),
        generation_3(),
        generation_4(),
    ]
}
