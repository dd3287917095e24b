//! Typed change records between two system generations.
//!
//! [`diff_generations`] walks two morphological trees matched by base label
//! and emits one [`ChangeRecord`] per elementary difference: alternatives
//! swapped or added on a leaf, leaves added under an existing subsystem,
//! whole subsystems added under the root, one leaf replacing another, and
//! bare removals. Every record kind except [`ChangeKind::LeafRemoval`] maps
//! to a fixed operation type code (O1/O3/O5/O7); removals carry no code.
//!
//! [`apply_change_records`] replays records onto the older generation and
//! re-derives prime marks: any non-root composite whose direct child set
//! changed gains one trailing `'` on its label (`C'` becomes `C''`), while
//! element-level changes never add primes and the root never primes.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

use crate::model::{DesignAlternative, ModelError, Node, NodeContent, SystemModel};

/// Errors from classifying or applying change records.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiffError {
    #[error("leaf removals carry no operation type code")]
    NoTypeCode,
    #[error("path {path} does not resolve to a node")]
    UnresolvablePath { path: String },
    #[error("node {label} is not a leaf")]
    NotALeaf { label: String },
    #[error("leaf {leaf} has no alternative {id}")]
    MissingAlternative { leaf: String, id: String },
    #[error("leaf {leaf} already has alternative {id}")]
    DuplicateAlternative { leaf: String, id: String },
    #[error("record at {path} is missing its {field} field")]
    MissingField { path: String, field: &'static str },
    #[error("applying the records produced an invalid model: {0}")]
    InvalidResult(#[from] ModelError),
}

/// Operation type code attached to typed change records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OperationTypeCode {
    O1,
    O3,
    O5,
    O7,
}

impl fmt::Display for OperationTypeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            OperationTypeCode::O1 => "O1",
            OperationTypeCode::O3 => "O3",
            OperationTypeCode::O5 => "O5",
            OperationTypeCode::O7 => "O7",
        };
        f.write_str(text)
    }
}

/// Kind of one elementary change. Declaration order doubles as the sort
/// order among records sharing a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChangeKind {
    /// One design alternative replaced by another on the same leaf.
    ElementChange,
    /// A design alternative added to an existing leaf.
    ElementAddition,
    /// A new leaf added directly under the root.
    SubsystemAddition,
    /// A new leaf added under an existing non-root subsystem.
    SubsystemExtension,
    /// A new leaf replacing sibling leaves under a non-root subsystem.
    SubsystemChange,
    /// A design alternative (and possibly its emptied leaf) removed; the
    /// only untyped kind.
    LeafRemoval,
}

impl fmt::Display for ChangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ChangeKind::ElementChange => "ElementChange",
            ChangeKind::ElementAddition => "ElementAddition",
            ChangeKind::SubsystemAddition => "SubsystemAddition",
            ChangeKind::SubsystemExtension => "SubsystemExtension",
            ChangeKind::SubsystemChange => "SubsystemChange",
            ChangeKind::LeafRemoval => "LeafRemoval",
        };
        f.write_str(text)
    }
}

/// One elementary difference between two generations.
///
/// `path` is the base-label path from (and excluding) the root to the node
/// the record talks about. For leaf-level kinds that is the leaf itself;
/// for subsystem kinds it is the added leaf. `before`/`after` carry design
/// alternative ids (space-separated when plural) or, for
/// [`ChangeKind::SubsystemChange`], the replaced leaf's label in `before`.
/// Field order is the canonical sort order: `(path, kind, before, after)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChangeRecord {
    pub path: Vec<String>,
    pub kind: ChangeKind,
    pub before: Option<String>,
    pub after: Option<String>,
    pub type_code: Option<OperationTypeCode>,
}

impl ChangeRecord {
    fn new(
        path: Vec<String>,
        kind: ChangeKind,
        before: Option<String>,
        after: Option<String>,
    ) -> Self {
        let type_code = type_code_of(kind);
        ChangeRecord {
            path,
            kind,
            before,
            after,
            type_code,
        }
    }

    /// The record's path joined with `/`, e.g. `C/V`.
    pub fn path_string(&self) -> String {
        self.path.join("/")
    }
}

impl fmt::Display for ChangeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.path_string(), self.kind)?;
        if let Some(before) = &self.before {
            write!(f, " {before}")?;
        }
        if let Some(after) = &self.after {
            write!(f, " -> {after}")?;
        }
        if let Some(code) = &self.type_code {
            write!(f, " ({code})")?;
        }
        Ok(())
    }
}

fn type_code_of(kind: ChangeKind) -> Option<OperationTypeCode> {
    match kind {
        ChangeKind::ElementChange => Some(OperationTypeCode::O1),
        ChangeKind::ElementAddition => Some(OperationTypeCode::O3),
        ChangeKind::SubsystemAddition => Some(OperationTypeCode::O7),
        ChangeKind::SubsystemExtension | ChangeKind::SubsystemChange => Some(OperationTypeCode::O5),
        ChangeKind::LeafRemoval => None,
    }
}

/// The fixed kind-to-code mapping; leaf removals have no code and are an
/// error to classify.
pub fn classify_change(record: &ChangeRecord) -> Result<OperationTypeCode, DiffError> {
    type_code_of(record.kind).ok_or(DiffError::NoTypeCode)
}

// ---------------------------------------------------------------------------
// Diff
// ---------------------------------------------------------------------------

/// Computes the typed change records turning `from` into `to`.
///
/// Nodes are matched by base label. The result is sorted by
/// `(path, kind, before, after)`; replaying it through
/// [`apply_change_records`] reproduces `to` up to node ordering, titles,
/// and alternative descriptions. Any two valid models are diffable.
pub fn diff_generations(from: &SystemModel, to: &SystemModel) -> Vec<ChangeRecord> {
    let mut records = Vec::new();
    let surviving_ids = collect_da_ids(&to.root);
    diff_composites(
        &from.root,
        &to.root,
        &[],
        true,
        &surviving_ids,
        &mut records,
    );
    records.sort();
    records
}

fn collect_da_ids(node: &Node) -> BTreeSet<String> {
    let mut ids = BTreeSet::new();
    fn walk(node: &Node, ids: &mut BTreeSet<String>) {
        for alternative in node.alternatives() {
            ids.insert(alternative.id.clone());
        }
        for child in node.children() {
            walk(child, ids);
        }
    }
    walk(node, &mut ids);
    ids
}

fn child_path(path: &[String], node: &Node) -> Vec<String> {
    let mut next = path.to_vec();
    next.push(node.base_label().to_string());
    next
}

/// Emits one record per leaf of an added subtree, all with the same kind;
/// `before` attaches only when the subtree is a single leaf.
fn emit_added_subtree(
    node: &Node,
    path: &[String],
    kind: ChangeKind,
    before: Option<String>,
    records: &mut Vec<ChangeRecord>,
) {
    let here = child_path(path, node);
    match &node.content {
        NodeContent::Leaf(alternatives) => {
            let mut ids: Vec<&str> = alternatives.iter().map(|a| a.id.as_str()).collect();
            ids.sort_unstable();
            records.push(ChangeRecord::new(here, kind, before, Some(ids.join(" "))));
        }
        NodeContent::Composite(children) => {
            for child in children {
                emit_added_subtree(child, &here, kind, None, records);
            }
        }
    }
}

/// Emits one removal record per alternative of the removed subtree whose id
/// does not survive anywhere in the target model.
fn emit_removed_subtree(
    node: &Node,
    path: &[String],
    surviving_ids: &BTreeSet<String>,
    records: &mut Vec<ChangeRecord>,
) {
    let here = child_path(path, node);
    match &node.content {
        NodeContent::Leaf(alternatives) => {
            for alternative in alternatives {
                if !surviving_ids.contains(&alternative.id) {
                    records.push(ChangeRecord::new(
                        here.clone(),
                        ChangeKind::LeafRemoval,
                        Some(alternative.id.clone()),
                        None,
                    ));
                }
            }
        }
        NodeContent::Composite(children) => {
            for child in children {
                emit_removed_subtree(child, &here, surviving_ids, records);
            }
        }
    }
}

fn diff_composites(
    old: &Node,
    new: &Node,
    path: &[String],
    is_root: bool,
    surviving_ids: &BTreeSet<String>,
    records: &mut Vec<ChangeRecord>,
) {
    let old_children: BTreeMap<&str, &Node> =
        old.children().iter().map(|c| (c.base_label(), c)).collect();
    let new_children: BTreeMap<&str, &Node> =
        new.children().iter().map(|c| (c.base_label(), c)).collect();

    for (base, old_child) in &old_children {
        if let Some(new_child) = new_children.get(base) {
            diff_nodes(old_child, new_child, path, surviving_ids, records);
        }
    }
    let added: Vec<&Node> = new_children
        .iter()
        .filter(|(base, _)| !old_children.contains_key(*base))
        .map(|(_, node)| *node)
        .collect();
    let removed: Vec<&Node> = old_children
        .iter()
        .filter(|(base, _)| !new_children.contains_key(*base))
        .map(|(_, node)| *node)
        .collect();

    if is_root {
        // Under the root: plain additions and removals only.
        for node in &added {
            emit_added_subtree(node, path, ChangeKind::SubsystemAddition, None, records);
        }
        for node in &removed {
            emit_removed_subtree(node, path, surviving_ids, records);
        }
        return;
    }
    if removed.is_empty() {
        for node in &added {
            emit_added_subtree(node, path, ChangeKind::SubsystemExtension, None, records);
        }
        return;
    }
    // Additions alongside removals read as replacements. A one-for-one leaf
    // swap records which leaf was replaced; larger regroupings leave
    // `before` empty and let the removal records carry the details.
    let replaced_label = match (&added[..], &removed[..]) {
        ([a], [r]) if a.is_leaf() && r.is_leaf() => Some(r.base_label().to_string()),
        _ => None,
    };
    for node in &added {
        emit_added_subtree(
            node,
            path,
            ChangeKind::SubsystemChange,
            replaced_label.clone(),
            records,
        );
    }
    for node in &removed {
        emit_removed_subtree(node, path, surviving_ids, records);
    }
}

fn diff_nodes(
    old: &Node,
    new: &Node,
    parent_path: &[String],
    surviving_ids: &BTreeSet<String>,
    records: &mut Vec<ChangeRecord>,
) {
    let path = child_path(parent_path, old);
    match (&old.content, &new.content) {
        (NodeContent::Leaf(old_alts), NodeContent::Leaf(new_alts)) => {
            let old_ids: BTreeSet<&str> = old_alts.iter().map(|a| a.id.as_str()).collect();
            let new_ids: BTreeSet<&str> = new_alts.iter().map(|a| a.id.as_str()).collect();
            let removed: Vec<&str> = old_ids.difference(&new_ids).copied().collect();
            let added: Vec<&str> = new_ids.difference(&old_ids).copied().collect();
            let paired = removed.len().min(added.len());
            for i in 0..paired {
                records.push(ChangeRecord::new(
                    path.clone(),
                    ChangeKind::ElementChange,
                    Some(removed[i].to_string()),
                    Some(added[i].to_string()),
                ));
            }
            for id in &added[paired..] {
                records.push(ChangeRecord::new(
                    path.clone(),
                    ChangeKind::ElementAddition,
                    None,
                    Some(id.to_string()),
                ));
            }
            for id in &removed[paired..] {
                if !surviving_ids.contains(*id) {
                    records.push(ChangeRecord::new(
                        path.clone(),
                        ChangeKind::LeafRemoval,
                        Some(id.to_string()),
                        None,
                    ));
                }
            }
        }
        (NodeContent::Leaf(old_alts), NodeContent::Composite(new_children)) => {
            // Promotion: the leaf becomes a subsystem; its direct
            // alternatives are absorbed unless their ids survive elsewhere.
            for alternative in old_alts {
                if !surviving_ids.contains(&alternative.id) {
                    records.push(ChangeRecord::new(
                        path.clone(),
                        ChangeKind::LeafRemoval,
                        Some(alternative.id.clone()),
                        None,
                    ));
                }
            }
            for child in new_children {
                emit_added_subtree(child, &path, ChangeKind::SubsystemExtension, None, records);
            }
        }
        (NodeContent::Composite(old_children), NodeContent::Leaf(new_alts)) => {
            // Demotion: the subsystem collapses back to a leaf.
            let old_ids = collect_da_ids(old);
            for child in old_children {
                emit_removed_subtree(child, &path, surviving_ids, records);
            }
            for alternative in new_alts {
                if !old_ids.contains(&alternative.id) {
                    records.push(ChangeRecord::new(
                        path.clone(),
                        ChangeKind::ElementAddition,
                        None,
                        Some(alternative.id.clone()),
                    ));
                }
            }
        }
        (NodeContent::Composite(_), NodeContent::Composite(_)) => {
            diff_composites(old, new, &path, false, surviving_ids, records);
        }
    }
}

// ---------------------------------------------------------------------------
// Apply
// ---------------------------------------------------------------------------

/// Replays change records onto `base`, returning the implied next
/// generation.
///
/// Structural additions run first (creating leaves, converting promoted
/// leaves to subsystems, and dropping leaves replaced one-for-one), then
/// removals. Alternatives introduced by records get empty descriptions and
/// new leaves empty titles — records carry shape, not prose. Labels are
/// re-derived afterwards: a non-root composite whose direct child set
/// changed gains one prime over its label in `base`.
pub fn apply_change_records(
    base: &SystemModel,
    records: &[ChangeRecord],
) -> Result<SystemModel, DiffError> {
    let mut root = base.root.clone();
    // Design-alternative ids absorbed by structural edits; removal records
    // naming them are already satisfied.
    let mut consumed: BTreeSet<String> = BTreeSet::new();

    for record in records {
        match record.kind {
            ChangeKind::ElementChange => {
                let leaf = leaf_mut(&mut root, &record.path)?;
                let before = require(record, record.before.as_ref(), "before")?;
                let after = require(record, record.after.as_ref(), "after")?;
                let alternatives = leaf_alternatives_mut(leaf)?;
                let position = alternatives
                    .iter()
                    .position(|a| &a.id == before)
                    .ok_or_else(|| DiffError::MissingAlternative {
                        leaf: leaf_label(&record.path),
                        id: before.clone(),
                    })?;
                alternatives[position] = DesignAlternative::new(after.clone(), "");
            }
            ChangeKind::ElementAddition => {
                let leaf = leaf_mut(&mut root, &record.path)?;
                let after = require(record, record.after.as_ref(), "after")?;
                let alternatives = leaf_alternatives_mut(leaf)?;
                if alternatives.iter().any(|a| &a.id == after) {
                    return Err(DiffError::DuplicateAlternative {
                        leaf: leaf_label(&record.path),
                        id: after.clone(),
                    });
                }
                alternatives.push(DesignAlternative::new(after.clone(), ""));
            }
            ChangeKind::SubsystemAddition
            | ChangeKind::SubsystemExtension
            | ChangeKind::SubsystemChange => {
                let after = require(record, record.after.as_ref(), "after")?;
                let (parent_path, leaf_label) = record
                    .path
                    .split_last()
                    .map(|(last, rest)| (rest, last.clone()))
                    .ok_or_else(|| DiffError::UnresolvablePath {
                        path: String::from("(empty)"),
                    })?;
                let parent = composite_mut(&mut root, parent_path, &mut consumed)?;
                if record.kind == ChangeKind::SubsystemChange {
                    if let Some(replaced) = &record.before {
                        remove_child(parent, replaced, &mut consumed);
                    }
                }
                let alternatives = after
                    .split_whitespace()
                    .map(|id| DesignAlternative::new(id, ""))
                    .collect();
                add_child(parent, Node::leaf(leaf_label, "", alternatives));
            }
            ChangeKind::LeafRemoval => {
                let before = require(record, record.before.as_ref(), "before")?;
                if consumed.contains(before) {
                    continue;
                }
                remove_alternative(&mut root, &record.path, before)?;
            }
        }
    }

    derive_primes(&mut root, &base.root);
    let result = SystemModel {
        id: format!("{}+", base.id),
        name: format!("{} with changes applied", base.name),
        root,
    };
    result.validate()?;
    Ok(result)
}

fn require<'a>(
    record: &ChangeRecord,
    value: Option<&'a String>,
    field: &'static str,
) -> Result<&'a String, DiffError> {
    value.ok_or_else(|| DiffError::MissingField {
        path: record.path_string(),
        field,
    })
}

fn leaf_label(path: &[String]) -> String {
    path.last().cloned().unwrap_or_default()
}

fn node_mut<'a>(root: &'a mut Node, path: &[String]) -> Result<&'a mut Node, DiffError> {
    let mut current = root;
    for segment in path {
        let children = match &mut current.content {
            NodeContent::Composite(children) => children,
            NodeContent::Leaf(_) => {
                return Err(DiffError::UnresolvablePath {
                    path: path.join("/"),
                })
            }
        };
        current = children
            .iter_mut()
            .find(|c| c.base_label() == segment)
            .ok_or_else(|| DiffError::UnresolvablePath {
                path: path.join("/"),
            })?;
    }
    Ok(current)
}

fn leaf_mut<'a>(root: &'a mut Node, path: &[String]) -> Result<&'a mut Node, DiffError> {
    let node = node_mut(root, path)?;
    if node.is_leaf() {
        Ok(node)
    } else {
        Err(DiffError::NotALeaf {
            label: node.label.clone(),
        })
    }
}

fn leaf_alternatives_mut(node: &mut Node) -> Result<&mut Vec<DesignAlternative>, DiffError> {
    match &mut node.content {
        NodeContent::Leaf(alternatives) => Ok(alternatives),
        NodeContent::Composite(_) => Err(DiffError::NotALeaf {
            label: node.label.clone(),
        }),
    }
}

/// Resolves a path to a composite node, converting a leaf into an empty
/// composite (promotion) and creating missing intermediate composites.
fn composite_mut<'a>(
    root: &'a mut Node,
    path: &[String],
    consumed: &mut BTreeSet<String>,
) -> Result<&'a mut Node, DiffError> {
    let mut current = root;
    for segment in path {
        if current.is_leaf() {
            promote(current, consumed);
        }
        let children = match &mut current.content {
            NodeContent::Composite(children) => children,
            NodeContent::Leaf(_) => unreachable!("leaves were just promoted"),
        };
        let position = children.iter().position(|c| c.base_label() == segment);
        let index = match position {
            Some(index) => index,
            None => {
                children.push(Node::composite(segment.clone(), "", Vec::new()));
                children.len() - 1
            }
        };
        current = &mut children[index];
    }
    if current.is_leaf() {
        promote(current, consumed);
    }
    Ok(current)
}

/// Converts a leaf into an empty composite, marking its alternatives as
/// absorbed by the promotion.
fn promote(node: &mut Node, consumed: &mut BTreeSet<String>) {
    for alternative in node.alternatives() {
        consumed.insert(alternative.id.clone());
    }
    node.content = NodeContent::Composite(Vec::new());
}

fn add_child(parent: &mut Node, child: Node) {
    if let NodeContent::Composite(children) = &mut parent.content {
        children.retain(|c| c.base_label() != child.base_label());
        children.push(child);
    }
}

fn remove_child(parent: &mut Node, base_label: &str, consumed: &mut BTreeSet<String>) {
    if let NodeContent::Composite(children) = &mut parent.content {
        if let Some(position) = children.iter().position(|c| c.base_label() == base_label) {
            let removed = children.remove(position);
            for id in collect_da_ids(&removed) {
                consumed.insert(id);
            }
        }
    }
}

/// Removes one alternative from the leaf at `path`; a leaf left empty is
/// detached from its parent.
fn remove_alternative(root: &mut Node, path: &[String], id: &str) -> Result<(), DiffError> {
    let leaf = leaf_mut(root, path)?;
    let alternatives = leaf_alternatives_mut(leaf)?;
    let position = alternatives
        .iter()
        .position(|a| a.id == id)
        .ok_or_else(|| DiffError::MissingAlternative {
            leaf: leaf_label(path),
            id: id.to_string(),
        })?;
    alternatives.remove(position);
    if alternatives.is_empty() {
        let (last, parent_path) = path.split_last().expect("leaf paths are non-empty");
        let parent = node_mut(root, parent_path)?;
        if let NodeContent::Composite(children) = &mut parent.content {
            children.retain(|c| c.base_label() != *last);
        }
    }
    Ok(())
}

/// Rewrites labels and titles of nodes that exist in `base`: unchanged
/// nodes keep their base label, and a composite whose direct child set
/// differs from its base counterpart gains one prime. Nodes absent from
/// `base` keep the labels the records gave them; the root never primes.
fn derive_primes(root: &mut Node, base_root: &Node) {
    let base_children: BTreeMap<&str, &Node> = base_root
        .children()
        .iter()
        .map(|c| (c.base_label(), c))
        .collect();
    if let NodeContent::Composite(children) = &mut root.content {
        for child in children.iter_mut() {
            if let Some(base_child) = base_children.get(child.base_label()) {
                reprime(child, base_child);
            }
        }
    }
}

fn reprime(node: &mut Node, base: &Node) {
    let changed = match (&node.content, &base.content) {
        (NodeContent::Composite(new_children), NodeContent::Composite(base_children)) => {
            let new_set: BTreeSet<&str> = new_children.iter().map(|c| c.base_label()).collect();
            let base_set: BTreeSet<&str> = base_children.iter().map(|c| c.base_label()).collect();
            new_set != base_set
        }
        (NodeContent::Composite(_), NodeContent::Leaf(_)) => true,
        _ => false,
    };
    node.label = if changed {
        format!("{}'", base.label)
    } else {
        base.label.clone()
    };
    node.title = base.title.clone();
    let base_children: BTreeMap<&str, &Node> = base
        .children()
        .iter()
        .map(|c| (c.base_label(), c))
        .collect();
    if let NodeContent::Composite(children) = &mut node.content {
        for child in children.iter_mut() {
            if let Some(base_child) = base_children.get(child.base_label()) {
                reprime(child, base_child);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// CSV export
// ---------------------------------------------------------------------------

/// Renders records as CSV with header `path,kind,before,after,type_code`;
/// the path is `/`-joined and absent fields are empty.
pub fn records_to_csv(records: &[ChangeRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["path", "kind", "before", "after", "type_code"])
        .expect("in-memory write");
    for record in records {
        writer
            .write_record([
                record.path_string(),
                record.kind.to_string(),
                record.before.clone().unwrap_or_default(),
                record.after.clone().unwrap_or_default(),
                record.type_code.map(|c| c.to_string()).unwrap_or_default(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8")
}
