//! Forecast construction, application onto system structures, and Pareto
//! comparison.
//!
//! A forecast is a set of improvement operations with totals priced by the
//! catalog: profit from the priority transform, resource from the resource
//! requirements. Forecasts come from experts (a hand-picked set), from the
//! knapsack solver (budgeted addition), or from the multiple-choice solver
//! (one representative per operation cluster).
//!
//! Applying a forecast materializes a tree. The default style renders the
//! union of the selected operations' structural contributions and nothing
//! else — new leaves and alternatives grouped under their parents, parents
//! spelled exactly as in the base model — because that is what the bundled
//! reference structures show. The overlay style instead patches the whole
//! base tree, producing a complete next-generation structure; edits whose
//! outcome is already present are skipped, so replaying operations the
//! base generation has absorbed is harmless.

use crate::catalog::{Catalog, CatalogError, EditAction};
use crate::model::{DesignAlternative, ModelError, Node, NodeContent, SystemModel};
use crate::solve::{
    knapsack_solve, mckp_solve, Item, KnapsackInstance, MckpInstance, Selection, SelectionStatus,
    SolveError, SolveMode,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Errors from forecast construction and application.
#[derive(Debug, Error, PartialEq)]
pub enum ForecastError {
    #[error("operation Φ{id} is not in the catalog")]
    UnknownOperation { id: u32 },
    #[error("operation Φ{id} appears in more than one partition group")]
    PartitionDuplicate { id: u32 },
    #[error("partition names operation Φ{id}, which the catalog lacks")]
    PartitionUnknown { id: u32 },
    #[error("operation Φ{id} is missing from the partition")]
    PartitionIncomplete { id: u32 },
    #[error("no operation set satisfies the budget")]
    InfeasibleSelection,
    #[error("edit target {label} cannot be resolved")]
    UnresolvableTarget { label: String },
    #[error("edit target {label} is not a leaf")]
    TargetNotALeaf { label: String },
    #[error("leaf {leaf} has no alternative {alternative} to replace")]
    MissingAlternative { leaf: String, alternative: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Where a forecast came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForecastOrigin {
    Expert,
    Knapsack,
    Mckp,
    Aggregated,
}

impl fmt::Display for ForecastOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ForecastOrigin::Expert => "expert",
            ForecastOrigin::Knapsack => "knapsack",
            ForecastOrigin::Mckp => "mckp",
            ForecastOrigin::Aggregated => "aggregated",
        };
        f.write_str(name)
    }
}

/// Priced summary of a forecast: summed profit and resource requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Totals {
    pub profit: i64,
    pub resource: u64,
}

impl fmt::Display for Totals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(profit {}, resource {})", self.profit, self.resource)
    }
}

/// A set of improvement operations proposed as the next generation,
/// priced against a catalog. Construct through [`expert_forecast`],
/// [`compute_forecast`], or the aggregation strategies so the totals are
/// always derived from the catalog rather than stored stale; after editing
/// `operations` by hand, call [`Forecast::recompute_totals`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Forecast {
    pub id: String,
    /// Display label, e.g. `Φ^`.
    pub label: String,
    pub operations: BTreeSet<u32>,
    pub origin: ForecastOrigin,
    pub totals: Totals,
}

impl Forecast {
    /// Builds a forecast, pricing the operation set against the catalog.
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        operations: impl IntoIterator<Item = u32>,
        origin: ForecastOrigin,
        catalog: &Catalog,
    ) -> Result<Self, ForecastError> {
        let operations: BTreeSet<u32> = operations.into_iter().collect();
        let totals = compute_totals(catalog, &operations)?;
        Ok(Forecast {
            id: id.into(),
            label: label.into(),
            operations,
            origin,
            totals,
        })
    }

    /// Re-derives the totals from the catalog.
    pub fn recompute_totals(&mut self, catalog: &Catalog) -> Result<(), ForecastError> {
        self.totals = compute_totals(catalog, &self.operations)?;
        Ok(())
    }
}

fn compute_totals(catalog: &Catalog, operations: &BTreeSet<u32>) -> Result<Totals, ForecastError> {
    let mut totals = Totals::default();
    for &id in operations {
        let operation = catalog
            .get(id)
            .map_err(|_| ForecastError::UnknownOperation { id })?;
        totals.profit += catalog.profit_of(id)?;
        totals.resource += operation.resource;
    }
    Ok(totals)
}

/// Wraps a hand-picked operation set as a forecast.
pub fn expert_forecast(
    catalog: &Catalog,
    label: &str,
    operations: impl IntoIterator<Item = u32>,
) -> Result<Forecast, ForecastError> {
    Forecast::new("expert", label, operations, ForecastOrigin::Expert, catalog)
}

/// Optimization recipe behind [`compute_forecast`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForecastMethod {
    /// Budgeted selection over all catalog operations.
    Knapsack { budget: u64 },
    /// One operation per partition group, within the budget. The partition
    /// must cover the catalog exactly (every operation in exactly one
    /// group).
    Mckp {
        partition: Vec<BTreeSet<u32>>,
        budget: u64,
    },
}

fn catalog_item(catalog: &Catalog, id: u32) -> Result<Item, ForecastError> {
    Ok(Item {
        id,
        profit: catalog.profit_of(id)?,
        weight: catalog.get(id)?.resource,
    })
}

fn selection_to_forecast(
    selection: Selection,
    id: String,
    label: String,
    origin: ForecastOrigin,
    catalog: &Catalog,
) -> Result<Forecast, ForecastError> {
    if selection.status == SelectionStatus::Infeasible {
        return Err(ForecastError::InfeasibleSelection);
    }
    Forecast::new(id, label, selection.chosen, origin, catalog)
}

/// Builds a forecast by optimization. The solver route defaults to exact
/// elsewhere; pass the mode explicitly here. Catalog precedence relations
/// are honored on the knapsack route (note that the exact solver then
/// falls back to exhaustive search, capped at 24 operations).
pub fn compute_forecast(
    catalog: &Catalog,
    method: &ForecastMethod,
    mode: SolveMode,
) -> Result<Forecast, ForecastError> {
    match method {
        ForecastMethod::Knapsack { budget } => {
            let items: Result<Vec<Item>, ForecastError> = catalog
                .ids()
                .into_iter()
                .map(|id| catalog_item(catalog, id))
                .collect();
            let instance = KnapsackInstance {
                items: items?,
                budget: *budget,
                precedence: catalog.precedence_pairs(),
            };
            let selection = knapsack_solve(&instance, mode)?;
            selection_to_forecast(
                selection,
                format!("knapsack-b{budget}"),
                format!("knapsack b={budget}"),
                ForecastOrigin::Knapsack,
                catalog,
            )
        }
        ForecastMethod::Mckp { partition, budget } => {
            let all: BTreeSet<u32> = catalog.ids().into_iter().collect();
            let mut seen = BTreeSet::new();
            for group in partition {
                for &id in group {
                    if !all.contains(&id) {
                        return Err(ForecastError::PartitionUnknown { id });
                    }
                    if !seen.insert(id) {
                        return Err(ForecastError::PartitionDuplicate { id });
                    }
                }
            }
            if let Some(&id) = all.difference(&seen).next() {
                return Err(ForecastError::PartitionIncomplete { id });
            }
            let groups: Result<Vec<Vec<Item>>, ForecastError> = partition
                .iter()
                .map(|group| group.iter().map(|&id| catalog_item(catalog, id)).collect())
                .collect();
            let instance = MckpInstance {
                groups: groups?,
                budget: *budget,
                skippable: false,
            };
            let selection = mckp_solve(&instance, mode)?;
            selection_to_forecast(
                selection,
                format!("mckp-b{budget}"),
                format!("mckp b={budget}"),
                ForecastOrigin::Mckp,
                catalog,
            )
        }
    }
}

// ---------------------------------------------------------------------------
// Structure application
// ---------------------------------------------------------------------------

/// How [`apply_operations`] materializes a forecast.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApplyStyle {
    /// Render exactly the nodes and alternatives the forecast's edit
    /// scripts contribute, merged under shared parents that are spelled as
    /// in the base model. An empty forecast yields a root-only tree.
    #[default]
    Contributions,
    /// Patch the full base tree into a complete next-generation structure.
    /// Edits already realized in the base are skipped; parents whose child
    /// set actually changes gain one prime mark.
    Overlay,
}

/// A node under assembly in contributions style.
struct Sketch {
    label: String,
    title: String,
    children: BTreeMap<String, Sketch>,
    alternatives: Vec<DesignAlternative>,
    is_leaf: bool,
}

impl Sketch {
    fn leaf(label: &str, title: &str) -> Self {
        Sketch {
            label: label.to_string(),
            title: title.to_string(),
            children: BTreeMap::new(),
            alternatives: Vec::new(),
            is_leaf: true,
        }
    }

    fn composite(label: &str, title: &str) -> Self {
        Sketch {
            label: label.to_string(),
            title: title.to_string(),
            children: BTreeMap::new(),
            alternatives: Vec::new(),
            is_leaf: false,
        }
    }

    fn promote(&mut self) {
        if self.is_leaf {
            self.is_leaf = false;
            self.alternatives.clear();
        }
    }

    fn push_alternative(&mut self, alternative: &DesignAlternative) {
        if !self.alternatives.iter().any(|a| a.id == alternative.id) {
            self.alternatives.push(alternative.clone());
        }
    }

    fn into_node(self) -> Node {
        if self.is_leaf {
            let mut alternatives = self.alternatives;
            alternatives.sort_by(|a, b| a.id.cmp(&b.id));
            Node::leaf(self.label, self.title, alternatives)
        } else {
            let children = self.children.into_values().map(Sketch::into_node).collect();
            Node::composite(self.label, self.title, children)
        }
    }

    fn find_mut(&mut self, base_label: &str) -> Option<&mut Sketch> {
        if crate::model::strip_primes(&self.label) == base_label {
            return Some(self);
        }
        self.children
            .values_mut()
            .find_map(|child| child.find_mut(base_label))
    }

    fn contains(&self, base_label: &str) -> bool {
        crate::model::strip_primes(&self.label) == base_label
            || self
                .children
                .values()
                .any(|child| child.contains(base_label))
    }
}

/// Path of base-model nodes from a root child down to the target node.
fn base_path<'a>(base: &'a SystemModel, base_label: &str) -> Option<Vec<&'a Node>> {
    fn walk<'a>(node: &'a Node, base_label: &str, trail: &mut Vec<&'a Node>) -> bool {
        trail.push(node);
        if node.base_label() == base_label {
            return true;
        }
        for child in node.children() {
            if walk(child, base_label, trail) {
                return true;
            }
        }
        trail.pop();
        false
    }
    let mut trail = Vec::new();
    for child in base.root.children() {
        if walk(child, base_label, &mut trail) {
            return Some(trail);
        }
        trail.clear();
    }
    None
}

/// Creates every sketch along `path` (spelled from the base nodes) and
/// returns the one for the last path element. Interior nodes become
/// composites; the final node starts as a leaf when the base has a leaf.
fn ensure_chain<'s>(map: &'s mut BTreeMap<String, Sketch>, path: &[&Node]) -> &'s mut Sketch {
    let (head, rest) = path.split_first().expect("paths are non-empty");
    let entry = map.entry(head.base_label().to_string()).or_insert_with(|| {
        if rest.is_empty() && head.is_leaf() {
            Sketch::leaf(&head.label, &head.title)
        } else {
            Sketch::composite(&head.label, &head.title)
        }
    });
    if rest.is_empty() {
        entry
    } else {
        entry.promote();
        ensure_chain(&mut entry.children, rest)
    }
}

struct ContributionBuilder<'a> {
    base: &'a SystemModel,
    top: BTreeMap<String, Sketch>,
}

impl<'a> ContributionBuilder<'a> {
    fn new(base: &'a SystemModel) -> Self {
        ContributionBuilder {
            base,
            top: BTreeMap::new(),
        }
    }

    /// Materializes the base-model chain down to `base_label` and returns
    /// the sketch for the target. Falls back to nodes created by earlier
    /// edits (e.g. a subsystem another operation just added).
    fn ensure_target(&mut self, base_label: &str) -> Result<&mut Sketch, ForecastError> {
        if let Some(path) = base_path(self.base, base_label) {
            return Ok(ensure_chain(&mut self.top, &path));
        }
        // Not in the base: the target may have been created by a sibling
        // edit earlier in this application.
        let created = self
            .top
            .iter()
            .find(|(_, sketch)| sketch.contains(base_label))
            .map(|(key, _)| key.clone());
        if let Some(key) = created {
            let sketch = self.top.get_mut(&key).expect("key just observed");
            return Ok(sketch.find_mut(base_label).expect("contains() held"));
        }
        Err(ForecastError::UnresolvableTarget {
            label: base_label.to_string(),
        })
    }

    fn apply(&mut self, edit: &EditAction) -> Result<(), ForecastError> {
        match edit {
            EditAction::AddSubsystem { leaf } => {
                let entry = self
                    .top
                    .entry(leaf.label.clone())
                    .or_insert_with(|| Sketch::leaf(&leaf.label, &leaf.title));
                for alternative in &leaf.alternatives {
                    entry.push_alternative(alternative);
                }
            }
            EditAction::AddLeaf { parent, leaf } | EditAction::ReplaceLeaf { parent, leaf, .. } => {
                let target = self.ensure_target(parent)?;
                target.promote();
                let entry = target
                    .children
                    .entry(leaf.label.clone())
                    .or_insert_with(|| Sketch::leaf(&leaf.label, &leaf.title));
                for alternative in &leaf.alternatives {
                    entry.push_alternative(alternative);
                }
            }
            EditAction::ReplaceAlternative { target, after, .. } => {
                let sketch = self.ensure_target(target)?;
                if !sketch.is_leaf {
                    return Err(ForecastError::TargetNotALeaf {
                        label: target.clone(),
                    });
                }
                sketch.push_alternative(after);
            }
            EditAction::AddAlternative {
                target,
                alternative,
            } => {
                let sketch = self.ensure_target(target)?;
                if !sketch.is_leaf {
                    return Err(ForecastError::TargetNotALeaf {
                        label: target.clone(),
                    });
                }
                sketch.push_alternative(alternative);
            }
        }
        Ok(())
    }
}

fn apply_contributions(
    base: &SystemModel,
    forecast: &Forecast,
    catalog: &Catalog,
) -> Result<SystemModel, ForecastError> {
    let mut builder = ContributionBuilder::new(base);
    for &id in &forecast.operations {
        let operation = catalog
            .get(id)
            .map_err(|_| ForecastError::UnknownOperation { id })?;
        for edit in &operation.edits {
            builder.apply(edit)?;
        }
    }
    let children: Vec<Node> = builder.top.into_values().map(Sketch::into_node).collect();
    let result = SystemModel {
        id: format!("{}-structure", forecast.id),
        name: format!("materialized structure of {}", forecast.label),
        root: Node::composite(base.root.label.clone(), base.root.title.clone(), children),
    };
    if !result.root.children().is_empty() {
        result.validate()?;
    }
    Ok(result)
}

fn find_node_mut<'a>(node: &'a mut Node, base_label: &str) -> Option<&'a mut Node> {
    if node.base_label() == base_label {
        return Some(node);
    }
    if let NodeContent::Composite(children) = &mut node.content {
        return children
            .iter_mut()
            .find_map(|child| find_node_mut(child, base_label));
    }
    None
}

fn overlay_edit(root: &mut Node, edit: &EditAction) -> Result<(), ForecastError> {
    match edit {
        EditAction::AddSubsystem { leaf } => {
            if find_node_mut(root, &leaf.label).is_none() {
                if let NodeContent::Composite(children) = &mut root.content {
                    children.push(Node::leaf(
                        leaf.label.clone(),
                        leaf.title.clone(),
                        leaf.alternatives.clone(),
                    ));
                }
            }
        }
        EditAction::AddLeaf { parent, leaf } => {
            let node =
                find_node_mut(root, parent).ok_or_else(|| ForecastError::UnresolvableTarget {
                    label: parent.clone(),
                })?;
            if node.is_leaf() {
                node.content = NodeContent::Composite(Vec::new());
            }
            if let NodeContent::Composite(children) = &mut node.content {
                if !children
                    .iter()
                    .any(|child| child.base_label() == leaf.label)
                {
                    children.push(Node::leaf(
                        leaf.label.clone(),
                        leaf.title.clone(),
                        leaf.alternatives.clone(),
                    ));
                }
            }
        }
        EditAction::ReplaceLeaf {
            parent,
            before,
            leaf,
        } => {
            let node =
                find_node_mut(root, parent).ok_or_else(|| ForecastError::UnresolvableTarget {
                    label: parent.clone(),
                })?;
            if node.is_leaf() {
                node.content = NodeContent::Composite(Vec::new());
            }
            if let NodeContent::Composite(children) = &mut node.content {
                children.retain(|child| !before.iter().any(|b| b == child.base_label()));
                if !children
                    .iter()
                    .any(|child| child.base_label() == leaf.label)
                {
                    children.push(Node::leaf(
                        leaf.label.clone(),
                        leaf.title.clone(),
                        leaf.alternatives.clone(),
                    ));
                }
            }
        }
        EditAction::ReplaceAlternative {
            target,
            before,
            after,
        } => {
            let node =
                find_node_mut(root, target).ok_or_else(|| ForecastError::UnresolvableTarget {
                    label: target.clone(),
                })?;
            let label = node.label.clone();
            let NodeContent::Leaf(alternatives) = &mut node.content else {
                return Err(ForecastError::TargetNotALeaf { label });
            };
            if alternatives.iter().any(|a| a.id == after.id) {
                // Already realized in this generation.
            } else if let Some(slot) = alternatives.iter_mut().find(|a| &a.id == before) {
                *slot = after.clone();
            } else {
                return Err(ForecastError::MissingAlternative {
                    leaf: label,
                    alternative: before.clone(),
                });
            }
        }
        EditAction::AddAlternative {
            target,
            alternative,
        } => {
            let node =
                find_node_mut(root, target).ok_or_else(|| ForecastError::UnresolvableTarget {
                    label: target.clone(),
                })?;
            let label = node.label.clone();
            let NodeContent::Leaf(alternatives) = &mut node.content else {
                return Err(ForecastError::TargetNotALeaf { label });
            };
            if !alternatives.iter().any(|a| a.id == alternative.id) {
                alternatives.push(alternative.clone());
            }
        }
    }
    Ok(())
}

/// Adds one prime to every non-root composite whose direct child base-label
/// set differs from the base model's (including leaves promoted to
/// composites); labels otherwise keep the base spelling.
fn reprime_against_base(node: &mut Node, base: &SystemModel, is_root: bool) {
    if let NodeContent::Composite(children) = &mut node.content {
        for child in children.iter_mut() {
            reprime_against_base(child, base, false);
        }
        if !is_root {
            let result_set: BTreeSet<&str> = node
                .children()
                .iter()
                .map(|child| child.base_label())
                .collect();
            let changed = match base.find(node.base_label()) {
                None => false, // newly added subsystem: no prime
                Some(base_node) if base_node.is_leaf() => true,
                Some(base_node) => {
                    let base_set: BTreeSet<&str> = base_node
                        .children()
                        .iter()
                        .map(|child| child.base_label())
                        .collect();
                    base_set != result_set
                }
            };
            if changed {
                node.label.push('\'');
            }
        }
    }
}

/// Materializes a forecast on top of a base generation. See [`ApplyStyle`]
/// for the two renderings. Fails when an edit references a target that is
/// neither in the base model nor created by a sibling edit.
pub fn apply_operations(
    base: &SystemModel,
    forecast: &Forecast,
    catalog: &Catalog,
    style: ApplyStyle,
) -> Result<SystemModel, ForecastError> {
    match style {
        ApplyStyle::Contributions => apply_contributions(base, forecast, catalog),
        ApplyStyle::Overlay => {
            let mut root = base.root.clone();
            for &id in &forecast.operations {
                let operation = catalog
                    .get(id)
                    .map_err(|_| ForecastError::UnknownOperation { id })?;
                for edit in &operation.edits {
                    overlay_edit(&mut root, edit)?;
                }
            }
            reprime_against_base(&mut root, base, true);
            let result = SystemModel {
                id: format!("{}+{}", base.id, forecast.id),
                name: format!("{} with {} applied", base.name, forecast.label),
                root,
            };
            result.validate()?;
            Ok(result)
        }
    }
}

// ---------------------------------------------------------------------------
// Pareto comparison and scatter output
// ---------------------------------------------------------------------------

/// `true` when `a` is at least as good as `b` on both axes (profit up,
/// resource down) and strictly better on one.
pub fn totals_dominate(a: Totals, b: Totals) -> bool {
    a.profit >= b.profit
        && a.resource <= b.resource
        && (a.profit > b.profit || a.resource < b.resource)
}

/// The non-dominated subset under (profit maximized, resource minimized),
/// in input order. Forecasts with identical totals do not exclude each
/// other.
pub fn pareto_front(forecasts: &[Forecast]) -> Vec<Forecast> {
    forecasts
        .iter()
        .filter(|candidate| {
            !forecasts
                .iter()
                .any(|other| totals_dominate(other.totals, candidate.totals))
        })
        .cloned()
        .collect()
}

/// Scatter data as CSV: `label,profit,resource`, one row per forecast.
pub fn scatter_csv(forecasts: &[Forecast]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["label", "profit", "resource"])
        .expect("writing to memory cannot fail");
    for forecast in forecasts {
        writer
            .write_record([
                forecast.label.as_str(),
                &forecast.totals.profit.to_string(),
                &forecast.totals.resource.to_string(),
            ])
            .expect("writing to memory cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("CSV output is UTF-8")
}

/// Scatter plot as a standalone SVG document: one labeled point per
/// forecast, resource on the x axis, profit on the y axis.
pub fn scatter_svg(forecasts: &[Forecast]) -> String {
    const WIDTH: f64 = 640.0;
    const HEIGHT: f64 = 480.0;
    const LEFT: f64 = 70.0;
    const RIGHT: f64 = 30.0;
    const TOP: f64 = 30.0;
    const BOTTOM: f64 = 60.0;
    let max_resource = forecasts
        .iter()
        .map(|f| f.totals.resource)
        .max()
        .unwrap_or(0)
        .max(1) as f64;
    let max_profit = forecasts
        .iter()
        .map(|f| f.totals.profit.max(0))
        .max()
        .unwrap_or(0)
        .max(1) as f64;
    let x_span = WIDTH - LEFT - RIGHT;
    let y_span = HEIGHT - TOP - BOTTOM;
    let x_of = |resource: u64| LEFT + (resource as f64 / (max_resource * 1.1)) * x_span;
    let y_of = |profit: i64| HEIGHT - BOTTOM - (profit.max(0) as f64 / (max_profit * 1.1)) * y_span;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // Axes.
    svg.push_str(&format!(
        "  <line x1=\"{LEFT}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        HEIGHT - BOTTOM,
        WIDTH - RIGHT,
        HEIGHT - BOTTOM
    ));
    svg.push_str(&format!(
        "  <line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{}\" stroke=\"black\"/>\n",
        HEIGHT - BOTTOM
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\">required resource</text>\n",
        LEFT + x_span / 2.0,
        HEIGHT - 15.0
    ));
    svg.push_str(&format!(
        "  <text x=\"18\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\" \
         transform=\"rotate(-90 18 {})\">total profit</text>\n",
        TOP + y_span / 2.0,
        TOP + y_span / 2.0
    ));
    // Axis extremes as reference ticks.
    svg.push_str(&format!(
        "  <text x=\"{LEFT}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">0</text>\n",
        HEIGHT - BOTTOM + 18.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.1}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
        x_of(max_resource as u64),
        HEIGHT - BOTTOM + 18.0,
        max_resource as u64
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{:.1}\" text-anchor=\"end\" font-size=\"12\">{}</text>\n",
        LEFT - 8.0,
        y_of(max_profit as i64) + 4.0,
        max_profit as i64
    ));
    for forecast in forecasts {
        let x = x_of(forecast.totals.resource);
        let y = y_of(forecast.totals.profit);
        svg.push_str(&format!(
            "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"5\" fill=\"steelblue\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\">{}</text>\n",
            x + 8.0,
            y - 6.0,
            xml_escape(&forecast.label)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
