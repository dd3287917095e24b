//! Multicriteria ranking of improvement operations into priority layers.
//!
//! Operations compare by componentwise Pareto dominance over their criteria
//! estimates. [`rank_operations`] produces ordered layers (layer 1 = best)
//! either by repeated Pareto peeling of the non-dominated set or by reading
//! the catalog's stored priority ranks as a fixture. Both layerings satisfy
//! dominance consistency: a dominating operation never lands in a later
//! layer than the operation it dominates (checkable via
//! [`consistency_violations`]).

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

use crate::catalog::Catalog;

/// Errors from ranking primitives.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("estimate vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

/// Outcome of comparing two estimate vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceVerdict {
    /// First vector is at least as good everywhere and better somewhere.
    Dominates,
    /// Mirror image of [`DominanceVerdict::Dominates`].
    Dominated,
    /// Identical vectors.
    Equal,
    /// Each vector is better somewhere.
    Incomparable,
}

impl fmt::Display for DominanceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            DominanceVerdict::Dominates => "dominates",
            DominanceVerdict::Dominated => "dominated",
            DominanceVerdict::Equal => "equal",
            DominanceVerdict::Incomparable => "incomparable",
        };
        f.write_str(text)
    }
}

/// Componentwise Pareto dominance between two estimate vectors (all
/// criteria maximized).
pub fn dominance(a: &[u8], b: &[u8]) -> Result<DominanceVerdict, RankError> {
    if a.len() != b.len() {
        return Err(RankError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            a_better = true;
        } else if y > x {
            b_better = true;
        }
    }
    Ok(match (a_better, b_better) {
        (false, false) => DominanceVerdict::Equal,
        (true, false) => DominanceVerdict::Dominates,
        (false, true) => DominanceVerdict::Dominated,
        (true, true) => DominanceVerdict::Incomparable,
    })
}

/// How to layer a catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankMethod {
    /// Repeated Pareto peeling: layer k is the non-dominated set once
    /// layers before k are removed.
    #[default]
    DominancePeeling,
    /// Read the layers off the catalog's stored priority ranks.
    Fixture,
}

/// Ordered priority layers over operation ids; layer 1 is the best.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedLayers {
    pub layers: Vec<BTreeSet<u32>>,
}

impl RankedLayers {
    /// 1-based layer index of an operation, if ranked.
    pub fn priority(&self, op: u32) -> Option<usize> {
        self.layers
            .iter()
            .position(|layer| layer.contains(&op))
            .map(|index| index + 1)
    }

    /// All ranked operation ids.
    pub fn ids(&self) -> BTreeSet<u32> {
        self.layers.iter().flatten().copied().collect()
    }
}

/// Layers a catalog's operations. Peeling works on the estimate vectors;
/// the fixture method groups by stored priority rank in ascending rank
/// order. An empty catalog yields no layers.
pub fn rank_operations(catalog: &Catalog, method: RankMethod) -> RankedLayers {
    match method {
        RankMethod::DominancePeeling => {
            let items: Vec<(u32, &[u8])> = catalog
                .operations
                .iter()
                .map(|op| (op.id, op.estimates.as_slice()))
                .collect();
            peel_layers(&items)
        }
        RankMethod::Fixture => {
            let mut ranks: Vec<u32> = catalog.operations.iter().map(|op| op.priority).collect();
            ranks.sort_unstable();
            ranks.dedup();
            let layers = ranks
                .iter()
                .map(|rank| {
                    catalog
                        .operations
                        .iter()
                        .filter(|op| op.priority == *rank)
                        .map(|op| op.id)
                        .collect()
                })
                .collect();
            RankedLayers { layers }
        }
    }
}

/// Repeated Pareto peeling over arbitrary `(id, estimates)` pairs. All
/// vectors must share one length; each round extracts the set no remaining
/// vector dominates.
pub fn peel_layers(items: &[(u32, &[u8])]) -> RankedLayers {
    let mut remaining: Vec<&(u32, &[u8])> = items.iter().collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let layer: BTreeSet<u32> = remaining
            .iter()
            .filter(|(_, mine)| {
                !remaining.iter().any(|(_, other)| {
                    dominance(other, mine).expect("uniform vector length")
                        == DominanceVerdict::Dominates
                })
            })
            .map(|(id, _)| *id)
            .collect();
        remaining.retain(|(id, _)| !layer.contains(id));
        layers.push(layer);
    }
    RankedLayers { layers }
}

/// All ordered pairs `(a, b)` where `a` dominates `b` yet sits in a later
/// layer — empty for a dominance-consistent layering.
pub fn consistency_violations(catalog: &Catalog, layers: &RankedLayers) -> Vec<(u32, u32)> {
    let mut violations = Vec::new();
    for a in &catalog.operations {
        for b in &catalog.operations {
            if a.id == b.id {
                continue;
            }
            let verdict = dominance(&a.estimates, &b.estimates).expect("validated catalog");
            if verdict == DominanceVerdict::Dominates {
                if let (Some(la), Some(lb)) = (layers.priority(a.id), layers.priority(b.id)) {
                    if la > lb {
                        violations.push((a.id, b.id));
                    }
                }
            }
        }
    }
    violations
}

/// Renders layers as CSV with header `operation,layer`, ascending by
/// operation id.
pub fn layers_to_csv(layers: &RankedLayers) -> String {
    let mut rows: Vec<(u32, usize)> = layers
        .layers
        .iter()
        .enumerate()
        .flat_map(|(index, layer)| layer.iter().map(move |id| (*id, index + 1)))
        .collect();
    rows.sort_unstable();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["operation", "layer"])
        .expect("in-memory write");
    for (id, layer) in rows {
        writer
            .write_record([format!("Φ{id}"), layer.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8")
}
