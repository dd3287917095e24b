//! Agglomerative clustering of operations by criteria-estimate similarity.
//!
//! [`agglomerate`] merges the two nearest clusters one step at a time under
//! a chosen metric (L1, L2, L∞) and linkage (single, complete, average),
//! recording every merge in a [`Dendrogram`]; [`partition_after`] replays a
//! prefix of the merges into a flat [`Partition`]. Distance comparisons are
//! exact wherever the arithmetic allows (integer or rational), so results
//! are bit-stable; ties merge the pair whose smallest member ids are
//! lexicographically least. Defaults are L1 and single linkage — ordinal
//! estimates favor rank-style distances.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

use crate::catalog::Catalog;

/// Errors from clustering primitives.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("estimate vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("step count {steps} is outside [0, {max}]")]
    StepsOutOfRange { steps: usize, max: usize },
    #[error("partitions cover different operation sets")]
    MismatchedUniverse,
}

/// Distance metric over estimate vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    /// Sum of absolute componentwise differences.
    #[default]
    L1,
    /// Euclidean distance.
    L2,
    /// Maximum absolute componentwise difference.
    Linf,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::L1 => "L1",
            Metric::L2 => "L2",
            Metric::Linf => "Linf",
        })
    }
}

/// Linkage rule lifting the metric from points to clusters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Linkage {
    /// Minimum pairwise distance.
    #[default]
    Single,
    /// Maximum pairwise distance.
    Complete,
    /// Mean pairwise distance.
    Average,
}

impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Linkage::Single => "single",
            Linkage::Complete => "complete",
            Linkage::Average => "average",
        })
    }
}

/// One merge step: the two clusters joined and the linkage distance
/// between them.
#[derive(Debug, Clone, PartialEq)]
pub struct Merge {
    /// Cluster containing the smaller minimum operation id.
    pub left: BTreeSet<u32>,
    /// The other cluster.
    pub right: BTreeSet<u32>,
    /// Linkage distance at which the merge happened.
    pub distance: f64,
}

/// Full merge history over a catalog's operations.
#[derive(Debug, Clone, PartialEq)]
pub struct Dendrogram {
    /// Operation ids in ascending order.
    pub leaves: Vec<u32>,
    /// Exactly `leaves.len() − 1` merges (for a non-empty catalog).
    pub merges: Vec<Merge>,
}

/// A flat clustering: disjoint operation-id sets covering the catalog,
/// ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub clusters: Vec<BTreeSet<u32>>,
}

impl Partition {
    /// All operation ids across clusters.
    pub fn ids(&self) -> BTreeSet<u32> {
        self.clusters.iter().flatten().copied().collect()
    }
}

/// Metric distance between two estimate vectors.
pub fn distance(a: &[u8], b: &[u8], metric: Metric) -> Result<f64, ClusterError> {
    Ok(exact_distance(a, b, metric)?.as_f64(metric))
}

/// Exact pairwise distance: the metric value for L1/L∞, its square for L2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct ExactDist(u64);

impl ExactDist {
    fn as_f64(self, metric: Metric) -> f64 {
        match metric {
            Metric::L1 | Metric::Linf => self.0 as f64,
            Metric::L2 => (self.0 as f64).sqrt(),
        }
    }
}

fn exact_distance(a: &[u8], b: &[u8], metric: Metric) -> Result<ExactDist, ClusterError> {
    if a.len() != b.len() {
        return Err(ClusterError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let diffs = a.iter().zip(b).map(|(x, y)| u64::from(x.abs_diff(*y)));
    let value = match metric {
        Metric::L1 => diffs.sum(),
        Metric::L2 => diffs.map(|d| d * d).sum(),
        Metric::Linf => diffs.max().unwrap_or(0),
    };
    Ok(ExactDist(value))
}

/// Linkage distance key: exact rational where possible, float only where
/// square roots force it (average linkage under L2). One clustering run
/// stays within one variant, so comparisons never mix families.
#[derive(Debug, Clone, Copy)]
enum DistKey {
    Ratio(u128, u128),
    Approx(f64),
}

impl DistKey {
    fn compare(&self, other: &DistKey) -> Ordering {
        match (self, other) {
            (DistKey::Ratio(a, b), DistKey::Ratio(c, d)) => (a * d).cmp(&(c * b)),
            (DistKey::Approx(x), DistKey::Approx(y)) => {
                x.partial_cmp(y).expect("distances are finite")
            }
            _ => unreachable!("one run uses one key family"),
        }
    }
}

fn cluster_distance(
    a: &BTreeSet<u32>,
    b: &BTreeSet<u32>,
    vectors: &[(u32, Vec<u8>)],
    metric: Metric,
    linkage: Linkage,
) -> (DistKey, f64) {
    let vector_of = |id: u32| -> &[u8] {
        &vectors
            .iter()
            .find(|(vid, _)| *vid == id)
            .expect("cluster members come from the catalog")
            .1
    };
    let pairs = a.iter().flat_map(|x| b.iter().map(move |y| (*x, *y)));
    match linkage {
        Linkage::Single | Linkage::Complete => {
            let exacts = pairs.map(|(x, y)| {
                exact_distance(vector_of(x), vector_of(y), metric).expect("uniform length")
            });
            let chosen = if linkage == Linkage::Single {
                exacts.min()
            } else {
                exacts.max()
            }
            .expect("clusters are non-empty");
            (
                DistKey::Ratio(u128::from(chosen.0), 1),
                chosen.as_f64(metric),
            )
        }
        Linkage::Average => {
            let count = (a.len() * b.len()) as u128;
            match metric {
                Metric::L1 | Metric::Linf => {
                    let sum: u128 = pairs
                        .map(|(x, y)| {
                            u128::from(
                                exact_distance(vector_of(x), vector_of(y), metric)
                                    .expect("uniform length")
                                    .0,
                            )
                        })
                        .sum();
                    (DistKey::Ratio(sum, count), sum as f64 / count as f64)
                }
                Metric::L2 => {
                    let sum: f64 = pairs
                        .map(|(x, y)| {
                            exact_distance(vector_of(x), vector_of(y), metric)
                                .expect("uniform length")
                                .as_f64(metric)
                        })
                        .sum();
                    let mean = sum / count as f64;
                    (DistKey::Approx(mean), mean)
                }
            }
        }
    }
}

/// Builds the full merge history for a catalog's operations. Deterministic:
/// distance ties merge the pair whose `(min id, max id)` over the two
/// clusters' smallest members is lexicographically least.
pub fn agglomerate(catalog: &Catalog, metric: Metric, linkage: Linkage) -> Dendrogram {
    let vectors: Vec<(u32, Vec<u8>)> = catalog
        .operations
        .iter()
        .map(|op| (op.id, op.estimates.clone()))
        .collect();
    let mut leaves: Vec<u32> = vectors.iter().map(|(id, _)| *id).collect();
    leaves.sort_unstable();
    let mut clusters: Vec<BTreeSet<u32>> = leaves.iter().map(|id| BTreeSet::from([*id])).collect();
    let mut merges = Vec::new();
    while clusters.len() > 1 {
        let mut best: Option<(DistKey, (u32, u32), usize, usize, f64)> = None;
        for i in 0..clusters.len() {
            for j in (i + 1)..clusters.len() {
                let (key, display) =
                    cluster_distance(&clusters[i], &clusters[j], &vectors, metric, linkage);
                let min_i = *clusters[i].iter().next().expect("non-empty");
                let min_j = *clusters[j].iter().next().expect("non-empty");
                let tie = (min_i.min(min_j), min_i.max(min_j));
                let better = match &best {
                    None => true,
                    Some((best_key, best_tie, ..)) => match key.compare(best_key) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => tie < *best_tie,
                    },
                };
                if better {
                    best = Some((key, tie, i, j, display));
                }
            }
        }
        let (_, _, i, j, display) = best.expect("at least two clusters remain");
        let right = clusters.remove(j);
        let left = clusters.remove(i);
        merges.push(Merge {
            left: left.clone(),
            right: right.clone(),
            distance: display,
        });
        let mut union = left;
        union.extend(right);
        clusters.push(union);
        clusters.sort_by_key(|c| *c.iter().next().expect("non-empty"));
    }
    Dendrogram { leaves, merges }
}

/// Replays the first `steps` merges into a flat partition of
/// `n − steps` clusters, ordered by smallest member.
pub fn partition_after(dendrogram: &Dendrogram, steps: usize) -> Result<Partition, ClusterError> {
    let max = dendrogram.merges.len();
    if steps > max {
        return Err(ClusterError::StepsOutOfRange { steps, max });
    }
    let mut clusters: Vec<BTreeSet<u32>> = dendrogram
        .leaves
        .iter()
        .map(|id| BTreeSet::from([*id]))
        .collect();
    for merge in &dendrogram.merges[..steps] {
        let mut union = BTreeSet::new();
        clusters.retain(|cluster| {
            if cluster == &merge.left || cluster == &merge.right {
                union.extend(cluster.iter().copied());
                false
            } else {
                true
            }
        });
        clusters.push(union);
    }
    clusters.sort_by_key(|c| c.iter().next().copied());
    Ok(Partition { clusters })
}

/// Rand index between two partitions of the same operation set: the share
/// of unordered pairs on whose togetherness the partitions agree (1 =
/// identical grouping).
pub fn rand_index(a: &Partition, b: &Partition) -> Result<f64, ClusterError> {
    let universe = a.ids();
    if universe != b.ids() {
        return Err(ClusterError::MismatchedUniverse);
    }
    let ids: Vec<u32> = universe.into_iter().collect();
    if ids.len() < 2 {
        return Ok(1.0);
    }
    let cluster_of = |partition: &Partition, id: u32| -> usize {
        partition
            .clusters
            .iter()
            .position(|cluster| cluster.contains(&id))
            .expect("ids() members are in some cluster")
    };
    let mut agreements = 0u64;
    let mut total = 0u64;
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            total += 1;
            let together_a = cluster_of(a, ids[i]) == cluster_of(a, ids[j]);
            let together_b = cluster_of(b, ids[i]) == cluster_of(b, ids[j]);
            if together_a == together_b {
                agreements += 1;
            }
        }
    }
    Ok(agreements as f64 / total as f64)
}

fn ids_cell(ids: &BTreeSet<u32>) -> String {
    ids.iter()
        .map(|id| id.to_string())
        .collect::<Vec<String>>()
        .join(" ")
}

/// CSV of a dendrogram's merge steps, header `step,left,right,distance`;
/// the cluster cells list ascending operation ids separated by spaces.
pub fn merges_to_csv(dendrogram: &Dendrogram) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["step", "left", "right", "distance"])
        .expect("in-memory write");
    for (index, merge) in dendrogram.merges.iter().enumerate() {
        writer
            .write_record([
                (index + 1).to_string(),
                ids_cell(&merge.left),
                ids_cell(&merge.right),
                merge.distance.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}

/// CSV of a flat clustering, header `cluster,operations`; one row per
/// cluster in partition order, ids separated by spaces.
pub fn partition_to_csv(partition: &Partition) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["cluster", "operations"])
        .expect("in-memory write");
    for (index, cluster) in partition.clusters.iter().enumerate() {
        writer
            .write_record([(index + 1).to_string(), ids_cell(cluster)])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
}
