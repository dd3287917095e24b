//! Aggregation of several preliminary forecasts into one resultant
//! forecast.
//!
//! Two strategies are provided. Strategy I (extension) starts from a
//! kernel — typically the intersection of the input forecasts — and adds
//! budgeted candidate operations chosen by the knapsack solver. Strategy
//! II (compression) starts from the superstructure — the union — and
//! deletes candidate operations chosen by the minimum-cost-cover solver
//! until the deletion threshold is met.
//!
//! Candidate tables are input data: each row carries an operation id, a
//! priority rank (turned into a profit/cost by the catalog's transform),
//! and a weight taken from the first criterion column of the estimates.
//! The bundled tables for the reference corpus are available through
//! [`builtin_addition_candidates`] and [`builtin_deletion_candidates`];
//! [`suggest_candidates`] lists superstructure ∖ kernel as a starting
//! point for writing new ones.

use crate::catalog::{Catalog, CatalogError};
use crate::forecast::{Forecast, ForecastError, ForecastOrigin};
use crate::solve::{
    knapsack_solve, mincover_solve, CoverInstance, CoverItem, Item, KnapsackInstance, Selection,
    SelectionStatus, SolveError, SolveMode,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Errors from forecast aggregation.
#[derive(Debug, Error, PartialEq)]
pub enum AggregateError {
    #[error("aggregation needs at least two forecasts, found {found}")]
    TooFewForecasts { found: usize },
    #[error("candidate Φ{id} appears twice in the candidate table")]
    DuplicateCandidate { id: u32 },
    #[error("candidate Φ{id} is already in the kernel")]
    CandidateInKernel { id: u32 },
    #[error("candidate Φ{id} is not in the superstructure")]
    CandidateOutsideSuperstructure { id: u32 },
    #[error("the candidate amounts cannot reach the deletion threshold")]
    InfeasibleCompression,
    #[error("candidate table: {0}")]
    Csv(String),
    #[error(transparent)]
    Forecast(#[from] ForecastError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// One row of a candidate table: an operation offered for addition or
/// deletion, with its priority rank and its weight (the first-criterion
/// estimate, doubling as the deletion amount).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub id: u32,
    pub priority: u32,
    pub weight: u64,
}

/// How the kernel of strategy I is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum KernelPolicy {
    /// Operations present in every input forecast.
    #[default]
    Intersection,
    /// Operations present in at least ⌈k/2⌉ of the k input forecasts.
    Majority,
    /// A caller-supplied set.
    Explicit(BTreeSet<u32>),
}

/// Which aggregation strategy produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Strategy I: kernel extension by knapsack-selected additions.
    Extension,
    /// Strategy II: superstructure compression by cover-selected deletions.
    Compression,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Extension => "I",
            Strategy::Compression => "II",
        })
    }
}

/// A resultant forecast plus the decision trail that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregatedForecast {
    pub forecast: Forecast,
    pub strategy: Strategy,
    /// One flag per candidate, in candidate-table order: `true` when the
    /// candidate was added (strategy I) or deleted (strategy II).
    pub decision_vector: Vec<bool>,
    /// The raw solver selection over the candidate table (candidate-priced
    /// value and weight, unlike the forecast's catalog-priced totals).
    pub selection: Selection,
}

/// Intersection of the forecasts' operation sets. Needs at least two
/// forecasts.
pub fn substructure(forecasts: &[Forecast]) -> Result<BTreeSet<u32>, AggregateError> {
    if forecasts.len() < 2 {
        return Err(AggregateError::TooFewForecasts {
            found: forecasts.len(),
        });
    }
    let mut result = forecasts[0].operations.clone();
    for forecast in &forecasts[1..] {
        result = result.intersection(&forecast.operations).copied().collect();
    }
    Ok(result)
}

/// Union of the forecasts' operation sets. Needs at least two forecasts.
pub fn superstructure(forecasts: &[Forecast]) -> Result<BTreeSet<u32>, AggregateError> {
    if forecasts.len() < 2 {
        return Err(AggregateError::TooFewForecasts {
            found: forecasts.len(),
        });
    }
    Ok(forecasts
        .iter()
        .flat_map(|forecast| forecast.operations.iter().copied())
        .collect())
}

/// The strategy-I starting set under the given policy.
pub fn kernel(
    forecasts: &[Forecast],
    policy: &KernelPolicy,
) -> Result<BTreeSet<u32>, AggregateError> {
    match policy {
        KernelPolicy::Intersection => substructure(forecasts),
        KernelPolicy::Majority => {
            if forecasts.len() < 2 {
                return Err(AggregateError::TooFewForecasts {
                    found: forecasts.len(),
                });
            }
            let quorum = forecasts.len().div_ceil(2);
            let all: BTreeSet<u32> = forecasts
                .iter()
                .flat_map(|forecast| forecast.operations.iter().copied())
                .collect();
            Ok(all
                .into_iter()
                .filter(|id| {
                    forecasts
                        .iter()
                        .filter(|forecast| forecast.operations.contains(id))
                        .count()
                        >= quorum
                })
                .collect())
        }
        KernelPolicy::Explicit(set) => Ok(set.clone()),
    }
}

/// Candidate ids worth considering: superstructure ∖ kernel.
pub fn suggest_candidates(
    forecasts: &[Forecast],
    policy: &KernelPolicy,
) -> Result<BTreeSet<u32>, AggregateError> {
    let kernel = kernel(forecasts, policy)?;
    Ok(superstructure(forecasts)?
        .difference(&kernel)
        .copied()
        .collect())
}

fn check_unique(candidates: &[Candidate]) -> Result<(), AggregateError> {
    let mut seen = BTreeSet::new();
    for candidate in candidates {
        if !seen.insert(candidate.id) {
            return Err(AggregateError::DuplicateCandidate { id: candidate.id });
        }
    }
    Ok(())
}

/// Strategy I: extends the kernel by candidates chosen with the knapsack
/// solver (weights and budget from the candidate table, profits from the
/// candidates' priorities via the catalog's transform). The result's
/// operations are kernel ∪ chosen; its totals are catalog-priced.
pub fn extend_kernel(
    catalog: &Catalog,
    kernel: &BTreeSet<u32>,
    candidates: &[Candidate],
    budget: u64,
    mode: SolveMode,
) -> Result<AggregatedForecast, AggregateError> {
    check_unique(candidates)?;
    if let Some(candidate) = candidates.iter().find(|c| kernel.contains(&c.id)) {
        return Err(AggregateError::CandidateInKernel { id: candidate.id });
    }
    let items: Result<Vec<Item>, AggregateError> = candidates
        .iter()
        .map(|candidate| {
            Ok(Item {
                id: candidate.id,
                profit: catalog.transform.profit(candidate.priority)?,
                weight: candidate.weight,
            })
        })
        .collect();
    let instance = KnapsackInstance {
        items: items?,
        budget,
        precedence: Vec::new(),
    };
    let selection = knapsack_solve(&instance, mode)?;
    let chosen: BTreeSet<u32> = selection.chosen.iter().copied().collect();
    let operations: BTreeSet<u32> = kernel.union(&chosen).copied().collect();
    let forecast = Forecast::new(
        "theta-i",
        "Θ^I",
        operations,
        ForecastOrigin::Aggregated,
        catalog,
    )?;
    Ok(AggregatedForecast {
        forecast,
        strategy: Strategy::Extension,
        decision_vector: candidates.iter().map(|c| chosen.contains(&c.id)).collect(),
        selection,
    })
}

/// Strategy II: compresses the superstructure by deleting candidates
/// chosen with the minimum-cost-cover solver (costs from priorities via
/// the transform, amounts and threshold from the candidate table). The
/// result's operations are superstructure ∖ deleted. Fails when even
/// deleting every candidate cannot reach the threshold.
pub fn compress_superstructure(
    catalog: &Catalog,
    superstructure: &BTreeSet<u32>,
    candidates: &[Candidate],
    threshold: u64,
    mode: SolveMode,
) -> Result<AggregatedForecast, AggregateError> {
    check_unique(candidates)?;
    if let Some(candidate) = candidates.iter().find(|c| !superstructure.contains(&c.id)) {
        return Err(AggregateError::CandidateOutsideSuperstructure { id: candidate.id });
    }
    let items: Result<Vec<CoverItem>, AggregateError> = candidates
        .iter()
        .map(|candidate| {
            Ok(CoverItem {
                id: candidate.id,
                cost: catalog.transform.profit(candidate.priority)?,
                amount: candidate.weight,
            })
        })
        .collect();
    let instance = CoverInstance {
        items: items?,
        threshold,
    };
    let selection = mincover_solve(&instance, mode)?;
    if selection.status == SelectionStatus::Infeasible {
        return Err(AggregateError::InfeasibleCompression);
    }
    let deleted: BTreeSet<u32> = selection.chosen.iter().copied().collect();
    let operations: BTreeSet<u32> = superstructure.difference(&deleted).copied().collect();
    let forecast = Forecast::new(
        "theta-ii",
        "Θ^II",
        operations,
        ForecastOrigin::Aggregated,
        catalog,
    )?;
    Ok(AggregatedForecast {
        forecast,
        strategy: Strategy::Compression,
        decision_vector: candidates.iter().map(|c| deleted.contains(&c.id)).collect(),
        selection,
    })
}

// ---------------------------------------------------------------------------
// Candidate tables
// ---------------------------------------------------------------------------

/// The bundled strategy-I addition table: five candidates with priorities
/// and first-criterion weights, solved at budget 8.
pub fn builtin_addition_candidates() -> Vec<Candidate> {
    [(10, 1, 2), (13, 3, 3), (17, 3, 3), (3, 1, 3), (15, 2, 3)]
        .into_iter()
        .map(|(id, priority, weight)| Candidate {
            id,
            priority,
            weight,
        })
        .collect()
}

/// The bundled strategy-II deletion table: seven candidates, threshold 8.
pub fn builtin_deletion_candidates() -> Vec<Candidate> {
    [
        (10, 1, 2),
        (13, 3, 3),
        (7, 4, 3),
        (8, 2, 3),
        (14, 2, 3),
        (3, 1, 3),
        (17, 3, 3),
    ]
    .into_iter()
    .map(|(id, priority, weight)| Candidate {
        id,
        priority,
        weight,
    })
    .collect()
}

/// Parses a candidate table from CSV with header `id,priority,weight`.
pub fn load_candidates_csv(text: &str) -> Result<Vec<Candidate>, AggregateError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut candidates = Vec::new();
    for row in reader.deserialize() {
        let candidate: Candidate = row.map_err(|e| AggregateError::Csv(e.to_string()))?;
        candidates.push(candidate);
    }
    check_unique(&candidates)?;
    Ok(candidates)
}

/// Serializes a candidate table as CSV with header `id,priority,weight`.
pub fn save_candidates_csv(candidates: &[Candidate]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for candidate in candidates {
        writer
            .serialize(candidate)
            .expect("writing to memory cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("CSV output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_catalog;
    use crate::forecast::{apply_operations, expert_forecast, ApplyStyle};
    use crate::model::builtin_generations;
    use proptest::prelude::*;

    const EXPERT_SET: [u32; 12] = [1, 2, 3, 5, 7, 9, 10, 13, 14, 15, 16, 17];
    const KNAPSACK_SET: [u32; 8] = [1, 2, 4, 5, 6, 7, 8, 9];
    const MCKP_SET: [u32; 8] = [2, 4, 5, 6, 7, 9, 11, 15];

    fn trio() -> Vec<Forecast> {
        let catalog = builtin_catalog();
        vec![
            expert_forecast(&catalog, "Φ~", EXPERT_SET).unwrap(),
            expert_forecast(&catalog, "Φ^", KNAPSACK_SET).unwrap(),
            expert_forecast(&catalog, "Φ-", MCKP_SET).unwrap(),
        ]
    }

    fn set(ids: &[u32]) -> BTreeSet<u32> {
        ids.iter().copied().collect()
    }

    #[test]
    fn substructure_of_the_trio_is_the_direct_intersection() {
        assert_eq!(substructure(&trio()).unwrap(), set(&[2, 5, 7, 9]));
    }

    #[test]
    fn superstructure_of_the_trio_omits_only_twelve() {
        let expected: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        assert_eq!(superstructure(&trio()).unwrap(), expected);
    }

    #[test]
    fn set_algebra_requires_two_forecasts() {
        let one = trio()[..1].to_vec();
        assert_eq!(
            substructure(&one),
            Err(AggregateError::TooFewForecasts { found: 1 })
        );
        assert_eq!(
            superstructure(&one),
            Err(AggregateError::TooFewForecasts { found: 1 })
        );
    }

    #[test]
    fn intersection_and_union_of_identical_forecasts_are_identity() {
        let catalog = builtin_catalog();
        let forecast = expert_forecast(&catalog, "x", EXPERT_SET).unwrap();
        let pair = vec![forecast.clone(), forecast.clone()];
        assert_eq!(substructure(&pair).unwrap(), forecast.operations);
        assert_eq!(superstructure(&pair).unwrap(), forecast.operations);
    }

    #[test]
    fn substructure_and_superstructure_bracket_every_input() {
        let forecasts = trio();
        let sub = substructure(&forecasts).unwrap();
        let sup = superstructure(&forecasts).unwrap();
        for forecast in &forecasts {
            assert!(sub.is_subset(&forecast.operations));
            assert!(forecast.operations.is_subset(&sup));
        }
    }

    #[test]
    fn majority_kernel_takes_operations_in_at_least_half() {
        let result = kernel(&trio(), &KernelPolicy::Majority).unwrap();
        assert_eq!(result, set(&[1, 2, 4, 5, 6, 7, 9, 15]));
    }

    #[test]
    fn explicit_kernel_passes_through() {
        let wanted = set(&[2, 5, 6]);
        assert_eq!(
            kernel(&trio(), &KernelPolicy::Explicit(wanted.clone())).unwrap(),
            wanted
        );
    }

    #[test]
    fn suggested_candidates_are_the_superstructure_without_the_kernel() {
        let forecasts = trio();
        let suggested = suggest_candidates(&forecasts, &KernelPolicy::Intersection).unwrap();
        let expected: BTreeSet<u32> = (1..=17)
            .filter(|id| ![2, 5, 7, 9, 12].contains(id))
            .collect();
        assert_eq!(suggested, expected);
    }

    #[test]
    fn extension_on_the_bundled_table_reaches_profit_eight() {
        let catalog = builtin_catalog();
        let kernel = set(&[2, 5, 6]);
        let result = extend_kernel(
            &catalog,
            &kernel,
            &builtin_addition_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        assert_eq!(result.selection.chosen, vec![3, 10, 15]);
        assert_eq!(result.selection.total_value, 8);
        assert_eq!(result.selection.total_load, 8);
        assert_eq!(result.strategy, super::Strategy::Extension);
        // Candidate order is (Φ10, Φ13, Φ17, Φ3, Φ15).
        assert_eq!(result.decision_vector, vec![true, false, false, true, true]);
        assert_eq!(result.forecast.operations, set(&[2, 3, 5, 6, 10, 15]));
        assert!(kernel.is_subset(&result.forecast.operations));
    }

    #[test]
    fn greedy_extension_matches_the_exact_choice_here() {
        let catalog = builtin_catalog();
        let kernel = set(&[2, 5, 6]);
        let greedy = extend_kernel(
            &catalog,
            &kernel,
            &builtin_addition_candidates(),
            8,
            SolveMode::Greedy,
        )
        .unwrap();
        assert_eq!(greedy.selection.chosen, vec![3, 10, 15]);
        assert_eq!(greedy.selection.total_value, 8);
    }

    #[test]
    fn extension_with_zero_budget_keeps_the_kernel() {
        let catalog = builtin_catalog();
        let kernel = set(&[2, 5, 6]);
        let result = extend_kernel(
            &catalog,
            &kernel,
            &builtin_addition_candidates(),
            0,
            SolveMode::Exact,
        )
        .unwrap();
        assert_eq!(result.forecast.operations, kernel);
        assert!(result.decision_vector.iter().all(|flag| !flag));
    }

    #[test]
    fn extension_beats_the_reported_selection() {
        let catalog = builtin_catalog();
        let exact = extend_kernel(
            &catalog,
            &set(&[2, 5, 6]),
            &builtin_addition_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        // The reported decision vector (1,1,0,0,1) reaches profit 6.
        assert!(exact.selection.total_value >= 6);
    }

    #[test]
    fn extension_rejects_candidates_already_in_the_kernel() {
        let catalog = builtin_catalog();
        let result = extend_kernel(
            &catalog,
            &set(&[10, 2]),
            &builtin_addition_candidates(),
            8,
            SolveMode::Exact,
        );
        assert_eq!(result, Err(AggregateError::CandidateInKernel { id: 10 }));
    }

    #[test]
    fn compression_on_the_bundled_table_deletes_at_cost_two() {
        let catalog = builtin_catalog();
        let superstructure: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        let result = compress_superstructure(
            &catalog,
            &superstructure,
            &builtin_deletion_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        assert_eq!(result.selection.chosen, vec![7, 13, 17]);
        assert_eq!(result.selection.total_value, 2);
        assert_eq!(result.selection.total_load, 9);
        assert_eq!(result.strategy, super::Strategy::Compression);
        // Candidate order is (Φ10, Φ13, Φ7, Φ8, Φ14, Φ3, Φ17).
        assert_eq!(
            result.decision_vector,
            vec![false, true, true, false, false, false, true]
        );
        let expected: BTreeSet<u32> = (1..=17)
            .filter(|id| ![7, 12, 13, 17].contains(id))
            .collect();
        assert_eq!(result.forecast.operations, expected);
        assert!(result.forecast.operations.is_subset(&superstructure));
    }

    #[test]
    fn compression_beats_the_reported_deletion() {
        let catalog = builtin_catalog();
        let superstructure: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        let exact = compress_superstructure(
            &catalog,
            &superstructure,
            &builtin_deletion_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        // The reported decision vector (0,1,1,1,0,0,1) deletes at cost 4.
        assert!(exact.selection.total_value <= 4);
    }

    #[test]
    fn compression_with_zero_threshold_deletes_nothing() {
        let catalog = builtin_catalog();
        let superstructure: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        let result = compress_superstructure(
            &catalog,
            &superstructure,
            &builtin_deletion_candidates(),
            0,
            SolveMode::Exact,
        )
        .unwrap();
        assert_eq!(result.forecast.operations, superstructure);
        assert!(result.decision_vector.iter().all(|flag| !flag));
    }

    #[test]
    fn compression_reports_an_unreachable_threshold() {
        let catalog = builtin_catalog();
        let superstructure: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        let result = compress_superstructure(
            &catalog,
            &superstructure,
            &builtin_deletion_candidates(),
            100,
            SolveMode::Exact,
        );
        assert_eq!(result, Err(AggregateError::InfeasibleCompression));
    }

    #[test]
    fn compression_rejects_candidates_outside_the_superstructure() {
        let catalog = builtin_catalog();
        let result = compress_superstructure(
            &catalog,
            &set(&[1, 2, 3]),
            &builtin_deletion_candidates(),
            8,
            SolveMode::Exact,
        );
        assert_eq!(
            result,
            Err(AggregateError::CandidateOutsideSuperstructure { id: 10 })
        );
    }

    #[test]
    fn duplicate_candidates_are_rejected() {
        let catalog = builtin_catalog();
        let mut candidates = builtin_addition_candidates();
        candidates.push(candidates[0]);
        assert_eq!(
            extend_kernel(&catalog, &set(&[2]), &candidates, 8, SolveMode::Exact),
            Err(AggregateError::DuplicateCandidate { id: 10 })
        );
    }

    #[test]
    fn aggregated_results_materialize_cleanly() {
        let catalog = builtin_catalog();
        let base = &builtin_generations()[2];
        let extension = extend_kernel(
            &catalog,
            &set(&[2, 5, 6]),
            &builtin_addition_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        apply_operations(
            base,
            &extension.forecast,
            &catalog,
            ApplyStyle::Contributions,
        )
        .unwrap();
        let superstructure: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
        let compression = compress_superstructure(
            &catalog,
            &superstructure,
            &builtin_deletion_candidates(),
            8,
            SolveMode::Exact,
        )
        .unwrap();
        apply_operations(
            base,
            &compression.forecast,
            &catalog,
            ApplyStyle::Contributions,
        )
        .unwrap();
    }

    #[test]
    fn candidate_tables_round_trip_through_csv() {
        let candidates = builtin_deletion_candidates();
        let text = save_candidates_csv(&candidates);
        assert!(text.starts_with("id,priority,weight\n"));
        assert_eq!(load_candidates_csv(&text).unwrap(), candidates);
        assert!(matches!(
            load_candidates_csv("id,priority,weight\n1,not-a-number,2\n"),
            Err(AggregateError::Csv(_))
        ));
    }

    prop_compose! {
        fn random_trio()(
            sets in prop::collection::vec(
                prop::collection::btree_set(1u32..=17, 0..=17),
                2..=4,
            ),
        ) -> Vec<Forecast> {
            let catalog = builtin_catalog();
            sets.into_iter()
                .enumerate()
                .map(|(index, ids)| {
                    expert_forecast(&catalog, &format!("f{index}"), ids).unwrap()
                })
                .collect()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn set_algebra_brackets_hold_on_random_forecasts(forecasts in random_trio()) {
            let sub = substructure(&forecasts).unwrap();
            let sup = superstructure(&forecasts).unwrap();
            for forecast in &forecasts {
                prop_assert!(sub.is_subset(&forecast.operations));
                prop_assert!(forecast.operations.is_subset(&sup));
                prop_assert!(sup.len() >= forecast.operations.len());
            }
            let majority = kernel(&forecasts, &KernelPolicy::Majority).unwrap();
            prop_assert!(sub.is_subset(&majority));
            prop_assert!(majority.is_subset(&sup));
            let suggested = suggest_candidates(&forecasts, &KernelPolicy::Majority).unwrap();
            prop_assert!(suggested.is_disjoint(&majority));
        }
    }
}
