//! morphocast-core: a forecasting engine for the evolution of hierarchical
//! modular systems.
//!
//! A system generation is a morphological (and-or) tree; differences between
//! generations become typed change records; a catalog of improvement
//! operations prices every candidate change on eight ordinal criteria, a
//! priority rank, and a resource requirement. Forecasts of the next
//! generation are operation subsets chosen by expert judgment or by
//! knapsack-family solvers, compared on a Pareto front, and aggregated via
//! kernel extension or superstructure compression. The bundled reference
//! corpus covers four generations of the ZigBee protocol lineage together
//! with its 17-operation catalog and the reference results reported for it.
//!
//! Module map:
//! - [`model`] — morphological trees, parsing/rendering, generation fixtures;
//! - [`diff`] — typed change records between two generations;
//! - [`catalog`] — improvement operations Φ1–Φ17 with estimates and edits;
//! - [`rank`] — dominance and priority layers;
//! - [`cluster`] — agglomerative clustering of operations;
//! - [`solve`] — knapsack, multiple-choice knapsack, and min-cost cover;
//! - [`forecast`] — forecast construction, structure application, Pareto;
//! - [`aggregate`] — kernel extension and superstructure compression;
//! - [`reference`] — reported reference results and the discrepancy ledger.

pub mod aggregate;
pub mod catalog;
pub mod cluster;
pub mod diff;
pub mod forecast;
pub mod model;
pub mod rank;
pub mod reference;
pub mod solve;

pub use aggregate::{
    builtin_addition_candidates, builtin_deletion_candidates, compress_superstructure,
    extend_kernel, kernel, load_candidates_csv, save_candidates_csv, substructure,
    suggest_candidates, superstructure, AggregateError, AggregatedForecast, Candidate,
    KernelPolicy, Strategy,
};
pub use catalog::{
    builtin_catalog, display_op, display_op_set, export_estimates_csv, import_estimates_csv,
    load_catalog, profit_from_priority, save_catalog, Catalog, CatalogError, CriteriaSchema,
    Criterion, EditAction, ImprovementOperation, LeafSpec, ProfitTransform, Relation,
};
pub use cluster::{
    agglomerate, distance, merges_to_csv, partition_after, partition_to_csv, rand_index,
    ClusterError, Dendrogram, Linkage, Merge, Metric, Partition,
};
pub use diff::{
    apply_change_records, classify_change, diff_generations, records_to_csv, ChangeKind,
    ChangeRecord, DiffError, OperationTypeCode,
};
pub use forecast::{
    apply_operations, compute_forecast, expert_forecast, pareto_front, scatter_csv, scatter_svg,
    totals_dominate, ApplyStyle, Forecast, ForecastError, ForecastMethod, ForecastOrigin, Totals,
};
pub use model::{
    builtin_generations, leaf_map, parse_system, render_tree, serialize_system, DesignAlternative,
    ModelError, Node, NodeContent, SystemModel,
};
pub use rank::{
    consistency_violations, dominance, layers_to_csv, peel_layers, rank_operations,
    DominanceVerdict, RankError, RankMethod, RankedLayers,
};
pub use reference::{
    build_ledger, ledger_to_csv, reported_addition_choice, reported_deletion_choice,
    reported_expert_operations, reported_knapsack_operations, reported_label_drift,
    reported_mckp_operations, reported_partition, reported_substructure, reported_trio,
    LedgerEntry, LedgerError, REPORTED_SCATTER_MCKP_PROFIT,
};
pub use solve::{
    knapsack_bruteforce, knapsack_exact, knapsack_greedy, knapsack_solve, load_cover,
    load_knapsack, load_mckp, mckp_solve, mincover_solve, seeded_cover, seeded_knapsack,
    seeded_mckp, CoverInstance, CoverItem, Item, KnapsackInstance, MckpInstance, Selection,
    SelectionStatus, SolveError, SolveMode, SplitMix64,
};
