//! Acceptance gate for the forecasting engine.
//!
//! Eleven end-to-end criteria, one test each: fixture fidelity, diff
//! regression, solver oracle equivalence, the two desk-scale optima,
//! structure application, forecast set algebra, aggregation optimality,
//! ranking consistency, clustering shape, and Pareto-front correctness.
//! Every test prints one `criterion NN PASS` line with its measured
//! runtime and fails if its runtime budget is exceeded.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use morphocast_core::{
    agglomerate, apply_operations, build_ledger, builtin_addition_candidates, builtin_catalog,
    builtin_deletion_candidates, builtin_generations, compress_superstructure, compute_forecast,
    consistency_violations, diff_generations, dominance, expert_forecast, extend_kernel,
    knapsack_bruteforce, knapsack_exact, knapsack_greedy, leaf_map, mckp_solve, mincover_solve,
    pareto_front, partition_after, rand_index, rank_operations, reported_addition_choice,
    reported_deletion_choice, reported_knapsack_operations, reported_mckp_operations,
    reported_partition, reported_substructure, reported_trio, seeded_cover, seeded_knapsack,
    seeded_mckp, substructure, superstructure, totals_dominate, ApplyStyle, DesignAlternative,
    DominanceVerdict, Forecast, ForecastMethod, ForecastOrigin, Item, KnapsackInstance, Linkage,
    Metric, Node, RankMethod, SolveMode, SplitMix64, SystemModel, Totals,
};

/// Prints the per-criterion PASS line and enforces the runtime budget.
fn finish(number: u32, what: &str, start: Instant, limit_secs: u64) {
    let elapsed = start.elapsed();
    println!("criterion {number:02} PASS — {what} in {elapsed:?}");
    assert!(
        elapsed < Duration::from_secs(limit_secs),
        "criterion {number:02} exceeded its {limit_secs} s budget: took {elapsed:?}"
    );
}

/// Pre-order list of `(composite label, ordered child labels)` pairs.
fn composite_shape(system: &SystemModel) -> Vec<(String, Vec<String>)> {
    fn walk(node: &Node, out: &mut Vec<(String, Vec<String>)>) {
        let children = node.children();
        if children.is_empty() {
            return;
        }
        out.push((
            node.label.clone(),
            children.iter().map(|c| c.label.clone()).collect(),
        ));
        children.iter().for_each(|c| walk(c, out));
    }
    let mut out = Vec::new();
    walk(&system.root, &mut out);
    out
}

fn string_pairs(raw: &[(&str, &[&str])]) -> Vec<(String, Vec<String>)> {
    raw.iter()
        .map(|(label, children)| {
            (
                label.to_string(),
                children.iter().map(|c| c.to_string()).collect(),
            )
        })
        .collect()
}

fn string_map(raw: &[(&str, &[&str])]) -> BTreeMap<String, BTreeSet<String>> {
    raw.iter()
        .map(|(label, ids)| {
            (
                label.to_string(),
                ids.iter().map(|id| id.to_string()).collect(),
            )
        })
        .collect()
}

#[test]
fn criterion_01_bundled_fixtures_match_the_reference_tables() {
    let start = Instant::now();

    // Estimates Υ1..Υ8, priority, and resource for Φ1..Φ17.
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

    let catalog = builtin_catalog();
    assert_eq!(catalog.operations.len(), 17);
    assert_eq!(catalog.schema.criteria.len(), 8);
    let mut cells = 0usize;
    for (index, (estimates, priority, resource)) in TABLE.iter().enumerate() {
        let id = index as u32 + 1;
        let op = catalog.get(id).expect("all seventeen operations exist");
        assert_eq!(op.estimates.as_slice(), estimates, "estimates of Φ{id}");
        cells += op.estimates.len();
        assert_eq!(op.priority, *priority, "priority of Φ{id}");
        assert_eq!(op.resource, *resource, "resource of Φ{id}");
    }
    assert_eq!(cells, 136, "all 136 estimate cells compared");

    // Generation identity, and-or shape, and per-leaf design alternatives.
    let generations = builtin_generations();
    assert_eq!(generations.len(), 4);

    let identity = [
        ("S1", "ZigBee 2004", 9),
        ("S2", "ZigBee 2006", 12),
        ("S3", "ZigBee PRO", 18),
        ("S4", "ZigBee/IP (6LoWPAN) 2010", 18),
    ];
    let shapes: [&[(&str, &[&str])]; 4] = [
        &[("S1", &["A", "B", "C", "D", "E", "F"]), ("C", &["G", "H"])],
        &[
            ("S2", &["A", "B", "I", "C", "D", "E", "K", "F", "L"]),
            ("C", &["G", "H"]),
        ],
        &[
            ("S3", &["A'", "B", "I", "C'", "D", "E", "K", "F'", "L"]),
            ("A'", &["M", "N"]),
            ("C'", &["G", "H", "Q", "P"]),
            ("F'", &["R", "T"]),
        ],
        &[
            (
                "S4",
                &["A'", "B", "I", "C''", "D", "E", "K", "F''", "L", "W"],
            ),
            ("A'", &["M", "N"]),
            ("C''", &["G", "H", "Q", "V"]),
            ("F''", &["U"]),
        ],
    ];
    let leaves: [&[(&str, &[&str])]; 4] = [
        &[
            ("A", &["A1"]),
            ("B", &["B1"]),
            ("D", &["D1"]),
            ("E", &["E1"]),
            ("F", &["F1"]),
            ("G", &["G1"]),
            ("H", &["H1"]),
        ],
        &[
            ("A", &["A1"]),
            ("B", &["B1"]),
            ("D", &["D1"]),
            ("E", &["E1"]),
            ("F", &["F1"]),
            ("G", &["G1"]),
            ("H", &["H1"]),
            ("I", &["I1"]),
            ("K", &["K1"]),
            ("L", &["L1"]),
        ],
        &[
            ("B", &["B2"]),
            ("D", &["D2"]),
            ("E", &["E2"]),
            ("G", &["G1"]),
            ("H", &["H1"]),
            ("I", &["I1"]),
            ("K", &["K1"]),
            ("L", &["L1"]),
            ("M", &["M1"]),
            ("N", &["N1"]),
            ("P", &["P1"]),
            ("Q", &["Q1"]),
            ("R", &["R1"]),
            ("T", &["T1"]),
        ],
        &[
            ("B", &["B1", "B2"]),
            ("D", &["D2"]),
            ("E", &["E3"]),
            ("G", &["G1"]),
            ("H", &["H1"]),
            ("I", &["I1"]),
            ("K", &["K1"]),
            ("L", &["L1"]),
            ("M", &["M1"]),
            ("N", &["N1"]),
            ("Q", &["Q1"]),
            ("U", &["U1", "U2"]),
            ("V", &["V1", "V2"]),
            ("W", &["W1"]),
        ],
    ];

    for (i, generation) in generations.iter().enumerate() {
        let (id, name, nodes) = identity[i];
        assert_eq!(generation.id, id);
        assert_eq!(generation.name, name);
        assert_eq!(generation.node_count(), nodes, "node count of {id}");
        assert_eq!(
            composite_shape(generation),
            string_pairs(shapes[i]),
            "composite shape of {id}"
        );
        assert_eq!(
            leaf_map(generation),
            string_map(leaves[i]),
            "leaves of {id}"
        );
    }

    finish(
        1,
        "bundled catalog and generations match the reference tables cell for cell",
        start,
        1,
    );
}

#[test]
fn criterion_02_generation_diffs_carry_the_reference_type_codes() {
    let start = Instant::now();
    let generations = builtin_generations();

    // Sorted multiset of operation type codes per transition.
    let expected: [&[&str]; 3] = [
        &["O7", "O7", "O7"],
        &["O1", "O1", "O1", "O5", "O5", "O5", "O5", "O5", "O5"],
        &["O1", "O3", "O5", "O5", "O7"],
    ];
    for (i, expected_codes) in expected.iter().enumerate() {
        let records = diff_generations(&generations[i], &generations[i + 1]);
        let mut codes: Vec<String> = records
            .iter()
            .filter_map(|r| r.type_code.map(|c| c.to_string()))
            .collect();
        codes.sort();
        assert_eq!(
            codes,
            *expected_codes,
            "type codes of the S{}→S{} transition",
            i + 1,
            i + 2
        );
    }

    // The first transition's coded records are the subsystem additions I, K, L.
    let first = diff_generations(&generations[0], &generations[1]);
    let added: BTreeSet<String> = first
        .iter()
        .filter(|r| r.type_code.is_some())
        .filter_map(|r| r.path.last().cloned())
        .collect();
    let expected_added: BTreeSet<String> = ["I", "K", "L"].iter().map(|s| s.to_string()).collect();
    assert_eq!(added, expected_added);

    finish(
        2,
        "all three generation diffs carry the reference operation type codes",
        start,
        1,
    );
}

#[test]
fn criterion_03_exact_solvers_match_brute_force_on_random_instances() {
    let start = Instant::now();
    let mut checked = 0usize;

    for run in 0..170u64 {
        let instance = seeded_knapsack(0x5EED_0001 + run, 15);
        let exact = knapsack_exact(&instance).expect("valid generated instance");
        let brute = knapsack_bruteforce(&instance).expect("valid generated instance");
        assert_eq!(exact, brute, "knapsack divergence at seed offset {run}");
        checked += 1;
    }
    for run in 0..165u64 {
        let instance = seeded_mckp(0x5EED_0002 + run, 5);
        let exact = mckp_solve(&instance, SolveMode::Exact).expect("valid generated instance");
        let brute = mckp_solve(&instance, SolveMode::Bruteforce).expect("valid generated instance");
        assert_eq!(
            exact, brute,
            "grouped-choice divergence at seed offset {run}"
        );
        checked += 1;
    }
    for run in 0..165u64 {
        let instance = seeded_cover(0x5EED_0003 + run, 15);
        let exact = mincover_solve(&instance, SolveMode::Exact).expect("valid generated instance");
        let brute =
            mincover_solve(&instance, SolveMode::Bruteforce).expect("valid generated instance");
        assert_eq!(exact, brute, "cover divergence at seed offset {run}");
        checked += 1;
    }
    assert_eq!(checked, 500);

    finish(
        3,
        "exact solutions equal brute force in value and tie-broken choice on 500 random instances",
        start,
        30,
    );
}

/// The built-in catalog as a knapsack instance: profits from the transform,
/// weights from the resource column.
fn catalog_knapsack(budget: u64) -> KnapsackInstance {
    let catalog = builtin_catalog();
    let items: Vec<Item> = catalog
        .operations
        .iter()
        .map(|op| Item {
            id: op.id,
            profit: catalog.profit_of(op.id).expect("priorities are in range"),
            weight: op.resource,
        })
        .collect();
    KnapsackInstance {
        items,
        budget,
        precedence: catalog.precedence_pairs(),
    }
}

#[test]
fn criterion_04_knapsack_desk_scale_optimum() {
    let start = Instant::now();

    for budget in 0..=30u64 {
        let instance = catalog_knapsack(budget);
        let exact = knapsack_exact(&instance).expect("valid instance");
        let brute = knapsack_bruteforce(&instance).expect("valid instance");
        assert_eq!(exact, brute, "divergence at budget {budget}");
    }

    let at_16 = catalog_knapsack(16);
    let exact = knapsack_exact(&at_16).expect("valid instance");
    assert!(
        exact.total_value >= 19,
        "optimum at budget 16 fell below 19: {}",
        exact.total_value
    );
    let greedy = knapsack_greedy(&at_16).expect("valid instance");
    assert_eq!(greedy.chosen, vec![1, 2, 3, 4, 5, 9, 12], "greedy witness");
    assert_eq!(greedy.total_value, 19);
    assert!(greedy.total_load <= 16);

    // The reported eight-operation selection is ledgered as suboptimal.
    let ledger = build_ledger(&builtin_catalog()).expect("bundled corpus ledger");
    let entry = ledger
        .iter()
        .find(|e| e.topic == "knapsack-b16")
        .expect("knapsack entry present");
    assert!(
        entry.reported.contains("profit 16"),
        "reported: {}",
        entry.reported
    );
    assert!(
        entry.computed.contains("profit 19"),
        "computed: {}",
        entry.computed
    );

    finish(
        4,
        "knapsack optimum ≥ 19 at budget 16 across exhaustive budgets 0..=30, reported 16 ledgered",
        start,
        10,
    );
}

#[test]
fn criterion_05_grouped_choice_desk_scale_optimum() {
    let start = Instant::now();
    let catalog = builtin_catalog();

    // One operation per cluster: the exhaustive space is 90 combinations.
    let combinations: usize = reported_partition()
        .clusters
        .iter()
        .map(|cluster| cluster.len())
        .product();
    assert_eq!(combinations, 90);

    let expected: BTreeSet<u32> = [1, 2, 4, 5, 7, 9, 11, 15].into_iter().collect();
    for mode in [SolveMode::Exact, SolveMode::Bruteforce] {
        let forecast = compute_forecast(
            &catalog,
            &ForecastMethod::Mckp {
                partition: reported_partition().clusters,
                budget: 17,
            },
            mode,
        )
        .expect("feasible at budget 17");
        assert_eq!(forecast.operations, expected, "{mode:?} selection");
        assert_eq!(forecast.totals.profit, 16, "{mode:?} profit");
        assert!(forecast.totals.resource <= 17, "{mode:?} budget respected");
    }

    let ledger = build_ledger(&catalog).expect("bundled corpus ledger");
    let entry = ledger
        .iter()
        .find(|e| e.topic == "mckp-b17")
        .expect("grouped-choice entry present");
    assert!(
        entry.reported.contains("profit 14"),
        "reported: {}",
        entry.reported
    );
    assert!(
        entry.computed.contains("profit 16"),
        "computed: {}",
        entry.computed
    );

    finish(
        5,
        "cluster-choice optimum at budget 17 is profit 16 over all 90 combinations, reported 14 ledgered",
        start,
        1,
    );
}

fn da(id: &str) -> DesignAlternative {
    DesignAlternative::new(id, "")
}

/// The structure the reference corpus draws for the knapsack selection.
fn expected_knapsack_structure() -> SystemModel {
    SystemModel {
        id: "expected-knapsack".into(),
        name: String::new(),
        root: Node::composite(
            "S",
            "",
            vec![
                Node::composite("A'", "", vec![Node::leaf("M", "", vec![da("M1")])]),
                Node::leaf("B", "", vec![da("B2")]),
                Node::composite(
                    "C'",
                    "",
                    vec![
                        Node::leaf("P", "", vec![da("P1")]),
                        Node::leaf("Q", "", vec![da("Q1")]),
                    ],
                ),
                Node::leaf("D", "", vec![da("D2")]),
                Node::leaf("E", "", vec![da("E2")]),
                Node::leaf("I", "", vec![da("I1")]),
                Node::leaf("K", "", vec![da("K1")]),
            ],
        ),
    }
}

/// The structure the reference corpus draws for the grouped-choice selection.
fn expected_mckp_structure() -> SystemModel {
    SystemModel {
        id: "expected-mckp".into(),
        name: String::new(),
        root: Node::composite(
            "S",
            "",
            vec![
                Node::composite("A'", "", vec![Node::leaf("M", "", vec![da("M1")])]),
                Node::leaf("B", "", vec![da("B2")]),
                Node::composite("C'", "", vec![Node::leaf("Q", "", vec![da("Q1")])]),
                Node::leaf("D", "", vec![da("D2")]),
                Node::leaf("E", "", vec![da("E2")]),
                Node::composite("F'", "", vec![Node::leaf("R", "", vec![da("R1")])]),
                Node::leaf("K", "", vec![da("K1")]),
                Node::leaf("W", "", vec![da("W1")]),
            ],
        ),
    }
}

#[test]
fn criterion_06_applying_selections_reproduces_the_reference_structures() {
    let start = Instant::now();
    let catalog = builtin_catalog();
    let base = &builtin_generations()[2];

    let knapsack =
        expert_forecast(&catalog, "Φ^", reported_knapsack_operations()).expect("known operations");
    let tree = apply_operations(base, &knapsack, &catalog, ApplyStyle::Contributions)
        .expect("edits apply cleanly");
    assert!(
        tree.same_shape(&expected_knapsack_structure()),
        "knapsack structure mismatch"
    );

    let mckp =
        expert_forecast(&catalog, "Φ-", reported_mckp_operations()).expect("known operations");
    let tree = apply_operations(base, &mckp, &catalog, ApplyStyle::Contributions)
        .expect("edits apply cleanly");
    assert!(
        tree.same_shape(&expected_mckp_structure()),
        "grouped-choice structure mismatch"
    );

    finish(
        6,
        "applying both selections reproduces the reference structures label-for-label",
        start,
        1,
    );
}

#[test]
fn criterion_07_substructure_and_superstructure_algebra() {
    let start = Instant::now();
    let catalog = builtin_catalog();
    let trio = reported_trio(&catalog).expect("bundled forecasts price cleanly");

    let expected_super: BTreeSet<u32> = (1..=17).filter(|id| *id != 12).collect();
    assert_eq!(
        superstructure(&trio).expect("three forecasts"),
        expected_super
    );

    let expected_sub: BTreeSet<u32> = [2, 5, 7, 9].into_iter().collect();
    assert_eq!(substructure(&trio).expect("three forecasts"), expected_sub);

    // The reported substructure {Φ2, Φ5, Φ6} disagrees with the direct
    // intersection and is ledgered.
    let ledger = build_ledger(&catalog).expect("bundled corpus ledger");
    let entry = ledger
        .iter()
        .find(|e| e.topic == "substructure")
        .expect("substructure entry present");
    assert!(
        entry.reported.contains("Φ6"),
        "reported: {}",
        entry.reported
    );
    assert!(
        entry.computed.contains("Φ7") && entry.computed.contains("Φ9"),
        "computed: {}",
        entry.computed
    );

    finish(
        7,
        "superstructure and substructure match direct set algebra, reported divergence ledgered",
        start,
        1,
    );
}

#[test]
fn criterion_08_aggregation_beats_the_reported_decisions() {
    let start = Instant::now();
    let catalog = builtin_catalog();

    // Strategy I: additions over the five-candidate table at weight budget 8.
    let additions = builtin_addition_candidates();
    assert_eq!(additions.len(), 5, "brute force spans 2^5 subsets");
    let kernel = reported_substructure();
    let exact = extend_kernel(&catalog, &kernel, &additions, 8, SolveMode::Exact)
        .expect("feasible extension");
    let brute = extend_kernel(&catalog, &kernel, &additions, 8, SolveMode::Bruteforce)
        .expect("feasible extension");
    assert_eq!(exact.selection, brute.selection);
    assert_eq!(exact.selection.chosen, vec![3, 10, 15]);
    assert_eq!(exact.selection.total_value, 8);
    assert!(exact.selection.total_load <= 8);
    let reported_addition_value: i64 = additions
        .iter()
        .filter(|c| reported_addition_choice().contains(&c.id))
        .map(|c| catalog.transform.profit(c.priority).expect("in range"))
        .sum();
    assert_eq!(reported_addition_value, 6);
    assert!(exact.selection.total_value >= reported_addition_value);

    // Strategy II: deletions over the seven-candidate table at threshold 8.
    let deletions = builtin_deletion_candidates();
    assert_eq!(deletions.len(), 7, "brute force spans 2^7 subsets");
    let trio = reported_trio(&catalog).expect("bundled forecasts price cleanly");
    let envelope = superstructure(&trio).expect("three forecasts");
    let exact = compress_superstructure(&catalog, &envelope, &deletions, 8, SolveMode::Exact)
        .expect("feasible compression");
    let brute = compress_superstructure(&catalog, &envelope, &deletions, 8, SolveMode::Bruteforce)
        .expect("feasible compression");
    assert_eq!(exact.selection, brute.selection);
    assert_eq!(exact.selection.chosen, vec![7, 13, 17]);
    assert_eq!(exact.selection.total_value, 2);
    assert!(exact.selection.total_load >= 8);
    let reported_deletion_cost: i64 = deletions
        .iter()
        .filter(|c| reported_deletion_choice().contains(&c.id))
        .map(|c| catalog.transform.profit(c.priority).expect("in range"))
        .sum();
    assert_eq!(reported_deletion_cost, 4);
    assert!(exact.selection.total_value <= reported_deletion_cost);

    finish(
        8,
        "aggregation optima (addition value 8 ≥ 6, deletion cost 2 ≤ 4) dominate the reported decisions",
        start,
        1,
    );
}

#[test]
fn criterion_09_dominance_never_inverts_the_reference_priorities() {
    let start = Instant::now();
    let catalog = builtin_catalog();

    let mut pairs = 0usize;
    for (i, a) in catalog.operations.iter().enumerate() {
        for b in catalog.operations.iter().skip(i + 1) {
            pairs += 1;
            match dominance(&a.estimates, &b.estimates).expect("uniform length") {
                DominanceVerdict::Dominates => assert!(
                    a.priority <= b.priority,
                    "Φ{} dominates Φ{} yet ranks below it",
                    a.id,
                    b.id
                ),
                DominanceVerdict::Dominated => assert!(
                    b.priority <= a.priority,
                    "Φ{} dominates Φ{} yet ranks below it",
                    b.id,
                    a.id
                ),
                DominanceVerdict::Equal | DominanceVerdict::Incomparable => {}
            }
        }
    }
    assert_eq!(pairs, 136, "all 136 unordered operation pairs compared");

    // The sharpest instance: Φ8 dominates Φ7 and outranks it.
    let op7 = catalog.get(7).expect("operation exists");
    let op8 = catalog.get(8).expect("operation exists");
    assert_eq!(
        dominance(&op8.estimates, &op7.estimates).expect("uniform length"),
        DominanceVerdict::Dominates
    );
    assert_eq!(op8.priority, 2);
    assert_eq!(op7.priority, 4);

    for method in [RankMethod::DominancePeeling, RankMethod::Fixture] {
        let layers = rank_operations(&catalog, method);
        assert!(
            consistency_violations(&catalog, &layers).is_empty(),
            "inconsistent layering"
        );
    }

    finish(
        9,
        "dominance is consistent with the priorities across all 136 pairs and both layerings",
        start,
        1,
    );
}

#[test]
fn criterion_10_clustering_shape_and_partition_agreement() {
    let start = Instant::now();
    let catalog = builtin_catalog();

    let dendrogram = agglomerate(&catalog, Metric::L1, Linkage::Single);
    assert_eq!(
        dendrogram.merges.len(),
        16,
        "seventeen operations agglomerate in sixteen merges"
    );
    let partition = partition_after(&dendrogram, 9).expect("nine merges exist");
    assert_eq!(partition.clusters.len(), 8);

    // Agreement with the reported partition is computed and reported, not
    // thresholded: the parameters behind the reported clusters are unknown.
    let agreement = rand_index(&partition, &reported_partition()).expect("same operation universe");
    assert!(
        (0.0..=1.0).contains(&agreement),
        "Rand index out of range: {agreement}"
    );
    let ledger = build_ledger(&catalog).expect("bundled corpus ledger");
    let entry = ledger
        .iter()
        .find(|e| e.topic == "clusters")
        .expect("clusters entry present");
    assert!(
        entry.computed.contains(&format!("{agreement:.3}")),
        "computed: {}",
        entry.computed
    );

    finish(
        10,
        &format!("16 merges, 8 clusters after 9 steps, Rand index {agreement:.3} reported"),
        start,
        1,
    );
}

#[test]
fn criterion_11_pareto_front_correctness() {
    let start = Instant::now();

    let mut rng = SplitMix64::new(0x0FF1_CE00);
    for round in 0..200u32 {
        let count = 2 + rng.below(10) as usize;
        let forecasts: Vec<Forecast> = (0..count)
            .map(|i| Forecast {
                id: format!("random-{round}-{i}"),
                label: format!("F{i}"),
                operations: BTreeSet::new(),
                origin: ForecastOrigin::Expert,
                totals: Totals {
                    profit: rng.below(20) as i64,
                    resource: 1 + rng.below(19),
                },
            })
            .collect();
        let front = pareto_front(&forecasts);
        assert!(
            !front.is_empty(),
            "round {round}: the front cannot be empty"
        );
        for member in &front {
            assert!(
                !forecasts
                    .iter()
                    .any(|other| totals_dominate(other.totals, member.totals)),
                "round {round}: dominated member retained"
            );
        }
        for excluded in forecasts
            .iter()
            .filter(|f| !front.iter().any(|m| m.id == f.id))
        {
            assert!(
                front
                    .iter()
                    .any(|m| totals_dominate(m.totals, excluded.totals)),
                "round {round}: excluded forecast is undominated"
            );
        }
    }

    // On the bundled trio the expert and knapsack forecasts survive; the
    // grouped-choice forecast is dominated and its exclusion is ledgered.
    let catalog = builtin_catalog();
    let trio = reported_trio(&catalog).expect("bundled forecasts price cleanly");
    let front = pareto_front(&trio);
    let labels: Vec<&str> = front.iter().map(|f| f.label.as_str()).collect();
    assert_eq!(labels, ["Φ~", "Φ^"]);
    let ledger = build_ledger(&catalog).expect("bundled corpus ledger");
    let entry = ledger
        .iter()
        .find(|e| e.topic == "scatter-point")
        .expect("scatter entry present");
    assert!(
        entry.computed.contains("excluded from"),
        "computed: {}",
        entry.computed
    );

    finish(
        11,
        "front correctness on 200 random forecast lists; the grouped-choice exclusion is ledgered",
        start,
        5,
    );
}
