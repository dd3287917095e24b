use morphocast_cli::run_from;
use morphocast_core::aggregate::extend_kernel;
use morphocast_core::catalog::{builtin_catalog, save_catalog, Catalog};
use morphocast_core::cluster::{agglomerate, partition_after, partition_to_csv, Linkage, Metric};
use morphocast_core::diff::{diff_generations, records_to_csv};
use morphocast_core::forecast::{
    apply_operations, compute_forecast, expert_forecast, ApplyStyle, ForecastMethod,
};
use morphocast_core::model::{builtin_generations, render_tree};
use morphocast_core::rank::{layers_to_csv, rank_operations, RankMethod};
use morphocast_core::reference::reported_trio;
use morphocast_core::solve::{knapsack_solve, KnapsackInstance, SolveMode};
use std::collections::BTreeSet;
use std::io::Write as _;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("morphocast")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_from(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}

fn temp_file(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write temp file");
    file
}

#[test]
fn fixtures_lists_generations_and_the_catalog_summary() {
    let (code, out, _) = run(&["fixtures", "--list"]);
    assert_eq!(code, 0);
    for name in ["S1", "S2", "S3", "S̃4"] {
        assert!(out.contains(name), "missing {name} in:\n{out}");
    }
    assert!(out.contains("17 operations"));
    assert!(out.contains("Φ17"));
}

#[test]
fn diff_s1_to_s2_prints_the_three_subsystem_additions() {
    let (code, out, _) = run(&["diff", "--from", "S1", "--to", "S2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|line| line.contains("O7")));
}

#[test]
fn diff_csv_equals_the_core_emitter() {
    let (code, out, _) = run(&["diff", "--from", "S2", "--to", "S3", "--format", "csv"]);
    assert_eq!(code, 0);
    let generations = builtin_generations();
    assert_eq!(
        out,
        records_to_csv(&diff_generations(&generations[1], &generations[2]))
    );
}

#[test]
fn greedy_knapsack_forecast_csv_matches_core() {
    let (code, out, _) = run(&[
        "forecast", "knapsack", "--budget", "16", "--mode", "greedy", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let catalog = builtin_catalog();
    let forecast = compute_forecast(
        &catalog,
        &ForecastMethod::Knapsack { budget: 16 },
        SolveMode::Greedy,
    )
    .unwrap();
    let mut expected = String::from("id,profit,resource\n");
    for id in &forecast.operations {
        expected.push_str(&format!(
            "{id},{},{}\n",
            catalog.profit_of(*id).unwrap(),
            catalog.get(*id).unwrap().resource
        ));
    }
    assert_eq!(out, expected);
}

#[test]
fn mckp_partition_file_overrides_the_bundled_partition() {
    // A partition must cover all 17 operations; two coarse groups force
    // exactly two picks, unlike the bundled eight-cluster partition.
    let partition = temp_file("[[1,2,3,4,5,6,7,8,9],[10,11,12,13,14,15,16,17]]");
    let (code, out, _) = run(&[
        "forecast",
        "mckp",
        "--budget",
        "17",
        "--partition",
        partition.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let catalog = builtin_catalog();
    let forecast = compute_forecast(
        &catalog,
        &ForecastMethod::Mckp {
            partition: vec![
                (1..=9).collect::<BTreeSet<u32>>(),
                (10..=17).collect::<BTreeSet<u32>>(),
            ],
            budget: 17,
        },
        SolveMode::Exact,
    )
    .unwrap();
    assert_eq!(forecast.operations.len(), 2);
    assert!(out.contains(&forecast.label));
    assert!(out.contains(&forecast.totals.to_string()));
    let (_, bundled_out, _) = run(&["forecast", "mckp", "--budget", "17"]);
    assert_ne!(out, bundled_out);
}

#[test]
fn forecast_apply_renders_the_same_tree_as_core() {
    let (code, out, _) = run(&[
        "forecast",
        "expert",
        "--ops",
        "13,14,15,16,17",
        "--apply",
        "overlay",
        "--base",
        "S3",
    ]);
    assert_eq!(code, 0);
    let catalog = builtin_catalog();
    let forecast = expert_forecast(&catalog, "expert", [13, 14, 15, 16, 17]).unwrap();
    let applied = apply_operations(
        &builtin_generations()[2],
        &forecast,
        &catalog,
        ApplyStyle::Overlay,
    )
    .unwrap();
    assert_eq!(out, render_tree(&applied, "text").unwrap());
}

#[test]
fn compare_csv_and_svg_match_the_core_emitters() {
    let trio = reported_trio(&builtin_catalog()).unwrap();
    let (code, csv_out, _) = run(&["compare", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv_out, morphocast_core::forecast::scatter_csv(&trio));
    let (code, svg_out, _) = run(&["compare", "--format", "svg"]);
    assert_eq!(code, 0);
    assert_eq!(svg_out, morphocast_core::forecast::scatter_svg(&trio));
    assert!(svg_out.contains("total profit"));
    assert!(svg_out.contains("required resource"));
}

#[test]
fn compare_front_only_drops_the_dominated_forecast() {
    let (code, out, _) = run(&["compare", "--front-only"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(!out.contains("Φ-"));
    assert!(out.contains("Φ~") && out.contains("Φ^"));
}

#[test]
fn custom_compare_sets_are_priced_by_the_catalog() {
    let (code, out, _) = run(&["compare", "--set", "mine=1,5", "--set", "other=6"]);
    assert_eq!(code, 0);
    assert!(out.contains("mine") && out.contains("other"));
    // Φ1+Φ5: profit 6, resource 3 — dominates Φ6 (profit 1, resource 2)? No:
    // resource 3 > 2, so both are efficient.
    assert_eq!(out.matches("efficient").count(), 2);
}

#[test]
fn aggregate_extend_csv_lists_the_decision_vector() {
    let (code, out, _) = run(&[
        "aggregate",
        "extend",
        "--budget",
        "8",
        "--kernel",
        "2,5,6",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "id,priority,weight,chosen\n10,1,2,1\n13,3,3,0\n17,3,3,0\n3,1,3,1\n15,2,3,1\n"
    );
}

#[test]
fn aggregate_text_matches_the_core_result() {
    let (code, out, _) = run(&["aggregate", "extend", "--budget", "8", "--kernel", "2,5,6"]);
    assert_eq!(code, 0);
    let catalog = builtin_catalog();
    let result = extend_kernel(
        &catalog,
        &BTreeSet::from([2, 5, 6]),
        &morphocast_core::aggregate::builtin_addition_candidates(),
        8,
        SolveMode::Exact,
    )
    .unwrap();
    assert!(out.contains(&format!(
        "selection value {}, load {}",
        result.selection.total_value, result.selection.total_load
    )));
    assert!(out.contains(&result.forecast.totals.to_string()));
}

#[test]
fn cluster_partition_csv_matches_core() {
    let (code, out, _) = run(&["cluster", "--steps", "9", "--format", "csv"]);
    assert_eq!(code, 0);
    let dendrogram = agglomerate(&builtin_catalog(), Metric::L1, Linkage::Single);
    let partition = partition_after(&dendrogram, 9).unwrap();
    assert_eq!(out, partition_to_csv(&partition));
}

#[test]
fn rank_csv_matches_core() {
    let (code, out, _) = run(&["rank", "--method", "fixture", "--format", "csv"]);
    assert_eq!(code, 0);
    let layers = rank_operations(&builtin_catalog(), RankMethod::Fixture);
    assert_eq!(out, layers_to_csv(&layers));
}

#[test]
fn render_matches_core_in_both_formats() {
    let generation = &builtin_generations()[2];
    let (code, text, _) = run(&["render", "--generation", "S3"]);
    assert_eq!(code, 0);
    assert_eq!(text, render_tree(generation, "text").unwrap());
    let (code, graph, _) = run(&[
        "render",
        "--generation",
        "S3",
        "--format",
        "graph-description",
    ]);
    assert_eq!(code, 0);
    assert_eq!(graph, render_tree(generation, "graph-description").unwrap());
}

#[test]
fn solve_reads_an_instance_file_and_matches_core() {
    let instance = KnapsackInstance {
        items: vec![
            morphocast_core::solve::Item {
                id: 1,
                profit: 3,
                weight: 2,
            },
            morphocast_core::solve::Item {
                id: 2,
                profit: 2,
                weight: 3,
            },
            morphocast_core::solve::Item {
                id: 3,
                profit: 4,
                weight: 4,
            },
        ],
        budget: 6,
        precedence: Vec::new(),
    };
    let file = temp_file(&serde_json::to_string(&instance).unwrap());
    let (code, out, _) = run(&[
        "solve",
        "knapsack",
        "--instance",
        file.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let selection = knapsack_solve(&instance, SolveMode::Exact).unwrap();
    let chosen: Vec<String> = selection.chosen.iter().map(u32::to_string).collect();
    assert_eq!(
        out,
        format!(
            "status,value,load,chosen\noptimal,{},{},{}\n",
            selection.total_value,
            selection.total_load,
            chosen.join(" ")
        )
    );
}

#[test]
fn seeded_solve_demo_is_deterministic() {
    let first = run(&["solve", "mckp", "--seed", "42"]);
    let second = run(&["solve", "mckp", "--seed", "42"]);
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
    assert!(first.1.contains("exact matches brute force: yes"));
}

#[test]
fn ledger_text_pairs_reported_and_computed_values() {
    let (code, out, _) = run(&["ledger"]);
    assert_eq!(code, 0);
    assert!(out.matches("== ").count() >= 5);
    assert!(out.contains("profit 16"));
    assert!(out.contains("profit 19"));
}

#[test]
fn ledger_on_a_custom_catalog_is_an_empty_document() {
    let builtin = builtin_catalog();
    let mut operations = builtin.operations.clone();
    operations[0].priority = 2;
    let custom = Catalog::new(builtin.schema.clone(), operations, Some(builtin.transform)).unwrap();
    let file = temp_file(&save_catalog(&custom));
    let (code, out, _) = run(&["ledger", "--catalog", file.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "");
    let (code, csv_out, _) = run(&[
        "ledger",
        "--catalog",
        file.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(csv_out, "");
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["ledger", "--format", "csv"],
        vec!["compare", "--format", "svg"],
        vec!["cluster"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, _, err) = run(&["diff", "--from", "S1", "--to", "S2", "--bogus"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["render"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["solve", "knapsack"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["diff", "--from", "S9", "--to", "S2"]);
    assert_eq!(code, 2);
    assert!(err.contains("S9") || err.contains("unknown generation"));
    let (code, _, _) = run(&["compare", "--format", "graph-description"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors_exit_with_one() {
    let (code, _, err) = run(&["solve", "knapsack", "--instance", "/nonexistent/file.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("error"));
    let bad = temp_file("{\"items\": [], \"budget\": \"oops\"}");
    let (code, _, _) = run(&[
        "solve",
        "knapsack",
        "--instance",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let (code, _, err) = run(&["aggregate", "compress", "--budget", "1000"]);
    assert_eq!(code, 1);
    assert!(err.contains("threshold"));
}

#[test]
fn help_and_version_exit_with_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("morphocast"));
    let (code, out, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains("morphocast"));
    let (code, out, _) = run(&["forecast", "--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("--budget"));
}
