mod common;

#[test]
fn every_case_matches_its_report() {
    let failures: Vec<String> = common::check_goldens()
        .into_iter()
        .filter_map(|(name, v)| v.err().map(|e| format!("{name}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn every_data_file_is_exercised() {
    assert_eq!(common::unexercised_data_files(), Vec::<String>::new());
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    for case in common::manifest().iter().take(12) {
        let (_, one) = common::run_case(case);
        let mut threaded = common::GoldenCase {
            name: case.name.clone(),
            args: case.args.clone(),
            exit: case.exit,
        };
        threaded.args.extend(["--threads".to_string(), "4".to_string()]);
        let (_, four) = common::run_case(&threaded);
        let results = |s: &str| serde_json::from_str::<serde_json::Value>(s).map(|v| v["results"].clone()).ok();
        assert_eq!(results(&one), results(&four), "{}", case.name);
    }
}
