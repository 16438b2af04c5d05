use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use splitpass::{DetectionReport, Graph, Membership};
use splitpass_testkit::fixtures;
use tempfile::TempDir;

fn splitpass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitpass"))
        .args(args)
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = splitpass(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write_edges(dir: &TempDir, name: &str, edges: &[(u32, u32, f64)]) -> PathBuf {
    let path = dir.path().join(name);
    let text: String = edges
        .iter()
        .map(|(u, v, w)| format!("{u} {v} {w}\n"))
        .collect();
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn karate() -> String {
    fixtures::data_path("karate.mtx")
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn detect_writes_membership_and_report() {
    let dir = TempDir::new().unwrap();
    let labels = dir.path().join("out.labels");
    let report = dir.path().join("r.json");
    let input = karate();
    let stdout = ok(&[
        "detect",
        "-i",
        &input,
        "--split",
        "pass-bfs",
        "-o",
        s(&labels),
        "--report",
        s(&report),
        "--threads",
        "2",
    ]);
    assert!(stdout.contains("disconnected_fraction=0"), "{stdout}");

    let parsed: DetectionReport =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed.schema, 1);
    assert_eq!(parsed.disconnected_fraction, 0.0);
    assert_eq!(parsed.workers, 2);
    assert_eq!(parsed.params.split.to_string(), "pass-bfs");
    assert!(parsed.modularity.unwrap() > 0.4);
    assert!(parsed.phase_totals.sum() <= parsed.total_runtime_s * 1.05);

    let membership = Membership::read_from_path(&labels, Some(34)).unwrap();
    assert_eq!(membership.num_communities(), parsed.num_communities);
}

#[test]
fn report_json_round_trips() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let input = karate();
    ok(&[
        "detect",
        "-i",
        &input,
        "--report",
        s(&report),
        "--threads",
        "1",
    ]);
    let text = fs::read_to_string(&report).unwrap();
    let first: DetectionReport = serde_json::from_str(&text).unwrap();
    let second: DetectionReport =
        serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(first, second);
}

#[test]
fn empty_matrix_market_is_an_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("empty.mtx");
    fs::write(&path, "").unwrap();
    let out = splitpass(&["detect", "-i", s(&path)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn missing_input_is_an_error() {
    let out = splitpass(&["detect", "-i", "/nonexistent/g.mtx"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/g.mtx"));
}

#[test]
fn two_triangles_without_split_reach_half() {
    let dir = TempDir::new().unwrap();
    let (_, edges) = fixtures::two_triangles();
    let input = write_edges(&dir, "two_triangles.el", &edges);
    let report = dir.path().join("r.json");
    ok(&[
        "detect",
        "-i",
        s(&input),
        "--format",
        "edgelist",
        "--split",
        "none",
        "--report",
        s(&report),
    ]);
    let parsed: DetectionReport =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert!((parsed.modularity.unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(parsed.num_communities, 2);
}

#[test]
fn detect_output_is_accepted_by_check() {
    let dir = TempDir::new().unwrap();
    let labels = dir.path().join("out.labels");
    let input = karate();
    ok(&["detect", "-i", &input, "-o", s(&labels)]);
    let stdout = ok(&["check", "-i", &input, "--membership", s(&labels)]);
    assert!(stdout.contains("disconnected_fraction=0"), "{stdout}");
}

#[test]
fn check_finds_and_splits_disconnected_community() {
    let dir = TempDir::new().unwrap();
    let fixture = fixtures::stranded_community();
    let input = write_edges(&dir, "stranded.el", &fixture.edges);
    let labels = dir.path().join("after.labels");
    Membership::new(fixture.after_move.clone())
        .unwrap()
        .write_to_path(&labels)
        .unwrap();

    let stdout = ok(&["check", "-i", s(&input), "--membership", s(&labels)]);
    assert!(
        stdout.contains("disconnected=1 disconnected_fraction=0.5"),
        "{stdout}"
    );
    assert!(stdout.contains("disconnected communities: 1"), "{stdout}");

    for technique in ["lp", "lpp", "bfs"] {
        let split = dir.path().join(format!("split-{technique}.labels"));
        ok(&[
            "check",
            "-i",
            s(&input),
            "--membership",
            s(&labels),
            "--split",
            technique,
            "-o",
            s(&split),
        ]);
        let again = ok(&["check", "-i", s(&input), "--membership", s(&split)]);
        assert!(
            again.contains("disconnected=0 disconnected_fraction=0"),
            "{again}"
        );
        assert_eq!(
            Membership::read_from_path(&split, None)
                .unwrap()
                .num_communities(),
            3
        );
    }
}

#[test]
fn check_rejects_wrong_length() {
    let dir = TempDir::new().unwrap();
    let labels = dir.path().join("short.labels");
    fs::write(&labels, "0\n0\n").unwrap();
    let input = karate();
    let out = splitpass(&["check", "-i", &input, "--membership", s(&labels)]);
    assert!(!out.status.success());
}

#[test]
fn check_rejects_label_out_of_range() {
    let dir = TempDir::new().unwrap();
    let (_, edges) = fixtures::two_triangles();
    let input = write_edges(&dir, "g.el", &edges);
    let labels = dir.path().join("bad.labels");
    fs::write(&labels, "0\n0\n0\n9\n9\n9\n").unwrap();
    let out = splitpass(&["check", "-i", s(&input), "--membership", s(&labels)]);
    assert!(!out.status.success());
}

#[test]
fn bench_emits_one_row_per_worker_count() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let input = karate();
    ok(&[
        "bench",
        "-i",
        &input,
        "--threads",
        "1,2,4",
        "--repeat",
        "2",
        "-o",
        s(&csv_path),
    ]);
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let headers: Vec<String> = reader
        .headers()
        .unwrap()
        .iter()
        .map(str::to_string)
        .collect();
    assert_eq!(
        headers,
        [
            "workers",
            "total_s",
            "local_moving_s",
            "splitting_s",
            "aggregation_s",
            "other_s",
            "modularity",
            "disconnected_fraction"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let workers: Vec<&str> = rows.iter().map(|r| &r[0]).collect();
    assert_eq!(workers, ["1", "2", "4"]);
    for row in &rows {
        let total: f64 = row[1].parse().unwrap();
        let buckets: f64 = (2..6).map(|k| row[k].parse::<f64>().unwrap()).sum();
        assert!(buckets <= total * 1.05 + 1e-6, "{row:?}");
        assert_eq!(&row[7], "0.0");
    }
}

#[test]
fn bench_rejects_zero_workers() {
    let input = karate();
    let out = splitpass(&["bench", "-i", &input, "--threads", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_worker_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = fixtures::data_path("lesmis.mtx");
    let a = dir.path().join("a.labels");
    let b = dir.path().join("b.labels");
    ok(&["detect", "-i", s(&input), "--threads", "1", "-o", s(&a)]);
    ok(&["detect", "-i", s(&input), "--threads", "1", "-o", s(&b)]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn unweighted_edge_list_ignores_weights() {
    let dir = TempDir::new().unwrap();
    let input = write_edges(
        &dir,
        "g.txt",
        &[(0, 1, 5.0), (1, 2, 1.0), (2, 3, 5.0), (3, 0, 1.0)],
    );
    let report = dir.path().join("r.json");
    let labels = dir.path().join("g.labels");
    ok(&[
        "detect",
        "-i",
        s(&input),
        "--unweighted",
        "--report",
        s(&report),
        "-o",
        s(&labels),
        "--split",
        "none",
    ]);
    let parsed: DetectionReport =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let membership = Membership::read_from_path(&labels, Some(4)).unwrap();
    let unit = Graph::from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]).unwrap();
    let expected = splitpass::modularity(&unit, &membership).unwrap();
    assert_eq!(parsed.modularity, Some(expected));
}
