use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qec(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_path() {
    let v = &json_lines(&qec(&["compute", "Ch"], None))[0];
    assert_eq!(v["method"], "closed-form-path");
    assert_eq!(v["value"].as_f64().unwrap(), -0.585786437626905);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
    let v = &json_lines(&qec(&["compute", "--numeric", "Ch"], None))[0];
    assert_eq!(v["method"], "numeric-eigen");
}

#[test]
fn stdin_stream_gives_one_object_per_graph() {
    let lines = json_lines(&qec(&["spectrum"], Some(">>graph6<<Cr\nC~\n")));
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["eigenvalues"][0].as_f64().unwrap(), 3.0);
    assert!(lines.iter().all(|l| l["sandwich_holds"] == true));
    assert_eq!(lines[0]["transmission_regular"], true);
}

#[test]
fn classify_file_and_edge_list() {
    let dir = std::env::temp_dir().join(format!("qec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.txt");
    std::fs::write(&path, "5\n# K_2*(K_3,K_2)\n0 1\n0 2\n0 3\n2 3\n1 4\n").unwrap();
    let v = &json_lines(&qec(
        &["classify", "--format", "edgelist", path.to_str().unwrap()],
        None,
    ))[0];
    assert_eq!(v["ladder_position"]["kind"], "between");
    assert_eq!(v["ladder_position"]["lower"], 4);
    assert_eq!(v["family"]["kind"], "star-product-multi");
    assert_eq!(v["classification_open"], true);
    assert_eq!(v["below_half"], true);
    let expected = -2.0 * (6.0 - 21f64.sqrt()) / 5.0;
    assert!((v["qec"].as_f64().unwrap() - expected).abs() < 1e-13);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cliques_of_bowtie() {
    let v = &json_lines(&qec(&["cliques", "DxK"], None))[0];
    assert_eq!(v["cliques"], serde_json::json!([[0, 1, 2], [2, 3, 4]]));
    assert_eq!(v["gamma_edges"], serde_json::json!([[0, 1]]));
    assert_eq!(v["gamma_is_tree"], true);
}

#[test]
fn enumerate_counts() {
    let out = qec(&["enumerate", "--n", "6"], None);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 112);
    assert!(!qec(&["enumerate", "--n", "9"], None).status.success());
}

#[test]
fn verify_passes_and_reports() {
    let out = qec(&["verify", "--max-n", "5"], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["graphs"], 31);
    assert!(v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["failed"] == 0));
}

#[test]
fn two_clique_points() {
    let v = &json_lines(&qec(
        &["two-clique", "--l", "2", "--m", "5", "--n", "4"],
        None,
    ))[0];
    let points = v["stationary_points"].as_array().unwrap();
    assert_eq!(points[0]["lambda"], v["qec"]);
    assert!(v.get("star_pair").is_none());
    assert!(
        !qec(&["two-clique", "--l", "3", "--m", "3", "--n", "4"], None)
            .status
            .success()
    );
}

#[test]
fn bad_input_fails() {
    let out = qec(&["compute", "A"], None);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
    assert!(!qec(&["compute"], Some("")).status.success());
    // disconnected
    assert!(!qec(&["compute", "A?"], None).status.success());
}
