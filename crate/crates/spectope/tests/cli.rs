use std::path::Path;
use std::process::{Command, Output};

use spectope::{data, io};
use tempfile::TempDir;

fn spectope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectope")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = spectope(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn r14_as_graph6() {
    let out = ok(&["construct", "rn", "--n", "14", "--emit", "g6"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let (order, _) = io::parse_graph6(lines[0]).unwrap();
    assert_eq!(order, 26);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let r20 = write(&dir, "r20.json", &ok(&["construct", "rn", "--n", "20"]));
    let r19 = write(&dir, "r19.json", &ok(&["construct", "rn", "--n", "19"]));
    let pass = spectope(&["verify", "--property", "pn", "--n", "20", "--in", &r20]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(stdout(&pass).contains("\"pass\": true"));
    let fail = spectope(&["verify", "--property", "pn", "--n", "20", "--in", &r19]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("\"pass\": false"));
    assert_eq!(spectope(&["verify", "--property", "rn", "--n", "20", "--in", &r20]).status.code(), Some(1));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(spectope(&["construct"]).status.code(), Some(2));
    assert_eq!(spectope(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(spectope(&["construct", "rn", "--n", "2"]).status.code(), Some(2));
    let missing = spectope(&["dual", "--in", "/nonexistent/graph.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));
    let dir = TempDir::new().unwrap();
    let junk = write(&dir, "junk.json", "{\"order\": 3}");
    assert_eq!(spectope(&["dual", "--in", &junk]).status.code(), Some(2));
    assert_eq!(spectope(&["enumerate", "--filter", "degree:3"]).status.code(), Some(2));
}

#[test]
fn a_tampered_checksum_is_refused() {
    let dir = TempDir::new().unwrap();
    let json = ok(&["construct", "rn", "--n", "9"]);
    let key = "\"faces_checksum\": \"";
    let at = json.find(key).unwrap() + key.len();
    let mut bad = json.clone();
    let c = if &json[at..at + 1] == "0" { "1" } else { "0" };
    bad.replace_range(at..at + 1, c);
    let p = write(&dir, "bad.json", &bad);
    assert_eq!(spectope(&["verify", "--property", "pn", "--n", "9", "--in", &p]).status.code(), Some(2));
}

#[test]
fn round_trips_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    for n in [5, 12, 17, 33] {
        let json = ok(&["construct", "rn", "--n", &n.to_string()]);
        let p = write(&dir, "g.json", &json);
        let d = write(&dir, "d.json", &ok(&["dual", "--in", &p, "--emit", "json"]));
        ok(&["verify", "--property", "faces", "--n", &n.to_string(), "--in", &d]);
        let g6 = ok(&["construct", "rn", "--n", &n.to_string(), "--emit", "g6"]);
        let q = write(&dir, "g.g6", &g6);
        // graph6 forgets the embedding but not the graph.
        let again = io::from_graph6(g6.trim()).unwrap();
        assert_eq!(io::to_graph6(&again), g6.trim());
        let g = io::from_json(&json).unwrap();
        assert_eq!(io::to_json(&g), json);
        ok(&["verify", "--property", "pn", "--n", &n.to_string(), "--in", &q]);
    }
}

#[test]
fn dual_twice_is_the_identity() {
    let dir = TempDir::new().unwrap();
    let json = ok(&["construct", "rn", "--n", "11"]);
    let p = write(&dir, "g.json", &json);
    let d = write(&dir, "d.json", &ok(&["dual", "--in", &p]));
    let dd = io::from_json(&ok(&["dual", "--in", &d])).unwrap();
    let g = io::from_json(&json).unwrap();
    assert_eq!(spectope_core::canon::planar_code(&dd), spectope_core::canon::planar_code(&g));
    let dot = ok(&["dual", "--in", &p, "--emit", "dot"]);
    assert!(dot.starts_with("graph") && dot.trim_end().ends_with('}'));
}

fn has_every_degree(line: &str, n: usize) -> bool {
    let (order, edges) = io::parse_graph6(line).unwrap();
    let mut deg = vec![0usize; order];
    for (u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    (3..=n).all(|d| deg.contains(&d))
}

#[test]
fn enumerate_and_filter() {
    let all = ok(&["enumerate", "--max-order", "7"]);
    assert_eq!(all.lines().count(), 1 + 2 + 7 + 34);
    for n in 3..=6 {
        let got = ok(&["enumerate", "--max-order", "7", "--filter", &format!("spectrum:{n}")]);
        let want: Vec<&str> = all.lines().filter(|l| has_every_degree(l, n)).collect();
        assert_eq!(got.lines().collect::<Vec<_>>(), want, "spectrum:{n}");
    }
    let r5 = ok(&["enumerate", "--max-order", "6", "--filter", "spectrum:5"]);
    assert_eq!(r5.lines().filter(|l| io::parse_graph6(l).unwrap().0 == 6).count(), 2);
}

#[test]
fn bounds_table() {
    let out = ok(&["bounds", "--n-max", "12"]);
    let row = |n: &str| -> Vec<String> {
        out.lines()
            .map(|l| l.split_whitespace().map(str::to_owned).collect::<Vec<_>>())
            .find(|c| c.first().map(String::as_str) == Some(n))
            .unwrap()
    };
    assert_eq!(row("3"), ["3", "4", "-", "4"]);
    assert_eq!(row("8")[3], "10");
    assert_eq!(out.lines().count(), 1 + 10);
}

#[test]
fn sn_then_tn() {
    let dir = TempDir::new().unwrap();
    let wp = dir.path().join("w.json");
    let s = ok(&["construct", "sn", "--n", "17", "--witness-out", wp.to_str().unwrap()]);
    let sp = write(&dir, "s.json", &s);
    let w = wp.to_str().unwrap();
    assert_eq!(io::from_json(&s).unwrap().order(), 51);
    ok(&["verify", "--property", "rn", "--n", "17", "--in", &sp, "--witness", w]);
    ok(&["verify", "--property", "rn", "--n", "17", "--in", &sp]);
    let tw = dir.path().join("tw.json");
    let t = ok(&[
        "construct", "tn", "--seed", &sp, "--l", "17", "--m", "14", "--steps", "1", "--witness", w,
        "--witness-out", tw.to_str().unwrap(),
    ]);
    let tp = write(&dir, "t.json", &t);
    assert_eq!(io::from_json(&t).unwrap().order(), 183);
    ok(&["verify", "--property", "qn", "--n", "31", "--in", &tp, "--witness", tw.to_str().unwrap()]);
    // Without a witness file the seed's own witness is searched for.
    let t2 = ok(&["construct", "tn", "--seed", &sp, "--l", "17", "--m", "14", "--steps", "1"]);
    assert_eq!(io::from_json(&t2).unwrap().order(), 183);
    let bad = spectope(&["construct", "tn", "--seed", &sp, "--l", "17", "--m", "3", "--steps", "1", "--variant", "lemma7"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn trace_is_written() {
    let dir = TempDir::new().unwrap();
    let tp = dir.path().join("trace.json");
    ok(&["construct", "rn", "--n", "21", "--trace", tp.to_str().unwrap()]);
    let trace: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(tp).unwrap()).unwrap();
    assert!(trace.is_object() || trace.is_array());
}

#[test]
fn export_matches_shipped_data() {
    let dir = TempDir::new().unwrap();
    ok(&["export", "--dir", dir.path().to_str().unwrap()]);
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for name in ["catalog.json", "gadgets.json"] {
        let fresh = std::fs::read(dir.path().join(name)).unwrap();
        let kept = std::fs::read(shipped.join(name)).unwrap();
        assert!(fresh == kept, "{name} differs from the shipped copy");
    }
    let cat = data::load_catalog(&std::fs::read_to_string(shipped.join("catalog.json")).unwrap()).unwrap();
    assert_eq!(cat.len(), spectope_core::builders::build_catalog().len());
}
