use std::io::Write;
use std::process::{Command, Output, Stdio};

const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]  # 3_1\n";
const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]  # 4_1\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_altfloer"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn trefoil_all() {
    let o = run(&["compute", "--all", "--out", "json"], TREFOIL);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["name"], "3_1");
    assert_eq!(r["sigma"], -2);
    assert_eq!(r["gamma"], serde_json::json!([[-2, 1], [0, -1], [2, 1]]));
    assert_eq!(
        r["hfk"],
        serde_json::json!([[-2, -4, 1], [0, -2, 1], [2, 0, 1]])
    );
    assert_eq!(r["d1"], -2);
    assert_eq!(r["obstruction"]["verdict"], "pass");
    let keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
    for k in ["sigma", "hfk", "hfplus", "d1", "obstruction"] {
        assert!(keys.iter().any(|x| x == k), "{k} missing");
    }
}

#[test]
fn trefoil_text() {
    let o = run(&["compute"], TREFOIL);
    let s = stdout(&o);
    assert!(s.contains("gamma       T^-1 - 1 + T"), "{s}");
    assert!(s.contains("sigma       -2"));
}

#[test]
fn nine_42_obstructed() {
    let pd = "X[5,1,6,18] X[1,7,2,6] X[7,3,8,2] X[10,3,11,4] X[4,11,5,12] \
              X[15,9,16,8] X[9,15,10,14] X[17,12,18,13] X[13,16,14,17]\n";
    let o = run(
        &["compute", "--obstruct", "--sigma", "2", "--out", "json"],
        pd,
    );
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["obstruction"]["verdict"], "fail");
    assert_eq!(
        r["obstruction"]["violations"],
        serde_json::json!([{"s": 0, "value": 1}])
    );
    assert!(r.get("hfk").is_none());
}

#[test]
fn non_alternating_gets_markers() {
    let o = run(&["compute", "--bundled", "--out", "json"], "");
    let rows = json_lines(&o);
    let r = rows.iter().find(|r| r["name"] == "9_42").unwrap();
    assert_eq!(r["states"], 37);
    assert_eq!(r["sigma"], 2);
    assert!(r["hfk"]["not_applicable"]
        .as_str()
        .unwrap()
        .contains("not alternating"));
    assert_eq!(r["obstruction"]["verdict"], "fail");
}

#[test]
fn empty_input() {
    for args in [
        &["compute"][..],
        &["states"],
        &["verify"],
        &["compute", "--out", "csv"],
    ] {
        let o = run(args, "");
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn states_listing() {
    let o = run(&["states"], FIGURE_EIGHT);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&["states", "--canonical", "--out", "json"], TREFOIL);
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["two_m"], 0);
    let o = run(&["states", "--clock"], TREFOIL);
    assert_eq!(stdout(&o).trim(), "nodes 3  edges 2  connected true");
    assert_eq!(
        run(&["states", "--clock", "--canonical"], TREFOIL)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_bundled_corpus() {
    let o = run(&["verify", "--bundled"], "");
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.lines().last().unwrap().contains(" 0 failed"));
    assert!(s.contains("brute force states        skipped: guard exceeded"));
}

#[test]
fn corrupted_line_is_isolated() {
    let input = format!("{TREFOIL}X[1,4,2  # broken\n{FIGURE_EIGHT}");
    let o = run(&["verify", "--out", "json"], &input);
    assert_eq!(o.status.code(), Some(1));
    let rows = json_lines(&o);
    let broken: Vec<_> = rows.iter().filter(|r| r["name"] == "broken").collect();
    assert_eq!(broken.len(), 1);
    assert_eq!(broken[0]["status"], "fail");
    assert!(rows
        .iter()
        .filter(|r| r["name"] != "broken")
        .all(|r| r["status"] == "pass"));
}

#[test]
fn fifteen_crossings_skip_brute_force() {
    let l = |x: i64| (x - 1).rem_euclid(30) + 1;
    let pd: String = (0..15)
        .map(|k| {
            format!(
                "X[{},{},{},{}] ",
                2 * k + 1,
                l(2 * k + 17),
                2 * k + 2,
                l(2 * k + 16)
            )
        })
        .collect();
    let o = run(&["verify", "--out", "json"], &pd);
    assert!(o.status.success());
    let rows = json_lines(&o);
    let bf = rows
        .iter()
        .find(|r| r["check"] == "brute force states")
        .unwrap();
    assert_eq!(bf["status"], "skipped");
    assert_eq!(bf["detail"], "guard exceeded");
}

#[test]
fn strict_exit_codes() {
    let input = format!("{TREFOIL}X[1,2,3]\n");
    let lax = run(&["compute", "--count"], &input);
    assert_eq!(lax.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&lax.stderr).contains("line 2"));
    assert_eq!(
        run(&["compute", "--count", "--strict"], &input)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["compute", "--no-such-flag"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "/no/such/file"], "").status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = run(&["compute", "--bundled", "--out", "csv"], "");
    let b = run(&["compute", "--bundled", "--out", "csv"], "");
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("name,two_s,a,two_m,rank,t,delta,b,error\n"));
    assert!(s.contains("3_1 right-handed,0,-1,-2,1,1,1,0,\n"), "{s}");
}

#[test]
fn gauss_input_and_decoration_flags() {
    let gauss = "O1+ U2+ O3+ U1+ O2+ U3+\n";
    let a = run(
        &[
            "compute",
            "--format",
            "gauss",
            "--alexander",
            "--out",
            "json",
        ],
        gauss,
    );
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(
        json_lines(&a)[0]["gamma"],
        serde_json::json!([[-2, 1], [0, -1], [2, 1]])
    );
    for edge in ["1", "4", "6"] {
        let o = run(
            &[
                "compute",
                "--alexander",
                "--marked-edge",
                edge,
                "--out",
                "json",
            ],
            TREFOIL,
        );
        assert_eq!(
            json_lines(&o)[0]["gamma"],
            serde_json::json!([[-2, 1], [0, -1], [2, 1]])
        );
    }
    let bad = run(&["compute", "--marked-edge", "7", "--strict"], TREFOIL);
    assert_eq!(bad.status.code(), Some(1));
    let face = run(
        &["compute", "--outer-face", "0", "--count", "--out", "json"],
        TREFOIL,
    );
    assert_eq!(json_lines(&face)[0]["states"], 3);
}
