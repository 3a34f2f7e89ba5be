use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mso").chain(args.iter().copied());
    let code = mso::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn mean_of_path_and_bridge() {
    let (code, out, _) = run(&["mean", "path:5"]);
    assert_eq!(code, 0);
    assert!(out.contains("mean: 7/3 (2.333333333333)"), "{out}");
    let v = json(&["mean", "bridge:s=1,t=0", "--format", "json"]);
    assert_eq!(v["mean"]["exact"]["num"], "3");
    assert_eq!(v["mean"]["exact"]["den"], "1");
    assert_eq!(v["count"], "28");
}

#[test]
fn local_mean_and_graph6_input() {
    let v = json(&["mean", "Cs", "--input", "graph6", "--local", "0", "--format", "json"]);
    assert_eq!(v["n"], 4);
    assert_eq!(v["mean"]["decimal"], "2.090909090909");
    assert!(v["local"].is_object());
}

#[test]
fn cycle_is_a_parse_error() {
    let dir = std::env::temp_dir().join(format!("mso-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triangle.txt");
    std::fs::write(&path, "0 1\n1 2\n2 0\n").unwrap();
    let (code, _, err) = run(&["mean", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn bad_spec_is_a_usage_error() {
    let (code, _, err) = run(&["mean", "baton:s=0,t=3"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn optimal_trees_4_is_the_claw() {
    let v = json(&["optimal", "trees", "4", "--deterministic"]);
    assert_eq!(v["mean"]["exact"]["num"], "23");
    assert_eq!(v["mean"]["exact"]["den"], "11");
    assert_eq!(v["winners"][0]["graph6"], "Cs");
    assert_eq!(v["multiplicity"], 1);
    assert!(v["timestamp"].is_null());
}

#[test]
fn optimal_trees_16_graph6() {
    let (code, out, _) = run(&["optimal", "trees", "16", "--format", "graph6"]);
    assert_eq!(code, 0);
    let line = out.trim();
    assert_eq!(out.lines().count(), 1);
    let t = mso::graph6::decode(line).unwrap();
    assert_eq!(mso_core::lab::caterpillar_leaf_sequence(&t), Some(vec![5, 0, 1, 0, 5]));
}

#[test]
fn optimal_batons_1000_within_window() {
    let v = json(&["optimal", "batons", "1000", "--deterministic"]);
    let s = v["parameters"][0].as_u64().unwrap();
    // 2 log2(1000) ≈ 19.93
    assert!((18..=20).contains(&s), "s = {s}");
}

#[test]
fn shards_add_up() {
    let total: usize = (0..3)
        .map(|k| {
            let (code, out, _) = run(&["enumerate", "trees", "11", "--count", "--shard", &format!("{k}/3")]);
            assert_eq!(code, 0);
            out.trim().parse::<usize>().unwrap()
        })
        .sum();
    assert_eq!(total, 235);
}

#[test]
fn max_order_is_enforced() {
    let (code, _, err) = run(&["optimal", "trees", "30"]);
    assert_eq!(code, 2);
    assert!(err.contains("maximum order"), "{err}");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "appendixB", "--smax", "500"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
    let (code, out, _) = run(&["verify", "oracle", "--n", "10"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["verify", "batonPositivity", "--n", "30"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("f_20(6)"));
    let (code, _, _) = run(&["verify", "unknown-suite"]);
    assert_eq!(code, 2);
}

#[test]
fn counts_build_classify() {
    let v = json(&["counts", "dds:n=12,r=3,s=3", "--format", "json"]);
    assert_eq!(v["matches_dp"], true);
    assert!(v["census"].is_object());
    let (code, out, _) = run(&["build", "path:3", "--format", "graph6"]);
    assert_eq!((code, out.as_str()), (0, "Bg\n"));
    let v = json(&["classify", "caterpillar:5,0,1,0,5", "--format", "json"]);
    assert_eq!(v["is_caterpillar"], true);
    assert_eq!(v["twigs"], 2);
}

#[test]
fn poly_dp_matches_brute_force() {
    let (_, dp, _) = run(&["poly", "star:5"]);
    let (_, brute, _) = run(&["poly", "star:5", "--brute"]);
    assert_eq!(dp, brute);
    assert_eq!(dp, "5x + 4x^2 + 6x^3 + 4x^4 + 1x^5\n");
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_mso");
    let once = || {
        Command::new(exe)
            .args(["verify", "gluing", "--q-max", "4", "--n", "8", "--deterministic", "--format", "json"])
            .output()
            .unwrap()
    };
    let (a, b) = (once(), once());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("wall_time"));
}
