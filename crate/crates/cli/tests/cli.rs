use crosscap::render::{render_svg, RenderOptions};
use crosscap::run;
use crosscap_core::ExtRational;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("crosscap").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 1, "one JSON object per call");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn crosscap_all_methods() {
    let (code, out, _) = call(&["crosscap", "8", "3", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "Cr(8,3) = 2 (bw=2, new=2, path=2)");
}

#[test]
fn path_json() {
    let v = json(&["path", "10", "3"]);
    assert_eq!(
        v["slopes"],
        serde_json::json!(["0/1", "2/1", "4/1", "10/3"])
    );
    assert_eq!(v["crosscap"], 3);
    assert_eq!(v["euler_char"], -1);
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = call(&["crosscap", "7", "2"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("p must be even"), "{err}");

    let (code, _, err) = call(&["path", "8", "6"]);
    assert_eq!(code, 1);
    assert!(err.contains("coprime"), "{err}");

    let (code, _, err) = call(&["mother", "3", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a vertex"), "{err}");

    let (code, _, err) = call(&["mother", "0", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("root"), "{err}");

    let (code, _, err) = call(&["children", "2", "1", "--t", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("odd"), "{err}");

    let (code, _, err) = call(&["render", "--generations", "1", "--highlight", "8", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("highlight"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["crosscap", "8", "x"],
        vec!["crosscap", "8"],
        vec!["frobnicate"],
        vec!["crosscap", "8", "3", "--method", "magic"],
        vec!["children", "2", "1", "--count", "-1"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("crosscap"));
}

#[test]
fn path_refuses_enormous_chains() {
    let (code, _, err) = call(&["path", "100000000000000000000", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("limit"), "{err}");
    // The closed forms still answer instantly.
    let v = json(&["crosscap", "100000000000000000000", "1", "--method", "new"]);
    assert_eq!(v["crosscap"], "50000000000000000000");
}

#[test]
fn negative_and_unreduced_arguments() {
    let v = json(&["path", "10", "-3"]);
    assert_eq!(
        v["slopes"],
        serde_json::json!(["0/1", "-2/1", "-4/1", "-10/3"])
    );
    let v = json(&["crosscap", "8", "11", "--trace"]);
    assert_eq!(v["q_normalized"], "3");
    assert_eq!(v["trace"]["b"], serde_json::json!(["2", "0", "2"]));
    let v = json(&["mother", "16", "6"]);
    assert_eq!(v["vertex"], "8/3");
    assert_eq!(v["mother"], "2/1");
}

#[test]
fn text_and_json_agree() {
    let cases: &[&[&str]] = &[
        &["crosscap", "10", "3", "--method", "all", "--trace"],
        &["path", "8", "3"],
        &["cf", "7", "5"],
        &["mother", "4", "3"],
        &["children", "8", "3", "--count", "4"],
        &["generation", "10", "3"],
        &["territory", "8", "3"],
    ];
    for args in cases {
        let (code, text, _) = call(args);
        assert_eq!(code, 0);
        let v = json(args);
        let mut strings = Vec::new();
        collect_scalars(&v, &mut strings);
        for s in strings {
            // Every fraction and integer in the JSON is printed in text mode.
            let plain = s.trim_end_matches("/1");
            assert!(
                text.contains(&s) || text.contains(plain),
                "{args:?}: {s} missing from {text}"
            );
        }
    }
}

fn collect_scalars(v: &Value, acc: &mut Vec<String>) {
    match v {
        Value::String(s)
            if s.chars()
                .next()
                .is_some_and(|c| c == '-' || c.is_ascii_digit()) =>
        {
            acc.push(s.clone())
        }
        Value::Number(n) => acc.push(n.to_string()),
        Value::Array(xs) => xs.iter().for_each(|x| collect_scalars(x, acc)),
        Value::Object(m) => m
            .iter()
            // Echoed inputs are not repeated in text mode.
            .filter(|(k, _)| !["p", "q", "vertex", "value"].contains(&k.as_str()))
            .for_each(|(_, x)| collect_scalars(x, acc)),
        _ => {}
    }
}

#[test]
fn json_fractions_round_trip() {
    let mut fractions = Vec::new();
    for args in [
        vec!["path", "123456", "7891"],
        vec!["children", "8", "3", "--count", "8"],
        vec!["territory", "2", "1"],
        vec!["crosscap", "8", "3", "--trace"],
    ] {
        let v = json(&args);
        collect_fractions(&v, &mut fractions);
    }
    assert!(fractions.len() > 10);
    for s in fractions {
        let x: ExtRational = s.parse().unwrap();
        assert_eq!(x.to_string(), s);
    }
}

fn collect_fractions(v: &Value, acc: &mut Vec<String>) {
    match v {
        Value::String(s) if s.contains('/') => acc.push(s.clone()),
        Value::Array(xs) => xs.iter().for_each(|x| collect_fractions(x, acc)),
        Value::Object(m) => m.values().for_each(|x| collect_fractions(x, acc)),
        _ => {}
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec![
            "render",
            "--generations",
            "3",
            "--farey",
            "--highlight",
            "8",
            "3",
        ],
        vec!["verify", "--max-size", "40", "--max-p", "20", "--json"],
        vec!["children", "2", "1"],
    ] {
        assert_eq!(call(&args), call(&args));
    }
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "--max-size", "5", "--max-p", "10"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["tree"]["vertex_count"], 4);
    assert_eq!(v["tree"]["edge_count"], 3);
    assert_eq!(v["tree"]["first_counterexample"], Value::Null);
    let (code, text, _) = call(&["verify", "--max-size", "30", "--max-p", "8"]);
    assert_eq!(code, 0);
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn render_to_file() {
    let dir = std::env::temp_dir().join(format!("crosscap-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tree.svg");
    let p = path.to_str().unwrap();
    let v = json(&[
        "render",
        "--generations",
        "2",
        "--highlight",
        "8",
        "3",
        "-o",
        p,
    ]);
    assert_eq!(v["highlighted"], serde_json::json!(["0/1", "2/1", "8/3"]));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"viewBox="-1.05 -1.05 2.1 2.1""#));
    std::fs::remove_dir_all(&dir).unwrap();
}

/// Endpoint-to-center conversion for an SVG arc with no rotation and the
/// small-arc flag clear; returns the point halfway along the drawn arc.
fn arc_midpoint(x1: f64, y1: f64, r: f64, sweep: bool, x2: f64, y2: f64) -> (f64, f64) {
    let (dx, dy) = ((x1 - x2) / 2.0, (y1 - y2) / 2.0);
    let r = r.max((dx * dx + dy * dy).sqrt());
    let k = ((r * r - dx * dx - dy * dy).max(0.0) / (dx * dx + dy * dy)).sqrt();
    let k = if sweep { k } else { -k };
    let (cx, cy) = (k * dy + (x1 + x2) / 2.0, -k * dx + (y1 + y2) / 2.0);
    let a1 = (y1 - cy).atan2(x1 - cx);
    let a2 = (y2 - cy).atan2(x2 - cx);
    let mut d = a2 - a1;
    if sweep && d < 0.0 {
        d += std::f64::consts::TAU;
    }
    if !sweep && d > 0.0 {
        d -= std::f64::consts::TAU;
    }
    let m = a1 + d / 2.0;
    (cx + r * m.cos(), cy + r * m.sin())
}

#[test]
fn drawn_arcs_bend_into_the_disk() {
    let opts = RenderOptions {
        show_farey: true,
        highlight: Some((8.into(), 3.into())),
        ..RenderOptions::default()
    };
    let svg = render_svg(3, &opts).unwrap().svg;
    let mut arcs = 0;
    for line in svg.lines().filter(|l| l.contains(" A ")) {
        let d = line.split('"').nth(1).unwrap();
        let f: Vec<&str> = d.split_whitespace().collect();
        let num = |i: usize| f[i].parse::<f64>().unwrap();
        let (x, y) = arc_midpoint(num(1), num(2), num(4), f[8] == "1", num(9), num(10));
        assert!(x * x + y * y < 1.0, "{d}");
        arcs += 1;
    }
    assert!(arcs > 100);
}
