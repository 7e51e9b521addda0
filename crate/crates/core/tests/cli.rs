use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use oruga::combinat::StirlingPermutation;
use oruga::composition::Composition;
use oruga::flows::OrugaGraph;
use oruga::geometry::HeightFunction;
use oruga::oracle;

fn oruga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oruga")).args(args).env_remove("ORUGA_MAX_PERMUTATIONS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn rat(v: &Value) -> BigRational {
    let (p, q) = v.as_str().unwrap().split_once('/').unwrap();
    BigRational::new(p.parse().unwrap(), q.parse().unwrap())
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("oruga-cli-{}-{name}", std::process::id()))
}

fn words(s: &[u32]) -> Vec<String> {
    let s = Composition::new(s.to_vec()).unwrap();
    oracle::stirling_permutations(&s).iter().map(|w| w.iter().map(|x| x.to_string()).collect()).collect()
}

#[test]
fn count() {
    let o = oruga(&["count", "--s", "1,2,1"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "8\n"));
    let o = oruga(&["count", "--s", "1 2 1"]);
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn enumerate_formats() {
    let o = oruga(&["enumerate", "--s", "1", "--format", "lines"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    let o = oruga(&["enumerate", "--s", "1,2,1", "--format", "json"]);
    let listed: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(listed, words(&[1, 2, 1]));
    let o = oruga(&["enumerate", "--s", "2,1,2"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), words(&[2, 1, 2]));
}

#[test]
fn hasse_arcs_are_transpositions() {
    let o = oruga(&["hasse", "--s", "1,2,1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    let mut arcs: Vec<(String, String)> = v["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| (a["from"].as_str().unwrap().to_string(), a["to"].as_str().unwrap().to_string()))
        .collect();
    arcs.sort();
    // Swap the block of a with the following larger letter c.
    let s = Composition::new(vec![1, 2, 1]).unwrap();
    let mut expect = Vec::new();
    for w in words(&[1, 2, 1]) {
        let b = w.as_bytes();
        for i in 0..b.len() {
            if i + 1 < b.len() && b[i] < b[i + 1] {
                let start = b[..=i].iter().position(|&x| x == b[i]).unwrap();
                let mut t = b[..start].to_vec();
                t.push(b[i + 1]);
                t.extend_from_slice(&b[start..=i]);
                t.extend_from_slice(&b[i + 2..]);
                let t = String::from_utf8(t).unwrap();
                assert!(StirlingPermutation::parse(&s, &t).is_ok());
                expect.push((w.clone(), t));
            }
        }
    }
    expect.sort();
    assert_eq!(arcs, expect);

    let o = oruga(&["hasse", "--s", "1,1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["arcs"], serde_json::json!([{"from": "12", "to": "21", "ascent": [1, 2]}]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["hasse", "--s", "2,1,2", "--format", "dot"][..],
        &["hasse", "--s", "1,2,1", "--format", "json"],
        &["realize", "--s", "1,2,2"],
        &["verify", "--s", "1,2,1"],
    ] {
        let a = oruga(args);
        let b = oruga(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn realize_schema() {
    let o = oruga(&["realize", "--s", "1,2,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let keys = ["\"s\"", "\"n\"", "\"epsilon\"", "\"hyperplane_sum\"", "\"vertices\"", "\"edges\"", "\"faces\"", "\"support_facets\""];
    let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(at.windows(2).all(|p| p[0] < p[1]), "key order {at:?}");
    assert_eq!(v["epsilon"], "1/54");
    let sum = rat(&v["hyperplane_sum"]);
    let vertices = v["vertices"].as_object().unwrap();
    assert_eq!(vertices.len(), 8);
    for (w, coords) in vertices {
        let coords = coords.as_array().unwrap();
        assert_eq!(coords.len(), 3);
        let total = coords.iter().map(rat).fold(BigRational::zero(), |a, b| a + b);
        assert_eq!(total, sum, "{w}");
    }
    for e in v["edges"].as_array().unwrap() {
        assert!(rat(&e["length"]) > BigRational::zero());
    }
    assert_eq!(v["support_facets"].as_array().unwrap().len(), 6);
    // Every rational is in lowest terms with a positive denominator.
    for x in text.split('"').filter(|x| x.contains('/')) {
        let (p, q) = x.split_once('/').unwrap();
        let r = BigRational::new(p.parse().unwrap(), q.parse().unwrap());
        assert_eq!(format!("{}/{}", r.numer(), r.denom()), x);
    }
}

#[test]
fn realize_counts_for_1112() {
    let o = oruga(&["realize", "--s", "1,1,1,2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let perms = words(&[1, 1, 1, 2]);
    let ascents = |w: &String| w.as_bytes().windows(2).filter(|p| p[0] < p[1]).count();
    let nv = v["vertices"].as_object().unwrap().len();
    let ne = v["edges"].as_array().unwrap().len();
    let faces = v["faces"].as_array().unwrap();
    assert_eq!(nv, perms.len());
    assert_eq!(ne, perms.iter().map(ascents).sum::<usize>());
    assert_eq!(faces.len(), perms.iter().map(|w| 1usize << ascents(w)).sum::<usize>());
    // Alternating face count of a 3-polytope including itself.
    let mut by_dim = BTreeMap::new();
    for f in faces {
        *by_dim.entry(f["A"].as_array().unwrap().len()).or_insert(0i64) += 1;
    }
    let euler: i64 = by_dim.iter().map(|(d, c)| if d % 2 == 0 { *c } else { -c }).sum();
    assert_eq!(euler, 1, "{by_dim:?}");
}

#[test]
fn inadmissible_heights_exit_3() {
    let o = oruga(&["realize", "--s", "1,2,1", "--epsilon", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("inadmissible epsilon"));

    let s = Composition::new(vec![1, 2, 1]).unwrap();
    let g = OrugaGraph::new(&s).unwrap();
    let zero: BTreeMap<String, String> = g.routes().iter().map(|r| (r.key(), "0/1".to_string())).collect();
    let path = scratch("zero.json");
    std::fs::write(&path, serde_json::to_string(&zero).unwrap()).unwrap();
    let o = oruga(&["realize", "--s", "1,2,1", "--heights", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("conflict"), "{}", stderr(&o));
    std::fs::remove_file(&path).ok();
}

#[test]
fn custom_heights_reproduce_default() {
    let s = Composition::new(vec![2, 1, 2]).unwrap();
    let g = OrugaGraph::new(&s).unwrap();
    let h = HeightFunction::default_epsilon(&g);
    let map: BTreeMap<String, String> =
        h.values().iter().map(|(r, x)| (r.key(), format!("{}/{}", x.numer(), x.denom()))).collect();
    let path = scratch("default.json");
    std::fs::write(&path, serde_json::to_string(&map).unwrap()).unwrap();
    let custom = oruga(&["realize", "--s", "2,1,2", "--heights", path.to_str().unwrap()]);
    let default = oruga(&["realize", "--s", "2,1,2"]);
    assert_eq!(custom.status.code(), Some(0), "{}", stderr(&custom));
    let (mut a, mut b): (Value, Value) =
        (serde_json::from_str(&stdout(&custom)).unwrap(), serde_json::from_str(&stdout(&default)).unwrap());
    assert_eq!(a["epsilon"], Value::Null);
    a["epsilon"] = Value::Null;
    b["epsilon"] = Value::Null;
    assert_eq!(a, b);

    let mut partial = map.clone();
    partial.pop_first();
    std::fs::write(&path, serde_json::to_string(&partial).unwrap()).unwrap();
    let o = oruga(&["realize", "--s", "2,1,2", "--heights", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_suites() {
    let o = oruga(&["verify", "--s", "1,2,1", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().count() >= 7);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");

    let o = oruga(&["verify", "--s", "1,0,1", "--suite", "lidskii"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ")));

    let o = oruga(&["verify", "--s", "1,0,1", "--suite", "duality"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("strict composition required"));

    assert_eq!(oruga(&["verify", "--s", "1,2,1", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn usage_errors_and_budget() {
    assert_eq!(oruga(&["count", "--s", "1,,x"]).status.code(), Some(2));
    assert_eq!(oruga(&["enumerate", "--s", "1,0,1"]).status.code(), Some(2));
    assert_eq!(oruga(&["hasse", "--s", "1,2,1", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(oruga(&["realize", "--s", "1,2,1", "--epsilon", "-1/3"]).status.code(), Some(2));
    assert_eq!(oruga(&["--help"]).status.code(), Some(0));

    let o = Command::new(env!("CARGO_BIN_EXE_oruga"))
        .args(["enumerate", "--s", "1,2,1"])
        .env("ORUGA_MAX_PERMUTATIONS", "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_oruga"))
        .args(["enumerate", "--s", "1,2,1"])
        .env("ORUGA_MAX_PERMUTATIONS", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_file() {
    let path = scratch("count.txt");
    let o = oruga(&["count", "--s", "2,2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), format!("{}\n", words(&[2, 2]).len()));
    std::fs::remove_file(&path).ok();
}
