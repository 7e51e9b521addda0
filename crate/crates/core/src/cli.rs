//! The `oruga` command line: `count`, `enumerate`, `hasse`, `realize` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 inadmissible height.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::combinat::{faces, HasseDiagram, StirlingPermutation};
use crate::composition::Composition;
use crate::flows::{OrugaGraph, Route};
use crate::geometry::{epsilon_bound, realize, GeometryError, HeightFunction, RealizedComplex, Q};
use crate::verify::{enumerate_within_budget, run_suites, Suite};

/// Overrides the default limit on `|W_s|` for subcommands that enumerate.
pub const BUDGET_VAR: &str = "ORUGA_MAX_PERMUTATIONS";
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "oruga", version, about = "Stirling s-permutations and the s-permutahedron")]
struct Args {
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of Stirling s-permutations. Weak compositions are allowed.
    Count {
        #[arg(long)]
        s: String,
    },
    /// List the Stirling s-permutations in lexicographic order.
    Enumerate {
        #[arg(long)]
        s: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
    /// The Hasse diagram of the s-weak order.
    Hasse {
        #[arg(long)]
        s: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Vertex coordinates, edges, faces and support facets of the realization.
    Realize {
        #[arg(long)]
        s: String,
        /// Exact rational `p/q` below the bound for `s`; defaults to half of it.
        #[arg(long, conflicts_with = "heights")]
        epsilon: Option<String>,
        /// JSON object from route keys `k:t:bits` to rationals `p/q`.
        #[arg(long)]
        heights: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RealizeFormat::Json)]
        format: RealizeFormat,
    },
    /// Run property suites and print one PASS, FAIL or SKIP line per check.
    Verify {
        #[arg(long)]
        s: String,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RealizeFormat {
    Json,
}

/// An error with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn inadmissible(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

/// Parses and runs one command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let budget = match budget() {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            return e.code;
        }
    };
    let (text, code) = match execute(&args.command, budget) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            return e.code;
        }
    };
    let written = match &args.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    code
}

fn budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::usage(format!("{BUDGET_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn parse_s(x: &str, strict: bool) -> Result<Composition, CliError> {
    let s: Composition = x.parse().map_err(|e| CliError::usage(format!("invalid composition {x:?}: {e}")))?;
    if strict {
        s.require_strict().map_err(|e| CliError::usage(e.to_string()))?;
    }
    Ok(s)
}

fn execute(cmd: &Command, budget: u64) -> Result<(String, i32), CliError> {
    match cmd {
        Command::Count { s } => Ok((format!("{}\n", parse_s(s, false)?.count_formula()), 0)),
        Command::Enumerate { s, format } => {
            let s = parse_s(s, true)?;
            let mut perms = enumerate_within_budget(&s, budget).map_err(CliError::usage)?;
            perms.sort();
            Ok((enumerate_text(&perms, *format), 0))
        }
        Command::Hasse { s, format } => {
            let s = parse_s(s, true)?;
            check_budget(&s, budget)?;
            let h = HasseDiagram::new(&s).map_err(|e| CliError::usage(e.to_string()))?;
            Ok((hasse_text(&s, &h, *format), 0))
        }
        Command::Realize { s, epsilon, heights, format: RealizeFormat::Json } => {
            let s = parse_s(s, true)?;
            check_budget(&s, budget)?;
            let rc = realize_for(&s, epsilon.as_deref(), heights.as_ref())?;
            Ok((realize_json(&s, &rc.0, rc.1.as_ref()), 0))
        }
        Command::Verify { s, suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|e: String| CliError::usage(e))?]
            };
            let weak_ok = suites.iter().all(|x| x.allows_weak());
            let s = parse_s(s, !weak_ok)?;
            if !weak_ok {
                check_budget(&s, budget)?;
            }
            let checks = run_suites(&s, &suites).map_err(|e| CliError::usage(e.to_string()))?;
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{c}\n"));
            }
            let code = if checks.iter().any(|c| c.failed()) { 1 } else { 0 };
            Ok((text, code))
        }
    }
}

fn check_budget(s: &Composition, budget: u64) -> Result<(), CliError> {
    let count = s.count_formula();
    if count > BigUint::from(budget) {
        return Err(CliError::usage(format!(
            "{count} permutations exceed the budget of {budget}; raise {BUDGET_VAR} to proceed"
        )));
    }
    Ok(())
}

fn enumerate_text(perms: &[StirlingPermutation], format: ListFormat) -> String {
    match format {
        ListFormat::Lines => perms.iter().map(|w| format!("{w}\n")).collect(),
        ListFormat::Json => {
            let words: Vec<String> = perms.iter().map(|w| w.to_string()).collect();
            format!("{}\n", serde_json::to_string(&words).expect("strings serialize"))
        }
    }
}

#[derive(Serialize)]
struct HasseJson {
    s: Vec<u32>,
    nodes: Vec<String>,
    arcs: Vec<ArcJson>,
}

#[derive(Serialize)]
struct ArcJson {
    from: String,
    to: String,
    ascent: [u8; 2],
}

fn hasse_text(s: &Composition, h: &HasseDiagram, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => {
            let mut t = format!("digraph \"s-weak order {s}\" {{\n  rankdir=BT;\n");
            for w in &h.nodes {
                t.push_str(&format!("  \"{w}\";\n"));
            }
            for c in &h.covers {
                let (a, b) = c.ascent;
                t.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{a},{b}\"];\n", h.nodes[c.from], h.nodes[c.to]));
            }
            t.push_str("}\n");
            t
        }
        GraphFormat::Json => {
            let j = HasseJson {
                s: s.parts().to_vec(),
                nodes: h.nodes.iter().map(|w| w.to_string()).collect(),
                arcs: h
                    .covers
                    .iter()
                    .map(|c| ArcJson {
                        from: h.nodes[c.from].to_string(),
                        to: h.nodes[c.to].to_string(),
                        ascent: [c.ascent.0, c.ascent.1],
                    })
                    .collect(),
            };
            format!("{}\n", serde_json::to_string_pretty(&j).expect("serializable"))
        }
    }
}

/// `p/q` or an integer, normalized.
pub fn parse_rational(x: &str) -> Result<Q, String> {
    let x = x.trim();
    let (p, q) = match x.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (x, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("{x:?} is not a rational p/q"))?;
    let q: BigInt = q.parse().map_err(|_| format!("{x:?} is not a rational p/q"))?;
    if q.is_zero() {
        return Err(format!("{x:?} has a zero denominator"));
    }
    Ok(Q::new(p, q))
}

/// Lowest terms with a positive denominator, always with a `/`.
pub fn format_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn realize_for(
    s: &Composition,
    epsilon: Option<&str>,
    heights: Option<&PathBuf>,
) -> Result<(RealizedComplex, Option<Q>), CliError> {
    let g = OrugaGraph::new(s).map_err(|e| CliError::usage(e.to_string()))?;
    let h = match (epsilon, heights) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            HeightFunction::custom(&g, parse_heights(s, &text)?).map_err(|e| CliError::usage(e.to_string()))?
        }
        (Some(e), None) => {
            let eps = parse_rational(e).map_err(CliError::usage)?;
            if !eps.is_positive() {
                return Err(CliError::usage(format!("epsilon must be positive, got {}", format_rational(&eps))));
            }
            let bound = epsilon_bound(s);
            if eps >= bound {
                return Err(CliError::inadmissible(format!(
                    "inadmissible epsilon: {} is not below {}",
                    format_rational(&eps),
                    format_rational(&bound)
                )));
            }
            HeightFunction::epsilon(&g, eps).map_err(|e| CliError::usage(e.to_string()))?
        }
        (None, None) => HeightFunction::default_epsilon(&g),
    };
    let eps = h.epsilon_value().cloned();
    let h = h.into_admissible(&g).map_err(|e| match e {
        GeometryError::Inadmissible { witness, margin } => CliError::inadmissible(format!(
            "inadmissible height: conflict {witness} has margin {}",
            format_rational(&margin)
        )),
        e => CliError::usage(e.to_string()),
    })?;
    let hasse = HasseDiagram::new(s).map_err(|e| CliError::usage(e.to_string()))?;
    let fs = faces(s).map_err(|e| CliError::usage(e.to_string()))?;
    let rc = realize(&h, &hasse, &fs).map_err(|e| CliError::usage(e.to_string()))?;
    Ok((rc, eps))
}

/// Reads `{"k:t:bits": "p/q", ...}`. Integers are accepted as values too.
pub fn parse_heights(s: &Composition, text: &str) -> Result<BTreeMap<Route, Q>, CliError> {
    let raw: BTreeMap<String, serde_json::Value> =
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("heights file: {e}")))?;
    let mut out = BTreeMap::new();
    for (k, v) in raw {
        let r = Route::parse_key(s, &k).map_err(|e| CliError::usage(format!("heights file: {e}")))?;
        let x = match &v {
            serde_json::Value::String(x) => parse_rational(x),
            serde_json::Value::Number(x) if x.is_i64() => parse_rational(&x.to_string()),
            _ => Err(format!("height of {k} must be a string \"p/q\"")),
        }
        .map_err(|e| CliError::usage(format!("heights file: {e}")))?;
        out.insert(r, x);
    }
    Ok(out)
}

#[derive(Serialize)]
struct RealizeJson {
    s: Vec<u32>,
    n: usize,
    epsilon: Option<String>,
    hyperplane_sum: String,
    vertices: BTreeMap<String, Vec<String>>,
    edges: Vec<EdgeJson>,
    faces: Vec<FaceJson>,
    support_facets: Vec<FacetJson>,
}

#[derive(Serialize)]
struct EdgeJson {
    from: String,
    to: String,
    ascent: [u8; 2],
    length: String,
}

#[derive(Serialize)]
struct FaceJson {
    w: String,
    #[serde(rename = "A")]
    a: Vec<[u8; 2]>,
    vertices: Vec<String>,
}

#[derive(Serialize)]
struct FacetJson {
    delta: Vec<u8>,
    lower: String,
    upper: String,
}

fn realize_json(s: &Composition, rc: &RealizedComplex, eps: Option<&Q>) -> String {
    let j = RealizeJson {
        s: s.parts().to_vec(),
        n: rc.n,
        epsilon: eps.map(format_rational),
        hyperplane_sum: format_rational(&rc.hyperplane_sum),
        vertices: rc.vertices.iter().map(|(w, v)| (w.to_string(), v.iter().map(format_rational).collect())).collect(),
        edges: rc
            .edges
            .iter()
            .map(|e| EdgeJson {
                from: e.from.to_string(),
                to: e.to.to_string(),
                ascent: [e.ascent.0, e.ascent.1],
                length: format_rational(&e.length),
            })
            .collect(),
        faces: rc
            .faces
            .iter()
            .map(|f| FaceJson {
                w: f.face.w.to_string(),
                a: f.face.ascents.iter().map(|&(a, c)| [a, c]).collect(),
                vertices: f.vertices.iter().map(|w| w.to_string()).collect(),
            })
            .collect(),
        support_facets: rc
            .support_facets
            .iter()
            .map(|f| FacetJson {
                delta: f.delta.iter().map(|&d| d as u8).collect(),
                lower: format_rational(&f.lower),
                upper: format_rational(&f.upper),
            })
            .collect(),
    };
    format!("{}\n", serde_json::to_string_pretty(&j).expect("serializable"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("oruga").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_and_enumerate() {
        assert_eq!(call(&["count", "--s", "1,2,1"]), (0, "8\n".into(), String::new()));
        let weak = Composition::weak(vec![1, 0, 1]).unwrap();
        let g = OrugaGraph::path(&weak);
        let flows = crate::flows::count_integer_flows(&g, &g.d_netflow()).unwrap();
        assert_eq!(call(&["count", "--s", "1 0 1"]).1, format!("{flows}\n"));
        assert_eq!(call(&["enumerate", "--s", "1", "--format", "lines"]).1, "1\n");
        let (code, out, _) = call(&["enumerate", "--s", "1,2,1", "--format", "json"]);
        assert_eq!(code, 0);
        let words: Vec<String> = serde_json::from_str(&out).unwrap();
        assert_eq!(words.len(), 8);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["count", "--s", "1,x"]).0, 2);
        assert_eq!(call(&["enumerate", "--s", "1,0,1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["realize", "--s", "1,2,1", "--epsilon", "0"]).0, 2);
        assert_eq!(call(&["realize", "--s", "1,2,1", "--epsilon", "1/0"]).0, 2);
    }

    #[test]
    fn inadmissible_epsilon() {
        let (code, _, err) = call(&["realize", "--s", "1,2,1", "--epsilon", "1"]);
        assert_eq!(code, 3);
        assert!(err.contains("inadmissible epsilon"), "{err}");
        assert_eq!(call(&["realize", "--s", "1,2,1", "--epsilon", "1/27"]).0, 3);
        assert_eq!(call(&["realize", "--s", "1,2,1", "--epsilon", "1/28"]).0, 0);
    }

    #[test]
    fn rationals() {
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational("5").unwrap()), "5/1");
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn hasse_of_two_letters() {
        let (code, out, _) = call(&["hasse", "--s", "1,1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nodes"], serde_json::json!(["12", "21"]));
        assert_eq!(v["arcs"], serde_json::json!([{"from": "12", "to": "21", "ascent": [1, 2]}]));
    }
}
