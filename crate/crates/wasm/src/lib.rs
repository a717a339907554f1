//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string, so
//! the page needs no generated TypeScript types. Failures come back as
//! `{"ok": false, "error": "..."}`.

use linked_domain::generate::{candidate_names, gen_edge_realizing, gen_impartial_culture};
use linked_domain::recognition::greedy_closure;
use linked_domain::{
    build_graph, export_dot, parse_native, parse_preflib_soc, recognize, write_native,
    ConnectivityGraph, Election, Mode, RecognitionResult,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Certificates on large profiles can list thousands of seeds; the page only
/// shows the first few.
const MAX_CERTIFICATE_ROWS: usize = 64;

#[derive(Serialize)]
struct CheckView {
    ok: bool,
    names: Vec<String>,
    m: usize,
    n: u64,
    mode: String,
    edges: Vec<(usize, usize)>,
    linked: bool,
    witness: Option<Vec<usize>>,
    seeds_tried: usize,
    certificate: Vec<StuckRow>,
    dot: String,
}

#[derive(Serialize)]
struct StuckRow {
    seed: (usize, usize),
    stuck: Vec<usize>,
}

#[derive(Serialize)]
struct ClosureView {
    ok: bool,
    seed: (usize, usize),
    /// Insertion order, seed first.
    order: Vec<usize>,
    /// Neighbors inside the final reached set, per candidate.
    counters: Vec<u32>,
    complete: bool,
}

#[derive(Serialize)]
struct ProfileView {
    ok: bool,
    text: String,
}

#[derive(Serialize)]
struct ErrorView {
    ok: bool,
    error: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(view) => to_json(&view),
        Err(error) => to_json(&ErrorView { ok: false, error }),
    }
}

fn parse(text: &str, format: &str) -> Result<Election, String> {
    let parsed = match format {
        "soc" => parse_preflib_soc(text),
        "native" | "" => parse_native(text),
        other => return Err(format!("unknown format {other:?}")),
    };
    parsed.map_err(|e| e.to_string())
}

fn graph(e: &Election, mode: Mode) -> Result<ConnectivityGraph, String> {
    let g = if e.m() == 1 {
        ConnectivityGraph::from_edges(1, [])
    } else {
        build_graph(e, mode)
    };
    g.map(|g| g.with_mode(mode)).map_err(|e| e.to_string())
}

fn check_view(text: &str, format: &str, mode: &str) -> Result<CheckView, String> {
    let mode: Mode = mode.parse()?;
    let e = parse(text, format)?;
    let g = graph(&e, mode)?;
    let result = recognize(&g);
    let (witness, seeds_tried, certificate) = match &result {
        RecognitionResult::Linked(w) => (Some(w.as_slice().to_vec()), 0, Vec::new()),
        RecognitionResult::NotLinked(c) => (
            None,
            c.len(),
            c.iter()
                .take(MAX_CERTIFICATE_ROWS)
                .map(|(seed, stuck)| StuckRow {
                    seed,
                    stuck: stuck.to_vec(),
                })
                .collect(),
        ),
    };
    let names = e.names();
    Ok(CheckView {
        ok: true,
        names: names.iter().map(|s| s.to_string()).collect(),
        m: e.m(),
        n: e.n(),
        mode: mode.to_string(),
        edges: g.edges().to_vec(),
        linked: result.is_linked(),
        witness,
        seeds_tried,
        certificate,
        dot: export_dot(&g, &names),
    })
}

/// Parses `text`, builds its connectivity graph and recognizes it.
#[wasm_bindgen]
pub fn check_profile(text: &str, format: &str, mode: &str) -> String {
    respond(check_view(text, format, mode))
}

/// Runs the greedy extension from the seed edge `{a, b}` and returns the
/// insertion order, for step-by-step display.
#[wasm_bindgen]
pub fn closure_trace(text: &str, format: &str, mode: &str, a: usize, b: usize) -> String {
    respond((|| {
        let mode: Mode = mode.parse()?;
        let e = parse(text, format)?;
        let g = graph(&e, mode)?;
        let state = greedy_closure(&g, (a, b)).map_err(|e| e.to_string())?;
        Ok(ClosureView {
            ok: true,
            seed: state.seed(),
            order: state.reached().to_vec(),
            counters: (0..g.m()).map(|v| state.counter(v)).collect(),
            complete: state.is_complete(),
        })
    })())
}

/// Native-format profile from either `ic` (impartial culture, `candidates`
/// and `votes`) or `edges` (`edge_list` of `u v` lines on `candidates`
/// vertices).
#[wasm_bindgen]
pub fn generate_profile(model: &str, candidates: usize, votes: u32, seed: u32, edge_list: &str) -> String {
    respond((|| {
        let e = match model {
            "ic" => gen_impartial_culture(candidates, votes.into(), seed.into()),
            "edges" => {
                let mut edges = Vec::new();
                for (i, line) in edge_list.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let ids: Vec<usize> = line
                        .split(|c: char| c.is_whitespace() || c == ',' || c == '-')
                        .filter(|t| !t.is_empty())
                        .map(str::parse)
                        .collect::<Result<_, _>>()
                        .map_err(|_| format!("line {}: expected `u v`", i + 1))?;
                    match ids.as_slice() {
                        [u, v] => edges.push((*u, *v)),
                        _ => return Err(format!("line {}: expected `u v`", i + 1)),
                    }
                }
                let m = edges
                    .iter()
                    .map(|&(u, v)| u.max(v) + 1)
                    .max()
                    .unwrap_or(0)
                    .max(candidates);
                let g = ConnectivityGraph::from_edges(m, edges).map_err(|e| e.to_string())?;
                gen_edge_realizing(&g)
            }
            other => return Err(format!("unknown model {other:?}")),
        };
        let e = e.map_err(|e| e.to_string())?;
        Ok(ProfileView {
            ok: true,
            text: write_native(&e),
        })
    })())
}

/// Names used for generated profiles, as a JSON array.
#[wasm_bindgen]
pub fn default_names(m: usize) -> String {
    to_json(&candidate_names(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn json(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    const K3: &str = "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n1: a > c > b\n\
                      1: c > a > b\n1: b > c > a\n1: c > b > a\n";

    #[test]
    fn check_linked() {
        let v = json(check_profile(K3, "native", "strong"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["linked"], true);
        assert_eq!(v["witness"], serde_json::json!([0, 1, 2]));
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
        assert!(v["dot"].as_str().unwrap().starts_with("graph {"));
    }

    #[test]
    fn check_not_linked_lists_stuck_sets() {
        let text = "candidates: a, b, c\n1: a > b > c\n1: b > a > c\n";
        let v = json(check_profile(text, "native", "strong"));
        assert_eq!(v["linked"], false);
        assert!(v["witness"].is_null());
        assert_eq!(v["seeds_tried"], 1);
        assert_eq!(v["certificate"][0]["stuck"], serde_json::json!([0, 1]));
    }

    #[test]
    fn errors_are_reported() {
        let v = json(check_profile("1: a > b", "native", "strong"));
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("line 1"));
        assert_eq!(json(check_profile(K3, "native", "loose"))["ok"], false);
        assert_eq!(json(check_profile(K3, "xml", "strong"))["ok"], false);
    }

    #[test]
    fn trace() {
        let v = json(closure_trace(K3, "native", "strong", 1, 2));
        assert_eq!(v["order"], serde_json::json!([1, 2, 0]));
        assert_eq!(v["complete"], true);
        let v = json(closure_trace("candidates: a, b, c\n1: a > b > c\n", "native", "weak", 0, 2));
        assert_eq!(v["ok"], false);
    }

    #[test]
    fn generated_profiles_parse() {
        let v = json(generate_profile("ic", 5, 12, 3, ""));
        let text = v["text"].as_str().unwrap();
        assert_eq!(parse_native(text).unwrap().n(), 12);

        let v = json(generate_profile("edges", 0, 0, 0, "0 1\n0-2\n1,2\n"));
        let text = v["text"].as_str().unwrap();
        assert_eq!(json(check_profile(text, "native", "strong"))["linked"], true);

        assert_eq!(json(generate_profile("edges", 0, 0, 0, "0 0"))["ok"], false);
        assert_eq!(json(generate_profile("mallows", 3, 3, 0, ""))["ok"], false);
        assert_eq!(json(default_names(3)), serde_json::json!(["a", "b", "c"]));
    }
}
