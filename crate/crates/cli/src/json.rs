//! JSON shapes for `--json` output.
//!
//! Fractions are `"num/den"` strings and arbitrary-precision integers are
//! decimal strings, so no consumer truncates them to 64 bits. Step counts
//! (path lengths, generations, vertex counts) are plain numbers.

use crosscap_core::d2tree::{PathResult, Territory};
use crosscap_core::oracle::{Counterexample, VerifyReport};
use crosscap_core::{BWTrace, ContFrac, ExtRational, NewTrace};
use num_bigint::BigInt;
use serde::Serialize;

pub fn frac(x: &ExtRational) -> String {
    x.to_string()
}

pub fn int(x: &BigInt) -> String {
    x.to_string()
}

pub fn ints(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(int).collect()
}

pub fn cf(c: &ContFrac) -> Vec<String> {
    ints(c.terms())
}

#[derive(Serialize)]
pub struct CrosscapOut {
    pub command: &'static str,
    pub p: String,
    pub q: String,
    pub q_normalized: String,
    pub method: &'static str,
    pub crosscap: String,
    pub bw: Option<String>,
    pub new: Option<String>,
    pub path: Option<String>,
    pub trace: Option<TraceOut>,
}

#[derive(Serialize)]
pub struct TraceOut {
    pub expansion: Vec<String>,
    pub b: Vec<String>,
    /// Standard terms listed from `α0` (the last term) up to `αn`.
    pub alpha: Vec<String>,
    pub alpha_prime: Vec<String>,
    pub beta: Vec<String>,
}

impl TraceOut {
    pub fn new(bw: &BWTrace, new: &NewTrace) -> Self {
        let mut alpha = ints(new.alpha.terms());
        alpha.reverse();
        Self {
            expansion: cf(&bw.a),
            b: ints(&bw.b),
            alpha,
            alpha_prime: new.alpha_prime.iter().map(frac).collect(),
            beta: ints(&new.beta),
        }
    }
}

#[derive(Serialize)]
pub struct PathOut {
    pub command: &'static str,
    pub p: String,
    pub q: String,
    pub slopes: Vec<String>,
    pub expansions: Vec<Vec<String>>,
    pub crosscap: usize,
    pub euler_char: i64,
}

impl PathOut {
    pub fn new(p: &BigInt, q: &BigInt, r: &PathResult) -> Self {
        Self {
            command: "path",
            p: int(p),
            q: int(q),
            slopes: r.slopes.iter().map(frac).collect(),
            expansions: r.expansions.iter().map(cf).collect(),
            crosscap: r.crosscap,
            euler_char: r.euler_char,
        }
    }
}

#[derive(Serialize)]
pub struct CfOut {
    pub command: &'static str,
    pub value: String,
    pub expansion: Vec<String>,
}

#[derive(Serialize)]
pub struct MotherOut {
    pub command: &'static str,
    pub vertex: String,
    pub mother: String,
}

#[derive(Serialize)]
pub struct ChildOut {
    pub t: String,
    pub child: String,
}

#[derive(Serialize)]
pub struct ChildrenOut {
    pub command: &'static str,
    pub vertex: String,
    pub children: Vec<ChildOut>,
}

#[derive(Serialize)]
pub struct GenerationOut {
    pub command: &'static str,
    pub vertex: String,
    pub generation: usize,
}

#[derive(Serialize)]
pub struct TerritoryOut {
    pub command: &'static str,
    pub vertex: String,
    pub lo: String,
    pub hi: String,
}

impl TerritoryOut {
    pub fn new(x: &ExtRational, t: &Territory) -> Self {
        Self {
            command: "territory",
            vertex: frac(x),
            lo: frac(&t.lo),
            hi: frac(&t.hi),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterexampleOut {
    Unreachable {
        vertex: String,
    },
    Cycle {
        vertex_count: usize,
        edge_count: usize,
        components: usize,
    },
    Parent {
        vertex: String,
        smaller_neighbors: Vec<String>,
        mother: String,
    },
    Depth {
        vertex: String,
        depth: usize,
        generation: usize,
        bw: String,
        new: String,
    },
    Formula {
        p: String,
        q: String,
        bw: String,
        new: String,
        path: usize,
        path_flipped: usize,
    },
}

impl From<&Counterexample> for CounterexampleOut {
    fn from(c: &Counterexample) -> Self {
        match c {
            Counterexample::Unreachable { vertex } => Self::Unreachable {
                vertex: frac(vertex),
            },
            Counterexample::Cycle {
                vertex_count,
                edge_count,
                components,
            } => Self::Cycle {
                vertex_count: *vertex_count,
                edge_count: *edge_count,
                components: *components,
            },
            Counterexample::Parent {
                vertex,
                smaller_neighbors,
                mother,
            } => Self::Parent {
                vertex: frac(vertex),
                smaller_neighbors: smaller_neighbors.iter().map(frac).collect(),
                mother: frac(mother),
            },
            Counterexample::Depth {
                vertex,
                depth,
                generation,
                bw,
                new,
            } => Self::Depth {
                vertex: frac(vertex),
                depth: *depth,
                generation: *generation,
                bw: int(bw),
                new: int(new),
            },
            Counterexample::Formula {
                p,
                q,
                bw,
                new,
                path,
                path_flipped,
            } => Self::Formula {
                p: int(p),
                q: int(q),
                bw: int(bw),
                new: int(new),
                path: *path,
                path_flipped: *path_flipped,
            },
        }
    }
}

#[derive(Serialize)]
pub struct ReportOut {
    pub passed: bool,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub cases_checked: usize,
    pub connected: bool,
    pub acyclic: bool,
    pub parent_matches_mother: bool,
    pub depth_matches_formulas: bool,
    pub first_counterexample: Option<CounterexampleOut>,
}

impl From<&VerifyReport> for ReportOut {
    fn from(r: &VerifyReport) -> Self {
        Self {
            passed: r.passed(),
            vertex_count: r.vertex_count,
            edge_count: r.edge_count,
            cases_checked: r.cases_checked,
            connected: r.connected,
            acyclic: r.acyclic,
            parent_matches_mother: r.parent_matches_mother,
            depth_matches_formulas: r.depth_matches_formulas,
            first_counterexample: r.first_counterexample.as_ref().map(Into::into),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub command: &'static str,
    pub max_size: u64,
    pub max_p: u64,
    pub passed: bool,
    pub tree: ReportOut,
    pub formulas: ReportOut,
}

#[derive(Serialize)]
pub struct RenderOut {
    pub command: &'static str,
    pub generations: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub highlighted: Vec<String>,
    pub output: Option<String>,
    /// The document itself when no output file was given.
    pub svg: Option<String>,
}
