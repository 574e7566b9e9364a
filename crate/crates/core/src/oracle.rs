//! Brute-force check of the tree structure on a finite ball.
//!
//! The ball of radius `N` holds every even vertex `p/q` with `p ≥ 0`,
//! `q ≥ 1` and `p + q ≤ N`. Edges are found by testing the determinant of
//! every pair, so the graph is built without any continued-fraction code and
//! can be compared against the mother map and the crosscap formulas.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::crosscap::{crosscap_bw, crosscap_new};
use crate::d2tree::{generation, mother, slope_path};
use crate::exactfrac::normalize_lens;
use crate::ExtRational;

/// Even vertices of size at most `size_bound` and the distance-2 pairs
/// among them.
#[derive(Clone, Debug)]
pub struct BallGraph {
    pub size_bound: u64,
    /// Sorted by size, then by value.
    pub vertices: Vec<ExtRational>,
    /// Index pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
    raw: Vec<(u64, u64)>,
}

impl BallGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn size_of(&self, i: usize) -> u64 {
        self.raw[i].0 + self.raw[i].1
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

pub fn build_ball(size_bound: u64) -> BallGraph {
    let mut raw = Vec::new();
    for size in 1..=size_bound {
        // p even, q = size − p ≥ 1
        for p in (0..size).step_by(2) {
            let q = size - p;
            if p.gcd(&q) == 1 {
                raw.push((p, q));
            }
        }
    }
    // Within one size, p/q increases with p.
    let edges = pairwise_distance_two(&raw);
    let vertices = raw
        .iter()
        .map(|&(p, q)| ExtRational::new(p, q).expect("q ≥ 1"))
        .collect();
    BallGraph {
        size_bound,
        vertices,
        edges,
        raw,
    }
}

const CHUNK: usize = 64;

/// All index pairs at determinant distance 2.
///
/// Values are compared in `f64`, which is exact while every product stays
/// below 2^53; larger balls fall back to `i128`.
fn pairwise_distance_two(raw: &[(u64, u64)]) -> Vec<(usize, usize)> {
    let max = raw.iter().map(|&(p, q)| p.max(q)).max().unwrap_or(0);
    if max < (1 << 26) {
        pairwise_f64(raw)
    } else {
        pairwise_wide(raw)
    }
}

fn pairwise_f64(raw: &[(u64, u64)]) -> Vec<(usize, usize)> {
    let ps: Vec<f64> = raw.iter().map(|&(p, _)| p as f64).collect();
    let qs: Vec<f64> = raw.iter().map(|&(_, q)| q as f64).collect();
    let mut edges = Vec::new();
    for i in 0..raw.len() {
        let (pi, qi) = (ps[i], qs[i]);
        let mut start = i + 1;
        while start < raw.len() {
            let end = (start + CHUNK).min(raw.len());
            // Scan a block without branching, then revisit it on a hit.
            let hit = ps[start..end]
                .iter()
                .zip(&qs[start..end])
                .fold(false, |acc, (&r, &s)| {
                    let d = pi * s - r * qi;
                    acc | (d * d == 4.0)
                });
            if hit {
                for j in start..end {
                    let d = pi * qs[j] - ps[j] * qi;
                    if d * d == 4.0 {
                        edges.push((i, j));
                    }
                }
            }
            start = end;
        }
    }
    edges
}

fn pairwise_wide(raw: &[(u64, u64)]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, &(p, q)) in raw.iter().enumerate() {
        for (j, &(r, s)) in raw.iter().enumerate().skip(i + 1) {
            let d = p as i128 * s as i128 - r as i128 * q as i128;
            if d == 2 || d == -2 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// First failure found by a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// A vertex that breadth-first search from `0/1` never reached.
    Unreachable { vertex: ExtRational },
    /// Edge count differs from `vertex_count − components`.
    Cycle {
        vertex_count: usize,
        edge_count: usize,
        components: usize,
    },
    /// The neighbors of smaller size are not exactly `{mother(vertex)}`.
    Parent {
        vertex: ExtRational,
        smaller_neighbors: Vec<ExtRational>,
        mother: ExtRational,
    },
    /// Search depth, generation and the two formulas disagree.
    Depth {
        vertex: ExtRational,
        depth: usize,
        generation: usize,
        bw: BigInt,
        new: BigInt,
    },
    /// The formulas and the path length disagree on `L(p, q)`.
    Formula {
        p: BigInt,
        q: BigInt,
        bw: BigInt,
        new: BigInt,
        path: usize,
        path_flipped: usize,
    },
}

/// Outcome of [`verify_tree`] or [`verify_formulas`].
///
/// Checks that a run does not exercise are reported as `true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub cases_checked: usize,
    pub connected: bool,
    pub acyclic: bool,
    pub parent_matches_mother: bool,
    pub depth_matches_formulas: bool,
    pub first_counterexample: Option<Counterexample>,
}

impl VerifyReport {
    fn empty() -> Self {
        Self {
            vertex_count: 0,
            edge_count: 0,
            cases_checked: 0,
            connected: true,
            acyclic: true,
            parent_matches_mother: true,
            depth_matches_formulas: true,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.connected && self.acyclic && self.parent_matches_mother && self.depth_matches_formulas
    }

    fn fail(&mut self, c: Counterexample) {
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(c);
        }
    }
}

/// Checks on the ball of radius `size_bound`: connected, acyclic, the unique
/// smaller neighbor of each vertex is its mother, and search depth equals
/// generation and both crosscap formulas.
pub fn verify_tree(size_bound: u64) -> VerifyReport {
    let ball = build_ball(size_bound);
    verify_ball(&ball)
}

pub fn verify_ball(ball: &BallGraph) -> VerifyReport {
    let mut report = VerifyReport::empty();
    report.vertex_count = ball.vertex_count();
    report.edge_count = ball.edge_count();
    report.cases_checked = ball.vertex_count();
    if ball.vertices.is_empty() {
        return report;
    }
    let adj = ball.adjacency();

    // Components and BFS depth from the root, which is vertex 0.
    let mut depth: Vec<Option<usize>> = vec![None; adj.len()];
    let mut components = 0;
    for start in 0..adj.len() {
        if depth[start].is_some() {
            continue;
        }
        components += 1;
        depth[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = depth[u].unwrap();
            for &v in &adj[u] {
                if depth[v].is_none() {
                    depth[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    if components > 1 {
        report.connected = false;
        let stray = (0..adj.len())
            .find(|&i| !reachable_from_root(&adj, i))
            .expect("more than one component");
        report.fail(Counterexample::Unreachable {
            vertex: ball.vertices[stray].clone(),
        });
    }
    if report.edge_count + components != report.vertex_count {
        report.acyclic = false;
        report.fail(Counterexample::Cycle {
            vertex_count: report.vertex_count,
            edge_count: report.edge_count,
            components,
        });
    }

    for (i, v) in ball.vertices.iter().enumerate().skip(1) {
        let smaller: Vec<ExtRational> = adj[i]
            .iter()
            .filter(|&&j| ball.size_of(j) < ball.size_of(i))
            .map(|&j| ball.vertices[j].clone())
            .collect();
        let m = mother(v).expect("non-root even vertex");
        if smaller.len() != 1 || smaller[0] != m {
            report.parent_matches_mother = false;
            report.fail(Counterexample::Parent {
                vertex: v.clone(),
                smaller_neighbors: smaller,
                mother: m,
            });
        }

        let lens = normalize_lens(v.numer().clone(), v.denom_int()).expect("even p ≥ 2");
        let bw = crosscap_bw(&lens).total;
        let new = crosscap_new(&lens).total;
        let g = generation(v).expect("even vertex");
        let d = depth[i].unwrap_or(usize::MAX);
        if report.connected && !(d == g && bw == BigInt::from(g) && new == bw) {
            report.depth_matches_formulas = false;
            report.fail(Counterexample::Depth {
                vertex: v.clone(),
                depth: d,
                generation: g,
                bw,
                new,
            });
        }
    }
    if !report.connected {
        report.depth_matches_formulas = false;
    }
    report
}

fn reachable_from_root(adj: &[Vec<usize>], target: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        if u == target {
            return true;
        }
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Three-way agreement of the Bredon–Wood sum, the halving formula and the
/// path length for every even `p ≤ p_max` and coprime `1 ≤ q < p`, plus
/// agreement of the paths to `p/q` and `p/(p − q)`.
pub fn verify_formulas(p_max: u64) -> VerifyReport {
    let mut report = VerifyReport::empty();
    for p in (2..=p_max).step_by(2) {
        for q in (1..p).filter(|q| q.gcd(&p) == 1) {
            report.cases_checked += 1;
            let lens = normalize_lens(p, q).expect("valid lens parameters");
            let bw = crosscap_bw(&lens).total;
            let new = crosscap_new(&lens).total;
            let path = slope_path(p, q).expect("valid lens parameters").crosscap;
            let path_flipped = slope_path(p, p - q)
                .expect("valid lens parameters")
                .crosscap;
            if bw != new || bw != BigInt::from(path) || path != path_flipped {
                report.depth_matches_formulas = false;
                report.fail(Counterexample::Formula {
                    p: p.into(),
                    q: q.into(),
                    bw,
                    new,
                    path,
                    path_flipped,
                });
            }
        }
    }
    report
}
