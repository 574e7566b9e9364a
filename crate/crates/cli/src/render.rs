//! SVG pictures of the even-slope tree in the Poincaré disk.
//!
//! Slopes live on the boundary circle via `z ↦ (z + i)/(iz + 1)`, so `0/1`
//! sits at the top, `∞` at the bottom and positive slopes on the right.
//! Graph structure stays exact; only coordinates are floating point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crosscap_core::d2tree::{children, default_t_values, is_vertex, mother};
use crosscap_core::exactfrac::distance;
use crosscap_core::{Error, ExtRational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// A point of the closed unit disk with exact rational coordinates
/// `(x_num/den, y_num/den)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskPoint {
    pub x_num: BigInt,
    pub y_num: BigInt,
    pub den: BigInt,
}

impl DiskPoint {
    pub fn to_f64(&self) -> (f64, f64) {
        (ratio(&self.x_num, &self.den), ratio(&self.y_num, &self.den))
    }
}

fn ratio(n: &BigInt, d: &BigInt) -> f64 {
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        // Both sides overflow f64: shift them down together.
        _ => {
            let shift = n.bits().max(d.bits()).saturating_sub(1000);
            let a = (n >> shift).to_f64().unwrap_or(0.0);
            let b = (d >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

/// Image of the boundary point `p/q` (or `∞`) in the disk:
/// `(2pq, q² − p²) / (p² + q²)`.
pub fn cayley(x: &ExtRational) -> DiskPoint {
    let p = x.numer();
    let q = x.denom_int();
    DiskPoint {
        x_num: BigInt::from(2) * p * &q,
        y_num: &q * &q - p * p,
        den: p * p + &q * &q,
    }
}

/// A hyperbolic geodesic between two boundary points.
#[derive(Clone, Debug, PartialEq)]
pub enum Geodesic {
    /// Arc of the circle through both ends that meets the unit circle at
    /// right angles.
    Arc {
        from: (f64, f64),
        to: (f64, f64),
        center: (f64, f64),
        radius: f64,
    },
    /// Antipodal ends: a diameter.
    Diameter { from: (f64, f64), to: (f64, f64) },
}

const ANTIPODAL_EPS: f64 = 1e-12;

impl Geodesic {
    /// The tangents at `u` and `v` meet at the center `(u + v)/(1 + u·v)`.
    pub fn between(u: (f64, f64), v: (f64, f64)) -> Self {
        let dot = u.0 * v.0 + u.1 * v.1;
        if 1.0 + dot < ANTIPODAL_EPS {
            return Geodesic::Diameter { from: u, to: v };
        }
        let k = 1.0 / (1.0 + dot);
        let center = ((u.0 + v.0) * k, (u.1 + v.1) * k);
        let radius = (center.0 - u.0).hypot(center.1 - u.1);
        Geodesic::Arc {
            from: u,
            to: v,
            center,
            radius,
        }
    }

    fn path_data(&self) -> String {
        match self {
            Geodesic::Diameter { from, to } => format!(
                "M {} {} L {} {}",
                num(from.0),
                num(-from.1),
                num(to.0),
                num(-to.1)
            ),
            Geodesic::Arc {
                from,
                to,
                center,
                radius,
            } => {
                // Screen coordinates flip y, which flips the orientation too.
                let cross = (from.0 - center.0) * (to.1 - center.1)
                    - (from.1 - center.1) * (to.0 - center.0);
                let sweep = u8::from(cross < 0.0);
                format!(
                    "M {} {} A {r} {r} 0 0 {sweep} {} {}",
                    num(from.0),
                    num(-from.1),
                    num(to.0),
                    num(-to.1),
                    r = num(*radius),
                )
            }
        }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub show_farey: bool,
    pub highlight: Option<(BigInt, BigInt)>,
    pub width_px: u32,
    /// Children drawn per vertex, in the order `t = 1, −3, 3, −5, …`.
    pub children_per_vertex: usize,
    /// Labels are drawn in full up to this generation, faded one generation
    /// past it, and dropped after that.
    pub label_generations: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            show_farey: false,
            highlight: None,
            width_px: 800,
            children_per_vertex: 3,
            label_generations: 3,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("highlight target {0} is not an even vertex within the rendered generations")]
    BadHighlight(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

/// The rendered graph alongside its SVG text.
#[derive(Clone, Debug)]
pub struct Rendering {
    /// Each vertex with its generation.
    pub vertices: Vec<(ExtRational, usize)>,
    /// `(mother, child)` pairs.
    pub edges: Vec<(ExtRational, ExtRational)>,
    pub geodesics: Vec<Geodesic>,
    pub highlighted: Vec<(ExtRational, ExtRational)>,
    pub svg: String,
}

/// Builds the first `generations` generations on both sides of `0/1`.
fn grow(generations: usize, per_vertex: usize) -> Result<Vec<(ExtRational, usize)>, Error> {
    let root = ExtRational::zero();
    let mut out = vec![(root.clone(), 0)];
    let mut frontier = vec![root];
    for g in 1..=generations {
        let mut next = Vec::new();
        for x in &frontier {
            next.extend(children(x, &default_t_values(x, per_vertex))?);
        }
        out.extend(next.iter().map(|c| (c.clone(), g)));
        frontier = next;
    }
    let mirrored: Vec<_> = out.iter().skip(1).map(|(x, g)| (x.neg(), *g)).collect();
    out.extend(mirrored);
    Ok(out)
}

pub fn render_svg(generations: usize, opts: &RenderOptions) -> Result<Rendering, RenderError> {
    let vertices = grow(generations, opts.children_per_vertex)?;
    let edges: Vec<(ExtRational, ExtRational)> = vertices
        .iter()
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, _)| Ok((mother(x)?, x.clone())))
        .collect::<Result<_, Error>>()?;

    let highlighted = match &opts.highlight {
        None => Vec::new(),
        Some((p, q)) => highlight_chain(&vertices, p, q)?,
    };

    let point = |x: &ExtRational| cayley(x).to_f64();
    let geodesics: Vec<Geodesic> = edges
        .iter()
        .map(|(a, b)| Geodesic::between(point(a), point(b)))
        .collect();

    let mut svg = String::new();
    let w = opts.width_px;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="-1.05 -1.05 2.1 2.1">"#
    );
    let _ = writeln!(
        svg,
        r##"<circle cx="0" cy="0" r="1" fill="none" stroke="#000" stroke-width="0.004"/>"##
    );
    if opts.show_farey {
        let _ = writeln!(
            svg,
            r##"<g class="farey" fill="none" stroke="#bbb" stroke-width="0.0015">"##
        );
        for g in farey_underlay(&vertices) {
            let _ = writeln!(svg, r#"<path d="{}"/>"#, g.path_data());
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(
        svg,
        r##"<g class="tree" fill="none" stroke="#000" stroke-width="0.003">"##
    );
    for g in &geodesics {
        let _ = writeln!(svg, r#"<path d="{}"/>"#, g.path_data());
    }
    let _ = writeln!(svg, "</g>");
    if !highlighted.is_empty() {
        let _ = writeln!(
            svg,
            r##"<g class="highlight" fill="none" stroke="#d62728" stroke-width="0.008">"##
        );
        for (a, b) in &highlighted {
            let _ = writeln!(
                svg,
                r#"<path d="{}"/>"#,
                Geodesic::between(point(a), point(b)).path_data()
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, r##"<g class="vertices" fill="#000">"##);
    for (x, _) in &vertices {
        let (px, py) = point(x);
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="0.008"/>"#,
            num(px),
            num(-py)
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<g class="labels" font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">"#
    );
    for (x, g) in &vertices {
        if *g > opts.label_generations + 1 {
            continue;
        }
        let (px, py) = point(x);
        let size = 0.05 / (1.0 + *g as f64 * 0.35);
        let opacity = if *g > opts.label_generations {
            0.4
        } else {
            1.0
        };
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-size="{}" opacity="{}">{x}</text>"#,
            num(px * 0.93),
            num(-py * 0.93),
            num(size),
            opacity
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");

    Ok(Rendering {
        vertices,
        edges,
        geodesics,
        highlighted,
        svg,
    })
}

fn highlight_chain(
    vertices: &[(ExtRational, usize)],
    p: &BigInt,
    q: &BigInt,
) -> Result<Vec<(ExtRational, ExtRational)>, RenderError> {
    let label = format!("{p}/{q}");
    let target = ExtRational::new(p.clone(), q.clone())
        .map_err(|_| RenderError::BadHighlight(label.clone()))?;
    let present: BTreeSet<&ExtRational> = vertices.iter().map(|(x, _)| x).collect();
    if !is_vertex(&target) || !present.contains(&target) {
        return Err(RenderError::BadHighlight(label));
    }
    let mut chain = Vec::new();
    let mut cur = target;
    while !cur.is_zero() {
        let m = mother(&cur)?;
        chain.push((m.clone(), cur));
        cur = m;
    }
    chain.reverse();
    Ok(chain)
}

/// Farey edges (distance 1) among the slopes of size at most one more than
/// the largest rendered vertex, capped to keep the picture light.
fn farey_underlay(vertices: &[(ExtRational, usize)]) -> Vec<Geodesic> {
    const MAX_SIZE: u64 = 24;
    let largest = vertices
        .iter()
        .filter_map(|(x, _)| {
            if x.is_negative() { x.neg() } else { x.clone() }
                .size()
                .ok()
        })
        .filter_map(|s| s.to_u64())
        .max()
        .unwrap_or(1);
    let bound = (largest + 1).min(MAX_SIZE) as i64;
    let mut pts: BTreeMap<ExtRational, (f64, f64)> = BTreeMap::new();
    pts.insert(ExtRational::infinity(), (0.0, -1.0));
    for size in 1..=bound {
        for p in 0..size {
            let q = size - p;
            for n in [p, -p] {
                if let Ok(x) = ExtRational::new(n, q) {
                    if x.denom_int() == BigInt::from(q) {
                        pts.insert(x.clone(), cayley(&x).to_f64());
                    }
                }
            }
        }
    }
    let pts: Vec<_> = pts.into_iter().collect();
    let mut out = Vec::new();
    for (i, (a, ua)) in pts.iter().enumerate() {
        for (b, ub) in &pts[i + 1..] {
            if distance(a, b) == 1u32.into() {
                out.push(Geodesic::between(*ua, *ub));
            }
        }
    }
    out
}

/// Unit-circle defect `|x² + y² − 1|` of a point, for checks.
pub fn circle_defect(p: (f64, f64)) -> f64 {
    (p.0 * p.0 + p.1 * p.1 - 1.0).abs()
}

/// Exact check that a disk point lies on the unit circle.
pub fn on_unit_circle(p: &DiskPoint) -> bool {
    !p.den.is_zero() && &p.x_num * &p.x_num + &p.y_num * &p.y_num == &p.den * &p.den
}
