use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use crosscap_core::d2tree::{
    children, default_t_values, generation, mother, slope_path, territory,
};
use crosscap_core::oracle::{verify_formulas, verify_tree, VerifyReport};
use crosscap_core::{crosscap_bw, crosscap_new, normalize_lens, std_expand, Error, ExtRational};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::json;
use crate::render::{render_svg, RenderError, RenderOptions};

/// Longest mother chain the CLI will walk; each step is one band sum.
pub const MAX_PATH_STEPS: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "crosscap",
    version,
    about = "Minimum crosscap numbers of lens spaces and the even-slope tree"
)]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum crosscap number of L(P,Q).
    #[command(allow_negative_numbers = true)]
    Crosscap {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
        /// Which computation to report.
        #[arg(long, value_enum, default_value_t = Method::Bw)]
        method: Method,
        /// Show the b, α' and β sequences.
        #[arg(long)]
        trace: bool,
    },
    /// Boundary slopes of the band sums from 0/1 to P/Q.
    #[command(allow_negative_numbers = true)]
    Path {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
    },
    /// Standard continued fraction of P/Q.
    #[command(allow_negative_numbers = true)]
    Cf {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
    },
    /// Mother of the vertex P/Q.
    #[command(allow_negative_numbers = true)]
    Mother {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
    },
    /// Children of the vertex P/Q.
    #[command(allow_negative_numbers = true)]
    Children {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
        /// Number of children, taken in the order t = 1, -3, 3, -5, ...
        #[arg(long, default_value_t = 6)]
        count: usize,
        /// Explicit odd child parameters; overrides --count.
        #[arg(long = "t", value_parser = parse_int, value_delimiter = ',')]
        t: Vec<BigInt>,
    },
    /// Number of mother steps from P/Q to 0/1.
    #[command(allow_negative_numbers = true)]
    Generation {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
    },
    /// Open interval holding P/Q and all its descendants.
    #[command(allow_negative_numbers = true)]
    Territory {
        #[arg(value_parser = parse_int)]
        p: BigInt,
        #[arg(value_parser = parse_int)]
        q: BigInt,
    },
    /// Brute-force check of the tree and of the crosscap formulas.
    Verify {
        /// Largest |p| + q of the vertices in the searched ball.
        #[arg(long, default_value_t = 500)]
        max_size: u64,
        /// Largest even p for the formula comparison.
        #[arg(long, default_value_t = 200)]
        max_p: u64,
    },
    /// Draw the tree in the Poincaré disk as SVG.
    Render {
        /// Depth of the drawn tree below 0/1.
        #[arg(long)]
        generations: usize,
        /// Emphasize the path from 0/1 to P/Q; P/Q must be drawn.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], value_parser = parse_int, allow_negative_numbers = true)]
        highlight: Option<Vec<BigInt>>,
        /// Faint Farey graph underneath.
        #[arg(long)]
        farey: bool,
        /// Children drawn below each vertex on each side of 0/1.
        #[arg(long, default_value_t = 3)]
        per_vertex: usize,
        /// Label vertices up to this generation.
        #[arg(long, default_value_t = 3)]
        labels: usize,
        /// Width and height in pixels.
        #[arg(long, default_value_t = 800)]
        width: u32,
        /// Output file; standard output when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Bw,
    New,
    Path,
    All,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|_| format!("{s:?} is not an integer"))
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("the path has {0} steps, more than the limit of {MAX_PATH_STEPS}")]
    PathTooLong(BigInt),
    #[error("verification failed")]
    VerifyFailed,
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Runs one command line and returns the exit code: 0 on success, 1 on a
/// domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::VerifyFailed) => 1,
        // The reader went away, as with `| head`; nothing left to report.
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("plain data serializes");
    writeln!(out, "{text}")?;
    Ok(())
}

fn check_path_length(p: &BigInt, q: &BigInt) -> Result<(), Failure> {
    let total = crosscap_bw(&normalize_lens(p.clone(), q.clone())?).total;
    if total > BigInt::from(MAX_PATH_STEPS) {
        return Err(Failure::PathTooLong(total));
    }
    Ok(())
}

fn seq(xs: &[impl std::fmt::Display]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn show_ext(x: &ExtRational) -> String {
    if x.is_infinite() {
        "∞".to_owned()
    } else if x.denom() == &1u32.into() {
        x.numer().to_string()
    } else {
        x.to_string()
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let as_json = cli.json;
    match &cli.command {
        Command::Crosscap {
            p,
            q,
            method,
            trace,
        } => {
            let lens = normalize_lens(p.clone(), q.clone())?;
            let bw = crosscap_bw(&lens);
            let new = crosscap_new(&lens);
            let path = match method {
                Method::Path | Method::All => {
                    check_path_length(p, q)?;
                    Some(slope_path(p.clone(), q.clone())?.crosscap)
                }
                _ => None,
            };
            let value = match method {
                Method::Bw | Method::All => bw.total.clone(),
                Method::New => new.total.clone(),
                Method::Path => BigInt::from(path.unwrap()),
            };
            let want = |m: Method| *method == m || *method == Method::All;
            if as_json {
                emit(
                    out,
                    &json::CrosscapOut {
                        command: "crosscap",
                        p: json::int(p),
                        q: json::int(q),
                        q_normalized: json::int(&lens.q_normalized),
                        method: match method {
                            Method::Bw => "bw",
                            Method::New => "new",
                            Method::Path => "path",
                            Method::All => "all",
                        },
                        crosscap: json::int(&value),
                        bw: want(Method::Bw).then(|| json::int(&bw.total)),
                        new: want(Method::New).then(|| json::int(&new.total)),
                        path: path.map(|k| k.to_string()),
                        trace: trace.then(|| json::TraceOut::new(&bw, &new)),
                    },
                )?;
            } else {
                if *method == Method::All {
                    writeln!(
                        out,
                        "Cr({p},{q}) = {value} (bw={}, new={}, path={})",
                        bw.total,
                        new.total,
                        path.unwrap()
                    )?;
                } else {
                    writeln!(out, "Cr({p},{q}) = {value}")?;
                }
                if *trace {
                    writeln!(
                        out,
                        "lens: p = {}, q = {}, q_normalized = {}",
                        lens.p, lens.q, lens.q_normalized
                    )?;
                    writeln!(
                        out,
                        "bw:  a = {}  b = {}  sum/2 = {}",
                        bw.a,
                        seq(&bw.b),
                        bw.total
                    )?;
                    let mut alpha: Vec<&BigInt> = new.alpha.terms().iter().collect();
                    alpha.reverse();
                    let ap: Vec<String> = new.alpha_prime.iter().map(show_ext).collect();
                    writeln!(
                        out,
                        "new: alpha_0.. = {}  alpha' = {}  beta = {}  sum = {}",
                        seq(&alpha),
                        seq(&ap),
                        seq(&new.beta),
                        new.total
                    )?;
                }
            }
        }
        Command::Path { p, q } => {
            check_path_length(p, q)?;
            let r = slope_path(p.clone(), q.clone())?;
            if as_json {
                emit(out, &json::PathOut::new(p, q, &r))?;
            } else {
                for (i, (s, e)) in r.slopes.iter().zip(&r.expansions).enumerate() {
                    let sign = if s.is_negative() { "-" } else { "" };
                    writeln!(out, "r{i} = {s}  {sign}{e}")?;
                }
                writeln!(out, "crosscap = {}", r.crosscap)?;
                writeln!(out, "euler_char = {}", r.euler_char)?;
            }
        }
        Command::Cf { p, q } => {
            let x = ExtRational::new(p.clone(), q.clone())?;
            let e = std_expand(&x)?;
            if as_json {
                emit(
                    out,
                    &json::CfOut {
                        command: "cf",
                        value: json::frac(&x),
                        expansion: json::cf(&e),
                    },
                )?;
            } else {
                writeln!(out, "{x} = {e}")?;
            }
        }
        Command::Mother { p, q } => {
            let x = ExtRational::new(p.clone(), q.clone())?;
            let m = mother(&x)?;
            if as_json {
                emit(
                    out,
                    &json::MotherOut {
                        command: "mother",
                        vertex: json::frac(&x),
                        mother: json::frac(&m),
                    },
                )?;
            } else {
                writeln!(out, "M({x}) = {m}")?;
            }
        }
        Command::Children { p, q, count, t } => {
            let x = ExtRational::new(p.clone(), q.clone())?;
            let ts = if t.is_empty() {
                default_t_values(&x, *count)
            } else {
                t.clone()
            };
            let cs = children(&x, &ts)?;
            if as_json {
                emit(
                    out,
                    &json::ChildrenOut {
                        command: "children",
                        vertex: json::frac(&x),
                        children: ts
                            .iter()
                            .zip(&cs)
                            .map(|(t, c)| json::ChildOut {
                                t: json::int(t),
                                child: json::frac(c),
                            })
                            .collect(),
                    },
                )?;
            } else {
                for (t, c) in ts.iter().zip(&cs) {
                    writeln!(out, "t={t}  {c}")?;
                }
            }
        }
        Command::Generation { p, q } => {
            let x = ExtRational::new(p.clone(), q.clone())?;
            if crosscap_core::d2tree::is_vertex(&x) && !x.is_zero() {
                check_path_length(&x.numer().abs(), &x.denom_int())?;
            }
            let g = generation(&x)?;
            if as_json {
                emit(
                    out,
                    &json::GenerationOut {
                        command: "generation",
                        vertex: json::frac(&x),
                        generation: g,
                    },
                )?;
            } else {
                writeln!(out, "generation({x}) = {g}")?;
            }
        }
        Command::Territory { p, q } => {
            let x = ExtRational::new(p.clone(), q.clone())?;
            let t = territory(&x)?;
            if as_json {
                emit(out, &json::TerritoryOut::new(&x, &t))?;
            } else {
                writeln!(out, "T({x}) = ({}, {})", t.lo, t.hi)?;
            }
        }
        Command::Verify { max_size, max_p } => {
            let tree = verify_tree(*max_size);
            let formulas = verify_formulas(*max_p);
            let passed = tree.passed() && formulas.passed();
            if as_json {
                emit(
                    out,
                    &json::VerifyOut {
                        command: "verify",
                        max_size: *max_size,
                        max_p: *max_p,
                        passed,
                        tree: (&tree).into(),
                        formulas: (&formulas).into(),
                    },
                )?;
            } else {
                write_report(out, &format!("tree (size <= {max_size})"), &tree)?;
                write_report(out, &format!("formulas (even p <= {max_p})"), &formulas)?;
                writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
            }
            if !passed {
                return Err(Failure::VerifyFailed);
            }
        }
        Command::Render {
            generations,
            highlight,
            farey,
            per_vertex,
            labels,
            width,
            output,
        } => {
            let opts = RenderOptions {
                show_farey: *farey,
                highlight: highlight.as_ref().map(|v| (v[0].clone(), v[1].clone())),
                width_px: *width,
                children_per_vertex: *per_vertex,
                label_generations: *labels,
            };
            let r = render_svg(*generations, &opts)?;
            if let Some(path) = output {
                std::fs::write(path, &r.svg)?;
            }
            if as_json {
                let mut hl: Vec<String> =
                    r.highlighted.iter().map(|(a, _)| json::frac(a)).collect();
                if let Some((_, last)) = r.highlighted.last() {
                    hl.push(json::frac(last));
                }
                emit(
                    out,
                    &json::RenderOut {
                        command: "render",
                        generations: *generations,
                        vertex_count: r.vertices.len(),
                        edge_count: r.edges.len(),
                        highlighted: hl,
                        output: output.as_ref().map(|p| p.display().to_string()),
                        svg: output.is_none().then(|| r.svg.clone()),
                    },
                )?;
            } else if let Some(path) = output {
                writeln!(
                    out,
                    "wrote {} ({} vertices, {} edges)",
                    path.display(),
                    r.vertices.len(),
                    r.edges.len()
                )?;
            } else {
                out.write_all(r.svg.as_bytes())?;
            }
        }
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, title: &str, r: &VerifyReport) -> std::io::Result<()> {
    let mark = |b: bool| if b { "ok" } else { "FAILED" };
    writeln!(out, "{title}:")?;
    writeln!(
        out,
        "  vertices = {}, edges = {}, cases = {}",
        r.vertex_count, r.edge_count, r.cases_checked
    )?;
    writeln!(out, "  connected: {}", mark(r.connected))?;
    writeln!(out, "  acyclic: {}", mark(r.acyclic))?;
    writeln!(
        out,
        "  smaller neighbor is mother: {}",
        mark(r.parent_matches_mother)
    )?;
    writeln!(
        out,
        "  depth = generation = formulas: {}",
        mark(r.depth_matches_formulas)
    )?;
    if let Some(c) = &r.first_counterexample {
        writeln!(out, "  first counterexample: {c:?}")?;
    }
    Ok(())
}
