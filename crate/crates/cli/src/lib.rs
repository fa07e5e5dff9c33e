//! Command-line front end for `stashpeel`.
//!
//! Exit codes: 0 on success, 1 when a search hits its cap or a certificate
//! or gadget fails verification, 2 on bad input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use stashpeel::gadgets::{
    build_b_block, build_ck_gadget, build_simple_stable_block, build_stable_block, build_tree_stable_block,
    build_vertex_gadget, check_gadget, Gadget, GadgetReport,
};
use stashpeel::random::gen_random;
use stashpeel::reductions::{
    lift_edge_stash, normalize_stash, parse_map, reduce_vc_to_vertex_stash, reduce_vertex_to_edge_stash, write_map,
    Direction, Owner,
};
use stashpeel::solvers::{
    greedy_stash, min_edge_stash_exact, min_vertex_cover_exact, min_vertex_stash_exact, two_edge_stash_standard,
    TieBreak, DEFAULT_SIZE_CAP,
};
use stashpeel::text::{format_stash, parse, parse_stash, serialize, serialize_annotated};
use stashpeel::{k_core, Hypergraph, Stash, StashKind, StashResult, VertexId};

pub const THREADS_ENV: &str = "STASHPEEL_THREADS";

#[derive(Parser, Debug)]
#[command(name = "stashpeel", version, about = "k-core peeling, stashes and reduction gadgets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the k-core with a `# peeled:` trail.
    Peel {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        file: PathBuf,
    },
    /// Minimum stash by exhaustive search.
    StashExact {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        cap: usize,
        file: PathBuf,
    },
    /// Greedy stash: stash one core element at a time until the core is empty.
    StashGreedy {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Tie::MaxDegree)]
        tie: Tie,
        /// Seed for `--tie random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        file: PathBuf,
    },
    /// Minimum 2-edge-stash of a standard graph via the cyclomatic number.
    #[command(name = "stash-2edge")]
    Stash2edge { file: PathBuf },
    /// Minimum vertex cover of a standard graph.
    Cover {
        #[arg(long, default_value_t = 16)]
        cap: usize,
        file: PathBuf,
    },
    /// Reduce an instance; the map is written next to the input unless `--map-out` is given.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        d: u64,
        #[arg(long)]
        map_out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Translate a stash of the reduced instance back to the source instance.
    Lift {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        stash: PathBuf,
        /// Reduced instance; checked against the one rebuilt from the map.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Run the gadget checkers and print a TSV report.
    VerifyGadgets {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        d: u64,
        /// Check every k' in 2..=k and d' in 2..=d.
        #[arg(long)]
        grid: bool,
        /// Largest stable-block degree checked.
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        /// Largest tree-block degree checked.
        #[arg(long, default_value_t = 5)]
        max_p: usize,
    },
    /// Print one gadget with `# port` and `# estar` annotations.
    Gadget {
        #[arg(long = "type", value_enum)]
        kind: GadgetType,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        d: u64,
        /// m, p or δ depending on the gadget.
        #[arg(long, alias = "m", alias = "p", default_value_t = 1)]
        degree: usize,
    },
    /// Random d-uniform hypergraph (ChaCha8, rejection-sampled indices).
    GenRandom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        d: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Tie {
    MaxDegree,
    MinId,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Source {
    Vc,
    Vstash,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GadgetType {
    Ck,
    B2,
    B3,
    SimpleStable,
    Stable,
    TreeStable,
    Vertex,
}

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Negative(String),
    /// Exit 2.
    Input(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Negative(m) | Failure::Input(m) => f.write_str(m),
        }
    }
}

impl From<stashpeel::Error> for Failure {
    fn from(e: stashpeel::Error) -> Self {
        use stashpeel::Error::*;
        match e {
            CapExceeded { .. } | ContractViolation(_) => Failure::Negative(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            match f {
                Failure::Negative(_) => 1,
                Failure::Input(_) => 2,
            }
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got `{raw}`"))?;
    // A second call in the same process finds the pool already built.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Input(format!("write failed: {e}")))
}

fn emit_result(out: &mut dyn Write, r: &StashResult) -> Outcome {
    emit(
        out,
        &format!("{}\nsize={} optimal={}\n", format_stash(&r.stash), r.size(), r.optimal),
    )
}

fn usize_arg(x: u64) -> usize {
    usize::try_from(x).unwrap_or(usize::MAX)
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Peel { k, file } => {
            let h = load(&file)?;
            let trace = k_core(&h, usize_arg(k));
            let mut core = h.clone();
            for &v in &trace.peeled_vertices {
                core.remove_vertex(v)?;
            }
            let peeled: String = trace.peeled_vertices.iter().map(|v| format!(" {v}")).collect();
            emit(out, &serialize_annotated(&core, &[format!("peeled:{peeled}")]))
        }
        Command::StashExact { k, mode, cap, file } => {
            let h = load(&file)?;
            let r = match mode {
                Mode::Vertex => min_vertex_stash_exact(&h, usize_arg(k), cap)?,
                Mode::Edge => min_edge_stash_exact(&h, usize_arg(k), cap)?,
            };
            emit_result(out, &r)
        }
        Command::StashGreedy {
            k,
            mode,
            tie,
            seed,
            file,
        } => {
            let h = load(&file)?;
            let kind = match mode {
                Mode::Vertex => StashKind::Vertex,
                Mode::Edge => StashKind::Edge,
            };
            let tie = match tie {
                Tie::MaxDegree => TieBreak::MaxDegree,
                Tie::MinId => TieBreak::MinId,
                Tie::Random => TieBreak::SeededRandom(seed),
            };
            emit_result(out, &greedy_stash(&h, usize_arg(k), kind, tie))
        }
        Command::Stash2edge { file } => {
            let h = load(&file)?;
            let cert = two_edge_stash_standard(&h)?;
            emit(out, &format!("# h={} components={}\n", cert.h, cert.components))?;
            emit_result(out, &cert.into_stash_result())
        }
        Command::Cover { cap, file } => {
            let h = load(&file)?;
            let cover = min_vertex_cover_exact(&h, cap)?;
            let size = cover.len();
            emit(
                out,
                &format!("{}\nsize={size} optimal=true\n", format_stash(&Stash::Vertices(cover))),
            )
        }
        Command::Reduce {
            from,
            k,
            d,
            map_out,
            file,
        } => {
            let g = load(&file)?;
            let (k, d) = (usize_arg(k), usize_arg(d));
            let (reduced, map) = match from {
                Source::Vc => reduce_vc_to_vertex_stash(&g, k, d)?,
                Source::Vstash => reduce_vertex_to_edge_stash(&g, k, d)?,
            };
            let map_path = map_out.unwrap_or_else(|| {
                let mut p = file.clone().into_os_string();
                p.push(".map");
                PathBuf::from(p)
            });
            std::fs::write(&map_path, write_map(&map)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", map_path.display())))?;
            let notes = [format!("reduced from {} k={k} d={d} map={}", map.direction, map_path.display())];
            emit(out, &serialize_annotated(&reduced, &notes))
        }
        Command::Lift { map, stash, graph } => {
            let (reduced, map) = parse_map(&read(&map)?).map_err(|e| Failure::Input(format!("{}: {e}", map.display())))?;
            if let Some(path) = graph {
                if serialize(&load(&path)?) != serialize(&reduced) {
                    return Err(Failure::Input(format!(
                        "{} is not the instance recorded in the map",
                        path.display()
                    )));
                }
            }
            let stash = parse_stash(&read(&stash)?)?;
            let lifted: BTreeSet<VertexId> = match (map.direction, stash) {
                (Direction::VsToEs, Stash::Edges(s)) => lift_edge_stash(&reduced, &map, &s)?,
                (Direction::VcToVs, Stash::Vertices(s)) => normalize_stash(&reduced, &map, &s)?
                    .into_iter()
                    .map(|v| match map.vertex_owner[v.index()] {
                        Owner::Vertex(orig) => orig,
                        Owner::Edge(_) => unreachable!("normalized stashes hold original vertices"),
                    })
                    .collect(),
                (Direction::VsToEs, Stash::Vertices(_)) => {
                    return Err(Failure::Input("a vstash map lifts edge stashes (`S e ...`)".into()))
                }
                (Direction::VcToVs, Stash::Edges(_)) => {
                    return Err(Failure::Input("a vc map lifts vertex stashes (`S v ...`)".into()))
                }
            };
            let size = lifted.len();
            emit(
                out,
                &format!("{}\nsize={size} optimal=false\n", format_stash(&Stash::Vertices(lifted))),
            )
        }
        Command::VerifyGadgets {
            k,
            d,
            grid,
            max_m,
            max_p,
        } => {
            let (k, d) = (usize_arg(k), usize_arg(d));
            let points: Vec<(usize, usize)> = if grid {
                (2..=k).flat_map(|k| (2..=d).map(move |d| (k, d))).collect()
            } else {
                vec![(k, d)]
            };
            let reports: Vec<GadgetReport> = points
                .par_iter()
                .flat_map_iter(|&(k, d)| gadgets_at(k, d, max_m, max_p))
                .map(|g| check_gadget(&g))
                .collect();
            let mut text = String::from("gadget\tparams\tcheck\tpass\twitness\n");
            for r in &reports {
                for row in r.tsv_rows() {
                    text.push_str(&row);
                    text.push('\n');
                }
            }
            emit(out, &text)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure::Negative(format!("{failed} gadget(s) failed verification")));
            }
            Ok(())
        }
        Command::Gadget { kind, k, d, degree } => {
            let (k, d) = (usize_arg(k), usize_arg(d));
            let g = match kind {
                GadgetType::Ck => build_ck_gadget(k, d)?,
                GadgetType::B2 => build_b_block(2, k, d)?,
                GadgetType::B3 => build_b_block(3, k, d)?,
                GadgetType::SimpleStable => build_simple_stable_block(degree, k, d)?,
                GadgetType::Stable => build_stable_block(degree, k, d)?,
                GadgetType::TreeStable => {
                    if k != 2 {
                        return Err(Failure::Input(format!("tree-stable blocks are for k = 2, got k = {k}")));
                    }
                    build_tree_stable_block(degree, d)?
                }
                GadgetType::Vertex => build_vertex_gadget(degree, k, d)?,
            };
            emit(out, &g.to_text())
        }
        Command::GenRandom { n, m, d, seed } => emit(out, &serialize(&gen_random(n, m, usize_arg(d), seed)?)),
    }
}

/// Every gadget built at one `(k, d)` point.
fn gadgets_at(k: usize, d: usize, max_m: usize, max_p: usize) -> Vec<Gadget> {
    let mut out = Vec::new();
    out.extend(build_ck_gadget(k, d));
    if k >= 3 {
        out.extend(build_b_block(2, k, d));
        out.extend(build_b_block(3, k, d));
        out.extend((1..k).filter_map(|m| build_simple_stable_block(m, k, d).ok()));
        out.extend((1..=max_m).filter_map(|m| build_stable_block(m, k, d).ok()));
    }
    if k == 2 && d >= 3 {
        out.extend((1..=max_p).filter_map(|p| build_tree_stable_block(p, d).ok()));
    }
    out.extend((0..=5).filter_map(|delta| build_vertex_gadget(delta, k, d).ok()));
    out
}
