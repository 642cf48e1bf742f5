use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use qtrace::biangle::{parse_signs, trace_b, StatedTangle, TangleWord};
use qtrace::check::{run_suite, Suite};
use qtrace::classical::{classical_state_sum, holonomy_trace};
use qtrace::flip::{reposition_link, transfer_trace};
use qtrace::io;
use qtrace::quantum_torus::QTElement;
use qtrace::state_sum::{quantum_trace_with, BoundaryState, GoodPositionLink, Method, TraceOptions, MAX_POINTS};
use qtrace::surface::IdealTriangulation;
use qtrace::{Error, Result};

#[derive(Parser)]
#[command(name = "qtrace", about = "Quantum trace of stated framed links")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quantum trace of a link in good position.
    Trace {
        #[arg(short, long)]
        surface: PathBuf,
        #[arg(short, long)]
        link: PathBuf,
        /// Boundary state file. Defaults to no boundary points.
        #[arg(short = 't', long)]
        state: Option<PathBuf>,
        /// Also print coefficients evaluated at w, e.g. `w=0.6+0.8i`.
        #[arg(long)]
        eval: Option<String>,
        /// Trace every boundary state.
        #[arg(long)]
        all_states: bool,
        /// Enumerate all states instead of contracting.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = MAX_POINTS)]
        max_points: usize,
    },
    /// Classical state sum of a curve given as a turn sequence.
    Classical {
        #[arg(short, long)]
        surface: PathBuf,
        #[arg(short, long)]
        curve: PathBuf,
        /// Shear coordinates; prints the numeric trace and the holonomy check.
        #[arg(short = 'x', long)]
        shears: Option<PathBuf>,
    },
    /// Compare the transferred trace with the direct trace after a flip.
    Flip {
        #[arg(short, long)]
        surface: PathBuf,
        #[arg(short, long)]
        edge: String,
        #[arg(short, long)]
        link: PathBuf,
        #[arg(short = 't', long)]
        state: Option<PathBuf>,
    },
    /// Run a property suite on a link.
    Check {
        #[arg(short, long)]
        surface: PathBuf,
        #[arg(short, long)]
        link: PathBuf,
        /// moves, skein, classical, leading or balanced
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Biangle trace of a stated tangle word.
    Bracket {
        #[arg(short, long)]
        word: String,
        /// Signs on wall 0, bottom to top, e.g. `+-`.
        #[arg(long = "in", default_value = "")]
        s0: String,
        /// Signs on wall 1.
        #[arg(long = "out", default_value = "")]
        s1: String,
    },
}

enum Outcome {
    Ok,
    Mismatch,
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", p.display()) })
}

fn load(surface: &Path, link: &Path) -> Result<(Arc<IdealTriangulation>, GoodPositionLink)> {
    let tri = Arc::new(io::parse_surface(&read(surface)?)?);
    let l = io::parse_link(&tri, &read(link)?)?;
    Ok((tri, l))
}

fn print_trace(label: &str, t: &QTElement, eval: Option<num_complex::Complex64>) -> Result<()> {
    println!("{label}{t}");
    if let Some(w) = eval {
        for (k, c) in t.weyl_terms() {
            let v = c.eval_complex(w)?;
            println!("  {k:?}: {:.12} {:+.12}i", v.re, v.im);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Trace { surface, link, state, eval, all_states, naive, max_points } => {
            let (tri, l) = load(&surface, &link)?;
            let eval = eval.map(|s| io::parse_eval_point(&s)).transpose()?;
            let opts = TraceOptions { method: if naive { Method::Naive } else { Method::Contract }, max_points };
            let states = match (all_states, state) {
                (true, _) => BoundaryState::all(&l),
                (false, Some(p)) => vec![io::parse_state(&tri, &read(&p)?)?],
                (false, None) => vec![BoundaryState::default()],
            };
            for s in &states {
                let t = quantum_trace_with(&l, s, opts)?;
                let label = if all_states { format!("{}: ", s.describe(&tri)) } else { String::new() };
                print_trace(&label, &t, eval)?;
            }
            Ok(Outcome::Ok)
        }
        Cmd::Classical { surface, curve, shears } => {
            let tri = io::parse_surface(&read(&surface)?)?;
            let steps = io::parse_curve(&tri, &read(&curve)?)?;
            let poly = classical_state_sum(&steps, tri.n_edges());
            println!("{poly}");
            let Some(p) = shears else { return Ok(Outcome::Ok) };
            let x = io::parse_shears(&tri, &read(&p)?)?;
            let v = poly.eval(&x.roots(tri.n_edges())?);
            let h = holonomy_trace(&steps, &x)?;
            println!("state sum: {v:.12}");
            println!("holonomy:  {h:.12}");
            if (v - h).abs() <= 1e-9 * h.abs().max(1.0) {
                println!("MATCH");
                Ok(Outcome::Ok)
            } else {
                println!("MISMATCH");
                Ok(Outcome::Mismatch)
            }
        }
        Cmd::Flip { surface, edge, link, state } => {
            let (tri, l) = load(&surface, &link)?;
            let e = tri
                .edge_index(&edge)
                .or_else(|| edge.parse::<usize>().ok().filter(|i| (1..=tri.n_edges()).contains(i)).map(|i| i - 1))
                .ok_or_else(|| Error::Flip(format!("unknown edge `{edge}`")))?;
            let s = match state {
                Some(p) => io::parse_state(&tri, &read(&p)?)?,
                None => BoundaryState::default(),
            };
            let moved = reposition_link(&l, e)?;
            let via = transfer_trace(&l, e, &s)?;
            let direct = quantum_trace_with(&moved, &s, TraceOptions::default())?;
            println!("transfer: {via}");
            println!("direct:   {direct}");
            if via == direct {
                println!("MATCH");
                Ok(Outcome::Ok)
            } else {
                println!("MISMATCH");
                Ok(Outcome::Mismatch)
            }
        }
        Cmd::Check { surface, link, suite, seed } => {
            let (_, l) = load(&surface, &link)?;
            let suite: Suite = suite.parse()?;
            let report = run_suite(&l, suite, seed)?;
            let mut bad = 0;
            for a in &report {
                println!("{} {}", if a.ok { "ok  " } else { "FAIL" }, a.what);
                bad += usize::from(!a.ok);
            }
            println!("{} assertions, {bad} failed", report.len());
            Ok(if bad == 0 { Outcome::Ok } else { Outcome::Mismatch })
        }
        Cmd::Bracket { word, s0, s1 } => {
            let s0 = parse_signs(&s0)?;
            let s1 = parse_signs(&s1)?;
            let w = TangleWord::parse(&word, s0.len())?;
            println!("{}", trace_b(&StatedTangle::new(w, s0, s1)?)?);
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
