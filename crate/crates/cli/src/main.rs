//! Command-line front end for verification campaigns and single-graph
//! queries over graph6 input.
//!
//! Exit codes form a stable contract for CI: 0 for success with no
//! violations, 1 when a campaign or check finds violations, 2 for usage or
//! input errors.

mod campaign;
mod report;

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use sek_core::extremal::{
    classify_cycle_extremal, classify_path_extremal, cycle_free_bound, path_free_bound,
    spanning_bipartite_subgraph, BoundMode, ForbiddenFamily, EPS_EQ,
};
use sek_core::graph6;
use sek_core::spectral;

use campaign::{run_edge_bound_campaign, run_spectral_campaign, EdgeBoundCampaign, SpectralCampaign};
use report::{fmt_f64, CampaignReport};

/// Inclusive integer range, written as a single value `6` or a span
/// `3..8`.
#[derive(Clone, Copy, Debug)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    fn single(v: usize) -> Span {
        Span { lo: v, hi: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> Result<Span, String> {
        let parse = |v: &str| v.parse::<usize>().map_err(|_| format!("invalid number {v:?}"));
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span { lo: parse(lo)?, hi: parse(hi)? },
            None => Span::single(parse(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Parser)]
#[command(
    name = "sek",
    version,
    about = "Spectral extremal kit: sharp least-eigenvalue and bipartite radius bounds \
             for path- and cycle-free graphs, verified by exhaustive enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, size, spectrum, extreme eigenvalues, and bipartiteness
    /// for each graph6 line
    Spectrum {
        /// graph6 file, one graph per line (stdin when omitted)
        file: Option<PathBuf>,
    },
    /// Run a verification campaign over exhaustively enumerated graphs
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Graph orders to scan (thm-cycle and thm-path; default 3..8)
        #[arg(long)]
        n: Option<Span>,
        /// Forbidden-structure orders (default 3..8 for cycles, 2..8 for paths)
        #[arg(long)]
        t: Option<Span>,
        /// X-side sizes (lemma1 and lemma2; default 1..4)
        #[arg(long)]
        x: Option<Span>,
        /// Y-side sizes (lemma1 and lemma2; default 0..5)
        #[arg(long)]
        y: Option<Span>,
        /// Side parameter k (lemma1 and lemma2; default 1..3)
        #[arg(long)]
        k: Option<Span>,
        /// Check the radius upper bound over bipartite graphs instead of
        /// the least-eigenvalue lower bound
        #[arg(long)]
        bipartite_radius: bool,
        /// Parallel width of the scan (the report does not depend on it)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a forbidden-structure family for its minimum least eigenvalue
    Search {
        /// Graph order
        #[arg(long)]
        n: usize,
        /// Forbidden-structure order
        #[arg(long)]
        t: usize,
        /// Forbid the cycle on t vertices
        #[arg(long, conflicts_with = "path", required_unless_present = "path")]
        cycle: bool,
        /// Forbid the path on t vertices
        #[arg(long)]
        path: bool,
        /// Restrict the family to bipartite graphs (the minimum least
        /// eigenvalue is then the negated maximum radius)
        #[arg(long)]
        bipartite_radius: bool,
        /// Parallel width of the eigenvalue pass
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the result to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace each graph by its sign-partition spanning bipartite
    /// subgraph and print both least eigenvalues
    Bipartize {
        /// graph6 file, one graph per line (stdin when omitted)
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    /// Edge-count bound for bipartite graphs without an
    /// endpoint-constrained path
    Lemma1,
    /// Neighborhood cross-edge bound around every vertex
    Lemma2,
    /// Least-eigenvalue (or radius) bound for cycle-free graphs
    ThmCycle,
    /// Least-eigenvalue (or radius) bound for path-free graphs
    ThmPath,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) for a clean run, Ok(false) when violations were found, Err for
/// usage and input problems.
fn run(command: Command) -> Result<bool, String> {
    let eps_eq = eps_from_env()?;
    match command {
        Command::Spectrum { file } => cmd_spectrum(file),
        Command::Verify { target, n, t, x, y, k, bipartite_radius, jobs, out } => {
            let jobs = jobs.max(1);
            let report = match target {
                VerifyTarget::ThmCycle | VerifyTarget::ThmPath => {
                    let family = if target == VerifyTarget::ThmCycle {
                        ForbiddenFamily::CycleFree
                    } else {
                        ForbiddenFamily::PathFree
                    };
                    let default_t = if family == ForbiddenFamily::CycleFree { 3 } else { 2 };
                    run_spectral_campaign(&SpectralCampaign {
                        family,
                        n: n.unwrap_or(Span { lo: 3, hi: 8 }),
                        t: t.unwrap_or(Span { lo: default_t, hi: 8 }),
                        mode: if bipartite_radius {
                            BoundMode::BipartiteRadius
                        } else {
                            BoundMode::LeastEigenvalue
                        },
                        eps_eq,
                        jobs,
                    })?
                }
                VerifyTarget::Lemma1 | VerifyTarget::Lemma2 => run_edge_bound_campaign(
                    &EdgeBoundCampaign {
                        x: x.unwrap_or(Span { lo: 1, hi: 4 }),
                        y: y.unwrap_or(Span { lo: 0, hi: 5 }),
                        k: k.unwrap_or(Span { lo: 1, hi: 3 }),
                        eps_eq,
                        jobs,
                        local: target == VerifyTarget::Lemma2,
                    },
                )?,
            };
            emit_report(&report, out.as_deref())?;
            Ok(report.violations.is_empty())
        }
        Command::Search { n, t, cycle: _, path, bipartite_radius, jobs, out } => {
            let family = if path { ForbiddenFamily::PathFree } else { ForbiddenFamily::CycleFree };
            cmd_search(n, t, family, bipartite_radius, eps_eq, jobs.max(1), out.as_deref())
        }
        Command::Bipartize { file } => cmd_bipartize(file, eps_eq),
    }
}

fn eps_from_env() -> Result<f64, String> {
    match std::env::var("SEK_EPS_EQ") {
        Ok(raw) => raw
            .parse::<f64>()
            .ok()
            .filter(|eps| eps.is_finite() && *eps >= 0.0)
            .ok_or_else(|| format!("SEK_EPS_EQ must be a nonnegative number, got {raw:?}")),
        Err(_) => Ok(EPS_EQ),
    }
}

fn read_graph_lines(file: Option<PathBuf>) -> Result<Vec<(usize, String)>, String> {
    let content = match file {
        Some(path) => fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut buffer = String::new();
            io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            buffer
        }
    };
    Ok(content
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r').to_string()))
        .filter(|(_, line)| !line.is_empty())
        .collect())
}

fn decode_line(line_no: usize, line: &str) -> Result<sek_core::graph::Graph, String> {
    graph6::decode(line).map_err(|e| format!("line {line_no}: {e}"))
}

fn cmd_spectrum(file: Option<PathBuf>) -> Result<bool, String> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (line_no, line) in read_graph_lines(file)? {
        let g = decode_line(line_no, &line)?;
        let s = spectral::spectrum(&g).map_err(|e| format!("line {line_no}: {e}"))?;
        let values: Vec<String> = s.values().iter().map(|&v| fmt_f64(v)).collect();
        writeln!(
            out,
            "n={} e={} spectrum={} lambda_min={} rho={} bipartite={}",
            g.order(),
            g.edge_count(),
            values.join(","),
            fmt_f64(s.least()),
            fmt_f64(s.radius()),
            g.is_bipartite(),
        )
        .map_err(|e| e.to_string())?;
    }
    Ok(true)
}

fn cmd_search(
    n: usize,
    t: usize,
    family: ForbiddenFamily,
    bipartite_only: bool,
    eps_eq: f64,
    jobs: usize,
    out: Option<&std::path::Path>,
) -> Result<bool, String> {
    let result = campaign::run_search(n, t, family, bipartite_only, eps_eq, jobs)?;
    let bound = match family {
        ForbiddenFamily::CycleFree => cycle_free_bound(n, t),
        ForbiddenFamily::PathFree => path_free_bound(n, t),
    }
    .map_err(|e| e.to_string())?;
    let sound = result.min_value >= bound - eps_eq;

    let mut text = String::new();
    text.push_str(&format!("family: {}\n", family.as_str()));
    text.push_str(&format!("n: {n}\nt: {t}\n"));
    text.push_str(&format!("bipartite_only: {bipartite_only}\n"));
    text.push_str(&format!("family_size: {}\n", result.family_size));
    text.push_str(&format!("bound: {}\n", fmt_f64(bound)));
    text.push_str(&format!("min: {}\n", fmt_f64(result.min_value)));
    text.push_str(&format!("bound_satisfied: {sound}\n"));
    text.push_str(&format!("argmin: {}\n", result.argmin.len()));
    for (i, code) in result.argmin.iter().enumerate() {
        let g = graph6::decode(code).expect("canonical codes are valid graph6");
        let case = match family {
            ForbiddenFamily::CycleFree => classify_cycle_extremal(&g, t),
            ForbiddenFamily::PathFree => classify_path_extremal(&g, t),
        }
        .map_err(|e| e.to_string())?;
        text.push_str(&format!("argmin[{i}]: {code} case={}\n", case.as_str()));
    }
    write_text(&text, out)?;
    Ok(sound)
}

fn cmd_bipartize(file: Option<PathBuf>, eps_eq: f64) -> Result<bool, String> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut monotone = true;
    for (line_no, line) in read_graph_lines(file)? {
        let g = decode_line(line_no, &line)?;
        let (h, _) = spanning_bipartite_subgraph(&g).map_err(|e| format!("line {line_no}: {e}"))?;
        let before = spectral::least_eigenvalue(&g).map_err(|e| format!("line {line_no}: {e}"))?;
        let after = spectral::least_eigenvalue(&h).expect("same order as g");
        if after > before + eps_eq {
            eprintln!("line {line_no}: bipartization raised the least eigenvalue");
            monotone = false;
            continue;
        }
        writeln!(
            out,
            "graph6={} lambda_before={} lambda_after={}",
            graph6::encode(&h),
            fmt_f64(before),
            fmt_f64(after),
        )
        .map_err(|e| e.to_string())?;
    }
    Ok(monotone)
}

fn emit_report(report: &CampaignReport, out: Option<&std::path::Path>) -> Result<(), String> {
    let mut buffer = Vec::new();
    report.write(&mut buffer).map_err(|e| e.to_string())?;
    write_text(&String::from_utf8(buffer).expect("reports are UTF-8"), out)
}

fn write_text(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
