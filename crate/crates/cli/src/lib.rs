//! Subcommands of the `sltr` tool.
//!
//! Exit status: 0 affirmative, 1 negative answer (witness on stdout), 2 error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use sltr::faa::{
    check_assignment_conditions, check_co_star, check_co_star_with, enumerate_faas,
    outline_cycles, pseudosegments_of, CoStarMode, FaceCornerSpec, FlatAngleAssignment,
    DEFAULT_BUDGET,
};
use sltr::harmonic::{default_poles, draw, is_gfaa};
use sltr::io::{self, GraphDocument, RenderSpec};
use sltr::schnyder::{compute_schnyder_wood, primal_dual_representation, verify_schnyder};
use sltr::stretcher::{stretch, StretchError};

#[derive(Debug, Parser)]
#[command(name = "sltr", version, about = "Straight line triangle representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Full,
    Simple,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Internal 3-connectivity, and the assignment conditions when an FAA is given.
    Check {
        graph: PathBuf,
        #[arg(long)]
        faa: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Pseudosegments induced by an assignment.
    Segments {
        graph: PathBuf,
        #[arg(long)]
        faa: Option<PathBuf>,
    },
    /// Solve, verify and render a triangle representation.
    Sltr {
        graph: PathBuf,
        #[arg(long)]
        faa: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Enumerate assignments and report the good ones.
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compute and verify a Schnyder wood.
    Schnyder { graph: PathBuf },
    /// Primal-dual triangle contact representation.
    PrimalDual {
        graph: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Stretch a pseudosegment arrangement.
    Stretch {
        arrangement: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compare the geometric and combinatorial characterisations on every
    /// `.graph` file of a directory.
    Oracle {
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// Outcome of a command: exit status and standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

type Failure = String;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<GraphDocument, Failure> {
    io::parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_faa(doc: &GraphDocument, faa: Option<&Path>) -> Result<Option<FlatAngleAssignment>, Failure> {
    match faa {
        Some(p) => io::parse_faa(&read(p)?, doc.graph.graph())
            .map(Some)
            .map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(doc.faa.clone()),
    }
}

fn require_faa(doc: &GraphDocument, faa: Option<&Path>) -> Result<FlatAngleAssignment, Failure> {
    load_faa(doc, faa)?.ok_or_else(|| "no assignment: pass --faa or add flat lines".to_string())
}

fn write_svg(path: Option<&Path>, svg: &str, out: &mut String) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, svg).map_err(|e| format!("{}: {e}", p.display()))?;
        writeln!(out, "svg {}", p.display()).unwrap();
    }
    Ok(())
}

fn verdict(ok: bool, out: String) -> Outcome {
    Outcome {
        status: if ok { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}

fn check(graph: &Path, faa: Option<&Path>, mode: Mode) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let g = &doc.graph;
    let mut out = String::new();
    let connected = g.is_internally_3connected();
    writeln!(out, "internally-3-connected {connected}").unwrap();
    let Some(faa) = load_faa(&doc, faa)? else {
        return Ok(verdict(connected, out));
    };
    let conditions = check_assignment_conditions(g, &faa, &FaceCornerSpec::ExactTriangle);
    writeln!(out, "vertex-condition {}", conditions.cv_ok).unwrap();
    writeln!(out, "face-condition {}", conditions.cf_ok).unwrap();
    for v in &conditions.violations {
        writeln!(out, "violation {v:?}").unwrap();
    }
    let mode = match mode {
        Mode::Full => CoStarMode::Full,
        Mode::Simple => CoStarMode::SimpleCycles,
    };
    let co = check_co_star(g, &faa, mode, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    writeln!(out, "outline-cycles-checked {}", co.checked).unwrap();
    writeln!(out, "outline-condition {}", co.ok).unwrap();
    if let Some(w) = &co.witness {
        let walk: Vec<String> = w.walk.iter().map(|v| v.to_string()).collect();
        let corners: Vec<String> = co.witness_corners.iter().map(|v| v.to_string()).collect();
        writeln!(out, "witness-walk {}", walk.join(" ")).unwrap();
        writeln!(out, "witness-corners {}", corners.join(" ")).unwrap();
    }
    Ok(verdict(connected && conditions.ok() && co.ok, out))
}

fn segments(graph: &Path, faa: Option<&Path>) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let faa = require_faa(&doc, faa)?;
    let fam = pseudosegments_of(&doc.graph, &faa).map_err(|e| e.to_string())?;
    Ok(verdict(true, io::write_family(&fam)))
}

fn sltr(graph: &Path, faa: Option<&Path>, svg: Option<&Path>) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let faa = load_faa(&doc, faa)?.unwrap_or_default();
    let weights = doc.weights.clone().unwrap_or_default();
    let poles = doc.poles.unwrap_or_else(default_poles);
    let (d, report) = draw(&doc.graph, &faa, &weights, poles).map_err(|e| e.to_string())?;
    let mut out = io::write_drawing(&d, &report);
    let spec = RenderSpec {
        unverified: !report.is_sltr(),
        ..RenderSpec::default()
    };
    write_svg(svg, &io::render_drawing(&d, &spec), &mut out)?;
    Ok(verdict(report.is_sltr(), out))
}

fn search(graph: &Path, budget: u64) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let g = &doc.graph;
    let faas = enumerate_faas(g, &FaceCornerSpec::ExactTriangle, budget).map_err(|e| e.to_string())?;
    let mut out = String::new();
    writeln!(out, "assignments {}", faas.len()).unwrap();
    let mut good = 0;
    for faa in &faas {
        if is_gfaa(g, faa).map_err(|e| e.to_string())? {
            good += 1;
            let pairs: Vec<String> = faa.pairs().map(|(v, f)| format!("{v}:{f}")).collect();
            writeln!(out, "good {}", pairs.join(" ")).unwrap();
        }
    }
    writeln!(out, "good-assignments {good}").unwrap();
    if good == 0 {
        writeln!(out, "no valid FAA").unwrap();
    }
    Ok(verdict(good > 0, out))
}

fn schnyder(graph: &Path) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let wood = compute_schnyder_wood(&doc.graph).map_err(|e| e.to_string())?;
    let report = verify_schnyder(&wood);
    Ok(verdict(report.ok, io::write_wood(&wood, &report)))
}

fn primal_dual(graph: &Path, svg: Option<&Path>) -> Result<Outcome, Failure> {
    let doc = load_graph(graph)?;
    let d = primal_dual_representation(&doc.graph).map_err(|e| e.to_string())?;
    let mut out = io::write_dissection(&d);
    write_svg(svg, &io::render_dissection(&d, &RenderSpec::default()), &mut out)?;
    Ok(verdict(true, out))
}

fn stretch_cmd(path: &Path, svg: Option<&Path>, budget: u64) -> Result<Outcome, Failure> {
    let arr = io::parse_arrangement(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    match stretch(&arr, budget) {
        Ok(s) => {
            let mut out = io::write_stretch(&s);
            let valid = s.certificate.is_valid(sltr::harmonic::DEFAULT_TOLERANCE);
            writeln!(out, "certificate {valid}").unwrap();
            write_svg(svg, &io::render_segments(&s, &RenderSpec::default()), &mut out)?;
            Ok(verdict(valid, out))
        }
        Err(StretchError::NotStretchable { witness, points }) => {
            let w: Vec<String> = witness.iter().map(|i| i.to_string()).collect();
            let p: Vec<String> = points.iter().map(|i| i.to_string()).collect();
            Ok(verdict(
                false,
                format!("stretchable false\nwitness {}\nextremal-points {}\n", w.join(" "), p.join(" ")),
            ))
        }
        Err(e) => Err(e.to_string()),
    }
}

/// Per-graph line of the oracle report.
fn oracle_graph(path: &Path, budget: u64) -> Result<(usize, usize, usize), Failure> {
    let doc = load_graph(path)?;
    let g = &doc.graph;
    let faas = enumerate_faas(g, &FaceCornerSpec::ExactTriangle, budget).map_err(|e| e.to_string())?;
    let cycles = outline_cycles(g.graph(), CoStarMode::Full, budget).map_err(|e| e.to_string())?;
    let (mut good, mut disagree) = (0, 0);
    for faa in &faas {
        let geometric = is_gfaa(g, faa).map_err(|e| e.to_string())?;
        let combinatorial = check_co_star_with(g, faa, &cycles).ok;
        good += usize::from(geometric);
        disagree += usize::from(geometric != combinatorial);
    }
    Ok((faas.len(), good, disagree))
}

fn oracle(dir: &Path, budget: u64) -> Result<Outcome, Failure> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    files.sort();
    // one thread per fixture; the report keeps file order
    let results: Vec<Result<(usize, usize, usize), Failure>> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|f| s.spawn(move || oracle_graph(f, budget)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker")).collect()
    });
    let mut out = String::new();
    let mut total = 0;
    for (f, r) in files.iter().zip(results) {
        let (n, good, disagree) = r?;
        let name = f.file_stem().unwrap().to_string_lossy();
        writeln!(out, "graph {name} assignments {n} good {good} disagreements {disagree}").unwrap();
        total += disagree;
    }
    writeln!(out, "disagreements {total}").unwrap();
    Ok(verdict(total == 0, out))
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check { graph, faa, mode } => check(graph, faa.as_deref(), *mode),
        Command::Segments { graph, faa } => segments(graph, faa.as_deref()),
        Command::Sltr { graph, faa, svg } => sltr(graph, faa.as_deref(), svg.as_deref()),
        Command::Search { graph, budget } => search(graph, *budget),
        Command::Schnyder { graph } => schnyder(graph),
        Command::PrimalDual { graph, svg } => primal_dual(graph, svg.as_deref()),
        Command::Stretch {
            arrangement,
            svg,
            budget,
        } => stretch_cmd(arrangement, svg.as_deref(), *budget),
        Command::Oracle { dir, budget } => oracle(dir, *budget),
    };
    result.unwrap_or_else(|e| Outcome {
        status: 2,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}
