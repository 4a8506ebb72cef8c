//! Command-line surface for the clique-tensor library.
//!
//! Exit codes: 0 success, 1 mathematical assertion violated, 2 usage or
//! input error. JSON goes to stdout, diagnostics to stderr.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use cliquetensor_core as core;
use core::{ScanConfig, ScanMode, SolverOptions};

#[derive(Parser)]
#[command(
    name = "cliquetensor",
    version,
    about = "Clique tensors of graphs: enumeration, spectral radius, and Turán-type bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct SolverArgs {
    /// Relative Collatz bracket gap for convergence.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Diagonal shift of the power iteration.
    #[arg(long, default_value_t = 1.0)]
    shift: f64,
    #[arg(long, default_value_t = 100_000)]
    max_iter: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SolverArgs {
    fn options(&self) -> Result<SolverOptions, String> {
        if self.max_iter < 1 {
            return Err("--max-iter must be at least 1".into());
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err("--tol must be positive".into());
        }
        if self.shift < 0.0 {
            return Err("--shift must be nonnegative".into());
        }
        Ok(SolverOptions {
            tol: self.tol,
            max_iter: self.max_iter,
            shift: self.shift,
            seed: self.seed,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count (and with --list, print) the r-cliques of a graph.
    Cliques {
        /// Edge-list file, or "-" for stdin.
        input: PathBuf,
        #[arg(long)]
        r: usize,
        /// Include the canonical clique list in the output.
        #[arg(long)]
        list: bool,
    },
    /// Compute the r-clique spectral radius with per-component breakdown.
    Spectral {
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Evaluate every bound for one (graph, r) pair.
    Bound {
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check the Turán comparison rho_r(G) <= rho_r(T_r(n)) on a K_{r+1}-free graph.
    Mantel {
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Generate the Turán graph T_r(n) and report its closed-form values.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Write the edge list of T_r(n) to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Verify the Turán comparison over an exhaustive or sampled graph family.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Samples to draw in random mode.
        #[arg(long, default_value_t = 100)]
        budget: u64,
        /// Worker threads; 1 keeps the output byte-reproducible.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Tabulate the floored spectral bound against the Erdős count.
    GapTable {
        /// Largest n, inclusive.
        #[arg(long, default_value_t = 60)]
        n: usize,
        /// Largest r, inclusive.
        #[arg(long, default_value_t = 5)]
        r: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Cliques { input, r, list } => cmd_cliques(cli, input, *r, *list),
        Command::Spectral { input, r, solver } => cmd_spectral(cli, input, *r, solver),
        Command::Bound { input, r, solver } => cmd_bound(cli, input, *r, solver),
        Command::Mantel { input, r, solver } => cmd_mantel(cli, input, *r, solver),
        Command::Turan { n, r, emit } => cmd_turan(cli, *n, *r, emit.as_deref()),
        Command::Scan {
            n,
            r,
            mode,
            budget,
            threads,
            solver,
        } => cmd_scan(cli, *n, *r, *mode, *budget, *threads, solver),
        Command::GapTable { n, r } => cmd_gap_table(cli, *n, *r),
    }
}

fn require_r(r: usize) -> Result<(), String> {
    if r < 2 {
        Err(format!("--r must be at least 2, got {r}"))
    } else {
        Ok(())
    }
}

fn load_graph(path: &Path) -> Result<core::Graph, String> {
    let reader: Box<dyn BufRead> = if path == Path::new("-") {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(
            File::open(path).map_err(|e| format!("{}: {e}", path.display()))?,
        ))
    };
    core::parse_edge_list(reader).map_err(|e| format!("{}: {e}", path.display()))
}

/// JSON number rounded to 15 significant digits, so output is stable and
/// carries no noise digits.
fn num(x: f64) -> Value {
    let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float");
    Value::from(rounded)
}

fn emit_output(cli: &Cli, value: &Value, text: String) {
    match cli.output {
        OutputFormat::Json => println!("{value}"),
        OutputFormat::Text => print!("{text}"),
    }
}

fn cmd_cliques(cli: &Cli, input: &Path, r: usize, list: bool) -> Result<ExitCode, String> {
    require_r(r)?;
    let g = load_graph(input)?;
    let cs = core::enumerate_cliques(&g, r);
    let mut obj = Map::new();
    obj.insert("command".into(), "cliques".into());
    obj.insert("n".into(), g.n().into());
    obj.insert("r".into(), r.into());
    obj.insert("count".into(), cs.count().into());
    let mut text = format!("n {}\nr {}\ncount {}\n", g.n(), r, cs.count());
    if list {
        let tuples: Vec<Value> = cs
            .iter()
            .map(|t| Value::from(t.iter().map(|&v| Value::from(v)).collect::<Vec<_>>()))
            .collect();
        obj.insert("cliques".into(), tuples.into());
        for t in cs.iter() {
            let words: Vec<String> = t.iter().map(|v| v.to_string()).collect();
            text.push_str(&words.join(" "));
            text.push('\n');
        }
    }
    emit_output(cli, &Value::Object(obj), text);
    Ok(ExitCode::SUCCESS)
}

fn spectral_json(res: &core::SpectralResult) -> Value {
    let components: Vec<Value> = res
        .components
        .iter()
        .map(|c| {
            json!({
                "vertices": c.vertices,
                "rho": num(c.rho),
                "iterations": c.iterations,
                "converged": c.converged,
                "residual_inf": num(c.pair.residual_inf),
                "bracket": [num(c.bracket.0), num(c.bracket.1)],
                "min_entry": num(c.pair.vector.iter().copied().fold(f64::INFINITY, f64::min)),
            })
        })
        .collect();
    json!({
        "rho": num(res.rho),
        "converged": res.all_converged(),
        "is_clique_connected": res.is_clique_connected,
        "iterations": res.components.iter().map(|c| c.iterations).sum::<u64>(),
        "residual_inf": num(res.max_residual_inf()),
        "tolerance": num(res.tolerance_used),
        "components": components,
    })
}

fn cmd_spectral(cli: &Cli, input: &Path, r: usize, solver: &SolverArgs) -> Result<ExitCode, String> {
    require_r(r)?;
    let g = load_graph(input)?;
    let res = core::spectral_radius(&g, r, &solver.options()?);
    let mut value = spectral_json(&res);
    let obj = value.as_object_mut().expect("object");
    obj.insert("command".into(), "spectral".into());
    obj.insert("n".into(), g.n().into());
    obj.insert("r".into(), r.into());
    let mut text = format!(
        "rho {}\nconverged {}\nclique-connected {}\ncomponents {}\n",
        res.rho,
        res.all_converged(),
        res.is_clique_connected,
        res.components.len()
    );
    for c in &res.components {
        text.push_str(&format!(
            "  component {:?}: rho {} iterations {} residual {:e}\n",
            c.vertices, c.rho, c.iterations, c.pair.residual_inf
        ));
    }
    emit_output(cli, &value, text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(cli: &Cli, input: &Path, r: usize, solver: &SolverArgs) -> Result<ExitCode, String> {
    require_r(r)?;
    let g = load_graph(input)?;
    let rep = core::bound_report(&g, r, &solver.options()?);
    let value = json!({
        "command": "bound",
        "n": rep.n,
        "r": rep.r,
        "c_r": rep.c_r,
        "rho_r": num(rep.rho_r),
        "bound_real": num(rep.count_bound_real),
        "floor_bound": rep.count_bound_floor,
        "equality": rep.count_equality,
        "clique_regular": rep.clique_regular,
        "yang_lo": rep.yang_lo,
        "yang_hi": rep.yang_hi,
        "is_clique_connected": rep.is_clique_connected,
        "is_kr1_free": rep.is_kr1_free,
        "turan_rho": rep.turan_rho.map(num),
        "mantel_satisfied": rep.mantel_satisfied,
        "mantel_gap": rep.mantel_gap.map(num),
        "erdos_bound": rep.erdos_bound,
    });
    let text = format!(
        "c_r {}\nrho_r {}\nbound_real {}\nfloor_bound {}\nequality {}\nclique_regular {}\nyang [{}, {}]\nerdos_bound {}\n",
        rep.c_r,
        rep.rho_r,
        rep.count_bound_real,
        rep.count_bound_floor,
        rep.count_equality,
        rep.clique_regular,
        rep.yang_lo,
        rep.yang_hi,
        rep.erdos_bound
    );
    emit_output(cli, &value, text);
    // the counting bound must hold on every real graph
    if rep.c_r > rep.count_bound_floor {
        eprintln!(
            "counting bound violated: c_r = {} > floor bound = {}",
            rep.c_r, rep.count_bound_floor
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_mantel(cli: &Cli, input: &Path, r: usize, solver: &SolverArgs) -> Result<ExitCode, String> {
    require_r(r)?;
    let g = load_graph(input)?;
    let mc = core::mantel_check(&g, r, &solver.options()?);
    let value = json!({
        "command": "mantel",
        "n": mc.n,
        "r": mc.r,
        "applicable": mc.applicable,
        "rho": num(mc.rho_r),
        "turan_rho": mc.turan_rho.map(num),
        "satisfied": mc.satisfied,
        "gap": mc.gap.map(num),
    });
    let text = format!(
        "applicable {}\nrho {}\nturan_rho {:?}\nsatisfied {:?}\n",
        mc.applicable, mc.rho_r, mc.turan_rho, mc.satisfied
    );
    emit_output(cli, &value, text);
    if mc.satisfied == Some(false) {
        eprintln!(
            "Turán comparison violated: rho = {} exceeds {}",
            mc.rho_r,
            mc.turan_rho.unwrap()
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_turan(cli: &Cli, n: usize, r: usize, emit: Option<&Path>) -> Result<ExitCode, String> {
    require_r(r)?;
    let spec = core::PartiteSpec::turan(n, r).map_err(|e| e.to_string())?;
    let gap = core::implication_gap(n as u64, r as u64).map_err(|e| e.to_string())?;
    let rho = core::multipartite_rho_closed_form(&spec);
    let mut obj = Map::new();
    obj.insert("command".into(), "turan".into());
    obj.insert("n".into(), n.into());
    obj.insert("r".into(), r.into());
    obj.insert("parts".into(), spec.sizes().to_vec().into());
    obj.insert("rho_closed_form".into(), num(rho));
    obj.insert("clique_count".into(), gap.erdos.into());
    obj.insert("floor_bound".into(), gap.floor_bound.into());
    obj.insert("exact".into(), gap.exact.into());
    if let Some(path) = emit {
        let g = core::complete_multipartite(&spec);
        let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut w = io::BufWriter::new(file);
        core::emit_edge_list(&g, &mut w).map_err(|e| e.to_string())?;
        w.flush().map_err(|e| e.to_string())?;
        obj.insert("emitted".into(), path.display().to_string().into());
    }
    let text = format!(
        "parts {:?}\nrho_closed_form {}\nclique_count {}\nfloor_bound {}\nexact {}\n",
        spec.sizes(),
        rho,
        gap.erdos,
        gap.floor_bound,
        gap.exact
    );
    emit_output(cli, &Value::Object(obj), text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(
    cli: &Cli,
    n: usize,
    r: usize,
    mode: Mode,
    budget: u64,
    threads: usize,
    solver: &SolverArgs,
) -> Result<ExitCode, String> {
    require_r(r)?;
    let mut cfg = ScanConfig::new(
        n,
        r,
        match mode {
            Mode::Exhaustive => ScanMode::Exhaustive,
            Mode::Random => ScanMode::Random,
        },
    );
    cfg.budget = budget;
    cfg.seed = solver.seed;
    cfg.solver = solver.options()?;
    cfg.threads = threads.max(1);
    let report = core::scan_extremal(&cfg).map_err(|e| e.to_string())?;

    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "degree_sequence": w.degree_sequence,
                "matches_turan_degrees": w.matches_turan_degrees,
            })
        })
        .collect();
    let violation_details: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "rho": num(v.rho),
                "limit": num(v.limit),
                "edge_list": v.edge_list,
            })
        })
        .collect();
    let value = json!({
        "command": "scan",
        "n": report.n,
        "r": report.r,
        "mode": match report.mode {
            ScanMode::Exhaustive => "exhaustive",
            ScanMode::Random => "random",
        },
        "enumerated": report.enumerated,
        "tested": report.tested,
        "max_rho": num(report.max_rho),
        "turan_rho": num(report.turan_rho),
        "violations": report.violations.len(),
        "violation_details": violation_details,
        "equality_witnesses": report.witnesses.len(),
        "witnesses": witnesses,
        "certs": {
            "solves": report.certs.solves,
            "all_converged": report.certs.all_converged,
            "max_residual_inf": num(report.certs.max_residual_inf),
            "min_eigvec_entry": num(report.certs.min_eigvec_entry),
            "min_yang_slack": num(report.certs.min_yang_slack),
        },
    });
    let mut text = format!(
        "tested {} of {}\nmax_rho {}\nturan_rho {}\nviolations {}\nequality_witnesses {}\n",
        report.tested,
        report.enumerated,
        report.max_rho,
        report.turan_rho,
        report.violations.len(),
        report.witnesses.len()
    );
    for v in &report.violations {
        text.push_str(&format!(
            "violation: rho {} > {}\n{}",
            v.rho, v.limit, v.edge_list
        ));
    }
    emit_output(cli, &value, text);
    if !report.violations.is_empty() {
        for v in &report.violations {
            eprintln!(
                "violation: rho = {} exceeds {}; offending graph:\n{}",
                v.rho, v.limit, v.edge_list
            );
        }
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gap_table(cli: &Cli, n_max: usize, r_max: usize) -> Result<ExitCode, String> {
    if r_max < 2 {
        return Err(format!("--r must be at least 2, got {r_max}"));
    }
    let mut rows = Vec::new();
    let mut text = String::from("n r floor_bound erdos gap exact\n");
    for r in 2..=r_max {
        for n in r..=n_max {
            let gap = core::implication_gap(n as u64, r as u64).map_err(|e| e.to_string())?;
            rows.push(json!({
                "n": n,
                "r": r,
                "floor_bound": gap.floor_bound,
                "erdos": gap.erdos,
                "gap": gap.floor_bound - gap.erdos,
                "exact": gap.exact,
            }));
            text.push_str(&format!(
                "{n} {r} {} {} {} {}\n",
                gap.floor_bound,
                gap.erdos,
                gap.floor_bound - gap.erdos,
                gap.exact
            ));
        }
    }
    let value = json!({
        "command": "gap-table",
        "n_max": n_max,
        "r_max": r_max,
        "rows": rows,
    });
    emit_output(cli, &value, text);
    Ok(ExitCode::SUCCESS)
}
