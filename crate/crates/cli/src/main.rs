//! `zeon`: spectra and walk censuses of graphs through zeon Laplacians.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use zeon::pauli;
use zeon::spectra;
use zeon::verify::{self, VerifyOptions};
use zeon::{exec, oracle, Blade, Complex64, Graph, LabelKind, Labeling, WalkCensus, Zeon, ZeonError, ZeonVector};

const DEFAULT_SEED: u64 = 24301;

#[derive(Parser, Debug)]
#[command(name = "zeon", version, about = "Graph spectra and walk censuses via zeon Laplacians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every random choice; printed in each report.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 1 forces sequential execution, 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues, eigenvectors and the walk censuses they encode.
    Analyze {
        #[arg(long)]
        graph: PathBuf,
        /// `degree`, `auto`, `f:1,2,...` or `q:1/2,3,...`.
        #[arg(long, default_value = "degree")]
        labeling: String,
        /// Analyze only this vertex.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Checks every identity on one graph against brute-force enumeration.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Defaults to `auto` (f_i = i).
        #[arg(long, default_value = "auto")]
        labeling: String,
        #[arg(long, hide = true)]
        corrupt_psi: bool,
    },
    /// Randomized homomorphism check of the matrix representation.
    Repcheck {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Times cycle censuses from the exponential against DFS.
    Bench {
        #[arg(long, default_value_t = 8)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failed run with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<ZeonError> for Failure {
    fn from(e: ZeonError) -> Failure {
        let code = match e {
            ZeonError::NotUniqueLabel(_) => 3,
            ZeonError::TheoremViolation { .. } => 4,
            ZeonError::NoConvergence { .. }
            | ZeonError::InconsistentSystem(_)
            | ZeonError::DegenerateSpectrum(_)
            | ZeonError::NonIntegerCount { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure {
            code: 2,
            message: format!("{e:#}"),
        }
    }
}

type Run = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = exec::with_threads(cli.jobs, || match &cli.command {
        Command::Analyze {
            graph,
            labeling,
            vertex,
        } => analyze(&cli, graph, labeling, *vertex),
        Command::Verify {
            graph,
            labeling,
            corrupt_psi,
        } => run_verify(&cli, graph, labeling, *corrupt_psi),
        Command::Repcheck { n, trials } => repcheck(&cli, *n, *trials),
        Command::Bench { m, trials } => bench(&cli, *m, *trials),
    });
    match out {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn render<T: Serialize>(cli: &Cli, report: &T, text: impl FnOnce() -> String) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => text(),
    }
}

#[derive(Serialize)]
struct SymmetricReport {
    eigenvalue: Zeon,
    eigenvector: ZeonVector,
}

#[derive(Serialize)]
struct VertexReport {
    vertex: usize,
    eigenvalue: Zeon,
    eigenvector: ZeonVector,
    cycles: WalkCensus,
    walks_to_vertex: Vec<WalkCensus>,
    symmetric: SymmetricReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    q_expectation: Option<Zeon>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    command: &'static str,
    seed: u64,
    graph: Graph,
    labeling: Labeling,
    vertices: Vec<VertexReport>,
    skipped: Vec<usize>,
}

fn analyze_vertex(g: &Graph, lab: &Labeling, v: usize) -> zeon::Result<VertexReport> {
    let (eigenvalue, cycles) = spectra::vertex_eigenvalue(g, lab, v)?;
    let (eigenvector, walks_to_vertex) = spectra::vertex_eigenvector(g, lab, v)?;
    let want = oracle::all_cycles(g, v);
    if !cycles.same_counts(&want) {
        return Err(ZeonError::TheoremViolation {
            name: verify::EIGENVALUE_CENSUS.into(),
            detail: format!("vertex {v}: decoded {cycles:?}, enumerated {want:?}"),
        });
    }
    let pair = spectra::symmetric_eigenpair(g, lab, v)?;
    let q_expectation = match lab.kind {
        LabelKind::Q => Some(spectra::q_expectation(g, lab, v)?),
        _ => None,
    };
    Ok(VertexReport {
        vertex: v,
        eigenvalue,
        eigenvector,
        cycles,
        walks_to_vertex,
        symmetric: SymmetricReport {
            eigenvalue: pair.lambda_star,
            eigenvector: pair.xi,
        },
        q_expectation,
    })
}

fn analyze(cli: &Cli, path: &PathBuf, labeling: &str, vertex: Option<usize>) -> Run {
    let g = load_graph(path)?;
    let lab = Labeling::parse(labeling, &g)?;
    let (targets, skipped): (Vec<usize>, Vec<usize>) = match vertex {
        Some(v) if v == 0 || v > g.m() => {
            return Err(anyhow::anyhow!("vertex {v} is outside 1..={}", g.m()).into());
        }
        Some(v) => {
            lab.require_unique(v)?;
            (vec![v], vec![])
        }
        None => (1..=g.m()).partition(|&v| lab.is_unique(v)),
    };
    if targets.is_empty() {
        return Err(ZeonError::NotUniqueLabel(skipped.first().copied().unwrap_or(0)).into());
    }
    let vertices = exec::par_map(&targets, |&v| analyze_vertex(&g, &lab, v))
        .into_iter()
        .collect::<zeon::Result<Vec<_>>>()?;
    let report = AnalyzeReport {
        command: "analyze",
        seed: cli.seed,
        graph: g,
        labeling: lab,
        vertices,
        skipped,
    };
    let text = render(cli, &report, || analyze_text(&report));
    Ok((text, 0))
}

fn census_text(c: &WalkCensus) -> String {
    if c.is_empty() {
        return "none".into();
    }
    c.entries()
        .iter()
        .map(|(ix, n)| {
            let set: Vec<String> = ix.iter().map(usize::to_string).collect();
            format!("{{{}}}×{n}", set.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze_text(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "seed {}", r.seed);
    let _ = writeln!(s, "graph: {} vertices, {} edges", r.graph.m(), r.graph.edge_count());
    let _ = writeln!(s, "labeling: {:?} {:?}", r.labeling.kind, r.labeling.values);
    for v in &r.vertices {
        let _ = writeln!(s, "\nvertex {}", v.vertex);
        let _ = writeln!(s, "  λ  = {}", v.eigenvalue);
        for (j, x) in v.eigenvector.0.iter().enumerate() {
            let _ = writeln!(s, "  μ{} = {x}", j + 1);
        }
        let _ = writeln!(s, "  cycles: {}", census_text(&v.cycles));
        for c in &v.walks_to_vertex {
            let _ = writeln!(s, "  walks {} → {}: {}", c.from, c.to, census_text(c));
        }
        let _ = writeln!(s, "  λ* = {}", v.symmetric.eigenvalue);
        if let Some(q) = &v.q_expectation {
            let _ = writeln!(s, "  ⟨ξ|Λ_q|ξ⟩ = {q}");
        }
    }
    if !r.skipped.is_empty() {
        let _ = writeln!(s, "\nskipped (label not unique): {:?}", r.skipped);
    }
    s
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    seed: u64,
    #[serde(flatten)]
    report: verify::Report,
    passed: bool,
}

fn run_verify(cli: &Cli, path: &PathBuf, labeling: &str, corrupt_psi: bool) -> Run {
    let g = load_graph(path)?;
    let lab = Labeling::parse(labeling, &g)?;
    let report = verify::verify_graph(
        &g,
        &VerifyOptions {
            labeling: Some(lab),
            corrupt_psi,
        },
    )?;
    let first = report.first_failure().map(|c| (c.name, c.detail.clone()));
    let out = VerifyReport {
        command: "verify",
        seed: cli.seed,
        passed: report.all_passed(),
        report,
    };
    let text = render(cli, &out, || {
        let mut s = format!("seed {}\n", out.seed);
        for c in &out.report.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{tag} {}{}", c.name, if c.passed { String::new() } else { format!(": {}", c.detail) });
        }
        s
    });
    match first {
        None => Ok((text, 0)),
        Some((name, detail)) => {
            eprintln!("error: identity `{name}` violated: {detail}");
            Ok((text, 4))
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> Zeon {
    Zeon::from_terms((0..1u64 << n).filter_map(|mask| {
        if !rng.gen_bool(0.5) {
            return None;
        }
        Some((Blade(mask), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
    }))
}

#[derive(Serialize)]
struct RepcheckReport {
    command: &'static str,
    seed: u64,
    n: usize,
    trials: usize,
    passed: usize,
    worst_error: f64,
}

fn repcheck(cli: &Cli, n: usize, trials: usize) -> Run {
    pauli::represent(&Zeon::one(), n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let (mut passed, mut worst) = (0, 0.0f64);
    for _ in 0..trials {
        let u = random_element(&mut rng, n);
        let v = random_element(&mut rng, n);
        let lhs = pauli::represent(&(&u * &v), n)?;
        let rhs = pauli::represent(&u, n)?.mul(&pauli::represent(&v, n)?)?;
        let e = lhs.max_abs_diff(&rhs);
        worst = worst.max(e);
        if e <= 1e-10 {
            passed += 1;
        }
    }
    let report = RepcheckReport {
        command: "repcheck",
        seed: cli.seed,
        n,
        trials,
        passed,
        worst_error: worst,
    };
    let text = render(cli, &report, || {
        format!(
            "seed {}\nn = {n}: {passed}/{trials} pass (worst error {worst:.2e})\n",
            report.seed
        )
    });
    Ok((text, if passed == trials { 0 } else { 4 }))
}

#[derive(Serialize)]
struct BenchRow {
    trial: usize,
    edges: usize,
    exp_ms: f64,
    dfs_ms: f64,
}

#[derive(Serialize)]
struct BenchReport {
    command: &'static str,
    seed: u64,
    m: usize,
    parallel: bool,
    rows: Vec<BenchRow>,
}

fn bench(cli: &Cli, m: usize, trials: usize) -> Run {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut rows = Vec::new();
    for trial in 1..=trials {
        let g = Graph::random(m, 0.5, rng.gen())?;
        let t = Instant::now();
        for v in 1..=m {
            std::hint::black_box(spectra::cycle_census_from_exp(&g, v)?);
        }
        let exp_ms = t.elapsed().as_secs_f64() * 1e3;
        let t = Instant::now();
        for v in 1..=m {
            std::hint::black_box(oracle::all_cycles(&g, v));
        }
        let dfs_ms = t.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            trial,
            edges: g.edge_count(),
            exp_ms,
            dfs_ms,
        });
    }
    let report = BenchReport {
        command: "bench",
        seed: cli.seed,
        m,
        parallel: exec::is_parallel() && cli.jobs != 1,
        rows,
    };
    let text = render(cli, &report, || {
        let mut s = format!("seed {}\nm = {m}\n{:>5} {:>5} {:>12} {:>12}\n", report.seed, "trial", "edges", "exp ms", "dfs ms");
        for r in &report.rows {
            let _ = writeln!(s, "{:>5} {:>5} {:>12.3} {:>12.3}", r.trial, r.edges, r.exp_ms, r.dfs_ms);
        }
        s
    });
    Ok((text, 0))
}
