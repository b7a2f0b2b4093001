use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bcx::classify::{self, ClassReport};
use bcx::ears::{ear_decomposition, interchange_normalize, nest_analysis, NestReport};
use bcx::generator::{enumerate_blocks, enumerate_sp, fingerprint};
use bcx::hvector::{f_vector, h_poly, h_poly_wide, h_vector};
use bcx::io::parse_graph;
use bcx::sp::parallel_decomposition;
use bcx::verify::{run_suite, Runner, Suite, VerifyConfig};
use bcx::Multigraph;

#[derive(Parser)]
#[command(name = "bcx", version, about = "Broken circuit h-vectors, ear decompositions and series-parallel structure")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class report, h/f/delta vectors, decomposition and nest report (seed 0)
    Analyze {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// h-polynomial and f-vector
    Hvector {
        graph: PathBuf,
        /// Arbitrary-precision coefficients
        #[arg(long)]
        wide: bool,
        #[arg(long)]
        json: bool,
    },
    /// Random ear decomposition and its nest intervals
    Ears {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Move every shared interval into its own ear after the host
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Parallel-irreducible decomposition
    Decompose {
        graph: PathBuf,
        /// Also write Graphviz output here
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a property suite over a generated corpus
    Verify {
        /// Suite name, or `all`
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        stop_on_fail: bool,
        /// Where counterexample graph files go
        #[arg(long, default_value = "counterexamples")]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a corpus as newline-delimited JSON
    Gen {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Sp,
    Blocks,
}

fn load(path: &Path) -> Result<Multigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn print_report(r: &ClassReport) {
    let rows = [
        ("vertices / edges", format!("{} / {}", r.vertices, r.edges)),
        ("rank / nullity", format!("{} / {}", r.rank, r.nullity)),
        ("nu (deg >= 3)", r.nu.to_string()),
        ("block", yes_no(r.is_block).into()),
        ("series-parallel", yes_no(r.is_sp).into()),
        ("h-vector", format!("{:?}", r.h_vector.h)),
        ("delta-vector", format!("{:?}", r.delta_vector.0)),
        ("p1 / p2", format!("{} / {}", opt(r.p1), opt(r.p2))),
        ("|F-bar|", opt(r.f_bar)),
        ("mu", opt(r.mu)),
        ("S0 / S1 / S1+", format!("{} / {} / {}", yes_no(r.in_s0), yes_no(r.in_s1), opt(r.in_s1plus.map(yes_no)))),
        ("parallel irreducible", opt(r.parallel_irreducible.map(yes_no))),
        ("outerplanar", yes_no(r.outerplanar).into()),
        ("A-graph", yes_no(r.a_graph).into()),
    ];
    for (k, v) in rows {
        println!("{k:<22} {v}");
    }
    if let Some(bounds) = &r.bounds {
        println!("bounds");
        for b in bounds {
            println!("  {b}");
        }
    }
}

fn print_nest(rep: &NestReport) {
    for (i, ear) in rep.ears.iter().enumerate() {
        let ids: Vec<String> = ear.iter().map(|e| e.to_string()).collect();
        println!("ear {i}: {}", ids.join(" "));
    }
    for iv in &rep.intervals {
        let ids: Vec<String> = iv.edges.iter().map(|e| e.to_string()).collect();
        println!(
            "interval [{}] in ear {} between {}-{}: sigma {:?}, l = {}",
            ids.join(" "),
            iv.host,
            iv.endpoints.0,
            iv.endpoints.1,
            iv.sigma,
            iv.ell
        );
    }
    println!("p1 = {}, p2 = {}, nested = {}", rep.p1, rep.p2, rep.nested);
}

fn analyze(path: &Path, as_json: bool) -> Result<()> {
    let g = load(path)?;
    let report = classify::classify(&g)?;
    let poly = h_poly(&g)?;
    let f = f_vector(&g)?;
    let (decomposition, nest) = if g.is_block() && g.edge_count() >= 2 {
        let d = parallel_decomposition(&g)?;
        let n = nest_analysis(&g, &ear_decomposition(&g, 0)?)?;
        (Some(d), Some(n))
    } else {
        (None, None)
    };
    if as_json {
        return print_json(&json!({
            "report": report,
            "h_poly": poly.to_string(),
            "f_vector": f,
            "decomposition": decomposition,
            "nest": nest,
        }));
    }
    println!("h(x) = {poly}");
    println!("f-vector {f:?}");
    print_report(&report);
    if let Some(d) = decomposition {
        let base: Vec<u32> = d.baseedges.iter().map(|e| e.0).collect();
        println!("decomposition: {} components, baseedges {base:?}", d.components.len());
    }
    if let Some(n) = nest {
        print_nest(&n);
    }
    Ok(())
}

fn hvector(path: &Path, wide: bool, as_json: bool) -> Result<()> {
    let g = load(path)?;
    let poly = if wide { h_poly_wide(&g)?.to_string() } else { h_poly(&g)?.to_string() };
    // the f-vector needs machine integers
    let f = if wide { None } else { Some(f_vector(&g)?) };
    if as_json {
        let h = if wide { None } else { Some(h_vector(&g)?.h) };
        return print_json(&json!({ "h_poly": poly, "h_vector": h, "f_vector": f }));
    }
    println!("{poly}");
    if let Some(f) = f {
        println!("f = {f:?}");
    }
    Ok(())
}

fn ears(path: &Path, seed: u64, normalize: bool, as_json: bool) -> Result<()> {
    let g = load(path)?;
    let mut d = ear_decomposition(&g, seed)?;
    if normalize {
        d = interchange_normalize(&g, &d)?;
    }
    let rep = nest_analysis(&g, &d)?;
    if as_json {
        return print_json(&json!({ "ears": d, "nest": rep }));
    }
    print_nest(&rep);
    Ok(())
}

fn decompose(path: &Path, dot: Option<&Path>, as_json: bool) -> Result<()> {
    let g = load(path)?;
    let d = parallel_decomposition(&g)?;
    if let Some(p) = dot {
        fs::write(p, d.to_dot()).with_context(|| format!("writing {}", p.display()))?;
    }
    if as_json {
        return print_json(&d);
    }
    for (i, c) in d.components.iter().enumerate() {
        let ids: Vec<String> = c.edge_ids().iter().map(|e| e.to_string()).collect();
        println!("component {i}: {}", ids.join(" "));
    }
    println!("baseedges {:?}", d.baseedges.iter().map(|e| e.0).collect::<Vec<_>>());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    max: usize,
    seeds: u64,
    jobs: usize,
    sequential: bool,
    stop_on_fail: bool,
    out: &Path,
    as_json: bool,
) -> Result<bool> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>().map_err(anyhow::Error::msg)?]
    };
    let cfg = VerifyConfig {
        max,
        seeds,
        stop_on_fail,
        runner: if sequential { Runner::Sequential } else { Runner::Parallel { jobs } },
    };
    let mut all_ok = true;
    let mut reports = Vec::new();
    for s in suites {
        let r = run_suite(s, &cfg)?;
        if !r.passed() {
            all_ok = false;
            fs::create_dir_all(out)?;
            for (i, c) in r.counterexamples.iter().enumerate() {
                let file = out.join(format!("{}-{i}.txt", r.suite));
                fs::write(&file, format!("# {}\n{}", c.detail, c.graph))?;
            }
        }
        if !as_json {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            println!(
                "{verdict} {:<20} graphs {:>6}  samples {:>7}  skipped {:>4}  counterexamples {}",
                r.suite,
                r.graphs,
                r.samples,
                r.skipped,
                r.counterexamples.len()
            );
            for c in &r.counterexamples {
                println!("  {}\n{}", c.detail, indent(&c.graph.to_string()));
            }
        }
        reports.push(r);
    }
    if as_json {
        print_json(&reports)?;
    }
    Ok(all_ok)
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

fn gen(mode: Mode, max: usize, out: &Path) -> Result<()> {
    fs::create_dir_all(out)?;
    let (name, graphs): (&str, Box<dyn Iterator<Item = Multigraph>>) = match mode {
        Mode::Sp => ("sp", Box::new(enumerate_sp(max)?)),
        Mode::Blocks => ("blocks", Box::new(enumerate_blocks(max)?)),
    };
    let path = out.join(format!("{name}-{max}.ndjson"));
    let mut w = std::io::BufWriter::new(fs::File::create(&path)?);
    let mut n = 0usize;
    for g in graphs {
        let fp = fingerprint(&g)?;
        writeln!(w, "{}", json!({ "fingerprint": fp.to_string(), "graph": g }))?;
        n += 1;
    }
    w.flush()?;
    eprintln!("wrote {n} graphs to {}", path.display());
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Analyze { graph, json } => analyze(&graph, json)?,
        Cmd::Hvector { graph, wide, json } => hvector(&graph, wide, json)?,
        Cmd::Ears {
            graph,
            seed,
            normalize,
            json,
        } => ears(&graph, seed, normalize, json)?,
        Cmd::Decompose { graph, dot, json } => decompose(&graph, dot.as_deref(), json)?,
        Cmd::Verify {
            suite,
            max,
            seeds,
            jobs,
            sequential,
            stop_on_fail,
            out,
            json,
        } => return verify(&suite, max, seeds, jobs, sequential, stop_on_fail, &out, json),
        Cmd::Gen { mode, max, out } => gen(mode, max, &out)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
