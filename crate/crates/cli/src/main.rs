use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use sierpinski_cli::bench::{bench, write_csv};
use sierpinski_cli::edge_list::{parse_edge_list, render_edge_list};
use sierpinski_cli::labels::{polymeric_labels, sierpinski_labels};
use sierpinski_cli::report::{index_value, report_json, to_text};
use sierpinski_cli::verify::{verify, VerifyPlan};
use sierpinski_cli::{parse_levels, resolve_budget, BUDGET_ENV};
use sierpinski_core::closed::{randic_closed, Variant, REL_TOL};
use sierpinski_core::families::Family;
use sierpinski_core::index::{m_index, randic_direct};
use sierpinski_core::sierpinski::{build_polymeric, build_sierpinski};
use sierpinski_core::{Graph, IndexParams};

/// Randić index of generalized and polymeric Sierpiński graphs.
#[derive(Parser)]
#[command(name = "sierpinski", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named base graph as an edge list.
    Gen {
        /// complete, cycle, path, star, complete_bipartite or figure1.
        family: String,
        params: Vec<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build S(G,t) or P(G,t) explicitly and write its edge list.
    Expand {
        graph: PathBuf,
        #[arg(value_parser = parse_variant)]
        variant_arg: Option<Variant>,
        t_arg: Option<u32>,
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an `id<TAB>word` file.
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Closed-form R_alpha as JSON.
    Closed {
        graph: PathBuf,
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        breakdown: bool,
        /// Integer arithmetic; alpha must be a positive integer.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// R_alpha and M_alpha of the graph itself.
    Direct {
        graph: PathBuf,
        #[arg(long = "alpha", value_parser = parse_alpha, required = true, allow_negative_numbers = true)]
        alphas: Vec<f64>,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed form against explicit construction; exits 1 on any mismatch.
    Verify {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = REL_TOL)]
        tol: f64,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the JSON report here; the table goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV timings of the closed form and of explicit construction.
    Bench {
        graph: PathBuf,
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 5)]
        repeats: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Grid {
    /// S or P; repeatable. Defaults to S.
    #[arg(long = "variant", value_parser = parse_variant)]
    variants: Vec<Variant>,
    /// A level, `2..5` (inclusive), `2..=5` or `2,3,7`; repeatable.
    #[arg(long = "t", value_parser = parse_levels, required = true)]
    levels: Vec<Vec<u32>>,
    /// Repeatable.
    #[arg(long = "alpha", value_parser = parse_alpha, required = true, allow_negative_numbers = true)]
    alphas: Vec<f64>,
}

impl Grid {
    fn variants(&self) -> Vec<Variant> {
        if self.variants.is_empty() {
            vec![Variant::Sierpinski]
        } else {
            self.variants.clone()
        }
    }

    fn levels(&self) -> Vec<u32> {
        self.levels.iter().flatten().copied().collect()
    }
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    match s {
        "S" | "s" => Ok(Variant::Sierpinski),
        "P" | "p" => Ok(Variant::Polymeric),
        _ => Err(format!("expected S or P, got {s:?}")),
    }
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let alpha: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    IndexParams::new(alpha).map_err(|e| e.to_string())?;
    Ok(alpha)
}

/// Errors reported as usage errors (exit status 2).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Usage(String);

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn graph_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn params(alpha: f64, exact: bool) -> anyhow::Result<IndexParams> {
    let p = if exact { IndexParams::exact(alpha) } else { IndexParams::new(alpha) };
    p.map_err(|e| Usage(e.to_string()).into())
}

fn budget(flag: Option<u64>) -> anyhow::Result<u64> {
    let env = std::env::var(BUDGET_ENV).ok();
    Ok(resolve_budget(flag, env.as_deref()).map_err(|e| Usage(e.to_string()))?)
}

fn one_or_many(mut docs: Vec<serde_json::Value>) -> serde_json::Value {
    if docs.len() == 1 {
        docs.pop().unwrap()
    } else {
        serde_json::Value::Array(docs)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { family, params, out } => {
            let g = Family::from_parts(&family, &params)
                .and_then(|f| f.build())
                .map_err(|e| Usage(e.to_string()))?;
            emit(out.as_deref(), &render_edge_list(&g))?;
        }
        Command::Expand {
            graph,
            variant_arg,
            t_arg,
            variant,
            t,
            out,
            labels,
            budget: b,
        } => {
            let variant = match (variant_arg, variant) {
                (Some(_), Some(_)) => bail!(Usage("give the variant either positionally or with --variant".into())),
                (v, w) => v.or(w).ok_or_else(|| Usage("missing variant (S or P)".into()))?,
            };
            let t = match (t_arg, t) {
                (Some(_), Some(_)) => bail!(Usage("give t either positionally or with --t".into())),
                (a, b) => a.or(b).ok_or_else(|| Usage("missing t".into()))?,
            };
            let base = read_graph(&graph)?;
            let budget = budget(b)?;
            let n = base.order() as u32;
            let (g, sidecar) = match variant {
                Variant::Sierpinski => {
                    let g = build_sierpinski(&base, t, budget)?;
                    (g, labels.as_ref().map(|_| sierpinski_labels(n, t)))
                }
                Variant::Polymeric => {
                    let p = build_polymeric(&base, t, budget)?;
                    let sidecar = labels.as_ref().map(|_| polymeric_labels(&p.layout));
                    (p.graph, sidecar)
                }
            };
            emit(out.as_deref(), &render_edge_list(&g))?;
            if let (Some(path), Some(text)) = (labels, sidecar) {
                emit(Some(&path), &text)?;
            }
        }
        Command::Closed {
            graph,
            grid,
            breakdown,
            exact,
            out,
        } => {
            let base = read_graph(&graph)?;
            let mut docs = Vec::new();
            for variant in grid.variants() {
                for t in grid.levels() {
                    for &alpha in &grid.alphas {
                        let report = randic_closed(variant, &base, t, &params(alpha, exact)?)?;
                        docs.push(report_json(&report, breakdown));
                    }
                }
            }
            emit(out.as_deref(), &to_text(&one_or_many(docs)))?;
        }
        Command::Direct {
            graph,
            alphas,
            exact,
            out,
        } => {
            let g = read_graph(&graph)?;
            let mut docs = Vec::new();
            for alpha in alphas {
                let r = randic_direct(&g, &params(alpha, exact)?)?;
                let mut doc = json!({
                    "alpha": alpha,
                    "randic": r.to_f64(),
                    "m_index": m_index(&g, alpha)?,
                });
                if exact {
                    doc["exact"] = index_value(&r);
                }
                docs.push(doc);
            }
            emit(out.as_deref(), &to_text(&one_or_many(docs)))?;
        }
        Command::Verify {
            graphs,
            grid,
            tol,
            budget: b,
            out,
        } => {
            if !(tol > 0.0 && tol.is_finite()) {
                bail!(Usage(format!("--tol must be a positive number, got {tol}")));
            }
            let plan = VerifyPlan {
                graphs: graphs
                    .iter()
                    .map(|p| Ok((graph_name(p), read_graph(p)?)))
                    .collect::<anyhow::Result<_>>()?,
                variants: grid.variants(),
                levels: grid.levels(),
                alphas: grid.alphas.clone(),
                rel_tol: tol,
                budget: budget(b)?,
            };
            let report = verify(&plan);
            print!("{}", report.table());
            if let Some(path) = out {
                emit(Some(&path), &report.to_json())?;
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Bench {
            graph,
            grid,
            budget: b,
            repeats,
            out,
        } => {
            let base = read_graph(&graph)?;
            let budget = budget(b)?;
            let levels = grid.levels();
            let mut records = Vec::new();
            for variant in grid.variants() {
                for &alpha in &grid.alphas {
                    records.extend(bench(&base, variant, &levels, &params(alpha, false)?, budget, repeats)?);
                }
            }
            let mut buf = Vec::new();
            write_csv(&mut buf, &records)?;
            emit(out.as_deref(), &String::from_utf8(buf).expect("CSV is UTF-8"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
