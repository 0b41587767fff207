use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use qec_core::classify::{ladder_classify, qec_auto, ClassificationReport};
use qec_core::clique::clique_graph;
use qec_core::enumerate::{enumerate_connected, MAX_ENUMERATION_ORDER};
use qec_core::io::{from_edge_list, parse_graph6_stream, to_graph6};
use qec_core::qec::{distance_spectrum, qec_numeric, sandwich, QecResult};
use qec_core::two_clique::{
    appendix_stationary_solve, qec_star_product_pair, qec_two_clique, qec_two_clique_shifted,
    StationaryPoint, TwoCliqueParams,
};
use qec_core::verify::verify_up_to;
use qec_core::Graph;

/// Quadratic embedding constants, clique graphs and ladder classification.
#[derive(Parser)]
#[command(name = "qec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// QEC value and maximizing vector.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Always use the eigensolver, never a closed form.
        #[arg(long)]
        numeric: bool,
    },
    /// Distance spectrum and the sandwich `δ₂ ≤ QEC < δ₁`.
    Spectrum {
        #[command(flatten)]
        input: Input,
    },
    /// Maximal cliques and the edges of the clique graph.
    Cliques {
        #[command(flatten)]
        input: Input,
    },
    /// Classification report against the path ladder.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        d_max: usize,
    },
    /// Canonical graph6 strings of all connected graphs on `n` vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Check every property over all connected graphs up to `max-n`
    /// vertices; exits with status 1 when any fails.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Closed forms and stationary points for `K_m ∪_l K_n`.
    TwoClique {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct Input {
    /// graph6 string or path to a file; stdin when omitted.
    source: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

impl Input {
    fn graphs(&self) -> Result<Vec<Graph>> {
        let text = match &self.source {
            None => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .context("reading stdin")?;
                buf
            }
            Some(s) if Path::new(s).is_file() => {
                fs::read_to_string(s).with_context(|| format!("reading {s}"))?
            }
            Some(s) => s.clone(),
        };
        let graphs = match self.format {
            Format::Graph6 => parse_graph6_stream(&text)?,
            Format::Edgelist => vec![from_edge_list(&text)?],
        };
        if graphs.is_empty() {
            bail!("no graphs in input");
        }
        Ok(graphs)
    }
}

/// Rounds every non-integer number to 15 significant digits.
fn round_reals(v: &mut Value) {
    match v {
        Value::Number(num) if !(num.is_i64() || num.is_u64()) => {
            if let Some(x) = num.as_f64() {
                let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
                if let Some(r) = serde_json::Number::from_f64(rounded) {
                    *num = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_reals),
        Value::Object(map) => map.values_mut().for_each(round_reals),
        _ => {}
    }
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    let mut v = serde_json::to_value(value)?;
    round_reals(&mut v);
    writeln!(out, "{}", serde_json::to_string(&v)?)?;
    Ok(())
}

#[derive(Serialize)]
struct Computed {
    graph6: String,
    n: usize,
    #[serde(flatten)]
    result: QecResult,
}

#[derive(Serialize)]
struct Spectrum {
    graph6: String,
    eigenvalues: Vec<f64>,
    delta1: f64,
    delta2: f64,
    qec: f64,
    transmission_regular: bool,
    sandwich_holds: bool,
}

#[derive(Serialize)]
struct Cliques {
    graph6: String,
    cliques: Vec<Vec<usize>>,
    gamma_edges: Vec<(usize, usize)>,
    gamma_is_tree: bool,
    gamma_diameter: usize,
}

#[derive(Serialize)]
struct Classified {
    graph6: String,
    n: usize,
    #[serde(flatten)]
    report: ClassificationReport,
}

#[derive(Serialize)]
struct TwoClique {
    l: usize,
    m: usize,
    n: usize,
    qec: f64,
    shifted_form: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    star_pair: Option<f64>,
    stationary_points: Vec<StationaryPoint>,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Compute { input, numeric } => {
            for g in input.graphs()? {
                let result = if numeric {
                    qec_numeric(&g.distance_matrix()?)?
                } else {
                    qec_auto(&g)?
                };
                emit(
                    out,
                    &Computed {
                        graph6: to_graph6(&g),
                        n: g.n(),
                        result,
                    },
                )?;
            }
        }
        Command::Spectrum { input } => {
            for g in input.graphs()? {
                let d = g.distance_matrix()?;
                let spectrum = distance_spectrum(&d)?;
                let s = sandwich(&d)?;
                emit(
                    out,
                    &Spectrum {
                        graph6: to_graph6(&g),
                        delta1: s.delta1,
                        delta2: s.delta2,
                        qec: s.qec,
                        transmission_regular: spectrum.transmission_regular,
                        sandwich_holds: s.holds(),
                        eigenvalues: spectrum.eigenvalues,
                    },
                )?;
            }
        }
        Command::Cliques { input } => {
            for g in input.graphs()? {
                let cg = clique_graph(&g)?;
                emit(
                    out,
                    &Cliques {
                        graph6: to_graph6(&g),
                        cliques: cg.cliques().iter().map(|c| c.to_vec()).collect(),
                        gamma_edges: cg.graph().edges(),
                        gamma_is_tree: cg.is_tree(),
                        gamma_diameter: cg.diameter(),
                    },
                )?;
            }
        }
        Command::Classify { input, d_max } => {
            for g in input.graphs()? {
                let report = ladder_classify(&g, d_max)?;
                emit(
                    out,
                    &Classified {
                        graph6: to_graph6(&g),
                        n: g.n(),
                        report,
                    },
                )?;
            }
        }
        Command::Enumerate { n } => {
            for g in enumerate_connected(n)? {
                writeln!(out, "{}", to_graph6(&g))?;
            }
        }
        Command::Verify { max_n } => {
            if max_n == 0 || max_n > MAX_ENUMERATION_ORDER {
                bail!("--max-n must be between 1 and {MAX_ENUMERATION_ORDER}");
            }
            let summary = verify_up_to(max_n)?;
            emit(out, &summary)?;
            return Ok(summary.all_passed());
        }
        Command::TwoClique { l, m, n } => {
            let p = TwoCliqueParams::new(l, m, n)?;
            emit(
                out,
                &TwoClique {
                    l,
                    m,
                    n,
                    qec: qec_two_clique(p),
                    shifted_form: qec_two_clique_shifted(p),
                    star_pair: (l == 1).then(|| qec_star_product_pair(m, n)).transpose()?,
                    stationary_points: appendix_stationary_solve(p),
                },
            )?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_fifteen_digits() {
        let mut v = serde_json::json!({"a": [0.1 + 0.2, 1], "b": -0.5857864376269049});
        round_reals(&mut v);
        assert_eq!(v["a"][0].as_f64().unwrap(), 0.3);
        assert_eq!(v["a"][1].as_u64().unwrap(), 1);
        assert_eq!(v["b"].as_f64().unwrap(), -0.585786437626905);
    }
}
