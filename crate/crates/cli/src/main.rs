use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qaffine_core::affine_base::{parse_points, AffineType, SigmaPoint};
use qaffine_core::blocks::BlockContext;
use qaffine_core::invariants::TypeContext;
use qaffine_core::verify;

#[derive(Parser)]
#[command(
    name = "qaffine",
    version,
    about = "Root-system invariants of quantum affine module categories"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Print extra progress information on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix of the simple s-functions against the expected Cartan matrix.
    CartanCheck {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        /// Sweep every rank of the family from the smallest up to the given one.
        #[arg(long)]
        all_ranks: bool,
    },
    /// Denominator d_{i,j}(z), factored and as a root multiset.
    Denom {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// de of two fundamental modules.
    De(PairArgs),
    /// Truncated alternating sum Lambda.
    Lambda(PairArgs),
    /// Alternating sum Lambda-infinity.
    LambdaInf(PairArgs),
    /// Support and values of s_{i,a}.
    SFunc {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        #[arg(value_parser = parse_point)]
        point: SigmaPoint,
    },
    /// The function E of a list of fundamental modules.
    EOf {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        #[arg(long, value_parser = parse_weights)]
        weights: Weights,
    },
    /// The slice sigma_Q with the positive root at each point.
    SigmaQ {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
    },
    /// Block label of a list of fundamental modules.
    BlockLabel {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        #[arg(long, value_parser = parse_weights)]
        weights: Weights,
    },
    /// Group the modules of a JSON-lines file by block.
    Partition {
        #[arg(value_parser = parse_type)]
        ty: AffineType,
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the acceptance criteria.
    Verify {
        /// Run all criteria (the default when no criterion is given).
        #[arg(long)]
        all: bool,
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=11), conflicts_with = "all")]
        criterion: Option<u8>,
    },
}

#[derive(clap::Args)]
struct PairArgs {
    #[arg(value_parser = parse_type)]
    ty: AffineType,
    #[arg(value_parser = parse_point)]
    p1: SigmaPoint,
    #[arg(value_parser = parse_point)]
    p2: SigmaPoint,
}

#[derive(Clone)]
struct Weights(Vec<SigmaPoint>);

fn parse_type(s: &str) -> Result<AffineType, String> {
    s.parse().map_err(|e: qaffine_core::Error| e.to_string())
}

fn parse_point(s: &str) -> Result<SigmaPoint, String> {
    s.parse().map_err(|e: qaffine_core::Error| e.to_string())
}

fn parse_weights(s: &str) -> Result<Weights, String> {
    parse_points(s).map(Weights).map_err(|e| e.to_string())
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| row.iter().map(|x| format!("{:>3}", x)).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

fn function_json(f: &qaffine_core::invariants::SigmaFunction) -> Value {
    Value::Array(
        f.support()
            .map(|(p, v)| json!({"point": p.to_string(), "value": v}))
            .collect(),
    )
}

fn function_text(f: &qaffine_core::invariants::SigmaFunction) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.support()
        .map(|(p, v)| format!("{}\t{}", p, v))
        .collect::<Vec<_>>()
        .join("\n")
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            ok: true,
        }
    }
}

fn context(ty: AffineType, points: &[SigmaPoint]) -> anyhow::Result<TypeContext> {
    let c = TypeContext::new(ty)?;
    for &p in points {
        c.check_point(p)?;
    }
    Ok(c)
}

fn cartan_check(ty: AffineType, all_ranks: bool, verbose: bool) -> anyhow::Result<Output> {
    let types: Vec<AffineType> = if all_ranks {
        (ty.family.min_rank()..=ty.n)
            .map(|n| AffineType::new(ty.family, n))
            .collect::<Result<_, _>>()?
    } else {
        vec![ty]
    };
    let mut texts = Vec::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for t in types {
        if verbose {
            eprintln!("checking {}", t);
        }
        let b = BlockContext::new(t)?;
        let g = b.gram()?;
        let gfin = b.data().gfin;
        let verdict = if g.is_equal() {
            format!("OK: Cartan of {}", gfin)
        } else {
            ok = false;
            format!(
                "MISMATCH: expected Cartan of {} (entries {:?})",
                gfin, g.mismatches
            )
        };
        let header = if all_ranks {
            format!("{}\n", t)
        } else {
            String::new()
        };
        texts.push(format!("{}{}\n{}", header, matrix_text(&g.matrix), verdict));
        reports.push(json!({
            "type": t.to_string(),
            "cartan_of": gfin.to_string(),
            "matrix": g.matrix,
            "expected": g.expected,
            "equal": g.is_equal(),
        }));
    }
    let json = if all_ranks {
        Value::Array(reports)
    } else {
        reports.remove(0)
    };
    Ok(Output {
        text: texts.join("\n\n"),
        json,
        ok,
    })
}

fn denom(ty: AffineType, i: usize, j: usize) -> anyhow::Result<Output> {
    let c = context(ty, &[])?;
    c.data.check_node(i)?;
    c.data.check_node(j)?;
    let factors = c.denoms.factors(i, j);
    let roots: Vec<_> = c.denoms.get(i, j).iter().collect();
    let factored = if factors.is_empty() {
        "1".to_string()
    } else {
        strings(factors).concat()
    };
    let mut text = format!("d_{{{},{}}}(z) = {}", i, j, factored);
    for (r, m) in &roots {
        text.push_str(&format!("\n{}\t{}", r, m));
    }
    let json = json!({
        "type": ty.to_string(),
        "i": i,
        "j": j,
        "factors": strings(factors),
        "roots": roots.iter().map(|(r, m)| json!({"scalar": r.to_string(), "mult": m})).collect::<Vec<_>>(),
    });
    Ok(Output::new(text, json))
}

fn pair_value(kind: &str, a: PairArgs) -> anyhow::Result<Output> {
    let c = context(a.ty, &[a.p1, a.p2])?;
    let v = match kind {
        "de" => c.de(a.p1, a.p2) as i64,
        "lambda" => c.lambda(a.p1, a.p2)?,
        _ => c.lambda_inf(a.p1, a.p2)?,
    };
    let json =
        json!({"type": a.ty.to_string(), "p1": a.p1.to_string(), "p2": a.p2.to_string(), kind: v});
    Ok(Output::new(v.to_string(), json))
}

fn s_func(ty: AffineType, p: SigmaPoint) -> anyhow::Result<Output> {
    let c = context(ty, &[p])?;
    let f = c.s_func(p)?;
    let json =
        json!({"type": ty.to_string(), "point": p.to_string(), "support": function_json(&f)});
    Ok(Output::new(function_text(&f), json))
}

fn e_of(ty: AffineType, w: &[SigmaPoint]) -> anyhow::Result<Output> {
    let c = context(ty, w)?;
    let f = c.e_of(w)?;
    let json = json!({"type": ty.to_string(), "weights": strings(w), "support": function_json(&f)});
    Ok(Output::new(function_text(&f), json))
}

fn sigma_q(ty: AffineType) -> anyhow::Result<Output> {
    let b = BlockContext::new(ty)?;
    let rows: Vec<(String, String)> = b
        .phi
        .roots
        .iter()
        .zip(&b.phi.points)
        .map(|(r, p)| (strings(r).join(""), p.to_string()))
        .collect();
    let text = rows
        .iter()
        .map(|(r, p)| format!("({})\t{}", r, p))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "type": ty.to_string(),
        "cells": b.phi.roots.iter().zip(&b.phi.points)
            .map(|(r, p)| json!({"root": r, "point": p.to_string()})).collect::<Vec<_>>(),
    });
    Ok(Output::new(text, json))
}

fn label_json(l: &qaffine_core::blocks::BlockLabel) -> Value {
    Value::Array(
        l.components
            .iter()
            .map(|(t, c)| json!({"component": t.to_string(), "coords": c}))
            .collect(),
    )
}

fn block_label(ty: AffineType, w: &[SigmaPoint]) -> anyhow::Result<Output> {
    let b = BlockContext::new(ty)?;
    for &p in w {
        b.ctx.check_point(p)?;
    }
    let l = b.block_label(w)?;
    let json = json!({"type": ty.to_string(), "weights": strings(w), "label": label_json(&l)});
    Ok(Output::new(l.to_string(), json))
}

fn read_modules(path: &PathBuf) -> anyhow::Result<Vec<Vec<SigmaPoint>>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let v: Value =
            serde_json::from_str(line).with_context(|| format!("line {}: invalid JSON", n + 1))?;
        let points = match v {
            Value::String(s) => parse_points(&s)?,
            Value::Array(items) => items
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.parse()?),
                    _ => bail!("line {}: expected a string, got {}", n + 1, x),
                })
                .collect::<anyhow::Result<_>>()?,
            other => bail!("line {}: expected an array of points, got {}", n + 1, other),
        };
        out.push(points);
    }
    Ok(out)
}

fn partition(ty: AffineType, file: &PathBuf) -> anyhow::Result<Output> {
    let modules = read_modules(file)?;
    let b = BlockContext::new(ty)?;
    for &p in modules.iter().flatten() {
        b.ctx.check_point(p)?;
    }
    let blocks = b.partition_blocks(&modules)?;
    let text = blocks
        .iter()
        .map(|(l, ix)| format!("{}\t{}", l, strings(ix).join(",")))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "type": ty.to_string(),
        "blocks": blocks.iter().map(|(l, ix)| json!({"label": label_json(l), "modules": ix})).collect::<Vec<_>>(),
    });
    Ok(Output::new(text, json))
}

fn run_verify(criterion: Option<u8>) -> Output {
    let ids: Vec<u8> = match criterion {
        Some(c) => vec![c],
        None => (1..=11).collect(),
    };
    let results: Vec<verify::CriterionResult> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| s.spawn(move || verify::run_criterion(id)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    });
    let ok = results.iter().all(|r| r.passed);
    let text = strings(&results).join("\n");
    let json = json!({
        "passed": ok,
        "criteria": results.iter().map(|r| json!({
            "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail,
        })).collect::<Vec<_>>(),
    });
    Output { text, json, ok }
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::CartanCheck { ty, all_ranks } => cartan_check(ty, all_ranks, cli.verbose),
        Command::Denom { ty, i, j } => denom(ty, i, j),
        Command::De(a) => pair_value("de", a),
        Command::Lambda(a) => pair_value("lambda", a),
        Command::LambdaInf(a) => pair_value("lambda_inf", a),
        Command::SFunc { ty, point } => s_func(ty, point),
        Command::EOf { ty, weights } => e_of(ty, &weights.0),
        Command::SigmaQ { ty } => sigma_q(ty),
        Command::BlockLabel { ty, weights } => block_label(ty, &weights.0),
        Command::Partition { ty, file } => partition(ty, &file),
        Command::Verify { all: _, criterion } => Ok(run_verify(criterion)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            let _ = writeln!(std::io::stdout().lock(), "{}", body);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
