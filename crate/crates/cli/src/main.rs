//! `qpartition`: verify the identity registry, expand series, enumerate partitions.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use qpartition_core::double_series::{r_series, r_series_x, r_value, DoubleSeriesParams};
use qpartition_core::identities::{self, Identity, VerificationReport};
use qpartition_core::partitions::{
    enumerate, generating_function, remove_triangle, render_diagram, specialized_series, verify_bijection, GapRule,
    Partition,
};
use qpartition_core::{LaurentQSeries, XSeries};

#[derive(Parser)]
#[command(
    name = "qpartition",
    version,
    about = "Exact q-series checks for gap-condition partition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check registry identities coefficientwise; exits 0 iff every check passes.
    Verify(VerifyArgs),
    /// Print the coefficients of a series below q^order.
    Expand(ExpandArgs),
    /// List the partitions of a family with a given size.
    Enumerate(EnumerateArgs),
    /// Check a triangle-removal bijection exhaustively, or map one partition.
    Biject(BijectArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id, or `all`.
    id: Option<String>,
    /// Truncation order: coefficients of q^0 .. q^(order-1) are compared.
    #[arg(long, default_value_t = 60)]
    order: i64,
    /// Largest x-degree compared.
    #[arg(long, default_value_t = 10)]
    xdeg: usize,
    /// Emit a JSON array of reports.
    #[arg(long)]
    json: bool,
    /// Print registry ids and citations instead of verifying.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// `R s t l u v w`, `r l u v w n`, or `f<FAMILY>` (e.g. fS, fGG, fG, fGG:3, fT).
    series: String,
    /// Integer parameters for `R` and `r`.
    #[arg(allow_negative_numbers = true)]
    params: Vec<i64>,
    #[arg(long, default_value_t = 10)]
    order: i64,
    /// Expand in x up to this degree (for `f<FAMILY>` and `R`); without it x = 1.
    #[arg(long)]
    xdeg: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// S, GG, G, T, T-GG or T-G, optionally with `:t` for parts at least t.
    family: String,
    size: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BijectArgs {
    /// Source family S, GG or G; the target and d follow from it.
    family: Option<String>,
    /// Largest size checked.
    #[arg(long, default_value_t = 30)]
    max_size: u64,
    /// Map a single partition, written like 30+26+23+18+12+8+4+1.
    #[arg(long, value_name = "PARTITION")]
    map: Option<String>,
    /// Triangle step for --map.
    #[arg(long, default_value_t = 3)]
    d: u64,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Expand(a) => expand(a).map(|_| true),
        Command::Enumerate(a) => enumerate_cmd(a).map(|_| true),
        Command::Biject(a) => biject(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn verify(a: VerifyArgs) -> Result<bool> {
    if a.list {
        for e in identities::registry() {
            println!("{:<22} {}", e.id, e.citation);
        }
        return Ok(true);
    }
    let id = a.id.ok_or_else(|| anyhow!("give an identity id, `all`, or --list"))?;
    if a.order < 1 {
        bail!("--order must be at least 1");
    }
    let selected: Vec<&Identity> = if id == "all" {
        identities::registry().iter().collect()
    } else {
        vec![identities::find(&id)?]
    };
    // par_iter keeps registry order in the collected results
    let results: Vec<_> = selected.par_iter().map(|e| (e.id, e.verify(a.order, a.xdeg))).collect();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (id, r) in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(format!("{id}: {e}")),
        }
    }
    if a.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for r in &reports {
            println!("{}", summary_line(r));
        }
    }
    for e in &errors {
        eprintln!("error: {e}");
    }
    if !errors.is_empty() {
        bail!("{} check(s) could not run", errors.len());
    }
    Ok(reports.iter().all(VerificationReport::passed))
}

fn summary_line(r: &VerificationReport) -> String {
    let head = format!(
        "{} {:<22} trunc {} x^{} {} ms",
        if r.passed() { "PASS" } else { "FAIL" },
        r.identity_id,
        r.trunc,
        r.xdeg_bound,
        r.elapsed_ms
    );
    match &r.first_discrepancy {
        None => head,
        Some(d) => format!(
            "{head}\n     first discrepancy at x^{} q^{}: lhs {}, rhs {}{}",
            d.xpow,
            d.qpow,
            d.lhs_coeff,
            d.rhs_coeff,
            d.context.as_ref().map(|c| format!(" ({c})")).unwrap_or_default()
        ),
    }
}

enum Expanded {
    Q(LaurentQSeries),
    X(XSeries),
}

fn expand(a: ExpandArgs) -> Result<()> {
    if a.order < 1 {
        bail!("--order must be at least 1");
    }
    let p = &a.params;
    let need = |n: usize| -> Result<()> {
        if p.len() != n {
            bail!("`{}` takes {n} integer parameters, got {}", a.series, p.len());
        }
        Ok(())
    };
    let series = match a.series.as_str() {
        "R" => {
            need(6)?;
            let params = DoubleSeriesParams::new(p[0], p[1], p[2], p[3], p[4], p[5]);
            match a.xdeg {
                Some(d) => Expanded::X(r_series_x(&params, a.order, d)?),
                None => Expanded::Q(r_series(&params, a.order)?),
            }
        }
        "r" => {
            need(5)?;
            Expanded::Q(r_value(p[0], p[1], p[2], p[3], p[4], a.order)?)
        }
        name => {
            let family = name
                .strip_prefix('f')
                .ok_or_else(|| anyhow!("unknown series `{name}` (expected R, r or f<FAMILY>)"))?;
            need(0)?;
            let rule = GapRule::by_name(family)?;
            match a.xdeg {
                Some(d) => Expanded::X(generating_function(&rule, a.order, d)),
                None => Expanded::Q(specialized_series(&rule, 0, a.order)),
            }
        }
    };
    let rows: Vec<(usize, i64, String)> = match &series {
        Expanded::Q(s) => dense(s).into_iter().map(|(e, c)| (0, e, c)).collect(),
        Expanded::X(s) => s
            .x_coeffs()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| dense(c).into_iter().map(move |(e, c)| (i, e, c)))
            .collect(),
    };
    let with_x = matches!(series, Expanded::X(_));
    if a.json {
        let terms: Vec<_> = rows
            .iter()
            .map(|(x, e, c)| {
                if with_x {
                    json!({"xpow": x, "qpow": e, "coeff": c})
                } else {
                    json!({"qpow": e, "coeff": c})
                }
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"trunc": a.order, "terms": terms}))?
        );
    } else {
        for (x, e, c) in rows {
            if with_x {
                println!("x^{x} q^{e} {c}");
            } else {
                println!("q^{e} {c}");
            }
        }
    }
    Ok(())
}

/// Every coefficient from the lowest exponent (or 0) up to the truncation order.
fn dense(s: &LaurentQSeries) -> Vec<(i64, String)> {
    let lo = s.valuation().min(0);
    (lo..s.trunc())
        .map(|e| (e, s.coeff(e).expect("below trunc").to_string()))
        .collect()
}

fn enumerate_cmd(a: EnumerateArgs) -> Result<()> {
    let rule = GapRule::by_name(&a.family)?;
    let parts = enumerate(&rule, a.size);
    if a.json {
        println!("{}", serde_json::to_string(&parts)?);
    } else {
        for p in &parts {
            println!(
                "{}",
                if p.is_empty() {
                    "(empty)".to_string()
                } else {
                    p.to_string()
                }
            );
        }
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(['+', ','])
        .map(|t| t.trim().parse::<u64>().with_context(|| format!("bad part `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::new(parts)?)
}

fn biject(a: BijectArgs) -> Result<bool> {
    if let Some(text) = &a.map {
        let p = parse_partition(text)?;
        let image = remove_triangle(&p, a.d)?;
        if a.json {
            let out = json!({
                "d": a.d,
                "source": p,
                "image": image,
                "source_diagram": render_diagram(&p, a.d),
                "image_diagram": render_diagram(&image, a.d),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        } else {
            println!("{p}  (size {}, length {})", p.size(), p.len());
            println!("{}", render_diagram(&p, a.d));
            println!("maps to {image}  (size {})", image.size());
            println!("{}", render_diagram(&image, a.d));
        }
        return Ok(true);
    }
    let family = a
        .family
        .as_deref()
        .ok_or_else(|| anyhow!("give a source family or --map"))?;
    let (source, target, d) = match family {
        "S" => (GapRule::schur(), GapRule::schur_image(), 3),
        "GG" => (GapRule::gollnitz_gordon(), GapRule::gollnitz_gordon_image(), 2),
        "G" => (GapRule::gollnitz(), GapRule::gollnitz_image(), 2),
        other => bail!("no bijection preset for `{other}` (expected S, GG or G)"),
    };
    let report = verify_bijection(&source, &target, d, a.max_size);
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else if report.passed() {
        println!(
            "PASS {family}: {} partitions of size <= {} map bijectively (d = {d})",
            report.checked, a.max_size
        );
    } else {
        println!("FAIL {family}: {:?}", report.failure);
    }
    Ok(report.passed())
}
