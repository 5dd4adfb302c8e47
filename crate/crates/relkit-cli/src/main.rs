//! `relkit` — evaluate relation terms, check the law catalog, render
//! relations from model files.
//!
//! Exit codes: 0 on success, 1 when a law check fails, 2 on parse, type or
//! usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use relkit_cli::{eval, format, render, term};
use relkit_core::laws::{Config, Selection};
use relkit_core::Relation;

#[derive(Parser)]
#[command(name = "relkit", version, about = "finite relation algebra workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a term against a model file and print the result.
    Eval {
        /// Model file with universe, relation and binop declarations.
        #[arg(short, long)]
        file: PathBuf,
        /// Term to evaluate, e.g. "syq(R, S) & eps(X) * omega(X)".
        #[arg(short, long)]
        expr: String,
        /// Output style.
        #[arg(long, value_enum, default_value_t = Style::Matrix)]
        style: Style,
        /// Print 0 instead of . for absent pairs in matrix style.
        #[arg(long)]
        dense: bool,
    },
    /// Run a law suite and print one report line per law.
    Check {
        /// Suite to run: all, core, syq, powerset, images, prodsum, binop
        /// or boolalg.
        suite: String,
        /// Seed for randomized instances (overrides RELKIT_SEED).
        #[arg(long)]
        seed: Option<u64>,
        /// Largest randomly drawn universe size.
        #[arg(long)]
        max_size: Option<usize>,
        /// Randomized instances per law.
        #[arg(long)]
        instances: Option<usize>,
    },
    /// Render a named relation or operation from a model file.
    Render {
        /// Model file with universe, relation and binop declarations.
        #[arg(short, long)]
        file: PathBuf,
        /// Name of a declared relation or operation.
        name: String,
        /// Output style.
        #[arg(long, value_enum, default_value_t = Style::Matrix)]
        style: Style,
        /// Print 0 instead of . for absent pairs in matrix style.
        #[arg(long)]
        dense: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    /// Labeled incidence matrix.
    Matrix,
    /// One `source: {targets}` line per source element.
    Sets,
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Eval {
            file,
            expr,
            style,
            dense,
        } => cmd_eval(&file, &expr, style, dense),
        Cmd::Check {
            suite,
            seed,
            max_size,
            instances,
        } => cmd_check(&suite, seed, max_size, instances),
        Cmd::Render {
            file,
            name,
            style,
            dense,
        } => cmd_render(&file, &name, style, dense),
    }
}

const USAGE_ERROR: u8 = 2;
const LAW_FAILURE: u8 = 1;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

/// Write to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn load_model(path: &Path) -> Result<format::Model, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format_args!("{}: {e}", path.display())))?;
    format::parse_model(&text)
        .map_err(|e| usage_error(format_args!("{}:{e}", path.display())))
}

fn relation_text(r: &Relation, style: Style, dense: bool) -> String {
    match style {
        Style::Matrix => render::matrix(r, dense),
        Style::Sets => render::sets(r),
    }
}

fn cmd_eval(file: &Path, expr: &str, style: Style, dense: bool) -> ExitCode {
    let model = match load_model(file) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let t = match term::parse(expr) {
        Ok(t) => t,
        Err(e) => return usage_error(format_args!("expression {e}")),
    };
    match eval::eval(&t, &model) {
        Ok(r) => {
            emit(&relation_text(&r, style, dense));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(format_args!("expression {e}")),
    }
}

fn cmd_check(
    suite: &str,
    seed: Option<u64>,
    max_size: Option<usize>,
    instances: Option<usize>,
) -> ExitCode {
    let selection = match Selection::from_str(suite) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let mut cfg = Config::default();
    cfg.seed = match seed {
        Some(s) => s,
        None => match std::env::var("RELKIT_SEED") {
            Ok(v) => match v.parse() {
                Ok(s) => s,
                Err(_) => return usage_error(format_args!("RELKIT_SEED: `{v}` is not a number")),
            },
            Err(_) => cfg.seed,
        },
    };
    if let Some(m) = max_size {
        cfg.max_size = m;
    }
    if let Some(i) = instances {
        cfg.instances = i;
    }
    let reports = relkit_core::run_laws(selection, &cfg);
    let mut out = String::new();
    let mut failed = 0usize;
    for report in &reports {
        out.push_str(&report.line());
        out.push('\n');
        if !report.passed {
            failed += 1;
            if let Some(cx) = &report.counterexample {
                for line in cx.lines() {
                    out.push_str("    ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
    }
    out.push_str(&format!("checked {} laws: {} failed\n", reports.len(), failed));
    emit(&out);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(LAW_FAILURE)
    }
}

fn cmd_render(file: &Path, name: &str, style: Style, dense: bool) -> ExitCode {
    let model = match load_model(file) {
        Ok(m) => m,
        Err(code) => return code,
    };
    if let Some(r) = model.relation(name) {
        emit(&relation_text(r, style, dense));
        return ExitCode::SUCCESS;
    }
    if let Some(op) = model.binop(name) {
        match style {
            Style::Matrix => emit(&render::cayley(op)),
            Style::Sets => emit(&relation_text(op.table(), style, dense)),
        }
        return ExitCode::SUCCESS;
    }
    if let Some(u) = model.universe(name) {
        emit(&format!(
            "universe {} = {{{}}}\n",
            u.name(),
            u.labels().join(", ")
        ));
        return ExitCode::SUCCESS;
    }
    usage_error(format_args!(
        "{}: no relation, operation or universe named `{name}`",
        file.display()
    ))
}
