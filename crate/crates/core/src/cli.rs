//! Command-line driver.
//!
//! Exit codes: 0 success / positive answer, 1 checked negative result
//! (not LCD, failed verification, non-monotone or incomplete table),
//! 2 usage, input or resource error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::code::{InnerProduct, LinearCode};
use crate::error::Error;
use crate::format::{parse_code, symbol_rows, write_code};
use crate::galois::Field;
use crate::lcd;
use crate::search::{self, SearchBudget, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lcd",
    version,
    about = "Linear complementary dual codes over GF(2), GF(3), GF(4)"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report dimension, minimum weight, LCD and self-orthogonality of a code file.
    Check { file: PathBuf },
    /// Print the dual code (in the file's inner product) as a code file.
    Dual {
        file: PathBuf,
        /// Write to this path instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Minimum weight and weight distribution.
    MinWeight { file: PathBuf },
    /// Split off an LCD [n,k-1] subcode.
    Descend {
        file: PathBuf,
        /// Descend all the way to dimension 1.
        #[arg(long)]
        chain: bool,
        /// Directory for output code files (default: next to the input).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Extend to an LCD [n,k+1] supercode.
    Ascend {
        file: PathBuf,
        /// Use the dual-descent-dual route instead of adjoining a dual vector.
        #[arg(long)]
        via_duality: bool,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Largest minimum weight of LCD [n,k] codes for k = 1..n.
    Table {
        q: u32,
        inner: String,
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Random generators per cell for cells over the exhaustive budget.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Exhaustively verify the LCD characterizations and the constructions.
    Verify {
        q: u32,
        inner: String,
        n_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Invert one check to exercise the failure path of the harness.
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Largest number of codes one exhaustive cell may visit.
    #[arg(long)]
    pub max_codes: Option<u64>,
    /// Seed for sampling modes.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Allow lengths beyond the default exhaustive range.
    #[arg(long)]
    pub override_budget: bool,
}

impl BudgetArgs {
    fn budget(&self, sample: Option<usize>) -> SearchBudget {
        let mut b = SearchBudget {
            workers: self.workers,
            seed: self.seed,
            override_budget: self.override_budget,
            sample_size: sample,
            ..SearchBudget::default()
        };
        if let Some(m) = self.max_codes {
            b.max_codes = m;
        }
        b
    }
}

/// Outcome of one command: exit code plus what to print.
struct Outcome {
    code: i32,
    stdout: String,
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: EXIT_OK,
        stdout,
    }
}

/// Error with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Invariant(_) => EXIT_NEGATIVE,
            Error::Usage(_) | Error::Parse { .. } | Error::Resource(_) => EXIT_ERROR,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { file } => cmd_check(&read_code(file)?, cli.json),
        Command::Dual { file, out } => cmd_dual(&read_code(file)?, out.as_deref()),
        Command::MinWeight { file } => cmd_min_weight(&read_code(file)?, cli.json),
        Command::Descend {
            file,
            chain,
            out_dir,
        } => cmd_descend(file, *chain, out_dir.as_deref(), cli.json),
        Command::Ascend {
            file,
            via_duality,
            out_dir,
        } => cmd_ascend(file, *via_duality, out_dir.as_deref(), cli.json),
        Command::Table {
            q,
            inner,
            n,
            budget,
            sample,
        } => cmd_table(*q, inner, *n, &budget.budget(*sample), cli.json),
        Command::Verify {
            q,
            inner,
            n_max,
            budget,
            inject_fault,
        } => cmd_verify(
            *q,
            inner,
            *n_max,
            &budget.budget(None),
            VerifyOptions {
                inject_fault: *inject_fault,
            },
            cli.json,
        ),
    }
}

fn read_code(path: &Path) -> std::result::Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_ERROR, format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text).map_err(|e| fail(EXIT_ERROR, format!("{}: {e}", path.display())))
}

fn field_and_inner(q: u32, inner: &str) -> std::result::Result<(Field, InnerProduct), Failure> {
    let field = Field::from_order(q)?;
    let ip = InnerProduct::from_name(inner)?;
    ip.check_field(field)?;
    Ok((field, ip))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn indent_rows(rows: &[String]) -> String {
    rows.iter().map(|r| format!("  {r}\n")).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(c: &LinearCode, json_out: bool) -> CmdResult {
    if c.k() == 0 {
        return Err(fail(EXIT_ERROR, "LCD is not defined for the zero code"));
    }
    let is_lcd = lcd::is_lcd(c)?;
    let so = lcd::is_self_orthogonal(c);
    let d = c.min_weight()?;
    let gram = symbol_rows(&lcd::gram(c));
    let stdout = if json_out {
        json_text(&json!({
            "field": c.field().order(),
            "inner": c.inner_product().name(),
            "n": c.n(),
            "k": c.k(),
            "min_weight": d,
            "lcd": is_lcd,
            "self_orthogonal": so,
            "gram": gram,
        }))
    } else {
        format!(
            "field: {}\ninner: {}\nn: {}\nk: {}\nmin weight: {d}\nLCD: {}\nself-orthogonal: {}\ngram:\n{}",
            c.field(),
            c.inner_product(),
            c.n(),
            c.k(),
            yes_no(is_lcd),
            yes_no(so),
            indent_rows(&gram)
        )
    };
    Ok(Outcome {
        code: if is_lcd { EXIT_OK } else { EXIT_NEGATIVE },
        stdout,
    })
}

fn cmd_dual(c: &LinearCode, out: Option<&Path>) -> CmdResult {
    let text = write_code(&c.dual());
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(ok(format!("wrote {}\n", path.display())))
        }
        None => Ok(ok(text)),
    }
}

fn cmd_min_weight(c: &LinearCode, json_out: bool) -> CmdResult {
    let d = c.min_weight()?;
    let dist = c.weight_distribution()?;
    let stdout = if json_out {
        json_text(&json!({ "min_weight": d, "weight_distribution": dist }))
    } else {
        let mut s = format!("min weight: {d}\n");
        for (w, count) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
            s.push_str(&format!("  A{w} = {count}\n"));
        }
        s
    };
    Ok(ok(stdout))
}

/// `<input-stem>.k<dim>.code`
pub fn output_path(input: &Path, out_dir: Option<&Path>, dim: usize) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "code".to_string());
    let stem = strip_dim_suffix(&stem);
    let dir = out_dir
        .map(Path::to_path_buf)
        .or_else(|| input.parent().map(Path::to_path_buf))
        .unwrap_or_default();
    dir.join(format!("{stem}.k{dim}.code"))
}

/// `foo.k3` -> `foo`, so outputs of earlier runs do not pile up suffixes.
fn strip_dim_suffix(stem: &str) -> &str {
    match stem.rsplit_once(".k") {
        Some((base, digits))
            if !base.is_empty()
                && !digits.is_empty()
                && digits.bytes().all(|b| b.is_ascii_digit()) =>
        {
            base
        }
        _ => stem,
    }
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| fail(EXIT_ERROR, format!("cannot write {}: {e}", path.display())))
}

/// Shared preconditions for descend/ascend, mapped onto exit codes.
fn check_construction_input(c: &LinearCode) -> std::result::Result<(), Failure> {
    lcd::construction_divisor(c.field(), c.inner_product())?;
    if c.k() == 0 {
        return Err(fail(
            EXIT_ERROR,
            "the zero code has nothing to construct from",
        ));
    }
    if !lcd::is_lcd(c)? {
        return Err(fail(
            EXIT_NEGATIVE,
            "not LCD: the Gram matrix of the generator is singular",
        ));
    }
    Ok(())
}

fn step_json(step: &lcd::DescentStep) -> Value {
    json!({
        "parent": { "n": step.parent().n(), "k": step.parent().k() },
        "x": step.chosen_x().to_string(),
        "x_weight": step.chosen_x().weight(),
        "transformed_gen": symbol_rows(step.transformed_gen()),
        "child_rows": symbol_rows(step.child().generator()),
        "child_min_weight": step.child().min_weight().ok(),
    })
}

fn step_text(i: usize, step: &lcd::DescentStep) -> String {
    format!(
        "step {i}: [{n},{k}] -> [{n},{k1}]\n  x: {x} (weight {w})\n  transformed generator:\n{tg}  child:\n{ch}",
        n = step.parent().n(),
        k = step.parent().k(),
        k1 = step.child().k(),
        x = step.chosen_x(),
        w = step.chosen_x().weight(),
        tg = indent_rows(&symbol_rows(step.transformed_gen()))
            .lines()
            .map(|l| format!("  {l}\n"))
            .collect::<String>(),
        ch = indent_rows(&symbol_rows(step.child().generator()))
            .lines()
            .map(|l| format!("  {l}\n"))
            .collect::<String>(),
    )
}

fn cmd_descend(file: &Path, chain: bool, out_dir: Option<&Path>, json_out: bool) -> CmdResult {
    let c = read_code(file)?;
    check_construction_input(&c)?;
    let (steps, codes): (Vec<lcd::DescentStep>, Vec<LinearCode>) = if chain {
        let ch = lcd::descent_chain(&c)?;
        (ch.steps().to_vec(), ch.codes().to_vec())
    } else {
        if c.k() < 2 {
            return Err(fail(EXIT_ERROR, "nothing to descend: dimension is 1"));
        }
        let step = lcd::descend(&c)?;
        let child = step.child().clone();
        (vec![step], vec![child])
    };
    let mut files = Vec::new();
    for code in &codes {
        let path = output_path(file, out_dir, code.k());
        write_file(&path, &write_code(code))?;
        files.push(path.display().to_string());
    }
    let stdout = if json_out {
        json_text(&json!({
            "steps": steps.iter().map(step_json).collect::<Vec<_>>(),
            "files": files,
        }))
    } else {
        let mut s: String = steps
            .iter()
            .enumerate()
            .map(|(i, st)| step_text(i + 1, st))
            .collect();
        for f in &files {
            s.push_str(&format!("wrote {f}\n"));
        }
        s
    };
    Ok(ok(stdout))
}

fn cmd_ascend(file: &Path, via_duality: bool, out_dir: Option<&Path>, json_out: bool) -> CmdResult {
    let c = read_code(file)?;
    check_construction_input(&c)?;
    if c.k() == c.n() {
        return Err(fail(EXIT_ERROR, "the full space has no proper supercode"));
    }
    let (x, up) = if via_duality {
        (None, lcd::ascend_via_duality(&c)?)
    } else {
        let step = lcd::ascend_step(&c)?;
        (Some(step.adjoined_x().to_string()), step.into_supercode())
    };
    let path = output_path(file, out_dir, up.k());
    write_file(&path, &write_code(&up))?;
    let stdout = if json_out {
        json_text(&json!({
            "x": x,
            "supercode_rows": symbol_rows(up.generator()),
            "min_weight": up.min_weight().ok(),
            "file": path.display().to_string(),
        }))
    } else {
        let mut s = format!(
            "[{n},{k}] -> [{n},{k1}]\n",
            n = c.n(),
            k = c.k(),
            k1 = up.k()
        );
        if let Some(x) = &x {
            s.push_str(&format!("  adjoined x: {x}\n"));
        }
        s.push_str("  supercode:\n");
        s.push_str(
            &indent_rows(&symbol_rows(up.generator()))
                .lines()
                .map(|l| format!("  {l}\n"))
                .collect::<String>(),
        );
        s.push_str(&format!("wrote {}\n", path.display()));
        s
    };
    Ok(ok(stdout))
}

fn cmd_table(q: u32, inner: &str, n: usize, budget: &SearchBudget, json_out: bool) -> CmdResult {
    let (field, ip) = field_and_inner(q, inner)?;
    let table = search::build_dtable(field, ip, n, budget).map_err(|e| match e {
        Error::Resource(m) => fail(EXIT_ERROR, m),
        other => other.into(),
    })?;
    let stdout = if json_out {
        let mut s = table.to_json();
        s.push('\n');
        s
    } else {
        table.to_text()
    };
    Ok(Outcome {
        code: if table.is_monotone() && table.is_complete() {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
        stdout,
    })
}

fn tally_text(name: &str, t: &search::CheckTally) -> String {
    let mut s = format!("{name}: {} checks, {} failures\n", t.checks, t.failures);
    for e in &t.examples {
        s.push_str(&format!("    {e}\n"));
    }
    s
}

fn cmd_verify(
    q: u32,
    inner: &str,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
    json_out: bool,
) -> CmdResult {
    let (field, ip) = field_and_inner(q, inner)?;
    let as_error = |e: Error| match e {
        Error::Invariant(_) | Error::Domain(_) => Failure::from(e),
        other => fail(EXIT_ERROR, other.to_string()),
    };
    lcd::construction_divisor(field, ip).map_err(as_error)?;
    let lemmas =
        search::verify_lemma_equivalences(field, ip, n_max, budget, opts).map_err(as_error)?;
    let constructions = search::verify_constructions_exhaustive(field, ip, n_max, budget, opts)
        .map_err(as_error)?;
    let failures = lemmas.failures() + constructions.failures();
    let stdout = if json_out {
        json_text(&json!({
            "lemmas": lemmas,
            "constructions": constructions,
            "failures": failures,
        }))
    } else {
        let mut s = format!("{field} {ip}, n <= {n_max}\n");
        s.push_str(&format!(
            "characterizations: {} codes visited\n",
            lemmas.codes_visited
        ));
        s.push_str(&tally_text(
            "  gram nonsingular vs trivial intersection",
            &lemmas.lcd_vs_intersection,
        ));
        s.push_str(&tally_text("  LCD vs dual LCD", &lemmas.lcd_vs_dual));
        if let Some(t) = &lemmas.self_orthogonal_vs_weights {
            s.push_str(&tally_text("  zero gram vs weights divisible by p", t));
        }
        s.push_str(&format!(
            "constructions: {} codes visited, {} LCD\n",
            constructions.codes_visited, constructions.lcd_codes
        ));
        s.push_str(&tally_text("  descend", &constructions.descent));
        s.push_str(&tally_text("  ascend", &constructions.ascent));
        s.push_str(&tally_text(
            "  ascend via duality",
            &constructions.ascent_via_duality,
        ));
        s.push_str(&format!("failures: {failures}\n"));
        s
    };
    Ok(Outcome {
        code: if failures == 0 {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
        stdout,
    })
}
