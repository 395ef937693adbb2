//! The `hhodge` command line.
//!
//! [`run`] parses arguments, writes the report to `out` and diagnostics to
//! `err`, and returns the exit status: 0 on success, 1 when a verification
//! fails, 2 on usage or validation errors.

use std::fmt;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hurwitz_hodge::derivation;
use hurwitz_hodge::m0b::{self, ClassSpec, FCurve};
use hurwitz_hodge::monodromy::{self, TupleSpec};
use hurwitz_hodge::rational::format_rational;
use hurwitz_hodge::{
    BoundaryLabel, EnumerationMode, HodgeExpression, HurwitzParams, RamificationFormat,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "hhodge",
    version,
    about = "Hodge class on Hurwitz spaces of admissible covers",
    arg_required_else_help = false
)]
struct Cli {
    /// Worker threads; does not change the output
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Hodge class as a combination of boundary divisors
    Hodge {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value_t = Mode::Formal)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Derive the Hodge class symbolically and compare with the closed form
    Derive {
        #[command(flatten)]
        space: Space,
        /// Print every rewrite step
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// List boundary labels with their multiplicity data
    Boundary {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_enum, default_value_t = Mode::Formal)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Intersect a divisor class with an F-curve
    Pair {
        #[arg(long)]
        b: u32,
        /// psi, psi_i:I, T:J, kappa1 or S:1,2,...
        #[arg(long)]
        class: ClassSpec,
        /// Four blocks such as "1,2|3|4|5"
        #[arg(long)]
        fcurve: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Check that psi equals its boundary expression on every F-curve
    PsiCheck {
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Count permutation tuples with product the identity
    Count {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        transpositions: u32,
        /// Cycle type of the first extra factor, e.g. 3,1
        #[arg(long)]
        mu: RamificationFormat,
        /// Further cycle types; may be repeated
        #[arg(long)]
        extra: Vec<RamificationFormat>,
        /// Count only tuples generating a transitive group
        #[arg(long)]
        transitive: bool,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
}

#[derive(Args, Debug)]
struct Space {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    degree: u32,
    /// Order of the marked ramification point
    #[arg(long)]
    ram: Option<u32>,
}

impl Space {
    fn params(&self) -> hurwitz_hodge::Result<HurwitzParams> {
        HurwitzParams::new(self.genus, self.degree, self.ram)
    }

    fn echo(&self) -> Value {
        json!({ "genus": self.genus, "degree": self.degree, "ram": self.ram })
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Formal,
    Strict,
}

impl From<Mode> for EnumerationMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Formal => EnumerationMode::Formal,
            Mode::Strict => EnumerationMode::Strict,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Formal => "formal",
            Mode::Strict => "strict",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Character,
}

enum Failure {
    Usage(String),
    Verification,
    Io(io::Error),
}

impl From<hurwitz_hodge::Error> for Failure {
    fn from(e: hurwitz_hodge::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Hodge {
            space,
            mode,
            format,
        } => hodge(space, *mode, *format, out),
        Command::Derive {
            space,
            trace,
            format,
        } => derive(space, *trace, *format, out),
        Command::Boundary {
            space,
            mode,
            format,
        } => boundary(space, *mode, *format, out),
        Command::Pair {
            b,
            class,
            fcurve,
            format,
        } => pair(*b, class, fcurve, *format, out),
        Command::PsiCheck { b, format } => psi_check(*b, *format, out),
        Command::Count {
            degree,
            transpositions,
            mu,
            extra,
            transitive,
            method,
            format,
        } => {
            let mut extra_types = vec![mu.clone()];
            extra_types.extend(extra.iter().cloned());
            let spec = TupleSpec {
                degree: *degree,
                n_transpositions: *transpositions,
                extra_types,
                require_transitive: *transitive,
            };
            count(&spec, *method, *format, out)
        }
    }
}

fn envelope(command: &str, params: Value, result: Value) -> Value {
    json!({ "command": command, "params": params, "result": result, "version": VERSION })
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// `l = 2` is simple branching with one branch point marked; show it in the
/// unmarked basis whenever the coefficients allow.
fn present(e: HodgeExpression) -> HodgeExpression {
    if e.params().l() == Some(2) {
        e.fold_symmetric().unwrap_or(e)
    } else {
        e
    }
}

fn side_text(label: &BoundaryLabel) -> &'static str {
    match label.side1 {
        None => "-",
        Some(true) => "1",
        Some(false) => "2",
    }
}

fn label_row(label: &BoundaryLabel) -> Vec<String> {
    vec![
        label.k.to_string(),
        label.mu.to_string(),
        side_text(label).to_string(),
        label.mu.lcm().to_string(),
        label.mu.branch_count().to_string(),
    ]
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: Vec<&str>| -> io::Result<()> {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        writeln!(out, "{}", s.trim_end())
    };
    line(header.to_vec())?;
    for row in rows {
        line(row.iter().map(String::as_str).collect())?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

const TERM_HEADER: [&str; 6] = ["k", "mu", "side", "m", "branches", "coeff"];

fn term_rows(e: &HodgeExpression) -> Vec<Vec<String>> {
    e.terms()
        .map(|(label, c)| {
            let mut row = label_row(label);
            row.push(format_rational(c));
            row
        })
        .collect()
}

fn hodge(
    space: &Space,
    mode: Mode,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let params = space.params()?;
    let e = present(hurwitz_hodge::hurwitz::hodge_class(&params, mode.into())?);
    match format {
        TableFormat::Json => {
            let mut echo = space.echo();
            echo["mode"] = json!(mode.to_string());
            write_json(out, &envelope("hodge", echo, e.to_json_value()))
        }
        TableFormat::Csv => write_csv(out, &TERM_HEADER, &term_rows(&e)),
        TableFormat::Table => {
            writeln!(out, "lambda on {} ({mode})", e.params())?;
            write_table(out, &TERM_HEADER, &term_rows(&e))?;
            Ok(())
        }
    }
}

fn derive(
    space: &Space,
    trace: bool,
    format: TextFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let params = space.params()?;
    let d = derivation::derive_hodge_traced(&params)?;
    let closed = hurwitz_hodge::hurwitz::hodge_class(&params, EnumerationMode::Formal)?;
    let agrees = d.expression.agrees_with(&closed);
    let shown = present(d.expression.clone());
    match format {
        TextFormat::Json => {
            let mut result = json!({
                "expression": shown.to_json_value(),
                "matches_closed_form": agrees,
            });
            if trace {
                result["trace"] = d.trace.iter().map(|s| s.to_json_value()).collect();
            }
            let mut echo = space.echo();
            echo["trace"] = json!(trace);
            write_json(out, &envelope("derive", echo, result))?;
        }
        TextFormat::Text => {
            if trace {
                for (i, step) in d.trace.iter().enumerate() {
                    writeln!(out, "[{}] {}: {}", i + 1, step.rule, step.note)?;
                    writeln!(out, "    {}", step.class)?;
                }
            }
            writeln!(out, "lambda on {}", shown.params())?;
            write_table(out, &TERM_HEADER, &term_rows(&shown))?;
            let verdict = if agrees { "match" } else { "MISMATCH" };
            writeln!(out, "closed form: {verdict}")?;
        }
    }
    if agrees {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn boundary(
    space: &Space,
    mode: Mode,
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let params = space.params()?;
    let labels = hurwitz_hodge::hurwitz::enumerate_boundary(&params, mode.into())?;
    let header = ["k", "mu", "side", "m", "branches", "d-r", "parity"];
    let rows: Vec<Vec<String>> = labels
        .iter()
        .map(|label| {
            let mut row = label_row(label);
            row.push(label.mu.reflection_length().to_string());
            row.push(label.parity_sum(&params).to_string());
            row
        })
        .collect();
    match format {
        TableFormat::Json => {
            let items: Vec<Value> = labels
                .iter()
                .map(|label| {
                    json!({
                        "k": label.k,
                        "mu": label.mu.parts(),
                        "side1": label.side1,
                        "m_lcm": label.mu.lcm().to_string(),
                        "branches": label.mu.branch_count().to_string(),
                        "reflection_length": label.mu.reflection_length(),
                        "parity_sum": label.parity_sum(&params),
                    })
                })
                .collect();
            let mut echo = space.echo();
            echo["mode"] = json!(mode.to_string());
            let result = json!({ "b": params.b(), "labels": items });
            write_json(out, &envelope("boundary", echo, result))
        }
        TableFormat::Csv => write_csv(out, &header, &rows),
        TableFormat::Table => {
            writeln!(
                out,
                "boundary of {} ({mode}): {} labels",
                params,
                labels.len()
            )?;
            write_table(out, &header, &rows)?;
            Ok(())
        }
    }
}

fn pair(
    b: u32,
    class: &ClassSpec,
    fcurve: &str,
    format: TextFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let f = FCurve::parse(fcurve)?;
    if f.b() != b {
        return Err(Failure::Usage(format!(
            "F-curve {fcurve:?} covers {} points, expected {b}",
            f.b()
        )));
    }
    let value = m0b::pair(&class.build(b)?, &f)?;
    match format {
        TextFormat::Json => {
            let echo = json!({ "b": b, "class": class.to_string(), "fcurve": f.to_string() });
            write_json(
                out,
                &envelope("pair", echo, json!({ "value": format_rational(&value) })),
            )
        }
        TextFormat::Text => {
            writeln!(out, "{class} . [{f}] = {}", format_rational(&value))?;
            Ok(())
        }
    }
}

fn psi_check(b: u32, format: TextFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let psi = m0b::psi_total(b)?;
    let closed = m0b::psi_total_closed(b)?;
    let fcurves = m0b::enumerate_fcurves(b)?;
    let mut mismatches = Vec::new();
    for f in &fcurves {
        let (lhs, rhs) = (m0b::pair(&psi, f)?, m0b::pair(&closed, f)?);
        if lhs != rhs {
            mismatches.push((f, lhs, rhs));
        }
    }
    match format {
        TextFormat::Json => {
            let bad: Vec<Value> = mismatches
                .iter()
                .map(|(f, l, r)| {
                    json!({ "fcurve": f.to_string(), "psi": format_rational(l), "boundary": format_rational(r) })
                })
                .collect();
            let result =
                json!({ "checked": fcurves.len(), "ok": bad.is_empty(), "mismatches": bad });
            write_json(out, &envelope("psi-check", json!({ "b": b }), result))?;
        }
        TextFormat::Text => {
            for (f, l, r) in &mismatches {
                writeln!(
                    out,
                    "mismatch on [{f}]: psi gives {}, boundary gives {}",
                    format_rational(l),
                    format_rational(r)
                )?;
            }
            let status = if mismatches.is_empty() {
                "ok"
            } else {
                "FAILED"
            };
            writeln!(out, "checked {} F-curves at b={b}: {status}", fcurves.len())?;
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn count(
    spec: &TupleSpec,
    method: Method,
    format: TextFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let value = match method {
        Method::Brute => monodromy::brute_count(spec)?.to_string(),
        Method::Character => {
            if spec.require_transitive {
                return Err(Failure::Usage(
                    "--transitive is only supported with --method brute".into(),
                ));
            }
            format_rational(&monodromy::character_count(spec)?)
        }
    };
    match format {
        TextFormat::Json => {
            let echo = json!({
                "degree": spec.degree,
                "transpositions": spec.n_transpositions,
                "types": spec.extra_types.iter().map(|t| t.parts().to_vec()).collect::<Vec<_>>(),
                "transitive": spec.require_transitive,
                "method": match method { Method::Brute => "brute", Method::Character => "character" },
            });
            write_json(out, &envelope("count", echo, json!({ "count": value })))
        }
        TextFormat::Text => {
            writeln!(out, "{value}")?;
            Ok(())
        }
    }
}
