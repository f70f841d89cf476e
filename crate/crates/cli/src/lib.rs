//! Command-line front end.
//!
//! Exit codes: 0 for success or an affirmative answer, 1 for a well-posed
//! negative answer (unsolvable, verification failed), 2 for usage and input
//! errors. Matrices are printed in the plain-text format of
//! [`detdio::text`]; diagnostic lines start with `#`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use detdio::divisor::greatest_divisor_minors_capped;
use detdio::matrix::DEFAULT_MINOR_CAP;
use detdio::text::parse_vector;
use detdio::{
    complete_to_form, determinant, format_matrix, greatest_divisor_ltf, is_ltf, is_solvable,
    is_unimodular, ltf_reduce_traced, multiply, parse_matrix, solve, solve_linear, verify_solution,
    BigInt, EquationInstance, Error, IntMat, LinearForm, Orientation, SolutionBlock,
};
use num_traits::Signed;

pub const MINOR_CAP_VAR: &str = "DETDIO_MINOR_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "detdio",
    version,
    about = "Exact integer matrices and the equation det([A; X]) = ±d"
)]
struct Cli {
    /// Print matrices as JSON arrays of decimal strings.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant of a square matrix.
    Det { file: PathBuf },

    /// Reduce to lower triangular form by column operations.
    Ltf {
        file: PathBuf,
        /// Write the unimodular transform U (with M·U = L) to this file.
        #[arg(long)]
        emit_transform: Option<PathBuf>,
        /// Write U⁻¹ to this file.
        #[arg(long)]
        emit_inverse: Option<PathBuf>,
        /// Print every elementary operation to stderr.
        #[arg(long)]
        trace: bool,
    },

    /// Greatest divisor (gcd of the maximal minors).
    Gd {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Ltf)]
        method: Method,
    },

    /// Decide whether det([A; X]) = ±d has an integer solution.
    Solvable {
        file: PathBuf,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: String,
        /// Width of the equation when the known block is empty.
        #[arg(long)]
        cols: Option<usize>,
    },

    /// Construct X with det of the stacked matrix equal to d.
    Solve {
        file: PathBuf,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: String,
        #[arg(long, value_enum, default_value_t = Side::Top)]
        orientation: Side,
        /// Width of the equation when the known block is empty.
        #[arg(long)]
        cols: Option<usize>,
    },

    /// Print a matrix A with det([A; x]) equal to the given linear form.
    Complete {
        #[arg(short = 'a', allow_hyphen_values = true)]
        coeffs: String,
    },

    /// Solve a1·x1 + … + an·xn = d.
    SolveLinear {
        #[arg(short = 'a', allow_hyphen_values = true)]
        coeffs: String,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: String,
    },

    /// Check M·U against LTF, or a solution block X when -d is given.
    Verify {
        matrix: PathBuf,
        /// U (transform mode) or X (solution mode).
        second: PathBuf,
        /// Expected L; defaults to checking that M·U is in LTF.
        #[arg(long)]
        ltf: Option<PathBuf>,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: Option<String>,
        #[arg(long, value_enum, default_value_t = Side::Top)]
        orientation: Side,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Ltf,
    Minors,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Top,
    Bottom,
}

impl From<Side> for Orientation {
    fn from(s: Side) -> Self {
        match s {
            Side::Top => Orientation::KnownOnTop,
            Side::Bottom => Orientation::KnownOnBottom,
        }
    }
}

/// Failure of a command, already mapped to its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
    /// Negative answers go to stdout, errors to stderr.
    to_stdout: bool,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            to_stdout: false,
        }
    }

    fn negative(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
            to_stdout: true,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsolvable { .. } | Error::UnsolvableLinear { .. } => {
                Failure::negative(e.to_string())
            }
            other => Failure::usage(format!("error: {other}")),
        }
    }
}

type CmdResult = Result<i32, Failure>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    minor_cap: Option<String>,
}

impl Ctx<'_> {
    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn matrix(&mut self, m: &IntMat) {
        if self.json {
            let s = matrix_json(m).to_string();
            self.line(&s);
        } else {
            let _ = write!(self.out, "{}", format_matrix(m));
        }
    }

    fn scalar(&mut self, v: &BigInt) {
        if self.json {
            let s = serde_json::Value::String(v.to_string()).to_string();
            self.line(&s);
        } else {
            self.line(&v.to_string());
        }
    }

    fn cap(&self) -> Result<u64, Failure> {
        match &self.minor_cap {
            None => Ok(DEFAULT_MINOR_CAP),
            Some(s) => s.trim().parse().map_err(|_| {
                Failure::usage(format!(
                    "error: {MINOR_CAP_VAR} must be a nonnegative integer, got `{s}`"
                ))
            }),
        }
    }
}

fn matrix_json(m: &IntMat) -> serde_json::Value {
    serde_json::Value::Array(
        m.row_iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|v| serde_json::Value::String(v.to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Runs one invocation. `args` includes the program name. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(args, std::env::var(MINOR_CAP_VAR).ok(), out, err)
}

pub fn run_with_env<I, T>(
    args: I,
    minor_cap: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };

    let mut ctx = Ctx {
        out,
        json: cli.json,
        minor_cap,
    };
    match dispatch(cli.command, &mut ctx, err) {
        Ok(code) => code,
        Err(f) => {
            if f.to_stdout {
                ctx.line(&f.message);
            } else {
                let _ = writeln!(err, "{}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Det { file } => {
            let m = read_matrix(&file)?;
            let d = determinant(&m)?;
            ctx.scalar(&d);
            Ok(0)
        }
        Command::Ltf {
            file,
            emit_transform,
            emit_inverse,
            trace,
        } => {
            let m = read_matrix(&file)?;
            let (dec, tr) = ltf_reduce_traced(&m)?;
            if trace {
                for op in &tr.ops {
                    let _ = writeln!(err, "{op}");
                }
            }
            if let Some(path) = emit_transform {
                write_matrix(&path, dec.transform.forward())?;
            }
            if let Some(path) = emit_inverse {
                write_matrix(&path, dec.transform.inverse())?;
            }
            ctx.matrix(&dec.ltf);
            Ok(0)
        }
        Command::Gd { file, method } => {
            let m = read_matrix(&file)?;
            match method {
                Method::Ltf => ctx.scalar(greatest_divisor_ltf(&m)?.value()),
                Method::Minors => {
                    let cap = ctx.cap()?;
                    ctx.scalar(greatest_divisor_minors_capped(&m, cap)?.value());
                }
                Method::Both => {
                    let cap = ctx.cap()?;
                    let a = greatest_divisor_ltf(&m)?;
                    let b = greatest_divisor_minors_capped(&m, cap)?;
                    if ctx.json {
                        let v = serde_json::json!({
                            "ltf": a.value().to_string(),
                            "minors": b.value().to_string(),
                        });
                        ctx.line(&v.to_string());
                    } else {
                        ctx.line(&format!("ltf {a}"));
                        ctx.line(&format!("minors {b}"));
                    }
                    if a != b {
                        return Err(Failure::negative(format!(
                            "# mismatch: ltf {a} != minors {b}"
                        )));
                    }
                }
            }
            Ok(0)
        }
        Command::Solvable { file, d, cols } => {
            let inst = instance(ctx, &file, &d, Side::Top, cols)?;
            if is_solvable(&inst) {
                ctx.line("solvable");
                Ok(0)
            } else {
                ctx.line("unsolvable");
                Ok(1)
            }
        }
        Command::Solve {
            file,
            d,
            orientation,
            cols,
        } => {
            let inst = instance(ctx, &file, &d, orientation, cols)?;
            let sol = solve(&inst)?;
            let det = determinant(&inst.assemble(&sol.unknown)?)?;
            if ctx.json {
                let v = serde_json::json!({
                    "solution": matrix_json(&sol.unknown),
                    "det": det.to_string(),
                });
                ctx.line(&v.to_string());
            } else {
                ctx.matrix(&sol.unknown);
                ctx.line(&format!("# det = {det}"));
            }
            Ok(0)
        }
        Command::Complete { coeffs } => {
            let form = LinearForm::new(parse_vector(&coeffs)?)?;
            let completion = complete_to_form(&form)?;
            ctx.matrix(&completion.matrix);
            Ok(0)
        }
        Command::SolveLinear { coeffs, d } => {
            let form = LinearForm::new(parse_vector(&coeffs)?)?;
            let x = solve_linear(&form, &parse_int(&d)?)?;
            ctx.matrix(&IntMat::row_vector(x));
            Ok(0)
        }
        Command::Verify {
            matrix,
            second,
            ltf,
            d,
            orientation,
        } => {
            let m = read_matrix(&matrix)?;
            let other = read_matrix(&second)?;
            let ok = match d {
                Some(d) => {
                    let d = normalize_target(ctx, parse_int(&d)?);
                    let inst = EquationInstance::new(m, d, orientation.into())?;
                    verify_solution(&inst, &SolutionBlock { unknown: other })?
                }
                None => {
                    let product = multiply(&m, &other)?;
                    let expected_ok = match ltf {
                        Some(path) => product == read_matrix(&path)?,
                        None => true,
                    };
                    expected_ok && is_ltf(&product) && is_unimodular(&other)
                }
            };
            ctx.line(if ok { "PASS" } else { "FAIL" });
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn instance(
    ctx: &mut Ctx<'_>,
    file: &Path,
    d: &str,
    side: Side,
    cols: Option<usize>,
) -> Result<EquationInstance, Failure> {
    let known = read_matrix(file)?;
    let d = normalize_target(ctx, parse_int(d)?);
    if known.rows() == 0 {
        let width = cols.ok_or_else(|| {
            Failure::usage("error: the known block is empty; pass --cols to fix the width")
        })?;
        return Ok(EquationInstance::without_known(width, d)?);
    }
    if cols.is_some_and(|c| c != known.cols()) {
        return Err(Failure::usage(
            "error: --cols disagrees with the known block width",
        ));
    }
    Ok(EquationInstance::new(known, d, side.into())?)
}

fn normalize_target(ctx: &mut Ctx<'_>, d: BigInt) -> BigInt {
    if d.is_negative() {
        let abs = d.abs();
        if !ctx.json {
            ctx.line(&format!("# note: d = {d} normalized to {abs}"));
        }
        abs
    } else {
        d
    }
}

fn parse_int(s: &str) -> Result<BigInt, Failure> {
    match parse_vector(s)?.as_slice() {
        [v] => Ok(v.clone()),
        _ => Err(Failure::usage(format!(
            "error: expected one integer, got `{s}`"
        ))),
    }
}

fn read_matrix(path: &Path) -> Result<IntMat, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("error: cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_matrix(path: &Path, m: &IntMat) -> Result<(), Failure> {
    fs::write(path, format_matrix(m))
        .map_err(|e| Failure::usage(format!("error: cannot write {}: {e}", path.display())))
}
