//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative answer (point outside, check failed),
//! 2 input error, 3 chain cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::codec::{encode, rho, Basis};
use crate::hull::{HullEngine, RaySet};
use crate::lang::{ndd_to_regex, parse_ndd, parse_regex, parse_word, to_chains, Ndd, Regex};
use crate::lang::DEFAULT_MAX_CHAINS;
use crate::oracle;
use crate::poly::{equal, minimize, rays_to_hrep, Polyhedron};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const MAX_CHECK_BOUND: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "ndd-hull", version, about = "Exact closed convex hulls of regular sets of integer vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the hull and print it as rays, constraints, or JSON.
    Hull {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Rays)]
        format: Format,
        /// Shorthand for `--format json`.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        minimize: MinimizeArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_CHAINS)]
        max_chains: usize,
    },
    /// Decide whether an integer point lies in the hull.
    Member {
        #[command(flatten)]
        input: InputArgs,
        /// Point such as `(1,1,2)` or `1,1,2`.
        #[arg(allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CHAINS)]
        max_chains: usize,
    },
    /// Cross-check the hull against enumerated points.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        bound: usize,
        /// Angular tolerance for direction evidence, in radians
        /// [default: max(1e-6, r^-(bound/2))].
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_MAX_CHAINS)]
        max_chains: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the shortest word encoding a vector.
    Encode {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        dim: usize,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Print the vector encoded by a word.
    Decode {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        dim: usize,
        word: String,
    },
    /// Print the chain decomposition of the input.
    Chains {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_CHAINS)]
        max_chains: usize,
    },
    /// Convert an automaton to a regular expression.
    RegexOf {
        #[arg(long)]
        ndd: PathBuf,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long, conflicts_with = "ndd", required_unless_present = "ndd")]
    regex: Option<String>,
    #[arg(long)]
    ndd: Option<PathBuf>,
    #[arg(long, requires = "regex")]
    base: Option<u32>,
    #[arg(long, requires = "regex")]
    dim: Option<usize>,
}

#[derive(Args, Debug)]
struct MinimizeArgs {
    /// Drop redundant generators before output (default).
    #[arg(long, overrides_with = "no_minimize")]
    minimize: bool,
    #[arg(long, overrides_with = "minimize")]
    no_minimize: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Rays,
    Hrep,
    Json,
}

/// A parsed input language.
pub enum Input {
    Regex { basis: Basis, regex: Regex },
    Ndd { ndd: Ndd, regex: Regex },
}

impl Input {
    pub fn basis(&self) -> Basis {
        match self {
            Input::Regex { basis, .. } => *basis,
            Input::Ndd { ndd, .. } => ndd.basis(),
        }
    }

    pub fn regex(&self) -> &Regex {
        match self {
            Input::Regex { regex, .. } | Input::Ndd { regex, .. } => regex,
        }
    }

    pub fn cloud(&self, bound: usize) -> oracle::PointCloud {
        match self {
            Input::Regex { basis, regex } => oracle::cloud(regex, *basis, bound),
            Input::Ndd { ndd, .. } => oracle::cloud_ndd(ndd, bound),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::ChainBlowup { .. }) => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load_input(args: &InputArgs) -> CliResult<Input> {
    if let Some(path) = &args.ndd {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let ndd = parse_ndd(&text)?;
        let regex = ndd_to_regex(&ndd);
        return Ok(Input::Ndd { ndd, regex });
    }
    let text = args.regex.as_deref().expect("clap enforces --regex or --ndd");
    let (Some(base), Some(dim)) = (args.base, args.dim) else {
        return Err(CliError::Input("--regex requires --base and --dim".into()));
    };
    let basis = Basis::new(base, dim)?;
    Ok(Input::Regex {
        basis,
        regex: parse_regex(text, basis)?,
    })
}

fn parse_vector(text: &str, dim: usize) -> CliResult<Vec<BigInt>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != dim || parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Input(format!(
            "expected a vector of {dim} integers, got '{text}'"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<BigInt>()
                .map_err(|_| CliError::Input(format!("invalid integer '{p}'")))
        })
        .collect()
}

fn format_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// JSON document emitted by `hull --format json`.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct HullJson {
    pub base: u32,
    pub dim: usize,
    pub rays: Vec<RayJson>,
    pub hrep: Vec<ConstraintJson>,
    pub empty: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct RayJson {
    pub alpha: Vec<String>,
    pub c: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ConstraintJson {
    pub a: Vec<String>,
    pub b: String,
    pub rel: String,
}

pub fn hull_json(rays: &RaySet, hrep: &Polyhedron) -> HullJson {
    let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect();
    HullJson {
        base: rays.basis().radix(),
        dim: rays.dim(),
        rays: rays
            .iter()
            .map(|r| RayJson {
                alpha: strings(r.alpha()),
                c: r.c().to_string(),
            })
            .collect(),
        hrep: hrep
            .constraints()
            .iter()
            .map(|c| ConstraintJson {
                a: strings(&c.a),
                b: c.b.to_string(),
                rel: c.rel.symbol().to_string(),
            })
            .collect(),
        empty: hrep.is_empty(),
    }
}

fn compute_hull(input: &Input, max_chains: usize) -> CliResult<RaySet> {
    let mut engine = HullEngine::with_max_chains(input.basis(), max_chains);
    Ok(engine.hull_rho(input.regex())?)
}

fn default_tol(basis: Basis, bound: usize) -> f64 {
    (basis.radix() as f64).powi(-((bound / 2) as i32)).max(1e-6)
}

/// Result of one oracle check.
#[derive(Serialize, Debug)]
struct CheckLine {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn run_check(input: &Input, bound: usize, tol: Option<f64>, max_chains: usize) -> CliResult<Vec<CheckLine>> {
    if bound > MAX_CHECK_BOUND {
        return Err(CliError::Input(format!("--bound must be at most {MAX_CHECK_BOUND}")));
    }
    let basis = input.basis();
    let hull = minimize(&compute_hull(input, max_chains)?);
    let hrep = rays_to_hrep(&hull);
    let pc = input.cloud(bound);
    let mut lines = Vec::new();

    let bad = oracle::soundness_violations(&pc, &hrep);
    lines.push(CheckLine {
        name: "soundness",
        pass: bad.is_empty(),
        detail: match bad.first() {
            None => format!("{} points up to length {bound} inside", pc.len()),
            Some(x) => format!("{} points outside, e.g. {}", bad.len(), format_vector(x)),
        },
    });

    if hull.directions().next().is_none() {
        let chains = to_chains(input.regex(), basis, max_chains)?;
        let k = oracle::polytope_bound(&chains);
        let big = input.cloud(k);
        let pass = if hull.is_empty() {
            big.is_empty()
        } else {
            oracle::finite_hull(&big).map(|f| equal(&hull, &f)).unwrap_or(false)
        };
        lines.push(CheckLine {
            name: "polytope-equality",
            pass,
            detail: format!("finite hull of {} points up to length {k}", big.len()),
        });
    } else {
        let tol = tol.unwrap_or_else(|| default_tol(basis, bound));
        let pass = oracle::direction_check(&hull, &pc, tol);
        lines.push(CheckLine {
            name: "directions",
            pass,
            detail: format!("{} directions, tol {tol:e}", hull.directions().count()),
        });
    }
    Ok(lines)
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let io = |e: std::io::Error| CliError::Input(format!("write failed: {e}"));
    match cli.command {
        Command::Hull {
            input,
            format,
            json,
            minimize: min,
            max_chains,
        } => {
            let input = load_input(&input)?;
            let mut hull = compute_hull(&input, max_chains)?;
            if !min.no_minimize {
                hull = minimize(&hull);
            }
            let format = if json { Format::Json } else { format };
            match format {
                Format::Rays => write!(out, "{hull}").map_err(io)?,
                Format::Hrep => write!(out, "{}", rays_to_hrep(&hull)).map_err(io)?,
                Format::Json => {
                    let doc = hull_json(&hull, &rays_to_hrep(&hull));
                    let text = serde_json::to_string(&doc).expect("serializable");
                    writeln!(out, "{text}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Member {
            input,
            point,
            max_chains,
        } => {
            let input = load_input(&input)?;
            let x = parse_vector(&point, input.basis().dim())?;
            let hrep = rays_to_hrep(&compute_hull(&input, max_chains)?);
            if hrep.member(&x) {
                writeln!(out, "inside").map_err(io)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "outside").map_err(io)?;
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Check {
            input,
            bound,
            tol,
            max_chains,
            json,
        } => {
            let input = load_input(&input)?;
            let lines = run_check(&input, bound, tol, max_chains)?;
            let all = lines.iter().all(|l| l.pass);
            if json {
                let text = serde_json::to_string(&lines).expect("serializable");
                writeln!(out, "{text}").map_err(io)?;
            } else {
                for l in &lines {
                    let status = if l.pass { "pass" } else { "FAIL" };
                    writeln!(out, "{}: {status} ({})", l.name, l.detail).map_err(io)?;
                }
                writeln!(out, "{}", if all { "pass" } else { "FAIL" }).map_err(io)?;
            }
            Ok(if all { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Encode { base, dim, vector } => {
            let basis = Basis::new(base, dim)?;
            let x = parse_vector(&vector, dim)?;
            writeln!(out, "{}", encode(&x, basis)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Decode { base, dim, word } => {
            let basis = Basis::new(base, dim)?;
            let w = parse_word(&word, basis)?;
            writeln!(out, "{}", format_vector(&rho(&w))).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Chains { input, max_chains } => {
            let input = load_input(&input)?;
            for chain in to_chains(input.regex(), input.basis(), max_chains)? {
                writeln!(out, "{chain}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::RegexOf { ndd } => {
            let input = load_input(&InputArgs {
                regex: None,
                ndd: Some(ndd),
                base: None,
                dim: None,
            })?;
            writeln!(out, "{}", input.regex()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["ndd-hull"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hull_half_line() {
        let (code, out, _) = call(&["hull", "--regex", "<1>*", "--base", "2", "--dim", "1", "--format", "hrep"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x1 >= 0\n");
        let (_, out, _) = call(&["hull", "--regex", "<1>*", "--base", "2", "--dim", "1"]);
        assert_eq!(out, "(0) 1\n(1) 0\n");
    }

    #[test]
    fn hull_empty() {
        let (code, out, _) = call(&["hull", "--regex", "#", "--base", "2", "--dim", "1"]);
        assert_eq!((code, out.as_str()), (0, "empty\n"));
        let (_, out, _) = call(&["hull", "--regex", "#", "--base", "2", "--dim", "1", "--format", "hrep"]);
        assert_eq!(out, "empty\n");
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, _, err) = call(&["hull", "--regex", "<1", "--base", "2", "--dim", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("syntax error"));
        let (code, _, _) = call(&["hull", "--regex", "<1>"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["hull", "--ndd", "/nonexistent/file.ndd"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["bogus"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["member", "--regex", "<1>", "--base", "2", "--dim", "1", "(1,2)"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn member_answers() {
        let args = ["member", "--regex", "<1>*", "--base", "2", "--dim", "1"];
        let (code, out, _) = call(&[&args[..], &["(5)"]].concat());
        assert_eq!((code, out.as_str()), (0, "inside\n"));
        let (code, out, _) = call(&[&args[..], &["-1"]].concat());
        assert_eq!((code, out.as_str()), (1, "outside\n"));
        let (code, out, _) = call(&["member", "--regex", "#", "--base", "2", "--dim", "1", "0"]);
        assert_eq!((code, out.as_str()), (1, "outside\n"));
    }

    #[test]
    fn encode_decode() {
        let (_, out, _) = call(&["decode", "--base", "2", "--dim", "3", "<1,1,0><0,0,1>"]);
        assert_eq!(out, "(1,1,2)\n");
        let (_, out, _) = call(&["encode", "--base", "2", "--dim", "2", "(0,0)"]);
        assert_eq!(out, "@\n");
        let (_, out, _) = call(&["encode", "--base", "3", "--dim", "2", "(4,1)"]);
        assert_eq!(out, "<1,1><1,0>\n");
        let (code, _, _) = call(&["encode", "--base", "2", "--dim", "1", "(-3)"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["decode", "--base", "2", "--dim", "1", "<1>*"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn check_passes() {
        let (code, out, _) = call(&["check", "--regex", "<1>*", "--base", "2", "--dim", "1", "--bound", "10"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = call(&["check", "--regex", "#", "--base", "2", "--dim", "1"]);
        assert_eq!(code, 0, "{out}");
        let (code, _, _) = call(&["check", "--regex", "<1>", "--base", "2", "--dim", "1", "--bound", "17"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn chains_and_cap() {
        let (code, out, _) = call(&["chains", "--regex", "<1>(<0>|<1>)", "--base", "2", "--dim", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "<1><0>\n<1><1>\n");
        let (code, _, err) = call(&[
            "hull", "--regex", "(<0>|<1>)(<0>|<1>)(<0>|<1>)", "--base", "2", "--dim", "1", "--max-chains", "4",
        ]);
        assert_eq!(code, 3);
        assert!(err.contains("cap"));
    }

    #[test]
    fn json_round_trip() {
        let (code, out, _) = call(&["hull", "--regex", "<1><0>*|<1,1>", "--base", "2", "--dim", "1", "--json"]);
        assert_eq!(code, 2, "digit vector of wrong arity is an input error");
        let (code, out2, _) = call(&["hull", "--regex", "(<1>|<0><1>)*", "--base", "2", "--dim", "1", "--json"]);
        assert_eq!(code, 0);
        let doc: HullJson = serde_json::from_str(&out2).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap() + "\n", out2);
        assert!(!doc.empty);
        assert!(out.is_empty());
    }
}
