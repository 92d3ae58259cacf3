//! Command-line driver: file validation, classification, full reports,
//! catalog and family generation, non-isometry certificates, and pointwise
//! coordinate metrics.
//!
//! Exit-code contract: 0 on success, 1 on a mathematical check failure
//! (for example an input that is not HKT), 2 on input errors (syntax,
//! semantic file problems, bad parameters).

mod format;
mod report;

pub use format::{
    algebra_to_file, parse_algebra_file, parse_algebra_file_lenient, render_file, AlgebraFile,
    BracketEntry, ParseError, SemanticCode,
};
pub use report::{
    build_report, parse_report, render_human, render_json, Report, REPORT_SCHEMA_VERSION,
};

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructors::{
    catalog, one_parameter_family, to_jmap, two_parameter_family,
};
use crate::exactlin::{parse_rational, Scalar};
use crate::expcoords::{adapted_split, metric_at, GroupPoint};
use crate::hypercx::check_hkt;
use crate::invariants::compare;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(
    name = "nilhkt",
    about = "Exact verification and analysis of hyperkähler-with-torsion structures on metric nilpotent Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and metric positivity of an algebra file.
    Validate { file: PathBuf },
    /// Nilpotency step, hypercomplex gates, HKT verdict and torsion class.
    Classify { file: PathBuf },
    /// Full structured report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
        format: ReportFormat,
    },
    /// Emit a catalog algebra as an algebra file.
    Catalog {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a deformation-family member as an algebra file.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Compare the spectral signatures of two algebra files.
    Invariants { file1: PathBuf, file2: PathBuf },
    /// Metric matrix of a catalog algebra at a point in exponential
    /// coordinates.
    Coords {
        name: String,
        /// Comma-separated rational coordinates x1,..,xp,y1,..,yq.
        #[arg(long)]
        point: String,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// One-parameter family member (dimension 4l + 4).
    T {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-parameter family member (dimension 4l + 4, 0 < t < s < 1).
    Ts {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        t: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Human,
    Json,
}

/// Captured result of one command run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        CommandOutcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Entry point used by the binary.
pub fn run_from_env() -> CommandOutcome {
    let args: Vec<String> = std::env::args().collect();
    run_command(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

/// Runs one command line (including the program name) and captures output.
pub fn run_command(argv: &[&str]) -> CommandOutcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome::fail(EXIT_INPUT_ERROR, rendered)
            } else {
                CommandOutcome::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Classify { file } => cmd_classify(&file),
        Command::Report { file, format } => cmd_report(&file, format),
        Command::Catalog { name, out } => cmd_catalog(&name, out.as_deref()),
        Command::Family { family } => match family {
            FamilyCommand::T { l, t, out } => cmd_family_t(l, &t, out.as_deref()),
            FamilyCommand::Ts { l, t, s, out } => cmd_family_ts(l, &t, &s, out.as_deref()),
        },
        Command::Invariants { file1, file2 } => cmd_invariants(&file1, &file2),
        Command::Coords { name, point } => cmd_coords(&name, &point),
    }
}

fn read_file(path: &std::path::Path) -> Result<String, CommandOutcome> {
    std::fs::read_to_string(path).map_err(|e| {
        CommandOutcome::fail(
            EXIT_INPUT_ERROR,
            format!("cannot read {}: {e}\n", path.display()),
        )
    })
}

fn write_or_print(path: Option<&std::path::Path>, text: String) -> CommandOutcome {
    match path {
        None => CommandOutcome::ok(text),
        Some(p) => match std::fs::write(p, &text) {
            Ok(()) => CommandOutcome::ok(format!("wrote {}\n", p.display())),
            Err(e) => CommandOutcome::fail(
                EXIT_INPUT_ERROR,
                format!("cannot write {}: {e}\n", p.display()),
            ),
        },
    }
}

fn cmd_validate(path: &std::path::Path) -> CommandOutcome {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let (alg, _) = match parse_algebra_file_lenient(&text) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let report = alg.validate();
    let mut out = String::new();
    let _ = writeln!(out, "{report}");
    if report.is_valid() {
        CommandOutcome::ok(out)
    } else {
        CommandOutcome {
            code: EXIT_INPUT_ERROR,
            stdout: out,
            stderr: String::new(),
        }
    }
}

fn cmd_classify(path: &std::path::Path) -> CommandOutcome {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let (alg, h) = match parse_algebra_file(&text) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let Some(h) = h else {
        return CommandOutcome::fail(
            EXIT_INPUT_ERROR,
            "file carries no hypercomplex data (J); nothing to classify\n".to_string(),
        );
    };
    let step_desc = match alg.nilpotency_step() {
        Some(s) => format!("{s}-step"),
        None => "not nilpotent".to_string(),
    };
    let verdict = check_hkt(&alg, &h);
    let abelian_desc = if verdict.abelian {
        "abelian hypercomplex"
    } else {
        "non-abelian hypercomplex"
    };
    let mut line = format!(
        "{step_desc}; {abelian_desc}; HKT: {}",
        if verdict.hkt { "yes" } else { "no" }
    );
    if verdict.hkt {
        let conn = crate::bismut::bismut_connection(&alg, &h).expect("verdict passed");
        let c = crate::bismut::torsion_form(&alg, &h, &conn).expect("verdict passed");
        let class = crate::bismut::classify_torsion(&alg, &h, &c).expect("verdict passed");
        let _ = write!(line, "; torsion: {class}");
        CommandOutcome::ok(format!("{line}\n"))
    } else {
        if let Some(w) = verdict.witness {
            let _ = write!(line, " ({w})");
        }
        CommandOutcome {
            code: EXIT_CHECK_FAILED,
            stdout: format!("{line}\n"),
            stderr: String::new(),
        }
    }
}

fn cmd_report(path: &std::path::Path, format: ReportFormat) -> CommandOutcome {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let (alg, h) = match parse_algebra_file(&text) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let report = match build_report(&alg, h.as_ref()) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::fail(EXIT_CHECK_FAILED, format!("{e}\n")),
    };
    let rendered = match format {
        ReportFormat::Human => render_human(&report),
        ReportFormat::Json => render_json(&report),
    };
    let failed = report
        .hypercomplex
        .as_ref()
        .map(|hx| !hx.hkt)
        .unwrap_or(false);
    CommandOutcome {
        code: if failed { EXIT_CHECK_FAILED } else { EXIT_OK },
        stdout: rendered,
        stderr: String::new(),
    }
}

fn cmd_catalog(name: &str, out: Option<&std::path::Path>) -> CommandOutcome {
    let (alg, h) = match catalog(name) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let file = algebra_to_file(&alg, Some(&h));
    write_or_print(out, render_file(&file))
}

fn parse_param(name: &str, value: &str) -> Result<Scalar, CommandOutcome> {
    parse_rational(value).map_err(|_| {
        CommandOutcome::fail(
            EXIT_INPUT_ERROR,
            format!("parameter --{name} must be a rational like 1/2, got {value:?}\n"),
        )
    })
}

fn cmd_family_t(l: usize, t: &str, out: Option<&std::path::Path>) -> CommandOutcome {
    let t = match parse_param("t", t) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (alg, h) = match one_parameter_family(l, &t) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    write_or_print(out, render_file(&algebra_to_file(&alg, Some(&h))))
}

fn cmd_family_ts(l: usize, t: &str, s: &str, out: Option<&std::path::Path>) -> CommandOutcome {
    let t = match parse_param("t", t) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let s = match parse_param("s", s) {
        Ok(v) => v,
        Err(e) => return e,
    };
    let (alg, h) = match two_parameter_family(l, &t, &s) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    write_or_print(out, render_file(&algebra_to_file(&alg, Some(&h))))
}

fn cmd_invariants(path1: &std::path::Path, path2: &std::path::Path) -> CommandOutcome {
    let mut jmaps = Vec::new();
    for path in [path1, path2] {
        let text = match read_file(path) {
            Ok(t) => t,
            Err(out) => return out,
        };
        let (alg, h) = match parse_algebra_file(&text) {
            Ok(x) => x,
            Err(e) => {
                return CommandOutcome::fail(
                    EXIT_INPUT_ERROR,
                    format!("{}: {e}\n", path.display()),
                )
            }
        };
        let Some(h) = h else {
            return CommandOutcome::fail(
                EXIT_INPUT_ERROR,
                format!("{}: file carries no hypercomplex data (J)\n", path.display()),
            );
        };
        match to_jmap(&alg, &h) {
            Ok(j) => jmaps.push(j),
            Err(e) => {
                return CommandOutcome::fail(
                    EXIT_CHECK_FAILED,
                    format!("{}: {e}\n", path.display()),
                )
            }
        }
    }
    let result = compare(&jmaps[0], &jmaps[1]);
    CommandOutcome::ok(format!("{result}\n"))
}

fn cmd_coords(name: &str, point: &str) -> CommandOutcome {
    let (alg, _) = match catalog(name) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let (p, q) = match adapted_split(&alg) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    let coords: Result<Vec<Scalar>, _> = point
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect();
    let coords = match coords {
        Ok(c) => c,
        Err(e) => return CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    };
    if coords.len() != p + q {
        return CommandOutcome::fail(
            EXIT_INPUT_ERROR,
            format!("expected {} coordinates, got {}\n", p + q, coords.len()),
        );
    }
    let pt = GroupPoint::from_coords(&coords, p);
    match metric_at(&alg, &pt) {
        Ok(g) => CommandOutcome::ok(format!("{g}\n")),
        Err(e) => CommandOutcome::fail(EXIT_INPUT_ERROR, format!("{e}\n")),
    }
}
