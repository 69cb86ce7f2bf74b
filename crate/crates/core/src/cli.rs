//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage error, 2 input could not be read or
//! parsed, 3 graph violates the standing hypotheses, 4 methods disagree or a
//! lemma identity fails.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::census::{self, BiasedCensus};
use crate::families::{self, Family, FamilySpec};
use crate::gain_graph::GainGraph;
use crate::lift_os::{self, Phi3Report, ReportError};
use crate::text_format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "falk", version, about = "Exact Falk invariant of complete-lift gain graph arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute phi3 by the selected method(s)
    Phi3 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the biased-subgraph census, w2 and the 3-circuits
    Census {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print F3 generator count and span dimensions
    Diag {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every method and check the w2 and dim (I2)^3 identities
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the gain graph of a named family
    Gen {
        /// braid, shi, linial or semiorder
        #[arg(value_name = "FAMILY", required_unless_present = "family", conflicts_with = "family")]
        name: Option<Family>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        ell: usize,
        #[arg(short = 'o', value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Gain graph file
    #[arg(long, value_name = "PATH", required_unless_present = "family", conflicts_with = "family")]
    file: Option<PathBuf>,
    /// braid, shi, linial or semiorder
    #[arg(long, requires = "ell")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    ell: Option<usize>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Emit key=value lines only
    #[arg(long)]
    machine: bool,
    #[arg(short = 'o', value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Census,
    Falk,
    Kernel,
    All,
}

/// A failure that maps to an exit status, with its message for stderr.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn load(input: &InputArgs) -> Result<GainGraph, Failure> {
    if let Some(path) = &input.file {
        let text = fs::read_to_string(path)
            .map_err(|e| fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        return text_format::parse(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())));
    }
    match (input.family, input.ell) {
        (Some(family), Some(ell)) => {
            let spec = FamilySpec::new(family, ell).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
            Ok(families::generate(&spec))
        }
        _ => Err(fail(EXIT_USAGE, "expected --file or --family with --ell")),
    }
}

fn load_valid(input: &InputArgs) -> Result<GainGraph, Failure> {
    let g = load(input)?;
    let violations = g.validate();
    if violations.is_empty() {
        Ok(g)
    } else {
        let lines = violations.iter().map(|v| v.to_string()).join("\n");
        Err(fail(EXIT_INVALID, format!("graph violates the standing hypotheses:\n{lines}")))
    }
}

/// Collects output lines; text mode may join several keys on one line.
struct Out {
    machine: bool,
    lines: Vec<String>,
}

impl Out {
    fn new(machine: bool) -> Self {
        Out {
            machine,
            lines: Vec::new(),
        }
    }

    fn kv(&mut self, key: &str, value: impl ToString) {
        self.lines.push(format!("{key}={}", value.to_string()));
    }

    /// Several keys: one line each in machine mode, space-joined otherwise.
    fn row(&mut self, pairs: &[(&str, String)]) {
        if self.machine {
            for (k, v) in pairs {
                self.kv(k, v);
            }
        } else {
            self.lines.push(pairs.iter().map(|(k, v)| format!("{k}={v}")).join(" "));
        }
    }

    fn text(&mut self, line: impl Into<String>) {
        if !self.machine {
            self.lines.push(line.into());
        }
    }

    fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

fn census_row(c: &BiasedCensus) -> Vec<(&'static str, String)> {
    vec![
        ("k3", c.k3.to_string()),
        ("k4", c.k4.to_string()),
        ("d2", c.d2.to_string()),
        ("g_circ", c.g_circ.to_string()),
        ("s3", c.s3.to_string()),
    ]
}

fn graph_header(out: &mut Out, g: &GainGraph) {
    if out.machine {
        out.kv("vertices", g.vertex_count());
        out.kv("edges", g.edge_count());
        out.kv("hyperplanes", g.edge_count() + 1);
    } else {
        out.text(format!(
            "graph: {} vertices, {} edges, {} hyperplanes",
            g.vertex_count(),
            g.edge_count(),
            g.edge_count() + 1
        ));
    }
}

fn full_report(g: &GainGraph) -> Result<(Phi3Report, bool), Failure> {
    match lift_os::report(g) {
        Ok(r) => Ok((r, true)),
        Err(ReportError::Disagreement(r)) => Ok((*r, false)),
        Err(ReportError::Invalid(e)) => Err(fail(EXIT_INVALID, e.to_string())),
    }
}

fn agreement_line(out: &mut Out, agree: bool, value: i64) {
    if out.machine {
        out.kv("agreement", agree);
    } else if agree {
        out.text(format!("VERIFIED: all methods agree, phi3 = {value}"));
    } else {
        out.text("DISAGREE: methods returned different values");
    }
}

fn cmd_phi3(input: &InputArgs, method: Method, out: &mut Out) -> Result<i32, Failure> {
    let g = load_valid(input)?;
    graph_header(out, &g);
    let invalid = |e: lift_os::LiftError| fail(EXIT_INVALID, e.to_string());
    match method {
        Method::Census => {
            let c = census::census(&g).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
            out.kv("phi3_census", c.phi3());
        }
        Method::Falk => {
            let a = lift_os::build_arrangement(&g).map_err(invalid)?;
            let circuits = lift_os::three_circuits(&g).map_err(invalid)?;
            out.kv("phi3_falk", lift_os::phi3_falk(&a, &circuits));
        }
        Method::Kernel => {
            let a = lift_os::build_arrangement(&g).map_err(invalid)?;
            let circuits = lift_os::three_circuits(&g).map_err(invalid)?;
            out.kv("phi3_kernel", lift_os::phi3_kernel(&a, &circuits));
        }
        Method::All => {
            let (r, agree) = full_report(&g)?;
            out.kv("phi3_census", r.phi3_census);
            out.kv("phi3_falk", r.phi3_falk);
            out.kv("phi3_kernel", r.phi3_kernel);
            agreement_line(out, agree, r.phi3_census);
            if !agree {
                return Ok(EXIT_DISAGREE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_census(input: &InputArgs, out: &mut Out) -> Result<i32, Failure> {
    let g = load_valid(input)?;
    let invalid = |e: lift_os::LiftError| fail(EXIT_INVALID, e.to_string());
    let c = census::census(&g).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    let a = lift_os::build_arrangement(&g).map_err(invalid)?;
    let circuits = lift_os::three_circuits(&g).map_err(invalid)?;
    out.row(&census_row(&c));
    out.kv("w2", lift_os::w2(&a));
    out.kv("circuits", circuits.iter().join(" "));
    Ok(EXIT_OK)
}

fn cmd_diag(input: &InputArgs, out: &mut Out) -> Result<i32, Failure> {
    let g = load_valid(input)?;
    let invalid = |e: lift_os::LiftError| fail(EXIT_INVALID, e.to_string());
    let a = lift_os::build_arrangement(&g).map_err(invalid)?;
    let circuits = lift_os::three_circuits(&g).map_err(invalid)?;
    let f3 = lift_os::f3_generators(a.hyperplane_count(), &circuits).len();
    out.row(&[
        ("|F3|", f3.to_string()),
        ("dim_span_F3", lift_os::dim_span_f3(&a, &circuits).to_string()),
        ("dim_I2_3", lift_os::dim_i2_3(&a, &circuits).to_string()),
    ]);
    Ok(EXIT_OK)
}

fn cmd_verify(input: &InputArgs, out: &mut Out) -> Result<i32, Failure> {
    let g = load_valid(input)?;
    graph_header(out, &g);
    let (r, agree) = full_report(&g)?;
    out.row(&census_row(&r.census));
    out.kv("phi3_census", r.phi3_census);
    out.kv("phi3_falk", r.phi3_falk);
    out.kv("phi3_kernel", r.phi3_kernel);
    agreement_line(out, agree, r.phi3_census);

    let w2_expected = lift_os::w2_from_census(r.n_edges, &r.census);
    let dim_expected = lift_os::dim_i2_3_from_census(r.n_edges, &r.census);
    let w2_ok = r.w2_matches_census();
    let dim_ok = r.dim_i2_3_matches_census();
    out.row(&[
        ("w2", r.w2.to_string()),
        ("w2_lemma", w2_expected.to_string()),
        ("w2_lemma_holds", w2_ok.to_string()),
    ]);
    out.row(&[
        ("dim_I2_3", r.dim_i2_3.to_string()),
        ("dim_I2_3_lemma", dim_expected.to_string()),
        ("dim_I2_3_lemma_holds", dim_ok.to_string()),
    ]);
    let verified = agree && w2_ok && dim_ok;
    if out.machine {
        out.kv("verified", verified);
    } else {
        out.text(if verified { "VERIFIED" } else { "DISAGREE" });
    }
    Ok(if verified { EXIT_OK } else { EXIT_DISAGREE })
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| fail(EXIT_USAGE, format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| fail(EXIT_USAGE, format!("cannot write output: {e}"))),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let (code, out, path) = match command {
        Command::Gen { name, family, ell, out } => {
            let family = name.or(family).ok_or_else(|| fail(EXIT_USAGE, "missing family"))?;
            let spec = FamilySpec::new(family, ell).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
            let text = text_format::serialize(&families::generate(&spec));
            emit(&text, out.as_ref(), stdout)?;
            return Ok(EXIT_OK);
        }
        Command::Phi3 { input, method, output } => {
            let mut o = Out::new(output.machine);
            (cmd_phi3(&input, method, &mut o)?, o, output.out)
        }
        Command::Census { input, output } => {
            let mut o = Out::new(output.machine);
            (cmd_census(&input, &mut o)?, o, output.out)
        }
        Command::Diag { input, output } => {
            let mut o = Out::new(output.machine);
            (cmd_diag(&input, &mut o)?, o, output.out)
        }
        Command::Verify { input, output } => {
            let mut o = Out::new(output.machine);
            (cmd_verify(&input, &mut o)?, o, output.out)
        }
    };
    emit(&out.render(), path.as_ref(), stdout)?;
    Ok(code)
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
