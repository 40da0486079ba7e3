//! The `asai` command line: `factors`, `verify`, `tate` and `contour`.
//!
//! Exit codes: 0 when every record passes, 1 when any record fails, 2 on a
//! usage or configuration error.

pub mod config;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::archimedean::{
    arch_asai_l_n1, contour_reconstruct, parse_complex, tate_fe_residual, tate_zeta_numeric, ArchCharacter, ArchField,
    TestFn,
};
use crate::factors::{asai_L, asai_epsilon, asai_gamma, pole_report};
use config::{Config, DEFAULT_TRUNCATION};
use suites::{run_suite, Suite, SuiteOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Residual bound for the Tate functional equation and the contour demo.
pub const NUMERIC_TOLERANCE: f64 = 1e-6;
/// Bound for `|Z(s, χ, φ) − L(s, χ)|` with the matching test function.
pub const TATE_L_TOLERANCE: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "asai", version, about = "Exact unramified Asai factors and Zeta-integral checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print L, ε and γ for the representation in a config file.
    Factors {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run exact verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Check only the representation in this config file.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Truncation degree for lattice sums.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=6))]
        n_max: u64,
    },
    /// Tate's n = 1 Zeta integral over R and its functional equation.
    Tate {
        /// `trivial`, `sgn`, `R,<sign>[,<s0>]` or `C,<k>[,<s0>]`.
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// `gaussian` or `x_gaussian`; by default the one matching the sign.
        #[arg(long)]
        testfn: Option<String>,
    },
    /// Rebuild exp(s²) from its values on the lines Re = ±D.
    Contour {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: f64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Unramified,
    Fe,
    Identities,
    Twist,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Unramified => Suite::Unramified,
            SuiteArg::Fe => Suite::Fe,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Twist => Suite::Twist,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A failure that ends the command with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, UsageError>;

/// Parses `args` (including the program name) and runs the command, writing
/// records to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_PASS
            } else {
                let first = e.to_string().lines().next().unwrap_or("usage error").to_string();
                let _ = writeln!(err, "{first}");
                EXIT_USAGE
            };
        }
    };
    let result = match cli.command {
        Command::Factors { config } => factors(&config, out),
        Command::Verify { suite, config, seed, depth, n_max } => {
            verify(suite.into(), config.as_deref(), seed, depth, n_max as usize, out)
        }
        Command::Tate { character, s, testfn } => tate(&character, &s, testfn.as_deref(), out),
        Command::Contour { d, s } => contour(d, &s, out),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_config(path: &Path) -> std::result::Result<Config, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    Ok(Config::parse(&text)?)
}

fn fmt_complex(z: Complex64) -> String {
    // round first so tiny negatives do not print as -0.0000000000
    let tidy = |x: f64| (x * 1e10).round() / 1e10 + 0.0;
    format!("{:.10}{:+.10}i", tidy(z.re), tidy(z.im))
}

fn factors(path: &Path, out: &mut dyn Write) -> CmdResult {
    let config = load_config(path)?;
    let (datum, rep, tau) = (config.datum(), config.rep(), config.tau());
    let l = asai_L(&rep, &datum)?;
    writeln!(out, "L = {l}")?;
    writeln!(out, "L_dual = {}", asai_L(&rep.contragredient(), &datum)?)?;
    writeln!(out, "eps = {}", asai_epsilon(&rep, &datum, &tau)?)?;
    writeln!(out, "gamma = {}", asai_gamma(&rep, &datum, &tau)?)?;
    let poles: Vec<String> = pole_report(&l, datum.q()).into_iter().map(fmt_complex).collect();
    writeln!(out, "poles = [{}]", poles.join(", "))?;
    Ok(EXIT_PASS)
}

fn verify(
    suite: Suite,
    config: Option<&Path>,
    seed: Option<u64>,
    depth: Option<usize>,
    n_max: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let config = config.map(load_config).transpose()?;
    let seed = seed.or(config.as_ref().and_then(|c| c.seed)).unwrap_or(0);
    let depth = depth.or(config.as_ref().map(|c| c.truncation)).unwrap_or(DEFAULT_TRUNCATION);
    let opts = SuiteOptions { seed, depth, n_max, config };
    let reports = run_suite(suite, &opts)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    writeln!(out, "summary total={} passed={} failed={failed}", reports.len(), reports.len() - failed)?;
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}

fn tate(character: &str, s: &str, testfn: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let mut chi: ArchCharacter = character.parse()?;
    let s = parse_complex(s)?;
    if chi.field() == ArchField::C {
        writeln!(out, "asai_L = {}", arch_asai_l_n1(&chi)?)?;
        chi = chi.restrict_to_r();
    }
    let testfn = match testfn {
        Some(t) => t.parse()?,
        None => TestFn::for_sign(chi.sign_or_winding()),
    };
    let z = tate_zeta_numeric(&chi, testfn, s)?;
    let residual = tate_fe_residual(&chi, testfn, s)?;
    let mut pass = residual < NUMERIC_TOLERANCE;
    let mut line = format!(
        "case=tate chi={chi} testfn={} s={} Z={} fe_residual={residual:.2e}",
        testfn.name(),
        fmt_complex(s),
        fmt_complex(z)
    );
    if testfn == TestFn::for_sign(chi.sign_or_winding()) {
        let l_residual = (z - chi.l_factor()?.eval(s)?).norm();
        pass &= l_residual < TATE_L_TOLERANCE;
        line.push_str(&format!(" l_residual={l_residual:.2e}"));
    }
    writeln!(out, "{line} status={}", if pass { "pass" } else { "fail" })?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn contour(d: f64, s: &str, out: &mut dyn Write) -> CmdResult {
    let s = parse_complex(s)?;
    let f = |z: Complex64| (z * z).exp();
    let value = contour_reconstruct(d, &f, &f, s)?;
    let error = (value - f(s)).norm();
    let pass = error < NUMERIC_TOLERANCE;
    writeln!(
        out,
        "case=contour D={d} s={} value={} direct={} error={error:.2e} status={}",
        fmt_complex(s),
        fmt_complex(value),
        fmt_complex(f(s)),
        if pass { "pass" } else { "fail" }
    )?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}
