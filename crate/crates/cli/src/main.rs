mod render;

use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use enriques_core::verify::{self, Suite};
use enriques_core::{
    coefficients_from_phivector, enumerate_components, enumerate_components_by_phi, phi_vector_oracle,
    rewrite_to_fundamental, Eps, Error, FundamentalCoefficients, IsotropicSequence,
    NumClass, OracleOptions, PicClass, Presentation,
};

use render::{Format, PhiReport};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "enriques", version, about = "Classify components of moduli of polarized Enriques surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible components in a given genus.
    Components {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
        genus: i64,
        /// Keep only components with this first phi entry.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        phi: Option<i64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Report the phi-vector and fundamental presentation of a class.
    Phivector {
        /// Coordinates on E_1, ..., E_9, D, comma separated.
        #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
        class: Option<String>,
        /// Coefficients "a0;a1,...,a7;a9,a10".
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        /// Also run the exhaustive search and report agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run one of the built-in verification suites.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(i64).range(2..))]
        gmax: i64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    PaperTables,
    Lattice,
    Roundtrip,
    Dominating,
    Bounds,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::PaperTables => Suite::PaperTables,
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Roundtrip => Suite::Roundtrip,
            SuiteArg::Dominating => Suite::Dominating,
            SuiteArg::Bounds => Suite::Bounds,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GenusTooSmall(_) | Error::InvalidCap(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let tty = stdout.is_terminal();
    let color = tty && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
    let mut out = stdout.lock();
    let result = run(cli.command, tty, color, &mut out);
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, tty: bool, color: bool, out: &mut impl Write) -> Result<u8, Failure> {
    let pick = |f: Option<Format>| f.unwrap_or(if tty { Format::Markdown } else { Format::Json });
    match command {
        Command::Components { genus, phi, format } => {
            let comps = match phi {
                Some(k) => enumerate_components_by_phi(genus, k)?,
                None => enumerate_components(genus)?,
            };
            render::components(out, pick(format), &comps)?;
            Ok(0)
        }
        Command::Phivector { class, coeffs, eps, oracle, format } => {
            let eps = Eps::try_from(eps)?;
            let report = match (class, coeffs) {
                (Some(c), _) => from_class(&c, eps, oracle)?,
                (None, Some(c)) => from_coeffs(&c, eps, oracle)?,
                (None, None) => return Err(Failure::Usage("one of --class or --coeffs is required".into())),
            };
            render::phivector(out, pick(format), &report)?;
            Ok(match report.oracle_agrees {
                Some(false) => EXIT_CHECK_FAILED,
                _ => 0,
            })
        }
        Command::Verify { suite, gmax, format } => {
            let checks = verify::run(suite.into(), gmax)?;
            render::checks(out, pick(format), &checks, color)?;
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { EXIT_CHECK_FAILED })
        }
    }
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Failure::Usage(format!("{what}: cannot parse {t:?}: {e}"))))
        .collect()
}

fn from_class(text: &str, eps: Eps, oracle: bool) -> Result<PhiReport, Failure> {
    let v = parse_ints(text, "--class")?;
    let coords: [i64; 10] =
        v.try_into().map_err(|v: Vec<i64>| Failure::Usage(format!("--class needs 10 integers, got {}", v.len())))?;
    let num = NumClass::from_coords(coords);
    let class = PicClass::new(num, if num.is_two_divisible() { eps } else { Eps::ZERO });
    let found = phi_vector_oracle(&num, &OracleOptions { hint: None, max_sequences: 0 })?;
    let coefficients = coefficients_from_phivector(&found.phi).with_eps(class.eps)?;
    let mut report = PhiReport::new(class, Presentation { coefficients, sequence: found.witness })?;
    if oracle {
        // the closed form must reproduce the search result and rebuild the class
        report.oracle_agrees = Some(report.phi == found.phi && coefficients.class_on(&found.witness) == num);
    }
    Ok(report)
}

fn from_coeffs(text: &str, eps: Eps, oracle: bool) -> Result<PhiReport, Failure> {
    let groups: Vec<&str> = text.split(';').collect();
    let [g0, g1, g2] = groups[..] else {
        return Err(Failure::Usage("--coeffs must look like \"a0;a1,...,a7;a9,a10\"".into()));
    };
    let a0 = parse_ints(g0, "--coeffs a0")?;
    let a = parse_ints(g1, "--coeffs a1..a7")?;
    let tail = parse_ints(g2, "--coeffs a9,a10")?;
    let (&[a0], Ok(a), &[a9, a10]) = (&a0[..], <[i64; 7]>::try_from(a), &tail[..]) else {
        return Err(Failure::Usage("--coeffs needs 1, 7 and 2 integers".into()));
    };
    let mut presentation = match FundamentalCoefficients::new(a0, a, a9, a10, Eps::ZERO) {
        Ok(coefficients) => Presentation { coefficients, sequence: IsotropicSequence::standard() },
        Err(_) => {
            // not in fundamental shape: read it as a class on the standard sequence and rewrite
            let mut all = [0; 10];
            all[..7].copy_from_slice(&a);
            all[8] = a9;
            all[9] = a10;
            rewrite_to_fundamental(all, a0, Eps::ZERO)?
        }
    };
    if presentation.coefficients.all_even() {
        presentation.coefficients = presentation.coefficients.with_eps(eps)?;
    }
    let class = presentation.coefficients.pic_class();
    let mut report = PhiReport::new(class, presentation)?;
    if oracle {
        let found = phi_vector_oracle(&class.num, &OracleOptions { hint: None, max_sequences: 0 })?;
        report.oracle_agrees = Some(found.phi == report.phi);
    }
    Ok(report)
}
