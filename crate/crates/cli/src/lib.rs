//! The `lbp` command-line tool as a library: [`run`] takes the argument
//! vector and returns the exit code with everything that would be printed.
//!
//! Exit codes: 0 success, 1 invalid input, 2 computation error, 3 network
//! error (only `oeis-match --live`).

pub mod format;
pub mod parser;

use std::ffi::OsString;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lbp_core::families::{
    derivative_triangle, det_representations, FamilyError, FamilyKind, FamilyParams,
    GenFamilyParams, Variant,
};
use lbp_core::moments::{
    hankel_transform, jfraction_from_moments, jfraction_series, moments, tfraction_series,
    JFraction, MomentSeq, MomentsError, TFraction,
};
use lbp_core::{parse_rat, Rat, RiordanArray, RiordanError, SeriesError, Triangle};
use lbp_oeis::{Cache, HttpTransport, Matcher, Mode, OeisError};
use num_bigint::BigInt;

pub use format::{Format, Output};
pub use parser::{parse_ratfunc, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_NETWORK: i32 = 3;

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Network(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Compute(_) => EXIT_COMPUTE,
            CliError::Network(_) => EXIT_NETWORK,
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError::Invalid(message.into())
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<RiordanError> for CliError {
    fn from(e: RiordanError) -> Self {
        match e {
            RiordanError::GConstant(_)
            | RiordanError::FConstant(_)
            | RiordanError::FLinear(_)
            | RiordanError::ZeroOrder => invalid(e.to_string()),
            RiordanError::Series(e) => e.into(),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::ZeroRows | FamilyError::DegenerateOrthogonal => invalid(e.to_string()),
            FamilyError::Riordan(e) => e.into(),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<MomentsError> for CliError {
    fn from(e: MomentsError) -> Self {
        match e {
            MomentsError::VanishingHankelMinor { .. } => CliError::Compute(e.to_string()),
            MomentsError::Family(e) => e.into(),
            MomentsError::Series(e) => e.into(),
            other => invalid(other.to_string()),
        }
    }
}

impl From<OeisError> for CliError {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::Network(_) | OeisError::Response(_) => CliError::Network(e.to_string()),
            OeisError::Cache { .. } => CliError::Compute(e.to_string()),
            other => invalid(other.to_string()),
        }
    }
}

impl From<format::FormatError> for CliError {
    fn from(e: format::FormatError) -> Self {
        invalid(e.to_string())
    }
}

fn scalar(text: &str) -> Result<Rat, String> {
    parse_rat(text).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "lbp", version, about = "Exact Riordan arrays, Laurent biorthogonal polynomials and their moments")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    /// Laurent biorthogonal polynomials, parameters α and β.
    Lbp,
    /// Associated orthogonal polynomials, parameters α and β.
    Orth,
    /// Generalized family, parameters α, β and γ.
    Gen,
    /// Generalized associated orthogonal family, parameters α, β and γ.
    GenOrth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantName {
    /// P_1 = x - α.
    Prop1,
    /// P_1 = x - α - β.
    Prop2,
}

#[derive(Args, Debug, Clone)]
struct FamilyOpts {
    #[arg(long, value_enum, default_value_t = FamilyName::Lbp)]
    family: FamilyName,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    alpha: Option<Rat>,
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    beta: Option<Rat>,
    /// Only for the generalized families.
    #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
    gamma: Option<Rat>,
    /// Only for lbp and orth; defaults to prop2.
    #[arg(long, value_enum)]
    variant: Option<VariantName>,
}

impl FamilyOpts {
    fn given(&self) -> bool {
        self.alpha.is_some() || self.beta.is_some() || self.gamma.is_some()
    }

    fn resolve(&self) -> Result<FamilyKind, CliError> {
        let alpha = self.alpha.clone().ok_or_else(|| invalid("--alpha is required"))?;
        let beta = self.beta.clone().ok_or_else(|| invalid("--beta is required"))?;
        match self.family {
            FamilyName::Lbp | FamilyName::Orth => {
                if self.gamma.is_some() {
                    return Err(invalid("--gamma applies only to gen and gen-orth"));
                }
                let variant = match self.variant {
                    Some(VariantName::Prop1) => Variant::Plain,
                    Some(VariantName::Prop2) | None => Variant::Bell,
                };
                let p = FamilyParams::new(alpha, beta).with_variant(variant);
                Ok(if self.family == FamilyName::Lbp {
                    FamilyKind::Lbp(p)
                } else {
                    FamilyKind::Orthogonal(p)
                })
            }
            FamilyName::Gen | FamilyName::GenOrth => {
                if self.variant.is_some() {
                    return Err(invalid("--variant applies only to lbp and orth"));
                }
                let gamma = self.gamma.clone().ok_or_else(|| invalid("--gamma is required"))?;
                let p = GenFamilyParams::new(alpha, beta, gamma);
                Ok(if self.family == FamilyName::Gen {
                    FamilyKind::Generalized(p)
                } else {
                    FamilyKind::GeneralizedOrthogonal(p)
                })
            }
        }
    }

    /// Parameters of the plain lbp family, for verbs defined only there.
    fn lbp_params(&self, verb: &str) -> Result<FamilyParams, CliError> {
        match self.resolve()? {
            FamilyKind::Lbp(p) => Ok(p),
            _ => Err(invalid(format!("{verb} is defined for --family lbp only"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FractionType {
    /// Jacobi type, coefficients b and λ.
    J,
    /// Thron type, coefficients c and d.
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Triangle,
    /// A-sequence.
    A,
    /// Z-sequence.
    Z,
    Production,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficient triangle of a polynomial family.
    Triangle {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        /// Print the inverse array instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Inverse of a family's coefficient array.
    Inverse {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Moments: the first column of the inverse array.
    Moments {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Hankel transform of given terms or of a family's moments.
    Hankel {
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true)]
        terms: Vec<Rat>,
        #[command(flatten)]
        fam: FamilyOpts,
        /// Number of determinants; defaults to as many as the terms allow, or 8.
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Expand a continued fraction into a power series.
    Cf {
        #[arg(long = "type", value_enum, default_value_t = FractionType::J)]
        kind: FractionType,
        /// Constant-coefficient fraction of the lbp family.
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        beta: Option<Rat>,
        /// Extra weight on b_0 of the J-fraction.
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        y: Option<Rat>,
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true)]
        b: Vec<Rat>,
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true)]
        lam: Vec<Rat>,
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true)]
        c: Vec<Rat>,
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true)]
        d: Vec<Rat>,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Recover J-fraction coefficients from a moment sequence.
    JfracFromMoments {
        #[arg(long, value_delimiter = ',', value_parser = scalar, allow_hyphen_values = true, required = true)]
        terms: Vec<Rat>,
    },
    /// A raw Riordan array from generating functions.
    Riordan {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = Show::Triangle)]
        show: Show,
    },
    /// Coefficients of the derivatives of an lbp family.
    Derivative {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Characteristic polynomials of the production matrix of the inverse array.
    Detrep {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Row sums of a family's triangle or its inverse.
    Rowsums {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, default_value_t = 6)]
        rows: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Look up integer terms among known OEIS sequences.
    OeisMatch {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        terms: Vec<BigInt>,
        /// Query oeis.org as well as the offline data.
        #[arg(long)]
        live: bool,
        /// Network timeout in seconds.
        #[arg(long, default_value_t = 20)]
        timeout: u64,
    },
}

fn need_rows(rows: usize) -> Result<usize, CliError> {
    if rows == 0 {
        return Err(invalid("--rows must be at least 1"));
    }
    Ok(rows)
}

fn family_table(fam: &FamilyOpts, rows: usize, inverse: bool) -> Result<Triangle, CliError> {
    let kind = fam.resolve()?;
    let rows = need_rows(rows)?;
    Ok(if inverse {
        kind.array(rows)?.inv()?.triangle()?
    } else {
        kind.family(rows)?.into_triangle()
    })
}

fn table(t: Triangle) -> Output {
    Output::Table(t.into_rows())
}

fn hankel(terms: Vec<Rat>, fam: &FamilyOpts, n: Option<usize>) -> Result<Output, CliError> {
    let seq = match (terms.is_empty(), fam.given()) {
        (false, true) => return Err(invalid("give either --terms or family parameters, not both")),
        (false, false) => MomentSeq::new(terms),
        (true, _) => {
            let kind = fam.resolve()?;
            moments(&kind, 2 * n.unwrap_or(8) - 1)?
        }
    };
    let n = n.unwrap_or(seq.len().div_ceil(2));
    if n == 0 {
        return Err(invalid("-n must be at least 1"));
    }
    Ok(Output::Sequence(hankel_transform(&seq, n)?.into_terms()))
}

#[allow(clippy::too_many_arguments)]
fn continued_fraction(
    kind: FractionType,
    alpha: Option<Rat>,
    beta: Option<Rat>,
    y: Option<Rat>,
    lists: [Vec<Rat>; 4],
    n: usize,
) -> Result<Output, CliError> {
    let [b, lam, c, d] = lists;
    let explicit = |first: &Vec<Rat>, second: &Vec<Rat>| !first.is_empty() || !second.is_empty();
    let constants = || -> Result<(Rat, Rat), CliError> {
        match (alpha.clone(), beta.clone()) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(invalid("--alpha and --beta are required without explicit coefficients")),
        }
    };
    let series = match kind {
        FractionType::J => {
            if explicit(&c, &d) {
                return Err(invalid("--c and --d belong to --type t"));
            }
            let fraction = if explicit(&b, &lam) {
                if alpha.is_some() || beta.is_some() || y.is_some() {
                    return Err(invalid("give either --b/--lam or --alpha/--beta"));
                }
                JFraction::new(b, lam)?
            } else {
                let (a, bt) = constants()?;
                let depth = n.div_ceil(2).max(1);
                match y {
                    Some(y) => JFraction::bivariate(&a, &bt, &y, depth),
                    None => JFraction::lbp(&a, &bt, depth),
                }
            };
            jfraction_series(&fraction, n)?
        }
        FractionType::T => {
            if explicit(&b, &lam) || y.is_some() {
                return Err(invalid("--b, --lam and --y belong to --type j"));
            }
            let fraction = if explicit(&c, &d) {
                if alpha.is_some() || beta.is_some() {
                    return Err(invalid("give either --c/--d or --alpha/--beta"));
                }
                TFraction::new(c, d)?
            } else {
                let (a, bt) = constants()?;
                TFraction::constant(&a, &bt, n)
            };
            tfraction_series(&fraction, n)?
        }
    };
    Ok(Output::Sequence(series.into_coeffs().into_iter().take(n).collect()))
}

fn riordan(g: &str, f: &str, rows: usize, inverse: bool, show: Show) -> Result<Output, CliError> {
    let literal = |flag: &str, text: &str| {
        parse_ratfunc(text).map_err(|e| invalid(format!("--{flag} {text:?}: {e}")))
    };
    let (g, f) = (literal("g", g)?, literal("f", f)?);
    let rows = need_rows(rows)?;
    // One extra order so that `rows` A- and Z-terms are available.
    let mut array = RiordanArray::make(g, f, rows + 1)?;
    if inverse {
        array = array.inv()?;
    }
    Ok(match show {
        Show::Triangle => table(array.with_order(rows)?.triangle()?),
        Show::A => Output::Sequence(array.a_sequence(rows)?),
        Show::Z => Output::Sequence(array.z_sequence(rows)?),
        Show::Production => Output::Table(array.production_matrix(rows)?.entries().to_vec()),
    })
}

fn oeis_match(
    terms: &[BigInt],
    live: bool,
    timeout: u64,
    matcher: &dyn Fn(Duration) -> Matcher,
) -> Result<Output, CliError> {
    let mode = if live { Mode::Live } else { Mode::Offline };
    let found = matcher(Duration::from_secs(timeout)).lookup(terms, mode)?;
    Ok(Output::Matches(found))
}

fn dispatch(command: Command, matcher: &dyn Fn(Duration) -> Matcher) -> Result<Output, CliError> {
    match command {
        Command::Triangle { fam, rows, inverse } => Ok(table(family_table(&fam, rows, inverse)?)),
        Command::Inverse { fam, rows } => Ok(table(family_table(&fam, rows, true)?)),
        Command::Moments { fam, n } => {
            let kind = fam.resolve()?;
            if n == 0 {
                return Err(invalid("-n must be at least 1"));
            }
            Ok(Output::Sequence(moments(&kind, n)?.into_terms()))
        }
        Command::Hankel { terms, fam, n } => hankel(terms, &fam, n),
        Command::Cf { kind, alpha, beta, y, b, lam, c, d, n } => {
            if n == 0 {
                return Err(invalid("-n must be at least 1"));
            }
            continued_fraction(kind, alpha, beta, y, [b, lam, c, d], n)
        }
        Command::JfracFromMoments { terms } => {
            let j = jfraction_from_moments(&MomentSeq::new(terms))?;
            Ok(Output::Fraction {
                b: j.b().to_vec(),
                lam: j.lam().to_vec(),
            })
        }
        Command::Riordan { g, f, rows, inverse, show } => riordan(&g, &f, rows, inverse, show),
        Command::Derivative { fam, rows } => {
            let p = fam.lbp_params("derivative")?;
            Ok(table(derivative_triangle(&p, need_rows(rows)?)?))
        }
        Command::Detrep { fam, rows } => {
            let p = fam.lbp_params("detrep")?;
            Ok(Output::Table(det_representations(&p, need_rows(rows)? - 1)?))
        }
        Command::Rowsums { fam, rows, inverse } => {
            Ok(Output::Sequence(family_table(&fam, rows, inverse)?.row_sums()))
        }
        Command::OeisMatch { terms, live, timeout } => oeis_match(&terms, live, timeout, matcher),
    }
}

fn default_matcher(timeout: Duration) -> Matcher {
    Matcher::new(Cache::from_env(), Box::new(HttpTransport::with_timeout(timeout)))
}

/// Runs the tool on `argv` (program name first).
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &default_matcher)
}

/// Like [`run`], with the OEIS matcher built by `matcher` from the timeout.
pub fn run_with<I, T>(argv: I, matcher: &dyn Fn(Duration) -> Matcher) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunOutcome { code: EXIT_INVALID, stdout: String::new(), stderr: text }
            } else {
                RunOutcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let rendered = dispatch(cli.command, matcher)
        .and_then(|out| out.render(cli.format).map_err(CliError::from));
    match rendered {
        Ok(stdout) => RunOutcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(e) => RunOutcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
