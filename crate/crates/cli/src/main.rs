//! `natbound`: command-line access to every natbound-core operation.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::Rational64;

use output::{invalid, CliResult, Format};

#[derive(Parser, Debug)]
#[command(
    name = "natbound",
    version,
    about = "Euler products, zeta factorizations and natural boundaries"
)]
pub struct Cli {
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; each command has a default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Vars {
    /// `y` present: bivariate; `X1..` present: multivariate; otherwise univariate.
    Auto,
    Uni,
    Biv,
    Multi,
}

/// A polynomial argument and how to read it.
#[derive(Args, Debug, Clone)]
pub struct PolyArg {
    /// Expression, e.g. "1 - X - X^2", "1 + x*y + x^5*y^2", "1 + X1*X2*X3".
    #[arg(long)]
    poly: String,
    #[arg(long, value_enum, default_value_t = Vars::Auto)]
    vars: Vars,
    /// Number of base variables for multivariate input (`X1..Xn`, then `X(n+1)`).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse, log-expand or specialise a polynomial.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Cyclotomicity verdict (univariate roots or multivariate elimination).
    Cyclotomic {
        #[command(flatten)]
        poly: PolyArg,
        /// Elimination depth for multivariate input.
        #[arg(long)]
        depth: Option<i64>,
    },
    /// Continuation verdict for `∏_p h(p^-s)`.
    Estermann {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Zeta factorization: bivariate to a y-order, or multivariate to depth r.
    Factorize {
        #[command(flatten)]
        poly: PolyArg,
        /// y-order for bivariate input.
        #[arg(long, default_value_t = 8)]
        order: i64,
        /// Depth parameter for multivariate input.
        #[arg(long, default_value_t = 2)]
        r: u32,
        /// Weight cutoff for multivariate input (default from r).
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Five-case boundary classification.
    Classify {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 12)]
        depth: i64,
        #[arg(long = "prime-bound", default_value = "10000", value_parser = parse_count)]
        prime_bound: u64,
    },
    /// Zeta-zero tables and local zeros of a factor.
    #[command(subcommand)]
    Zeros(ZerosCmd),
    /// Nearest local zero to a boundary point, per prime.
    Cluster {
        #[command(flatten)]
        poly: PolyArg,
        /// Real part of the target (default: the boundary abscissa).
        #[arg(long)]
        re: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        tau: f64,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', value_parser = parse_count)]
        primes: Vec<u64>,
        /// All primes in [prime-bound/10, prime-bound] when --primes is absent.
        #[arg(long = "prime-bound", value_parser = parse_count)]
        prime_bound: Option<u64>,
    },
    /// Ext sets and the domain V(h; delta), with optional membership test.
    Domain {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value = "0", value_parser = parse_rational)]
        delta: Rational64,
        /// Comma-separated complex point, e.g. "2,0.5+1i".
        #[arg(long, value_delimiter = ',', value_parser = parse_complex, allow_negative_numbers = true)]
        s: Vec<Complex64>,
        /// Use every support point instead of the Ext reduction.
        #[arg(long)]
        full: bool,
    },
    /// The toric example h_{A_n}.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Weighted Goldbach counts and explicit-formula residuals.
    #[command(subcommand)]
    Goldbach(GoldbachCmd),
    /// GSp6 coefficients, smoothed sums and term structure.
    #[command(subcommand)]
    Gsp6(Gsp6Cmd),
    /// Riemann zeta and Euler products.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Smallest gap between sums of two zero ordinates.
    Independence {
        #[arg(long = "K", default_value_t = 30)]
        k: usize,
        #[arg(long, default_value_t = 1.5)]
        alpha: f64,
        #[arg(long, env = "BF_ZEROS")]
        zeros: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// Canonical JSON form.
    Parse {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Formal logarithm of a bivariate factor to a y-order.
    Log {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        order: i64,
    },
    /// Substitute x = p, leaving a polynomial in y.
    Substitute {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, value_parser = parse_count)]
        p: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum ZerosCmd {
    /// Load and validate a zeta-zero table.
    Load {
        #[arg(long, env = "BF_ZEROS")]
        zeros: Option<PathBuf>,
    },
    /// Local zeros of a bivariate factor at one prime.
    Local {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, value_parser = parse_count)]
        p: u64,
        #[arg(long = "re-min", allow_negative_numbers = true)]
        re_min: Option<f64>,
        #[arg(long = "re-max", allow_negative_numbers = true)]
        re_max: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ToricCmd {
    /// Brute-force counts of bounded-height points, CSV `t,count`.
    Count {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long = "t-max", value_parser = parse_count)]
        t_max: u64,
    },
    /// Local series of h_{A_n} with every exponent at most `cutoff`.
    Series {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        cutoff: i64,
    },
    /// The polynomial degree C(2n-1, n) - n - 1.
    Degree {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Naive,
    Fast,
}

#[derive(Subcommand, Debug)]
pub enum GoldbachCmd {
    /// Residual table `x,S,S_minus_main,...` for each x.
    Sum {
        /// Comma-separated sample points, each at most N.
        #[arg(long, value_delimiter = ',', value_parser = parse_count, required = true)]
        x: Vec<u64>,
        #[arg(long = "N", value_parser = parse_count)]
        n: u64,
        #[arg(long, env = "BF_ZEROS")]
        zeros: Option<PathBuf>,
        #[arg(long = "K", default_value_t = 100)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
    },
    /// G_r(n) for n <= N.
    Series {
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long = "N", value_parser = parse_count)]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
    },
    /// Oscillating term H_r(x) over the first K zeros.
    Hr {
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long = "K", default_value_t = 100)]
        k: usize,
        #[arg(long, env = "BF_ZEROS")]
        zeros: Option<PathBuf>,
    },
    /// Φ_2(s) = Σ G_2(n) n^-s with tail bound.
    Phi2 {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        s: Complex64,
        #[arg(long = "N", value_parser = parse_count)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum Gsp6Cmd {
    /// Coefficients a_n for n <= N, CSV `n,a_n` over cubes.
    Coeffs {
        #[arg(long = "N", value_parser = parse_count)]
        n: u64,
    },
    /// A(x) = Σ a_n e^(-n/x).
    Smoothed {
        #[arg(long)]
        x: f64,
        /// Coefficient bound (default 30 x).
        #[arg(long = "N", value_parser = parse_count)]
        n: Option<u64>,
    },
    /// Pole exponents and zero families of the smoothed sum.
    Terms,
}

#[derive(Subcommand, Debug)]
pub enum ZetaCmd {
    /// ζ(s).
    Eval {
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        s: Complex64,
    },
    /// ∏_{p <= P} W(p, p^-s) with tail bound.
    Euler {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, value_parser = parse_complex, allow_negative_numbers = true)]
        s: Complex64,
        #[arg(long = "prime-bound", default_value = "10000", value_parser = parse_count)]
        prime_bound: u64,
    },
}

/// Non-negative integer, also accepting exact scientific notation (`1e6`).
fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= 9.007_199_254_740_992e15 => Ok(x as u64),
        _ => Err(format!("`{s}` is not a non-negative integer")),
    }
}

fn parse_rational(s: &str) -> Result<Rational64, String> {
    s.trim()
        .parse::<Rational64>()
        .map_err(|_| format!("`{s}` is not a rational p/q"))
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    t.parse::<Complex64>()
        .map_err(|_| format!("`{s}` is not a complex number like 0.5+14.1i"))
}

fn init_threads(threads: Option<usize>) -> CliResult<()> {
    if let Some(t) = threads {
        if t == 0 {
            return Err(invalid("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| invalid(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    init_threads(cli.threads)?;
    let artifact = commands::dispatch(cli.command)?;
    let text = artifact.render(cli.format)?;
    output::write_artifact(&text, cli.out.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                output::EXIT_VALIDATION
            } else {
                0
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("natbound: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn value_parsers() {
        assert_eq!(parse_count("1e6"), Ok(1_000_000));
        assert_eq!(parse_count("200_000"), Ok(200_000));
        assert!(parse_count("1.5").is_err());
        assert!(parse_count("-3").is_err());
        assert_eq!(parse_rational("1/2"), Ok(Rational64::new(1, 2)));
        assert_eq!(parse_complex("0.5 + 14.1i"), Ok(Complex64::new(0.5, 14.1)));
        assert_eq!(parse_complex("-2"), Ok(Complex64::new(-2.0, 0.0)));
    }
}
