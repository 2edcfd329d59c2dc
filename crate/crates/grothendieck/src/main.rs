use clap::{Args, Parser, Subcommand, ValueEnum};
use grothendieck::error::Error;
use grothendieck::formulas::{
    bialternant, hm_determinant, himn_determinant, IndexVector, Partition,
};
use grothendieck::ring::Polynomial;
use grothendieck::series::g_coeff;
use grothendieck::verify::{partitions_up_to, verify_proof_suite, verify_theorem, VerificationReport};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "grothendieck",
    about = "Exact factorial Grothendieck polynomials and identity verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute G_lambda(x|b) by one of the three formulas.
    Compute(ComputeArgs),
    /// Compute a single generating-series coefficient G_m^(k)(x|b).
    Coeff(CoeffArgs),
    /// Verify identities; exits 1 if any check fails.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bialternant,
    Hm,
    Himn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Number of x-variables.
    #[arg(long)]
    d: usize,
    /// Partition as a comma list, e.g. `2,1`.
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "a")]
    lambda: Option<Vec<usize>>,
    /// General index vector (unlocks non-partition input), e.g. `-1,2`.
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
    a: Option<Vec<i64>>,
    #[arg(long, value_enum)]
    method: Method,
    /// Beta-truncation order N; defaults to the safe bound for the input.
    #[arg(long)]
    beta_trunc: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CoeffArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long)]
    beta_trunc: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check bialternant = HM determinant = HIMN determinant, with
    /// stabilization at N+1.
    Theorem(TheoremArgs),
    /// Check the series and coefficient identities behind the proofs.
    Proofs(ProofArgs),
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with_all = ["a", "all_up_to"])]
    lambda: Option<Vec<usize>>,
    /// General index vector (unlocks non-partition input).
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true, conflicts_with = "all_up_to")]
    a: Option<Vec<i64>>,
    /// Sweep every partition with largest part at most this size.
    #[arg(long)]
    all_up_to: Option<usize>,
    #[arg(long)]
    beta_trunc: Option<usize>,
    /// Write the JSON report here in addition to the text output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ProofArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    k_max: usize,
    #[arg(long)]
    beta_trunc: usize,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Compute(args) => {
            let a = index_vector_from(args.d, args.lambda.as_deref(), args.a.as_deref())?;
            let ctx = a.context(args.beta_trunc)?;
            let poly = match args.method {
                Method::Bialternant => bialternant(ctx, &a)?,
                Method::Hm => hm_determinant(ctx, &a)?,
                Method::Himn => himn_determinant(ctx, &a)?,
            };
            print_poly(&poly, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coeff(args) => {
            let n = args
                .beta_trunc
                .unwrap_or_else(|| args.m.max(0) as usize + args.d * (args.d - 1).max(0));
            let ctx = grothendieck::ring::RingContext::new(args.d, args.k, n)?;
            let poly = g_coeff(ctx, args.k, args.m)?;
            print_poly(&poly, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { what } => {
            let report = match what {
                VerifyCmd::Theorem(args) => {
                    if let Some(max_part) = args.all_up_to {
                        let mut merged: Option<VerificationReport> = None;
                        for lambda in partitions_up_to(args.d, max_part) {
                            let a = lambda.to_index_vector(args.d)?;
                            let r = verify_theorem(args.d, a.parts(), args.beta_trunc)?;
                            match merged.as_mut() {
                                None => merged = Some(r),
                                Some(m) => m.checks.extend(r.checks),
                            }
                        }
                        merged.expect("sweep contains the empty partition")
                    } else {
                        let a =
                            index_vector_from(args.d, args.lambda.as_deref(), args.a.as_deref())?;
                        verify_theorem(args.d, a.parts(), args.beta_trunc)?
                    }
                    .write_out(args.out.as_deref())?
                }
                VerifyCmd::Proofs(args) => verify_proof_suite(args.d, args.k_max, args.beta_trunc)?
                    .write_out(args.out.as_deref())?,
            };
            println!("{report}");
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

trait WriteOut: Sized {
    fn write_out(self, path: Option<&std::path::Path>) -> Result<Self, Error>;
}

impl WriteOut for VerificationReport {
    fn write_out(self, path: Option<&std::path::Path>) -> Result<Self, Error> {
        if let Some(path) = path {
            std::fs::write(path, self.to_json_string())
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(self)
    }
}

fn index_vector_from(
    d: usize,
    lambda: Option<&[usize]>,
    a: Option<&[i64]>,
) -> Result<IndexVector, Error> {
    match (lambda, a) {
        (Some(parts), None) => Partition::new(parts.to_vec())?.to_index_vector(d),
        (None, Some(a)) => {
            let v = IndexVector::new(a.to_vec())?;
            if v.d() != d {
                return Err(Error::BadIndexVector(format!(
                    "index vector has length {}, expected d = {d}",
                    v.d()
                )));
            }
            Ok(v)
        }
        _ => Err(Error::BadIndexVector(
            "exactly one of --lambda and --a is required".into(),
        )),
    }
}

fn print_poly(poly: &Polynomial, format: Format) {
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => println!("{}", poly.to_json_string()),
    }
}
