//! `cobg`: build, apply and compress exact change-of-basis matrices.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cobg_core::{
    apply, build_cob, compress, expand, included_count, inverse, verify_groupoid, BasisId,
    CompressionSpec, CoordVec, Family, Rational, Subspace,
};

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "cobg",
    version,
    about = "Exact change-of-basis matrices between polynomial bases"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest polynomial degree any command may request
    #[arg(
        long,
        global = true,
        env = "COBG_MAX_DEGREE",
        default_value_t = 512,
        hide = true
    )]
    max_degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Parity {
    All,
    Even,
    Odd,
}

impl From<Parity> for Subspace {
    fn from(p: Parity) -> Self {
        match p {
            Parity::All => Subspace::All,
            Parity::Even => Subspace::Even,
            Parity::Odd => Subspace::Odd,
        }
    }
}

#[derive(Args, Debug)]
struct Pair {
    /// Domain basis
    #[arg(long)]
    from: Family,
    /// Range basis
    #[arg(long)]
    to: Family,
    /// Restrict both bases to even or odd degrees
    #[arg(long, value_enum, default_value_t = Parity::All)]
    parity: Parity,
}

#[derive(Args, Debug, Default)]
struct Cases {
    /// Exclusion case to apply (repeatable): 1 leading, 2 trailing, 3 parity-sparse, 4 subspace
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=4))]
    cases: Vec<u8>,
    /// Rows and columns dropped from the top (case 1)
    #[arg(long, visible_alias = "min-degree")]
    k1: Option<usize>,
    /// Rows and columns dropped from the bottom (case 2)
    #[arg(long)]
    k2: Option<usize>,
}

impl Cases {
    fn is_empty(&self) -> bool {
        self.cases.is_empty() && self.k1.is_none() && self.k2.is_none()
    }

    fn spec(&self, m: usize) -> Result<CompressionSpec, Usage> {
        let has = |c| self.cases.contains(&c);
        let k1 = (has(1) || self.k1.is_some()).then(|| self.k1.unwrap_or(1));
        let k2 = (has(2) || self.k2.is_some()).then(|| self.k2.unwrap_or(1));
        Ok(CompressionSpec::new(m, k1, k2, has(3), has(4))?)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the change-of-basis matrix between two bases
    Matrix {
        #[command(flatten)]
        pair: Pair,
        /// Highest polynomial degree
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        cases: Cases,
        /// Print the inverse matrix instead
        #[arg(long)]
        inverse: bool,
    },
    /// Transform a coordinate vector from one basis to another
    Apply {
        #[command(flatten)]
        pair: Pair,
        /// Comma-separated exact coordinates, lowest degree first
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        /// Highest polynomial degree; defaults to what the coordinates imply
        #[arg(long)]
        degree: Option<usize>,
        /// Apply the inverse matrix, mapping `to` coordinates back to `from`
        #[arg(long)]
        inverse: bool,
    },
    /// Expand one basis polynomial in another basis
    Expand {
        #[arg(long)]
        from: Family,
        #[arg(long)]
        to: Family,
        /// Degree of the polynomial to expand
        #[arg(long)]
        degree: usize,
    },
    /// Check the groupoid axioms over a set of bases
    Verify {
        /// Comma-separated basis names
        #[arg(long, value_delimiter = ',', required = true)]
        bases: Vec<Family>,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Parity::All)]
        parity: Parity,
    },
    /// Count stored entries of a compressed m x m matrix
    Count {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        cases: Cases,
        /// Also build and compress a matrix and report its stored length
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "hermite_physicist")]
        from: Family,
        #[arg(long, default_value = "chebyshev_t")]
        to: Family,
    },
}

struct Usage(String);

impl From<cobg_core::Error> for Usage {
    fn from(e: cobg_core::Error) -> Self {
        Usage(e.to_string())
    }
}

fn cap(degree: usize, max: usize) -> Result<(), Usage> {
    if degree > max {
        return Err(Usage(format!(
            "degree {degree} exceeds the limit of {max} (set COBG_MAX_DEGREE to raise it)"
        )));
    }
    Ok(())
}

fn bases(pair: &Pair) -> Result<(BasisId, BasisId), Usage> {
    let sub = Subspace::from(pair.parity);
    Ok((BasisId::new(pair.from, sub)?, BasisId::new(pair.to, sub)?))
}

fn run(cli: &Cli) -> Result<(String, bool), Usage> {
    let fmt = cli.format;
    match &cli.command {
        Command::Matrix {
            pair,
            degree,
            cases,
            inverse: inv,
        } => {
            cap(*degree, cli.max_degree)?;
            let (from, to) = bases(pair)?;
            let dim = from.subspace().dim_for_degree(*degree);
            let mut m = build_cob(from, to, dim)?;
            if *inv {
                m = inverse(&m)?;
            }
            if cases.is_empty() {
                Ok((render::matrix(&m, fmt), true))
            } else {
                let c = compress(&m, &cases.spec(dim)?)?;
                Ok((render::compressed(&c, fmt), true))
            }
        }
        Command::Apply {
            pair,
            coords,
            degree,
            inverse: inv,
        } => {
            let (from, to) = bases(pair)?;
            let values = coords
                .split(',')
                .map(|s| s.trim().parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()?;
            if values.is_empty() {
                return Err(Usage("no coordinates given".into()));
            }
            let dim = match degree {
                Some(d) => {
                    cap(*d, cli.max_degree)?;
                    from.subspace().dim_for_degree(*d)
                }
                None => {
                    cap(from.degree_at(values.len() - 1), cli.max_degree)?;
                    values.len()
                }
            };
            let (m, source) = if *inv {
                (inverse(&build_cob(from, to, dim)?)?, to)
            } else {
                (build_cob(from, to, dim)?, from)
            };
            let out = apply(&m, &CoordVec::new(source, values))?;
            Ok((render::coords(&out, fmt), true))
        }
        Command::Expand { from, to, degree } => {
            cap(*degree, cli.max_degree)?;
            let terms = expand(*from, *degree, *to)?;
            Ok((render::expansion(*from, *to, *degree, &terms, fmt), true))
        }
        Command::Verify {
            bases,
            degree,
            parity,
        } => {
            cap(*degree, cli.max_degree)?;
            let sub = Subspace::from(*parity);
            let ids = bases
                .iter()
                .map(|&f| BasisId::new(f, sub))
                .collect::<Result<Vec<_>, _>>()?;
            let report = verify_groupoid(&ids, sub.dim_for_degree(*degree))?;
            let ok = report.all_passed();
            Ok((render::report(&report, fmt), ok))
        }
        Command::Count {
            m,
            cases,
            check,
            from,
            to,
        } => {
            if *m == 0 {
                return Err(Usage("m must be at least 1".into()));
            }
            cap(m - 1, cli.max_degree)?;
            let spec = cases.spec(*m)?;
            let count = included_count(&spec);
            let stored = if *check {
                let mat = build_cob(BasisId::full(*from), BasisId::full(*to), *m)?;
                Some(compress(&mat, &spec)?.stored_len())
            } else {
                None
            };
            let ok = stored.is_none_or(|s| s == count);
            Ok((render::count(&spec, count, stored, fmt), ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            let text = if text.ends_with('\n') {
                text
            } else {
                text + "\n"
            };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
