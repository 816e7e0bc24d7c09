//! `rankmoments`: rank distributions, moments, marked Durfee symbols,
//! generating functions and the identity verification suite.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error,
//! 3 refusal (a desk-scale cap was exceeded).

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankmoments::durfee::{self, RankFilter, RankRule};
use rankmoments::identities::{self, GfKind, Profile, Status, VerificationReport};
use rankmoments::moments::{MomentKind, MomentTable};
use rankmoments::{partitions, qseries, Error, Int};
use serde_json::Value;

use render::Format;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "rankmoments", version, about = "Exact Dyson-rank statistics of integer partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Output format; json is the canonical machine format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Rank distribution N(m, n) of the partitions of n
    Rankdist {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// A rank moment for n = 1..=n-max
    Moments {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Moment index (j for n / nbar, k for eta / eta-bar)
        #[arg(long)]
        index: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// k-marked Durfee symbols
    Durfee {
        #[command(subcommand)]
        action: DurfeeAction,
    },
    /// Expand a generating function up to q^order
    Gf {
        #[arg(long, value_enum)]
        which: SeriesArg,
        /// k for the moment and marked-symbol series
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Rank m for the rank series
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        order: usize,
        /// Drop monomials with some |x exponent| above this
        #[arg(long)]
        max_x_degree: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Run verifications; exit 0 only if every report passes
    Verify {
        #[command(subcommand)]
        identity: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum DurfeeAction {
    /// Count symbols, optionally filtered by one rank or a full rank vector
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        marks: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// One-based rank index used with --filter
        #[arg(long, requires = "filter")]
        rank_index: Option<usize>,
        #[arg(long, value_enum, requires = "rank_index")]
        filter: Option<FilterArg>,
        /// Full rank vector m_1,...,m_k
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "filter")]
        ranks: Option<Vec<i64>>,
        #[command(flatten)]
        out: Output,
    },
    /// List every symbol
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        marks: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The whole suite at a desk-scale profile
    All {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[command(flatten)]
        out: Output,
    },
    /// eta_2k(n) = number of (k+1)-marked symbols of n
    Andrews {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// etabar_{2k-1}(n) = symbols with zero i-th rank
    ZeroRank(RankArgs),
    /// etabar_2k(n) = symbols with positive i-th rank
    PositiveRank(RankArgs),
    /// etabar_2k(n) = symbols with negative i-th rank
    NegativeRank(RankArgs),
    /// D_k(m; n) against the truncated sum of N
    Ji {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        m_bound: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Permutation and sign symmetry of D_k
    Symmetry {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Series coefficients against direct computation
    Gf {
        #[arg(long, value_enum)]
        which: GfArg,
        /// k, or the bound on |m| for the rank series
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// eta_2k = 2 etabar_2k + etabar_{2k-1}
    EtaRelation {
        #[arg(long)]
        k_max: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Sum of N(m, n) over m equals p(n)
    PartitionCount {
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Solution counters against their binomial closed forms
    SolutionCounts {
        #[arg(long)]
        k_max: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Rational expansions of eta_6, etabar_4, etabar_5
    Formulas {
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    k: u32,
    /// One-based rank index; all of 1..=k+1 when omitted
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    n_max: u32,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    N,
    Nbar,
    Eta,
    EtaBar,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Zero,
    Positive,
    Negative,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    Rank,
    EtaBarOdd,
    EtaBarEven,
    MarkedZero,
    MarkedPositive,
}

#[derive(Clone, Copy, ValueEnum)]
enum GfArg {
    Odd,
    Even,
    Rank,
    MarkedZero,
    MarkedPositive,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

impl From<FilterArg> for RankFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Zero => RankFilter::Zero,
            FilterArg::Positive => RankFilter::Positive,
            FilterArg::Negative => RankFilter::Negative,
        }
    }
}

struct Rendered {
    text: String,
    out: Output,
    code: u8,
}

fn emit(text: String, out: &Output) -> Rendered {
    Rendered {
        text,
        out: out.clone(),
        code: 0,
    }
}

fn run(cli: Cli) -> Result<Rendered, Error> {
    match cli.command {
        Command::Rankdist { n, out } => {
            let d = partitions::rank_distribution(n)?;
            Ok(emit(render::rank_distribution(&d, out.format), &out))
        }
        Command::Moments {
            kind,
            index,
            n_max,
            out,
        } => {
            let kind = match kind {
                KindArg::N => MomentKind::Ordinary,
                KindArg::Nbar => MomentKind::Positive,
                KindArg::Eta => MomentKind::Symmetrized,
                KindArg::EtaBar => MomentKind::SymmetrizedPositive,
            };
            let t = MomentTable::compute(kind, index, n_max)?;
            Ok(emit(render::moment_table(&t, out.format), &out))
        }
        Command::Durfee { action } => match action {
            DurfeeAction::Count {
                marks,
                n,
                rank_index,
                filter,
                ranks,
                out,
            } => {
                let marks = marks as usize;
                let mut fields: Vec<(&str, Value)> = vec![("marks", marks.into()), ("n", n.into())];
                let count = match (rank_index.zip(filter), ranks) {
                    (Some((i, f)), _) => {
                        let f = RankFilter::from(f);
                        fields.push(("rank_index", i.into()));
                        fields.push(("filter", f.name().into()));
                        durfee::count_ith_rank_filtered(marks, i, f, n)?
                    }
                    (None, Some(r)) => {
                        let c = durfee::count_with_rank_vector(marks, &r, n)?;
                        let joined: Vec<String> = r.iter().map(i64::to_string).collect();
                        fields.push(("ranks", joined.join(" ").into()));
                        c
                    }
                    (None, None) => durfee::count_marked(marks, n)?,
                };
                fields.push(("count", count.to_string().into()));
                Ok(emit(render::count(&fields, out.format), &out))
            }
            DurfeeAction::Enumerate { marks, n, out } => {
                let all = durfee::enumerate_marked(marks as usize, n)?;
                Ok(emit(render::symbols(&all, out.format), &out))
            }
        },
        Command::Gf {
            which,
            k,
            m,
            order,
            max_x_degree,
            out,
        } => {
            let s = match which {
                SeriesArg::Rank => qseries::rank_gf::<Int>(m, order),
                SeriesArg::EtaBarOdd => qseries::eta_bar_odd_gf::<Int>(k, order)?,
                SeriesArg::EtaBarEven => qseries::eta_bar_even_gf::<Int>(k, order)?,
                SeriesArg::MarkedZero => qseries::marked_zero_rank_gf::<Int>(k as usize, order, max_x_degree)?,
                SeriesArg::MarkedPositive => {
                    qseries::marked_positive_rank_gf::<Int>(k as usize, order, max_x_degree)?
                }
            };
            Ok(emit(render::series(&s, out.format), &out))
        }
        Command::Verify { identity } => verify(identity),
    }
}

fn verify(cmd: VerifyCommand) -> Result<Rendered, Error> {
    let (reports, single, out): (Vec<VerificationReport>, bool, Output) = match cmd {
        VerifyCommand::All { profile, out } => {
            let p = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            (identities::verify_all(p)?, false, out)
        }
        VerifyCommand::Andrews { k, n_max, out } => (vec![identities::verify_andrews(k, n_max)?], true, out),
        VerifyCommand::ZeroRank(a) => rank_reports(a, RankFilter::Zero)?,
        VerifyCommand::PositiveRank(a) => rank_reports(a, RankFilter::Positive)?,
        VerifyCommand::NegativeRank(a) => rank_reports(a, RankFilter::Negative)?,
        VerifyCommand::Ji { k, n_max, m_bound, out } => (vec![identities::verify_ji(k, n_max, m_bound)?], true, out),
        VerifyCommand::Symmetry { k, n_max, out } => (vec![identities::verify_symmetry(k, n_max)?], true, out),
        VerifyCommand::Gf { which, k, n_max, out } => {
            let which = match which {
                GfArg::Odd => GfKind::Odd,
                GfArg::Even => GfKind::Even,
                GfArg::Rank => GfKind::Rank,
                GfArg::MarkedZero => GfKind::MarkedZero,
                GfArg::MarkedPositive => GfKind::MarkedPositive,
            };
            (vec![identities::verify_gf(which, k, n_max)?], true, out)
        }
        VerifyCommand::EtaRelation { k_max, n_max, out } => {
            (vec![identities::verify_eta_relation(k_max, n_max)?], true, out)
        }
        VerifyCommand::PartitionCount { n_max, out } => (vec![identities::verify_partition_count(n_max)?], true, out),
        VerifyCommand::SolutionCounts { k_max, n_max, out } => {
            (vec![identities::verify_solution_counts(k_max, n_max)?], true, out)
        }
        VerifyCommand::Formulas { n_max, out } => (vec![identities::verify_moment_formulas(n_max)?], true, out),
    };
    let code = if reports.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.status == Status::Refused) {
        EXIT_REFUSED
    } else {
        0
    };
    Ok(Rendered {
        text: render::reports(&reports, single, out.format),
        out,
        code,
    })
}

fn rank_reports(a: RankArgs, filter: RankFilter) -> Result<(Vec<VerificationReport>, bool, Output), Error> {
    let r = identities::verify_rank_interpretation(a.k, a.i, a.n_max, filter, RankRule::Standard)?;
    Ok((vec![r], true, a.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            let written = match &r.out.output {
                Some(path) => std::fs::write(path, r.text.as_bytes()),
                None => {
                    use std::io::Write;
                    std::io::stdout().lock().write_all(r.text.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() { EXIT_REFUSED } else { EXIT_USAGE })
        }
    }
}
