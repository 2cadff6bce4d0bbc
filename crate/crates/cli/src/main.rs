use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pcurv13::bazaikin::{self, QTuple};
use pcurv13::cohomology::{
    divisibility_obstruction, enumerate_profiles, smith_gysin_solve, BettiVector, ComponentType,
    QuotientGroup,
};
use pcurv13::groups::{self, BurnsideParams, GroupTable};
use pcurv13::pipeline::{self, CohomologyType, ScenarioInput};
use pcurv13::serre;
use pcurv13::Error;

#[derive(Parser)]
#[command(
    name = "pcurv13",
    version,
    about = "Obstruction toolkit for free finite group actions on 13-dimensional Bazaikin-type spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bazaikin tuples: freeness, curvature, cohomology
    #[command(subcommand)]
    Bazaikin(BazaikinCmd),
    /// Finite groups as multiplication tables
    #[command(subcommand)]
    Group(GroupCmd),
    /// Fixed-point bookkeeping
    #[command(subcommand)]
    Fixedpoint(FixedpointCmd),
    /// Spectral sequence search
    #[command(subcommand)]
    Ss(SsCmd),
    /// Cyclic-index bound for a symmetry scenario
    #[command(name = "index-bound", visible_alias = "theorem-a")]
    IndexBound(IndexBoundArgs),
}

#[derive(Subcommand)]
enum BazaikinCmd {
    /// Report on one tuple
    Check {
        #[arg(num_args = 5, allow_negative_numbers = true, required = true)]
        q: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// All free, positively curved canonical tuples up to a bound
    Enumerate {
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Print a multiplication table
    Build {
        /// Burnside parameters m n r
        #[arg(long, num_args = 3, value_names = ["M", "N", "R"], conflicts_with = "name")]
        burnside: Option<Vec<u64>>,
        /// Catalog name, e.g. U33, Z9semiZ3, Z3xZ3
        #[arg(long)]
        name: Option<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural summary of a table file
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FixedpointCmd {
    /// Admissible fixed-point profiles
    Profiles {
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        json: bool,
    },
    /// Smith-Gysin solutions for a circle action
    Gysin {
        /// Component type of the space, e.g. S5 or CP1xS3
        #[arg(long)]
        space: String,
        /// `empty` or a comma-separated list of component types
        #[arg(long, default_value = "empty")]
        fixed: String,
    },
    /// Divisibility obstruction against a Lefschetz value set
    Obstruct {
        /// `cd:D` or `zpxzp:P`
        #[arg(long)]
        group: String,
        /// Comma-separated Lefschetz values
        #[arg(long, allow_hyphen_values = true)]
        lef: String,
    },
}

#[derive(Subcommand)]
enum SsCmd {
    /// Exhaustive search over differential choices
    Verify {
        #[arg(long)]
        p: u64,
        /// Also print the second page and search statistics
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Args)]
struct IndexBoundArgs {
    #[arg(long)]
    rank: u32,
    #[arg(long, default_value = "rational")]
    cohomology: String,
    /// A specific tuple q1..q5
    #[arg(long, num_args = 5, allow_negative_numbers = true)]
    q: Option<Vec<i64>>,
    #[arg(long, conflicts_with = "explain")]
    json: bool,
    #[arg(long)]
    explain: bool,
}

fn tuple(q: &[i64]) -> QTuple {
    QTuple::new([q[0], q[1], q[2], q[3], q[4]])
}

fn parse_list(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidArgument(format!("`{t}` is not an integer")))
        })
        .collect()
}

fn parse_quotient(s: &str) -> Result<QuotientGroup, Error> {
    let bad = || Error::InvalidArgument(format!("group `{s}` is not cd:D or zpxzp:P"));
    let (kind, n) = s.split_once(':').ok_or_else(bad)?;
    let n: u64 = n.trim().parse().map_err(|_| bad())?;
    match kind.to_ascii_lowercase().as_str() {
        "cd" => Ok(QuotientGroup::CyclicIndex(n)),
        "zpxzp" => Ok(QuotientGroup::ElementaryAbelian(n)),
        _ => Err(bad()),
    }
}

// Write to stdout, passing io errors (e.g. a closed pipe) up to main.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

fn print_json(v: &serde_json::Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(std::io::stdout().lock(), "{text}")
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Bazaikin(BazaikinCmd::Check { q, json }) => {
            let r = bazaikin::tuple_report(&tuple(&q));
            if json {
                print_json(&serde_json::to_value(&r)?)?;
            } else {
                out!("q = {:?}", r.q);
                out!("free: {}", r.free);
                for f in &r.failing_pairs {
                    out!("  failing pair: {}", serde_json::to_string(f)?);
                }
                out!("curvature: {}", r.curvature.as_str());
                out!(
                    "e3 = {}, m = {} ({})",
                    r.e3,
                    r.m,
                    if r.m_integral {
                        "integral"
                    } else {
                        "not integral"
                    }
                );
                out!("mod 3 type: {}", r.mod3_type.as_str());
            }
        }
        Command::Bazaikin(BazaikinCmd::Enumerate { bound, format }) => {
            let spaces = bazaikin::enumerate_spaces(bound)?;
            match format {
                Format::Json => print_json(&json!({ "bound": bound, "spaces": spaces }))?,
                Format::Tsv => {
                    out!("q1\tq2\tq3\tq4\tq5");
                    for q in spaces {
                        let cols: Vec<String> = q.entries().iter().map(i64::to_string).collect();
                        out!("{}", cols.join("\t"));
                    }
                }
            }
        }
        Command::Group(GroupCmd::Build {
            burnside,
            name,
            out,
        }) => {
            let table = match (burnside, name) {
                (Some(b), _) => {
                    groups::build_burnside(BurnsideParams::new(b[0], b[1], b[2])?)?.table
                }
                (None, Some(name)) => groups::build_standard(&name)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("need --burnside or --name".into()).into())
                }
            };
            match out {
                Some(path) => fs::write(&path, table.to_text())
                    .with_context(|| format!("writing {}", path.display()))?,
                None => write!(std::io::stdout().lock(), "{}", table.to_text())?,
            }
        }
        Command::Group(GroupCmd::Analyze { input, json }) => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", input.display())))?;
            let g = GroupTable::parse_text(&text)?;
            let s = groups::summarize(&g);
            if json {
                print_json(&serde_json::to_value(&s)?)?;
            } else {
                out!("order {}", s.order);
                for (p, cyclic) in &s.sylow {
                    out!(
                        "p = {p}: Sylow cyclic {cyclic}, no Z{p}xZ{p} {}, normal rank {}",
                        s.p2[p],
                        s.normal_rank[p]
                    );
                }
                out!("min cyclic index {}", s.min_cyclic_index);
                match &s.davis {
                    Some(d) => out!("Z_2^{} x odd part of order {}", d.a, d.odd_order),
                    None => out!("no cyclic 2-part splitting"),
                }
            }
        }
        Command::Fixedpoint(FixedpointCmd::Profiles { budget, dim, json }) => {
            let profiles = enumerate_profiles(budget, dim)?;
            if json {
                print_json(&json!({ "profiles": profiles }))?;
            } else {
                for p in profiles {
                    out!("{p}");
                }
            }
        }
        Command::Fixedpoint(FixedpointCmd::Gysin { space, fixed }) => {
            let x = ComponentType::parse(&space)?;
            let f = if fixed.eq_ignore_ascii_case("empty") {
                BettiVector::empty()
            } else {
                fixed
                    .split(',')
                    .try_fold(BettiVector::empty(), |acc, label| {
                        Ok::<_, Error>(
                            acc.disjoint_union(&ComponentType::parse(label.trim())?.betti()),
                        )
                    })?
            };
            let sols = smith_gysin_solve(&x.betti(), &f, x.dim());
            let first = sols.first();
            print_json(&json!({
                "R": first.map(|s| &s.r),
                "chi_bar": first.map(|s| s.chi_bar),
                "solutions": sols,
            }))?;
        }
        Command::Fixedpoint(FixedpointCmd::Obstruct { group, lef }) => {
            let g = parse_quotient(&group)?;
            let values: BTreeSet<i64> = parse_list(&lef)?.into_iter().collect();
            let v = divisibility_obstruction(g, &values)?;
            let mut out = serde_json::to_value(&v)?;
            out["group"] = json!(group);
            out["lef"] = json!(values);
            print_json(&out)?;
        }
        Command::Ss(SsCmd::Verify { p, trace }) => {
            let r = serre::exhaustive_verdict(p)?;
            let mut out = json!({
                "p": r.p,
                "choices": r.choices_examined,
                "min_deg6_survivors": r.min_deg6_survivors,
                "free_action_possible": !r.verdict,
            });
            if trace {
                out["states_explored"] = json!(r.states_explored);
                out["min_e_inf_6_0"] = json!(r.min_e_inf_6_0);
                out["e2"] = serde_json::to_value(serre::e2_page(p)?)?;
            }
            print_json(&out)?;
        }
        Command::IndexBound(a) => {
            let mut s = ScenarioInput::new(a.rank, CohomologyType::parse(&a.cohomology)?);
            s.q = a.q.as_deref().map(tuple);
            let report = pipeline::index_bound_report(&s)?;
            if a.explain {
                for line in report.explain() {
                    out!("{line}");
                }
            } else {
                print_json(&serde_json::to_value(&report)?)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("PCURV13_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // 0 means the default
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::StepFailed(_)) | None => ExitCode::FAILURE,
                Some(_) => ExitCode::from(2),
            }
        }
    }
}
