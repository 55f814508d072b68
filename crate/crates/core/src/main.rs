use clap::{Args, Parser, Subcommand};
use homlab::report::{
    any_falsified, check_type, enumerate_table, experiment_mu1_saturation, fatpoints_report,
    net_report, parse_degree_range, render_claims, render_rows, render_value, run_claims, Format,
    ReportError, SchemeSpec, SessionConfig,
};
use homlab::types::PlaneType;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homlab",
    version,
    about = "Homaloidal types, fat points and Cremona base ideals over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homaloidal / exceptional / sub-homaloidal flags and the Hudson chain of a type
    CheckType {
        /// e.g. "8;5,3^2,2^5"
        literal: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All homaloidal types of a degree, with proper flags and chain lengths
    Enumerate {
        #[arg(long)]
        degree: i64,
        /// keep only proper types
        #[arg(long)]
        proper: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hilbert function, regularity and generators of a fat-point ideal
    Fatpoints {
        /// e.g. "p=32003 seed=7 type=5;2^6 pin=false" (or set=..., square=true)
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run claim checks across seeds; `all` runs the whole matrix
    Verify {
        /// claim ids (see claims.md) or `all`
        #[arg(required = true)]
        claims: Vec<String>,
        #[command(flatten)]
        session: SessionArgs,
        /// replace the claim's default type list
        #[arg(long = "type")]
        types: Vec<PlaneType>,
        /// replace the default s values {3, 5}
        #[arg(long)]
        s: Vec<usize>,
    },
    /// Structure report of the Cremona net of one type
    NetReport {
        /// e.g. "5;2^6"
        literal: PlaneType,
        #[command(flatten)]
        session: SessionArgs,
    },
    /// Exploratory tables; nothing is asserted
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Saturation of the base ideal against mu1 for every proper type
    #[command(name = "mu1-saturation", alias = "q41")]
    Mu1Saturation {
        /// degree range A..B (inclusive)
        #[arg(long)]
        degrees: String,
        #[command(flatten)]
        session: SessionArgs,
    },
}

#[derive(Args)]
struct SessionArgs {
    #[arg(long, env = "HOMLAB_PRIME", default_value_t = 32003)]
    prime: u32,
    /// seeds, comma separated
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3, 4, 5])]
    seeds: Vec<u64>,
    /// saturation inspection bound (default 2d)
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// worker threads (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

impl SessionArgs {
    fn config(&self) -> Result<SessionConfig, ReportError> {
        let mut c = SessionConfig::new(self.prime, self.seeds.clone(), self.bound)?;
        c.format = self.format;
        c.jobs = self.jobs;
        Ok(c)
    }
}

fn run(cli: Cli) -> Result<bool, ReportError> {
    let mut falsified = false;
    let out = match cli.cmd {
        Cmd::CheckType { literal, format } => check_type(&literal)?.render(format)?,
        Cmd::Enumerate {
            degree,
            proper,
            format,
        } => render_rows(&enumerate_table(degree, proper)?, format)?,
        Cmd::Fatpoints { scheme, bound } => {
            let spec: SchemeSpec = scheme.parse()?;
            render_value(&fatpoints_report(&spec, bound)?)
        }
        Cmd::Verify {
            claims,
            session,
            types,
            s,
        } => {
            let mut cfg = session.config()?;
            cfg.types = types;
            cfg.s = s;
            let reports = run_claims(&claims, &cfg)?;
            falsified = any_falsified(&reports);
            render_claims(&reports, cfg.format)?
        }
        Cmd::NetReport { literal, session } => {
            let cfg = session.config()?;
            let reports = cfg
                .seeds
                .iter()
                .map(|&seed| net_report(&literal, seed, &cfg))
                .collect::<Result<Vec<_>, _>>()?;
            falsified = reports.iter().any(|r| !r.notes.is_empty());
            render_rows(&reports, Format::Json)?
        }
        Cmd::Experiment {
            which: Experiment::Mu1Saturation { degrees, session },
        } => {
            let cfg = session.config()?;
            render_rows(
                &experiment_mu1_saturation(parse_degree_range(&degrees)?, &cfg)?,
                cfg.format,
            )?
        }
    };
    print!("{out}");
    Ok(falsified)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("homlab: {e}");
            ExitCode::from(2)
        }
    }
}
