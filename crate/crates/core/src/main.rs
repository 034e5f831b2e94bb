use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fdtc::cover::CoverSpec;
use fdtc::report::{self, Options, PipelineError, Report};

/// Fractional Dehn twist coefficients of braids and their lifts to branched covers.
#[derive(Parser, Debug)]
#[command(name = "fdtc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// FDTC and right-veering status of a closed braid.
    Fdtc(Common),
    /// Lift the FDTC to a fully ramified branched cover.
    Transfer {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// Run every classification rule.
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cover: CoverArgs,
        /// JSON array of assertions.
        #[arg(long = "assert", value_name = "FILE")]
        assertions: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, short = 'n')]
    strands: usize,
    #[arg(long = "mmax", default_value_t = report::DEFAULT_M_MAX)]
    m_max: u32,
    #[arg(long, default_value_t = report::DEFAULT_MAX_PERIOD)]
    max_period: u64,
    /// Handle-reduction step budget.
    #[arg(long, env = "FDTC_BUDGET", default_value_t = fdtc::dehornoy::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
    /// Include per-stage timings in the report.
    #[arg(long)]
    timings: bool,
    /// Braid word, e.g. `s1 -s2` or `1 -2`. Put options before the word.
    #[arg(allow_hyphen_values = true, trailing_var_arg = true, num_args = 0..)]
    braid: Vec<String>,
}

#[derive(Args, Debug)]
struct CoverArgs {
    /// Degree of the standard cyclic cover.
    #[arg(long, short = 'd')]
    degree: Option<usize>,
    /// JSON cover specification; overrides --degree.
    #[arg(long, value_name = "FILE")]
    cover_spec: Option<PathBuf>,
}

impl Common {
    fn options(&self) -> Options {
        Options { m_max: self.m_max, max_period: self.max_period, budget: self.budget, timings: self.timings }
    }

    fn word(&self) -> String {
        self.braid.join(" ")
    }
}

fn read(path: &Path) -> Result<String, PipelineError> {
    std::fs::read_to_string(path).map_err(|e| PipelineError::Io(format!("{}: {e}", path.display())))
}

fn load_cover(args: &CoverArgs) -> Result<Option<CoverSpec>, PipelineError> {
    args.cover_spec
        .as_deref()
        .map(|p| CoverSpec::from_json(&read(p)?).map_err(PipelineError::from))
        .transpose()
}

fn run(cli: &Cli) -> Result<(Report, bool), PipelineError> {
    match &cli.command {
        Command::Fdtc(c) => Ok((report::cmd_fdtc(&c.word(), c.strands, &c.options())?, c.json)),
        Command::Transfer { common: c, cover } => {
            let spec = load_cover(cover)?;
            Ok((report::cmd_transfer(&c.word(), c.strands, cover.degree, spec, &c.options())?, c.json))
        }
        Command::Classify { common: c, cover, assertions } => {
            let spec = load_cover(cover)?;
            let assertions = match assertions {
                Some(p) => report::parse_assertions(&read(p)?)?,
                None => Vec::new(),
            };
            let r = report::cmd_classify(&c.word(), c.strands, cover.degree, spec, assertions, &c.options())?;
            Ok((r, c.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, json)) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let body = serde_json::to_string_pretty(&e.to_report()).expect("error reports serialize");
            eprintln!("{body}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
