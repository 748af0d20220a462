//! `polyaut` command-line front end. [`run`] executes a parsed command line
//! against any writer, which keeps the commands testable in-process.

mod catalog;
mod inspect;
mod symbolic;
mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use polyaut_core::group::{catalog_group, GroupFile};
use polyaut_core::{FiniteGroup, RunConfig};

pub use catalog::CatalogCommand;
pub use inspect::{AutgroupArgs, ClosureArgs, ClosureMethod};
pub use symbolic::{DemoArgs, Ia2polyArgs};
pub use verify::VerifyArgs;

/// Polynomial automorphisms of finite groups and free metabelian groups.
#[derive(Debug, Parser)]
#[command(name = "polyaut", version)]
pub struct Cli {
    /// Configuration file with `key = value` lines.
    #[arg(long, global = true, env = "POLYAUT_CONFIG", value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check claims about P(G) on one group and emit a JSON report.
    Verify(VerifyArgs),
    /// Print |A(G)|, |I(G)|, |P(G)| and series data.
    Autgroup(AutgroupArgs),
    /// Print the size of the group of polynomial functions G -> G.
    Closure(ClosureArgs),
    /// Convert an IA-automorphism of the rank 2 free metabelian group to
    /// polynomial form.
    Ia2poly(Ia2polyArgs),
    /// Show that x -> c[a,b] on c (fixing a, b) has no polynomial form in
    /// rank 3.
    DemoRank3(DemoArgs),
    /// List, export and validate group files.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

/// Per-run overrides, applied after the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// Largest group order accepted.
    #[arg(long)]
    pub order_cap: Option<usize>,
    /// Maximum number of polynomial functions to enumerate.
    #[arg(long)]
    pub closure_budget: Option<usize>,
    /// Maximum number of candidate generator images in automorphism search.
    #[arg(long)]
    pub search_budget: Option<usize>,
    /// Seed for all sampled checks.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random form pairs per group for the composition identity.
    #[arg(long)]
    pub lemma21_samples: Option<usize>,
    /// Random polynomial forms per group for the bijectivity check.
    #[arg(long)]
    pub en_samples: Option<usize>,
    /// Most factors in a sampled form.
    #[arg(long)]
    pub en_max_len: Option<usize>,
    /// Omit timings so identical runs give byte-identical reports.
    #[arg(long)]
    pub no_timing: bool,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<String>,
    /// Set any config key, e.g. `--set seed=7`. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
}

impl ConfigArgs {
    /// Defaults, then `file`, then `--set` pairs, then explicit flags.
    pub fn resolve(&self, file: Option<&Path>) -> Result<RunConfig> {
        let mut cfg = match file {
            Some(p) => RunConfig::load(p).with_context(|| format!("config file {}", p.display()))?,
            None => RunConfig::default(),
        };
        for kv in &self.set {
            let (k, v) = kv
                .split_once('=')
                .with_context(|| format!("--set expects KEY=VALUE, got `{kv}`"))?;
            cfg.set(k, v)?;
        }
        let flags = [
            ("order_cap", self.order_cap.map(|v| v.to_string())),
            ("closure_budget", self.closure_budget.map(|v| v.to_string())),
            ("search_budget", self.search_budget.map(|v| v.to_string())),
            ("seed", self.seed.map(|v| v.to_string())),
            ("lemma21_samples", self.lemma21_samples.map(|v| v.to_string())),
            ("en_samples", self.en_samples.map(|v| v.to_string())),
            ("en_max_len", self.en_max_len.map(|v| v.to_string())),
            ("output", self.output.clone()),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                cfg.set(k, &v)?;
            }
        }
        if self.no_timing {
            cfg.record_timing = false;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// A catalog name, or a path to a group file.
pub fn load_group(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        let file = GroupFile::parse(&text).with_context(|| format!("parsing {spec}"))?;
        return file.build(cap).with_context(|| format!("building {spec}"));
    }
    Ok(catalog_group(spec, cap)?)
}

/// Run one command. Returns the process exit code: 0 on success, 1 when a
/// check fails. Errors are for unusable input.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg_file = cli.config.as_deref();
    match cli.command {
        Command::Verify(args) => verify::run(&args, cfg_file, out),
        Command::Autgroup(args) => inspect::autgroup(&args, cfg_file, out),
        Command::Closure(args) => inspect::closure(&args, cfg_file, out),
        Command::Ia2poly(args) => symbolic::ia2poly(&args, out),
        Command::DemoRank3(args) => symbolic::demo_rank3(&args, out),
        Command::Catalog(cmd) => catalog::run(&cmd, out),
    }
}

/// Parse `args` (without the program name) and run, capturing output.
pub fn run_args<I, S>(args: I) -> Result<(i32, String)>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("polyaut")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    let mut buf = Vec::new();
    let code = run(cli, &mut buf)?;
    Ok((code, String::from_utf8(buf)?))
}
