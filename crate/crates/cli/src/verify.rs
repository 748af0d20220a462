use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::Args;
use polyaut_core::engine::{verify_group, Claim};
use polyaut_core::report::{Status, VerificationReport};

use crate::{load_group, ConfigArgs};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Catalog name or group file.
    #[arg(long, short)]
    pub group: String,
    /// Comma-separated claim ids, or `all`.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Print one line per claim instead of the JSON report.
    #[arg(long)]
    pub summary: bool,
    #[command(flatten)]
    pub config: ConfigArgs,
}

pub fn parse_claims(list: &str) -> Result<Vec<Claim>> {
    if list.trim() == "all" {
        return Ok(Claim::ALL.to_vec());
    }
    list.split(',')
        .map(|s| s.trim().parse::<Claim>().map_err(Into::into))
        .collect()
}

fn summary(rep: &VerificationReport) -> String {
    let mut s = format!("group {} (order {})\n", rep.group, rep.group_order);
    for r in &rep.results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        s += &format!("  {:<20} {status}", r.claim);
        if let Some(reason) = &r.reason {
            s += &format!("  ({reason})");
        }
        s.push('\n');
    }
    s += if rep.all_pass() { "result: pass\n" } else { "result: FAIL\n" };
    s
}

pub fn run(args: &VerifyArgs, cfg_file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let cfg = args.config.resolve(cfg_file)?;
    let claims = parse_claims(&args.claims)?;
    let g = load_group(&args.group, cfg.order_cap)?;
    let rep = verify_group(&g, &claims, &cfg)?;
    let json = rep.to_json();
    match &cfg.output {
        Some(path) => {
            std::fs::write(path, format!("{json}\n")).with_context(|| format!("writing {path}"))?;
            write!(out, "{}", summary(&rep))?;
        }
        None if args.summary => write!(out, "{}", summary(&rep))?,
        None => writeln!(out, "{json}")?,
    }
    Ok(if rep.all_pass() { 0 } else { 1 })
}
