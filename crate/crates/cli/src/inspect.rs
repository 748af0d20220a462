use std::io::Write;
use std::path::Path;

use anyhow::Result;
use clap::{Args, ValueEnum};
use polyaut_core::engine::{polynomial_function_closure, Analysis, FunctionChain};
use polyaut_core::group::{center, derived_series, lower_central_series};
use serde_json::{json, Map, Value};

use crate::{load_group, ConfigArgs};

#[derive(Debug, Args)]
pub struct AutgroupArgs {
    /// Catalog name or group file.
    #[arg(long, short)]
    pub group: String,
    /// Emit JSON instead of aligned text.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub config: ConfigArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosureMethod {
    /// Stabilizer chain of the function group; handles any catalog group.
    Chain,
    /// Breadth-first enumeration, bounded by `closure_budget`.
    Enumerate,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    /// Catalog name or group file.
    #[arg(long, short)]
    pub group: String,
    #[arg(long, value_enum, default_value_t = ClosureMethod::Chain)]
    pub method: ClosureMethod,
    #[command(flatten)]
    pub config: ConfigArgs,
}

fn opt(v: Option<usize>) -> Value {
    v.map_or(Value::Null, |x| json!(x))
}

fn emit(out: &mut dyn Write, fields: &[(&str, Value)], as_json: bool) -> Result<()> {
    if as_json {
        let map: Map<String, Value> = fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&map)?)?;
    } else {
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in fields {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Null => "-".to_string(),
                other => other.to_string(),
            };
            writeln!(out, "{k:<width$}  {shown}")?;
        }
    }
    Ok(())
}

pub fn autgroup(args: &AutgroupArgs, cfg_file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let cfg = args.config.resolve(cfg_file)?;
    let g = load_group(&args.group, cfg.order_cap)?;
    let an = Analysis::new(&g, &cfg);
    let ds = derived_series(&g);
    let lcs = lower_central_series(&g);
    let p = an.p()?;
    let pg = p.composition_group();
    let pds = derived_series(pg);
    let plcs = lower_central_series(pg);
    let fields = [
        ("group", json!(g.name())),
        ("order", json!(g.order())),
        ("center_order", json!(center(&g).order())),
        ("derived_series", json!(ds.series.orders())),
        ("derived_length", opt(ds.derived_length)),
        ("lower_central_series", json!(lcs.series.orders())),
        ("nilpotency_class", opt(lcs.nilpotency_class)),
        ("a_order", json!(an.automorphisms()?.len())),
        ("i_order", json!(an.inner()?.len())),
        ("p0_order", json!(an.p0()?.len())),
        ("p_order", json!(p.len())),
        ("p_derived_series", json!(pds.series.orders())),
        ("p_derived_length", opt(pds.derived_length)),
        ("p_lower_central_series", json!(plcs.series.orders())),
        ("p_nilpotency_class", opt(plcs.nilpotency_class)),
        ("closure_order", json!(an.function_chain().order().to_string())),
    ];
    emit(out, &fields, args.json)?;
    Ok(0)
}

pub fn closure(args: &ClosureArgs, cfg_file: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let cfg = args.config.resolve(cfg_file)?;
    let g = load_group(&args.group, cfg.order_cap)?;
    let (method, size) = match args.method {
        ClosureMethod::Chain => ("chain", FunctionChain::polynomial_functions(&g).order().to_string()),
        ClosureMethod::Enumerate => (
            "enumerate",
            polynomial_function_closure(&g, cfg.closure_budget)?.len().to_string(),
        ),
    };
    emit(
        out,
        &[
            ("group", json!(g.name())),
            ("method", json!(method)),
            ("size", json!(size)),
        ],
        false,
    )?;
    Ok(0)
}
