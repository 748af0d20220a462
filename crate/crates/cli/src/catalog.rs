use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Subcommand;
use polyaut_core::group::{catalog_file, catalog_group, catalog_names, GroupFile, DEFAULT_ORDER_CAP};

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List built-in groups with their orders.
    List,
    /// Print the group file for a built-in group.
    Show {
        name: String,
        /// Print the full multiplication table instead of generators.
        #[arg(long)]
        table: bool,
    },
    /// Parse, build and check group files.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: usize,
    },
    /// Write every built-in group to `<dir>/<name>.group`.
    Export { dir: PathBuf },
}

fn file_for(name: &str, table: bool) -> Result<GroupFile> {
    if table {
        let g = catalog_group(name, usize::MAX)?;
        return Ok(GroupFile::from_group(&g));
    }
    catalog_file(name).with_context(|| format!("unknown group `{name}`"))
}

pub fn run(cmd: &CatalogCommand, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        CatalogCommand::List => {
            for name in catalog_names() {
                let g = catalog_group(name, usize::MAX)?;
                writeln!(out, "{name:<8} {}", g.order())?;
            }
            Ok(0)
        }
        CatalogCommand::Show { name, table } => {
            write!(out, "{}", file_for(name, *table)?.render())?;
            Ok(0)
        }
        CatalogCommand::Validate { files, order_cap } => {
            let mut bad = 0;
            for path in files {
                let result = std::fs::read_to_string(path)
                    .map_err(anyhow::Error::from)
                    .and_then(|text| Ok(GroupFile::parse(&text)?))
                    .and_then(|f| Ok(f.build(*order_cap)?));
                match result {
                    Ok(g) => writeln!(out, "ok      {}  ({}, order {})", path.display(), g.name(), g.order())?,
                    Err(e) => {
                        bad += 1;
                        writeln!(out, "invalid {}  {e:#}", path.display())?;
                    }
                }
            }
            Ok(if bad == 0 { 0 } else { 1 })
        }
        CatalogCommand::Export { dir } => {
            if dir.exists() && !dir.is_dir() {
                bail!("{} is not a directory", dir.display());
            }
            std::fs::create_dir_all(dir)?;
            for name in catalog_names() {
                let path = dir.join(format!("{name}.group"));
                std::fs::write(&path, file_for(name, false)?.render())
                    .with_context(|| format!("writing {}", path.display()))?;
                writeln!(out, "{}", path.display())?;
            }
            Ok(0)
        }
    }
}
