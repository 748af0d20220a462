//! Plain-text group files.
//!
//! ```text
//! name: S3
//! order: 6
//! perms:
//! (1 2 3)
//! (1 2)
//! ```
//!
//! or a `table:` section with one space-separated row per element, in
//! which case an optional `gens:` header lists generator indices. Blank
//! lines and lines starting with `#` are ignored. Rendering is canonical,
//! so `parse(render(f)) == f` and `render(parse(render(f))) == render(f)`.

use std::fmt;

use super::perm::{parse_cycles, render_cycles};
use super::{build_group, Elem, FiniteGroup, GroupError, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupBody {
    Table(Vec<Vec<Elem>>),
    Perms(Vec<Vec<Vec<usize>>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub gens: Option<Vec<Elem>>,
    pub body: GroupBody,
}

fn perr(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        msg: msg.into(),
    }
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut name = None;
        let mut order = None;
        let mut gens = None;
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let mut section = None;
        for (ln, line) in lines.by_ref() {
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| perr(ln, format!("expected `key: value`, got `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "order" => {
                    order = Some(
                        value
                            .parse::<usize>()
                            .map_err(|e| perr(ln, format!("bad order: {e}")))?,
                    )
                }
                "gens" => {
                    gens = Some(
                        value
                            .split_whitespace()
                            .map(|s| s.parse::<Elem>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|e| perr(ln, format!("bad generator: {e}")))?,
                    )
                }
                s @ ("table" | "perms") => {
                    if !value.is_empty() {
                        return Err(perr(ln, format!("`{s}:` takes no inline value")));
                    }
                    section = Some((ln, s == "table"));
                    break;
                }
                other => return Err(perr(ln, format!("unknown key `{other}`"))),
            }
        }
        let name = name.ok_or_else(|| perr(0, "missing `name:`"))?;
        let order = order.ok_or_else(|| perr(0, "missing `order:`"))?;
        let (sec_line, is_table) = section.ok_or_else(|| perr(0, "missing `table:` or `perms:` section"))?;

        let body = if is_table {
            let rows = lines
                .map(|(ln, l)| {
                    l.split_whitespace()
                        .map(|s| s.parse::<Elem>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| perr(ln, format!("bad table entry: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if rows.len() != order {
                return Err(perr(sec_line, format!("table has {} rows, order is {order}", rows.len())));
            }
            GroupBody::Table(rows)
        } else {
            if gens.is_some() {
                return Err(perr(sec_line, "`gens:` only applies to `table:` files"));
            }
            let perms = lines
                .map(|(ln, l)| parse_cycles(l).map_err(|m| perr(ln, m)))
                .collect::<Result<Vec<_>, _>>()?;
            GroupBody::Perms(perms)
        };
        Ok(GroupFile {
            name,
            order,
            gens,
            body,
        })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn spec(&self) -> GroupSpec {
        match &self.body {
            GroupBody::Table(rows) => GroupSpec::Table {
                name: self.name.clone(),
                rows: rows.clone(),
                gens: self.gens.clone(),
            },
            GroupBody::Perms(perms) => GroupSpec::Perms {
                name: self.name.clone(),
                gens: perms.clone(),
            },
        }
    }

    /// Build and validate; the declared order must match.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        let g = build_group(&self.spec(), cap)?;
        if g.order() != self.order {
            return Err(perr(
                0,
                format!("declared order {} but group has order {}", self.order, g.order()),
            ));
        }
        Ok(g)
    }

    /// Table form of an already-built group.
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile {
            name: g.name().to_string(),
            order: g.order(),
            gens: Some(g.gens().to_vec()),
            body: GroupBody::Table(g.elements().map(|a| g.table_row(a)).collect()),
        }
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "order: {}", self.order)?;
        if let Some(gens) = &self.gens {
            let g: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
            writeln!(f, "gens: {}", g.join(" "))?;
        }
        match &self.body {
            GroupBody::Table(rows) => {
                writeln!(f, "table:")?;
                for row in rows {
                    let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "{}", r.join(" "))?;
                }
            }
            GroupBody::Perms(perms) => {
                writeln!(f, "perms:")?;
                for p in perms {
                    writeln!(f, "{}", render_cycles(p))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "name: S3\norder: 6\nperms:\n(1 2 3)\n(1 2)\n";

    #[test]
    fn perms_roundtrip_is_bit_exact() {
        let f = GroupFile::parse(S3).unwrap();
        assert_eq!(f.render(), S3);
        assert_eq!(GroupFile::parse(&f.render()).unwrap(), f);
        assert_eq!(f.build(64).unwrap().order(), 6);
    }

    #[test]
    fn table_roundtrip_and_comments() {
        let text = "# cyclic\nname: C3\norder: 3\ngens: 1\n\ntable:\n0 1 2\n1  2 0\n2 0 1\n";
        let f = GroupFile::parse(text).unwrap();
        let canon = f.render();
        assert_eq!(canon, "name: C3\norder: 3\ngens: 1\ntable:\n0 1 2\n1 2 0\n2 0 1\n");
        let again = GroupFile::parse(&canon).unwrap();
        assert_eq!(again, f);
        assert_eq!(again.render(), canon);
    }

    #[test]
    fn parse_errors() {
        assert!(GroupFile::parse("order: 3\ntable:\n").is_err());
        assert!(GroupFile::parse("name: x\norder: 2\ntable:\n0 1\n").is_err());
        assert!(GroupFile::parse("name: x\norder: 1\ngens: 0\nperms:\n()\n").is_err());
        assert!(GroupFile::parse("name: x\ncolour: red\n").is_err());
        let wrong_order = GroupFile::parse("name: x\norder: 5\nperms:\n(1 2 3)\n").unwrap();
        assert!(wrong_order.build(64).is_err());
    }

    #[test]
    fn from_group_rebuilds_identically() {
        let g = super::super::catalog_group("D10", 64).unwrap();
        let f = GroupFile::from_group(&g);
        let h = GroupFile::parse(&f.render()).unwrap().build(64).unwrap();
        assert_eq!(g, h);
    }
}
