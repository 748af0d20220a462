//! Built-in small groups.

use super::{Elem, FiniteGroup, GroupBody, GroupError, GroupFile};

const NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C2xC2", "C2xC4",
    "S3", "S4", "A4", "D8", "D10", "D12", "D16", "Q8", "Heis27", "Frob20",
];

pub fn catalog_names() -> &'static [&'static str] {
    NAMES
}

fn table_file(name: &str, n: usize, gens: Vec<Elem>, mul: impl Fn(Elem, Elem) -> Elem) -> GroupFile {
    GroupFile {
        name: name.to_string(),
        order: n,
        gens: Some(gens),
        body: GroupBody::Table((0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect()),
    }
}

fn perms_file(name: &str, order: usize, gens: &[&[&[usize]]]) -> GroupFile {
    GroupFile {
        name: name.to_string(),
        order,
        gens: None,
        body: GroupBody::Perms(
            gens.iter()
                .map(|cycles| cycles.iter().map(|c| c.to_vec()).collect())
                .collect(),
        ),
    }
}

/// The group file for a catalog entry.
pub fn catalog_file(name: &str) -> Option<GroupFile> {
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        if (1..=12).contains(&n) {
            let gens = if n == 1 { vec![] } else { vec![1] };
            return Some(table_file(name, n, gens, |a, b| (a + b) % n));
        }
        return None;
    }
    let f = match name {
        "C2xC2" => table_file(name, 4, vec![2, 1], |a, b| ((a / 2 + b / 2) % 2) * 2 + (a + b) % 2),
        "C2xC4" => table_file(name, 8, vec![4, 1], |a, b| {
            ((a / 4 + b / 4) % 2) * 4 + (a % 4 + b % 4) % 4
        }),
        // upper unitriangular 3x3 matrices over F3, (x, y, z) -> 9x + 3y + z
        "Heis27" => table_file(name, 27, vec![9, 3], |p, q| {
            let (a, b, c) = (p / 9, (p / 3) % 3, p % 3);
            let (d, e, f) = (q / 9, (q / 3) % 3, q % 3);
            ((a + d) % 3) * 9 + ((b + e) % 3) * 3 + (c + f + a * e) % 3
        }),
        "S3" => perms_file(name, 6, &[&[&[1, 2, 3]], &[&[1, 2]]]),
        "S4" => perms_file(name, 24, &[&[&[1, 2, 3, 4]], &[&[1, 2]]]),
        "A4" => perms_file(name, 12, &[&[&[1, 2, 3]], &[&[2, 3, 4]]]),
        "D8" => perms_file(name, 8, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
        "D10" => perms_file(name, 10, &[&[&[1, 2, 3, 4, 5]], &[&[2, 5], &[3, 4]]]),
        "D12" => perms_file(name, 12, &[&[&[1, 2, 3, 4, 5, 6]], &[&[2, 6], &[3, 5]]]),
        "D16" => perms_file(
            name,
            16,
            &[&[&[1, 2, 3, 4, 5, 6, 7, 8]], &[&[2, 8], &[3, 7], &[4, 6]]],
        ),
        "Q8" => perms_file(
            name,
            8,
            &[&[&[1, 2, 4, 7], &[3, 6, 8, 5]], &[&[1, 3, 4, 8], &[2, 5, 7, 6]]],
        ),
        // x -> x + 1 and x -> 2x on F5
        "Frob20" => perms_file(name, 20, &[&[&[1, 2, 3, 4, 5]], &[&[2, 3, 5, 4]]]),
        _ => return None,
    };
    Some(f)
}

pub fn catalog_group(name: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    catalog_file(name)
        .ok_or_else(|| GroupError::UnknownGroup(name.to_string()))?
        .build(cap)
}
