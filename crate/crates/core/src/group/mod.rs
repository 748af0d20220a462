//! Finite groups given by full multiplication tables, and the subgroup and
//! series machinery built on top of them.

mod catalog;
mod file;
mod perm;
mod series;
mod subgroup;

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

use crate::ops::GroupOps;

pub use catalog::{catalog_file, catalog_group, catalog_names};
pub use file::{GroupBody, GroupFile};
pub use perm::{parse_cycles, render_cycles, Permutation};
pub use series::{
    derived_series, lower_central_series, DerivedSeries, LowerCentralSeries, Series, SeriesKind,
};
pub use subgroup::{
    center, commutator_subgroup, normal_closure, quotient_group, subgroup_closure, Subgroup,
};

/// Element of a [`FiniteGroup`]: a dense index in `0..order`.
pub type Elem = usize;

/// Default upper bound on the order of groups built from user input.
pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociativeTable { a: Elem, b: Elem, c: Elem },
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: Elem },
    #[error("group order exceeds the configured cap of {cap}")]
    ClosureOverflow { cap: usize },
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("generators do not generate the whole group ({generated} of {order} elements)")]
    GeneratorsDoNotGenerate { generated: usize, order: usize },
    #[error("subgroup is not normal: {conjugate} = {element}^{by} escapes it")]
    NotNormal {
        element: Elem,
        by: Elem,
        conjugate: Elem,
    },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite group with elements `0..order` and precomputed tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    id: Elem,
    gens: Vec<Elem>,
}

impl FiniteGroup {
    /// Build from a full multiplication table, validating the group axioms
    /// exhaustively. When `gens` is `None` a generating set is chosen
    /// greedily.
    pub fn from_table(
        name: impl Into<String>,
        rows: &[Vec<Elem>],
        gens: Option<Vec<Elem>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        if n > cap {
            return Err(GroupError::ClosureOverflow { cap });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::MalformedTable(format!(
                        "entry {x} out of range in row {i}"
                    )));
                }
                mul.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| mul[a * n + b] as usize;

        let id = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| at(x, y) == id && at(y, x) == id)
                    .map(|y| y as u32)
                    .ok_or(GroupError::MissingInverse { element: x })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NonAssociativeTable { a, b, c });
                    }
                }
            }
        }
        let mut g = FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            id,
            gens: Vec::new(),
        };
        match gens {
            Some(gens) => {
                if let Some(&bad) = gens.iter().find(|&&x| x >= n) {
                    return Err(GroupError::MalformedTable(format!(
                        "generator {bad} out of range"
                    )));
                }
                let generated = subgroup_closure(&g, &gens).order();
                if generated != n {
                    return Err(GroupError::GeneratorsDoNotGenerate {
                        generated,
                        order: n,
                    });
                }
                g.gens = gens;
            }
            None => g.gens = g.greedy_generators(),
        }
        Ok(g)
    }

    /// Closure of `gens` under `mul`, materialized as a table. The identity
    /// becomes element 0 and generator `i` keeps its position in the
    /// returned element list. Fails with `ClosureOverflow` past `cap`.
    pub fn from_generators<T, F>(
        name: impl Into<String>,
        identity: T,
        gens: &[T],
        mul: F,
        cap: usize,
    ) -> Result<(Self, Vec<T>), GroupError>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for s in gens {
                let y = mul(&x, s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::ClosureOverflow { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&mul(a, b)] as u32;
            }
        }
        let gen_idx: Vec<Elem> = gens.iter().map(|s| index[s]).collect();
        let g = Self::from_parts_unchecked(name, table, 0, gen_idx);
        Ok((g, elements))
    }

    /// Build from a table known to satisfy the group axioms (for example
    /// a composition table of automorphisms). Inverses are derived from
    /// the table. An empty `gens` is replaced by a greedy generating set.
    pub(crate) fn from_parts_unchecked(
        name: impl Into<String>,
        mul: Vec<u32>,
        id: Elem,
        gens: Vec<Elem>,
    ) -> Self {
        let n = (mul.len() as f64).sqrt().round() as usize;
        debug_assert_eq!(n * n, mul.len());
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let row = &mul[x * n..(x + 1) * n];
            let y = row.iter().position(|&v| v as usize == id).expect("row without identity");
            inv[x] = y as u32;
        }
        let mut g = FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            id,
            gens,
        };
        if g.gens.is_empty() {
            g.gens = g.greedy_generators();
        }
        g
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order];
        covered[self.id] = true;
        for x in 0..self.order {
            if !covered[x] {
                gens.push(x);
                for y in subgroup_closure(self, &gens).members() {
                    covered[*y] = true;
                }
            }
        }
        gens
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> Elem {
        self.id
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Row `i` of the multiplication table.
    pub fn table_row(&self, a: Elem) -> Vec<Elem> {
        (0..self.order).map(|b| self.mul(a, b)).collect()
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of the table axioms; used by tests and `catalog validate`.
    pub fn validate(&self) -> Result<(), GroupError> {
        let rows: Vec<Vec<Elem>> = self.elements().map(|a| self.table_row(a)).collect();
        Self::from_table(self.name.clone(), &rows, Some(self.gens.clone()), usize::MAX).map(|_| ())
    }
}

impl GroupOps for FiniteGroup {
    type Elem = Elem;

    fn identity(&self) -> Elem {
        self.id
    }

    fn op(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(*a, *b)
    }

    fn inverse(&self, a: &Elem) -> Elem {
        self.inv(*a)
    }

    fn pow(&self, a: &Elem, n: i64) -> Elem {
        let k = self.element_order(*a) as i64;
        let e = n.rem_euclid(k);
        (0..e).fold(self.id, |acc, _| self.mul(acc, *a))
    }
}

/// Commutator `[x, y] = x⁻¹y⁻¹xy` evaluated from the tables.
pub fn commutator(g: &FiniteGroup, x: Elem, y: Elem) -> Elem {
    g.commutator(&x, &y)
}

/// Input accepted by [`build_group`].
#[derive(Debug, Clone)]
pub enum GroupSpec {
    Catalog(String),
    Table {
        name: String,
        rows: Vec<Vec<Elem>>,
        gens: Option<Vec<Elem>>,
    },
    /// Permutation generators, each a list of cycles on points `1..`.
    Perms {
        name: String,
        gens: Vec<Vec<Vec<usize>>>,
    },
}

/// Validate and materialize a group from a catalog name, a table or a list
/// of permutation generators.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Catalog(name) => catalog_group(name, cap),
        GroupSpec::Table { name, rows, gens } => {
            FiniteGroup::from_table(name.clone(), rows, gens.clone(), cap)
        }
        GroupSpec::Perms { name, gens } => {
            let degree = gens
                .iter()
                .flatten()
                .flatten()
                .copied()
                .max()
                .unwrap_or(0);
            let perms = gens
                .iter()
                .map(|cycles| Permutation::from_cycles(degree, cycles))
                .collect::<Result<Vec<_>, _>>()?;
            let (g, _) = FiniteGroup::from_generators(
                name.clone(),
                Permutation::identity(degree),
                &perms,
                |p, q| p.then(q),
                cap,
            )?;
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: usize) -> Vec<Vec<Elem>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn table_validation_errors() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_table("bad", &rows, None, 64),
            Err(GroupError::MissingInverse { element: 1 })
        ));
        let rows = vec![vec![1, 0], vec![0, 0]];
        assert_eq!(
            FiniteGroup::from_table("bad", &rows, None, 64),
            Err(GroupError::NoIdentity)
        );
        // a Latin square with identity 0 that is not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("loop", &rows, None, 64),
            Err(GroupError::NonAssociativeTable { .. })
        ));
        assert_eq!(
            FiniteGroup::from_table("c5", &cyclic_rows(5), None, 4),
            Err(GroupError::ClosureOverflow { cap: 4 })
        );
    }

    #[test]
    fn generators_must_generate() {
        let err = FiniteGroup::from_table("c4", &cyclic_rows(4), Some(vec![2]), 64).unwrap_err();
        assert_eq!(
            err,
            GroupError::GeneratorsDoNotGenerate {
                generated: 2,
                order: 4
            }
        );
    }

    #[test]
    fn dihedral_from_two_permutations() {
        let spec = GroupSpec::Perms {
            name: "D8".into(),
            gens: vec![vec![vec![1, 2, 3, 4]], vec![vec![1, 3]]],
        };
        let g = build_group(&spec, 64).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        g.validate().unwrap();
    }

    #[test]
    fn permutation_closure_respects_cap() {
        let spec = GroupSpec::Perms {
            name: "S5".into(),
            gens: vec![vec![vec![1, 2, 3, 4, 5]], vec![vec![1, 2]]],
        };
        assert_eq!(
            build_group(&spec, 64),
            Err(GroupError::ClosureOverflow { cap: 64 })
        );
        assert_eq!(build_group(&spec, 120).unwrap().order(), 120);
    }

    #[test]
    fn commutator_basics() {
        let d8 = catalog_group("D8", 64).unwrap();
        for x in d8.elements() {
            assert_eq!(commutator(&d8, x, x), d8.id());
        }
        let c6 = catalog_group("C6", 64).unwrap();
        for x in c6.elements() {
            for y in c6.elements() {
                assert_eq!(commutator(&c6, x, y), c6.id());
            }
        }
        // rotation r and reflection s: [r, s] = r^-1 s^-1 r s = r^-2, the central rotation
        let r = d8.gens()[0];
        let s = d8.gens()[1];
        let c = commutator(&d8, r, s);
        assert_eq!(c, d8.pow(&r, 2));
        assert_eq!(d8.element_order(c), 2);
        assert!(center(&d8).contains(c));
    }

    #[test]
    fn pow_reduces_negative_exponents() {
        let c5 = catalog_group("C5", 64).unwrap();
        let x = c5.gens()[0];
        assert_eq!(c5.pow(&x, -1), c5.inv(x));
        assert_eq!(c5.pow(&x, 5), c5.id());
        assert_eq!(c5.pow(&x, -7), c5.pow(&x, 3));
    }
}
