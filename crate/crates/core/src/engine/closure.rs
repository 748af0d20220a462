//! The group of polynomial functions `G → G` under pointwise product.
//!
//! Every function `x ↦ ∏ vᵢ⁻¹x^{εᵢ}vᵢ` is a pointwise product of the seed
//! maps `x ↦ v⁻¹xv` and `x ↦ x⁻¹`, so the polynomial functions are exactly
//! the submonoid of `G^G` these seeds generate. `G^G` is finite, so that
//! submonoid is a subgroup.
//!
//! Two exact representations are provided: explicit enumeration (bounded by
//! a budget) and a stabilizer chain, which answers membership and order
//! questions without listing the elements.

use num_bigint::BigUint;
use rayon::prelude::*;
use rustc_hash::FxHashSet;

use super::{EngineError, GroupFunction};
use crate::group::{Elem, FiniteGroup};

/// `{x ↦ v⁻¹xv : v ∈ G} ∪ {x ↦ x⁻¹}`, deduplicated and sorted.
pub fn polynomial_seeds(g: &FiniteGroup) -> Vec<GroupFunction> {
    let mut seeds: Vec<GroupFunction> = g
        .elements()
        .map(|v| GroupFunction::tabulate(g, |x| g.mul(g.mul(g.inv(v), x), v)))
        .chain(std::iter::once(GroupFunction::tabulate(g, |x| g.inv(x))))
        .collect();
    seeds.sort_unstable();
    seeds.dedup();
    seeds
}

/// Enumerate every polynomial function of `g`, sorted canonically.
///
/// Breadth-first fixed-point iteration from the constant-identity map; each
/// frontier is expanded in parallel and merged in sorted order, so the
/// result does not depend on the number of workers.
pub fn polynomial_function_closure(
    g: &FiniteGroup,
    budget: usize,
) -> Result<Vec<GroupFunction>, EngineError> {
    let seeds = polynomial_seeds(g);
    let start = GroupFunction::constant_identity(g);
    let mut set: FxHashSet<GroupFunction> = FxHashSet::default();
    set.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next: Vec<GroupFunction> = frontier
            .par_iter()
            .flat_map_iter(|f| seeds.iter().map(move |s| f.pointwise_mul(g, s)))
            .filter(|h| !set.contains(h))
            .collect();
        next.par_sort_unstable();
        next.dedup();
        let total = set.len() + next.len();
        if total > budget {
            return Err(EngineError::ClosureBudgetExceeded {
                budget,
                partial: total,
            });
        }
        set.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out: Vec<GroupFunction> = set.into_iter().collect();
    out.par_sort_unstable();
    Ok(out)
}

struct Level {
    coord: Elem,
    strong_gens: Vec<GroupFunction>,
    /// `transversal[v]` maps `coord` to `v`, for `v` in the level's orbit.
    transversal: Vec<Option<GroupFunction>>,
}

/// Stabilizer chain for a subgroup of `G^G` under pointwise product.
///
/// Level `i` is the subgroup fixing coordinates `0..i` at the identity; its
/// orbit is the set of values its members take at coordinate `i`.
pub struct FunctionChain<'g> {
    group: &'g FiniteGroup,
    one: GroupFunction,
    levels: Vec<Level>,
}

impl<'g> FunctionChain<'g> {
    /// Schreier–Sims over the given generators.
    pub fn new(g: &'g FiniteGroup, gens: &[GroupFunction]) -> Self {
        let one = GroupFunction::constant_identity(g);
        let levels = g
            .elements()
            .map(|coord| {
                let mut transversal = vec![None; g.order()];
                transversal[g.id()] = Some(one.clone());
                Level {
                    coord,
                    strong_gens: Vec::new(),
                    transversal,
                }
            })
            .collect();
        let mut chain = FunctionChain {
            group: g,
            one,
            levels,
        };
        for s in gens {
            let (m, r) = chain.sift(s.clone(), 0);
            if m < chain.levels.len() {
                chain.add_strong_gen(r, 0, m);
            }
        }
        chain.complete();
        chain
    }

    /// The polynomial functions of `g`.
    pub fn polynomial_functions(g: &'g FiniteGroup) -> Self {
        Self::new(g, &polynomial_seeds(g))
    }

    fn add_strong_gen(&mut self, r: GroupFunction, from: usize, to: usize) {
        for k in from..=to {
            self.levels[k].strong_gens.push(r.clone());
            self.rebuild_orbit(k);
        }
    }

    fn rebuild_orbit(&mut self, k: usize) {
        let g = self.group;
        let level = &mut self.levels[k];
        let mut queue: Vec<Elem> = level
            .transversal
            .iter()
            .enumerate()
            .filter_map(|(v, u)| u.as_ref().map(|_| v))
            .collect();
        while let Some(v) = queue.pop() {
            for s in &level.strong_gens {
                let w = g.mul(v, s.apply(level.coord));
                if level.transversal[w].is_none() {
                    let u = level.transversal[v].as_ref().unwrap().pointwise_mul(g, s);
                    level.transversal[w] = Some(u);
                    queue.push(w);
                }
            }
        }
    }

    /// Strip `h` through levels `from..`; returns the first level where it
    /// leaves the orbit (or the number of levels) and the residue.
    fn sift(&self, mut h: GroupFunction, from: usize) -> (usize, GroupFunction) {
        let g = self.group;
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let v = h.apply(level.coord);
            match &level.transversal[v] {
                Some(u) => {
                    if v != g.id() {
                        h = u.pointwise_inv(g).pointwise_mul(g, &h);
                    }
                }
                None => return (j, h),
            }
        }
        (self.levels.len(), h)
    }

    fn complete(&mut self) {
        let g = self.group;
        let depth = self.levels.len();
        let mut i = depth as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit: Vec<Elem> = (0..g.order())
                .filter(|&v| self.levels[lvl].transversal[v].is_some())
                .collect();
            let gens = self.levels[lvl].strong_gens.clone();
            let coord = self.levels[lvl].coord;
            for &v in &orbit {
                for s in &gens {
                    let w = g.mul(v, s.apply(coord));
                    let uv = self.levels[lvl].transversal[v].as_ref().unwrap();
                    let uw = self.levels[lvl].transversal[w].as_ref().unwrap();
                    let schreier = uv.pointwise_mul(g, s).pointwise_mul(g, &uw.pointwise_inv(g));
                    let (m, r) = self.sift(schreier, lvl + 1);
                    if m < depth {
                        self.add_strong_gen(r, lvl + 1, m);
                        i = m as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn contains(&self, h: &GroupFunction) -> bool {
        let (m, r) = self.sift(h.clone(), 0);
        m == self.levels.len() && r == self.one
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|u| u.is_some()).count())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, s| acc * BigUint::from(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;
    use crate::ops::GroupOps;

    #[test]
    fn trivial_and_cyclic_closures() {
        let c1 = catalog_group("C1", 64).unwrap();
        assert_eq!(polynomial_function_closure(&c1, 10).unwrap().len(), 1);
        for n in 2..=12 {
            let c = catalog_group(&format!("C{n}"), 64).unwrap();
            let fs = polynomial_function_closure(&c, 1000).unwrap();
            assert_eq!(fs.len(), n);
            let mut powers: Vec<GroupFunction> = (0..n as i64)
                .map(|k| GroupFunction::tabulate(&c, |y| c.pow(&y, k)))
                .collect();
            powers.sort();
            assert_eq!(fs, powers);
            assert!(fs.iter().all(|f| f.fixes_identity(&c)));
        }
    }

    #[test]
    fn budget_is_an_error_not_a_truncation() {
        let s3 = catalog_group("S3", 64).unwrap();
        let err = polynomial_function_closure(&s3, 20).unwrap_err();
        assert!(matches!(err, EngineError::ClosureBudgetExceeded { budget: 20, .. }));
    }

    #[test]
    fn closure_is_closed_under_pointwise_product() {
        let s3 = catalog_group("S3", 64).unwrap();
        let fs = polynomial_function_closure(&s3, 1000).unwrap();
        let set: FxHashSet<_> = fs.iter().cloned().collect();
        for f in &fs {
            assert!(f.fixes_identity(&s3));
            for h in &fs {
                assert!(set.contains(&f.pointwise_mul(&s3, h)));
            }
        }
    }

    #[test]
    fn chain_agrees_with_enumeration() {
        for name in ["C1", "C6", "S3", "D8", "Q8", "D10", "A4", "D16", "C2xC4"] {
            let g = catalog_group(name, 64).unwrap();
            let fs = polynomial_function_closure(&g, 200_000).unwrap();
            let chain = FunctionChain::polynomial_functions(&g);
            assert_eq!(chain.order(), BigUint::from(fs.len()), "{name}");
            assert!(fs.iter().all(|f| chain.contains(f)), "{name}");
            // a function outside the closure: swap two non-identity images
            if g.order() > 2 {
                let mut img = GroupFunction::identity(&g).images();
                img.swap(1, 2);
                let swapped = GroupFunction::from_images(img);
                assert_eq!(chain.contains(&swapped), fs.binary_search(&swapped).is_ok());
            }
        }
    }
}
