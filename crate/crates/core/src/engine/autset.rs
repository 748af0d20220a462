use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::closure::FunctionChain;
use super::{EngineError, GroupFunction};
use crate::group::{Elem, FiniteGroup};

/// A set of automorphisms of `parent` closed under composition, together
/// with its composition table as a [`FiniteGroup`].
///
/// Element `i` of `composition_group` is `maps[i]`, and its product is
/// `i * j = maps[i] ∘ maps[j]`. Maps are kept in canonical (lexicographic
/// image) order.
#[derive(Debug, Clone)]
pub struct AutomorphismSet<'g> {
    parent: &'g FiniteGroup,
    maps: Vec<GroupFunction>,
    composition_group: FiniteGroup,
}

impl<'g> AutomorphismSet<'g> {
    /// Wrap a set of automorphisms that must already be closed under
    /// composition.
    pub fn from_maps(
        parent: &'g FiniteGroup,
        label: &str,
        mut maps: Vec<GroupFunction>,
    ) -> Result<Self, EngineError> {
        maps.sort_unstable();
        maps.dedup();
        if let Some(bad) = maps.iter().position(|f| !f.is_automorphism(parent)) {
            return Err(EngineError::NotAnAutomorphism {
                set: label.to_string(),
                index: bad,
            });
        }
        let index: FxHashMap<&GroupFunction, usize> =
            maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let identity = GroupFunction::identity(parent);
        let id = *index
            .get(&identity)
            .ok_or_else(|| EngineError::NotClosedUnderComposition(label.to_string()))?;
        let n = maps.len();
        let rows: Vec<Option<Vec<u32>>> = maps
            .par_iter()
            .map(|f| {
                maps.iter()
                    .map(|g| index.get(&f.compose(g)).map(|&k| k as u32))
                    .collect()
            })
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend(row.ok_or_else(|| EngineError::NotClosedUnderComposition(label.to_string()))?);
        }
        let composition_group =
            FiniteGroup::from_parts_unchecked(format!("{label}({})", parent.name()), table, id, Vec::new());
        Ok(AutomorphismSet {
            parent,
            maps,
            composition_group,
        })
    }

    /// The subgroup of `A(parent)` generated by `gens` under composition.
    pub fn generate(
        parent: &'g FiniteGroup,
        label: &str,
        gens: &[GroupFunction],
    ) -> Result<Self, EngineError> {
        let identity = GroupFunction::identity(parent);
        let mut seen: FxHashMap<GroupFunction, ()> = FxHashMap::default();
        seen.insert(identity.clone(), ());
        let mut queue = vec![identity];
        while let Some(f) = queue.pop() {
            for s in gens {
                let h = f.compose(s);
                if !seen.contains_key(&h) {
                    seen.insert(h.clone(), ());
                    queue.push(h);
                }
            }
        }
        Self::from_maps(parent, label, seen.into_keys().collect())
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn maps(&self) -> &[GroupFunction] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn composition_group(&self) -> &FiniteGroup {
        &self.composition_group
    }

    pub fn index_of(&self, f: &GroupFunction) -> Option<Elem> {
        self.maps.binary_search(f).ok()
    }

    pub fn contains(&self, f: &GroupFunction) -> bool {
        self.index_of(f).is_some()
    }

    pub fn is_subset_of(&self, other: &AutomorphismSet<'_>) -> bool {
        self.maps.iter().all(|f| other.contains(f))
    }
}

/// `I(G) = {x ↦ v⁻¹xv}`.
pub fn inner_automorphisms(g: &FiniteGroup) -> Result<AutomorphismSet<'_>, EngineError> {
    let maps = g
        .elements()
        .map(|v| GroupFunction::tabulate(g, |x| g.mul(g.mul(g.inv(v), x), v)))
        .collect();
    AutomorphismSet::from_maps(g, "I", maps)
}

/// Extend an assignment of generator images to a map on all of `G` by
/// walking the Cayley graph; `None` if the assignment is inconsistent,
/// i.e. does not define a homomorphism.
fn extend_generator_images(g: &FiniteGroup, images: &[Elem]) -> Option<GroupFunction> {
    const UNSET: u16 = u16::MAX;
    let mut img = vec![UNSET; g.order()];
    img[g.id()] = g.id() as u16;
    let mut queue = vec![g.id()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = img[x] as Elem;
        for (&s, &t) in g.gens().iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t) as u16;
            if img[y] == UNSET {
                img[y] = fy;
                queue.push(y);
            } else if img[y] != fy {
                return None;
            }
        }
    }
    Some(GroupFunction::from_raw(img))
}

/// `A(G)` by exhaustive search over generator images of matching order.
pub fn automorphism_group(
    g: &FiniteGroup,
    search_budget: usize,
) -> Result<AutomorphismSet<'_>, EngineError> {
    let candidates: Vec<Vec<Elem>> = g
        .gens()
        .iter()
        .map(|&s| {
            let k = g.element_order(s);
            g.elements().filter(|&x| g.element_order(x) == k).collect()
        })
        .collect();
    let total = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .filter(|&t| t <= search_budget)
        .ok_or(EngineError::SearchBudgetExceeded {
            budget: search_budget,
        })?;
    let maps: Vec<GroupFunction> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let images: Vec<Elem> = candidates
                .iter()
                .map(|c| {
                    let x = c[code % c.len()];
                    code /= c.len();
                    x
                })
                .collect();
            extend_generator_images(g, &images).filter(GroupFunction::is_bijective)
        })
        .collect();
    AutomorphismSet::from_maps(g, "A", maps)
}

/// `P₀(G)`: the automorphisms that are polynomial functions.
///
/// Membership in the polynomial-function group is decided by its
/// stabilizer chain; the result must be closed under composition for
/// finite `G`, and `NotClosedUnderComposition` is raised otherwise.
pub fn polynomial_automorphisms<'g>(
    g: &'g FiniteGroup,
    aut: &AutomorphismSet<'g>,
    chain: &FunctionChain<'g>,
) -> Result<AutomorphismSet<'g>, EngineError> {
    let maps: Vec<GroupFunction> = aut
        .maps()
        .par_iter()
        .filter(|f| chain.contains(f))
        .cloned()
        .collect();
    AutomorphismSet::from_maps(g, "P0", maps)
}

/// `P₀(G)` from an explicit enumeration of the polynomial functions.
pub fn polynomial_automorphisms_from_closure<'g>(
    g: &'g FiniteGroup,
    closure: &[GroupFunction],
) -> Result<AutomorphismSet<'g>, EngineError> {
    let maps = closure
        .par_iter()
        .filter(|f| f.is_automorphism(g))
        .cloned()
        .collect();
    AutomorphismSet::from_maps(g, "P0", maps)
}

/// `P(G) = ⟨P₀(G)⟩`.
pub fn generate_p<'g>(
    g: &'g FiniteGroup,
    p0: &AutomorphismSet<'g>,
) -> Result<AutomorphismSet<'g>, EngineError> {
    AutomorphismSet::generate(g, "P", p0.maps())
}
