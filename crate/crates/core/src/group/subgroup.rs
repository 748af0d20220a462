use super::{Elem, FiniteGroup, GroupError};

/// A subgroup of a finite group, stored as a sorted member list plus a
/// membership mask over the parent's elements.
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl<'g> Subgroup<'g> {
    fn from_mask(parent: &'g FiniteGroup, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup {
            parent,
            members,
            mask,
        }
    }

    pub fn whole(parent: &'g FiniteGroup) -> Self {
        Self::from_mask(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[parent.id()] = true;
        Self::from_mask(parent, mask)
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.parent;
        self.members.iter().all(|&a| {
            self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a))
        })
    }

    /// First `(x, v)` with `v⁻¹xv` outside the subgroup, if any.
    pub fn normality_witness(&self) -> Option<(Elem, Elem)> {
        let g = self.parent;
        for &x in &self.members {
            for &v in g.gens() {
                let c = g.mul(g.mul(g.inv(v), x), v);
                if !self.contains(c) {
                    return Some((x, v));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure<'g>(g: &'g FiniteGroup, seed: &[Elem]) -> Subgroup<'g> {
    let mut gens: Vec<Elem> = seed.iter().copied().filter(|&s| s != g.id()).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut mask = vec![false; g.order()];
    mask[g.id()] = true;
    let mut queue = vec![g.id()];
    while let Some(x) = queue.pop() {
        for &s in &gens {
            for y in [g.mul(x, s), g.mul(x, g.inv(s))] {
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    Subgroup::from_mask(g, mask)
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure<'g>(g: &'g FiniteGroup, seed: &[Elem]) -> Subgroup<'g> {
    // close the seed under conjugation by generators, then take the
    // subgroup it generates; a conjugation-stable set generates a normal
    // subgroup
    let mut mask = vec![false; g.order()];
    let mut queue: Vec<Elem> = Vec::new();
    for &s in seed {
        if !mask[s] {
            mask[s] = true;
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        for &v in g.gens() {
            let c = g.mul(g.mul(g.inv(v), x), v);
            if !mask[c] {
                mask[c] = true;
                queue.push(c);
            }
        }
    }
    let conj: Vec<Elem> = (0..g.order()).filter(|&i| mask[i]).collect();
    subgroup_closure(g, &conj)
}

pub fn center(g: &FiniteGroup) -> Subgroup<'_> {
    let mask = g
        .elements()
        .map(|z| g.gens().iter().all(|&x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_mask(g, mask)
}

/// `[H, K]`, the subgroup generated by all `[h, k]`.
pub fn commutator_subgroup<'g>(h: &Subgroup<'g>, k: &Subgroup<'g>) -> Subgroup<'g> {
    let g = h.parent();
    let mut seen = vec![false; g.order()];
    let mut seed = Vec::new();
    for &a in h.members() {
        for &b in k.members() {
            let c = super::commutator(g, a, b);
            if !seen[c] {
                seen[c] = true;
                seed.push(c);
            }
        }
    }
    subgroup_closure(g, &seed)
}

/// `G / N` with cosets ordered by their least element; the coset of the
/// identity is element 0.
pub fn quotient_group(g: &FiniteGroup, n: &Subgroup<'_>) -> Result<FiniteGroup, GroupError> {
    if let Some((x, v)) = n.normality_witness() {
        return Err(GroupError::NotNormal {
            element: x,
            by: v,
            conjugate: g.mul(g.mul(g.inv(v), x), v),
        });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    // the identity coset must come first
    let order: Vec<Elem> = std::iter::once(g.id())
        .chain(g.elements().filter(|&x| x != g.id()))
        .collect();
    for x in order {
        if coset_of[x] == usize::MAX {
            let idx = reps.len();
            reps.push(x);
            for &m in n.members() {
                coset_of[g.mul(x, m)] = idx;
            }
        }
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let mut gens: Vec<Elem> = g.gens().iter().map(|&s| coset_of[s]).filter(|&c| c != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let name = format!("{}/N{}", g.name(), n.order());
    Ok(FiniteGroup::from_parts_unchecked(name, table, 0, gens))
}
