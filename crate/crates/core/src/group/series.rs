use super::subgroup::{commutator_subgroup, normal_closure};
use super::{commutator, FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending chain starting at `G`, recorded up to (and including) the
/// first term that repeats.
#[derive(Debug, Clone)]
pub struct Series<'g> {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup<'g>>,
}

impl<'g> Series<'g> {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    pub fn last(&self) -> &Subgroup<'g> {
        self.terms.last().expect("series always contains G")
    }

    /// Number of steps until the trivial subgroup, if it is reached.
    fn length_to_trivial(&self) -> Option<usize> {
        self.last().is_trivial().then(|| self.terms.len() - 1)
    }
}

#[derive(Debug, Clone)]
pub struct DerivedSeries<'g> {
    pub series: Series<'g>,
    /// `None` when the series stalls above the trivial subgroup.
    pub derived_length: Option<usize>,
    pub is_metabelian: bool,
}

#[derive(Debug, Clone)]
pub struct LowerCentralSeries<'g> {
    pub series: Series<'g>,
    /// `None` when the group is not nilpotent.
    pub nilpotency_class: Option<usize>,
}

impl LowerCentralSeries<'_> {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

/// `G ⊇ [G,G] ⊇ [[G,G],[G,G]] ⊇ …`.
pub fn derived_series(g: &FiniteGroup) -> DerivedSeries<'_> {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let cur = terms.last().unwrap();
        if cur.is_trivial() {
            break;
        }
        let next = commutator_subgroup(cur, cur);
        if next.order() == cur.order() {
            break;
        }
        terms.push(next);
    }
    let series = Series {
        kind: SeriesKind::Derived,
        terms,
    };
    let derived_length = series.length_to_trivial();
    DerivedSeries {
        is_metabelian: matches!(derived_length, Some(l) if l <= 2),
        derived_length,
        series,
    }
}

/// `γ₁ = G`, `γᵢ₊₁ = [γᵢ, G]`. Each step closes the commutators of `γᵢ`
/// with the generators of `G` normally, which yields `[γᵢ, G]`.
pub fn lower_central_series(g: &FiniteGroup) -> LowerCentralSeries<'_> {
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let cur = terms.last().unwrap();
        if cur.is_trivial() {
            break;
        }
        let mut seed: Vec<usize> = cur
            .members()
            .iter()
            .flat_map(|&h| g.gens().iter().map(move |&s| commutator(g, h, s)))
            .collect();
        seed.sort_unstable();
        seed.dedup();
        let next = normal_closure(g, &seed);
        if next.order() == cur.order() {
            break;
        }
        terms.push(next);
    }
    let series = Series {
        kind: SeriesKind::LowerCentral,
        terms,
    };
    LowerCentralSeries {
        nilpotency_class: series.length_to_trivial(),
        series,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;

    fn group(name: &str) -> FiniteGroup {
        catalog_group(name, 64).unwrap()
    }

    #[test]
    fn derived_lengths() {
        let c = group("C6");
        let d = derived_series(&c);
        assert_eq!(d.derived_length, Some(1));
        assert!(d.is_metabelian);

        let s3 = group("S3");
        let d = derived_series(&s3);
        assert_eq!(d.derived_length, Some(2));
        assert!(d.is_metabelian);
        assert_eq!(d.series.orders(), vec![6, 3, 1]);

        let s4 = group("S4");
        let d = derived_series(&s4);
        assert_eq!(d.derived_length, Some(3));
        assert!(!d.is_metabelian);
        assert_eq!(d.series.orders(), vec![24, 12, 4, 1]);

        let c1 = group("C1");
        assert_eq!(derived_series(&c1).derived_length, Some(0));
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(lower_central_series(&group("C5")).nilpotency_class, Some(1));
        assert_eq!(lower_central_series(&group("C1")).nilpotency_class, Some(0));
        assert_eq!(lower_central_series(&group("D8")).nilpotency_class, Some(2));
        assert_eq!(lower_central_series(&group("D16")).nilpotency_class, Some(3));
        assert_eq!(lower_central_series(&group("Q8")).nilpotency_class, Some(2));
        assert_eq!(lower_central_series(&group("Heis27")).nilpotency_class, Some(2));
        let s3 = group("S3");
        let l = lower_central_series(&s3);
        assert_eq!(l.nilpotency_class, None);
        assert_eq!(l.series.orders(), vec![6, 3]);
    }

    /// γᵢ₊₁ from all pairs (h, g) must agree with the generator shortcut.
    #[test]
    fn generator_shortcut_matches_full_commutator_subgroup() {
        for name in ["D16", "S4", "A4", "Frob20", "Heis27", "Q8"] {
            let g = group(name);
            let lcs = lower_central_series(&g);
            let whole = Subgroup::whole(&g);
            for w in lcs.series.terms.windows(2) {
                let full = commutator_subgroup(&w[0], &whole);
                assert_eq!(full.members(), w[1].members(), "{name}");
            }
        }
    }
}
