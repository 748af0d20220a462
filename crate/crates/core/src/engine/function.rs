use crate::group::{Elem, FiniteGroup};

/// A total map `G → G`, stored as its image array.
///
/// Functions carry no reference to their group; every operation takes the
/// group explicitly. Ordering is lexicographic on the image array, which is
/// the canonical order used for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupFunction {
    image: Vec<u16>,
}

impl GroupFunction {
    pub fn from_images(image: Vec<Elem>) -> Self {
        GroupFunction {
            image: image.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub(crate) fn from_raw(image: Vec<u16>) -> Self {
        GroupFunction { image }
    }

    pub fn tabulate(g: &FiniteGroup, f: impl Fn(Elem) -> Elem) -> Self {
        GroupFunction {
            image: g.elements().map(|x| f(x) as u16).collect(),
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self::tabulate(g, |x| x)
    }

    /// The constant map onto the identity element.
    pub fn constant_identity(g: &FiniteGroup) -> Self {
        Self::tabulate(g, |_| g.id())
    }

    pub fn raw(&self) -> &[u16] {
        &self.image
    }

    pub fn images(&self) -> Vec<Elem> {
        self.image.iter().map(|&x| x as Elem).collect()
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x] as Elem
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &GroupFunction) -> GroupFunction {
        GroupFunction {
            image: other.image.iter().map(|&y| self.image[y as usize]).collect(),
        }
    }

    /// `x ↦ self(x)·other(x)`.
    pub fn pointwise_mul(&self, g: &FiniteGroup, other: &GroupFunction) -> GroupFunction {
        GroupFunction {
            image: self
                .image
                .iter()
                .zip(&other.image)
                .map(|(&a, &b)| g.mul(a as Elem, b as Elem) as u16)
                .collect(),
        }
    }

    /// `x ↦ self(x)⁻¹`.
    pub fn pointwise_inv(&self, g: &FiniteGroup) -> GroupFunction {
        GroupFunction {
            image: self.image.iter().map(|&a| g.inv(a as Elem) as u16).collect(),
        }
    }

    pub fn fixes_identity(&self, g: &FiniteGroup) -> bool {
        self.apply(g.id()) == g.id()
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Homomorphism test through the generators: `f(xs) = f(x)f(s)` for all
    /// `x` and generators `s` implies `f(xy) = f(x)f(y)` for all `x, y`.
    pub fn is_homomorphism(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|x| {
            g.gens()
                .iter()
                .all(|&s| self.apply(g.mul(x, s)) == g.mul(self.apply(x), self.apply(s)))
        })
    }

    /// Exhaustive pair check of the homomorphism property.
    pub fn is_homomorphism_exhaustive(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|x| {
            g.elements()
                .all(|y| self.apply(g.mul(x, y)) == g.mul(self.apply(x), self.apply(y)))
        })
    }

    pub fn is_automorphism(&self, g: &FiniteGroup) -> bool {
        self.is_bijective() && self.is_homomorphism(g)
    }

    /// Compositional inverse of a bijection.
    pub fn inverse(&self) -> GroupFunction {
        let mut inv = vec![0u16; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        GroupFunction { image: inv }
    }

    pub fn is_power_map(&self, g: &FiniteGroup) -> bool {
        let n = g.order() as i64;
        (0..n.max(1)).any(|k| g.elements().all(|x| self.apply(x) == crate::ops::GroupOps::pow(g, &x, k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;

    #[test]
    fn homomorphism_shortcut_agrees_with_exhaustive_check() {
        let g = catalog_group("S3", 64).unwrap();
        // every map fixing the identity whose images lie in {id, a, b} for a few shapes
        let fs = [
            GroupFunction::identity(&g),
            GroupFunction::constant_identity(&g),
            GroupFunction::tabulate(&g, |x| g.inv(x)),
            GroupFunction::tabulate(&g, |x| g.mul(x, x)),
            GroupFunction::tabulate(&g, |x| g.mul(g.mul(g.inv(1), x), 1)),
        ];
        for f in &fs {
            assert_eq!(f.is_homomorphism(&g), f.is_homomorphism_exhaustive(&g));
        }
        assert!(fs[0].is_automorphism(&g));
        assert!(!fs[2].is_homomorphism(&g));
        assert!(fs[4].is_automorphism(&g));
    }

    #[test]
    fn compose_and_inverse() {
        let g = catalog_group("D8", 64).unwrap();
        let f = GroupFunction::tabulate(&g, |x| g.mul(g.mul(g.inv(1), x), 1));
        let h = GroupFunction::tabulate(&g, |x| g.mul(g.mul(g.inv(2), x), 2));
        let fh = f.compose(&h);
        for x in g.elements() {
            assert_eq!(fh.apply(x), f.apply(h.apply(x)));
        }
        assert_eq!(f.compose(&f.inverse()), GroupFunction::identity(&g));
    }
}
