//! Group operations shared by the finite-table groups and the symbolic
//! free metabelian groups.
//!
//! Commutators are left-normed throughout: `[x, y] = x⁻¹y⁻¹xy` and
//! `[x, y, z] = [[x, y], z]`. Conjugation is `x^v = v⁻¹xv`.

/// A group whose elements can be multiplied, inverted and compared.
pub trait GroupOps {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    /// `a^n` for any integer `n`, by repeated squaring.
    fn pow(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        let base = if n < 0 { self.inverse(a) } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.op(&sq, &sq);
            }
        }
        acc
    }

    /// `v⁻¹ x v`.
    fn conjugate(&self, x: &Self::Elem, v: &Self::Elem) -> Self::Elem {
        let t = self.op(&self.inverse(v), x);
        self.op(&t, v)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    fn commutator(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let xi = self.inverse(x);
        let yi = self.inverse(y);
        let t = self.op(&xi, &yi);
        let t = self.op(&t, x);
        self.op(&t, y)
    }

    /// Left-normed commutator `[x1, x2, ..., xn]`. A single entry is
    /// returned unchanged; an empty slice yields the identity.
    fn commutator_seq(&self, xs: &[Self::Elem]) -> Self::Elem {
        let mut it = xs.iter();
        let Some(first) = it.next() else {
            return self.identity();
        };
        it.fold(first.clone(), |acc, y| self.commutator(&acc, y))
    }

    /// Product of a sequence, left to right.
    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.identity(), |acc, x| self.op(&acc, x))
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}
