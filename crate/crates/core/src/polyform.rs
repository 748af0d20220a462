//! Polynomial forms `x ↦ (v₁⁻¹x^{ε₁}v₁)…(vₘ⁻¹x^{εₘ}vₘ)`.

use serde::{Deserialize, Serialize};

use crate::group::{Elem, FiniteGroup};
use crate::ops::GroupOps;

/// Ordered `(conjugator, exponent)` factors. The empty form is the constant
/// map onto the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialForm<E = Elem> {
    pub factors: Vec<(E, i64)>,
}

impl<E> Default for PolynomialForm<E> {
    fn default() -> Self {
        PolynomialForm {
            factors: Vec::new(),
        }
    }
}

impl<E: Clone + PartialEq> PolynomialForm<E> {
    pub fn new(factors: Vec<(E, i64)>) -> Self {
        PolynomialForm { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Evaluate left to right in any group.
    pub fn eval<G: GroupOps<Elem = E>>(&self, g: &G, x: &E) -> E {
        self.factors.iter().fold(g.identity(), |acc, (v, e)| {
            let term = g.conjugate(&g.pow(x, *e), v);
            g.op(&acc, &term)
        })
    }

    /// Merge neighbouring factors with equal conjugators and drop zero
    /// exponents, repeating until nothing changes. The denoted function is
    /// unchanged because `v⁻¹xᵃv·v⁻¹xᵇv = v⁻¹xᵃ⁺ᵇv`.
    pub fn simplified(&self) -> Self {
        let mut out: Vec<(E, i64)> = Vec::with_capacity(self.factors.len());
        for (v, e) in &self.factors {
            if *e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((w, f)) if w == v => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((v.clone(), *e)),
            }
        }
        PolynomialForm { factors: out }
    }

    pub fn map_conjugators<F, T>(&self, f: F) -> PolynomialForm<T>
    where
        F: Fn(&E) -> T,
    {
        PolynomialForm {
            factors: self.factors.iter().map(|(v, e)| (f(v), *e)).collect(),
        }
    }
}

/// `∏ᵢ vᵢ⁻¹ x^{εᵢ} vᵢ` in a finite group.
pub fn eval_poly_form(g: &FiniteGroup, form: &PolynomialForm, x: Elem) -> Elem {
    form.eval(g, &x)
}

pub fn exponent_sum<E: Clone + PartialEq>(form: &PolynomialForm<E>) -> i64 {
    form.exponent_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_group;

    #[test]
    fn evaluation_examples() {
        let s3 = catalog_group("S3", 64).unwrap();
        let id = s3.id();
        let ident = PolynomialForm::new(vec![(id, 1)]);
        for x in s3.elements() {
            assert_eq!(eval_poly_form(&s3, &ident, x), x);
            for v in s3.elements() {
                let inner = PolynomialForm::new(vec![(v, 1)]);
                let expect = s3.mul(s3.mul(s3.inv(v), x), v);
                assert_eq!(eval_poly_form(&s3, &inner, x), expect);
            }
        }
        let c7 = catalog_group("C7", 64).unwrap();
        let inversion = PolynomialForm::new(vec![(c7.id(), -1)]);
        for x in c7.elements() {
            assert_eq!(eval_poly_form(&c7, &inversion, x), c7.inv(x));
        }
        let empty = PolynomialForm::<Elem>::default();
        assert!(s3.elements().all(|x| eval_poly_form(&s3, &empty, x) == id));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(exponent_sum(&PolynomialForm::new(vec![(0usize, 1)])), 1);
        assert_eq!(exponent_sum(&PolynomialForm::<Elem>::default()), 0);
        assert_eq!(exponent_sum(&PolynomialForm::new(vec![(3usize, 2), (5, -3)])), -1);
    }

    #[test]
    fn simplification_preserves_the_function() {
        let g = catalog_group("D12", 64).unwrap();
        let form = PolynomialForm::new(vec![(0, 1), (0, -1), (3, 2), (3, 0), (3, 1), (5, 0), (2, 4)]);
        let s = form.simplified();
        assert_eq!(s.factors, vec![(3, 3), (2, 4)]);
        for x in g.elements() {
            assert_eq!(eval_poly_form(&g, &form, x), eval_poly_form(&g, &s, x));
        }
    }
}
