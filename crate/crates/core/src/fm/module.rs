//! The derived subgroup of the rank 2 group as a cyclic module over
//! `ℤ[x^±1, y^±1]` generated by `[a, b]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{FMElement, FmError, LaurentPoly};
use crate::fm::ia::canonical_preimage;
use crate::fm::FreeMetabelian;
use crate::ops::GroupOps;

fn y_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms(2, [(vec![0, 1], 1), (vec![0, 0], -1)])
}

fn one_minus_x() -> LaurentPoly {
    LaurentPoly::from_terms(2, [(vec![0, 0], 1), (vec![1, 0], -1)])
}

/// `c(p)`: fringe `(p·(y − 1), p·(1 − x))`.
pub fn module_to_derived(p: &LaurentPoly) -> Result<FMElement, FmError> {
    if p.rank() != 2 {
        return Err(FmError::UnsupportedRank(p.rank()));
    }
    Ok(FMElement::from_parts_unchecked(
        vec![0, 0],
        vec![p * &y_minus_one(), p * &one_minus_x()],
    ))
}

/// The `p` with `e = c(p)`.
pub fn derived_to_module(e: &FMElement) -> Result<LaurentPoly, FmError> {
    if e.rank() != 2 {
        return Err(FmError::UnsupportedRank(e.rank()));
    }
    if !e.is_derived() {
        return Err(FmError::NotDerived);
    }
    let f = e.fringe();
    let p0 = f[0]
        .div_var_minus_one(1)
        .ok_or_else(|| FmError::ExactDivisionFailed("first coordinate by y - 1".into()))?;
    let p1 = -&f[1]
        .div_var_minus_one(0)
        .ok_or_else(|| FmError::ExactDivisionFailed("second coordinate by 1 - x".into()))?;
    if p0 != p1 {
        return Err(FmError::ExactDivisionFailed(
            "coordinates give different quotients".into(),
        ));
    }
    Ok(p0)
}

/// `p = α + Σ c_m·(m − 1)` over the non-constant monomials `m` of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedDecomposition {
    pub alpha: BigInt,
    pub terms: Vec<(Vec<i64>, BigInt)>,
}

pub fn decompose_derived(p: &LaurentPoly) -> DerivedDecomposition {
    DerivedDecomposition {
        alpha: p.augmentation(),
        terms: p
            .terms()
            .filter(|(e, _)| e.iter().any(|&x| x != 0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect(),
    }
}

impl DerivedDecomposition {
    /// `α + Σ c_m·(m − 1)` as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        let one = LaurentPoly::one(2);
        let mut p = one.scale(&self.alpha);
        for (m, c) in &self.terms {
            let t = &LaurentPoly::monomial(m.clone(), c.clone()) - &one.scale(c);
            p = &p + &t;
        }
        p
    }
}

/// `[a,b]^α · ∏ [a,b,u_m]^{c_m}` computed by group multiplication, with
/// `u_m` the canonical preimage of `m`.
pub fn recompose_derived(d: &DerivedDecomposition) -> Result<FMElement, FmError> {
    let g = FreeMetabelian::new(2)?;
    let (a, b) = (g.generator(0), g.generator(1));
    let ab = g.commutator(&a, &b);
    let exp = |c: &BigInt| {
        i64::try_from(c).map_err(|_| FmError::CoefficientOverflow(c.to_string()))
    };
    let mut acc = g.pow(&ab, exp(&d.alpha)?);
    for (m, c) in &d.terms {
        if c.is_zero() {
            continue;
        }
        let u = canonical_preimage(m)?;
        let t = g.commutator(&ab, &u);
        acc = g.op(&acc, &g.pow(&t, exp(c)?));
    }
    Ok(acc)
}

/// `(t, p)` with `e = a^t₀ b^t₁ · c(p)`.
pub fn rank2_normal_form(e: &FMElement) -> Result<(Vec<i64>, LaurentPoly), FmError> {
    if e.rank() != 2 {
        return Err(FmError::UnsupportedRank(e.rank()));
    }
    let g = FreeMetabelian::new(2)?;
    let base = canonical_preimage(e.tvec())?;
    let p = derived_to_module(&g.op(&g.inverse(&base), e))?;
    Ok((e.tvec().to_vec(), p))
}

/// Readable rank 2 form such as `a^2 b^-1 c(1 - x)`, where `c(1) = [a,b]`.
pub fn render_rank2(e: &FMElement) -> Result<String, FmError> {
    let (t, p) = rank2_normal_form(e)?;
    let mut parts = Vec::new();
    for (letter, k) in ["a", "b"].iter().zip(&t) {
        match k {
            0 => {}
            1 => parts.push(letter.to_string()),
            k => parts.push(format!("{letter}^{k}")),
        }
    }
    if !p.is_zero() {
        parts.push(format!("c({p})"));
    }
    Ok(if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fm::fm_generator;

    fn p2(terms: &[([i64; 2], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn commutator_is_module_generator() {
        let g = FreeMetabelian::new(2).unwrap();
        let (a, b) = (g.generator(0), g.generator(1));
        let ab = g.commutator(&a, &b);
        assert_eq!(derived_to_module(&ab).unwrap(), LaurentPoly::one(2));
        assert_eq!(module_to_derived(&LaurentPoly::one(2)).unwrap(), ab);
        let conj = g.conjugate(&ab, &a);
        assert_eq!(derived_to_module(&conj).unwrap(), LaurentPoly::var(2, 0));
        let u = g.op(&a, &b);
        let abu = g.commutator(&ab, &u);
        assert_eq!(derived_to_module(&abu).unwrap(), p2(&[([1, 1], 1), ([0, 0], -1)]));
    }

    #[test]
    fn errors() {
        assert_eq!(derived_to_module(&fm_generator(2, 0).unwrap()), Err(FmError::NotDerived));
        assert_eq!(
            derived_to_module(&FMElement::identity(3)),
            Err(FmError::UnsupportedRank(3))
        );
        // (0, (1, 0)) fails the membership identity and the division
        let bogus = FMElement::from_parts_unchecked(vec![0, 0], vec![LaurentPoly::one(2), LaurentPoly::zero(2)]);
        assert!(matches!(derived_to_module(&bogus), Err(FmError::ExactDivisionFailed(_))));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_derived(&p2(&[([0, 0], 5)]));
        assert_eq!(d.alpha, BigInt::from(5));
        assert!(d.terms.is_empty());
        let d = decompose_derived(&LaurentPoly::var(2, 0));
        assert_eq!(d.alpha, BigInt::from(1));
        assert_eq!(d.terms, vec![(vec![1, 0], BigInt::from(1))]);
        let p = p2(&[([1, 1], 2), ([0, 0], -3)]);
        let d = decompose_derived(&p);
        assert_eq!(d.alpha, BigInt::from(-1));
        assert_eq!(d.terms, vec![(vec![1, 1], BigInt::from(2))]);
        assert_eq!(d.to_poly(), p);
        assert_eq!(recompose_derived(&d).unwrap(), module_to_derived(&p).unwrap());
    }

    #[test]
    fn rendering() {
        let g = FreeMetabelian::new(2).unwrap();
        let (a, b) = (g.generator(0), g.generator(1));
        assert_eq!(render_rank2(&g.identity()).unwrap(), "1");
        assert_eq!(render_rank2(&g.commutator(&a, &b)).unwrap(), "c(1)");
        // ba = ab[b,a] = ab c(1)^-1
        assert_eq!(render_rank2(&g.op(&b, &a)).unwrap(), "a b c(-1)");
        assert_eq!(render_rank2(&g.pow(&a, -2)).unwrap(), "a^-2");
    }
}
