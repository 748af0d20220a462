//! IA-automorphisms of the rank 2 free metabelian group as endomorphism
//! forms `x ↦ x·∏[x, uᵢ]^{ηᵢ}`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{decompose_derived, derived_to_module, DerivedDecomposition, EndoForm, FMElement, FmError};
use crate::fm::FreeMetabelian;
use crate::ops::GroupOps;

/// An IA-automorphism `f` of the rank 2 group given by `f(a) = a·v` and
/// `f(b) = b·w` with `v`, `w` derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IASpec {
    pub v: FMElement,
    pub w: FMElement,
}

impl IASpec {
    pub fn new(v: FMElement, w: FMElement) -> Result<Self, FmError> {
        for e in [&v, &w] {
            if e.rank() != 2 {
                return Err(FmError::UnsupportedRank(e.rank()));
            }
            if !e.is_derived() {
                return Err(FmError::NotDerived);
            }
        }
        Ok(IASpec { v, w })
    }

    /// `(f(a), f(b))`.
    pub fn images(&self) -> (FMElement, FMElement) {
        let g = FreeMetabelian::new(2).expect("rank 2");
        (
            g.op(&g.generator(0), &self.v),
            g.op(&g.generator(1), &self.w),
        )
    }
}

/// The form together with the decompositions it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IAConstruction {
    pub v_decomposition: DerivedDecomposition,
    pub w_decomposition: DerivedDecomposition,
    pub form: EndoForm<FMElement>,
}

/// `a^γ b^δ` for the monomial `x^γ y^δ`.
pub fn canonical_preimage(m: &[i64]) -> Result<FMElement, FmError> {
    if m.len() != 2 {
        return Err(FmError::UnsupportedRank(m.len()));
    }
    let g = FreeMetabelian::new(2)?;
    Ok(g.op(&g.pow(&g.generator(0), m[0]), &g.pow(&g.generator(1), m[1])))
}

fn to_i64(c: &BigInt) -> Result<i64, FmError> {
    i64::try_from(c).map_err(|_| FmError::CoefficientOverflow(c.to_string()))
}

/// With `v = [a,b]^α ∏[a,b,vᵢ]^{λᵢ}` and `w = [a,b]^β ∏[a,b,wᵢ]^{μᵢ}`,
/// `λ = Σλᵢ`, `μ = Σμᵢ`, the form is
/// `[x,b]^{α−λ} [x,a]^{μ−β} ∏ᵢ [x,vᵢ]^{−λᵢ}[x,bvᵢ]^{λᵢ}[x,wᵢ]^{μᵢ}[x,awᵢ]^{−μᵢ}`.
/// Factors with exponent zero are omitted.
pub fn build_ia_endoform(spec: &IASpec) -> Result<IAConstruction, FmError> {
    let g = FreeMetabelian::new(2)?;
    let (a, b) = (g.generator(0), g.generator(1));
    let dv = decompose_derived(&derived_to_module(&spec.v)?);
    let dw = decompose_derived(&derived_to_module(&spec.w)?);
    let lambda: BigInt = dv.terms.iter().map(|(_, c)| c).sum();
    let mu: BigInt = dw.terms.iter().map(|(_, c)| c).sum();

    let mut factors: Vec<(FMElement, i64)> = Vec::new();
    let mut push = |u: FMElement, eta: BigInt| -> Result<(), FmError> {
        if !eta.is_zero() {
            factors.push((u, to_i64(&eta)?));
        }
        Ok(())
    };
    push(b.clone(), &dv.alpha - &lambda)?;
    push(a.clone(), &mu - &dw.alpha)?;
    for i in 0..dv.terms.len().max(dw.terms.len()) {
        if let Some((m, l)) = dv.terms.get(i) {
            let vi = canonical_preimage(m)?;
            push(vi.clone(), -l)?;
            push(g.op(&b, &vi), l.clone())?;
        }
        if let Some((m, u)) = dw.terms.get(i) {
            let wi = canonical_preimage(m)?;
            push(wi.clone(), u.clone())?;
            push(g.op(&a, &wi), -u)?;
        }
    }
    Ok(IAConstruction {
        v_decomposition: dv,
        w_decomposition: dw,
        form: EndoForm::new(factors),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = FreeMetabelian::new(2).unwrap();
        let (a, b) = (g.generator(0), g.generator(1));
        let ab = g.commutator(&a, &b);
        let id = g.identity();

        let spec = IASpec::new(ab.clone(), id.clone()).unwrap();
        let c = build_ia_endoform(&spec).unwrap();
        assert_eq!(c.form.factors, vec![(b.clone(), 1)]);
        assert_eq!(c.form.eval(&g, &a), g.op(&a, &ab));

        let c = build_ia_endoform(&IASpec::new(id.clone(), id.clone()).unwrap()).unwrap();
        assert!(c.form.is_empty());

        let w = g.commutator_seq(&[a.clone(), b.clone(), a.clone()]);
        let spec = IASpec::new(id.clone(), w.clone()).unwrap();
        let c = build_ia_endoform(&spec).unwrap();
        let a2 = g.pow(&a, 2);
        assert_eq!(c.form.factors, vec![(a.clone(), 1), (a.clone(), 1), (a2, -1)]);
        assert_eq!(c.form.eval(&g, &b), g.op(&b, &w));
        assert_eq!(c.form.eval(&g, &a), a);
    }

    #[test]
    fn spec_requires_derived() {
        let g = FreeMetabelian::new(2).unwrap();
        assert_eq!(
            IASpec::new(g.generator(0), g.identity()),
            Err(FmError::NotDerived)
        );
        assert_eq!(canonical_preimage(&[2, -1]).unwrap().tvec(), &[2, -1]);
    }
}
