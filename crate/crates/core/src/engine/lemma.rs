use super::EngineError;
use crate::group::{commutator, Elem, FiniteGroup};
use crate::ops::GroupOps;
use crate::polyform::PolynomialForm;

/// Whether all conjugates of `t` commute with each other.
pub fn conjugates_commute(g: &FiniteGroup, t: Elem) -> bool {
    let mut class: Vec<Elem> = g.elements().map(|v| g.conjugate(&t, &v)).collect();
    class.sort_unstable();
    class.dedup();
    class
        .iter()
        .all(|&a| class.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// `f(g(t))` through the expansion
/// `∏ᵢ∏ⱼ t^{εᵢηⱼ}[t^{εᵢηⱼ},vᵢ][t^{εᵢηⱼ},wⱼ][t^{εᵢηⱼ},wⱼ,vᵢ]`,
/// valid when all conjugates of `t` commute.
pub fn lemma_2_1_compose(
    g: &FiniteGroup,
    f: &PolynomialForm,
    h: &PolynomialForm,
    t: Elem,
) -> Result<Elem, EngineError> {
    if !conjugates_commute(g, t) {
        return Err(EngineError::ConjugatesDoNotCommute(t));
    }
    let mut acc = g.id();
    for &(v, eps) in &f.factors {
        for &(w, eta) in &h.factors {
            let p = g.pow(&t, eps * eta);
            let factors = [
                p,
                commutator(g, p, v),
                commutator(g, p, w),
                g.commutator_seq(&[p, w, v]),
            ];
            acc = factors.iter().fold(acc, |a, &x| g.mul(a, x));
        }
    }
    Ok(acc)
}
