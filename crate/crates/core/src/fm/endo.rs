use super::FmError;
use crate::group::derived_series;
use crate::group::{Elem, FiniteGroup};
use crate::ops::GroupOps;
use crate::polyform::PolynomialForm;

/// `x ↦ x·∏ [x, vᵢ]^{ηᵢ}`. Over a metabelian group this is an
/// endomorphism; elsewhere it is just a function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoForm<E> {
    pub factors: Vec<(E, i64)>,
}

impl<E> Default for EndoForm<E> {
    fn default() -> Self {
        EndoForm {
            factors: Vec::new(),
        }
    }
}

impl<E: Clone + PartialEq> EndoForm<E> {
    pub fn new(factors: Vec<(E, i64)>) -> Self {
        EndoForm { factors }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Evaluate left to right without checking that `g` is metabelian.
    pub fn eval<G: GroupOps<Elem = E>>(&self, g: &G, x: &E) -> E {
        self.factors.iter().fold(x.clone(), |acc, (v, eta)| {
            g.op(&acc, &g.pow(&g.commutator(x, v), *eta))
        })
    }

    pub fn map_conjugators<F, T>(&self, f: F) -> EndoForm<T>
    where
        F: Fn(&E) -> T,
    {
        EndoForm {
            factors: self.factors.iter().map(|(v, e)| (f(v), *e)).collect(),
        }
    }
}

/// Err unless `g` has derived length at most 2.
pub fn check_metabelian(g: &FiniteGroup) -> Result<(), FmError> {
    let ds = derived_series(g);
    if ds.is_metabelian {
        Ok(())
    } else {
        Err(FmError::NotMetabelian {
            group: g.name().to_string(),
            derived_length: ds.derived_length.unwrap_or(ds.series.terms.len() - 1),
        })
    }
}

/// Apply `form` to `x` in a finite metabelian group.
pub fn endoform_apply(g: &FiniteGroup, form: &EndoForm<Elem>, x: Elem) -> Result<Elem, FmError> {
    check_metabelian(g)?;
    Ok(form.eval(g, &x))
}

/// Rewrite as a polynomial form using `[x,v] = x⁻¹·v⁻¹xv` and
/// `[x,v]⁻¹ = v⁻¹x⁻¹v·x`, then merge neighbours.
pub fn endoform_to_polyform<E: Clone + PartialEq>(form: &EndoForm<E>, identity: &E) -> PolynomialForm<E> {
    let mut factors = vec![(identity.clone(), 1)];
    for (v, eta) in &form.factors {
        for _ in 0..eta.unsigned_abs() {
            if *eta > 0 {
                factors.push((identity.clone(), -1));
                factors.push((v.clone(), 1));
            } else {
                factors.push((v.clone(), -1));
                factors.push((identity.clone(), 1));
            }
        }
    }
    PolynomialForm::new(factors).simplified()
}
