use std::fmt;
use std::str::FromStr;

use super::{check_rank, FmError, LaurentPoly};
use crate::ops::GroupOps;

/// Element of the free metabelian group of rank 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FMElement {
    tvec: Vec<i64>,
    fringe: Vec<LaurentPoly>,
}

impl FMElement {
    pub fn identity(rank: usize) -> Self {
        FMElement {
            tvec: vec![0; rank],
            fringe: vec![LaurentPoly::zero(rank); rank],
        }
    }

    /// Build from raw coordinates, checking the membership identity.
    pub fn from_parts(tvec: Vec<i64>, fringe: Vec<LaurentPoly>) -> Result<Self, FmError> {
        let rank = tvec.len();
        check_rank(rank)?;
        if fringe.len() != rank {
            return Err(FmError::RankMismatch {
                left: rank,
                right: fringe.len(),
            });
        }
        for f in &fringe {
            if f.rank() != rank {
                return Err(FmError::RankMismatch {
                    left: rank,
                    right: f.rank(),
                });
            }
        }
        let e = FMElement { tvec, fringe };
        if !e.membership_holds() {
            return Err(FmError::NotAnElement);
        }
        Ok(e)
    }

    pub(crate) fn from_parts_unchecked(tvec: Vec<i64>, fringe: Vec<LaurentPoly>) -> Self {
        FMElement { tvec, fringe }
    }

    pub fn rank(&self) -> usize {
        self.tvec.len()
    }

    pub fn tvec(&self) -> &[i64] {
        &self.tvec
    }

    pub fn fringe(&self) -> &[LaurentPoly] {
        &self.fringe
    }

    pub fn is_identity(&self) -> bool {
        self.tvec.iter().all(|&t| t == 0) && self.fringe.iter().all(LaurentPoly::is_zero)
    }

    /// In the derived subgroup iff the abelianized image vanishes.
    pub fn is_derived(&self) -> bool {
        self.tvec.iter().all(|&t| t == 0)
    }

    /// `Σ fᵢ·(xᵢ − 1) = xᵗ − 1`.
    pub fn membership_holds(&self) -> bool {
        let r = self.rank();
        let one = LaurentPoly::one(r);
        let mut lhs = LaurentPoly::zero(r);
        for (i, f) in self.fringe.iter().enumerate() {
            let xi_minus_one = &LaurentPoly::var(r, i) - &one;
            lhs = &lhs + &(f * &xi_minus_one);
        }
        let rhs = &LaurentPoly::monomial(self.tvec.clone(), 1) - &one;
        lhs == rhs
    }

    /// Wire format: `rank|t₀,t₁[,t₂]|fringe₀|fringe₁[|fringe₂]`, each fringe
    /// in [`LaurentPoly::to_wire`] form.
    pub fn to_wire(&self) -> String {
        let t: Vec<String> = self.tvec.iter().map(|x| x.to_string()).collect();
        let mut parts = vec![self.rank().to_string(), t.join(",")];
        parts.extend(self.fringe.iter().map(LaurentPoly::to_wire));
        parts.join("|")
    }

    pub fn from_wire(s: &str) -> Result<Self, FmError> {
        let bad = |msg: String| FmError::Parse { pos: 0, msg };
        let parts: Vec<&str> = s.trim().split('|').collect();
        let rank: usize = parts[0]
            .parse()
            .map_err(|_| bad(format!("bad rank `{}`", parts[0])))?;
        check_rank(rank)?;
        if parts.len() != rank + 2 {
            return Err(bad(format!("expected {} fields, found {}", rank + 2, parts.len())));
        }
        let tvec = parts[1]
            .split(',')
            .map(|x| x.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad(format!("bad exponent vector `{}`", parts[1])))?;
        if tvec.len() != rank {
            return Err(bad(format!("exponent vector `{}` has wrong length", parts[1])));
        }
        let fringe = parts[2..]
            .iter()
            .map(|p| LaurentPoly::from_wire(rank, p))
            .collect::<Result<Vec<_>, _>>()?;
        FMElement::from_parts(tvec, fringe)
    }
}

impl fmt::Display for FMElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl FromStr for FMElement {
    type Err = FmError;
    fn from_str(s: &str) -> Result<Self, FmError> {
        FMElement::from_wire(s)
    }
}

/// Generator `index` (a, b or c) of the rank `rank` group.
pub fn fm_generator(rank: usize, index: usize) -> Result<FMElement, FmError> {
    check_rank(rank)?;
    if index >= rank {
        return Err(FmError::GeneratorOutOfRange { index, rank });
    }
    let mut e = FMElement::identity(rank);
    e.tvec[index] = 1;
    e.fringe[index] = LaurentPoly::one(rank);
    Ok(e)
}

pub fn fm_mul(a: &FMElement, b: &FMElement) -> Result<FMElement, FmError> {
    if a.rank() != b.rank() {
        return Err(FmError::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    let tvec = a.tvec.iter().zip(&b.tvec).map(|(x, y)| x + y).collect();
    let fringe = a
        .fringe
        .iter()
        .zip(&b.fringe)
        .map(|(f1, f2)| &f1.shift(&b.tvec) + f2)
        .collect();
    Ok(FMElement { tvec, fringe })
}

pub fn fm_inv(a: &FMElement) -> FMElement {
    let neg: Vec<i64> = a.tvec.iter().map(|t| -t).collect();
    let fringe = a.fringe.iter().map(|f| -&f.shift(&neg)).collect();
    FMElement { tvec: neg, fringe }
}

pub fn fm_pow(a: &FMElement, n: i64) -> FMElement {
    FreeMetabelian::new_unchecked(a.rank()).pow(a, n)
}

/// `v⁻¹ x v`.
pub fn fm_conjugate(x: &FMElement, v: &FMElement) -> Result<FMElement, FmError> {
    fm_mul(&fm_mul(&fm_inv(v), x)?, v)
}

/// `x⁻¹ y⁻¹ x y`.
pub fn fm_commutator(x: &FMElement, y: &FMElement) -> Result<FMElement, FmError> {
    let t = fm_mul(&fm_inv(x), &fm_inv(y))?;
    fm_mul(&fm_mul(&t, x)?, y)
}

/// The free metabelian group of a fixed rank, as a [`GroupOps`] context.
/// Its operations panic on elements of another rank; use [`fm_mul`] for
/// the fallible form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeMetabelian {
    rank: usize,
}

impl FreeMetabelian {
    pub fn new(rank: usize) -> Result<Self, FmError> {
        check_rank(rank)?;
        Ok(FreeMetabelian { rank })
    }

    fn new_unchecked(rank: usize) -> Self {
        FreeMetabelian { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator(&self, index: usize) -> FMElement {
        fm_generator(self.rank, index).expect("generator index in range")
    }

    pub fn generators(&self) -> Vec<FMElement> {
        (0..self.rank).map(|i| self.generator(i)).collect()
    }
}

impl GroupOps for FreeMetabelian {
    type Elem = FMElement;

    fn identity(&self) -> FMElement {
        FMElement::identity(self.rank)
    }

    fn op(&self, a: &FMElement, b: &FMElement) -> FMElement {
        assert_eq!(a.rank(), self.rank, "element rank differs from group rank");
        fm_mul(a, b).expect("equal ranks")
    }

    fn inverse(&self, a: &FMElement) -> FMElement {
        fm_inv(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_and_identity() {
        let a = fm_generator(2, 0).unwrap();
        assert_eq!(a.tvec(), &[1, 0]);
        assert!(a.fringe()[0].is_one() && a.fringe()[1].is_zero());
        assert!(a.membership_holds());
        assert!(FMElement::identity(3).membership_holds());
        assert_eq!(fm_generator(2, 2), Err(FmError::GeneratorOutOfRange { index: 2, rank: 2 }));
        assert_eq!(fm_generator(4, 0), Err(FmError::UnsupportedRank(4)));
    }

    #[test]
    fn commutator_is_nontrivial_and_derived() {
        let g = FreeMetabelian::new(2).unwrap();
        let (a, b) = (g.generator(0), g.generator(1));
        let ab = fm_commutator(&a, &b).unwrap();
        assert!(ab.is_derived() && !ab.is_identity() && ab.membership_holds());
        assert_eq!(fm_inv(&fm_commutator(&b, &a).unwrap()), ab);
        let e = g.op(&a, &fm_inv(&a));
        assert!(e.is_identity());
    }

    #[test]
    fn rank_mismatch() {
        let a = fm_generator(2, 0).unwrap();
        let c = fm_generator(3, 2).unwrap();
        assert_eq!(fm_mul(&a, &c), Err(FmError::RankMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn wire_roundtrip_and_validation() {
        let g = FreeMetabelian::new(3).unwrap();
        let gens = g.generators();
        let w = g.product(&[gens[0].clone(), fm_inv(&gens[2]), gens[1].clone(), gens[1].clone()]);
        let s = w.to_wire();
        assert_eq!(s.parse::<FMElement>().unwrap(), w);
        assert_eq!(FMElement::identity(2).to_wire(), "2|0,0||");
        assert_eq!(gens[0].to_wire(), "3|1,0,0|1@0,0,0||");
        // a fringe that breaks the membership identity
        assert_eq!(FMElement::from_wire("2|1,0||"), Err(FmError::NotAnElement));
        assert!(FMElement::from_wire("2|1|1@0,0|").is_err());
    }
}
