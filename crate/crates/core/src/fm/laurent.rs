//! Sparse Laurent polynomials in 2 or 3 variables with arbitrary-precision
//! integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::FmError;

pub type Exponents = Vec<i64>;

const VARS: [&str; 3] = ["x", "y", "z"];

/// `Σ c_m · m` over monomials `m = x^e₀ y^e₁ (z^e₂)`. Zero coefficients are
/// never stored, and terms are ordered by exponent vector, so structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 1)
    }

    pub fn monomial(exps: Exponents, coeff: impl Into<BigInt>) -> Self {
        let rank = exps.len();
        let mut p = Self::zero(rank);
        p.add_term(exps, coeff.into());
        p
    }

    /// The variable `x_index` (x, y or z).
    pub fn var(rank: usize, index: usize) -> Self {
        let mut e = vec![0; rank];
        e[index] = 1;
        Self::monomial(e, 1)
    }

    pub fn from_terms<I, C>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent vector length must equal rank");
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn check_rank(&self, other: &Self) -> Result<(), FmError> {
        if self.rank != other.rank {
            return Err(FmError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FmError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, FmError> {
        self.check_rank(other)?;
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            rank: self.rank,
            terms: acc,
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        debug_assert_eq!(shift.len(), self.rank);
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Value at `(1, …, 1)`: the sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute 1 for variable `k`, dropping it: the result has rank − 1.
    pub fn substitute_one(&self, k: usize) -> Self {
        let mut out = Self::zero(self.rank - 1);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.remove(k);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Exact quotient by `x_k − 1`, or `None` if it does not divide.
    pub fn div_var_minus_one(&self, k: usize) -> Option<Self> {
        // slice by the other exponents; in each slice Σ cⱼ tʲ = (t − 1) Σ qⱼ tʲ
        // forces qⱼ = −Σ_{i ≤ j} cᵢ and Σ cⱼ = 0
        let mut slices: BTreeMap<Exponents, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let ek = rest.remove(k);
            slices.entry(rest).or_default().insert(ek, c.clone());
        }
        let mut out = Self::zero(self.rank);
        for (rest, slice) in slices {
            let lo = *slice.keys().next().unwrap();
            let hi = *slice.keys().next_back().unwrap();
            let mut running = BigInt::zero();
            for j in lo..hi {
                if let Some(c) = slice.get(&j) {
                    running += c;
                }
                let mut e = rest.clone();
                e.insert(k, j);
                out.add_term(e, -running.clone());
            }
            running += &slice[&hi];
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Serialize as space-separated `coeff@e0,e1[,e2]` terms in canonical
    /// order; the zero polynomial is the empty string.
    pub fn to_wire(&self) -> String {
        self.terms
            .iter()
            .map(|(e, c)| {
                let es: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("{c}@{}", es.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_wire(rank: usize, s: &str) -> Result<Self, FmError> {
        let mut p = Self::zero(rank);
        let bad = |m: String| FmError::Parse { pos: 0, msg: m };
        for tok in s.split_whitespace() {
            let (c, e) = tok
                .split_once('@')
                .ok_or_else(|| bad(format!("term `{tok}` lacks `@`")))?;
            let coeff: BigInt = c.parse().map_err(|_| bad(format!("bad coefficient `{c}`")))?;
            if coeff.is_zero() {
                return Err(bad(format!("zero coefficient in `{tok}`")));
            }
            let exps = e
                .split(',')
                .map(|x| x.parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad(format!("bad exponents `{e}`")))?;
            if exps.len() != rank {
                return Err(bad(format!("`{tok}` has {} exponents, rank is {rank}", exps.len())));
            }
            if p.terms.contains_key(&exps) {
                return Err(bad(format!("repeated monomial in `{tok}`")));
            }
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }
}

/// `s` with `(x_var − 1)·s = x_var^alpha − 1`.
pub fn geometric_sum(rank: usize, var: usize, alpha: i64) -> LaurentPoly {
    let range = if alpha >= 0 { 0..alpha } else { alpha..0 };
    let sign: i64 = if alpha >= 0 { 1 } else { -1 };
    LaurentPoly::from_terms(
        rank,
        range.map(|i| {
            let mut e = vec![0; rank];
            e[var] = i;
            (e, sign)
        }),
    )
}

/// Product of two Laurent polynomials of equal rank.
pub fn laurent_mul(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, FmError> {
    p.try_mul(q)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(&-rhs).expect("rank mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Human-readable form such as `2*x*y^-1 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        VARS[v].to_string()
                    } else {
                        format!("{}^{x}", VARS[v])
                    }
                })
                .collect();
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{mag}*{}", mono.join("*")),
            };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(terms: &[([i64; 2], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn geometric_sums() {
        assert!(geometric_sum(2, 0, 0).is_zero());
        assert!(geometric_sum(2, 0, 1).is_one());
        let s = geometric_sum(2, 0, -2);
        assert_eq!(s, p2(&[([-1, 0], -1), ([-2, 0], -1)]));
        // (x - 1)(-x^-1 - x^-2) = x^-2 - 1
        let x_minus_one = p2(&[([1, 0], 1), ([0, 0], -1)]);
        assert_eq!(&x_minus_one * &s, p2(&[([-2, 0], 1), ([0, 0], -1)]));
        for alpha in -6..=6 {
            let s = geometric_sum(3, 2, alpha);
            let lhs = &(&LaurentPoly::var(3, 2) - &LaurentPoly::one(3)) * &s;
            let rhs = &LaurentPoly::monomial(vec![0, 0, alpha], 1) - &LaurentPoly::one(3);
            assert_eq!(lhs, rhs, "alpha = {alpha}");
        }
    }

    #[test]
    fn products() {
        let p = p2(&[([1, -1], 3), ([0, 2], -2)]);
        assert_eq!(laurent_mul(&p, &LaurentPoly::one(2)).unwrap(), p);
        assert!(laurent_mul(&p, &LaurentPoly::zero(2)).unwrap().is_zero());
        let xm1 = p2(&[([1, 0], 1), ([0, 0], -1)]);
        let ym1 = p2(&[([0, 1], 1), ([0, 0], -1)]);
        assert_eq!(
            laurent_mul(&xm1, &ym1).unwrap(),
            p2(&[([1, 1], 1), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)])
        );
        assert_eq!(
            laurent_mul(&p, &LaurentPoly::one(3)),
            Err(FmError::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn no_zero_terms_survive() {
        let p = p2(&[([1, 0], 2), ([1, 0], -2), ([0, 0], 1)]);
        assert_eq!(p.num_terms(), 1);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q, LaurentPoly::zero(2));
    }

    #[test]
    fn exact_division() {
        let ym1 = p2(&[([0, 1], 1), ([0, 0], -1)]);
        let q = p2(&[([3, -2], 4), ([0, 1], -1), ([-1, 0], 7)]);
        let p = &q * &ym1;
        assert_eq!(p.div_var_minus_one(1), Some(q.clone()));
        assert_eq!(p2(&[([0, 0], 1)]).div_var_minus_one(0), None);
        assert_eq!(p2(&[([2, 0], 1), ([0, 0], -1)]).div_var_minus_one(0), Some(p2(&[([0, 0], 1), ([1, 0], 1)])));
    }

    #[test]
    fn substitution_and_display() {
        let p = LaurentPoly::from_terms(3, [(vec![1, 0, 2], 2), (vec![1, 0, -1], 3), (vec![0, 0, 0], -1)]);
        let r = p.substitute_one(2);
        assert_eq!(r, p2(&[([1, 0], 5), ([0, 0], -1)]));
        assert_eq!(r.to_string(), "-1 + 5*x");
        assert_eq!(p2(&[([1, -1], -1), ([0, 0], 2)]).to_string(), "2 - x*y^-1");
    }

    #[test]
    fn wire_format() {
        let p = p2(&[([1, -1], -12), ([0, 0], 2)]);
        assert_eq!(p.to_wire(), "2@0,0 -12@1,-1");
        assert_eq!(LaurentPoly::from_wire(2, &p.to_wire()).unwrap(), p);
        assert_eq!(LaurentPoly::from_wire(2, "").unwrap(), LaurentPoly::zero(2));
        assert!(LaurentPoly::from_wire(2, "0@1,1").is_err());
        assert!(LaurentPoly::from_wire(2, "1@1").is_err());
    }
}
