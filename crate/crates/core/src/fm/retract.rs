use serde::Serialize;
use serde_json::json;

use super::{parse_word, FMElement, FmError, FreeMetabelian};
use crate::ops::GroupOps;
use crate::report::Report;

/// Image under the map killing generator `killed` and sending the others,
/// in order, to the generators of the rank − 1 group. Its kernel is the
/// normal closure of the killed generator.
pub fn retract_generator(e: &FMElement, killed: usize) -> Result<FMElement, FmError> {
    if e.rank() != 3 {
        return Err(FmError::UnsupportedRank(e.rank()));
    }
    if killed >= 3 {
        return Err(FmError::GeneratorOutOfRange {
            index: killed,
            rank: 3,
        });
    }
    let mut tvec = e.tvec().to_vec();
    tvec.remove(killed);
    let fringe = e
        .fringe()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != killed)
        .map(|(_, f)| f.substitute_one(killed))
        .collect();
    Ok(FMElement::from_parts_unchecked(tvec, fringe))
}

/// The endomorphism `a ↦ a, b ↦ b, c ↦ c[a,b]` of the rank 3 group and the
/// retraction showing it has no polynomial form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank3Report {
    /// `x⁻¹f(x)` is derived for every generator.
    pub ia_property: bool,
    /// `f` composed with `c ↦ c[a,b]⁻¹` (either order) fixes every generator.
    pub is_automorphism: bool,
    /// Wire forms of `x⁻¹f(x)` for `a`, `b`, `c`.
    pub offsets: Vec<String>,
    /// Wire form of `[a,b]` in the rank 3 group.
    pub commutator: String,
    /// Wire form of the retraction of `[a,b]` (killing `c`).
    pub retraction_of_commutator: String,
    /// Decided by whether that retraction is trivial.
    pub commutator_in_ncl_c: bool,
    pub retraction_of_c: String,
    pub retraction_of_c_is_identity: bool,
    pub pass: bool,
}

impl Rank3Report {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new("M3", "rank3-counterexample");
        r.record("ia_property", self.ia_property);
        r.record("is_automorphism", self.is_automorphism);
        r.record("offsets", self.offsets.clone());
        r.record("commutator", self.commutator.clone());
        r.record("retraction_of_commutator", self.retraction_of_commutator.clone());
        r.record("commutator_in_ncl_c", self.commutator_in_ncl_c);
        r.record("retraction_of_c", self.retraction_of_c.clone());
        r.record("retraction_of_c_is_identity", self.retraction_of_c_is_identity);
        if !self.pass {
            r.fail(json!({ "reason": "obstruction not reproduced" }));
        }
        r
    }
}

pub fn rank3_counterexample() -> Rank3Report {
    let g = FreeMetabelian::new(3).expect("rank 3");
    let [a, b, c]: [FMElement; 3] = g.generators().try_into().expect("three generators");
    let ab = g.commutator(&a, &b);
    let images = [a.clone(), b.clone(), g.op(&c, &ab)];
    let offsets: Vec<FMElement> = [&a, &b, &c]
        .iter()
        .zip(&images)
        .map(|(x, fx)| g.op(&g.inverse(x), fx))
        .collect();
    let ia_property = offsets.iter().all(FMElement::is_derived);
    // f and its candidate inverse, as generator images evaluated on words
    let inv_words = ["a", "b", "c[a,b]^-1"].map(|s| parse_word(s).expect("valid word"));
    let inv_images: Vec<FMElement> = inv_words.iter().map(|w| w.to_fm(3).expect("rank 3")).collect();
    let fwd_words = ["a", "b", "c[a,b]"].map(|s| parse_word(s).expect("valid word"));
    let gens = [a.clone(), b.clone(), c.clone()];
    let is_automorphism = (0..3).all(|i| {
        inv_words[i].eval(&g, &images).expect("rank 3") == gens[i]
            && fwd_words[i].eval(&g, &inv_images).expect("rank 3") == gens[i]
    });
    let r_ab = retract_generator(&ab, 2).expect("rank 3");
    let r_c = retract_generator(&c, 2).expect("rank 3");
    let commutator_in_ncl_c = r_ab.is_identity();
    let retraction_of_c_is_identity = r_c.is_identity();
    Rank3Report {
        ia_property,
        is_automorphism,
        offsets: offsets.iter().map(FMElement::to_wire).collect(),
        commutator: ab.to_wire(),
        retraction_of_commutator: r_ab.to_wire(),
        commutator_in_ncl_c,
        retraction_of_c: r_c.to_wire(),
        retraction_of_c_is_identity,
        pass: ia_property && is_automorphism && !commutator_in_ncl_c && retraction_of_c_is_identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn retraction_on_generators() {
        let g = FreeMetabelian::new(3).unwrap();
        let g2 = FreeMetabelian::new(2).unwrap();
        let gens = g.generators();
        assert!(retract_generator(&gens[2], 2).unwrap().is_identity());
        assert_eq!(retract_generator(&gens[0], 2).unwrap(), g2.generator(0));
        assert_eq!(retract_generator(&gens[2], 0).unwrap(), g2.generator(1));
        let ab = g.commutator(&gens[0], &gens[1]);
        assert_eq!(
            retract_generator(&ab, 2).unwrap(),
            g2.commutator(&g2.generator(0), &g2.generator(1))
        );
        assert!(retract_generator(&g2.generator(0), 1).is_err());
    }

    #[test]
    fn counterexample_report() {
        let r = rank3_counterexample();
        assert!(r.ia_property && r.is_automorphism);
        assert!(!r.commutator_in_ncl_c);
        assert!(r.retraction_of_c_is_identity);
        assert!(r.pass && r.to_report().pass);
        assert_eq!(r.retraction_of_c, "2|0,0||");
    }
}
