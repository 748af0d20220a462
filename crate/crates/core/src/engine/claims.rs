//! Instance checks of the structural claims about `P(G)` on finite groups.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::autset::{
    automorphism_group, generate_p, inner_automorphisms, polynomial_automorphisms, AutomorphismSet,
};
use super::closure::FunctionChain;
use super::lemma::{conjugates_commute, lemma_2_1_compose};
use super::{EngineError, GroupFunction};
use crate::config::RunConfig;
use crate::group::{
    center, commutator, derived_series, lower_central_series, Elem, FiniteGroup, Subgroup,
};
use crate::polyform::{eval_poly_form, PolynomialForm};
use crate::report::{ClaimResult, Report, Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `G` nilpotent of class `k ≥ 2` ⇒ `P(G)` nilpotent of class `k − 1`.
    Thm11,
    /// `G` metabelian ⇒ `P(G)` metabelian.
    Thm12,
    /// `G` nilpotent of class `≤ 2` ⇒ `P(G)` abelian.
    Cor21,
    /// Composition expansion of two polynomial forms at `t`.
    Lem21,
    /// `[t,x,y] = [t,y,x]` for `t ∈ [G,G]` in a metabelian group.
    Lem22,
    /// Elements of `[P(G),P(G)]` act trivially on `[G,G]` and on `G/[G,G]`.
    Lem23,
    /// `I(G) ⊴ P(G) ⊴ A(G)`, `P₀(G)` a normal subset, `P₀(G) = P(G)`.
    Chain,
    /// Exponent sum `±1` forms are bijections on nilpotent groups.
    EnBijectivity,
    /// `P(G)` nilpotent ⇒ `G` nilpotent.
    ConverseNilpotent,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Thm11,
        Claim::Thm12,
        Claim::Cor21,
        Claim::Lem21,
        Claim::Lem22,
        Claim::Lem23,
        Claim::Chain,
        Claim::EnBijectivity,
        Claim::ConverseNilpotent,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm11 => "thm-1.1",
            Claim::Thm12 => "thm-1.2",
            Claim::Cor21 => "cor-2.1",
            Claim::Lem21 => "lem-2.1",
            Claim::Lem22 => "lem-2.2",
            Claim::Lem23 => "lem-2.3",
            Claim::Chain => "chain",
            Claim::EnBijectivity => "en-bijectivity",
            Claim::ConverseNilpotent => "converse-nilpotent",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| EngineError::UnknownClaim(s.to_string()))
    }
}

/// Lazily computed `A(G)`, `I(G)`, `P₀(G)`, `P(G)` for one group, shared
/// by all claims checked on it.
pub struct Analysis<'g> {
    group: &'g FiniteGroup,
    config: RunConfig,
    aut: OnceCell<AutomorphismSet<'g>>,
    inner: OnceCell<AutomorphismSet<'g>>,
    chain: OnceCell<FunctionChain<'g>>,
    p0: OnceCell<AutomorphismSet<'g>>,
    p: OnceCell<AutomorphismSet<'g>>,
}

fn cached<T>(
    cell: &OnceCell<T>,
    f: impl FnOnce() -> Result<T, EngineError>,
) -> Result<&T, EngineError> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g FiniteGroup, config: &RunConfig) -> Self {
        Analysis {
            group,
            config: config.clone(),
            aut: OnceCell::new(),
            inner: OnceCell::new(),
            chain: OnceCell::new(),
            p0: OnceCell::new(),
            p: OnceCell::new(),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn automorphisms(&self) -> Result<&AutomorphismSet<'g>, EngineError> {
        cached(&self.aut, || automorphism_group(self.group, self.config.search_budget))
    }

    pub fn inner(&self) -> Result<&AutomorphismSet<'g>, EngineError> {
        cached(&self.inner, || inner_automorphisms(self.group))
    }

    pub fn function_chain(&self) -> &FunctionChain<'g> {
        self.chain
            .get_or_init(|| FunctionChain::polynomial_functions(self.group))
    }

    pub fn p0(&self) -> Result<&AutomorphismSet<'g>, EngineError> {
        cached(&self.p0, || {
            polynomial_automorphisms(self.group, self.automorphisms()?, self.function_chain())
        })
    }

    pub fn p(&self) -> Result<&AutomorphismSet<'g>, EngineError> {
        cached(&self.p, || generate_p(self.group, self.p0()?))
    }

    fn rng(&self, claim: Claim) -> ChaCha8Rng {
        // FNV-1a over the group name and claim id, mixed into the seed
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.group.name().bytes().chain([0]).chain(claim.id().bytes()) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.config.seed ^ h)
    }
}

fn precondition(claim: Claim, reason: impl Into<String>) -> EngineError {
    EngineError::PreconditionNotMet {
        claim: claim.id().to_string(),
        reason: reason.into(),
    }
}

fn class_json(c: Option<usize>) -> serde_json::Value {
    c.map_or(serde_json::Value::Null, |c| json!(c))
}

fn random_form(g: &FiniteGroup, rng: &mut impl Rng, max_len: usize) -> PolynomialForm {
    let len = rng.gen_range(1..=max_len);
    PolynomialForm::new(
        (0..len)
            .map(|_| (rng.gen_range(0..g.order()), rng.gen_range(-3..=3)))
            .collect(),
    )
}

/// Random form of length `1..=max_len` whose exponents sum to `±1`.
pub fn random_unit_sum_form(g: &FiniteGroup, rng: &mut impl Rng, max_len: usize) -> PolynomialForm {
    let mut form = random_form(g, rng, max_len);
    let target: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
    let last = form.factors.len() - 1;
    let rest: i64 = form.factors[..last].iter().map(|(_, e)| e).sum();
    form.factors[last].1 = target - rest;
    form
}

fn form_json(f: &PolynomialForm) -> serde_json::Value {
    json!(f.factors)
}

/// Check one claim on the analysed group.
///
/// Inapplicable claims return `PreconditionNotMet`; a claim that is
/// applicable but fails returns `Ok` with `pass = false` and witnesses.
pub fn verify_claim(an: &Analysis<'_>, claim: Claim) -> Result<Report, EngineError> {
    let started = Instant::now();
    let g = an.group();
    let mut rep = Report::new(g.name(), claim.id());
    rep.record("group_order", g.order());
    match claim {
        Claim::Thm11 => check_thm_1_1(an, &mut rep)?,
        Claim::Thm12 => check_thm_1_2(an, &mut rep)?,
        Claim::Cor21 => check_cor_2_1(an, &mut rep)?,
        Claim::Lem21 => check_lem_2_1(an, &mut rep)?,
        Claim::Lem22 => check_lem_2_2(an, &mut rep)?,
        Claim::Lem23 => check_lem_2_3(an, &mut rep)?,
        Claim::Chain => check_inclusion_chain(an, &mut rep)?,
        Claim::EnBijectivity => check_en_bijectivity(an, &mut rep)?,
        Claim::ConverseNilpotent => check_converse(an, &mut rep)?,
    }
    if an.config.record_timing {
        rep.elapsed_ms = started.elapsed().as_millis() as u64;
    }
    Ok(rep)
}

fn check_thm_1_1(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    let class = lower_central_series(g).nilpotency_class;
    let k = match class {
        None => return Err(precondition(Claim::Thm11, "group is not nilpotent")),
        Some(k) if k < 2 => {
            return Err(precondition(
                Claim::Thm11,
                format!("nilpotency class {k} < 2"),
            ))
        }
        Some(k) => k,
    };
    let p = an.p()?;
    let p_class = lower_central_series(p.composition_group()).nilpotency_class;
    rep.record("group_class", k);
    rep.record("expected_p_class", k - 1);
    rep.record("p_order", p.len());
    rep.record("p_class", class_json(p_class));
    if p_class != Some(k - 1) {
        rep.fail(json!({ "p_class": class_json(p_class), "expected": k - 1 }));
    }
    Ok(())
}

fn require_metabelian(g: &FiniteGroup, claim: Claim) -> Result<usize, EngineError> {
    let ds = derived_series(g);
    if !ds.is_metabelian {
        let reason = match ds.derived_length {
            Some(l) => format!("derived length {l} > 2"),
            None => "group is not soluble".to_string(),
        };
        return Err(precondition(claim, reason));
    }
    Ok(ds.derived_length.unwrap_or(0))
}

fn check_thm_1_2(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let dl = require_metabelian(an.group(), Claim::Thm12)?;
    let p = an.p()?;
    let pds = derived_series(p.composition_group());
    rep.record("group_derived_length", dl);
    rep.record("p_order", p.len());
    rep.record("p_derived_length", class_json(pds.derived_length));
    rep.record("p_derived_series_orders", pds.series.orders());
    if !pds.is_metabelian {
        rep.fail(json!({ "p_derived_series_orders": pds.series.orders() }));
    }
    Ok(())
}

fn check_cor_2_1(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    match lower_central_series(g).nilpotency_class {
        Some(k) if k <= 2 => rep.record("group_class", k),
        Some(k) => return Err(precondition(Claim::Cor21, format!("nilpotency class {k} > 2"))),
        None => return Err(precondition(Claim::Cor21, "group is not nilpotent")),
    }
    let p = an.p()?;
    let cg = p.composition_group();
    rep.record("p_order", p.len());
    let mut abelian = true;
    'scan: for a in cg.elements() {
        for b in cg.elements() {
            if cg.mul(a, b) != cg.mul(b, a) {
                rep.fail(json!({ "f": p.maps()[a].images(), "g": p.maps()[b].images() }));
                abelian = false;
                break 'scan;
            }
        }
    }
    rep.record("p_abelian", abelian);
    Ok(())
}

fn check_lem_2_1(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    let eligible: Vec<Elem> = g.elements().filter(|&t| conjugates_commute(g, t)).collect();
    let mut rng = an.rng(Claim::Lem21);
    let samples = an.config.lemma21_samples;
    let mut failures = 0usize;
    for _ in 0..samples {
        let f = random_form(g, &mut rng, 3);
        let h = random_form(g, &mut rng, 3);
        let t = eligible[rng.gen_range(0..eligible.len())];
        let formula = lemma_2_1_compose(g, &f, &h, t)?;
        let direct = eval_poly_form(g, &f, eval_poly_form(g, &h, t));
        if formula != direct {
            failures += 1;
            rep.fail(json!({
                "f": form_json(&f), "g": form_json(&h), "t": t,
                "formula": formula, "direct": direct,
            }));
        }
    }
    rep.record("eligible_elements", eligible.len());
    rep.record("samples", samples);
    rep.record("failures", failures);
    Ok(())
}

fn check_lem_2_2(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    require_metabelian(g, Claim::Lem22)?;
    let ds = derived_series(g);
    let derived = ds.series.terms.get(1).cloned().unwrap_or_else(|| Subgroup::trivial(g));
    let mut checked = 0usize;
    let mut failures = 0usize;
    for &t in derived.members() {
        for x in g.elements() {
            let tx = commutator(g, t, x);
            for y in g.elements() {
                checked += 1;
                let lhs = commutator(g, tx, y);
                let rhs = commutator(g, commutator(g, t, y), x);
                if lhs != rhs {
                    failures += 1;
                    if rep.witnesses.len() < 10 {
                        rep.fail(json!({ "t": t, "x": x, "y": y }));
                    }
                }
            }
        }
    }
    rep.record("derived_order", derived.order());
    rep.record("triples_checked", checked);
    rep.record("failures", failures);
    Ok(())
}

fn check_lem_2_3(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    require_metabelian(g, Claim::Lem23)?;
    let ds = derived_series(g);
    let derived = ds.series.terms.get(1).cloned().unwrap_or_else(|| Subgroup::trivial(g));
    let p = an.p()?;
    let cg = p.composition_group();
    let pd = derived_series(cg);
    let p_derived = pd.series.terms.get(1).cloned().unwrap_or_else(|| Subgroup::trivial(cg));
    let mut fixes_failures = 0usize;
    let mut quotient_failures = 0usize;
    for &hi in p_derived.members() {
        let h = &p.maps()[hi];
        if let Some(&t) = derived.members().iter().find(|&&t| h.apply(t) != t) {
            fixes_failures += 1;
            rep.fail(json!({ "part": "i", "h": h.images(), "t": t }));
        }
        if let Some(x) = g
            .elements()
            .find(|&x| !derived.contains(g.mul(g.inv(x), h.apply(x))))
        {
            quotient_failures += 1;
            rep.fail(json!({ "part": "ii", "h": h.images(), "x": x }));
        }
    }
    rep.record("group_derived_order", derived.order());
    rep.record("p_order", p.len());
    rep.record("p_derived_order", p_derived.order());
    rep.record("part_i_failures", fixes_failures);
    rep.record("part_ii_failures", quotient_failures);
    Ok(())
}

/// Indices in `aut` of the members of `sub`.
fn indices_in(aut: &AutomorphismSet<'_>, sub: &AutomorphismSet<'_>) -> Option<Vec<Elem>> {
    sub.maps().iter().map(|f| aut.index_of(f)).collect()
}

/// First `(a, s)` in `outer × subset` with `a s a⁻¹ ∉ subset`, using the
/// composition table of `aut`.
fn conjugation_escape(
    aut: &AutomorphismSet<'_>,
    outer: &[Elem],
    subset: &[Elem],
) -> Option<(Elem, Elem)> {
    let cg = aut.composition_group();
    let mut mask = vec![false; cg.order()];
    for &s in subset {
        mask[s] = true;
    }
    for &a in outer {
        for &s in subset {
            let c = cg.mul(cg.mul(a, s), cg.inv(a));
            if !mask[c] {
                return Some((a, s));
            }
        }
    }
    None
}

/// `I(G) ⊆ P(G) ⊆ A(G)`, normality of each in the next, `P₀(G)` a normal
/// subset of `A(G)`, and `P₀(G) = P(G)` as sets.
pub fn check_inclusion_chain(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    let a = an.automorphisms()?;
    let i = an.inner()?;
    let p0 = an.p0()?;
    let p = an.p()?;
    rep.record("a_order", a.len());
    rep.record("i_order", i.len());
    rep.record("p0_order", p0.len());
    rep.record("p_order", p.len());
    rep.record("center_order", center(g).order());
    rep.record("closure_order", an.function_chain().order().to_string());

    let (Some(i_idx), Some(p_idx), Some(p0_idx)) =
        (indices_in(a, i), indices_in(a, p), indices_in(a, p0))
    else {
        rep.fail(json!({ "check": "I, P0, P are subsets of A" }));
        return Ok(());
    };
    let mut checks = Vec::new();
    let mut check = |name: &str, ok: bool, rep: &mut Report, witness: serde_json::Value| {
        checks.push((name.to_string(), ok));
        if !ok {
            rep.fail(json!({ "check": name, "witness": witness }));
        }
    };
    check("I subset P", i.is_subset_of(p), rep, json!(null));
    check("I subset P0", i.is_subset_of(p0), rep, json!(null));
    check("P0 equals P", p0.maps() == p.maps(), rep, json!({ "p0": p0.len(), "p": p.len() }));
    check(
        "P0 fixes identity",
        p0.maps().iter().all(|f| f.fixes_identity(g)),
        rep,
        json!(null),
    );
    check(
        "I(G) order is |G|/|Z(G)|",
        i.len() * center(g).order() == g.order(),
        rep,
        json!(null),
    );
    let all_a: Vec<Elem> = a.composition_group().elements().collect();
    let w = conjugation_escape(a, &p_idx, &i_idx);
    check("I normal in P", w.is_none(), rep, json!(w));
    let w = conjugation_escape(a, &all_a, &p_idx);
    check("P normal in A", w.is_none(), rep, json!(w));
    let w = conjugation_escape(a, &all_a, &p0_idx);
    check("P0 normal subset of A", w.is_none(), rep, json!(w));
    rep.record(
        "checks",
        checks
            .into_iter()
            .map(|(n, ok)| json!({ "name": n, "pass": ok }))
            .collect::<Vec<_>>(),
    );
    Ok(())
}

fn check_en_bijectivity(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    let class = lower_central_series(g).nilpotency_class;
    let Some(k) = class else {
        return Err(precondition(Claim::EnBijectivity, "group is not nilpotent"));
    };
    let mut rng = an.rng(Claim::EnBijectivity);
    let samples = an.config.en_samples;
    let max_len = an.config.en_max_len;
    let mut failures = 0usize;
    for _ in 0..samples {
        let form = random_unit_sum_form(g, &mut rng, max_len);
        let f = GroupFunction::tabulate(g, |x| eval_poly_form(g, &form, x));
        if !f.is_bijective() {
            failures += 1;
            if rep.witnesses.len() < 10 {
                rep.fail(json!({ "form": form_json(&form) }));
            }
        }
    }
    rep.record("group_class", k);
    rep.record("samples", samples);
    rep.record("max_len", max_len);
    rep.record("failures", failures);
    Ok(())
}

fn check_converse(an: &Analysis<'_>, rep: &mut Report) -> Result<(), EngineError> {
    let g = an.group();
    let g_class = lower_central_series(g).nilpotency_class;
    let p = an.p()?;
    let i = an.inner()?;
    let p_class = lower_central_series(p.composition_group()).nilpotency_class;
    rep.record("group_class", class_json(g_class));
    rep.record("p_class", class_json(p_class));
    rep.record("p_order", p.len());
    if !i.is_subset_of(p) {
        rep.fail(json!({ "check": "I subset P" }));
    }
    if p_class.is_some() && g_class.is_none() {
        rep.fail(json!({ "check": "P nilpotent but G not nilpotent" }));
    }
    Ok(())
}

/// Run `claims` on `g`; inapplicable claims are reported as skipped.
/// Budget and search errors abort the run.
pub fn verify_group(
    g: &FiniteGroup,
    claims: &[Claim],
    config: &RunConfig,
) -> Result<VerificationReport, EngineError> {
    let an = Analysis::new(g, config);
    let mut results = Vec::with_capacity(claims.len());
    for &claim in claims {
        let result = match verify_claim(&an, claim) {
            Ok(rep) => ClaimResult {
                claim: claim.id().to_string(),
                status: if rep.pass { Status::Pass } else { Status::Fail },
                reason: None,
                report: Some(rep),
            },
            Err(EngineError::PreconditionNotMet { reason, .. }) => ClaimResult {
                claim: claim.id().to_string(),
                status: Status::Skipped,
                reason: Some(format!("PreconditionNotMet: {reason}")),
                report: None,
            },
            Err(e) => return Err(e),
        };
        results.push(result);
    }
    Ok(VerificationReport {
        tool: "polyaut".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        group: g.name().to_string(),
        group_order: g.order(),
        results,
    })
}
