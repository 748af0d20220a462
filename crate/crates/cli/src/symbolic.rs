use std::io::Write;

use anyhow::{Context, Result};
use clap::Args;
use polyaut_core::fm::{
    build_ia_endoform, derived_to_module, endoform_to_polyform, parse_word, rank3_counterexample,
    render_rank2, DerivedDecomposition, FMElement, FreeMetabelian, IASpec, LaurentPoly,
};
use polyaut_core::GroupOps;

#[derive(Debug, Args)]
pub struct Ia2polyArgs {
    /// Word for v in f(a) = a v; must lie in the derived subgroup.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub v: String,
    /// Word for w in f(b) = b w; must lie in the derived subgroup.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub w: String,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Emit the JSON report instead of the narrative.
    #[arg(long)]
    pub json: bool,
}

fn show(e: &FMElement) -> String {
    render_rank2(e).unwrap_or_else(|_| e.to_wire())
}

fn monomial(m: &[i64]) -> String {
    LaurentPoly::monomial(m.to_vec(), 1).to_string()
}

fn describe(
    out: &mut dyn Write,
    name: &str,
    word: &str,
    e: &FMElement,
    d: &DerivedDecomposition,
    coeff: &str,
    conj: &str,
) -> Result<()> {
    writeln!(out, "{name} = {}", if word.trim().is_empty() { "1" } else { word })?;
    writeln!(out, "  element      {}", e.to_wire())?;
    writeln!(out, "  module       {}", derived_to_module(e)?)?;
    writeln!(out, "  {}        {}", if name == "v" { "alpha" } else { "beta " }, d.alpha)?;
    for (i, (m, c)) in d.terms.iter().enumerate() {
        writeln!(
            out,
            "  {coeff}_{}     {c}   {conj}_{} = {} (monomial {})",
            i + 1,
            i + 1,
            show(&polyaut_core::fm::canonical_preimage(m)?),
            monomial(m)
        )?;
    }
    Ok(())
}

pub fn ia2poly(args: &Ia2polyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = FreeMetabelian::new(2)?;
    let v = parse_word(&args.v).context("parsing v")?.to_fm(2).context("evaluating v")?;
    let w = parse_word(&args.w).context("parsing w")?.to_fm(2).context("evaluating w")?;
    let spec = IASpec::new(v.clone(), w.clone())?;
    let built = build_ia_endoform(&spec)?;
    describe(out, "v", &args.v, &v, &built.v_decomposition, "lambda", "v")?;
    describe(out, "w", &args.w, &w, &built.w_decomposition, "mu    ", "w")?;

    writeln!(out, "phi(x) = x * prod [x,u]^eta with factors (u, eta):")?;
    if built.form.is_empty() {
        writeln!(out, "  (none: phi is the identity)")?;
    }
    for (u, eta) in &built.form.factors {
        writeln!(out, "  ({}, {eta})", show(u))?;
    }
    let poly = endoform_to_polyform(&built.form, &g.identity());
    writeln!(out, "polynomial form x -> prod u^-1 x^e u with factors (u, e):")?;
    for (u, e) in &poly.factors {
        writeln!(out, "  ({}, {e})", show(u))?;
    }
    writeln!(out, "  exponent sum {}", poly.exponent_sum())?;

    let (fa, fb) = spec.images();
    let (a, b) = (g.generator(0), g.generator(1));
    let checks = [
        ("phi(a) = a v", built.form.eval(&g, &a) == fa),
        ("phi(b) = b w", built.form.eval(&g, &b) == fb),
        ("polynomial form agrees on a", poly.eval(&g, &a) == fa),
        ("polynomial form agrees on b", poly.eval(&g, &b) == fb),
        ("exponent sum is 1", poly.exponent_sum() == 1),
    ];
    writeln!(out, "checks:")?;
    for (name, ok) in &checks {
        writeln!(out, "  {name:<28} {}", if *ok { "ok" } else { "FAILED" })?;
    }
    Ok(if checks.iter().all(|(_, ok)| *ok) { 0 } else { 1 })
}

pub fn demo_rank3(args: &DemoArgs, out: &mut dyn Write) -> Result<i32> {
    let r = rank3_counterexample();
    if args.json {
        writeln!(out, "{}", r.to_report().to_json())?;
        return Ok(if r.pass { 0 } else { 1 });
    }
    writeln!(out, "free metabelian group of rank 3 on a, b, c")?;
    writeln!(out, "f: a -> a, b -> b, c -> c[a,b]")?;
    for (x, off) in ["a", "b", "c"].iter().zip(&r.offsets) {
        writeln!(out, "  {x}^-1 f({x}) = {off}")?;
    }
    writeln!(out, "ia_property={}", r.ia_property)?;
    writeln!(out, "is_automorphism={} (inverse c -> c[a,b]^-1)", r.is_automorphism)?;
    writeln!(
        out,
        "A polynomial f would send c to c * prod [c,u]^eta, which puts c^-1 f(c) = [a,b] \
         in the normal closure of c."
    )?;
    writeln!(out, "Killing c (c -> 1) is a homomorphism onto rank 2 whose kernel is that closure.")?;
    writeln!(out, "  [a,b]             = {}", r.commutator)?;
    let sym = |is_id: bool| if is_id { "=" } else { "≠" };
    writeln!(
        out,
        "  retraction([a,b]) = {}  (retraction([a,b]) {} 1)",
        r.retraction_of_commutator,
        sym(r.commutator_in_ncl_c)
    )?;
    writeln!(
        out,
        "  retraction(c)     = {}  (retraction(c) {} 1)",
        r.retraction_of_c,
        sym(r.retraction_of_c_is_identity)
    )?;
    writeln!(out, "commutator_in_ncl_c={}", r.commutator_in_ncl_c)?;
    writeln!(
        out,
        "result: {}",
        if r.pass { "pass (f is an IA-automorphism with no polynomial form)" } else { "FAIL" }
    )?;
    Ok(if r.pass { 0 } else { 1 })
}
