use num_bigint::BigUint;
use polyaut_core::engine::{
    automorphism_group, generate_p, inner_automorphisms, polynomial_automorphisms,
    polynomial_automorphisms_from_closure, polynomial_function_closure, verify_group, Claim,
    FunctionChain,
};
use polyaut_core::group::{
    catalog_group, catalog_names, center, derived_series, lower_central_series, quotient_group,
    subgroup_closure,
};
use polyaut_core::report::Status;
use polyaut_core::{FiniteGroup, RunConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn catalog() -> Vec<FiniteGroup> {
    catalog_names()
        .iter()
        .map(|n| catalog_group(n, 64).unwrap())
        .collect()
}

// Sizes of the group of polynomial functions G -> G. The non-abelian
// values were cross-checked by computing the order of the same permutation
// group with an independent Schreier-Sims implementation.
const CLOSURE_SIZES: &[(&str, u64)] = &[
    ("S3", 54),
    ("D8", 16),
    ("Q8", 16),
    ("D10", 250),
    ("D12", 54),
    ("D16", 128),
    ("A4", 3072),
    ("Heis27", 27),
    ("Frob20", 312_500),
    ("S4", 927_712_935_936),
    ("C2xC2", 2),
    ("C2xC4", 4),
];

// (name, |A(G)|, |I(G)|, |P(G)|); |A(G)| are the standard textbook orders.
const AUT_ORDERS: &[(&str, usize, usize, usize)] = &[
    ("S3", 6, 6, 6),
    ("S4", 24, 24, 24),
    ("A4", 24, 12, 12),
    ("D8", 8, 4, 4),
    ("D10", 20, 10, 20),
    ("D12", 12, 6, 6),
    ("D16", 32, 8, 16),
    ("Q8", 24, 4, 4),
    ("Heis27", 432, 9, 9),
    ("Frob20", 20, 20, 20),
    ("C2xC2", 6, 1, 1),
    ("C2xC4", 8, 1, 2),
];

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| gcd(*k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn lagrange_and_series_normality() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in catalog() {
        let n = g.order();
        for _ in 0..10 {
            let seed: Vec<usize> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(0..n)).collect();
            let h = subgroup_closure(&g, &seed);
            assert_eq!(n % h.order(), 0, "{}", g.name());
        }
        let ds = derived_series(&g);
        let lcs = lower_central_series(&g);
        for term in ds.series.terms.iter().chain(&lcs.series.terms) {
            assert_eq!(n % term.order(), 0);
            assert!(term.is_normal(), "{}", g.name());
        }
        if let (Some(dl), Some(class)) = (ds.derived_length, lcs.nilpotency_class) {
            // derived length is at most floor(log2 class) + 1
            let bound = (usize::BITS - class.leading_zeros()) as usize;
            assert!(dl <= bound, "{}", g.name());
        }
    }
}

#[test]
fn quotient_by_center() {
    for g in catalog() {
        let z = center(&g);
        let q = quotient_group(&g, &z).unwrap();
        assert_eq!(q.order(), g.order() / z.order(), "{}", g.name());
        q.validate().unwrap();
        let inner = inner_automorphisms(&g).unwrap();
        assert_eq!(inner.len(), q.order(), "{}", g.name());
    }
}

#[test]
fn pinned_closure_sizes() {
    for (name, size) in CLOSURE_SIZES {
        let g = catalog_group(name, 64).unwrap();
        let chain = FunctionChain::polynomial_functions(&g);
        assert_eq!(chain.order(), BigUint::from(*size), "{name}");
    }
    for n in 1..=12 {
        let g = catalog_group(&format!("C{n}"), 64).unwrap();
        assert_eq!(FunctionChain::polynomial_functions(&g).order(), BigUint::from(n as u64));
    }
}

#[test]
fn enumeration_agrees_with_the_chain_within_budget() {
    let budget = RunConfig::default().closure_budget;
    for g in catalog() {
        let chain = FunctionChain::polynomial_functions(&g);
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let via_chain = polynomial_automorphisms(&g, &aut, &chain).unwrap();
        match polynomial_function_closure(&g, budget) {
            Ok(closure) => {
                assert_eq!(BigUint::from(closure.len()), chain.order(), "{}", g.name());
                assert!(closure.iter().all(|f| chain.contains(f)));
                let via_closure = polynomial_automorphisms_from_closure(&g, &closure).unwrap();
                assert_eq!(via_closure.maps(), via_chain.maps(), "{}", g.name());
            }
            Err(_) => assert!(chain.order() > BigUint::from(budget)),
        }
    }
}

#[test]
fn automorphism_orders_and_inclusions() {
    for (name, a, i, p) in AUT_ORDERS {
        let g = catalog_group(name, 64).unwrap();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let inner = inner_automorphisms(&g).unwrap();
        let chain = FunctionChain::polynomial_functions(&g);
        let p0 = polynomial_automorphisms(&g, &aut, &chain).unwrap();
        let pg = generate_p(&g, &p0).unwrap();
        assert_eq!((aut.len(), inner.len(), pg.len()), (*a, *i, *p), "{name}");
        assert!(inner.is_subset_of(&p0) && p0.is_subset_of(&aut));
        // P0 is already a group
        assert_eq!(p0.maps(), pg.maps(), "{name}");
        // and closed under conjugation by A(G)
        for alpha in aut.maps() {
            let ai = alpha.inverse();
            for f in p0.maps() {
                assert!(p0.contains(&ai.compose(f).compose(alpha)), "{name}");
            }
        }
    }
}

#[test]
fn cyclic_groups_have_power_maps() {
    for n in 1..=12 {
        let g = catalog_group(&format!("C{n}"), 64).unwrap();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let chain = FunctionChain::polynomial_functions(&g);
        let p0 = polynomial_automorphisms(&g, &aut, &chain).unwrap();
        assert_eq!(p0.len(), euler_phi(n));
        assert_eq!(aut.len(), euler_phi(n));
        assert!(p0.maps().iter().all(|f| f.is_power_map(&g)));
    }
}

#[test]
fn every_applicable_claim_holds_on_the_catalog() {
    let cfg = RunConfig {
        record_timing: false,
        ..RunConfig::default()
    };
    for g in catalog() {
        let rep = verify_group(&g, &Claim::ALL, &cfg).unwrap();
        for r in &rep.results {
            assert_ne!(r.status, Status::Fail, "{} {}: {:?}", g.name(), r.claim, r.report);
        }
        let metabelian = derived_series(&g).is_metabelian;
        let thm12 = rep.results.iter().find(|r| r.claim == "thm-1.2").unwrap();
        assert_eq!(thm12.status == Status::Skipped, !metabelian, "{}", g.name());
    }
}

#[test]
fn class_drops_by_one() {
    let cfg = RunConfig {
        record_timing: false,
        ..RunConfig::default()
    };
    for (name, class) in [("D8", 2), ("Q8", 2), ("Heis27", 2), ("D16", 3)] {
        let g = catalog_group(name, 64).unwrap();
        let rep = verify_group(&g, &[Claim::Thm11], &cfg).unwrap();
        let r = rep.results[0].report.as_ref().unwrap();
        assert!(r.pass);
        assert_eq!(r.computed["p_class"], serde_json::json!(class - 1), "{name}");
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = RunConfig {
        record_timing: false,
        ..RunConfig::default()
    };
    for name in ["D10", "Q8", "A4", "S4"] {
        let g = catalog_group(name, 64).unwrap();
        let a = verify_group(&g, &Claim::ALL, &cfg).unwrap().to_json();
        let b = verify_group(&g, &Claim::ALL, &cfg).unwrap().to_json();
        assert_eq!(a, b);
    }
}
