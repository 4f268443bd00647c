//! Structural tests for the registry and the domain sampler.

use std::collections::HashSet;

use identities::{lookup, registry, sample_domain, Kind, Tier};

#[test]
fn registry_has_every_catalogued_identity() {
    let reg = registry();
    assert_eq!(reg.len(), 48);
    let ids: HashSet<&str> = reg.iter().map(|i| i.id).collect();
    assert_eq!(ids.len(), reg.len(), "ids must be unique");
    for required in [
        "DEG-SS",
        "DEG-CC",
        "DEG-SS1",
        "THM-SS",
        "THM-CC",
        "THM-SS1",
        "FE-3",
        "FE-9A",
        "FE-9B",
        "GP-SS",
        "GP-SS-INF",
        "CP-SS",
        "CP-SS-INF",
        "QG-SS",
        "QG-SS-INF",
        "CJ-SS",
        "CJ-SS-INF",
        "ELL",
        "GP-CC",
        "GP-CC-INF",
        "TH-CC",
        "TH-CC-INF",
        "QG-CC1",
        "QG-CC1-BOUND",
        "CC-COSCOS",
        "PHI-PROD-1",
        "PHI-PROD-2",
        "GK-CC",
        "AP-CC",
        "CAT-CC-1",
        "CAT-CC-2",
        "CAT-CC-3",
        "CAT-SS",
        "GK-SS",
        "AP-SS",
        "CAT-SS-2",
        "GP-SS1-A",
        "GP-SS1-B",
        "CH-SS1-A",
        "CH-SS1-B",
        "POLY",
        "POLY-INF",
        "POLY-BINOM",
        "CAT-SS1-A",
        "CAT-SS1-B",
        "GK-SS1",
        "AP-SS1",
    ] {
        assert!(ids.contains(required), "missing {required}");
    }
}

#[test]
fn registry_metadata_is_complete() {
    for ident in registry() {
        assert!(!ident.anchor.is_empty(), "{} anchor empty", ident.id);
        assert!(!ident.title.is_empty(), "{} title empty", ident.id);
        assert!(!ident.route_notes.is_empty(), "{} notes empty", ident.id);
        if ident.kind.is_limit() || ident.kind == Kind::Bound {
            assert!(
                ident.factor.is_some(),
                "{} needs a per-factor evaluator",
                ident.id
            );
        }
    }
}

#[test]
fn tier_population_matches_the_catalogue() {
    let count = |tier: Tier| registry().iter().filter(|i| i.tier == tier).count();
    assert_eq!(count(Tier::Core), 6);
    assert_eq!(count(Tier::Functional), 3);
    assert_eq!(count(Tier::Product), 16);
    assert_eq!(count(Tier::Constant), 13);
    assert_eq!(count(Tier::Limit), 10);
}

#[test]
fn lookup_finds_known_ids_only() {
    assert_eq!(lookup("THM-SS").unwrap().tier, Tier::Core);
    assert_eq!(lookup("GP-SS").unwrap().tier, Tier::Product);
    assert_eq!(lookup("GK-SS").unwrap().tier, Tier::Constant);
    assert_eq!(lookup("FE-3").unwrap().tier, Tier::Functional);
    assert_eq!(lookup("ELL").unwrap().tier, Tier::Limit);
    assert!(lookup("NOPE").is_none());
    assert!(lookup("thm-ss").is_none(), "lookup is case sensitive");
}

#[test]
fn sampling_is_deterministic() {
    for id in ["THM-SS", "GP-SS", "CC-COSCOS", "FE-9A", "CAT-SS"] {
        let a = sample_domain(id, 6, 42).unwrap();
        let b = sample_domain(id, 6, 42).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.describe(), y.describe(), "{id} stream not reproducible");
        }
        let c = sample_domain(id, 6, 43).unwrap();
        let same = a
            .iter()
            .zip(&c)
            .all(|(x, y)| x.describe() == y.describe());
        // Truncation-depth schedules are deliberately seed independent, so
        // only free-parameter identities must react to the seed.
        let free_params = lookup(id).unwrap().tier != Tier::Constant
            && !lookup(id).unwrap().params.is_empty();
        if free_params {
            assert!(!same, "{id} must react to the seed");
        }
    }
}

#[test]
fn different_ids_draw_from_different_streams() {
    let a = sample_domain("DEG-SS", 4, 7).unwrap();
    let b = sample_domain("DEG-CC", 4, 7).unwrap();
    assert_ne!(a[0].describe(), b[0].describe());
}

#[test]
fn theorem_samples_respect_the_declared_domain() {
    let samples = sample_domain("THM-SS", 12, 42).unwrap();
    assert_eq!(samples.len(), 12);
    for (i, s) in samples.iter().enumerate() {
        let m = s.value("m").unwrap();
        assert!(m.im().to_f64() > 0.0, "sample {i}: Im(m) must be positive");
        assert!(m.re().to_f64().abs() < 1.0);
        let a = s.value("a").unwrap().re().to_f64();
        assert!((0.2..3.0).contains(&a));
        assert!((a - 1.0).abs() >= 0.02, "a stays off the log zero");
        let n = s.integer("n").unwrap();
        assert!((1..=4).contains(&n));
        let k = s.value("k").unwrap();
        assert!(k.abs().to_f64() <= 3.0 + 1e-12);
    }
    // canonical orders lead the batch
    let forced: Vec<i64> = samples[..5]
        .iter()
        .map(|s| s.integer("k").unwrap())
        .collect();
    assert_eq!(forced, vec![0, 1, 2, -1, -2]);
}

#[test]
fn gamma_product_samples_avoid_poles() {
    for s in sample_domain("GP-SS", 40, 7).unwrap() {
        let a = s.value("a").unwrap().re().to_f64();
        assert!((0.2..3.0).contains(&a));
        for pole in [1.0, 2.0, 3.0] {
            assert!((a - pole).abs() >= 0.05, "a={a} too close to {pole}");
        }
    }
}

#[test]
fn parameterless_identities_yield_a_single_sample() {
    for id in ["GK-SS", "AP-SS"] {
        let samples = sample_domain(id, 25, 9).unwrap();
        assert_eq!(samples.len(), 1);
        assert!(samples[0].values.is_empty());
    }
}

#[test]
fn unknown_id_is_rejected() {
    assert!(sample_domain("NOPE", 3, 1).is_err());
}

#[test]
fn every_identity_samples_cleanly() {
    for ident in registry() {
        let samples = sample_domain(ident.id, 8, 1234).unwrap();
        let expected = if ident.params.is_empty() { 1 } else { 8 };
        assert_eq!(samples.len(), expected, "{}", ident.id);
        for s in &samples {
            for (name, _) in ident.params {
                assert!(
                    s.values.contains_key(*name),
                    "{} sample missing {name}",
                    ident.id
                );
            }
        }
    }
}
