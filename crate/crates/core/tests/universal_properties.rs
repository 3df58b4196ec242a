//! Seeded cross-validation of the closed-form constructions against the
//! brute-force universal-property verifiers.  Larger pinned-count runs
//! live in the acceptance suite; these keep every construction honest on
//! every `cargo test`.

use std::collections::BTreeMap;

use laxcomma_core::fixtures::{base_b2, base_c2, base_c3};
use laxcomma_core::laxcomma::{
    coequalizer_lax, coproduct_lax, copower, equalizer_lax, exponential_lax, hom, initial_lift,
    power, product_lax, pullback_lax,
};
use laxcomma_core::oracle::{
    probe_objects, verify_coequalizer, verify_coproduct, verify_copower, verify_equalizer,
    verify_exponential_bijection, verify_exponential_naturality, verify_initial_lift_with,
    verify_power, verify_product, verify_pullback, GenConfig, Generator,
};
use laxcomma_core::{BasePoset, LaxObject, MonotoneMap};

fn pool() -> Vec<BasePoset> {
    vec![base_c2(), base_c3(), base_b2()]
}

fn cfg(seed: u64, max_elems: usize) -> GenConfig {
    GenConfig {
        seed,
        max_elems,
        base_pool: pool(),
        density: 0.4,
    }
}

fn probes_for<'a>(
    cache: &'a mut BTreeMap<Vec<String>, Vec<LaxObject>>,
    base: &BasePoset,
    bound: usize,
) -> &'a [LaxObject] {
    cache
        .entry(base.elems().to_vec())
        .or_insert_with(|| probe_objects(base, bound))
}

#[test]
fn initial_lifts_are_initial() {
    let mut gen = Generator::new(cfg(101, 3));
    let mut cache = BTreeMap::new();
    let mut done = 0;
    while done < 60 {
        let base = gen.base();
        let carrier = gen.preorder("w");
        let mut family = Vec::new();
        let wanted = 1 + done % 3;
        for _ in 0..wanted {
            let Ok(tgt) = gen.lax_object(&base) else {
                continue;
            };
            let Ok(f) = gen.monotone_map(&carrier, tgt.total()) else {
                continue;
            };
            family.push((f, tgt));
        }
        if family.is_empty() {
            continue;
        }
        let (lift, legs) = initial_lift(&base, &carrier, &family).unwrap();
        assert_eq!(legs.len(), family.len());
        let probes = probes_for(&mut cache, &base, 2);
        assert_eq!(verify_initial_lift_with(&lift, &family, probes), None);
        done += 1;
    }
}

#[test]
fn products_and_coproducts_mediate_uniquely() {
    let mut gen = Generator::new(cfg(102, 2));
    let mut done = 0;
    while done < 25 {
        let base = gen.base();
        let k = 1 + done % 2;
        let mut factors = Vec::new();
        for _ in 0..k {
            if let Ok(o) = gen.lax_object(&base) {
                factors.push(o);
            }
        }
        if factors.len() != k {
            continue;
        }
        let refs: Vec<&LaxObject> = factors.iter().collect();
        let (prod, projs) = product_lax(&base, &refs).unwrap();
        let raw: Vec<MonotoneMap> = projs.iter().map(|m| m.map().clone()).collect();
        assert_eq!(verify_product(&prod, &raw, &refs, 2), None);

        let (sum, injs) = coproduct_lax(&base, &refs).unwrap();
        let raw: Vec<MonotoneMap> = injs.iter().map(|m| m.map().clone()).collect();
        assert_eq!(verify_coproduct(&sum, &raw, &refs, 2), None);
        done += 1;
    }
}

#[test]
fn equalizers_and_coequalizers_mediate_uniquely() {
    let mut gen = Generator::new(cfg(103, 2));
    let mut done = 0;
    while done < 25 {
        let base = gen.base();
        let Ok((f, g)) = gen.parallel_pair(&base) else {
            continue;
        };
        let (eq, incl) = equalizer_lax(&f, &g).unwrap();
        assert_eq!(verify_equalizer(&eq, incl.map(), &f, &g, 2), None);
        let (q, qm) = coequalizer_lax(&f, &g).unwrap();
        assert_eq!(verify_coequalizer(&q, qm.map(), &f, &g, 2), None);
        done += 1;
    }
}

#[test]
fn pullbacks_mediate_uniquely() {
    let mut gen = Generator::new(cfg(104, 2));
    let mut done = 0;
    while done < 20 {
        let base = gen.base();
        let Ok((f, g)) = gen.cospan(&base) else {
            continue;
        };
        let (pb, p1, p2) = pullback_lax(&f, &g).unwrap();
        assert_eq!(verify_pullback(&pb, p1.map(), p2.map(), &f, &g, 2), None);
        done += 1;
    }
}

#[test]
fn exponentials_transpose_bijectively_and_naturally() {
    let mut gen = Generator::new(GenConfig {
        seed: 105,
        max_elems: 2,
        base_pool: vec![base_c2(), base_c3()],
        density: 0.4,
    });
    let mut done = 0;
    while done < 12 {
        let base = gen.base();
        let Ok(a) = gen.lax_object(&base) else {
            continue;
        };
        let Ok(b) = gen.lax_object(&base) else {
            continue;
        };
        let exp = exponential_lax(&a, &b).unwrap();
        let Ok(w1) = gen.lax_object(&base) else {
            continue;
        };
        let Ok(w2) = gen.lax_object(&base) else {
            continue;
        };
        assert_eq!(verify_exponential_bijection(&exp, &w1, &a, &b), None);
        assert_eq!(verify_exponential_bijection(&exp, &w2, &a, &b), None);
        for u in hom(&w2, &w1) {
            assert_eq!(verify_exponential_naturality(&u, &a, &b), None);
        }
        done += 1;
    }
}

#[test]
fn copowers_and_powers_transpose_bijectively() {
    let mut gen = Generator::new(cfg(106, 2));
    let mut done = 0;
    while done < 12 {
        let base = gen.base();
        let w = gen.preorder("w");
        let Ok(a) = gen.lax_object(&base) else {
            continue;
        };
        let (cp, pw, py) = copower(&w, &a).unwrap();
        assert_eq!(verify_copower(&w, &a, &cp, &pw, &py, 1), None);
        let pow = power(&w, &a).unwrap();
        assert_eq!(verify_power(&w, &a, &pow, 1), None);
        done += 1;
    }
}
