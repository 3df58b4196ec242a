//! Laws for the presheaf embedding: functoriality, preservation of
//! pullbacks, representability round trips, and the equivalence between
//! the pointwise descent check and the levelwise chain-lifting test.

use laxcomma_core::finord::is_effective_descent_ord;
use laxcomma_core::fixtures::{base_b2, base_c2, base_c3};
use laxcomma_core::laxcomma::{lax_object_iso, pullback_lax, LaxMorphism};
use laxcomma_core::oracle::{GenConfig, Generator};
use laxcomma_core::presheaf::{
    descent_check_presheaf, pi_morphism, pi_object, presheaf_iso, pullback_presheaf,
    representable_as_pi, NatTrans,
};
use laxcomma_core::{BasePoset, FinPreorder, MonotoneMap};

fn pool() -> Vec<BasePoset> {
    vec![base_c2(), base_c3(), base_b2()]
}

fn cfg(seed: u64) -> GenConfig {
    GenConfig {
        seed,
        max_elems: 3,
        base_pool: pool(),
        density: 0.4,
    }
}

/// A composable pair: `f` is built backwards into the source of `g`, with
/// its structure lowered to the pointwise meet so the triangle holds.
fn composable_pair(gen: &mut Generator, base: &BasePoset) -> Option<(LaxMorphism, LaxMorphism)> {
    let g = gen.lax_morphism(base).ok()?;
    let carrier = gen.preorder("v");
    let u = gen.monotone_map(&carrier, g.src().total()).ok()?;
    let free = gen.monotone_map(&carrier, base.order()).ok()?;
    let pulled = u.then(g.src().structure()).ok()?;
    let a: Vec<usize> = (0..carrier.len())
        .map(|y| base.meet_idx(free.apply_idx(y), pulled.apply_idx(y)))
        .collect();
    let a = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), a).ok()?;
    let src = laxcomma_core::LaxObject::new(base.clone(), carrier, a).ok()?;
    let f = LaxMorphism::new(src, g.src().clone(), u).ok()?;
    Some((f, g))
}

#[test]
fn the_embedding_is_functorial() {
    let mut gen = Generator::new(cfg(301));
    let mut done = 0;
    while done < 60 {
        let base = gen.base();
        let Some((f, g)) = composable_pair(&mut gen, &base) else {
            continue;
        };
        let composite = f.then(&g).unwrap();
        let via_composite = pi_morphism(&composite);
        let pf = pi_morphism(&f);
        let pg = pi_morphism(&g);
        // Levels of pi(src f) agree between the two routes, so components
        // can be compared index by index after composing.
        for x in 0..base.len() {
            let lhs = via_composite.component(x);
            let composed: Vec<usize> = pf
                .component(x)
                .iter()
                .map(|&i| pg.component(x)[i])
                .collect();
            assert_eq!(lhs, composed.as_slice(), "level {x} of {f:?} ; {g:?}");
        }
        // Identities map to identities.
        let id = pi_morphism(&LaxMorphism::identity(f.src()));
        for x in 0..base.len() {
            let n = id.src().level(x).len();
            assert_eq!(id.component(x), (0..n).collect::<Vec<_>>().as_slice());
        }
        done += 1;
    }
}

#[test]
fn the_embedding_preserves_pullbacks() {
    let mut gen = Generator::new(cfg(302));
    let mut done = 0;
    while done < 40 {
        let base = gen.base();
        let Ok((f, g)) = gen.cospan(&base) else {
            continue;
        };
        let (lax_pb, _, _) = pullback_lax(&f, &g).unwrap();
        let (presheaf_pb, _, _) = pullback_presheaf(&pi_morphism(&f), &pi_morphism(&g)).unwrap();
        assert!(
            presheaf_iso(&presheaf_pb, &pi_object(&lax_pb)).is_some(),
            "pullback not preserved for {f:?} and {g:?}"
        );
        done += 1;
    }
}

#[test]
fn representability_round_trips() {
    let mut gen = Generator::new(cfg(303));
    let mut done = 0;
    while done < 60 {
        let base = gen.base();
        let Ok(o) = gen.lax_object(&base) else {
            continue;
        };
        let g = pi_object(&o);
        let recovered = representable_as_pi(&g).expect("images of the embedding represent");
        assert!(lax_object_iso(&o, &recovered).is_some());
        assert!(presheaf_iso(&g, &pi_object(&recovered)).is_some());
        done += 1;
    }
}

/// The corestriction of the underlying map to the level at `x`, as a map
/// of plain preorders.
fn level_map(alpha: &NatTrans, x: usize) -> MonotoneMap {
    let to_preorder = |level: &laxcomma_core::presheaf::Level| {
        let names = level.elems().to_vec();
        let pairs: Vec<(String, String)> = (0..level.len())
            .flat_map(|i| (0..level.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| level.related_idx(i, j))
            .map(|(i, j)| (level.name(i).to_string(), level.name(j).to_string()))
            .collect();
        FinPreorder::new(&names, &pairs).expect("level names are distinct")
    };
    let dom = to_preorder(alpha.src().level(x));
    let cod = to_preorder(alpha.tgt().level(x));
    MonotoneMap::from_indices(dom, cod, alpha.component(x).to_vec())
        .expect("components are monotone")
}

#[test]
fn pointwise_descent_matches_the_levelwise_chain_test() {
    let mut gen = Generator::new(cfg(304));
    let mut done = 0;
    while done < 60 {
        let base = gen.base();
        let Ok(f) = gen.lax_morphism(&base) else {
            continue;
        };
        let alpha = pi_morphism(&f);
        let by_presheaf = descent_check_presheaf(&alpha);
        let by_levels = (0..base.len()).all(|x| is_effective_descent_ord(&level_map(&alpha, x)));
        assert_eq!(by_presheaf, by_levels, "pointwise mismatch on {f:?}");
        done += 1;
    }
}
