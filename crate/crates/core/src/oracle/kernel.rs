//! Definitional oracles for regular and stable epimorphisms.  A regular
//! epi is recognized by literally forming the kernel pair, coequalizing
//! it, and testing that the comparison map onto the codomain is an
//! isomorphism.  None of the closed-form characterizations feed in.

use crate::finord::constructions;
use crate::finord::map::MonotoneMap;
use crate::laxcomma::colimits::coequalizer_lax;
use crate::laxcomma::limits::pullback_lax;
use crate::laxcomma::object::{hom, LaxMorphism};
use crate::oracle::enumerate::lax_objects_over;

/// Kernel pair, coequalizer, comparison: `f` is a regular epi of
/// preorders exactly when the comparison map is an order isomorphism.
pub fn regular_epi_oracle_ord(f: &MonotoneMap) -> bool {
    let (_, p1, p2) = constructions::pullback(f, f).expect("kernel pair is a cospan");
    let (q, qm) = constructions::coequalizer(&p1, &p2).expect("projections are parallel");
    let mut cmp = vec![usize::MAX; q.len()];
    for y in 0..f.dom().len() {
        // Well-defined: classes are generated by pairs with equal image.
        cmp[qm.apply_idx(y)] = f.apply_idx(y);
    }
    let Ok(c) = MonotoneMap::from_indices(q, f.cod().clone(), cmp) else {
        return false;
    };
    c.is_order_iso()
}

/// Same recipe one level up: the comparison out of the lax coequalizer of
/// the kernel pair must be an isomorphism (strict and order-reflecting).
pub fn regular_epi_oracle_lax(f: &LaxMorphism) -> bool {
    let Ok((_, p1, p2)) = pullback_lax(f, f) else {
        return false;
    };
    let Ok((q, qm)) = coequalizer_lax(&p1, &p2) else {
        return false;
    };
    let mut cmp = vec![usize::MAX; q.total().len()];
    for y in 0..f.src().total().len() {
        cmp[qm.map().apply_idx(y)] = f.map().apply_idx(y);
    }
    let Ok(cm) = MonotoneMap::from_indices(q.total().clone(), f.tgt().total().clone(), cmp)
    else {
        return false;
    };
    let Ok(c) = LaxMorphism::new(q, f.tgt().clone(), cm) else {
        return false;
    };
    c.is_iso()
}

/// Searches for a probe morphism along which pulling back destroys the
/// regular-epi property.  Every object of size at most `bound` over the
/// same base and every morphism from it into the codomain is tried.
pub fn stable_oracle_failure(f: &LaxMorphism, bound: usize) -> Option<LaxMorphism> {
    for w in lax_objects_over(f.base(), bound) {
        for g in hom(&w, f.tgt()) {
            let (_, _, p2) = pullback_lax(f, &g).expect("probe shares the codomain");
            if !regular_epi_oracle_lax(&p2) {
                return Some(g);
            }
        }
    }
    None
}

pub fn stable_oracle(f: &LaxMorphism, bound: usize) -> bool {
    stable_oracle_failure(f, bound).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{regular_epi_lax_failure, stable_regular_epi_lax_failure};
    use crate::finord::epis::is_regular_epi_ord;
    use crate::fixtures::{base_c2, fzz, fzz_lax, gap_morphism, singleton};
    use crate::laxcomma::object::LaxObject;

    fn squash_c2() -> LaxMorphism {
        // The singleton over bottom mapping onto the singleton over top.
        let base = base_c2();
        let pt = singleton();
        let low = LaxObject::new(
            base.clone(),
            pt.clone(),
            MonotoneMap::new(pt.clone(), base.order().clone(), &[("pt", "0")]).unwrap(),
        )
        .unwrap();
        let high = LaxObject::new(
            base.clone(),
            pt.clone(),
            MonotoneMap::new(pt.clone(), base.order().clone(), &[("pt", "1")]).unwrap(),
        )
        .unwrap();
        LaxMorphism::new(low, high, MonotoneMap::identity(&pt)).unwrap()
    }

    #[test]
    fn identities_are_regular_epis_in_both_senses() {
        let x = LaxObject::base_over_itself(&base_c2());
        let id = LaxMorphism::identity(&x);
        assert!(regular_epi_oracle_ord(id.map()));
        assert!(regular_epi_oracle_lax(&id));
    }

    #[test]
    fn raising_the_structure_is_epi_downstairs_but_not_upstairs() {
        let f = squash_c2();
        assert!(regular_epi_oracle_ord(f.map()));
        assert!(!regular_epi_oracle_lax(&f));
    }

    #[test]
    fn oracle_agrees_with_the_characterizations_on_the_fixtures() {
        assert!(regular_epi_oracle_ord(&fzz()));
        assert!(is_regular_epi_ord(&fzz()));
        let f = fzz_lax();
        assert!(regular_epi_oracle_lax(&f));
        assert!(regular_epi_lax_failure(&f).is_none());
        let g = gap_morphism();
        assert!(regular_epi_oracle_lax(&g));
        assert!(regular_epi_lax_failure(&g).is_none());
    }

    #[test]
    fn stability_fails_for_the_zigzag_cover_and_holds_for_the_gap() {
        let f = fzz_lax();
        assert!(stable_regular_epi_lax_failure(&f).is_some());
        let witness = stable_oracle_failure(&f, 2).expect("a destabilizing probe exists");
        let (_, _, p2) = pullback_lax(&f, &witness).unwrap();
        assert!(!regular_epi_oracle_lax(&p2));
        let g = gap_morphism();
        assert!(stable_regular_epi_lax_failure(&g).is_none());
        assert!(stable_oracle(&g, 2));
    }

    #[test]
    fn oracle_matches_the_characterization_on_small_morphisms() {
        let base = base_c2();
        let objects = lax_objects_over(&base, 2);
        let mut seen = 0usize;
        for src in &objects {
            for tgt in &objects {
                for f in hom(src, tgt) {
                    let by_oracle = regular_epi_oracle_lax(&f);
                    let by_rule = regular_epi_lax_failure(&f).is_none();
                    assert_eq!(by_oracle, by_rule, "disagree on {f:?}");
                    seen += 1;
                }
            }
        }
        assert!(seen > 100, "only {seen} morphisms covered");
    }
}
