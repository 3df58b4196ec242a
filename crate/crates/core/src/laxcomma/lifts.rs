use crate::finord::map::MonotoneMap;
use crate::finord::poset::BasePoset;
use crate::finord::preorder::FinPreorder;
use crate::laxcomma::object::{LaxMorphism, LaxObject};
use crate::{Error, Result};

/// The initial lift of a family of maps `f_i : Y -> U(Z_i, b_i)`: the
/// largest structure on `Y` making every `f_i` a morphism, namely
/// `a(y) = /\_i b_i(f_i(y))`.  The empty family lifts to the constant top.
/// Returns the lifted object together with the family as morphisms out of
/// it.
pub fn initial_lift(
    base: &BasePoset,
    carrier: &FinPreorder,
    family: &[(MonotoneMap, LaxObject)],
) -> Result<(LaxObject, Vec<LaxMorphism>)> {
    for (f, tgt) in family {
        if tgt.base() != base {
            return Err(Error::BaseMismatch);
        }
        if f.dom() != carrier || f.cod() != tgt.total() {
            return Err(Error::EndpointMismatch {
                expected: format!("{:?} -> {:?}", carrier.elems(), tgt.total().elems()),
                found: format!("{:?} -> {:?}", f.dom().elems(), f.cod().elems()),
            });
        }
    }
    let structure: Vec<usize> = (0..carrier.len())
        .map(|y| base.meet_all(family.iter().map(|(f, tgt)| tgt.value_idx(f.apply_idx(y)))))
        .collect();
    let a = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), structure)
        .expect("meets of monotone maps are monotone");
    let lifted = LaxObject::new(base.clone(), carrier.clone(), a)?;
    let morphisms = family
        .iter()
        .map(|(f, tgt)| {
            LaxMorphism::new(lifted.clone(), tgt.clone(), f.clone())
                .expect("the lift makes every family member a morphism")
        })
        .collect();
    Ok((lifted, morphisms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{base_b2, base_c2, singleton};

    fn point(base: &BasePoset, at: &str) -> LaxObject {
        let pt = singleton();
        let s = MonotoneMap::new(pt.clone(), base.order().clone(), &[("pt", at)]).unwrap();
        LaxObject::new(base.clone(), pt, s).unwrap()
    }

    #[test]
    fn meets_of_constants_pick_the_meet() {
        let base = base_b2();
        let pt = singleton();
        let to_p = point(&base, "p");
        let to_q = point(&base, "q");
        let f = MonotoneMap::identity(&pt);
        let (lift, morphisms) = initial_lift(
            &base,
            &pt,
            &[(f.clone(), to_p), (f, to_q)],
        )
        .unwrap();
        assert_eq!(lift.value("pt"), "bot");
        assert_eq!(morphisms.len(), 2);
        assert!(morphisms.iter().all(|m| !m.is_strict()));
    }

    #[test]
    fn empty_family_lifts_to_top() {
        let base = base_b2();
        let pt = singleton();
        let (lift, morphisms) = initial_lift(&base, &pt, &[]).unwrap();
        assert_eq!(lift.value("pt"), "top");
        assert!(morphisms.is_empty());
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let pt = singleton();
        let tgt = point(&base_c2(), "0");
        let f = MonotoneMap::identity(&pt);
        let err = initial_lift(&base_b2(), &pt, &[(f, tgt)]).unwrap_err();
        assert_eq!(err, Error::BaseMismatch);
    }
}
