//! Copowers and powers by a plain preorder: the tensor `W (x) (Y, a)` on
//! `W x Y` keeps the structure of `Y`, and the cotensor `W -* (Y, a)` on
//! monotone maps `W -> Y` takes the meet of the structure over the image.

use crate::finord::constructions;
use crate::finord::map::MonotoneMap;
use crate::finord::preorder::FinPreorder;
use crate::laxcomma::object::LaxObject;
use crate::Result;

/// The copower, with the two projections of its product carrier.
pub fn copower(
    w: &FinPreorder,
    a: &LaxObject,
) -> Result<(LaxObject, MonotoneMap, MonotoneMap)> {
    let (carrier, projs) = constructions::product(&[w, a.total()])?;
    let (pw, py) = match projs.len() {
        2 => (projs[0].clone(), projs[1].clone()),
        // A single factor happens only when `w` is absorbed; keep identity
        // conventions out by always passing two factors above.
        _ => unreachable!("binary product returns two projections"),
    };
    let structure = py.then(a.structure())?;
    let object = LaxObject::new(a.base().clone(), carrier, structure)?;
    Ok((object, pw, py))
}

/// The power object with its carrier-aligned maps `W -> Y`.
pub struct Power {
    pub object: LaxObject,
    pub maps: Vec<MonotoneMap>,
}

pub fn power(w: &FinPreorder, a: &LaxObject) -> Result<Power> {
    let base = a.base();
    let exp = constructions::exponential(w, a.total())?;
    let structure: Vec<usize> = exp
        .maps
        .iter()
        .map(|m| base.meet_all(m.mapping().iter().map(|&y| a.value_idx(y))))
        .collect();
    let s = MonotoneMap::from_indices(exp.carrier.clone(), base.order().clone(), structure)
        .expect("pointwise meets over a fixed index set are monotone");
    let object = LaxObject::new(base.clone(), exp.carrier, s)?;
    Ok(Power {
        object,
        maps: exp.maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{base_c2, singleton};
    use crate::laxcomma::object::lax_object_iso;

    #[test]
    fn copower_by_point_is_isomorphic_to_the_object() {
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let (cp, _, _) = copower(&singleton(), &x).unwrap();
        assert!(lax_object_iso(&cp, &x).is_some());
    }

    #[test]
    fn power_by_point_is_isomorphic_to_the_object() {
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let p = power(&singleton(), &x).unwrap();
        assert!(lax_object_iso(&p.object, &x).is_some());
    }

    #[test]
    fn power_of_identity_by_chain_meets_images() {
        // Maps 2 -> 2 are [0|0] <= [0|1] <= [1|1]; the structure takes the
        // meet of image values: 0, 0, 1.
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let p = power(&crate::fixtures::c2(), &x).unwrap();
        assert_eq!(p.object.value("[0|0]"), "0");
        assert_eq!(p.object.value("[0|1]"), "0");
        assert_eq!(p.object.value("[1|1]"), "1");
    }

    #[test]
    fn copower_structure_ignores_the_weight() {
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let (cp, _, py) = copower(&crate::fixtures::c2(), &x).unwrap();
        for e in cp.total().elems() {
            assert_eq!(cp.value(e), x.value(py.apply(e)));
        }
    }
}
